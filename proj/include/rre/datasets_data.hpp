#pragma once

// Embedded benchmark listings as sign-normalized augmented rows
// [y, y*x1, y*x2] with y = +1 for category one and -1 for category two.
// Values are exact 4-decimal literals from the source listings.

namespace rre::detail {

inline constexpr double kIrisSetosaVersicolorRows[100][3] = {
    {1.0000, 5.1000, 3.5000},
    {1.0000, 4.9000, 3.0000},
    {1.0000, 4.7000, 3.2000},
    {1.0000, 4.6000, 3.1000},
    {1.0000, 5.0000, 3.6000},
    {1.0000, 5.4000, 3.9000},
    {1.0000, 4.6000, 3.4000},
    {1.0000, 5.0000, 3.4000},
    {1.0000, 4.4000, 2.9000},
    {1.0000, 4.9000, 3.1000},
    {1.0000, 5.4000, 3.7000},
    {1.0000, 4.8000, 3.4000},
    {1.0000, 4.8000, 3.0000},
    {1.0000, 4.3000, 3.0000},
    {1.0000, 5.8000, 4.0000},
    {1.0000, 5.7000, 4.4000},
    {1.0000, 5.4000, 3.9000},
    {1.0000, 5.1000, 3.5000},
    {1.0000, 5.7000, 3.8000},
    {1.0000, 5.1000, 3.8000},
    {1.0000, 5.4000, 3.4000},
    {1.0000, 5.1000, 3.7000},
    {1.0000, 4.6000, 3.6000},
    {1.0000, 5.1000, 3.3000},
    {1.0000, 4.8000, 3.4000},
    {1.0000, 5.0000, 3.0000},
    {1.0000, 5.0000, 3.4000},
    {1.0000, 5.2000, 3.5000},
    {1.0000, 5.2000, 3.4000},
    {1.0000, 4.7000, 3.2000},
    {1.0000, 4.8000, 3.1000},
    {1.0000, 5.4000, 3.4000},
    {1.0000, 5.2000, 4.1000},
    {1.0000, 5.5000, 4.2000},
    {1.0000, 4.9000, 3.1000},
    {1.0000, 5.0000, 3.2000},
    {1.0000, 5.5000, 3.5000},
    {1.0000, 4.9000, 3.1000},
    {1.0000, 4.4000, 3.0000},
    {1.0000, 5.1000, 3.4000},
    {1.0000, 5.0000, 3.5000},
    {1.0000, 4.5000, 2.3000},
    {1.0000, 4.4000, 3.2000},
    {1.0000, 5.0000, 3.5000},
    {1.0000, 5.1000, 3.8000},
    {1.0000, 4.8000, 3.0000},
    {1.0000, 5.1000, 3.8000},
    {1.0000, 4.6000, 3.2000},
    {1.0000, 5.3000, 3.7000},
    {1.0000, 5.0000, 3.3000},
    {-1.0000, -7.0000, -3.2000},
    {-1.0000, -6.4000, -3.2000},
    {-1.0000, -6.9000, -3.1000},
    {-1.0000, -5.5000, -2.3000},
    {-1.0000, -6.5000, -2.8000},
    {-1.0000, -5.7000, -2.8000},
    {-1.0000, -6.3000, -3.3000},
    {-1.0000, -4.9000, -2.4000},
    {-1.0000, -6.6000, -2.9000},
    {-1.0000, -5.2000, -2.7000},
    {-1.0000, -5.0000, -2.0000},
    {-1.0000, -5.9000, -3.0000},
    {-1.0000, -6.0000, -2.2000},
    {-1.0000, -6.1000, -2.9000},
    {-1.0000, -5.6000, -2.9000},
    {-1.0000, -6.7000, -3.1000},
    {-1.0000, -5.6000, -3.0000},
    {-1.0000, -5.8000, -2.7000},
    {-1.0000, -6.2000, -2.2000},
    {-1.0000, -5.6000, -2.5000},
    {-1.0000, -5.9000, -3.2000},
    {-1.0000, -6.1000, -2.8000},
    {-1.0000, -6.3000, -2.5000},
    {-1.0000, -6.1000, -2.8000},
    {-1.0000, -6.4000, -2.9000},
    {-1.0000, -6.6000, -3.0000},
    {-1.0000, -6.8000, -2.8000},
    {-1.0000, -6.7000, -3.0000},
    {-1.0000, -6.0000, -2.9000},
    {-1.0000, -5.7000, -2.6000},
    {-1.0000, -5.5000, -2.4000},
    {-1.0000, -5.5000, -2.4000},
    {-1.0000, -5.8000, -2.7000},
    {-1.0000, -6.0000, -2.7000},
    {-1.0000, -5.4000, -3.0000},
    {-1.0000, -6.0000, -3.4000},
    {-1.0000, -6.7000, -3.1000},
    {-1.0000, -6.3000, -2.3000},
    {-1.0000, -5.6000, -3.0000},
    {-1.0000, -5.5000, -2.5000},
    {-1.0000, -5.5000, -2.6000},
    {-1.0000, -6.1000, -3.0000},
    {-1.0000, -5.8000, -2.6000},
    {-1.0000, -5.0000, -2.3000},
    {-1.0000, -5.6000, -2.7000},
    {-1.0000, -5.7000, -3.0000},
    {-1.0000, -5.7000, -2.9000},
    {-1.0000, -6.2000, -2.9000},
    {-1.0000, -5.1000, -2.5000},
    {-1.0000, -5.7000, -2.8000},
};

inline constexpr double kIrisVersicolorVirginicaV2Rows[100][3] = {
    {1.0000, 7.0000, 3.2000},
    {1.0000, 6.0000, 3.1000},
    {1.0000, 7.0000, 3.1000},
    {1.0000, 5.5000, 2.3000},
    {1.0000, 6.5000, 2.8000},
    {1.0000, 5.7000, 2.8000},
    {1.0000, 6.1000, 3.3000},
    {1.0000, 4.9000, 2.4000},
    {1.0000, 6.6000, 2.9000},
    {1.0000, 5.2000, 2.7000},
    {1.0000, 5.0000, 2.0000},
    {1.0000, 5.4000, 3.2000},
    {1.0000, 6.0000, 2.2000},
    {1.0000, 6.1000, 2.9000},
    {1.0000, 5.6000, 2.9000},
    {1.0000, 6.6000, 3.1000},
    {1.0000, 5.6000, 3.0000},
    {1.0000, 5.4000, 2.7000},
    {1.0000, 6.2000, 2.2000},
    {1.0000, 5.6000, 2.5000},
    {1.0000, 5.9000, 3.2000},
    {1.0000, 6.1000, 2.8000},
    {1.0000, 6.1000, 2.3000},
    {1.0000, 6.1000, 2.8000},
    {1.0000, 6.4000, 2.9000},
    {1.0000, 6.6000, 3.0000},
    {1.0000, 6.8000, 2.8000},
    {1.0000, 6.6000, 2.8000},
    {1.0000, 6.0000, 2.9000},
    {1.0000, 5.7000, 2.6000},
    {1.0000, 5.5000, 2.4000},
    {1.0000, 5.5000, 2.4000},
    {1.0000, 5.4000, 2.7000},
    {1.0000, 6.0000, 2.7000},
    {1.0000, 5.4000, 3.0000},
    {1.0000, 6.0000, 3.4000},
    {1.0000, 6.7000, 2.9000},
    {1.0000, 6.3000, 2.3000},
    {1.0000, 5.6000, 3.0000},
    {1.0000, 5.5000, 2.5000},
    {1.0000, 5.5000, 2.6000},
    {1.0000, 6.1000, 3.2000},
    {1.0000, 5.8000, 2.6000},
    {1.0000, 5.0000, 2.3000},
    {1.0000, 5.6000, 2.7000},
    {1.0000, 5.7000, 3.0000},
    {1.0000, 5.7000, 2.9000},
    {1.0000, 6.2000, 2.9000},
    {1.0000, 5.1000, 2.5000},
    {1.0000, 5.7000, 2.8000},
    {-1.0000, -6.3000, -3.3000},
    {-1.0000, -5.9000, -2.8000},
    {-1.0000, -7.1000, -3.0000},
    {-1.0000, -6.3000, -2.9000},
    {-1.0000, -6.5000, -3.0000},
    {-1.0000, -7.6000, -3.0000},
    {-1.0000, -4.9000, -2.5000},
    {-1.0000, -7.3000, -2.9000},
    {-1.0000, -6.7000, -2.5000},
    {-1.0000, -7.2000, -3.6000},
    {-1.0000, -6.5000, -3.2000},
    {-1.0000, -6.4000, -2.7000},
    {-1.0000, -6.8000, -3.0000},
    {-1.0000, -5.7000, -2.5000},
    {-1.0000, -5.8000, -2.8000},
    {-1.0000, -6.4000, -3.2000},
    {-1.0000, -6.5000, -3.0000},
    {-1.0000, -7.7000, -3.8000},
    {-1.0000, -7.7000, -2.6000},
    {-1.0000, -6.0000, -2.6000},
    {-1.0000, -6.9000, -3.2000},
    {-1.0000, -5.6000, -2.8000},
    {-1.0000, -7.7000, -2.8000},
    {-1.0000, -6.3000, -2.7000},
    {-1.0000, -6.7000, -3.3000},
    {-1.0000, -7.2000, -3.2000},
    {-1.0000, -6.2000, -2.8000},
    {-1.0000, -6.1000, -3.0000},
    {-1.0000, -6.4000, -2.8000},
    {-1.0000, -7.2000, -3.0000},
    {-1.0000, -7.4000, -2.8000},
    {-1.0000, -7.9000, -3.8000},
    {-1.0000, -6.4000, -2.8000},
    {-1.0000, -6.3000, -2.8000},
    {-1.0000, -6.1000, -2.6000},
    {-1.0000, -7.7000, -3.0000},
    {-1.0000, -6.3000, -3.4000},
    {-1.0000, -6.4000, -3.1000},
    {-1.0000, -6.0000, -3.0000},
    {-1.0000, -6.9000, -3.1000},
    {-1.0000, -6.7000, -3.1000},
    {-1.0000, -6.9000, -3.1000},
    {-1.0000, -5.9000, -2.8000},
    {-1.0000, -6.8000, -3.2000},
    {-1.0000, -6.7000, -3.3000},
    {-1.0000, -6.7000, -3.0000},
    {-1.0000, -6.3000, -2.5000},
    {-1.0000, -6.5000, -3.0000},
    {-1.0000, -6.2000, -3.4000},
    {-1.0000, -5.9000, -3.0000},
};

inline constexpr double kSupport1Rows[100][3] = {
    {1.0000, 5.1000, 3.5000},
    {1.0000, 4.9000, 3.0000},
    {1.0000, 4.7000, 3.2000},
    {1.0000, 4.6000, 3.1000},
    {1.0000, 5.0000, 3.6000},
    {1.0000, 5.4000, 3.9000},
    {1.0000, 4.6000, 3.4000},
    {1.0000, 5.0000, 3.4000},
    {1.0000, 4.4000, 2.9000},
    {1.0000, 4.9000, 3.1000},
    {1.0000, 5.4000, 3.7000},
    {1.0000, 4.8000, 3.4000},
    {1.0000, 4.8000, 3.0000},
    {1.0000, 4.3000, 3.0000},
    {1.0000, 5.8000, 4.0000},
    {1.0000, 5.7000, 4.4000},
    {1.0000, 5.4000, 3.9000},
    {1.0000, 5.1000, 3.5000},
    {1.0000, 5.7000, 3.8000},
    {1.0000, 5.1000, 3.8000},
    {1.0000, 5.4000, 3.6000},
    {1.0000, 5.1000, 3.7000},
    {1.0000, 4.6000, 3.6000},
    {1.0000, 5.1000, 3.3000},
    {1.0000, 4.8000, 3.4000},
    {1.0000, 5.0000, 3.0000},
    {1.0000, 5.0000, 3.4000},
    {1.0000, 5.2000, 3.5000},
    {1.0000, 5.2000, 3.4000},
    {1.0000, 4.7000, 3.2000},
    {1.0000, 4.8000, 3.1000},
    {1.0000, 5.4000, 3.3000},
    {1.0000, 5.2000, 4.1000},
    {1.0000, 5.5000, 4.2000},
    {1.0000, 4.9000, 3.1000},
    {1.0000, 5.0000, 3.2000},
    {1.0000, 5.5000, 3.5000},
    {1.0000, 4.9000, 3.1000},
    {1.0000, 4.4000, 3.0000},
    {1.0000, 5.1000, 3.4000},
    {1.0000, 5.0000, 3.5000},
    {1.0000, 4.5000, 3.0000},
    {1.0000, 4.4000, 3.2000},
    {1.0000, 5.0000, 3.5000},
    {1.0000, 5.1000, 3.8000},
    {1.0000, 4.8000, 3.0000},
    {1.0000, 5.1000, 3.8000},
    {1.0000, 4.6000, 3.2000},
    {1.0000, 5.3000, 3.7000},
    {1.0000, 5.0000, 3.3000},
    {-1.0000, -7.0000, -3.2000},
    {-1.0000, -6.4000, -3.2000},
    {-1.0000, -6.9000, -3.1000},
    {-1.0000, -5.5000, -2.3000},
    {-1.0000, -6.5000, -2.8000},
    {-1.0000, -5.7000, -2.8000},
    {-1.0000, -6.3000, -3.3000},
    {-1.0000, -4.9000, -2.4000},
    {-1.0000, -6.6000, -2.9000},
    {-1.0000, -5.2000, -2.7000},
    {-1.0000, -5.0000, -2.0000},
    {-1.0000, -5.9000, -3.0000},
    {-1.0000, -6.0000, -2.2000},
    {-1.0000, -6.1000, -2.9000},
    {-1.0000, -5.6000, -2.9000},
    {-1.0000, -6.7000, -3.1000},
    {-1.0000, -5.6000, -3.0000},
    {-1.0000, -5.8000, -2.7000},
    {-1.0000, -6.2000, -2.2000},
    {-1.0000, -5.6000, -2.5000},
    {-1.0000, -5.9000, -3.2000},
    {-1.0000, -6.1000, -2.8000},
    {-1.0000, -6.3000, -2.5000},
    {-1.0000, -6.1000, -2.8000},
    {-1.0000, -6.4000, -2.9000},
    {-1.0000, -6.6000, -3.0000},
    {-1.0000, -6.8000, -2.8000},
    {-1.0000, -6.7000, -3.0000},
    {-1.0000, -6.0000, -2.9000},
    {-1.0000, -5.7000, -2.6000},
    {-1.0000, -5.5000, -2.4000},
    {-1.0000, -5.5000, -2.4000},
    {-1.0000, -5.8000, -2.7000},
    {-1.0000, -6.0000, -2.7000},
    {-1.0000, -5.4000, -3.0000},
    {-1.0000, -6.0000, -3.4000},
    {-1.0000, -6.7000, -3.1000},
    {-1.0000, -6.3000, -2.3000},
    {-1.0000, -5.6000, -3.0000},
    {-1.0000, -5.5000, -2.5000},
    {-1.0000, -5.5000, -2.6000},
    {-1.0000, -6.1000, -3.0000},
    {-1.0000, -5.8000, -2.6000},
    {-1.0000, -5.0000, -2.3000},
    {-1.0000, -5.6000, -2.7000},
    {-1.0000, -5.7000, -3.0000},
    {-1.0000, -5.7000, -2.9000},
    {-1.0000, -6.2000, -2.9000},
    {-1.0000, -5.1000, -2.5000},
    {-1.0000, -5.7000, -2.8000},
};

} // namespace rre::detail
