#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <vector>

#include "rre/errors.hpp"
#include "rre/model.hpp"
#include "rre/variance.hpp"

namespace rre {

// 2-2-1 network on the fixed XOR batch, tanh activations throughout.
//
// Conventions (frozen):
//   - weight layout is bias-last: w_hidden rows are [x1-weights; x2-weights; bias],
//     one column per hidden unit; w_out is [y1, y2, bias];
//   - epoch error is E = sum over the four patterns of (t - z)^2, checked against
//     theta before the weight update;
//   - updates are batch gradient descent with classical momentum on E.

using HiddenWeights = std::array<std::array<double, 2>, 3>;
using OutputWeights = std::array<double, 3>;

struct NnConfig {
    double eta = 0.1;
    double theta = 0.001;
    double momentum = 0.84;
    HiddenWeights w_hidden = {{{0.1, 0.2}, {0.3, 0.4}, {0.5, 0.3}}};
    OutputWeights w_out = {0.27, 0.31, 0.29};
    int max_epochs = 10000;

    void validate() const {
        if (!(eta > 0.0)) throw std::invalid_argument("eta must be > 0");
        if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
        if (momentum < 0.0 || momentum >= 1.0)
            throw std::invalid_argument("momentum must lie in [0, 1)");
        if (max_epochs < 1) throw std::invalid_argument("max_epochs must be >= 1");
    }
};

struct NnResult {
    HiddenWeights w_hidden_final{};
    OutputWeights w_out_final{};
    int epochs = 0;
    double final_error = 0.0;
    std::vector<double> learning_curve;  // E per epoch; length == epochs
    std::array<double, 4> outputs{};     // z for the four patterns, batch order
    bool converged = false;
};

inline constexpr std::array<std::array<double, 2>, 4> kXorInputs = {
    {{-1.0, -1.0}, {-1.0, 1.0}, {1.0, -1.0}, {1.0, 1.0}}};
inline constexpr std::array<double, 4> kXorTargets = {-1.0, 1.0, 1.0, -1.0};

/// z = tanh(w_out . [tanh(per-unit hidden net); 1]) under the bias-last layout.
inline double nn_forward(const HiddenWeights& w_hidden, const OutputWeights& w_out,
                         const FeatureVector& x) {
    if (x.size() != 2) throw dimension_mismatch_error("xor network takes 2-d inputs");
    double y0 = std::tanh(w_hidden[0][0] * x[0] + w_hidden[1][0] * x[1] + w_hidden[2][0]);
    double y1 = std::tanh(w_hidden[0][1] * x[0] + w_hidden[1][1] * x[1] + w_hidden[2][1]);
    return std::tanh(w_out[0] * y0 + w_out[1] * y1 + w_out[2]);
}

namespace detail {
struct NnGradients {
    double error_sum = 0.0;                      // sum (t - z)^2
    std::array<std::array<double, 2>, 3> gh{};   // sum of hidden deltas * inputs
    std::array<double, 3> go{};                  // sum of output deltas * hidden acts
};

inline NnGradients nn_batch_pass(const HiddenWeights& wh, const OutputWeights& wo) {
    NnGradients g;
    for (std::size_t p = 0; p < 4; ++p) {
        const double x0 = kXorInputs[p][0];
        const double x1 = kXorInputs[p][1];
        const double t = kXorTargets[p];
        const double y0 = std::tanh(wh[0][0] * x0 + wh[1][0] * x1 + wh[2][0]);
        const double y1 = std::tanh(wh[0][1] * x0 + wh[1][1] * x1 + wh[2][1]);
        const double z = std::tanh(wo[0] * y0 + wo[1] * y1 + wo[2]);
        g.error_sum += (t - z) * (t - z);
        const double dout = (t - z) * (1.0 - z * z);
        const std::array<double, 2> y = {y0, y1};
        for (std::size_t j = 0; j < 2; ++j) {
            const double dh = dout * wo[j] * (1.0 - y[j] * y[j]);
            g.gh[0][j] += dh * x0;
            g.gh[1][j] += dh * x1;
            g.gh[2][j] += dh;
        }
        g.go[0] += dout * y0;
        g.go[1] += dout * y1;
        g.go[2] += dout;
    }
    return g;
}
} // namespace detail

/// Batch backprop on the XOR patterns. Stops when E < theta (checked before the
/// update) or at the epoch cap; non-convergence is reported via the flag.
inline NnResult train_xor_nn(const NnConfig& config = {}) {
    config.validate();
    NnResult res;
    res.w_hidden_final = config.w_hidden;
    res.w_out_final = config.w_out;
    HiddenWeights vh{};
    OutputWeights vo{};

    for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
        auto g = detail::nn_batch_pass(res.w_hidden_final, res.w_out_final);
        res.learning_curve.push_back(g.error_sum);
        if (g.error_sum < config.theta) {
            res.converged = true;
            break;
        }
        // dE/dw = -2 * accumulated deltas, so the descent step is +2 eta * g.
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                vh[i][j] = config.momentum * vh[i][j] + config.eta * 2.0 * g.gh[i][j];
                res.w_hidden_final[i][j] += vh[i][j];
            }
        for (std::size_t k = 0; k < 3; ++k) {
            vo[k] = config.momentum * vo[k] + config.eta * 2.0 * g.go[k];
            res.w_out_final[k] += vo[k];
        }
    }
    res.epochs = static_cast<int>(res.learning_curve.size());
    res.final_error = res.learning_curve.empty() ? 0.0 : res.learning_curve.back();
    for (std::size_t p = 0; p < 4; ++p)
        res.outputs[p] = nn_forward(res.w_hidden_final, res.w_out_final,
                                    FeatureVector{kXorInputs[p][0], kXorInputs[p][1]});
    return res;
}

/// `nn221 v1` line-oriented snapshot.
inline void save_nn_text(std::ostream& out, const NnResult& res, const NnConfig& config) {
    out << "nn221 v1 eta=" << detail::format_full(config.eta)
        << " theta=" << detail::format_full(config.theta)
        << " momentum=" << detail::format_full(config.momentum) << " epochs=" << res.epochs
        << " final_error=" << detail::format_full(res.final_error)
        << " converged=" << (res.converged ? 1 : 0) << "\n";
    for (std::size_t i = 0; i < 3; ++i)
        out << "wh " << detail::format_full(res.w_hidden_final[i][0]) << ' '
            << detail::format_full(res.w_hidden_final[i][1]) << "\n";
    out << "wo " << detail::format_full(res.w_out_final[0]) << ' '
        << detail::format_full(res.w_out_final[1]) << ' '
        << detail::format_full(res.w_out_final[2]) << "\n";
    out << "z " << detail::format_full(res.outputs[0]) << ' '
        << detail::format_full(res.outputs[1]) << ' ' << detail::format_full(res.outputs[2])
        << ' ' << detail::format_full(res.outputs[3]) << "\n";
}

} // namespace rre
