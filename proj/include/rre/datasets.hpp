#pragma once

#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rre/datasets_data.hpp"
#include "rre/errors.hpp"
#include "rre/model.hpp"

namespace rre {

enum class Provenance {
    appendix_b1,
    appendix_b2,
    appendix_b3,
    builtin_xor,
    synthetic_support2,
    external,
};

/// An ordered, immutable two-category point list. Category order is preserved from
/// the source listing; split semantics depend on it.
struct Dataset {
    std::string name;
    Provenance provenance = Provenance::external;
    std::vector<std::pair<FeatureVector, Category>> points;

    std::size_t count(Category c) const {
        std::size_t n = 0;
        for (const auto& [p, cat] : points)
            if (cat == c) ++n;
        return n;
    }

    /// Training multisets in source order, multiplicity 1 each.
    std::pair<TrainingMultiset, TrainingMultiset> multisets() const {
        TrainingMultiset t1, t2;
        for (const auto& [p, cat] : points) (cat == Category::one ? t1 : t2).add(p, 1);
        return {std::move(t1), std::move(t2)};
    }
};

/// A sign-normalized augmented row [y, y*x1, ..., y*xd] with y in {+1, -1}.
struct AugmentedRow {
    std::vector<double> values;
};

/// y is the first component; raw features are y * remaining components.
inline Dataset from_augmented_rows(const std::vector<AugmentedRow>& rows,
                                   std::string name = "external") {
    Dataset ds;
    ds.name = std::move(name);
    ds.provenance = Provenance::external;
    for (const auto& row : rows) {
        if (row.values.size() < 2) throw malformed_row_error("augmented row needs >= 2 values");
        double y = row.values.front();
        if (y != 1.0 && y != -1.0)
            throw malformed_row_error("augmented row must start with +1 or -1");
        FeatureVector x(row.values.begin() + 1, row.values.end());
        for (double& v : x) v *= y;
        ds.points.emplace_back(std::move(x), y > 0 ? Category::one : Category::two);
    }
    return ds;
}

/// Emits [y, y*x1, ..., y*xd] per point, category order preserved.
inline std::vector<AugmentedRow> to_augmented_rows(const Dataset& ds) {
    std::vector<AugmentedRow> rows;
    rows.reserve(ds.points.size());
    for (const auto& [p, cat] : ds.points) {
        double y = cat == Category::one ? 1.0 : -1.0;
        AugmentedRow row;
        row.values.push_back(y);
        for (double v : p) row.values.push_back(y * v);
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace detail {
inline Dataset dataset_from_table(const double (&rows)[100][3], std::string name,
                                  Provenance provenance) {
    std::vector<AugmentedRow> aug;
    aug.reserve(100);
    for (const auto& r : rows) aug.push_back(AugmentedRow{{r[0], r[1], r[2]}});
    Dataset ds = from_augmented_rows(aug, std::move(name));
    ds.provenance = provenance;
    return ds;
}
} // namespace detail

/// Two concentric 12-point rings about (10,10), radii 2 and 5, the outer ring offset
/// by pi/12. Both category means land on (10,10), which defeats a mean-difference
/// discriminant while leaving the classes radially separable.
inline Dataset generate_support2() {
    Dataset ds;
    ds.name = "support2";
    ds.provenance = Provenance::synthetic_support2;
    constexpr double pi = std::numbers::pi;
    for (int k = 0; k < 12; ++k) {
        double a = 2.0 * pi * k / 12.0;
        ds.points.emplace_back(FeatureVector{10.0 + 2.0 * std::cos(a), 10.0 + 2.0 * std::sin(a)},
                               Category::one);
    }
    for (int k = 0; k < 12; ++k) {
        double a = pi / 12.0 + 2.0 * pi * k / 12.0;
        ds.points.emplace_back(FeatureVector{10.0 + 5.0 * std::cos(a), 10.0 + 5.0 * std::sin(a)},
                               Category::two);
    }
    return ds;
}

inline const std::vector<std::string>& builtin_dataset_names() {
    static const std::vector<std::string> names = {
        "iris_setosa_versicolor", "iris_versicolor_virginicaV2", "support1", "xor", "support2",
    };
    return names;
}

inline Dataset load_builtin(const std::string& name) {
    if (name == "iris_setosa_versicolor")
        return detail::dataset_from_table(detail::kIrisSetosaVersicolorRows, name,
                                          Provenance::appendix_b1);
    if (name == "iris_versicolor_virginicaV2")
        return detail::dataset_from_table(detail::kIrisVersicolorVirginicaV2Rows, name,
                                          Provenance::appendix_b2);
    if (name == "support1")
        return detail::dataset_from_table(detail::kSupport1Rows, name, Provenance::appendix_b3);
    if (name == "xor") {
        Dataset ds;
        ds.name = name;
        ds.provenance = Provenance::builtin_xor;
        ds.points = {{{-1.0, 1.0}, Category::one},
                     {{1.0, -1.0}, Category::one},
                     {{-1.0, -1.0}, Category::two},
                     {{1.0, 1.0}, Category::two}};
        return ds;
    }
    if (name == "support2") return generate_support2();
    throw unknown_dataset_error(name);
}

/// Leading-fraction split, applied per category in source order.
struct SplitSpec {
    double train_fraction = 0.4;
};

namespace detail {
inline std::size_t leading_count(double fraction, std::size_t n, bool require_integral) {
    if (!(fraction > 0.0) || !(fraction < 1.0))
        throw std::invalid_argument("train fraction must lie in (0, 1)");
    double exact = fraction * static_cast<double>(n);
    double rounded = std::round(exact);
    if (require_integral && std::fabs(exact - rounded) > 1e-9) {
        std::ostringstream os;
        os << "fraction " << fraction << " of " << n << " points is not integral";
        throw non_integral_split_error(os.str());
    }
    return static_cast<std::size_t>(std::floor(exact + 1e-9));
}
} // namespace detail

/// Per category, the first floor(fraction * n_c) points go to train and the rest to
/// test. Deterministic; no shuffling. With require_integral, a fraction that does not
/// divide a category count exactly raises non_integral_split_error.
inline std::pair<Dataset, Dataset> split_leading_fraction(const Dataset& ds, SplitSpec spec,
                                                          bool require_integral = true) {
    Dataset train{ds.name + ":train", ds.provenance, {}};
    Dataset test{ds.name + ":test", ds.provenance, {}};
    for (Category cat : {Category::one, Category::two}) {
        std::vector<std::pair<FeatureVector, Category>> pts;
        for (const auto& pc : ds.points)
            if (pc.second == cat) pts.push_back(pc);
        std::size_t k = detail::leading_count(spec.train_fraction, pts.size(), require_integral);
        for (std::size_t i = 0; i < pts.size(); ++i)
            (i < k ? train : test).points.push_back(pts[i]);
    }
    return {std::move(train), std::move(test)};
}

// ---------------------------------------------------------------------------
// Text formats: the appendix-style augmented listing and a raw x1,x2,label CSV.

/// One row per line, tab-separated, fixed 4-decimal values.
inline std::string to_augmented_text(const Dataset& ds) {
    std::string out;
    for (const auto& row : to_augmented_rows(ds)) {
        char buf[64];
        for (std::size_t i = 0; i < row.values.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.4f", row.values[i]);
            if (i) out += '\t';
            out += buf;
        }
        out += '\n';
    }
    return out;
}

inline Dataset parse_augmented_text(std::istream& in, std::string name = "external") {
    std::vector<AugmentedRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        AugmentedRow row;
        double v;
        while (ls >> v) row.values.push_back(v);
        if (!row.values.empty()) rows.push_back(std::move(row));
    }
    return from_augmented_rows(rows, std::move(name));
}

/// Raw CSV rows `x1,x2,label` with label in {1, 2}; a header line is permitted.
inline Dataset parse_raw_csv(std::istream& in, std::string name = "external") {
    Dataset ds;
    ds.name = std::move(name);
    ds.provenance = Provenance::external;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string a, b, c;
        if (!std::getline(ls, a, ',') || !std::getline(ls, b, ',') || !std::getline(ls, c))
            throw malformed_row_error("csv row needs x1,x2,label: " + line);
        if (first) {
            first = false;
            if (a == "x1") continue; // header
        }
        try {
            double x1 = std::stod(a);
            double x2 = std::stod(b);
            int label = std::stoi(c);
            if (label != 1 && label != 2) throw malformed_row_error("label must be 1 or 2: " + line);
            ds.points.emplace_back(FeatureVector{x1, x2},
                                   label == 1 ? Category::one : Category::two);
        } catch (const std::invalid_argument&) {
            throw malformed_row_error("unparseable csv row: " + line);
        }
    }
    return ds;
}

} // namespace rre
