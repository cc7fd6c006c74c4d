#pragma once

#include <cstdio>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rre/datasets.hpp"
#include "rre/grid.hpp"
#include "rre/model.hpp"
#include "rre/perceptron.hpp"

namespace rre {

using Predictor = std::function<Label(const FeatureVector&)>;

/// Misclassification counts for one table row; rejected predictions count as wrong.
struct EvalCounts {
    std::size_t train_miss = 0, train_total = 0;
    std::size_t test_miss = 0, test_total = 0;

    /// test correct / test total (1 when there is no test data).
    double accuracy_excluding_training() const {
        return test_total == 0
                   ? 1.0
                   : static_cast<double>(test_total - test_miss) / static_cast<double>(test_total);
    }
    /// (train correct + test correct) / (train total + test total).
    double accuracy_including_training() const {
        std::size_t total = train_total + test_total;
        if (total == 0) return 1.0;
        return static_cast<double>(total - train_miss - test_miss) / static_cast<double>(total);
    }
};

/// Per-category rows plus their sum, mirroring the published table layout.
struct EvalReport {
    EvalCounts category1;
    EvalCounts category2;
    EvalCounts combined;
};

inline EvalReport evaluate_classifier(const Predictor& predict, const Dataset& train,
                                      const Dataset& test) {
    EvalReport rep;
    auto tally = [&](const Dataset& ds, bool is_train) {
        for (const auto& [p, cat] : ds.points) {
            EvalCounts& row = cat == Category::one ? rep.category1 : rep.category2;
            bool miss = predict(p) != to_label(cat);
            if (is_train) {
                ++row.train_total;
                if (miss) ++row.train_miss;
            } else {
                ++row.test_total;
                if (miss) ++row.test_miss;
            }
        }
    };
    tally(train, true);
    tally(test, false);
    rep.combined.train_miss = rep.category1.train_miss + rep.category2.train_miss;
    rep.combined.train_total = rep.category1.train_total + rep.category2.train_total;
    rep.combined.test_miss = rep.category1.test_miss + rep.category2.test_miss;
    rep.combined.test_total = rep.category1.test_total + rep.category2.test_total;
    return rep;
}

/// Fraction of the dataset's own points predicted correctly; vacuously 1 when empty.
inline double training_accuracy(const Predictor& predict, const Dataset& ds) {
    if (ds.points.empty()) return 1.0;
    std::size_t correct = 0;
    for (const auto& [p, cat] : ds.points)
        if (predict(p) == to_label(cat)) ++correct;
    return static_cast<double>(correct) / static_cast<double>(ds.points.size());
}

enum class Algorithm { rre, perceptron };

inline std::string algorithm_tag(Algorithm a) {
    return a == Algorithm::rre ? "R.R.E" : "P.C.A";
}

struct SweepRow {
    std::string ratio;  // e.g. "4:6"
    Algorithm algorithm;
    EvalReport report;
};

struct SweepReport {
    std::vector<SweepRow> rows;
};

inline Predictor rre_predictor(const RreModel& model) {
    return [model](const FeatureVector& x) { return classify(model, x).label; };
}

inline Predictor perceptron_predictor(std::vector<double> a) {
    return [a = std::move(a)](const FeatureVector& x) {
        return perceptron_classify(a, x).label;
    };
}

/// Leading-split sweep. R.R.E runs with f = identity and lambda = 1 so the kernel
/// width tracks the training count; the perceptron runs with its reference settings
/// (eta 0.01, theta 0, a = [0,0,1], 300 iterations).
inline SweepReport sweep_splits(const Dataset& ds,
                                const std::vector<Algorithm>& algorithms,
                                const std::vector<double>& fractions) {
    SweepReport report;
    for (double fraction : fractions) {
        auto [train, test] = split_leading_fraction(ds, SplitSpec{fraction});
        std::ostringstream ratio;
        ratio << static_cast<int>(fraction * 10 + 0.5) << ':'
              << static_cast<int>((1.0 - fraction) * 10 + 0.5);
        for (Algorithm algo : algorithms) {
            Predictor predict;
            if (algo == Algorithm::rre) {
                auto [t1, t2] = train.multisets();
                predict = rre_predictor(build_model(std::move(t1), std::move(t2), RreConfig{}));
            } else {
                auto rows = to_augmented_rows(train);
                predict = perceptron_predictor(train_perceptron(rows).a_final);
            }
            report.rows.push_back(
                SweepRow{ratio.str(), algo, evaluate_classifier(predict, train, test)});
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Surface export: CSV x1,x2,G in the row-major node order of evaluate_grid.

inline void export_surface(const std::vector<double>& values, const GridSpec& grid,
                           std::ostream& out) {
    grid.validate();
    if (values.size() != grid.nx * grid.ny)
        throw invalid_grid_error("value matrix does not match grid resolution");
    out << "x1,x2,G\n";
    for (std::size_t i = 0; i < grid.nx; ++i)
        for (std::size_t j = 0; j < grid.ny; ++j)
            out << detail::format_full(grid.x1_at(i)) << ',' << detail::format_full(grid.x2_at(j))
                << ',' << detail::format_full(values[i * grid.ny + j]) << "\n";
    if (!out) throw sink_failure_error("failed writing surface data");
}

inline std::vector<double> parse_surface_csv(std::istream& in) {
    std::vector<double> values;
    std::string line;
    if (!std::getline(in, line) || line != "x1,x2,G")
        throw parse_error("surface csv: bad header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw parse_error("surface csv: bad row: " + line);
        values.push_back(std::stod(line.substr(c2 + 1)));
    }
    return values;
}

// ---------------------------------------------------------------------------
// Report rendering: aligned text mirroring the published tables, plus CSV.

namespace detail {
inline std::string percent(double ratio) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f%%", ratio * 100.0);
    return buf;
}
inline std::string counts(std::size_t miss, std::size_t total) {
    return std::to_string(miss) + "/" + std::to_string(total);
}
} // namespace detail

inline std::string format_report_text(const EvalReport& rep) {
    std::ostringstream out;
    auto row = [&](const char* name, const EvalCounts& c) {
        char line[160];
        std::snprintf(line, sizeof line, "%-8s %13s %12s %10s %10s\n", name,
                      detail::counts(c.train_miss, c.train_total).c_str(),
                      detail::counts(c.test_miss, c.test_total).c_str(),
                      detail::percent(c.accuracy_excluding_training()).c_str(),
                      detail::percent(c.accuracy_including_training()).c_str());
        out << line;
    };
    out << "category   train-miss    test-miss   acc-excl   acc-incl\n";
    row("one", rep.category1);
    row("two", rep.category2);
    row("both", rep.combined);
    return out.str();
}

inline std::string format_report_csv_row(const std::string& category, const EvalCounts& c) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s,%zu,%zu,%zu,%zu,%.2f,%.2f", category.c_str(),
                  c.train_miss, c.train_total, c.test_miss, c.test_total,
                  c.accuracy_excluding_training() * 100.0,
                  c.accuracy_including_training() * 100.0);
    return buf;
}

inline std::string format_report_csv(const EvalReport& rep) {
    std::string out = "category,train_miss,train_total,test_miss,test_total,acc_excl,acc_incl\n";
    out += format_report_csv_row("one", rep.category1) + "\n";
    out += format_report_csv_row("two", rep.category2) + "\n";
    out += format_report_csv_row("both", rep.combined) + "\n";
    return out;
}

inline std::string format_sweep_text(const SweepReport& sweep) {
    std::ostringstream out;
    out << "ratio  algorithm   train-miss    test-miss   acc-excl   acc-incl\n";
    for (const auto& row : sweep.rows) {
        const EvalCounts& c = row.report.combined;
        char line[160];
        std::snprintf(line, sizeof line, "%-6s %-9s %12s %12s %10s %10s\n", row.ratio.c_str(),
                      algorithm_tag(row.algorithm).c_str(),
                      detail::counts(c.train_miss, c.train_total).c_str(),
                      detail::counts(c.test_miss, c.test_total).c_str(),
                      detail::percent(c.accuracy_excluding_training()).c_str(),
                      detail::percent(c.accuracy_including_training()).c_str());
        out << line;
    }
    return out.str();
}

} // namespace rre
