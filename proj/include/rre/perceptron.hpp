#pragma once

#include <cstddef>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "rre/datasets.hpp"
#include "rre/errors.hpp"
#include "rre/model.hpp"

namespace rre {

struct PerceptronConfig {
    double eta = 0.01;
    double theta = 0.0;                        // criterion threshold; a.y <= theta is a miss
    std::vector<double> a_init = {0.0, 0.0, 1.0};
    int max_iter = 300;
};

struct PerceptronResult {
    std::vector<double> a_final;
    int iterations = 0;                        // criterion evaluations, == history length
    bool converged = false;
    std::vector<double> criterion_history;     // J_p per iteration; 0 on the closing one
    double training_accuracy = 0.0;
};

namespace detail {
inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
} // namespace detail

/// Batch perceptron-criterion descent. Each iteration gathers every row with
/// a.y <= theta, records J_p = sum of -a.y over them, and steps a by eta times their
/// sum (applied row by row in input order, which fixes the trajectory exactly).
/// Boundary rows count as misclassified, so theta = 0 demands a strict separator.
inline PerceptronResult train_perceptron(const std::vector<AugmentedRow>& rows,
                                         const PerceptronConfig& config = {}) {
    if (rows.empty()) throw empty_input_error("perceptron needs at least one row");
    const std::size_t dim = rows.front().values.size();
    for (const auto& r : rows)
        if (r.values.size() != dim)
            throw dimension_mismatch_error("augmented rows disagree on dimension");
    if (config.a_init.size() != dim)
        throw dimension_mismatch_error("initial weight dimension does not match rows");
    if (!(config.eta > 0.0)) throw std::invalid_argument("eta must be > 0");
    if (config.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");

    PerceptronResult res;
    res.a_final = config.a_init;
    std::vector<std::size_t> misses;
    for (int it = 0; it < config.max_iter; ++it) {
        misses.clear();
        double jp = 0.0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            double s = detail::dot(res.a_final, rows[i].values);
            if (s <= config.theta) {
                misses.push_back(i);
                jp += -s;
            }
        }
        res.criterion_history.push_back(jp);
        if (misses.empty()) {
            res.converged = true;
            break;
        }
        for (std::size_t i : misses)
            for (std::size_t k = 0; k < dim; ++k)
                res.a_final[k] += config.eta * rows[i].values[k];
    }
    res.iterations = static_cast<int>(res.criterion_history.size());

    std::size_t correct = 0;
    for (const auto& r : rows)
        if (detail::dot(res.a_final, r.values) > 0.0) ++correct;
    res.training_accuracy = rows.empty() ? 1.0 : static_cast<double>(correct) / rows.size();
    return res;
}

/// sign(a . [1, x]): positive is category one, negative category two, zero rejected.
inline DecisionOutcome perceptron_classify(const std::vector<double>& a,
                                           const FeatureVector& x) {
    if (a.size() != x.size() + 1)
        throw dimension_mismatch_error("weight vector does not match point dimension");
    double s = a[0];
    for (std::size_t i = 0; i < x.size(); ++i) s += a[i + 1] * x[i];
    Label label = s > 0.0 ? Label::category1 : s < 0.0 ? Label::category2 : Label::rejected;
    return DecisionOutcome{s, label};
}

/// `pca v1` line-oriented snapshot.
inline void save_perceptron_text(std::ostream& out, const PerceptronResult& res,
                                 const PerceptronConfig& config) {
    out << "pca v1 dim=" << res.a_final.size() - 1 << " eta=" << detail::format_full(config.eta)
        << " theta=" << detail::format_full(config.theta) << " max_iter=" << config.max_iter
        << " iterations=" << res.iterations << " converged=" << (res.converged ? 1 : 0)
        << " accuracy=" << detail::format_full(res.training_accuracy) << "\n";
    out << "a";
    for (double v : res.a_final) out << ' ' << detail::format_full(v);
    out << "\n";
}

/// Two-column `iter,value` CSV used for every exported learning curve.
inline void write_curve_csv(std::ostream& out, const std::vector<double>& values) {
    out << "iter,value\n";
    for (std::size_t i = 0; i < values.size(); ++i)
        out << i + 1 << ',' << detail::format_full(values[i]) << "\n";
}

} // namespace rre
