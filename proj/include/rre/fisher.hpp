#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "rre/errors.hpp"
#include "rre/model.hpp"

namespace rre {

/// Fisher linear discriminant with a small ridge so singleton classes (zero scatter)
/// stay solvable. The threshold sits at the projected midpoint of the class means;
/// when the means coincide the direction carries no information and `degenerate`
/// is raised instead.
struct FisherResult {
    FeatureVector mean1;
    FeatureVector mean2;
    Eigen::MatrixXd within_scatter;
    std::vector<double> w;
    double bias = 0.0;
    bool degenerate = false;
};

inline FisherResult fisher_discriminant(const std::vector<FeatureVector>& points1,
                                        const std::vector<FeatureVector>& points2) {
    if (points1.empty() || points2.empty())
        throw empty_input_error("fisher discriminant needs points in both categories");
    const std::size_t dim = points1.front().size();
    for (const auto* pts : {&points1, &points2})
        for (const auto& p : *pts)
            if (p.size() != dim) throw dimension_mismatch_error("points disagree on dimension");

    const auto d = static_cast<Eigen::Index>(dim);
    auto mean_of = [d](const std::vector<FeatureVector>& pts) {
        Eigen::VectorXd m = Eigen::VectorXd::Zero(d);
        for (const auto& p : pts)
            for (Eigen::Index k = 0; k < d; ++k) m(k) += p[k];
        return Eigen::VectorXd(m / static_cast<double>(pts.size()));
    };
    Eigen::VectorXd m1 = mean_of(points1);
    Eigen::VectorXd m2 = mean_of(points2);

    Eigen::MatrixXd sw = Eigen::MatrixXd::Zero(d, d);
    for (const auto* pts : {&points1, &points2}) {
        const Eigen::VectorXd& m = pts == &points1 ? m1 : m2;
        for (const auto& p : *pts) {
            Eigen::VectorXd diff(d);
            for (Eigen::Index k = 0; k < d; ++k) diff(k) = p[k] - m(k);
            sw += diff * diff.transpose();
        }
    }

    constexpr double ridge = 1e-9;
    Eigen::VectorXd dm = m1 - m2;
    Eigen::VectorXd w =
        (sw + ridge * Eigen::MatrixXd::Identity(d, d)).ldlt().solve(dm);

    FisherResult res;
    res.mean1.assign(m1.data(), m1.data() + d);
    res.mean2.assign(m2.data(), m2.data() + d);
    res.within_scatter = sw;
    res.w.assign(w.data(), w.data() + d);
    res.bias = w.dot((m1 + m2) / 2.0);
    res.degenerate = dm.norm() < 1e-9;
    return res;
}

/// w.x - bias with the usual sign rule. Meaningless when degenerate.
inline DecisionOutcome fisher_classify(const FisherResult& res, const FeatureVector& x) {
    if (x.size() != res.w.size())
        throw dimension_mismatch_error("point dimension does not match discriminant");
    double s = -res.bias;
    for (std::size_t i = 0; i < x.size(); ++i) s += res.w[i] * x[i];
    Label label = s > 0.0 ? Label::category1 : s < 0.0 ? Label::category2 : Label::rejected;
    return DecisionOutcome{s, label};
}

} // namespace rre
