#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rre/errors.hpp"
#include "rre/model.hpp"

namespace rre {

/// Hard-margin linear SVM solved directly on a given support set: augment and
/// sign-normalize the supports, solve K a = 1 for the Lagrange coefficients, and
/// rebuild the augmented weight. Margins against every support come out equal when
/// the support set is consistent.
struct SvmSolution {
    std::vector<std::vector<double>> phis;  // augmented, sign-normalized supports
    Eigen::MatrixXd kernel;                 // K_ij = phi_i . phi_j
    std::vector<double> alphas;
    std::vector<double> a_hat;              // sum_i alpha_i phi_i
    double margin = 0.0;                    // common distance to the separating line
    std::vector<double> margins;            // per-support, for the equality check
};

inline SvmSolution svm_support_solve(
    const std::vector<std::pair<FeatureVector, Category>>& support_raw) {
    if (support_raw.size() < 2)
        throw empty_input_error("need at least two support vectors");
    const std::size_t dim = support_raw.front().first.size();
    bool has1 = false, has2 = false;
    for (const auto& [p, c] : support_raw) {
        if (p.size() != dim) throw dimension_mismatch_error("support vectors disagree on dimension");
        (c == Category::one ? has1 : has2) = true;
    }
    if (!has1 || !has2) throw mixed_categories_missing_error();

    SvmSolution sol;
    for (const auto& [p, c] : support_raw) {
        double y = c == Category::one ? 1.0 : -1.0;
        std::vector<double> phi;
        phi.push_back(y);
        for (double v : p) phi.push_back(y * v);
        sol.phis.push_back(std::move(phi));
    }

    const auto n = static_cast<Eigen::Index>(sol.phis.size());
    const auto d = static_cast<Eigen::Index>(dim + 1);
    Eigen::MatrixXd phi(n, d);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index k = 0; k < d; ++k) phi(i, k) = sol.phis[i][k];
    sol.kernel = phi * phi.transpose();

    Eigen::FullPivLU<Eigen::MatrixXd> lu(sol.kernel);
    if (!lu.isInvertible()) throw singular_kernel_error();
    Eigen::VectorXd alpha = lu.solve(Eigen::VectorXd::Ones(n));
    sol.alphas.assign(alpha.data(), alpha.data() + n);

    Eigen::VectorXd a_hat = phi.transpose() * alpha;
    sol.a_hat.assign(a_hat.data(), a_hat.data() + d);

    double norm = 0.0;
    for (Eigen::Index k = 1; k < d; ++k) norm += a_hat(k) * a_hat(k);
    norm = std::sqrt(norm);
    if (!(norm > 0.0)) throw singular_kernel_error();
    for (Eigen::Index i = 0; i < n; ++i)
        sol.margins.push_back(phi.row(i).dot(a_hat) / norm);
    sol.margin = sol.margins.front();
    return sol;
}

/// Signed score of the reconstructed linear discriminant at a raw point.
inline DecisionOutcome svm_classify(const SvmSolution& sol, const FeatureVector& x) {
    if (x.size() + 1 != sol.a_hat.size())
        throw dimension_mismatch_error("point dimension does not match solution");
    double s = sol.a_hat[0];
    for (std::size_t i = 0; i < x.size(); ++i) s += sol.a_hat[i + 1] * x[i];
    Label label = s > 0.0 ? Label::category1 : s < 0.0 ? Label::category2 : Label::rejected;
    return DecisionOutcome{s, label};
}

} // namespace rre
