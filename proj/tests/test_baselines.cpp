#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "rre/datasets.hpp"
#include "rre/eval.hpp"
#include "rre/fisher.hpp"
#include "rre/perceptron.hpp"
#include "rre/svm.hpp"
#include "rre/xor_net.hpp"

using namespace rre;

// ---------------------------------------------------------------- perceptron

TEST_CASE("perceptron converges on the 40 percent split to the reference weights") {
    auto [train, test] =
        split_leading_fraction(load_builtin("iris_setosa_versicolor"), SplitSpec{0.4});
    auto res = train_perceptron(to_augmented_rows(train));
    CHECK(res.converged);
    CHECK_THAT(res.a_final[0], Catch::Matchers::WithinAbs(0.2100, 5e-5));
    CHECK_THAT(res.a_final[1], Catch::Matchers::WithinAbs(-2.5860, 5e-5));
    CHECK_THAT(res.a_final[2], Catch::Matchers::WithinAbs(4.2240, 5e-5));
    CHECK(res.training_accuracy == 1.0);

    auto rep = evaluate_classifier(perceptron_predictor(res.a_final), train, test);
    CHECK(rep.combined.train_miss == 0);
    CHECK(rep.combined.test_miss == 2);

    // criterion values are non-negative and the closing one is zero
    for (double jp : res.criterion_history) CHECK(jp >= 0.0);
    CHECK(res.criterion_history.back() == 0.0);
    CHECK(static_cast<int>(res.criterion_history.size()) == res.iterations);
}

TEST_CASE("perceptron stops immediately when the initial weights already separate") {
    std::vector<AugmentedRow> rows = {AugmentedRow{{1.0, 0.5, 0.5}},
                                      AugmentedRow{{-1.0, 1.0, 3.0}}};
    auto res = train_perceptron(rows);
    CHECK(res.converged);
    CHECK(res.iterations <= 1);
    CHECK(res.a_final == std::vector<double>{0.0, 0.0, 1.0});
}

TEST_CASE("perceptron hits the cap on the noisy full dataset") {
    PerceptronConfig cfg;
    cfg.max_iter = 3000;
    auto res = train_perceptron(to_augmented_rows(load_builtin("iris_versicolor_virginicaV2")),
                                cfg);
    CHECK(!res.converged);
    CHECK(res.iterations == 3000);
    CHECK(res.criterion_history.back() > 0.0); // still misclassifying at the cap
    CHECK(res.training_accuracy >= 0.45);
    CHECK(res.training_accuracy <= 0.70);
}

TEST_CASE("perceptron labels are invariant under positive weight scaling") {
    auto [train, test] =
        split_leading_fraction(load_builtin("iris_setosa_versicolor"), SplitSpec{0.4});
    auto res = train_perceptron(to_augmented_rows(train));
    for (double c : {0.5, 2.0, 16.0}) {
        std::vector<double> scaled = res.a_final;
        for (double& v : scaled) v *= c;
        for (const auto& [p, cat] : test.points)
            CHECK(perceptron_classify(scaled, p).label ==
                  perceptron_classify(res.a_final, p).label);
    }
}

TEST_CASE("perceptron input validation") {
    CHECK_THROWS_AS(train_perceptron({}), empty_input_error);
    CHECK_THROWS_AS(train_perceptron({AugmentedRow{{1.0, 2.0}}, AugmentedRow{{1.0, 2.0, 3.0}}}),
                    dimension_mismatch_error);
}

// ----------------------------------------------------------------------- svm

namespace {
std::vector<std::pair<FeatureVector, Category>> worked_supports() {
    return {{{5.0, 3.0}, Category::one},
            {{5.4, 3.3}, Category::one},
            {{5.4, 3.0}, Category::two}};
}
} // namespace

TEST_CASE("svm worked example: kernel, coefficients, weight, margin") {
    SvmSolution sol = svm_support_solve(worked_supports());
    const double K[3][3] = {{35.0, 37.9, -37.0}, {37.9, 41.05, -40.06}, {-37.0, -40.06, 39.16}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK_THAT(sol.kernel(i, j), Catch::Matchers::WithinAbs(K[i][j], 1e-9));

    CHECK_THAT(sol.alphas[0], Catch::Matchers::WithinAbs(93.5, 0.01));
    CHECK_THAT(sol.alphas[1], Catch::Matchers::WithinAbs(-37.78, 0.01));
    CHECK_THAT(sol.alphas[2], Catch::Matchers::WithinAbs(49.72, 0.01));

    CHECK_THAT(sol.a_hat[0], Catch::Matchers::WithinAbs(6.0, 1e-6));
    CHECK_THAT(sol.a_hat[1], Catch::Matchers::WithinAbs(-5.0, 1e-6));
    CHECK_THAT(sol.a_hat[2], Catch::Matchers::WithinAbs(20.0 / 3.0, 1e-6));

    CHECK_THAT(sol.margin, Catch::Matchers::WithinAbs(0.12, 0.005));
    for (double m : sol.margins)
        CHECK(std::fabs(m - sol.margin) <= 1e-6 * std::fabs(sol.margin));
}

TEST_CASE("svm solution satisfies K alpha = 1 under an independent multiply") {
    SvmSolution sol = svm_support_solve(worked_supports());
    for (std::size_t i = 0; i < sol.phis.size(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < sol.phis.size(); ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < sol.phis[i].size(); ++k)
                dot += sol.phis[i][k] * sol.phis[j][k];
            acc += dot * sol.alphas[j];
        }
        CHECK_THAT(acc, Catch::Matchers::WithinAbs(1.0, 1e-6));
    }
}

TEST_CASE("svm symmetric pair reduces to the vertical separator") {
    SvmSolution sol = svm_support_solve(
        {{{0.0, -1.0}, Category::one}, {{0.0, 1.0}, Category::two}});
    CHECK_THAT(sol.a_hat[0], Catch::Matchers::WithinAbs(0.0, 1e-12));
    CHECK_THAT(sol.a_hat[1], Catch::Matchers::WithinAbs(0.0, 1e-12));
    CHECK(std::fabs(sol.a_hat[2]) > 0.0);
    CHECK_THAT(sol.margins[0], Catch::Matchers::WithinAbs(sol.margins[1], 1e-12));
}

TEST_CASE("svm input validation") {
    CHECK_THROWS_AS(svm_support_solve({{{1.0, 2.0}, Category::one}}), empty_input_error);
    CHECK_THROWS_AS(
        svm_support_solve({{{1.0, 2.0}, Category::one}, {{2.0, 1.0}, Category::one}}),
        mixed_categories_missing_error);
    // duplicated support rows make the kernel singular
    CHECK_THROWS_AS(svm_support_solve({{{5.0, 3.0}, Category::one},
                                       {{5.0, 3.0}, Category::one},
                                       {{5.4, 3.0}, Category::two}}),
                    singular_kernel_error);
}

// -------------------------------------------------------------------- fisher

TEST_CASE("fisher separates an axis-aligned singleton pair at the midpoint") {
    auto res = fisher_discriminant({{0.0, 0.0}}, {{2.0, 0.0}});
    CHECK(!res.degenerate);
    CHECK(res.w[0] < 0.0);
    CHECK_THAT(res.w[1], Catch::Matchers::WithinAbs(0.0, std::fabs(res.w[0]) * 1e-9));
    CHECK(fisher_classify(res, {0.0, 0.0}).label == Label::category1);
    CHECK(fisher_classify(res, {2.0, 0.0}).label == Label::category2);
}

TEST_CASE("fisher flags coincident means as degenerate") {
    Dataset s2 = generate_support2();
    std::vector<FeatureVector> p1, p2;
    for (const auto& [p, cat] : s2.points) (cat == Category::one ? p1 : p2).push_back(p);
    auto res = fisher_discriminant(p1, p2);
    CHECK(res.degenerate);
    CHECK_THAT(res.mean1[0], Catch::Matchers::WithinAbs(10.0, 1e-9));
    CHECK_THAT(res.mean2[1], Catch::Matchers::WithinAbs(10.0, 1e-9));
}

TEST_CASE("fisher degenerates on any reflection through a common centroid") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<FeatureVector> pts;
        FeatureVector c{0.0, 0.0};
        for (int i = 0; i < 6; ++i) {
            pts.push_back({coord(rng), coord(rng)});
            c[0] += pts.back()[0] / 6.0;
            c[1] += pts.back()[1] / 6.0;
        }
        std::vector<FeatureVector> mirrored;
        for (const auto& p : pts) mirrored.push_back({2 * c[0] - p[0], 2 * c[1] - p[1]});
        CHECK(fisher_discriminant(pts, mirrored).degenerate);
    }
}

TEST_CASE("fisher achieves full accuracy on the separable listing") {
    Dataset b3 = load_builtin("support1");
    std::vector<FeatureVector> p1, p2;
    for (const auto& [p, cat] : b3.points) (cat == Category::one ? p1 : p2).push_back(p);
    auto res = fisher_discriminant(p1, p2);
    CHECK(!res.degenerate);

    std::size_t correct = 0;
    for (const auto& [p, cat] : b3.points)
        if (fisher_classify(res, p).label == to_label(cat)) ++correct;
    CHECK(correct == 100);

    // Oracle: a brute-force sweep over projected thresholds confirms the projections
    // are separable, so 100% is attainable along this direction at all.
    std::vector<double> proj1, proj2;
    for (const auto& p : p1) proj1.push_back(res.w[0] * p[0] + res.w[1] * p[1]);
    for (const auto& p : p2) proj2.push_back(res.w[0] * p[0] + res.w[1] * p[1]);
    CHECK(*std::max_element(proj2.begin(), proj2.end()) <
          *std::min_element(proj1.begin(), proj1.end()));
}

TEST_CASE("fisher input validation") {
    CHECK_THROWS_AS(fisher_discriminant({}, {{1.0, 1.0}}), empty_input_error);
}

// ------------------------------------------------------------------- xor net

TEST_CASE("nn forward matches the published final-weight outputs") {
    const HiddenWeights wh = {{{1.2031, 3.9577}, {2.6005, 4.5555}, {-2.5788, 5.2168}}};
    const OutputWeights wo = {-6.4841, 5.8289, -3.2555};
    CHECK_THAT(nn_forward(wh, wo, {-1.0, -1.0}), Catch::Matchers::WithinAbs(-0.9887, 0.01));
    CHECK_THAT(nn_forward(wh, wo, {-1.0, 1.0}), Catch::Matchers::WithinAbs(1.0, 0.01));
    CHECK_THAT(nn_forward(wh, wo, {1.0, -1.0}), Catch::Matchers::WithinAbs(1.0, 0.01));
    CHECK_THAT(nn_forward(wh, wo, {1.0, 1.0}), Catch::Matchers::WithinAbs(-0.9937, 0.01));
}

TEST_CASE("nn forward basics") {
    HiddenWeights zero{};
    OutputWeights zout{};
    CHECK(nn_forward(zero, zout, {0.7, -0.3}) == 0.0);

    // tanh oddness: negating the output layer flips the output net, hence z.
    // (Negating both layers would cancel through the hidden path instead.)
    const HiddenWeights wh = {{{1.2031, 3.9577}, {2.6005, 4.5555}, {-2.5788, 5.2168}}};
    const OutputWeights wo = {-6.4841, 5.8289, -3.2555};
    OutputWeights nwo = wo;
    for (double& v : nwo) v = -v;
    for (auto x : {FeatureVector{0.3, 0.4}, FeatureVector{-1.0, 1.0}})
        CHECK_THAT(nn_forward(wh, nwo, x),
                   Catch::Matchers::WithinAbs(-nn_forward(wh, wo, x), 1e-15));

    CHECK_THROWS_AS(nn_forward(wh, wo, {1.0, 2.0, 3.0}), dimension_mismatch_error);
}

TEST_CASE("nn training from the reference start converges in the reported regime") {
    NnResult res = train_xor_nn();
    CHECK(res.converged);
    CHECK(res.epochs == 32); // regression pin; the acceptance band is [16, 64]
    CHECK(res.final_error < 0.001);
    CHECK(static_cast<int>(res.learning_curve.size()) == res.epochs);
    for (int i = 0; i < 4; ++i) {
        CHECK((res.outputs[i] > 0) == (kXorTargets[i] > 0));
        CHECK(std::fabs(res.outputs[i]) >= 0.98);
    }
}

TEST_CASE("nn reports the cap through the converged flag") {
    NnConfig cfg;
    cfg.theta = 1e-12;
    cfg.max_epochs = 50;
    NnResult res = train_xor_nn(cfg);
    CHECK(!res.converged);
    CHECK(res.epochs == 50);
}

namespace {
double nn_loss(const HiddenWeights& wh, const OutputWeights& wo) {
    double s = 0.0;
    for (std::size_t p = 0; p < 4; ++p) {
        double z = nn_forward(wh, wo, {kXorInputs[p][0], kXorInputs[p][1]});
        s += (kXorTargets[p] - z) * (kXorTargets[p] - z);
    }
    return s;
}
} // namespace

TEST_CASE("property: analytic gradient matches central finite differences") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> w(-2.0, 2.0);
    const double h = 1e-5;
    auto check_at = [&](const HiddenWeights& wh, const OutputWeights& wo) {
        auto g = detail::nn_batch_pass(wh, wo);
        // dE/dw = -2 * accumulated delta products for E = sum (t - z)^2
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                HiddenWeights wp = wh, wm = wh;
                wp[i][j] += h;
                wm[i][j] -= h;
                double fd = (nn_loss(wp, wo) - nn_loss(wm, wo)) / (2 * h);
                double an = -2.0 * g.gh[i][j];
                CHECK(std::fabs(fd - an) <=
                      1e-6 * std::max({1e-9, std::fabs(fd), std::fabs(an)}));
            }
        for (std::size_t k = 0; k < 3; ++k) {
            OutputWeights wp = wo, wm = wo;
            wp[k] += h;
            wm[k] -= h;
            double fd = (nn_loss(wh, wp) - nn_loss(wh, wm)) / (2 * h);
            double an = -2.0 * g.go[k];
            CHECK(std::fabs(fd - an) <= 1e-6 * std::max({1e-9, std::fabs(fd), std::fabs(an)}));
        }
    };
    check_at(NnConfig{}.w_hidden, NnConfig{}.w_out);
    for (int trial = 0; trial < 10; ++trial) {
        HiddenWeights wh;
        OutputWeights wo;
        for (auto& row : wh)
            for (double& v : row) v = w(rng);
        for (double& v : wo) v = w(rng);
        check_at(wh, wo);
    }
}

TEST_CASE("property: plain gradient descent is non-increasing at small eta") {
    NnConfig cfg;
    cfg.eta = 0.01;
    cfg.momentum = 0.0;
    cfg.theta = 1e-9;      // effectively unreachable; we want the full curve
    cfg.max_epochs = 2000;
    NnResult res = train_xor_nn(cfg);
    for (std::size_t i = 1; i < res.learning_curve.size(); ++i)
        CHECK(res.learning_curve[i] <= res.learning_curve[i - 1] + 1e-15);
}
