#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "rre/datasets.hpp"
#include "rre/eval.hpp"
#include "rre/grid.hpp"

using namespace rre;

namespace {
RreModel xor_model() {
    auto [t1, t2] = load_builtin("xor").multisets();
    return build_model(std::move(t1), std::move(t2));
}
} // namespace

TEST_CASE("grid evaluation hits the reference corner values") {
    auto m = xor_model();
    GridSpec g{-1.0, 1.0, -1.0, 1.0, 3, 3};
    auto v = evaluate_grid(m, g);
    REQUIRE(v.size() == 9);
    CHECK_THAT(v[0], Catch::Matchers::WithinAbs(-0.9993, 1e-4)); // (-1,-1)
    CHECK_THAT(v[2], Catch::Matchers::WithinAbs(0.9993, 1e-4));  // (-1, 1)
    CHECK_THAT(v[6], Catch::Matchers::WithinAbs(0.9993, 1e-4));  // ( 1,-1)
    CHECK_THAT(v[8], Catch::Matchers::WithinAbs(-0.9993, 1e-4)); // ( 1, 1)
    CHECK(v[4] == 0.0);                                          // ( 0, 0)
}

TEST_CASE("a 2x2 grid equals four direct discriminant calls") {
    auto m = xor_model();
    GridSpec g{-0.5, 0.5, -0.25, 0.75, 2, 2};
    auto v = evaluate_grid(m, g);
    REQUIRE(v.size() == 4);
    CHECK(v[0] == discriminant(m, {-0.5, -0.25}));
    CHECK(v[1] == discriminant(m, {-0.5, 0.75}));
    CHECK(v[2] == discriminant(m, {0.5, -0.25}));
    CHECK(v[3] == discriminant(m, {0.5, 0.75}));
}

TEST_CASE("grid values are stable under multiset entry reordering") {
    TrainingMultiset t1({{0.1, 0.2}, {0.5, -0.4}, {-0.3, 0.9}});
    TrainingMultiset t1r({{-0.3, 0.9}, {0.1, 0.2}, {0.5, -0.4}});
    TrainingMultiset t2({{1.0, 1.0}, {-1.0, -1.0}});
    auto a = build_model(t1, t2);
    auto b = build_model(t1r, t2);
    GridSpec g{-1.0, 1.0, -1.0, 1.0, 5, 5};
    auto va = evaluate_grid(a, g);
    auto vb = evaluate_grid(b, g);
    for (std::size_t i = 0; i < va.size(); ++i)
        CHECK_THAT(va[i], Catch::Matchers::WithinAbs(vb[i], 1e-12));
}

TEST_CASE("grid validation") {
    auto m = xor_model();
    CHECK_THROWS_AS(evaluate_grid(m, GridSpec{0, 1, 0, 1, 1, 3}), invalid_grid_error);
    CHECK_THROWS_AS(evaluate_grid(m, GridSpec{1, 0, 0, 1, 3, 3}), invalid_grid_error);
    TrainingMultiset a, b;
    a.add(FeatureVector{0.0});
    b.add(FeatureVector{1.0});
    auto m1 = build_model(a, b);
    CHECK_THROWS_AS(evaluate_grid(m1, GridSpec{0, 1, 0, 1, 3, 3}), invalid_grid_error);
}

TEST_CASE("surface export writes the documented csv and round-trips") {
    auto m = xor_model();
    GridSpec g{-0.5, 0.5, -0.5, 0.5, 2, 2};
    auto v = evaluate_grid(m, g);
    std::ostringstream out;
    export_surface(v, g, out);

    std::istringstream lines(out.str());
    std::string line;
    std::size_t count = 0;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "x1,x2,G");
    while (std::getline(lines, line)) ++count;
    CHECK(count == 4);

    std::istringstream in(out.str());
    auto parsed = parse_surface_csv(in);
    REQUIRE(parsed.size() == v.size());
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(parsed[i] == v[i]);
}

TEST_CASE("surface export surfaces sink failures") {
    auto m = xor_model();
    GridSpec g{-0.5, 0.5, -0.5, 0.5, 2, 2};
    auto v = evaluate_grid(m, g);
    std::ostringstream out;
    out.setstate(std::ios::failbit);
    CHECK_THROWS_AS(export_surface(v, g, out), sink_failure_error);
    CHECK_THROWS_AS(export_surface({1.0, 2.0}, g, out), invalid_grid_error);
}

TEST_CASE("xor surface splits into the four sign quadrants") {
    auto m = xor_model();
    GridSpec g{-1.5, 1.5, -1.5, 1.5, 61, 61};
    auto v = evaluate_grid(m, g);
    for (std::size_t i = 0; i < g.nx; ++i)
        for (std::size_t j = 0; j < g.ny; ++j) {
            double want = -g.x1_at(i) * g.x2_at(j);
            double got = v[i * g.ny + j];
            if (want > 0)
                CHECK(got > 0);
            else if (want < 0)
                CHECK(got < 0);
            else
                CHECK(got == 0.0);
        }
}

TEST_CASE("evaluation report reproduces the 40/60 reference row") {
    Dataset b1 = load_builtin("iris_setosa_versicolor");
    auto [train, test] = split_leading_fraction(b1, SplitSpec{0.4});
    RreConfig cfg;
    cfg.f = VarianceFunction::constant(20.0);
    auto [t1, t2] = train.multisets();
    auto m = build_model(std::move(t1), std::move(t2), cfg);
    auto rep = evaluate_classifier(rre_predictor(m), train, test);
    CHECK(rep.combined.train_miss == 0);
    CHECK(rep.combined.train_total == 40);
    CHECK(rep.combined.test_miss == 1);
    CHECK(rep.combined.test_total == 60);
    CHECK_THAT(rep.combined.accuracy_excluding_training(),
               Catch::Matchers::WithinAbs(0.98333333, 1e-6));
    CHECK_THAT(rep.combined.accuracy_including_training(),
               Catch::Matchers::WithinAbs(0.99, 1e-12));
    CHECK(rep.category2.test_miss == 0); // all 30 category-two test points classified
    CHECK(classify(m, {4.5, 2.3}).label == Label::category2); // the single miss
}

TEST_CASE("evaluation report arithmetic holds for every cell") {
    Dataset b1 = load_builtin("iris_setosa_versicolor");
    auto [train, test] = split_leading_fraction(b1, SplitSpec{0.6});
    auto [t1, t2] = train.multisets();
    auto m = build_model(std::move(t1), std::move(t2));
    auto rep = evaluate_classifier(rre_predictor(m), train, test);
    for (const EvalCounts* c : {&rep.category1, &rep.category2, &rep.combined}) {
        CHECK(c->accuracy_excluding_training() ==
              static_cast<double>(c->test_total - c->test_miss) / c->test_total);
        CHECK(c->accuracy_including_training() ==
              static_cast<double>(c->train_total + c->test_total - c->train_miss -
                                  c->test_miss) /
                  (c->train_total + c->test_total));
    }
    CHECK(rep.combined.train_miss == rep.category1.train_miss + rep.category2.train_miss);
    CHECK(rep.combined.test_total == rep.category1.test_total + rep.category2.test_total);
}

TEST_CASE("constant and rejecting predictors count as documented") {
    Dataset b1 = load_builtin("iris_setosa_versicolor");
    auto [train, test] = split_leading_fraction(b1, SplitSpec{0.5});
    auto rep = evaluate_classifier([](const FeatureVector&) { return Label::category1; },
                                   train, test);
    CHECK_THAT(rep.combined.accuracy_excluding_training(),
               Catch::Matchers::WithinAbs(0.5, 1e-12));

    // rejections count against accuracy
    auto rej = evaluate_classifier([](const FeatureVector&) { return Label::rejected; },
                                   train, test);
    CHECK(rej.combined.test_miss == rej.combined.test_total);
    CHECK(rej.combined.accuracy_excluding_training() == 0.0);
}

TEST_CASE("sweep reproduces the reference ratios") {
    Dataset b1 = load_builtin("iris_setosa_versicolor");
    auto sweep = sweep_splits(b1, {Algorithm::rre}, {0.1, 0.5, 0.9});
    REQUIRE(sweep.rows.size() == 3);
    CHECK(sweep.rows[0].ratio == "1:9");
    CHECK(sweep.rows[0].report.combined.test_miss == 5);
    CHECK(sweep.rows[0].report.combined.test_total == 90);
    CHECK_THAT(sweep.rows[0].report.combined.accuracy_excluding_training(),
               Catch::Matchers::WithinAbs(0.944444, 1e-5));
    CHECK(sweep.rows[1].ratio == "5:5");
    CHECK(sweep.rows[1].report.combined.test_miss == 1);
    CHECK(sweep.rows[2].ratio == "9:1");
    CHECK(sweep.rows[2].report.combined.train_miss == 0);
    CHECK(sweep.rows[2].report.combined.test_miss == 0);

    // determinism: a second run is identical
    auto again = sweep_splits(b1, {Algorithm::rre}, {0.1, 0.5, 0.9});
    for (std::size_t i = 0; i < sweep.rows.size(); ++i) {
        CHECK(again.rows[i].ratio == sweep.rows[i].ratio);
        CHECK(again.rows[i].report.combined.test_miss == sweep.rows[i].report.combined.test_miss);
    }
}

TEST_CASE("training accuracy edge cases") {
    CHECK(training_accuracy([](const FeatureVector&) { return Label::category1; }, Dataset{}) ==
          1.0);

    Dataset b2 = load_builtin("iris_versicolor_virginicaV2");
    RreConfig cfg;
    cfg.lambda = 3.5;
    cfg.f = VarianceFunction::constant(50.0);
    auto [t1, t2] = b2.multisets();
    auto m = build_model(std::move(t1), std::move(t2), cfg);
    CHECK(training_accuracy(rre_predictor(m), b2) == 1.0);
}

TEST_CASE("report renderers emit the fixed layout") {
    EvalReport rep;
    rep.category1 = {0, 20, 1, 30};
    rep.category2 = {0, 20, 0, 30};
    rep.combined = {0, 40, 1, 60};
    std::string text = format_report_text(rep);
    CHECK(text.find("category") == 0);
    CHECK(text.find("96.67%") != std::string::npos);
    CHECK(text.find("98.33%") != std::string::npos);

    std::string csv = format_report_csv(rep);
    CHECK(csv.find("category,train_miss,train_total,test_miss,test_total,acc_excl,acc_incl") == 0);
    CHECK(csv.find("both,0,40,1,60,98.33,99.00") != std::string::npos);
}
