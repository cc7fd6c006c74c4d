#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "rre/datasets.hpp"
#include "rre/perceptron.hpp"
#include "rre/snapshot.hpp"
#include "rre/xor_net.hpp"

using namespace rre;

TEST_CASE("model snapshots round-trip exactly") {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    for (int trial = 0; trial < 10; ++trial) {
        TrainingMultiset t1, t2;
        t1.add({coord(rng), coord(rng)}, 2);
        t1.add({coord(rng), coord(rng)}, 1);
        t2.add({coord(rng), coord(rng)}, 3);
        RreConfig cfg;
        cfg.lambda = 0.37 + trial * 0.11;
        cfg.p1 = 1.25;
        cfg.p2 = 0.75;
        cfg.f = trial % 2 ? VarianceFunction::constant(7.5)
                          : VarianceFunction::power(1.5, 0.5);
        auto m = build_model(t1, t2, cfg);

        std::ostringstream out;
        save_model(out, m);
        std::istringstream in(out.str());
        auto loaded = load_model(in);

        CHECK(loaded.config().lambda == m.config().lambda);
        CHECK(loaded.config().p1 == m.config().p1);
        CHECK(loaded.config().f == m.config().f);
        REQUIRE(loaded.t1().entries().size() == m.t1().entries().size());
        for (std::size_t i = 0; i < m.t1().entries().size(); ++i) {
            CHECK(loaded.t1().entries()[i].point == m.t1().entries()[i].point);
            CHECK(loaded.t1().entries()[i].multiplicity == m.t1().entries()[i].multiplicity);
        }
        // a second serialization is byte-identical
        std::ostringstream out2;
        save_model(out2, loaded);
        CHECK(out2.str() == out.str());
        // and the discriminant agrees bit for bit
        for (int probe = 0; probe < 5; ++probe) {
            FeatureVector x{coord(rng), coord(rng)};
            CHECK(discriminant(loaded, x) == discriminant(m, x));
        }
    }
}

TEST_CASE("model snapshot header is the documented line") {
    auto [t1, t2] = load_builtin("xor").multisets();
    auto m = build_model(std::move(t1), std::move(t2));
    std::ostringstream out;
    save_model(out, m);
    std::istringstream lines(out.str());
    std::string header;
    REQUIRE(std::getline(lines, header));
    CHECK(header == "rre v1 dim=2 lambda=1 p1=1 p2=1 f=identity");
    std::string entry;
    REQUIRE(std::getline(lines, entry));
    CHECK(entry == "1 1 -1 1");
}

TEST_CASE("model snapshot parser rejects malformed input") {
    std::istringstream empty("");
    CHECK_THROWS_AS(load_model(empty), parse_error);
    std::istringstream bad("xyz v1 dim=2\n");
    CHECK_THROWS_AS(load_model(bad), parse_error);
    std::istringstream short_entry("rre v1 dim=2 lambda=1 p1=1 p2=1 f=identity\n1 1 0.5\n");
    CHECK_THROWS_AS(load_model(short_entry), parse_error);
}

TEST_CASE("variance function text forms parse back") {
    for (const auto& f : {VarianceFunction::identity(), VarianceFunction::constant(20.0),
                          VarianceFunction::power(2.5, 0.75)})
        CHECK(VarianceFunction::parse(f.to_string()) == f);
    CHECK_THROWS_AS(VarianceFunction::parse("quadratic"), parse_error);
    CHECK_THROWS_AS(VarianceFunction::parse("const:-3"), std::invalid_argument);
}

TEST_CASE("perceptron snapshot carries the weight line") {
    std::vector<AugmentedRow> rows = {AugmentedRow{{1.0, 0.5, 0.5}},
                                      AugmentedRow{{-1.0, 1.0, 3.0}}};
    auto res = train_perceptron(rows);
    std::ostringstream out;
    save_perceptron_text(out, res, PerceptronConfig{});
    std::istringstream lines(out.str());
    std::string header, weights;
    REQUIRE(std::getline(lines, header));
    REQUIRE(std::getline(lines, weights));
    CHECK(header.rfind("pca v1 dim=2 eta=0.01", 0) == 0);
    CHECK(header.find("converged=1") != std::string::npos);
    CHECK(weights == "a 0 0 1");
}

TEST_CASE("nn snapshot carries weights and outputs") {
    NnConfig cfg;
    cfg.max_epochs = 5; // capped run; snapshot format is what matters here
    auto res = train_xor_nn(cfg);
    std::ostringstream out;
    save_nn_text(out, res, cfg);
    std::string text = out.str();
    CHECK(text.rfind("nn221 v1 eta=0.1", 0) == 0);
    CHECK(text.find("epochs=5") != std::string::npos);
    size_t wh_count = 0, pos = 0;
    while ((pos = text.find("\nwh ", pos)) != std::string::npos) {
        ++wh_count;
        ++pos;
    }
    CHECK(wh_count == 3);
    CHECK(text.find("\nwo ") != std::string::npos);
    CHECK(text.find("\nz ") != std::string::npos);
}

TEST_CASE("learning curves export as the two-column csv") {
    std::ostringstream out;
    write_curve_csv(out, {1.5, 0.25});
    CHECK(out.str() == "iter,value\n1,1.5\n2,0.25\n");
}
