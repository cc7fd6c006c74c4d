#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "rre/errors.hpp"
#include "rre/model.hpp"
#include "rre/variance.hpp"

namespace rre {

// Model snapshot, line oriented:
//   rre v1 dim=<d> lambda=<v> p1=<v> p2=<v> f=<identity|const:<c>|pow:<a>:<b>>
//   <1|2> <m> <coord_0> ... <coord_{d-1}>
// Floats are written with 17 significant digits so a round trip is exact.

inline void save_model(std::ostream& out, const RreModel& model) {
    const RreConfig& cfg = model.config();
    out << "rre v1 dim=" << model.dimension() << " lambda=" << detail::format_full(cfg.lambda)
        << " p1=" << detail::format_full(cfg.p1) << " p2=" << detail::format_full(cfg.p2)
        << " f=" << cfg.f.to_string() << "\n";
    for (Category cat : {Category::one, Category::two})
        for (const auto& e : model.multiset(cat).entries()) {
            out << (cat == Category::one ? 1 : 2) << ' ' << e.multiplicity;
            for (double v : e.point) out << ' ' << detail::format_full(v);
            out << "\n";
        }
}

namespace detail {
inline std::string expect_key(std::istringstream& in, const std::string& key) {
    std::string tok;
    if (!(in >> tok) || tok.rfind(key + "=", 0) != 0)
        throw parse_error("model snapshot: expected " + key + "=...");
    return tok.substr(key.size() + 1);
}
} // namespace detail

inline RreModel load_model(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw parse_error("model snapshot: empty input");
    std::istringstream header(line);
    std::string magic, version;
    header >> magic >> version;
    if (magic != "rre" || version != "v1")
        throw parse_error("model snapshot: bad header: " + line);
    const std::size_t dim = std::stoul(detail::expect_key(header, "dim"));
    RreConfig cfg;
    cfg.lambda = std::stod(detail::expect_key(header, "lambda"));
    cfg.p1 = std::stod(detail::expect_key(header, "p1"));
    cfg.p2 = std::stod(detail::expect_key(header, "p2"));
    cfg.f = VarianceFunction::parse(detail::expect_key(header, "f"));

    TrainingMultiset t1, t2;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int cat = 0, mult = 0;
        if (!(ls >> cat >> mult) || (cat != 1 && cat != 2))
            throw parse_error("model snapshot: bad entry line: " + line);
        FeatureVector p;
        double v;
        while (ls >> v) p.push_back(v);
        if (p.size() != dim) throw parse_error("model snapshot: entry dimension mismatch");
        (cat == 1 ? t1 : t2).add(std::move(p), mult);
    }
    return RreModel(std::move(t1), std::move(t2), cfg);
}

} // namespace rre
