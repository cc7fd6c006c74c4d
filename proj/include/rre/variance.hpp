#pragma once

#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rre/errors.hpp"

namespace rre {

/// Variance-reduction function f(n): an increasing, strictly positive function of the
/// per-category training count that scales the Gaussian exponent. Growing f narrows
/// every kernel bump as evidence accumulates.
class VarianceFunction {
public:
    enum class Kind { identity, constant, power };

    /// f(n) = n
    static VarianceFunction identity() { return VarianceFunction(Kind::identity, 0.0, 0.0); }

    /// f(n) = c, c > 0
    static VarianceFunction constant(double c) {
        if (!(c > 0.0)) throw std::invalid_argument("constant variance function requires c > 0");
        return VarianceFunction(Kind::constant, c, 0.0);
    }

    /// f(n) = a * n^b, a > 0, b > 0
    static VarianceFunction power(double a, double b) {
        if (!(a > 0.0) || !(b > 0.0))
            throw std::invalid_argument("power variance function requires a > 0 and b > 0");
        return VarianceFunction(Kind::power, a, b);
    }

    double operator()(std::size_t n) const {
        switch (kind_) {
        case Kind::identity: return static_cast<double>(n);
        case Kind::constant: return a_;
        case Kind::power:    return a_ * std::pow(static_cast<double>(n), b_);
        }
        return 0.0; // unreachable
    }

    Kind kind() const { return kind_; }
    double a() const { return a_; }
    double b() const { return b_; }

    bool operator==(const VarianceFunction&) const = default;

    /// Textual form used by snapshots and CLI flags: identity | const:<c> | pow:<a>:<b>
    std::string to_string() const;
    static VarianceFunction parse(const std::string& text);

private:
    VarianceFunction(Kind kind, double a, double b) : kind_(kind), a_(a), b_(b) {}

    Kind kind_;
    double a_;
    double b_;
};

namespace detail {
inline std::string format_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
} // namespace detail

inline std::string VarianceFunction::to_string() const {
    switch (kind_) {
    case Kind::identity: return "identity";
    case Kind::constant: return "const:" + detail::format_full(a_);
    case Kind::power:    return "pow:" + detail::format_full(a_) + ":" + detail::format_full(b_);
    }
    return {};
}

inline VarianceFunction VarianceFunction::parse(const std::string& text) {
    if (text == "identity") return identity();
    if (text.rfind("const:", 0) == 0) {
        std::size_t pos = 0;
        double c = std::stod(text.substr(6), &pos);
        if (pos != text.size() - 6) throw parse_error("bad variance function: " + text);
        return constant(c);
    }
    if (text.rfind("pow:", 0) == 0) {
        std::string rest = text.substr(4);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw parse_error("bad variance function: " + text);
        return power(std::stod(rest.substr(0, colon)), std::stod(rest.substr(colon + 1)));
    }
    throw parse_error("bad variance function: " + text);
}

} // namespace rre
