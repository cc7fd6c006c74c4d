#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "rre/errors.hpp"
#include "rre/variance.hpp"

namespace rre {

using FeatureVector = std::vector<double>;

enum class Category { one, two };

/// Classification label; `rejected` is produced by a zero score or an active
/// rejection threshold, never by the plain sign rule on a nonzero score.
enum class Label { category1, category2, rejected };

inline Label to_label(Category c) {
    return c == Category::one ? Label::category1 : Label::category2;
}

struct DecisionOutcome {
    double score = 0.0;   // G(x)
    Label label = Label::rejected;
};

/// A category's training points with integer multiplicities. A point listed once
/// with multiplicity m contributes exactly like m copies of the same point.
class TrainingMultiset {
public:
    struct Entry {
        FeatureVector point;
        int multiplicity = 1;
    };

    TrainingMultiset() = default;

    /// Convenience: every point gets multiplicity 1.
    explicit TrainingMultiset(std::vector<FeatureVector> points) {
        entries_.reserve(points.size());
        for (auto& p : points) entries_.push_back(Entry{std::move(p), 1});
    }

    void add(FeatureVector point, int multiplicity = 1) {
        if (multiplicity < 1) throw std::invalid_argument("multiplicity must be >= 1");
        entries_.push_back(Entry{std::move(point), multiplicity});
    }

    const std::vector<Entry>& entries() const { return entries_; }
    std::vector<Entry>& entries() { return entries_; }

    bool empty() const { return entries_.empty(); }

    /// n: total multiplicity, the count the variance function sees.
    std::size_t total_count() const {
        std::size_t n = 0;
        for (const auto& e : entries_) n += static_cast<std::size_t>(e.multiplicity);
        return n;
    }

private:
    std::vector<Entry> entries_;
};

struct RreConfig {
    double lambda = 1.0;                              // sensitivity; >> 1 approaches memorization
    double p1 = 1.0;                                  // cost of choosing category one
    double p2 = 1.0;                                  // cost of choosing category two
    VarianceFunction f = VarianceFunction::identity();

    void validate() const {
        if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
        if (!(p1 > 0.0) || !(p2 > 0.0)) throw std::invalid_argument("costs must be > 0");
    }
};

/// Immutable two-category kernel-superposition model. The discriminant G is a pure
/// function of this value; mutating operations return new models.
class RreModel {
public:
    RreModel(TrainingMultiset t1, TrainingMultiset t2, RreConfig config)
        : t1_(std::move(t1)), t2_(std::move(t2)), config_(config) {
        config_.validate();
        if (t1_.empty() || t2_.empty()) throw empty_category_error();
        dimension_ = t1_.entries().front().point.size();
        if (dimension_ == 0) throw dimension_mismatch_error("points must have dimension >= 1");
        auto check = [this](const TrainingMultiset& t) {
            for (const auto& e : t.entries()) {
                if (e.point.size() != dimension_)
                    throw dimension_mismatch_error("training points disagree on dimension");
                for (double v : e.point)
                    if (!std::isfinite(v))
                        throw std::invalid_argument("training coordinates must be finite");
                if (e.multiplicity < 1)
                    throw std::invalid_argument("multiplicity must be >= 1");
            }
        };
        check(t1_);
        check(t2_);
    }

    const TrainingMultiset& t1() const { return t1_; }
    const TrainingMultiset& t2() const { return t2_; }
    const TrainingMultiset& multiset(Category c) const { return c == Category::one ? t1_ : t2_; }
    const RreConfig& config() const { return config_; }
    std::size_t dimension() const { return dimension_; }

private:
    TrainingMultiset t1_;
    TrainingMultiset t2_;
    RreConfig config_;
    std::size_t dimension_;
};

/// Training is O(1) numeric work: the model value IS the classifier.
inline RreModel build_model(TrainingMultiset t1, TrainingMultiset t2, RreConfig config = {}) {
    return RreModel(std::move(t1), std::move(t2), config);
}

namespace detail {
inline double squared_distance(const FeatureVector& a, const FeatureVector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}
} // namespace detail

/// G(x) = p2 * sum_{t1} m * exp(-lambda f(n1) |x-xi|^2)
///      - p1 * sum_{t2} m * exp(-lambda f(n2) |x-xj|^2).
/// The cost of choosing a category boosts the opposing sum.
inline double discriminant(const RreModel& model, const FeatureVector& x) {
    if (x.size() != model.dimension())
        throw dimension_mismatch_error("query point dimension does not match model");
    const RreConfig& cfg = model.config();
    const double f1 = cfg.f(model.t1().total_count());
    const double f2 = cfg.f(model.t2().total_count());
    double s1 = 0.0;
    for (const auto& e : model.t1().entries())
        s1 += e.multiplicity * std::exp(-cfg.lambda * f1 * detail::squared_distance(x, e.point));
    double s2 = 0.0;
    for (const auto& e : model.t2().entries())
        s2 += e.multiplicity * std::exp(-cfg.lambda * f2 * detail::squared_distance(x, e.point));
    return cfg.p2 * s1 - cfg.p1 * s2;
}

/// Sign rule: G > 0 -> category one, G < 0 -> category two, G == 0 -> rejected.
inline DecisionOutcome classify(const RreModel& model, const FeatureVector& x) {
    double g = discriminant(model, x);
    Label label = g > 0.0 ? Label::category1 : g < 0.0 ? Label::category2 : Label::rejected;
    return DecisionOutcome{g, label};
}

/// Rejects when |G| < tau; tau = 0 reduces exactly to classify.
inline DecisionOutcome classify_with_reject(const RreModel& model, const FeatureVector& x,
                                            double tau) {
    if (tau < 0.0) throw negative_threshold_error();
    DecisionOutcome out = classify(model, x);
    if (std::fabs(out.score) < tau) out.label = Label::rejected;
    return out;
}

} // namespace rre
