#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rre/model.hpp"

namespace rre {

struct ReinforceResult {
    RreModel model;
    int rounds_used = 0;
    bool converged = false;
};

namespace detail {

struct LabeledPoint {
    FeatureVector point;
    Category truth;
};

inline std::vector<LabeledPoint> training_points(const RreModel& model) {
    std::vector<LabeledPoint> pts;
    for (const auto& e : model.t1().entries()) pts.push_back({e.point, Category::one});
    for (const auto& e : model.t2().entries()) pts.push_back({e.point, Category::two});
    return pts;
}

inline bool classifies_all(const RreModel& model, const std::vector<LabeledPoint>& pts) {
    for (const auto& p : pts)
        if (classify(model, p.point).label != to_label(p.truth)) return false;
    return true;
}

} // namespace detail

/// Extra supervised training: per round, classify every training point and add one
/// multiplicity to each miss in its true multiset. Stops at 100% training
/// classification or after max_rounds. Sensitivity adjustment is left to the caller.
inline ReinforceResult reinforce_training(const RreModel& model, int max_rounds = 100) {
    if (max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
    TrainingMultiset t1 = model.t1();
    TrainingMultiset t2 = model.t2();
    const RreConfig cfg = model.config();

    int rounds = 0;
    while (true) {
        RreModel current(t1, t2, cfg);
        std::vector<std::pair<Category, std::size_t>> misses;
        for (Category cat : {Category::one, Category::two}) {
            const auto& entries = current.multiset(cat).entries();
            for (std::size_t i = 0; i < entries.size(); ++i)
                if (classify(current, entries[i].point).label != to_label(cat))
                    misses.emplace_back(cat, i);
        }
        if (misses.empty()) return ReinforceResult{std::move(current), rounds, true};
        if (rounds == max_rounds) return ReinforceResult{std::move(current), rounds, false};
        ++rounds;
        for (auto [cat, i] : misses)
            (cat == Category::one ? t1 : t2).entries()[i].multiplicity += 1;
    }
}

/// Adds x once to the multiset of `label`. With equal costs this cancels one prior
/// occurrence of x in the opposite multiset term-for-term (exactly so when f is
/// held constant); a second call enforces the new category outright.
inline RreModel enforce_label(const RreModel& model, const FeatureVector& x, Category label) {
    if (x.size() != model.dimension())
        throw dimension_mismatch_error("point dimension does not match model");
    TrainingMultiset t1 = model.t1();
    TrainingMultiset t2 = model.t2();
    (label == Category::one ? t1 : t2).add(x, 1);
    return RreModel(std::move(t1), std::move(t2), model.config());
}

/// Unsupervised growth: classify x, then append it to the winning multiset.
/// Rejected outcomes leave the model unchanged.
inline std::pair<DecisionOutcome, RreModel> incremental_classify(const RreModel& model,
                                                                 const FeatureVector& x) {
    DecisionOutcome out = classify(model, x);
    if (out.label == Label::rejected) return {out, model};
    return {out, enforce_label(model, x,
                               out.label == Label::category1 ? Category::one : Category::two)};
}

/// Position of a training entry, for filter ordering.
struct EntryRef {
    Category cat;
    std::size_t index;
};

/// Input order of t1 entries followed by t2 entries.
inline std::vector<EntryRef> default_filter_order(const RreModel& model) {
    std::vector<EntryRef> order;
    for (std::size_t i = 0; i < model.t1().entries().size(); ++i)
        order.push_back({Category::one, i});
    for (std::size_t i = 0; i < model.t2().entries().size(); ++i)
        order.push_back({Category::two, i});
    return order;
}

/// Training-set pruning. Visits entries in `order`; each visit drops one multiplicity
/// and keeps the drop only if every ORIGINAL training point (including the dropped
/// one) still classifies correctly under the reduced model. The result depends on
/// the visiting order. O(n^2) discriminant evaluations in the training count.
inline RreModel filter_redundant(const RreModel& model, const std::vector<EntryRef>& order) {
    const auto originals = detail::training_points(model);
    if (!detail::classifies_all(model, originals)) throw filter_precondition_error();

    // Work on multiplicity counters; entries at zero are excluded from the working
    // model and dropped at the end.
    TrainingMultiset t1 = model.t1();
    TrainingMultiset t2 = model.t2();
    const RreConfig cfg = model.config();

    auto live_model = [&]() {
        TrainingMultiset a, b;
        for (const auto& e : t1.entries())
            if (e.multiplicity > 0) a.add(e.point, e.multiplicity);
        for (const auto& e : t2.entries())
            if (e.multiplicity > 0) b.add(e.point, e.multiplicity);
        return RreModel(std::move(a), std::move(b), cfg);
    };

    for (const EntryRef& ref : order) {
        TrainingMultiset& t = ref.cat == Category::one ? t1 : t2;
        auto& entry = t.entries().at(ref.index);
        if (entry.multiplicity == 0) continue;
        std::size_t live = 0;
        for (const auto& e : t.entries()) live += static_cast<std::size_t>(e.multiplicity);
        if (live <= 1) continue; // removal would empty the category
        entry.multiplicity -= 1;
        if (!detail::classifies_all(live_model(), originals)) entry.multiplicity += 1;
    }
    return live_model();
}

inline RreModel filter_redundant(const RreModel& model) {
    return filter_redundant(model, default_filter_order(model));
}

} // namespace rre
