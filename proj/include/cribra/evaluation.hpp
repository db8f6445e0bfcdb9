#ifndef CRIBRA_EVALUATION_HPP
#define CRIBRA_EVALUATION_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cribra/common.hpp"
#include "cribra/manifest.hpp"

namespace cribra {

enum class Role { Train, Validation, Test };

inline std::string role_name(Role r) {
    switch (r) {
        case Role::Train: return "train";
        case Role::Validation: return "validation";
        default: return "test";
    }
}

// Three disjoint patient sets with the fixed role rotation:
//   fold 1: S1=Train S2=Validation S3=Test
//   fold 2: S1=Validation S2=Test S3=Train
//   fold 3: S1=Test S2=Train S3=Validation
struct FoldPlan {
    std::array<std::vector<std::string>, 3> sets;

    // which set holds `role` in fold `fold` (both 0-based)
    static int set_for_role(int fold, Role role) {
        static constexpr int table[3][3] = {
            // Train, Validation, Test
            {0, 1, 2},
            {2, 0, 1},
            {1, 2, 0},
        };
        return table[fold][static_cast<int>(role)];
    }

    const std::vector<std::string>& patients(int fold, Role role) const {
        return sets[static_cast<std::size_t>(set_for_role(fold, role))];
    }
};

inline FoldPlan build_fold_plan(const std::vector<ManifestRow>& manifest,
                                const std::array<std::vector<std::string>, 3>& sets_config) {
    std::map<std::string, int> membership;
    std::vector<std::string> overlaps;
    for (int s = 0; s < 3; ++s)
        for (const auto& p : sets_config[static_cast<std::size_t>(s)]) {
            auto [it, inserted] = membership.emplace(p, s);
            if (!inserted) overlaps.push_back(p);
        }
    if (!overlaps.empty()) {
        std::string msg = "patients assigned to multiple sets:";
        for (const auto& p : overlaps) msg += " " + p;
        throw PatientOverlap(msg);
    }
    std::vector<std::string> unassigned;
    std::set<std::string> seen;
    for (const auto& row : manifest)
        if (!membership.count(row.patient_id) && seen.insert(row.patient_id).second)
            unassigned.push_back(row.patient_id);
    if (!unassigned.empty()) {
        std::string msg = "patients not assigned to any set:";
        for (const auto& p : unassigned) msg += " " + p;
        throw UnassignedPatient(msg);
    }
    FoldPlan plan;
    plan.sets = sets_config;
    return plan;
}

struct SampledSplit {
    std::vector<std::string> train, validation, test; // tile ids
    std::array<std::size_t, 2> train_counts{}, validation_counts{}, test_counts{};
};

namespace detail {

inline std::vector<std::string> sample_role(const std::vector<ManifestRow>& manifest,
                                            const std::vector<std::string>& patients,
                                            std::size_t n_per_class, std::uint64_t seed,
                                            const std::string& role_tag,
                                            const std::set<std::string>* exclude = nullptr) {
    const std::set<std::string> pset(patients.begin(), patients.end());
    std::array<std::vector<std::string>, 2> pools; // [neg, pos]
    for (const auto& r : manifest) {
        if (!pset.count(r.patient_id)) continue;
        if (exclude && exclude->count(r.tile_id)) continue;
        if (r.label == Label::Cribriform) pools[1].push_back(r.tile_id);
        else if (r.label == Label::NonCribriform) pools[0].push_back(r.tile_id);
    }
    std::vector<std::string> out;
    for (int cls = 0; cls < 2; ++cls) {
        auto& pool = pools[static_cast<std::size_t>(cls)];
        if (pool.size() < n_per_class)
            throw InsufficientTiles("role " + role_tag + ", class " +
                                    (cls ? std::string("cribriform")
                                         : std::string("non_cribriform")) +
                                    ": need " + std::to_string(n_per_class) + ", have " +
                                    std::to_string(pool.size()));
        std::sort(pool.begin(), pool.end()); // manifest-order independence
        std::uint64_t tag = 1469598103934665603ULL; // FNV-1a, stable across platforms
        for (char ch : role_tag) tag = (tag ^ static_cast<unsigned char>(ch)) * 1099511628211ULL;
        std::mt19937_64 rng(mix_seed(seed, tag, static_cast<std::uint64_t>(cls)));
        std::shuffle(pool.begin(), pool.end(), rng);
        out.insert(out.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n_per_class));
    }
    return out;
}

} // namespace detail

// Seeded uniform class-balanced sampling without replacement within each
// role's patient set. Deterministic per (seed, fold).
inline SampledSplit sample_balanced(const std::vector<ManifestRow>& manifest,
                                    const FoldPlan& plan, int fold, std::size_t n_per_class,
                                    std::uint64_t seed) {
    SampledSplit split;
    const std::uint64_t fold_seed = mix_seed(seed, static_cast<std::uint64_t>(fold));
    split.train = detail::sample_role(manifest, plan.patients(fold, Role::Train), n_per_class,
                                      fold_seed, "train");
    split.validation = detail::sample_role(manifest, plan.patients(fold, Role::Validation),
                                           n_per_class, fold_seed, "validation");
    split.test = detail::sample_role(manifest, plan.patients(fold, Role::Test), n_per_class,
                                     fold_seed, "test");
    split.train_counts = {n_per_class, n_per_class};
    split.validation_counts = {n_per_class, n_per_class};
    split.test_counts = {n_per_class, n_per_class};
    return split;
}

// The additional unseen test split: same patients as the fold's Test role,
// restricted to tiles never used in the cross-validated study.
inline SampledSplit build_unseen_test(const std::vector<ManifestRow>& manifest,
                                      const FoldPlan& plan, int fold,
                                      const std::set<std::string>& used_ids,
                                      std::size_t n_per_class, std::uint64_t seed) {
    SampledSplit split;
    const std::uint64_t fold_seed = mix_seed(seed, static_cast<std::uint64_t>(fold), 0x5EEDu);
    split.test = detail::sample_role(manifest, plan.patients(fold, Role::Test), n_per_class,
                                     fold_seed, "unseen_test", &used_ids);
    split.test_counts = {n_per_class, n_per_class};
    return split;
}

struct ConfusionMatrix {
    std::size_t tp = 0, tn = 0, fp = 0, fn = 0;
    double accuracy() const {
        const std::size_t total = tp + tn + fp + fn;
        return total ? static_cast<double>(tp + tn) / static_cast<double>(total) : 0.0;
    }
};

struct FoldReport {
    std::vector<double> fold_accuracies;
    std::vector<double> fold_validation_accuracies;
    std::vector<ConfusionMatrix> confusions;
    double mean = 0;
    double sample_std = 0;     // divide by n-1
    double standard_error = 0; // sample_std / sqrt(n)
};

inline void finalize_report(FoldReport& rep) {
    const std::size_t n = rep.fold_accuracies.size();
    rep.mean = 0;
    for (double a : rep.fold_accuracies) rep.mean += a;
    rep.mean /= static_cast<double>(n);
    double var = 0;
    for (double a : rep.fold_accuracies) var += (a - rep.mean) * (a - rep.mean);
    rep.sample_std = n > 1 ? std::sqrt(var / static_cast<double>(n - 1)) : 0.0;
    rep.standard_error = rep.sample_std / std::sqrt(static_cast<double>(n));
}

// A model recipe binds training and prediction for one fold: fit on the
// train rows, optionally use the validation rows, return +-1 predictions
// aligned with test_x (and val_x, when validation accuracy is reported).
struct FoldRunResult {
    std::vector<int> test_predictions;
    std::vector<int> validation_predictions; // may be empty
};

struct ModelRecipe {
    std::function<FoldRunResult(const std::vector<std::vector<double>>& train_x,
                                const std::vector<int>& train_y,
                                const std::vector<std::vector<double>>& val_x,
                                const std::vector<int>& val_y,
                                const std::vector<std::vector<double>>& test_x)>
        run;
};

// Cross-validated run over the fold plan. `rows_by_id` carries the feature
// (or fused) row of every sampled tile; labels are +-1.
inline FoldReport run_cv(const std::vector<ManifestRow>& manifest, const FoldPlan& plan,
                         const std::map<std::string, std::vector<double>>& rows_by_id,
                         std::size_t n_per_class, std::uint64_t seed, const ModelRecipe& recipe) {
    FoldReport rep;
    std::map<std::string, int> label_by_id;
    for (const auto& r : manifest)
        label_by_id[r.tile_id] = r.label == Label::Cribriform ? +1 : -1;

    auto gather = [&](const std::vector<std::string>& ids,
                      std::vector<std::vector<double>>& X, std::vector<int>& y) {
        for (const auto& id : ids) {
            auto it = rows_by_id.find(id);
            if (it == rows_by_id.end())
                throw ConfigError("no feature row for sampled tile " + id);
            X.push_back(it->second);
            y.push_back(label_by_id.at(id));
        }
    };

    for (int fold = 0; fold < 3; ++fold) {
        const SampledSplit split = sample_balanced(manifest, plan, fold, n_per_class, seed);
        std::vector<std::vector<double>> trX, vaX, teX;
        std::vector<int> trY, vaY, teY;
        gather(split.train, trX, trY);
        gather(split.validation, vaX, vaY);
        gather(split.test, teX, teY);

        const FoldRunResult res = recipe.run(trX, trY, vaX, vaY, teX);
        ConfusionMatrix cm;
        for (std::size_t i = 0; i < res.test_predictions.size(); ++i) {
            if (teY[i] > 0) (res.test_predictions[i] > 0 ? cm.tp : cm.fn)++;
            else (res.test_predictions[i] > 0 ? cm.fp : cm.tn)++;
        }
        rep.confusions.push_back(cm);
        rep.fold_accuracies.push_back(cm.accuracy());

        if (!res.validation_predictions.empty()) {
            std::size_t hits = 0;
            for (std::size_t i = 0; i < res.validation_predictions.size(); ++i)
                if (res.validation_predictions[i] == vaY[i]) ++hits;
            rep.fold_validation_accuracies.push_back(
                static_cast<double>(hits) /
                static_cast<double>(res.validation_predictions.size()));
        }
    }
    finalize_report(rep);
    return rep;
}

} // namespace cribra

#endif
