#ifndef CRIBRA_SVM_HPP
#define CRIBRA_SVM_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cribra/common.hpp"
#include "cribra/standardizer.hpp"

namespace cribra {

struct SvmConfig {
    double c = 100.0;
    double gamma = 0.1;
    double tol = 1e-3;
    int max_passes = 50; // passes without an alpha change before stopping
    std::uint64_t seed = 1;
};

// Soft-margin RBF SVM. Decision f(x) = sum_i coeff_i * K(sv_i, x) + bias
// with coeff_i = alpha_i * y_i and K(u, v) = exp(-gamma * ||u - v||^2).
struct SvmModel {
    std::vector<std::vector<double>> support_vectors; // standardized space
    std::vector<double> coeffs;                       // alpha_i * y_i
    double bias = 0;
    double gamma = 0.1;
    double c = 100.0;
    Standardizer standardizer;
    std::uint64_t seed = 1;
};

inline double rbf_kernel(const std::vector<double>& u, const std::vector<double>& v,
                         double gamma) {
    double d2 = 0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        const double d = u[k] - v[k];
        d2 += d * d;
    }
    return std::exp(-gamma * d2);
}

// Decision value in standardized space.
inline double svm_decision_standardized(const SvmModel& m, const std::vector<double>& x) {
    double f = m.bias;
    for (std::size_t i = 0; i < m.support_vectors.size(); ++i)
        f += m.coeffs[i] * rbf_kernel(m.support_vectors[i], x, m.gamma);
    return f;
}

struct SvmPrediction {
    int label; // +1 or -1
    double score;
};

inline SvmPrediction predict_svm(const SvmModel& m, const std::vector<double>& x) {
    if (x.size() != m.standardizer.means.size())
        throw DimensionMismatch("predict_svm: feature width mismatch");
    const double f = svm_decision_standardized(m, m.standardizer.apply(x));
    return {f >= 0 ? +1 : -1, f}; // zero maps to +1
}

// Platt-style SMO with seeded random second-index selection. Trains on
// internally standardized features; labels must be +-1 with both classes
// present.
inline SvmModel train_svm(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
                          const SvmConfig& cfg = {}) {
    const std::size_t n = X.size();
    if (n == 0 || y.size() != n) throw DimensionMismatch("train_svm: X/y size mismatch");
    bool has_pos = false, has_neg = false;
    for (int yi : y) (yi > 0 ? has_pos : has_neg) = true;
    if (!has_pos || !has_neg) throw SingleClassInput("train_svm: one class only");
    for (const auto& row : X)
        for (double v : row)
            if (!std::isfinite(v)) throw NonFiniteFeature("train_svm: non-finite feature");

    SvmModel model;
    model.gamma = cfg.gamma;
    model.c = cfg.c;
    model.seed = cfg.seed;
    model.standardizer = Standardizer::fit(X);
    const auto Z = model.standardizer.apply_all(X);

    // dense kernel matrix; training sets stay at modest scale
    std::vector<std::vector<double>> K(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            K[i][j] = K[j][i] = rbf_kernel(Z[i], Z[j], cfg.gamma);

    std::vector<double> alpha(n, 0.0);
    double b = 0;
    auto f_of = [&](std::size_t i) {
        double f = b;
        for (std::size_t j = 0; j < n; ++j)
            if (alpha[j] != 0) f += alpha[j] * y[j] * K[j][i];
        return f;
    };

    std::mt19937_64 rng(mix_seed(cfg.seed, 0x5103u));
    int passes = 0;
    const int hard_cap = 20000; // safety bound on total passes
    int total = 0;
    while (passes < cfg.max_passes && total < hard_cap) {
        ++total;
        int changed = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double Ei = f_of(i) - y[i];
            const bool violates = (y[i] * Ei < -cfg.tol && alpha[i] < cfg.c) ||
                                  (y[i] * Ei > cfg.tol && alpha[i] > 0);
            if (!violates) continue;
            std::size_t j = std::uniform_int_distribution<std::size_t>(0, n - 2)(rng);
            if (j >= i) ++j;
            const double Ej = f_of(j) - y[j];
            const double ai_old = alpha[i], aj_old = alpha[j];
            double L, H;
            if (y[i] != y[j]) {
                L = std::max(0.0, aj_old - ai_old);
                H = std::min(cfg.c, cfg.c + aj_old - ai_old);
            } else {
                L = std::max(0.0, ai_old + aj_old - cfg.c);
                H = std::min(cfg.c, ai_old + aj_old);
            }
            if (L >= H) continue;
            const double eta = 2 * K[i][j] - K[i][i] - K[j][j];
            if (eta >= 0) continue;
            double aj = aj_old - y[j] * (Ei - Ej) / eta;
            aj = std::min(H, std::max(L, aj));
            if (std::abs(aj - aj_old) < 1e-7) continue;
            const double ai = ai_old + y[i] * y[j] * (aj_old - aj);
            alpha[i] = ai;
            alpha[j] = aj;
            const double b1 = b - Ei - y[i] * (ai - ai_old) * K[i][i] -
                              y[j] * (aj - aj_old) * K[i][j];
            const double b2 = b - Ej - y[i] * (ai - ai_old) * K[i][j] -
                              y[j] * (aj - aj_old) * K[j][j];
            if (ai > 0 && ai < cfg.c) b = b1;
            else if (aj > 0 && aj < cfg.c) b = b2;
            else b = (b1 + b2) / 2;
            ++changed;
        }
        passes = changed == 0 ? passes + 1 : 0;
    }

    model.bias = b;
    for (std::size_t i = 0; i < n; ++i)
        if (alpha[i] > 0) {
            model.support_vectors.push_back(Z[i]);
            model.coeffs.push_back(alpha[i] * y[i]);
        }
    return model;
}

// Dual objective sum(alpha) - 1/2 sum_ij alpha_i alpha_j y_i y_j K_ij for a
// trained model, reconstructed from the stored signed coefficients.
inline double svm_dual_objective(const SvmModel& m) {
    double obj = 0;
    for (double c : m.coeffs) obj += std::abs(c);
    for (std::size_t i = 0; i < m.coeffs.size(); ++i)
        for (std::size_t j = 0; j < m.coeffs.size(); ++j)
            obj -= 0.5 * m.coeffs[i] * m.coeffs[j] *
                   rbf_kernel(m.support_vectors[i], m.support_vectors[j], m.gamma);
    return obj;
}

} // namespace cribra

#endif
