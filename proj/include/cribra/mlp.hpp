#ifndef CRIBRA_MLP_HPP
#define CRIBRA_MLP_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "cribra/common.hpp"
#include "cribra/standardizer.hpp"

namespace cribra {

struct MlpConfig {
    std::vector<int> hidden = {512, 128};
    int epochs = 10000;
    double lr = 1e-3;
    double momentum = 0.9;
    int batch = 32;
    std::uint64_t seed = 1;
};

// Feed-forward net: rectifier hidden layers, softmax output over 2 classes,
// trained with mini-batch gradient descent with momentum on cross-entropy.
struct MlpModel {
    std::vector<int> layer_dims; // [input, hidden..., 2]
    // weights[l] has dims layer_dims[l+1] x layer_dims[l], row-major
    std::vector<std::vector<double>> weights;
    std::vector<std::vector<double>> biases;
    Standardizer standardizer;
    std::uint64_t seed = 1;
    std::vector<double> epoch_losses;
};

namespace detail {

inline void mlp_forward(const MlpModel& m, const std::vector<double>& x,
                        std::vector<std::vector<double>>& activations) {
    activations.assign(m.layer_dims.size(), {});
    activations[0] = x;
    for (std::size_t l = 0; l + 1 < m.layer_dims.size(); ++l) {
        const int in = m.layer_dims[l], out = m.layer_dims[l + 1];
        std::vector<double>& a = activations[l + 1];
        a.assign(static_cast<std::size_t>(out), 0);
        const std::vector<double>& prev = activations[l];
        for (int o = 0; o < out; ++o) {
            double z = m.biases[l][static_cast<std::size_t>(o)];
            const double* wrow = m.weights[l].data() + static_cast<std::size_t>(o) * in;
            for (int i = 0; i < in; ++i) z += wrow[i] * prev[static_cast<std::size_t>(i)];
            a[static_cast<std::size_t>(o)] = z;
        }
        const bool last = l + 2 == m.layer_dims.size();
        if (!last)
            for (double& v : a) v = std::max(0.0, v);
    }
}

inline std::vector<double> softmax(const std::vector<double>& logits) {
    const double mx = *std::max_element(logits.begin(), logits.end());
    std::vector<double> p(logits.size());
    double sum = 0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        p[i] = std::exp(logits[i] - mx);
        sum += p[i];
    }
    for (double& v : p) v /= sum;
    return p;
}

} // namespace detail

struct MlpPrediction {
    int label; // 0 or 1
    std::vector<double> probabilities;
};

// Forward pass in standardized space (no standardizer applied).
inline std::vector<double> mlp_probabilities_standardized(const MlpModel& m,
                                                          const std::vector<double>& x) {
    std::vector<std::vector<double>> acts;
    detail::mlp_forward(m, x, acts);
    return detail::softmax(acts.back());
}

inline MlpPrediction predict_mlp(const MlpModel& m, const std::vector<double>& row) {
    if (static_cast<int>(row.size()) != m.layer_dims.front())
        throw DimensionMismatch("predict_mlp: feature width mismatch");
    const auto p = mlp_probabilities_standardized(m, m.standardizer.apply(row));
    return {p[1] > p[0] ? 1 : 0, p}; // tie goes to class 0
}

// Mean cross-entropy loss and parameter gradients over a batch, all in
// standardized space. Shared by training and the finite-difference check.
inline double mlp_loss_and_gradients(const MlpModel& m,
                                     const std::vector<std::vector<double>>& batch,
                                     const std::vector<int>& labels,
                                     std::vector<std::vector<double>>* grad_w,
                                     std::vector<std::vector<double>>* grad_b) {
    const std::size_t L = m.weights.size();
    if (grad_w) {
        grad_w->resize(L);
        grad_b->resize(L);
        for (std::size_t l = 0; l < L; ++l) {
            (*grad_w)[l].assign(m.weights[l].size(), 0);
            (*grad_b)[l].assign(m.biases[l].size(), 0);
        }
    }
    double loss = 0;
    std::vector<std::vector<double>> acts;
    for (std::size_t s = 0; s < batch.size(); ++s) {
        detail::mlp_forward(m, batch[s], acts);
        const auto p = detail::softmax(acts.back());
        const std::size_t target = static_cast<std::size_t>(labels[s]);
        loss += -std::log(std::max(p[target], 1e-300));
        if (!grad_w) continue;

        // delta at output = p - onehot
        std::vector<double> delta = p;
        delta[target] -= 1.0;
        for (std::size_t l = L; l-- > 0;) {
            const int in = m.layer_dims[l], out = m.layer_dims[l + 1];
            const std::vector<double>& a_in = acts[l];
            for (int o = 0; o < out; ++o) {
                const double d = delta[static_cast<std::size_t>(o)];
                (*grad_b)[l][static_cast<std::size_t>(o)] += d;
                double* gw = (*grad_w)[l].data() + static_cast<std::size_t>(o) * in;
                for (int i = 0; i < in; ++i) gw[i] += d * a_in[static_cast<std::size_t>(i)];
            }
            if (l == 0) break;
            std::vector<double> prev_delta(static_cast<std::size_t>(in), 0);
            for (int o = 0; o < out; ++o) {
                const double d = delta[static_cast<std::size_t>(o)];
                const double* wrow = m.weights[l].data() + static_cast<std::size_t>(o) * in;
                for (int i = 0; i < in; ++i) prev_delta[static_cast<std::size_t>(i)] += d * wrow[i];
            }
            // rectifier gate
            for (int i = 0; i < in; ++i)
                if (acts[l][static_cast<std::size_t>(i)] <= 0)
                    prev_delta[static_cast<std::size_t>(i)] = 0;
            delta = std::move(prev_delta);
        }
    }
    const double inv = 1.0 / static_cast<double>(batch.size());
    loss *= inv;
    if (grad_w)
        for (std::size_t l = 0; l < L; ++l) {
            for (double& g : (*grad_w)[l]) g *= inv;
            for (double& g : (*grad_b)[l]) g *= inv;
        }
    return loss;
}

inline MlpModel init_mlp(int input_dim, const MlpConfig& cfg) {
    MlpModel m;
    m.seed = cfg.seed;
    m.layer_dims.push_back(input_dim);
    for (int h : cfg.hidden) m.layer_dims.push_back(h);
    m.layer_dims.push_back(2);
    std::mt19937_64 rng(mix_seed(cfg.seed, 0x313Cu));
    for (std::size_t l = 0; l + 1 < m.layer_dims.size(); ++l) {
        const int in = m.layer_dims[l], out = m.layer_dims[l + 1];
        const double bound = std::sqrt(1.0 / in); // scaled uniform fan-in
        std::uniform_real_distribution<double> dist(-bound, bound);
        std::vector<double> w(static_cast<std::size_t>(in) * out);
        for (double& v : w) v = dist(rng);
        m.weights.push_back(std::move(w));
        m.biases.emplace_back(static_cast<std::size_t>(out), 0.0);
    }
    return m;
}

// Train with seeded shuffling; when a validation split is given, the
// returned parameters are the best-validation-accuracy snapshot, otherwise
// the final epoch.
inline MlpModel train_mlp(const std::vector<std::vector<double>>& rows,
                          const std::vector<int>& labels, const MlpConfig& cfg = {},
                          const std::vector<std::vector<double>>* val_rows = nullptr,
                          const std::vector<int>* val_labels = nullptr) {
    if (rows.empty() || rows.size() != labels.size())
        throw DimensionMismatch("train_mlp: rows/labels mismatch");
    bool c0 = false, c1 = false;
    for (int l : labels) (l ? c1 : c0) = true;
    if (!c0 || !c1) throw SingleClassInput("train_mlp: one class only");

    MlpModel m = init_mlp(static_cast<int>(rows[0].size()), cfg);
    m.standardizer = Standardizer::fit(rows);
    const auto Z = m.standardizer.apply_all(rows);
    std::vector<std::vector<double>> Zval;
    if (val_rows) Zval = m.standardizer.apply_all(*val_rows);

    std::vector<std::vector<double>> vel_w, vel_b;
    vel_w.resize(m.weights.size());
    vel_b.resize(m.biases.size());
    for (std::size_t l = 0; l < m.weights.size(); ++l) {
        vel_w[l].assign(m.weights[l].size(), 0);
        vel_b[l].assign(m.biases[l].size(), 0);
    }

    std::mt19937_64 rng(mix_seed(cfg.seed, 0x313Du));
    std::vector<std::size_t> index(Z.size());
    std::iota(index.begin(), index.end(), 0);

    MlpModel best = m;
    double best_val_acc = -1;
    std::vector<std::vector<double>> gw, gb;
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        std::shuffle(index.begin(), index.end(), rng);
        double epoch_loss = 0;
        std::size_t batches = 0;
        for (std::size_t start = 0; start < index.size();
             start += static_cast<std::size_t>(cfg.batch)) {
            const std::size_t end =
                std::min(index.size(), start + static_cast<std::size_t>(cfg.batch));
            std::vector<std::vector<double>> bx;
            std::vector<int> by;
            bx.reserve(end - start);
            for (std::size_t k = start; k < end; ++k) {
                bx.push_back(Z[index[k]]);
                by.push_back(labels[index[k]]);
            }
            const double loss = mlp_loss_and_gradients(m, bx, by, &gw, &gb);
            if (!std::isfinite(loss))
                throw NonFiniteLoss("train_mlp: loss diverged at epoch " +
                                    std::to_string(epoch) + "; try a lower lr");
            epoch_loss += loss;
            ++batches;
            for (std::size_t l = 0; l < m.weights.size(); ++l) {
                for (std::size_t k = 0; k < m.weights[l].size(); ++k) {
                    vel_w[l][k] = cfg.momentum * vel_w[l][k] - cfg.lr * gw[l][k];
                    m.weights[l][k] += vel_w[l][k];
                }
                for (std::size_t k = 0; k < m.biases[l].size(); ++k) {
                    vel_b[l][k] = cfg.momentum * vel_b[l][k] - cfg.lr * gb[l][k];
                    m.biases[l][k] += vel_b[l][k];
                }
            }
        }
        m.epoch_losses.push_back(epoch_loss / static_cast<double>(batches ? batches : 1));

        if (val_rows && !Zval.empty()) {
            std::size_t hits = 0;
            for (std::size_t i = 0; i < Zval.size(); ++i) {
                const auto p = mlp_probabilities_standardized(m, Zval[i]);
                const int pred = p[1] > p[0] ? 1 : 0;
                if (pred == (*val_labels)[i]) ++hits;
            }
            const double acc = static_cast<double>(hits) / static_cast<double>(Zval.size());
            if (acc > best_val_acc) {
                best_val_acc = acc;
                best = m;
                best.epoch_losses.clear();
            }
        }
    }
    if (val_rows && best_val_acc >= 0) {
        best.epoch_losses = m.epoch_losses;
        return best;
    }
    return m;
}

} // namespace cribra

#endif
