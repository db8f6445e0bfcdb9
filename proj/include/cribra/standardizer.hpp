#ifndef CRIBRA_STANDARDIZER_HPP
#define CRIBRA_STANDARDIZER_HPP

#include <cmath>
#include <vector>

#include "cribra/common.hpp"

namespace cribra {

// Column-wise z-score transform fitted on the training split only.
// Zero-variance columns get std 1 so they standardize to a constant.
struct Standardizer {
    std::vector<double> means;
    std::vector<double> stds;
    std::vector<int> constant_columns;

    static Standardizer fit(const std::vector<std::vector<double>>& rows) {
        if (rows.empty()) throw EmptyInput("Standardizer::fit: no rows");
        const std::size_t d = rows[0].size();
        Standardizer s;
        s.means.assign(d, 0);
        s.stds.assign(d, 0);
        for (const auto& r : rows) {
            if (r.size() != d) throw DimensionMismatch("Standardizer::fit: ragged rows");
            for (std::size_t j = 0; j < d; ++j) s.means[j] += r[j];
        }
        for (std::size_t j = 0; j < d; ++j) s.means[j] /= static_cast<double>(rows.size());
        for (const auto& r : rows)
            for (std::size_t j = 0; j < d; ++j)
                s.stds[j] += (r[j] - s.means[j]) * (r[j] - s.means[j]);
        for (std::size_t j = 0; j < d; ++j) {
            s.stds[j] = std::sqrt(s.stds[j] / static_cast<double>(rows.size()));
            if (s.stds[j] == 0) {
                s.stds[j] = 1.0;
                s.constant_columns.push_back(static_cast<int>(j));
            }
        }
        return s;
    }

    std::vector<double> apply(const std::vector<double>& row) const {
        if (row.size() != means.size())
            throw DimensionMismatch("Standardizer::apply: width mismatch");
        std::vector<double> out(row.size());
        for (std::size_t j = 0; j < row.size(); ++j)
            out[j] = (row[j] - means[j]) / stds[j];
        return out;
    }

    std::vector<std::vector<double>> apply_all(const std::vector<std::vector<double>>& rows) const {
        std::vector<std::vector<double>> out;
        out.reserve(rows.size());
        for (const auto& r : rows) out.push_back(apply(r));
        return out;
    }
};

} // namespace cribra

#endif
