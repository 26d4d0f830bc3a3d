#ifndef CANBASE_RSK_HPP
#define CANBASE_RSK_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "canbase/partition.hpp"

namespace canbase {

/// Shape of the insertion tableau of a permutation (one-line notation,
/// images of 1..n), by Schensted row insertion.
inline Partition rsk_shape(const std::vector<int>& perm) {
    std::vector<std::vector<int>> rows;
    for (int value : perm) {
        int v = value;
        for (std::size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({v});
                break;
            }
            auto& row = rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), v);
            if (it == row.end()) {
                row.push_back(v);
                break;
            }
            std::swap(*it, v);  // bump and carry to the next row
        }
    }
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

inline Partition conjugate(const Partition& lambda) {
    std::vector<int> parts;
    for (int col = 1; col <= lambda.part_at(1); ++col) {
        int height = 0;
        for (int row = 1; row <= lambda.num_parts(); ++row)
            if (lambda.part_at(row) >= col) ++height;
        parts.push_back(height);
    }
    return Partition(std::move(parts));
}

/// n(mu) = sum_i (i-1) mu_i.
inline int partition_n_statistic(const Partition& mu) {
    int s = 0;
    for (int i = 1; i <= mu.num_parts(); ++i) s += (i - 1) * mu.part_at(i);
    return s;
}

/// Independent cell oracle for type A a-values: the pair
/// (n(lambda), n(lambda')) for lambda the RSK shape of the permutation.
/// Which of the two matches the KL a-function is fixed empirically by the
/// acceptance suite (see README).
inline std::pair<int, int> rsk_cell_avalue_typeA(const std::vector<int>& perm) {
    if (perm.size() > 8)
        throw std::invalid_argument("rsk_cell_avalue_typeA: supported up to 8 letters");
    std::vector<int> seen(perm.size(), 0);
    for (int v : perm) {
        if (v < 1 || v > static_cast<int>(perm.size()) || seen[static_cast<std::size_t>(v - 1)]++)
            throw std::invalid_argument("rsk_cell_avalue_typeA: not a permutation");
    }
    Partition shape = rsk_shape(perm);
    return {partition_n_statistic(shape), partition_n_statistic(conjugate(shape))};
}

} // namespace canbase

#endif
