#ifndef CANBASE_MULTIPARTITION_HPP
#define CANBASE_MULTIPARTITION_HPP

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "canbase/partition.hpp"

namespace canbase {

/// A box (a,b,c) of a multipartition diagram: row a >= 1, column b >= 1,
/// component c in 0..d-1.
struct Node {
    int row;
    int col;
    int component;
    friend auto operator<=>(const Node&, const Node&) = default;
};

/// The datum {e; v0,...,v_{d-1}} with 0 <= v0 <= ... <= v_{d-1} < e.
class WeightSet {
public:
    WeightSet(int e, std::vector<int> weights)
        : e_(e), weights_(std::move(weights)) {
        if (e_ < 2) throw std::invalid_argument("WeightSet: e must be >= 2");
        if (weights_.empty()) throw std::invalid_argument("WeightSet: need at least one weight");
        int prev = 0;
        for (int v : weights_) {
            if (v < prev || v >= e_)
                throw std::invalid_argument("WeightSet: weights must satisfy 0 <= v0 <= ... < e");
            prev = v;
        }
    }

    int e() const { return e_; }
    int d() const { return static_cast<int>(weights_.size()); }
    int weight(int c) const {
        if (c < 0 || c >= d())
            throw std::invalid_argument("WeightSet: component index out of range");
        return weights_[static_cast<std::size_t>(c)];
    }
    const std::vector<int>& weights() const { return weights_; }

    friend auto operator<=>(const WeightSet&, const WeightSet&) = default;

    /// Renders as "{4;1,2}".
    std::string to_string() const {
        std::string s = "{" + std::to_string(e_) + ";";
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(weights_[i]);
        }
        s += '}';
        return s;
    }

    static WeightSet parse(std::string_view text) {
        std::string_view s = text;
        if (!detail::consume(s, '{'))
            throw std::invalid_argument("WeightSet::parse: expected '{'");
        int e = detail::parse_int(s);
        if (!detail::consume(s, ';'))
            throw std::invalid_argument("WeightSet::parse: expected ';'");
        std::vector<int> weights;
        for (;;) {
            weights.push_back(detail::parse_int(s));
            if (detail::consume(s, '}')) break;
            if (!detail::consume(s, ','))
                throw std::invalid_argument("WeightSet::parse: expected ',' or '}'");
        }
        detail::skip_ws(s);
        if (!s.empty())
            throw std::invalid_argument("WeightSet::parse: trailing characters");
        return WeightSet(e, std::move(weights));
    }

private:
    int e_;
    std::vector<int> weights_;
};

/// A residue class mod e, stored as its representative in 0..e-1.
struct Residue {
    int value;
    friend auto operator<=>(const Residue&, const Residue&) = default;
};

/// An ordered d-tuple of partitions, d >= 1.
class MultiPartition {
public:
    explicit MultiPartition(std::vector<Partition> components)
        : components_(std::move(components)) {
        if (components_.empty())
            throw std::invalid_argument("MultiPartition: need at least one component");
    }

    int d() const { return static_cast<int>(components_.size()); }
    const Partition& component(int c) const {
        if (c < 0 || c >= d())
            throw std::invalid_argument("MultiPartition: component index out of range");
        return components_[static_cast<std::size_t>(c)];
    }
    const std::vector<Partition>& components() const { return components_; }

    int rank() const {
        int n = 0;
        for (const auto& p : components_) n += p.rank();
        return n;
    }

    friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;

    /// Renders component renderings joined by '|', e.g. "[3,1]|[2]".
    std::string to_string() const {
        std::string s;
        for (int c = 0; c < d(); ++c) {
            if (c) s += '|';
            s += components_[static_cast<std::size_t>(c)].to_string();
        }
        return s;
    }

    static MultiPartition parse(std::string_view text) {
        std::string_view s = text;
        std::vector<Partition> components;
        components.push_back(detail::parse_partition_prefix(s));
        while (detail::consume(s, '|'))
            components.push_back(detail::parse_partition_prefix(s));
        detail::skip_ws(s);
        if (!s.empty())
            throw std::invalid_argument("MultiPartition::parse: trailing characters");
        return MultiPartition(std::move(components));
    }

private:
    std::vector<Partition> components_;
};

/// res(a,b,c) = (b - a + v_c) mod e, reduced into 0..e-1.
inline Residue residue(const Node& node, const WeightSet& ws) {
    int r = (node.col - node.row + ws.weight(node.component)) % ws.e();
    if (r < 0) r += ws.e();
    return Residue{r};
}

/// Residues at the right ends of the length-k rows, over all components.
inline std::set<Residue> right_end_residues(const MultiPartition& mp,
                                            const WeightSet& ws, int k) {
    if (k < 1) throw std::invalid_argument("right_end_residues: k must be >= 1");
    std::set<Residue> out;
    for (int c = 0; c < mp.d(); ++c) {
        const auto& parts = mp.component(c).parts();
        for (int a = 1; a <= static_cast<int>(parts.size()); ++a)
            if (parts[static_cast<std::size_t>(a - 1)] == k)
                out.insert(residue(Node{a, k, c}, ws));
    }
    return out;
}

namespace detail {

/// Failure diagnostics for the FLOTW test. Exactly one field is set on
/// failure.
struct FlotwViolation {
    // Shifted-row inequality failed between component j and j+1 (wrap-around
    // when j == d-1) at row i.
    std::optional<std::pair<int, int>> inequality;  // (j, i)
    // Row length k whose right-end residues saturate Z/eZ.
    std::optional<int> saturated_length;
};

inline std::optional<FlotwViolation> flotw_violation(const MultiPartition& mp,
                                                     const WeightSet& ws) {
    if (mp.d() != ws.d())
        throw std::invalid_argument("is_flotw: multipartition and weight set dimension mismatch");
    const int d = mp.d();
    const int e = ws.e();

    int max_rows = 0;
    for (int c = 0; c < d; ++c)
        max_rows = std::max(max_rows, mp.component(c).num_parts());
    // Both sides vanish beyond max_rows, so this bound is exhaustive.
    for (int j = 0; j + 1 < d; ++j) {
        int shift = ws.weight(j + 1) - ws.weight(j);
        for (int i = 1; i <= max_rows; ++i)
            if (mp.component(j).part_at(i) < mp.component(j + 1).part_at(i + shift))
                return FlotwViolation{std::pair{j, i}, std::nullopt};
    }
    int wrap_shift = e + ws.weight(0) - ws.weight(d - 1);
    for (int i = 1; i <= max_rows; ++i)
        if (mp.component(d - 1).part_at(i) < mp.component(0).part_at(i + wrap_shift))
            return FlotwViolation{std::pair{d - 1, i}, std::nullopt};

    std::set<int> lengths;
    for (int c = 0; c < d; ++c)
        for (int part : mp.component(c).parts()) lengths.insert(part);
    for (int k : lengths)
        if (static_cast<int>(right_end_residues(mp, ws, k).size()) >= e)
            return FlotwViolation{std::nullopt, k};

    return std::nullopt;
}

} // namespace detail

/// FLOTW membership: the shifted-row inequalities (with wrap-around) plus
/// the requirement that no occurring row length has its right-end residues
/// covering all of 0..e-1. Row lengths with no rows pass vacuously.
inline bool is_flotw(const MultiPartition& mp, const WeightSet& ws) {
    return !detail::flotw_violation(mp, ws).has_value();
}

/// All d-partitions of rank n: compositions of n into d summands in
/// lexicographically decreasing order, partitions within each component in
/// their canonical order, rightmost component varying fastest.
inline std::vector<MultiPartition> enumerate_multipartitions(int d, int n) {
    if (d < 1) throw std::invalid_argument("enumerate_multipartitions: d must be >= 1");
    if (n < 0) throw std::invalid_argument("enumerate_multipartitions: n must be >= 0");
    std::vector<MultiPartition> out;
    std::vector<Partition> current;
    auto rec = [&](auto&& self, int c, int remaining) -> void {
        if (c == d - 1) {
            for (auto& p : enumerate_partitions(remaining)) {
                current.push_back(std::move(p));
                out.emplace_back(current);
                current.pop_back();
            }
            return;
        }
        for (int m = remaining; m >= 0; --m) {
            for (auto& p : enumerate_partitions(m)) {
                current.push_back(std::move(p));
                self(self, c + 1, remaining - m);
                current.pop_back();
            }
        }
    };
    rec(rec, 0, n);
    return out;
}

/// The FLOTW d-partitions of rank n for the given weight set, canonical order.
inline std::vector<MultiPartition> enumerate_flotw(const WeightSet& ws, int n) {
    std::vector<MultiPartition> out;
    for (auto& mp : enumerate_multipartitions(ws.d(), n))
        if (is_flotw(mp, ws)) out.push_back(std::move(mp));
    return out;
}

} // namespace canbase

#endif
