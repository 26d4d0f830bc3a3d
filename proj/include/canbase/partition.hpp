#ifndef CANBASE_PARTITION_HPP
#define CANBASE_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace canbase {

/// An integer partition: weakly decreasing positive parts, no trailing zeros.
/// Parts beyond the stored length read as 0 through part_at().
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int rank() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    /// 1-based row access with zero extension: part_at(i) = 0 for i past the
    /// last row. i = 0 is a contract violation.
    int part_at(int i) const {
        if (i < 1) throw std::invalid_argument("Partition::part_at: index must be >= 1");
        return i <= num_parts() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

    /// Renders as "[4,2,1]"; the empty partition as "[]".
    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        s += ']';
        return s;
    }

    static Partition parse(std::string_view text);

private:
    std::vector<int> parts_;
};

namespace detail {

inline void skip_ws(std::string_view& s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
}

inline bool consume(std::string_view& s, char c) {
    skip_ws(s);
    if (s.empty() || s.front() != c) return false;
    s.remove_prefix(1);
    return true;
}

inline int parse_int(std::string_view& s) {
    skip_ws(s);
    bool neg = false;
    if (!s.empty() && s.front() == '-') { neg = true; s.remove_prefix(1); }
    if (s.empty() || s.front() < '0' || s.front() > '9')
        throw std::invalid_argument("parse: expected integer");
    long long value = 0;
    while (!s.empty() && s.front() >= '0' && s.front() <= '9') {
        value = value * 10 + (s.front() - '0');
        if (value > 1'000'000'000) throw std::invalid_argument("parse: integer too large");
        s.remove_prefix(1);
    }
    return static_cast<int>(neg ? -value : value);
}

/// Parses "[a,b,...]" from the front of s, consuming it.
inline Partition parse_partition_prefix(std::string_view& s) {
    if (!consume(s, '['))
        throw std::invalid_argument("Partition::parse: expected '['");
    std::vector<int> parts;
    skip_ws(s);
    if (!s.empty() && s.front() == ']') {
        s.remove_prefix(1);
        return Partition{};
    }
    for (;;) {
        parts.push_back(parse_int(s));
        if (consume(s, ']')) break;
        if (!consume(s, ','))
            throw std::invalid_argument("Partition::parse: expected ',' or ']'");
    }
    return Partition(std::move(parts));
}

} // namespace detail

inline Partition Partition::parse(std::string_view text) {
    std::string_view s = text;
    Partition p = detail::parse_partition_prefix(s);
    detail::skip_ws(s);
    if (!s.empty())
        throw std::invalid_argument("Partition::parse: trailing characters");
    return p;
}

/// All partitions of n in lexicographically decreasing part-sequence order.
/// n = 0 yields the single empty partition.
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);   // current is already valid
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

/// True iff no part value repeats e or more times.
inline bool is_e_regular(const Partition& lambda, int e) {
    if (e < 2) throw std::invalid_argument("is_e_regular: e must be >= 2");
    int run = 1;
    const auto& parts = lambda.parts();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        run = (parts[i] == parts[i - 1]) ? run + 1 : 1;
        if (run >= e) return false;
    }
    return true;
}

inline long long count_e_regular(int n, int e) {
    long long count = 0;
    for (const auto& p : enumerate_partitions(n))
        if (is_e_regular(p, e)) ++count;
    return count;
}

/// Glaisher-side count: partitions of n with no part divisible by e.
inline long long count_parts_not_divisible(int n, int e) {
    if (e < 2) throw std::invalid_argument("count_parts_not_divisible: e must be >= 2");
    long long count = 0;
    for (const auto& p : enumerate_partitions(n)) {
        bool ok = true;
        for (int part : p.parts())
            if (part % e == 0) { ok = false; break; }
        if (ok) ++count;
    }
    return count;
}

} // namespace canbase

#endif
