#ifndef CANBASE_HECKE_HPP
#define CANBASE_HECKE_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "canbase/coxeter.hpp"
#include "canbase/laurent.hpp"

namespace canbase {

/// An element of the Hecke algebra in T-basis coordinates over Z[v, v^-1],
/// u = v^2. Coordinates with zero value are not stored.
class HeckeElement {
public:
    explicit HeckeElement(const CoxeterGroup& group) : group_(&group) {}

    static HeckeElement t(const CoxeterGroup& group, int w) {
        HeckeElement h(group);
        h.coords_[w] = LaurentPoly::one();
        return h;
    }

    const CoxeterGroup& group() const { return *group_; }
    const std::map<int, LaurentPoly>& coords() const { return coords_; }

    LaurentPoly coeff(int w) const {
        auto it = coords_.find(w);
        return it == coords_.end() ? LaurentPoly{} : it->second;
    }

    void set_coeff(int w, LaurentPoly c) {
        if (c.is_zero()) coords_.erase(w);
        else coords_[w] = std::move(c);
    }

    void add_coeff(int w, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto& slot = coords_[w];
        slot += c;
        if (slot.is_zero()) coords_.erase(w);
    }

    bool is_zero() const { return coords_.empty(); }

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.group_ == b.group_ && a.coords_ == b.coords_;
    }

    HeckeElement& operator+=(const HeckeElement& o) {
        check_same_group(o);
        for (const auto& [w, c] : o.coords_) add_coeff(w, c);
        return *this;
    }

    HeckeElement& operator-=(const HeckeElement& o) {
        check_same_group(o);
        for (const auto& [w, c] : o.coords_) {
            auto& slot = coords_[w];
            slot -= c;
            if (slot.is_zero()) coords_.erase(w);
        }
        return *this;
    }

    void check_same_group(const HeckeElement& o) const {
        if (group_ != o.group_)
            throw std::invalid_argument("HeckeElement: mixed underlying groups");
    }

private:
    const CoxeterGroup* group_;
    std::map<int, LaurentPoly> coords_;
};

namespace detail {

/// Dense T-basis coordinates, the in-place kernel behind products.
/// left_mult_gen applies T_s on the left:
///   T_s T_w = T_{sw}                 if l(sw) > l(w)
///   T_s T_w = u T_{sw} + (u-1) T_w   if l(sw) < l(w),   u = v^2.
inline void left_mult_gen(const CoxeterGroup& g, int s, std::vector<LaurentPoly>& coords) {
    std::vector<LaurentPoly> out(coords.size());
    const auto& ls = g.left[static_cast<std::size_t>(s)];
    for (int w = 0; w < g.size; ++w) {
        const LaurentPoly& c = coords[static_cast<std::size_t>(w)];
        if (c.is_zero()) continue;
        int sw = ls[static_cast<std::size_t>(w)];
        if (g.length[static_cast<std::size_t>(sw)] > g.length[static_cast<std::size_t>(w)]) {
            out[static_cast<std::size_t>(sw)] += c;
        } else {
            out[static_cast<std::size_t>(sw)].add_scaled(c, 2, 1);   // u T_{sw}
            out[static_cast<std::size_t>(w)].add_scaled(c, 2, 1);    // (u-1) T_w
            out[static_cast<std::size_t>(w)].add_scaled(c, 0, -1);
        }
    }
    coords = std::move(out);
}

/// coords <- (T-basis coords of x) * coords, via a reduced word of x.
inline void left_mult_element(const CoxeterGroup& g, const HeckeElement& x,
                              std::vector<LaurentPoly>& coords) {
    std::vector<LaurentPoly> acc(static_cast<std::size_t>(g.size));
    for (const auto& [w, c] : x.coords()) {
        std::vector<LaurentPoly> term = coords;
        const auto& word = g.word[static_cast<std::size_t>(w)];
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            left_mult_gen(g, *it - 1, term);
        for (int z = 0; z < g.size; ++z)
            if (!term[static_cast<std::size_t>(z)].is_zero()) {
                LaurentPoly scaled = term[static_cast<std::size_t>(z)] * c;
                acc[static_cast<std::size_t>(z)] += scaled;
            }
    }
    coords = std::move(acc);
}

inline std::vector<LaurentPoly> to_dense(const HeckeElement& h) {
    std::vector<LaurentPoly> coords(static_cast<std::size_t>(h.group().size));
    for (const auto& [w, c] : h.coords()) coords[static_cast<std::size_t>(w)] = c;
    return coords;
}

inline HeckeElement from_dense(const CoxeterGroup& g, const std::vector<LaurentPoly>& coords) {
    HeckeElement h(g);
    for (int w = 0; w < g.size; ++w)
        h.set_coeff(w, coords[static_cast<std::size_t>(w)]);
    return h;
}

} // namespace detail

/// Exact product in the T-basis.
inline HeckeElement t_multiply(const HeckeElement& x, const HeckeElement& y) {
    x.check_same_group(y);
    const CoxeterGroup& g = x.group();
    auto coords = detail::to_dense(y);
    detail::left_mult_element(g, x, coords);
    return detail::from_dense(g, coords);
}

} // namespace canbase

#endif
