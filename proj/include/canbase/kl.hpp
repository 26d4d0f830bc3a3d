#ifndef CANBASE_KL_HPP
#define CANBASE_KL_HPP

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "canbase/coxeter.hpp"
#include "canbase/hecke.hpp"
#include "canbase/laurent.hpp"

namespace canbase {

namespace detail {

/// Polynomial in q = v^2 with integer coefficients, coeffs[i] = coeff of q^i.
using QPoly = std::vector<long long>;

inline void q_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void q_add_shifted(QPoly& acc, const QPoly& p, int shift, long long scale) {
    if (acc.size() < p.size() + static_cast<std::size_t>(shift))
        acc.resize(p.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        acc[i + static_cast<std::size_t>(shift)] += scale * p[i];
    q_trim(acc);
}

inline long long q_coeff(const QPoly& p, int i) {
    return (i >= 0 && i < static_cast<int>(p.size())) ? p[static_cast<std::size_t>(i)] : 0;
}

} // namespace detail

/// Kazhdan-Lusztig data for one Weyl group: the KL polynomials P_{x,y}, the
/// basis elements C_w in T-basis coordinates, and the a-function. The
/// normalization is C_w = v^{-l(w)} sum_{x<=y} P_{x,w}(v^2) T_x, so that
/// C_s C_s = (v + v^-1) C_s for every simple reflection.
class KLTable {
public:
    /// Builds the KL polynomials and basis; when with_a_values, also sweeps
    /// all |W|^2 products to extract the structure constants and a-values.
    static KLTable build(const CoxeterGroup& group, bool with_a_values = true) {
        KLTable t(group);
        t.compute_polynomials();
        t.compute_basis();
        if (with_a_values) t.compute_a_values();
        return t;
    }

    const CoxeterGroup& group() const { return *group_; }

    /// P_{x,y} as a polynomial in q = v^2; zero unless x <= y.
    const detail::QPoly& kl_polynomial(int x, int y) const {
        static const detail::QPoly zero{};
        if (!group_->bruhat_leq(x, y)) return zero;
        return p_[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
    }

    /// C_w in T-basis coordinates.
    HeckeElement c_element(int w) const {
        return detail::from_dense(*group_, c_[static_cast<std::size_t>(w)]);
    }

    /// Structure constants of C_x C_y = sum_z h_{x,y,z} C_z, as a map from z.
    std::map<int, LaurentPoly> structure_constants(int x, int y) const {
        std::map<int, LaurentPoly> out;
        auto product = c_[static_cast<std::size_t>(y)];
        detail::left_mult_element(*group_, c_hecke(x), product);
        extract_h(product, [&](int z, const LaurentPoly& h) { out[z] = h; });
        return out;
    }

    bool has_a_values() const { return !a_.empty(); }

    int a_value(int z) const {
        if (a_.empty()) throw std::logic_error("KLTable: a-values were not computed");
        return a_[static_cast<std::size_t>(z)];
    }

    /// One line per element: "<word> -> <a>", in element-index order.
    void dump_a_values(std::ostream& os) const {
        for (int z = 0; z < group_->size; ++z)
            os << group_->word_string(z) << " -> " << a_value(z) << "\n";
    }

    /// One line per nonzero h_{x,y,z}:
    /// "<x_word> * <y_word> -> <z_word> : <exp:coeff ...>".
    void dump_structure_constants(std::ostream& os) const {
        for (int x = 0; x < group_->size; ++x)
            for (int y = 0; y < group_->size; ++y)
                for (const auto& [z, h] : structure_constants(x, y))
                    os << group_->word_string(x) << " * " << group_->word_string(y)
                       << " -> " << group_->word_string(z) << " : "
                       << h.to_sparse_string() << "\n";
    }

private:
    explicit KLTable(const CoxeterGroup& group) : group_(&group) {}

    HeckeElement c_hecke(int w) const {
        return detail::from_dense(*group_, c_[static_cast<std::size_t>(w)]);
    }

    void compute_polynomials() {
        const CoxeterGroup& g = *group_;
        p_.assign(static_cast<std::size_t>(g.size), {});
        std::vector<int> by_length(static_cast<std::size_t>(g.size));
        for (int e = 0; e < g.size; ++e) by_length[static_cast<std::size_t>(e)] = e;
        std::sort(by_length.begin(), by_length.end(), [&](int a, int b) {
            return g.length[static_cast<std::size_t>(a)] < g.length[static_cast<std::size_t>(b)];
        });

        for (int y : by_length) {
            auto& row = p_[static_cast<std::size_t>(y)];
            row.assign(static_cast<std::size_t>(g.size), {});
            if (y == g.identity) {
                row[static_cast<std::size_t>(y)] = {1};
                continue;
            }
            int s = g.word[static_cast<std::size_t>(y)].front() - 1;
            int yp = g.left[static_cast<std::size_t>(s)][static_cast<std::size_t>(y)];
            const auto& rowp = p_[static_cast<std::size_t>(yp)];

            // mu(z, yp) for the correction terms: the coefficient of
            // q^{(l(yp)-l(z)-1)/2} in P_{z,yp}, for z <= yp with sz < z.
            std::vector<std::pair<int, long long>> mu;
            for (int z : g.bruhat_interval_below(yp)) {
                int sz = g.left[static_cast<std::size_t>(s)][static_cast<std::size_t>(z)];
                if (g.length[static_cast<std::size_t>(sz)] >= g.length[static_cast<std::size_t>(z)])
                    continue;
                int gap = g.length[static_cast<std::size_t>(yp)] - g.length[static_cast<std::size_t>(z)];
                if (gap % 2 == 0) continue;
                long long m = detail::q_coeff(rowp[static_cast<std::size_t>(z)], (gap - 1) / 2);
                if (m != 0) mu.emplace_back(z, m);
            }

            for (int x : g.bruhat_interval_below(y)) {
                int sx = g.left[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)];
                bool descent = g.length[static_cast<std::size_t>(sx)] < g.length[static_cast<std::size_t>(x)];
                detail::QPoly p;
                // P_{x,y} = q^{1-c} P_{sx,y'} + q^c P_{x,y'}
                //           - sum_z mu(z,y') q^{(l(y)-l(z))/2} P_{x,z},  c = [sx < x].
                int c = descent ? 1 : 0;
                if (g.bruhat_leq(sx, yp))
                    detail::q_add_shifted(p, rowp[static_cast<std::size_t>(sx)], 1 - c, 1);
                if (g.bruhat_leq(x, yp))
                    detail::q_add_shifted(p, rowp[static_cast<std::size_t>(x)], c, 1);
                for (const auto& [z, m] : mu) {
                    if (!g.bruhat_leq(x, z)) continue;
                    int half = (g.length[static_cast<std::size_t>(y)] - g.length[static_cast<std::size_t>(z)]) / 2;
                    detail::q_add_shifted(p, p_[static_cast<std::size_t>(z)][static_cast<std::size_t>(x)],
                                          half, -m);
                }
                row[static_cast<std::size_t>(x)] = std::move(p);
            }
        }
    }

    void compute_basis() {
        const CoxeterGroup& g = *group_;
        c_.assign(static_cast<std::size_t>(g.size),
                  std::vector<LaurentPoly>(static_cast<std::size_t>(g.size)));
        for (int w = 0; w < g.size; ++w) {
            int lw = g.length[static_cast<std::size_t>(w)];
            for (int x : g.bruhat_interval_below(w)) {
                const auto& p = p_[static_cast<std::size_t>(w)][static_cast<std::size_t>(x)];
                LaurentPoly coeff;
                for (std::size_t i = 0; i < p.size(); ++i)
                    coeff.add_term(2 * static_cast<int>(i) - lw, p[i]);
                c_[static_cast<std::size_t>(w)][static_cast<std::size_t>(x)] = std::move(coeff);
            }
        }
    }

    /// Bruhat-unitriangular back-substitution: the T_z coordinate of C_z is
    /// exactly v^{-l(z)}, so stripping from the top length down is exact.
    template <typename F>
    void extract_h(std::vector<LaurentPoly>& product, F&& emit) const {
        const CoxeterGroup& g = *group_;
        std::vector<int> by_length_desc(static_cast<std::size_t>(g.size));
        for (int e = 0; e < g.size; ++e) by_length_desc[static_cast<std::size_t>(e)] = e;
        std::sort(by_length_desc.begin(), by_length_desc.end(), [&](int a, int b) {
            return g.length[static_cast<std::size_t>(a)] > g.length[static_cast<std::size_t>(b)];
        });
        for (int z : by_length_desc) {
            LaurentPoly& top = product[static_cast<std::size_t>(z)];
            if (top.is_zero()) continue;
            LaurentPoly h = top.shifted(g.length[static_cast<std::size_t>(z)]);
            const auto& cz = c_[static_cast<std::size_t>(z)];
            for (int x = 0; x < g.size; ++x)
                if (!cz[static_cast<std::size_t>(x)].is_zero())
                    product[static_cast<std::size_t>(x)] -= h * cz[static_cast<std::size_t>(x)];
            emit(z, h);
        }
        for (const auto& rest : product)
            if (!rest.is_zero())
                throw std::logic_error("KLTable: nonzero residual in back-substitution");
    }

    void compute_a_values() {
        const CoxeterGroup& g = *group_;
        a_.assign(static_cast<std::size_t>(g.size), 0);
        for (int x = 0; x < g.size; ++x) {
            HeckeElement cx = c_hecke(x);
            for (int y = 0; y < g.size; ++y) {
                auto product = c_[static_cast<std::size_t>(y)];
                detail::left_mult_element(g, cx, product);
                extract_h(product, [&](int z, const LaurentPoly& h) {
                    int pole = -h.min_exp();
                    if (pole > a_[static_cast<std::size_t>(z)])
                        a_[static_cast<std::size_t>(z)] = pole;
                });
            }
        }
    }

    const CoxeterGroup* group_;
    std::vector<std::vector<detail::QPoly>> p_;   // p_[y][x]
    std::vector<std::vector<LaurentPoly>> c_;     // c_[w] dense over T-basis
    std::vector<int> a_;
};

} // namespace canbase

#endif
