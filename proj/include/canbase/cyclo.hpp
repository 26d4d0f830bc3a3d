#ifndef CANBASE_CYCLO_HPP
#define CANBASE_CYCLO_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "canbase/weyl_type.hpp"

namespace canbase {

/// Dense integer-coefficient polynomial in one variable; coeffs[i] is the
/// coefficient of x^i. Exact arithmetic only.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly constant(long long c) {
        return c == 0 ? IntPoly{} : IntPoly{{c}};
    }
    /// x^n - 1.
    static IntPoly power_minus_one(int n) {
        std::vector<long long> c(static_cast<std::size_t>(n) + 1, 0);
        c[0] = -1;
        c[static_cast<std::size_t>(n)] = 1;
        return IntPoly(std::move(c));
    }

    const std::vector<long long>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    long long coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size()))
                   ? coeffs_[static_cast<std::size_t>(i)]
                   : 0;
    }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<long long> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPoly(std::move(c));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<long long> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return IntPoly(std::move(c));
    }

    /// Exact division; throws if the remainder is nonzero or the divisor is
    /// not monic up to sign.
    IntPoly divide_exact(const IntPoly& divisor) const {
        if (divisor.is_zero()) throw std::invalid_argument("IntPoly: division by zero");
        long long lead = divisor.coeffs_.back();
        if (lead != 1 && lead != -1)
            throw std::invalid_argument("IntPoly: divisor must be monic up to sign");
        IntPoly rem = *this;
        std::vector<long long> q;
        int dd = divisor.degree();
        while (!rem.is_zero() && rem.degree() >= dd) {
            int shift = rem.degree() - dd;
            long long factor = rem.coeffs_.back() / lead;
            if (static_cast<int>(q.size()) < shift + 1) q.resize(static_cast<std::size_t>(shift) + 1, 0);
            q[static_cast<std::size_t>(shift)] = factor;
            std::vector<long long> sub(rem.coeffs_.size(), 0);
            for (int i = 0; i <= dd; ++i)
                sub[static_cast<std::size_t>(i + shift)] = factor * divisor.coeff(i);
            rem = rem - IntPoly(std::move(sub));
        }
        if (!rem.is_zero()) throw std::invalid_argument("IntPoly: division is not exact");
        return IntPoly(std::move(q));
    }

    /// p(x) -> p(x^2).
    IntPoly substitute_square() const {
        if (is_zero()) return {};
        std::vector<long long> c(2 * coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[2 * i] = coeffs_[i];
        return IntPoly(std::move(c));
    }

    /// p(x) -> p(-x).
    IntPoly substitute_negate() const {
        std::vector<long long> c = coeffs_;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (i % 2 == 1) c[i] = -c[i];
        return IntPoly(std::move(c));
    }

    IntPoly negate() const {
        std::vector<long long> c = coeffs_;
        for (auto& x : c) x = -x;
        return IntPoly(std::move(c));
    }

    /// Renders in descending powers with explicit signs, e.g. "v^4 - v^2 + 1".
    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            long long c = coeff(i);
            if (c == 0) continue;
            if (s.empty()) {
                if (c < 0) s += "-";
            } else {
                s += (c < 0) ? " - " : " + ";
            }
            long long a = c < 0 ? -c : c;
            if (a != 1 || i == 0) s += std::to_string(a);
            if (i > 0) {
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<long long> coeffs_;
};

/// The n-th cyclotomic polynomial, by dividing x^n - 1 by the cyclotomic
/// polynomials of the proper divisors of n. Memoized; the cache fill is
/// idempotent and mutex-guarded.
inline IntPoly cyclotomic(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1");
    static std::mutex mu;
    static std::map<int, IntPoly> cache;
    {
        std::scoped_lock lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    IntPoly result = IntPoly::power_minus_one(n);
    for (int d = 1; d < n; ++d)
        if (n % d == 0) result = result.divide_exact(cyclotomic(d));
    std::scoped_lock lock(mu);
    return cache.emplace(n, std::move(result)).first->second;
}

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// The multiplicative order m of the image of u, and the characteristic
/// (0 or a prime) of the target field.
struct SpecializationSpec {
    int order;
    int characteristic;

    SpecializationSpec(int order, int characteristic)
        : order(order), characteristic(characteristic) {
        if (order < 1) throw std::invalid_argument("SpecializationSpec: order must be >= 1");
        if (characteristic != 0 && !is_prime(characteristic))
            throw std::invalid_argument("SpecializationSpec: characteristic must be 0 or prime");
    }
};

/// The minimal i >= 2 with 1 + x + ... + x^{i-1} = 0 for x of the given
/// order: the order itself when >= 2; the characteristic when x = 1 in
/// positive characteristic; nullopt when x = 1 in characteristic 0 (the
/// specialized algebra stays semisimple).
inline std::optional<int> compute_e(const SpecializationSpec& spec) {
    if (spec.order >= 2) return spec.order;
    if (spec.characteristic > 0) return spec.characteristic;
    return std::nullopt;
}

/// Verification report for the factorization of Phi_e(u) under u = v^2.
struct PhiIdentityReport {
    int e;
    bool parity_even;
    bool identity_holds;        // even: Phi_e(v^2) == Phi_{2e}(v); odd: product identity
    bool sign_identity_holds;   // odd only: Phi_{2e}(v) == +/- Phi_e(-v)
    int sign;                   // odd only: the realized sign (+1 or -1), 0 when even

    bool all_hold() const {
        return identity_holds && (parity_even || sign_identity_holds);
    }
};

inline PhiIdentityReport check_phi_identity(int e) {
    if (e < 2) throw std::invalid_argument("check_phi_identity: e must be >= 2");
    PhiIdentityReport r{e, e % 2 == 0, false, true, 0};
    IntPoly lhs = cyclotomic(e).substitute_square();
    IntPoly phi_2e = cyclotomic(2 * e);
    if (r.parity_even) {
        r.identity_holds = (lhs == phi_2e);
    } else {
        r.identity_holds = (lhs == cyclotomic(e) * phi_2e);
        IntPoly neg = cyclotomic(e).substitute_negate();
        if (phi_2e == neg) {
            r.sign_identity_holds = true;
            r.sign = +1;
        } else if (phi_2e == neg.negate()) {
            r.sign_identity_holds = true;
            r.sign = -1;
        } else {
            r.sign_identity_holds = false;
        }
    }
    return r;
}

/// Good-prime classification: every prime is good in type A; in types B and
/// D every prime except 2 is good. p = 0 counts as good (characteristic 0).
inline bool is_good_prime(const WeylType& w, int p) {
    if (p == 0) return true;
    if (!is_prime(p)) throw std::invalid_argument("is_good_prime: p must be 0 or prime");
    switch (w.family) {
        case WeylFamily::A: return true;
        case WeylFamily::B:
        case WeylFamily::D: return p != 2;
    }
    throw std::logic_error("is_good_prime: invalid family");
}

} // namespace canbase

#endif
