#ifndef CANBASE_LAURENT_HPP
#define CANBASE_LAURENT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace canbase {

/// Integer-coefficient Laurent polynomial in v, stored as a dense window
/// [min_exp, min_exp + coeffs.size()). Normalized: no leading/trailing zero
/// coefficients; the zero polynomial has an empty window.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(int exp, long long coeff) {
        LaurentPoly p;
        if (coeff != 0) {
            p.min_exp_ = exp;
            p.coeffs_ = {coeff};
        }
        return p;
    }
    static LaurentPoly one() { return monomial(0, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    int min_exp() const {
        if (is_zero()) throw std::logic_error("LaurentPoly: zero polynomial has no min exponent");
        return min_exp_;
    }
    int max_exp() const {
        if (is_zero()) throw std::logic_error("LaurentPoly: zero polynomial has no max exponent");
        return min_exp_ + static_cast<int>(coeffs_.size()) - 1;
    }
    long long coeff(int exp) const {
        int i = exp - min_exp_;
        return (!is_zero() && i >= 0 && i < static_cast<int>(coeffs_.size()))
                   ? coeffs_[static_cast<std::size_t>(i)]
                   : 0;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    void add_term(int exp, long long coeff) {
        if (coeff == 0) return;
        if (is_zero()) {
            min_exp_ = exp;
            coeffs_ = {coeff};
            return;
        }
        if (exp < min_exp_) {
            coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_exp_ - exp), 0);
            min_exp_ = exp;
        } else if (exp > max_exp()) {
            coeffs_.resize(static_cast<std::size_t>(exp - min_exp_) + 1, 0);
        }
        coeffs_[static_cast<std::size_t>(exp - min_exp_)] += coeff;
        normalize();
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        add_scaled(o, 0, 1);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        add_scaled(o, 0, -1);
        return *this;
    }

    /// *this += scale * v^shift * o.
    void add_scaled(const LaurentPoly& o, int shift, long long scale) {
        if (o.is_zero() || scale == 0) return;
        int lo = o.min_exp_ + shift;
        int hi = o.max_exp() + shift;
        if (is_zero()) {
            min_exp_ = lo;
            coeffs_.assign(static_cast<std::size_t>(hi - lo) + 1, 0);
        } else {
            if (lo < min_exp_) {
                coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_exp_ - lo), 0);
                min_exp_ = lo;
            }
            if (hi > max_exp())
                coeffs_.resize(static_cast<std::size_t>(hi - min_exp_) + 1, 0);
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[static_cast<std::size_t>(lo - min_exp_) + i] += scale * o.coeffs_[i];
        normalize();
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.min_exp_ = a.min_exp_ + b.min_exp_;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        r.normalize();
        return r;
    }

    LaurentPoly shifted(int shift) const {
        LaurentPoly r = *this;
        if (!r.is_zero()) r.min_exp_ += shift;
        return r;
    }

    long long evaluate_at_one() const {
        long long s = 0;
        for (long long c : coeffs_) s += c;
        return s;
    }

    /// Sparse "exp:coeff" pairs in increasing exponent order, space-joined.
    std::string to_sparse_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!s.empty()) s += ' ';
            s += std::to_string(min_exp_ + static_cast<int>(i)) + ":" + std::to_string(coeffs_[i]);
        }
        return s;
    }

    /// Human form in descending powers, e.g. "v^2 - 1 + v^-2".
    std::string to_string(const std::string& var = "v") const {
        if (is_zero()) return "0";
        std::string s;
        for (int e = max_exp(); e >= min_exp_; --e) {
            long long c = coeff(e);
            if (c == 0) continue;
            if (s.empty()) {
                if (c < 0) s += "-";
            } else {
                s += (c < 0) ? " - " : " + ";
            }
            long long a = c < 0 ? -c : c;
            if (a != 1 || e == 0) s += std::to_string(a);
            if (e != 0) {
                s += var;
                if (e != 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    void normalize() {
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
        if (lead == coeffs_.size()) {
            coeffs_.clear();
            min_exp_ = 0;
            return;
        }
        if (lead) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
            min_exp_ += static_cast<int>(lead);
        }
        while (coeffs_.back() == 0) coeffs_.pop_back();
    }

    int min_exp_ = 0;
    std::vector<long long> coeffs_;
};

} // namespace canbase

#endif
