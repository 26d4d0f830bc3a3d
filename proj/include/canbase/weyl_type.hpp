#ifndef CANBASE_WEYL_TYPE_HPP
#define CANBASE_WEYL_TYPE_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace canbase {

enum class WeylFamily { A, B, D };

inline char family_letter(WeylFamily f) {
    switch (f) {
        case WeylFamily::A: return 'A';
        case WeylFamily::B: return 'B';
        case WeylFamily::D: return 'D';
    }
    throw std::logic_error("family_letter: invalid family");
}

/// A classical Weyl group family with its combinatorial rank parameter.
/// For family A with parameter n the group is A_{n-1} acting on n letters;
/// for B and D the parameter is the rank itself. D with n in {2,3} is
/// accepted as a degenerate (reducible) case.
struct WeylType {
    WeylFamily family;
    int n;

    WeylType(WeylFamily family, int n) : family(family), n(n) {
        switch (family) {
            case WeylFamily::A:
                if (n < 1) throw std::invalid_argument("WeylType: type A requires n >= 1");
                break;
            case WeylFamily::B:
                if (n < 2) throw std::invalid_argument("WeylType: type B requires n >= 2");
                break;
            case WeylFamily::D:
                if (n < 2) throw std::invalid_argument("WeylType: type D requires n >= 2");
                break;
        }
    }

    /// True for D_2, D_3, where the group is reducible / coincides with a
    /// smaller classical group.
    bool degenerate() const { return family == WeylFamily::D && n < 4; }

    friend auto operator<=>(const WeylType&, const WeylType&) = default;

    std::string to_string() const {
        return std::string(1, family_letter(family)) + std::to_string(n);
    }
};

inline WeylFamily parse_family(std::string_view s) {
    if (s == "A" || s == "a") return WeylFamily::A;
    if (s == "B" || s == "b") return WeylFamily::B;
    if (s == "D" || s == "d") return WeylFamily::D;
    throw std::invalid_argument("parse_family: expected A, B or D");
}

} // namespace canbase

#endif
