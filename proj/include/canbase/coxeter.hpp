#ifndef CANBASE_COXETER_HPP
#define CANBASE_COXETER_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "canbase/weyl_type.hpp"

namespace canbase {

struct GroupTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite Weyl group of type A/B/D, fully tabulated: elements are indices
/// 0..size-1 (0 = identity), with length, generator multiplication tables,
/// lexicographically least reduced words, and the Bruhat order.
///
/// Elements are realized as signed permutations (images of 1..m, sign
/// carried on the image). Generator numbering, fixed per type:
///   A_{n-1} on n letters: s1..s_{n-1} adjacent transpositions (i, i+1).
///   B_n: s1 negates the first letter; s2..sn are transpositions (i-1, i).
///   D_n: s1 maps 1 -> -2, 2 -> -1; s2..sn are transpositions (i-1, i).
class CoxeterGroup {
public:
    WeylType type;
    int num_generators;
    int size = 0;
    int identity = 0;
    int longest = 0;

    std::vector<int> length;                  // l(w) per element
    std::vector<std::vector<int>> left;       // left[s][w]  = index of g_s * w
    std::vector<std::vector<int>> right;      // right[s][w] = index of w * g_s
    std::vector<std::vector<int>> word;       // lex-least reduced word (1-based gens)
    std::vector<std::vector<int>> perm;       // signed-permutation realization

    /// Coxeter label, e.g. "A2", "B3" (rank = number of generators).
    std::string label() const {
        return std::string(1, family_letter(type.family)) + std::to_string(num_generators);
    }

    bool is_identity(int w) const { return w == identity; }

    /// Group product via the reduced word of x applied on the left of y.
    int product(int x, int y) const {
        int r = y;
        const auto& wx = word[static_cast<std::size_t>(x)];
        for (auto it = wx.rbegin(); it != wx.rend(); ++it)
            r = left[static_cast<std::size_t>(*it - 1)][static_cast<std::size_t>(r)];
        return r;
    }

    int inverse(int x) const {
        // Reverse the reduced word of x.
        int inv = identity;
        const auto& wx = word[static_cast<std::size_t>(x)];
        for (auto it = wx.rbegin(); it != wx.rend(); ++it)
            inv = right[static_cast<std::size_t>(*it - 1)][static_cast<std::size_t>(inv)];
        return inv;
    }

    /// Bruhat order x <= y.
    bool bruhat_leq(int x, int y) const {
        return bruhat_[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] != 0;
    }

    /// Elements x with x <= y in Bruhat order, increasing index.
    std::vector<int> bruhat_interval_below(int y) const {
        std::vector<int> out;
        const auto& row = bruhat_[static_cast<std::size_t>(y)];
        for (int x = 0; x < size; ++x)
            if (row[static_cast<std::size_t>(x)]) out.push_back(x);
        return out;
    }

    /// "e" for the identity, else concatenated generator names "s1s3s2".
    std::string word_string(int w) const {
        const auto& ws = word[static_cast<std::size_t>(w)];
        if (ws.empty()) return "e";
        std::string s;
        for (int g : ws) s += "s" + std::to_string(g);
        return s;
    }

    static CoxeterGroup build(const WeylType& w, long long max_order = 1000);

private:
    explicit CoxeterGroup(const WeylType& t) : type(t), num_generators(0) {}

    std::vector<std::vector<std::uint8_t>> bruhat_;  // bruhat_[y][x] = (x <= y)

    void compute_words();
    void compute_bruhat();
};

namespace detail {

using SignedPerm = std::vector<int>;  // images of 1..m, sign on the image

inline SignedPerm apply_left(const SignedPerm& g, const SignedPerm& w) {
    // (g * w)(i) = g(w(i))
    SignedPerm r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        int img = w[i];
        int gi = g[static_cast<std::size_t>(std::abs(img) - 1)];
        r[i] = img > 0 ? gi : -gi;
    }
    return r;
}

inline std::vector<SignedPerm> weyl_generators(const WeylType& w, int& letters) {
    std::vector<SignedPerm> gens;
    auto transposition = [](int m, int i) {  // swaps letters i and i+1 (1-based)
        SignedPerm g(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) g[static_cast<std::size_t>(k)] = k + 1;
        std::swap(g[static_cast<std::size_t>(i - 1)], g[static_cast<std::size_t>(i)]);
        return g;
    };
    switch (w.family) {
        case WeylFamily::A: {
            letters = w.n;
            for (int i = 1; i < w.n; ++i) gens.push_back(transposition(w.n, i));
            if (gens.empty()) {
                // A with n = 1 is the trivial group; keep one letter, no
                // generators.
            }
            return gens;
        }
        case WeylFamily::B: {
            letters = w.n;
            SignedPerm flip(static_cast<std::size_t>(w.n));
            for (int k = 0; k < w.n; ++k) flip[static_cast<std::size_t>(k)] = k + 1;
            flip[0] = -1;
            gens.push_back(std::move(flip));
            for (int i = 1; i < w.n; ++i) gens.push_back(transposition(w.n, i));
            return gens;
        }
        case WeylFamily::D: {
            letters = w.n;
            SignedPerm twist(static_cast<std::size_t>(w.n));
            for (int k = 0; k < w.n; ++k) twist[static_cast<std::size_t>(k)] = k + 1;
            twist[0] = -2;
            twist[1] = -1;
            gens.push_back(std::move(twist));
            for (int i = 1; i < w.n; ++i) gens.push_back(transposition(w.n, i));
            return gens;
        }
    }
    throw std::logic_error("weyl_generators: invalid family");
}

inline long long weyl_order(const WeylType& w) {
    auto factorial = [](int n) {
        long long f = 1;
        for (int i = 2; i <= n; ++i) {
            if (f > (1LL << 60) / i) return (1LL << 61);
            f *= i;
        }
        return f;
    };
    switch (w.family) {
        case WeylFamily::A: return factorial(w.n);
        case WeylFamily::B: {
            long long f = factorial(w.n);
            for (int i = 0; i < w.n; ++i) {
                if (f > (1LL << 60)) return (1LL << 61);
                f *= 2;
            }
            return f;
        }
        case WeylFamily::D: {
            long long f = factorial(w.n);
            for (int i = 0; i < w.n - 1; ++i) {
                if (f > (1LL << 60)) return (1LL << 61);
                f *= 2;
            }
            return f;
        }
    }
    throw std::logic_error("weyl_order: invalid family");
}

} // namespace detail

inline CoxeterGroup CoxeterGroup::build(const WeylType& w, long long max_order) {
    if (max_order < 1) throw std::invalid_argument("CoxeterGroup::build: max_order must be >= 1");
    long long order = detail::weyl_order(w);
    if (order > max_order) {
        int rank = w.family == WeylFamily::A ? w.n - 1 : w.n;
        throw GroupTooLarge("group " + std::string(1, family_letter(w.family)) +
                            std::to_string(rank) + " has order " +
                            (order > (1LL << 60) ? std::string(">2^60") : std::to_string(order)) +
                            " exceeding the guard " + std::to_string(max_order));
    }

    CoxeterGroup g(w);
    int letters = 0;
    auto gens = detail::weyl_generators(w, letters);
    g.num_generators = static_cast<int>(gens.size());

    detail::SignedPerm id(static_cast<std::size_t>(letters));
    for (int k = 0; k < letters; ++k) id[static_cast<std::size_t>(k)] = k + 1;

    std::map<detail::SignedPerm, int> index;
    std::vector<detail::SignedPerm> elements;
    index.emplace(id, 0);
    elements.push_back(id);
    g.length.push_back(0);

    // BFS by left multiplication; depth = length since each generator step
    // changes length by exactly one.
    std::deque<int> queue{0};
    g.left.assign(gens.size(), {});
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (std::size_t s = 0; s < gens.size(); ++s) {
            auto img = detail::apply_left(gens[s], elements[static_cast<std::size_t>(cur)]);
            auto [it, inserted] = index.emplace(img, static_cast<int>(elements.size()));
            if (inserted) {
                elements.push_back(std::move(img));
                g.length.push_back(g.length[static_cast<std::size_t>(cur)] + 1);
                queue.push_back(it->second);
            }
        }
    }
    g.size = static_cast<int>(elements.size());

    for (std::size_t s = 0; s < gens.size(); ++s) {
        g.left[s].resize(static_cast<std::size_t>(g.size));
        for (int e = 0; e < g.size; ++e)
            g.left[s][static_cast<std::size_t>(e)] =
                index.at(detail::apply_left(gens[s], elements[static_cast<std::size_t>(e)]));
    }
    g.right.assign(gens.size(), std::vector<int>(static_cast<std::size_t>(g.size)));
    for (std::size_t s = 0; s < gens.size(); ++s)
        for (int e = 0; e < g.size; ++e)
            g.right[s][static_cast<std::size_t>(e)] =
                index.at(detail::apply_left(elements[static_cast<std::size_t>(e)], gens[s]));

    g.perm = std::move(elements);

    g.longest = 0;
    for (int e = 0; e < g.size; ++e)
        if (g.length[static_cast<std::size_t>(e)] > g.length[static_cast<std::size_t>(g.longest)])
            g.longest = e;

    g.compute_words();
    g.compute_bruhat();
    return g;
}

inline void CoxeterGroup::compute_words() {
    word.assign(static_cast<std::size_t>(size), {});
    // Order elements by length; the lex-least reduced word starts with the
    // smallest generator s descending w, then continues with the word of sw.
    std::vector<int> by_length(static_cast<std::size_t>(size));
    for (int e = 0; e < size; ++e) by_length[static_cast<std::size_t>(e)] = e;
    std::sort(by_length.begin(), by_length.end(),
              [&](int a, int b) { return length[static_cast<std::size_t>(a)] < length[static_cast<std::size_t>(b)]; });
    for (int e : by_length) {
        if (e == identity) continue;
        for (int s = 0; s < num_generators; ++s) {
            int down = left[static_cast<std::size_t>(s)][static_cast<std::size_t>(e)];
            if (length[static_cast<std::size_t>(down)] < length[static_cast<std::size_t>(e)]) {
                auto& we = word[static_cast<std::size_t>(e)];
                we.push_back(s + 1);
                const auto& wd = word[static_cast<std::size_t>(down)];
                we.insert(we.end(), wd.begin(), wd.end());
                break;
            }
        }
    }
}

inline void CoxeterGroup::compute_bruhat() {
    bruhat_.assign(static_cast<std::size_t>(size),
                   std::vector<std::uint8_t>(static_cast<std::size_t>(size), 0));
    std::vector<int> by_length(static_cast<std::size_t>(size));
    for (int e = 0; e < size; ++e) by_length[static_cast<std::size_t>(e)] = e;
    std::sort(by_length.begin(), by_length.end(),
              [&](int a, int b) { return length[static_cast<std::size_t>(a)] < length[static_cast<std::size_t>(b)]; });
    for (int y : by_length) {
        auto& row = bruhat_[static_cast<std::size_t>(y)];
        if (y == identity) {
            row[static_cast<std::size_t>(identity)] = 1;
            continue;
        }
        // Lifting property with the first descent s of y: for y = s*y',
        //   x <= y  <=>  (s*x < x ? s*x <= y' : x <= y').
        int s = word[static_cast<std::size_t>(y)].front() - 1;
        int yp = left[static_cast<std::size_t>(s)][static_cast<std::size_t>(y)];
        const auto& rowp = bruhat_[static_cast<std::size_t>(yp)];
        for (int x = 0; x < size; ++x) {
            int sx = left[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)];
            bool below = length[static_cast<std::size_t>(sx)] < length[static_cast<std::size_t>(x)];
            row[static_cast<std::size_t>(x)] =
                below ? rowp[static_cast<std::size_t>(sx)] : rowp[static_cast<std::size_t>(x)];
        }
        row[static_cast<std::size_t>(y)] = 1;
    }
}

} // namespace canbase

#endif
