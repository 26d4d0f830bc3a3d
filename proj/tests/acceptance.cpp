// Acceptance suite: runs every release criterion and prints one PASS/FAIL
// line per criterion. Exits nonzero if any criterion fails.
//
// Usage: acceptance [path-to-cli-binary]
// The CLI determinism criterion is skipped-as-failure if no binary is given.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "canbase/canbase.hpp"

using namespace canbase;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << index << ": " << name;
    if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

// 1. Type-A equivalence: FLOTW at {e;0} vs e-regularity, two code paths.
void criterion_1() {
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= 15 && ok; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            for (int e = 2; e <= 6; ++e) {
                if (is_flotw(MultiPartition({p}), WeightSet(e, {0})) != is_e_regular(p, e)) {
                    ok = false;
                    detail = "mismatch at " + p.to_string() + ", e=" + std::to_string(e);
                    break;
                }
            }
            if (!ok) break;
        }
    report(1, "type A: FLOTW {e;0} == e-regular, n <= 15, e in 2..6", ok, detail);
}

// 2. Glaisher oracle.
void criterion_2() {
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= 20 && ok; ++n)
        for (int e = 2; e <= 6; ++e)
            if (count_e_regular(n, e) != count_parts_not_divisible(n, e)) {
                ok = false;
                detail = "n=" + std::to_string(n) + ", e=" + std::to_string(e);
                break;
            }
    report(2, "Glaisher: e-regular count == no-part-divisible-by-e count, n <= 20", ok, detail);
}

// 3. Type-B odd-e count factorization.
void criterion_3() {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 12 && ok; ++n)
        for (int e : {3, 5}) {
            long long convolution = 0;
            for (int a = 0; a <= n; ++a)
                convolution += count_e_regular(a, e) * count_e_regular(n - a, e);
            if (static_cast<long long>(basic_set_B(n, e).size()) != convolution) {
                ok = false;
                detail = "n=" + std::to_string(n) + ", e=" + std::to_string(e);
                break;
            }
        }
    report(3, "type B odd e: |basic set| == convolution of e-regular counts, n <= 12", ok, detail);
}

// 4. Type-D structural checks.
void criterion_4() {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 10 && ok; ++n)
        for (int e = 2; e <= 5 && ok; ++e) {
            auto labels = basic_set_D(n, e);
            std::set<std::pair<Partition, Partition>> pairs;
            std::set<Partition> plus, minus;
            for (const auto& label : labels) {
                if (const auto* p = std::get_if<TypeDPairLabel>(&label)) {
                    if (p->first == p->second ||
                        p->first.rank() + p->second.rank() != n) { ok = false; break; }
                    auto key = p->first < p->second ? std::pair{p->first, p->second}
                                                   : std::pair{p->second, p->first};
                    if (!pairs.insert(key).second) { ok = false; break; }
                } else if (const auto* s = std::get_if<TypeDSplitLabel>(&label)) {
                    if (2 * s->lambda.rank() != n) { ok = false; break; }
                    (s->sign > 0 ? plus : minus).insert(s->lambda);
                } else {
                    ok = false;
                    break;
                }
            }
            if (ok && plus != minus) ok = false;
            if (ok && n % 2 == 1 && (!plus.empty() || !minus.empty())) ok = false;
            if (ok && e % 2 == 1) {
                // Independent path: pair condition == componentwise e-regularity.
                std::set<std::pair<Partition, Partition>> expected;
                for (int a = 0; a <= n; ++a)
                    for (const auto& la : enumerate_partitions(a))
                        for (const auto& mu : enumerate_partitions(n - a))
                            if (la != mu && is_e_regular(la, e) && is_e_regular(mu, e))
                                expected.insert(la < mu ? std::pair{la, mu}
                                                        : std::pair{mu, la});
                if (pairs != expected) ok = false;
            }
            if (!ok) detail = "n=" + std::to_string(n) + ", e=" + std::to_string(e);
        }
    report(4, "type D: pair uniqueness, matched splits, rank invariants, odd-e cross-check", ok,
           detail);
}

// 5. Semisimple case.
void criterion_5() {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 10; ++n) {
        WeylType w(WeylFamily::A, n);
        if (static_cast<long long>(basic_set(w, SEMISIMPLE).size()) != irr_count(w)) {
            ok = false;
            detail = "A n=" + std::to_string(n);
        }
    }
    for (int n = 2; n <= 8; ++n)
        for (WeylFamily fam : {WeylFamily::B, WeylFamily::D}) {
            WeylType w(fam, n);
            if (static_cast<long long>(basic_set(w, SEMISIMPLE).size()) != irr_count(w)) {
                ok = false;
                detail = w.to_string();
            }
        }
    report(5, "semisimple: |basic_set(w, SEMISIMPLE)| == |Irr H_K|", ok, detail);
}

// 6. Characteristic reduction.
void criterion_6() {
    bool ok = true;
    std::string detail;
    auto render = [](const std::vector<BasicSetLabel>& labels) {
        std::string s;
        for (const auto& l : labels) s += to_string(l) + "\n";
        return s;
    };
    for (WeylFamily fam : {WeylFamily::A, WeylFamily::B, WeylFamily::D}) {
        int n_min = fam == WeylFamily::A ? 1 : 2;
        for (int n = n_min; n <= 8 && ok; ++n)
            for (int e = 2; e <= 5 && ok; ++e) {
                WeylType w(fam, n);
                std::string base = render(basic_set_char_p(w, e, 0));
                for (int p : {3, 5, 7})
                    if (render(basic_set_char_p(w, e, p)) != base) {
                        ok = false;
                        detail = w.to_string() + " e=" + std::to_string(e) +
                                 " p=" + std::to_string(p);
                    }
                if (fam != WeylFamily::A) {
                    bool threw = false;
                    try {
                        basic_set_char_p(w, e, 2);
                    } catch (const BadCharacteristic&) {
                        threw = true;
                    }
                    if (!threw) {
                        ok = false;
                        detail = w.to_string() + " p=2 not rejected";
                    }
                }
            }
    }
    report(6, "good characteristic reduces to characteristic 0; bad p=2 rejected for B/D", ok,
           detail);
}

// 7. Cyclotomic identities.
void criterion_7() {
    bool ok = true;
    std::string detail;
    auto totient = [](int n) {
        int result = n, m = n;
        for (int p = 2; p * p <= m; ++p) {
            if (m % p) continue;
            while (m % p == 0) m /= p;
            result -= result / p;
        }
        if (m > 1) result -= result / m;
        return result;
    };
    for (int e = 2; e <= 30; ++e) {
        auto r = check_phi_identity(e);
        if (!r.all_hold()) { ok = false; detail = "e=" + std::to_string(e); break; }
        int lhs = cyclotomic(e).substitute_square().degree();
        int rhs = r.parity_even ? cyclotomic(2 * e).degree()
                                : cyclotomic(e).degree() + cyclotomic(2 * e).degree();
        if (lhs != 2 * totient(e) || rhs != lhs) {
            ok = false;
            detail = "degree mismatch at e=" + std::to_string(e);
            break;
        }
    }
    report(7, "cyclotomic Phi identities and degree bookkeeping, e in 2..30", ok, detail);
}

// 8. Hecke arithmetic.
void criterion_8() {
    bool ok = true;
    std::string detail;

    // Exhaustive associativity for |W| <= 24.
    for (auto type : {WeylType(WeylFamily::A, 2), WeylType(WeylFamily::A, 3),
                      WeylType(WeylFamily::B, 2), WeylType(WeylFamily::A, 4)}) {
        auto g = CoxeterGroup::build(type);
        if (g.size > 24) continue;
        for (int x = 0; x < g.size && ok; ++x)
            for (int y = 0; y < g.size && ok; ++y) {
                auto xy = t_multiply(HeckeElement::t(g, x), HeckeElement::t(g, y));
                for (int z = 0; z < g.size; ++z) {
                    auto lhs = t_multiply(xy, HeckeElement::t(g, z));
                    auto rhs = t_multiply(HeckeElement::t(g, x),
                                          t_multiply(HeckeElement::t(g, y), HeckeElement::t(g, z)));
                    if (!(lhs == rhs)) {
                        ok = false;
                        detail = "associativity in " + g.label();
                        break;
                    }
                }
            }
    }

    // Randomized associativity, 1000 triples, for |W| <= 200 (B3 and A4).
    std::mt19937 rng(2024);
    for (auto type : {WeylType(WeylFamily::B, 3), WeylType(WeylFamily::A, 5)}) {
        auto g = CoxeterGroup::build(type);
        std::uniform_int_distribution<int> pick(0, g.size - 1);
        for (int trial = 0; trial < 1000 && ok; ++trial) {
            int x = pick(rng), y = pick(rng), z = pick(rng);
            auto lhs = t_multiply(t_multiply(HeckeElement::t(g, x), HeckeElement::t(g, y)),
                                  HeckeElement::t(g, z));
            auto rhs = t_multiply(HeckeElement::t(g, x),
                                  t_multiply(HeckeElement::t(g, y), HeckeElement::t(g, z)));
            if (!(lhs == rhs)) {
                ok = false;
                detail = "randomized associativity in " + g.label();
            }
        }
    }

    // v -> 1 degeneration reproduces the group multiplication table.
    for (auto type : {WeylType(WeylFamily::A, 3), WeylType(WeylFamily::B, 2),
                      WeylType(WeylFamily::B, 3)}) {
        auto g = CoxeterGroup::build(type);
        for (int x = 0; x < g.size && ok; ++x)
            for (int y = 0; y < g.size; ++y) {
                auto product = t_multiply(HeckeElement::t(g, x), HeckeElement::t(g, y));
                int xy = g.product(x, y);
                long long total = 0;
                bool good = true;
                for (const auto& [w, c] : product.coords()) {
                    long long at_one = c.evaluate_at_one();
                    total += at_one;
                    if (at_one != (w == xy ? 1 : 0)) good = false;
                }
                if (!good || total != 1) {
                    ok = false;
                    detail = "v->1 degeneration in " + g.label();
                    break;
                }
            }
    }

    report(8, "Hecke T-basis: associativity (exhaustive + randomized), v->1 degeneration", ok,
           detail);
}

// 9. a-function vs RSK oracle.
void criterion_9() {
    bool ok = true;
    std::string detail;

    for (auto type : {WeylType(WeylFamily::A, 2), WeylType(WeylFamily::A, 3),
                      WeylType(WeylFamily::A, 4), WeylType(WeylFamily::B, 2),
                      WeylType(WeylFamily::B, 3)}) {
        auto g = CoxeterGroup::build(type);
        auto table = KLTable::build(g);
        if (table.a_value(g.identity) != 0) {
            ok = false;
            detail = "a(e) != 0 in " + g.label();
        }
        if (table.a_value(g.longest) != g.length[static_cast<std::size_t>(g.longest)]) {
            ok = false;
            detail = "a(w0) != l(w0) in " + g.label();
        }
    }

    // Type A ranks 1..4 (symmetric groups on 2..5 letters): a constant on
    // RSK-shape fibers and equal to exactly one of n(shape), n(shape')
    // uniformly across the group.
    bool matches_n = true, matches_n_conj = true;
    for (int letters = 2; letters <= 5 && ok; ++letters) {
        auto g = CoxeterGroup::build(WeylType(WeylFamily::A, letters));
        auto table = KLTable::build(g);
        std::map<Partition, int> fiber_value;
        for (int w = 0; w < g.size; ++w) {
            std::vector<int> perm = g.perm[static_cast<std::size_t>(w)];
            Partition shape = rsk_shape(perm);
            int a = table.a_value(w);
            auto [it, inserted] = fiber_value.emplace(shape, a);
            if (!inserted && it->second != a) {
                ok = false;
                detail = "a not constant on RSK fiber " + shape.to_string() + " in " + g.label();
                break;
            }
            auto [n_stat, n_conj_stat] = rsk_cell_avalue_typeA(perm);
            if (a != n_stat) matches_n = false;
            if (a != n_conj_stat) matches_n_conj = false;
        }
    }
    if (ok && matches_n == matches_n_conj) {
        ok = false;
        detail = matches_n ? "a matches both n(shape) and n(shape')"
                           : "a matches neither n(shape) nor n(shape')";
    }

    report(9, "a-function: a(e)=0, a(w0)=l(w0), RSK fibers match one n-statistic uniformly", ok,
           detail);
}

std::string run_cli(const std::string& command) {
    std::string output;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return output;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    pclose(pipe);
    return output;
}

// 10. CLI determinism and label round trip.
void criterion_10(const char* cli_path) {
    bool ok = true;
    std::string detail;

    if (cli_path == nullptr) {
        report(10, "CLI determinism + label round trip", false, "no CLI binary path given");
        return;
    }

    std::vector<std::string> invocations = {
        std::string(cli_path) + " basic-set --type A --n 6 --e 3 --format json",
        std::string(cli_path) + " basic-set --type B --n 4 --e 2 --format text",
        std::string(cli_path) + " basic-set --type D --n 5 --e 4 --format csv",
        std::string(cli_path) + " count --type B --n 6 --e 3 --format json",
        std::string(cli_path) + " afunction --group B2",
        std::string(cli_path) + " cyclo --e 7",
    };
    for (const auto& cmd : invocations) {
        std::string first = run_cli(cmd);
        std::string second = run_cli(cmd);
        if (first.empty() || first != second) {
            ok = false;
            detail = "non-deterministic or empty output: " + cmd;
            break;
        }
    }

    // Round trip 500 labels drawn across types and parameters.
    if (ok) {
        std::mt19937 rng(99);
        std::vector<BasicSetLabel> corpus;
        for (int n = 2; n <= 8 && corpus.size() < 2000; ++n)
            for (int e = 2; e <= 5; ++e) {
                for (auto& l : basic_set(WeylType(WeylFamily::A, n), e)) corpus.push_back(l);
                for (auto& l : basic_set(WeylType(WeylFamily::B, n), e)) corpus.push_back(l);
                for (auto& l : basic_set(WeylType(WeylFamily::D, n), e)) corpus.push_back(l);
            }
        std::shuffle(corpus.begin(), corpus.end(), rng);
        std::size_t count = std::min<std::size_t>(500, corpus.size());
        for (std::size_t i = 0; i < count; ++i) {
            std::string text = to_string(corpus[i]);
            BasicSetLabel reparsed = parse_label(text);
            if (to_string(reparsed) != text) {
                ok = false;
                detail = "round trip failed for " + text;
                break;
            }
        }
        if (count < 500) {
            ok = false;
            detail = "corpus smaller than 500 labels";
        }
    }

    report(10, "CLI determinism + label round trip (500 labels)", ok, detail);
}

} // namespace

int main(int argc, char** argv) {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10(argc > 1 ? argv[1] : nullptr);

    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
