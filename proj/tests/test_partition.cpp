#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "canbase/partition.hpp"

using namespace canbase;

namespace {

// Independent counting oracle: p(n) by the Euler pentagonal-number
// recurrence, no shared code with the enumerator.
long long partition_count_oracle(int n) {
    std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long long s = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) s += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) s += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = s;
    }
    return p[static_cast<std::size_t>(n)];
}

} // namespace

TEST_CASE("partition construction and invariants") {
    CHECK(Partition{}.rank() == 0);
    CHECK(Partition({3, 1}).rank() == 4);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("part_at zero extension") {
    Partition p({3, 1});
    CHECK(p.part_at(1) == 3);
    CHECK(p.part_at(2) == 1);
    CHECK(p.part_at(5) == 0);
    CHECK(Partition{}.part_at(1) == 0);
    CHECK_THROWS_AS(p.part_at(0), std::invalid_argument);
}

TEST_CASE("enumerate_partitions canonical order") {
    auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p4 = enumerate_partitions(4);
    std::vector<Partition> expected = {Partition({4}), Partition({3, 1}), Partition({2, 2}),
                                       Partition({2, 1, 1}), Partition({1, 1, 1, 1})};
    CHECK(p4 == expected);

    CHECK(enumerate_partitions(10).size() == 42);
}

TEST_CASE("enumerate_partitions matches pentagonal recurrence and is duplicate-free") {
    for (int n = 0; n <= 18; ++n) {
        auto parts = enumerate_partitions(n);
        CHECK(static_cast<long long>(parts.size()) == partition_count_oracle(n));
        std::set<Partition> distinct(parts.begin(), parts.end());
        CHECK(distinct.size() == parts.size());
        for (const auto& p : parts) CHECK(p.rank() == n);
    }
}

TEST_CASE("is_e_regular") {
    CHECK(is_e_regular(Partition({2, 1}), 2));
    CHECK_FALSE(is_e_regular(Partition({1, 1}), 2));
    CHECK(is_e_regular(Partition{}, 3));
    CHECK(is_e_regular(Partition({3, 3}), 3));
    CHECK_FALSE(is_e_regular(Partition({3, 3, 3}), 3));
    CHECK_THROWS_AS(is_e_regular(Partition({1}), 1), std::invalid_argument);
}

TEST_CASE("e-regularity is monotone in e") {
    for (int n = 0; n <= 12; ++n)
        for (const auto& p : enumerate_partitions(n))
            for (int e = 2; e <= 5; ++e)
                if (is_e_regular(p, e))
                    for (int ep = e; ep <= 6; ++ep) CHECK(is_e_regular(p, ep));
}

TEST_CASE("counting oracles") {
    CHECK(count_e_regular(5, 2) == 3);
    CHECK(count_e_regular(0, 4) == 1);
    CHECK(count_e_regular(6, 3) == 7);
    CHECK(count_parts_not_divisible(5, 2) == 3);
    CHECK(count_parts_not_divisible(0, 3) == 1);
    CHECK(count_parts_not_divisible(6, 3) == 7);
}

TEST_CASE("partition text round trip") {
    CHECK(Partition({4, 2, 1}).to_string() == "[4,2,1]");
    CHECK(Partition{}.to_string() == "[]");
    CHECK(Partition::parse("[4,2,1]") == Partition({4, 2, 1}));
    CHECK(Partition::parse(" [ 4 , 2 , 1 ] ") == Partition({4, 2, 1}));
    CHECK(Partition::parse("[]") == Partition{});
    CHECK_THROWS_AS(Partition::parse("[2,3]"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("[1,]"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("[1] x"), std::invalid_argument);
    for (int n = 0; n <= 9; ++n)
        for (const auto& p : enumerate_partitions(n))
            CHECK(Partition::parse(p.to_string()) == p);
}
