#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rainbow/counting.hpp"

using namespace rainbow;

namespace {

IntegerSet set_of(int n, std::initializer_list<int> ms) {
    return IntegerSet(n, std::vector<int>(ms));
}

}  // namespace

// Frozen regression values, each recomputed here by the independent flat
// enumerator before being asserted against both engines.
TEST_CASE("pinned exact counts") {
    struct Pin {
        IntegerSet a;
        int r;
        BigCount expected;
    };
    std::vector<Pin> pins = {
        {set_of(3, {1, 2, 3}), 3, 21},   {IntegerSet::full(4), 3, 51},
        {IntegerSet::full(4), 8, 736},   {IntegerSet::i1(6), 3, 147},
        {IntegerSet::i1(6), 8, 3872},    {IntegerSet::i3(7), 5, 1625},
    };
    for (const Pin& pin : pins) {
        CAPTURE(pin.a.to_literal());
        CAPTURE(pin.r);
        CHECK(oracle::g_enumerate(pin.a, pin.r) == pin.expected);
        CHECK(count_naive(pin.a, pin.r) == pin.expected);
        CHECK(count_partition(pin.a, pin.r).g == pin.expected);
    }
}

TEST_CASE("one or two colors make every coloring rainbow-free") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 30; ++trial) {
        IntegerSet a = oracle::random_subset(10, rng);
        for (int r : {1, 2}) {
            BigCount expected = pow_big(r, static_cast<unsigned long>(a.size()));
            CHECK(count_naive(a, r) == expected);
            CHECK(count_partition(a, r).g == expected);
        }
    }
}

TEST_CASE("zero colors") {
    CHECK(count_naive(IntegerSet(5), 0) == 1);
    CHECK(count_partition(IntegerSet(5), 0).g == 1);
    CHECK(count_naive(set_of(5, {2, 4}), 0) == 0);
    CHECK(count_partition(set_of(5, {2, 4}), 0).g == 0);
}

TEST_CASE("partition profiles") {
    auto [g, profile] = count_partition(set_of(3, {1, 2, 3}), 3);
    REQUIRE(profile.p.size() == 4);
    CHECK(profile.p[0] == 0);
    CHECK(profile.p[1] == 1);
    CHECK(profile.p[2] == 3);
    CHECK(profile.p[3] == 0);  // the all-singletons partition tricolors 1+2=3
    CHECK(g == 21);

    auto empty = count_partition(IntegerSet(4), 6);
    CHECK(empty.profile.p[0] == 1);
    CHECK(empty.g == 1);

    // I2(6) has no triples: all Bell(4) = 15 partitions valid
    auto i2 = count_partition(IntegerSet::i2(6), 8);
    BigCount parts = 0;
    for (const auto& p : i2.profile.p) parts += p;
    CHECK(parts == 15);
    CHECK(i2.g == 4096);
}

TEST_CASE("oracle equivalence on all subsets of [7], r=3") {
    for (uint64_t mask = 0; mask < (1u << 7); ++mask) {
        IntegerSet a = IntegerSet::from_mask(7, mask);
        BigCount expected = oracle::g_enumerate(a, 3);
        CHECK(count_naive(a, 3) == expected);
        CHECK(count_partition(a, 3).g == expected);
    }
}

TEST_CASE("engines agree on random sets across r") {
    std::mt19937_64 rng(997);
    for (int trial = 0; trial < 60; ++trial) {
        IntegerSet a = oracle::random_subset(11, rng);
        for (int r : {3, 5, 9}) CHECK(count_naive(a, r) == count_partition(a, r).g);
    }
}

TEST_CASE("engines agree on larger ground sets") {
    std::mt19937_64 rng(1601);
    int done = 0;
    while (done < 8) {
        IntegerSet a = oracle::random_subset(16, rng);
        if (a.size() > 13) continue;  // keep the naive engine's tree bounded
        CHECK(count_naive(a, 5) == count_partition(a, 5).g);
        ++done;
    }
}

TEST_CASE("closed forms") {
    CHECK(closed_form(ClosedFormFamily::I1, 6, 3) == 147);
    CHECK(closed_form(ClosedFormFamily::I3, 7, 5) == 1625);
    CHECK(closed_form(ClosedFormFamily::Eq1LowerBound, 6, 3) == 189);
    CHECK(closed_form(ClosedFormFamily::I2, 8, 5) == pow_big(5, 5));

    CHECK_THROWS_AS(closed_form(ClosedFormFamily::I1, 7, 3), std::domain_error);
    CHECK_THROWS_AS(closed_form(ClosedFormFamily::I1, 4, 3), std::domain_error);
    CHECK_THROWS_AS(closed_form(ClosedFormFamily::I3, 8, 3), std::domain_error);
    CHECK_THROWS_AS(closed_form(ClosedFormFamily::I3, 3, 3), std::domain_error);

    CHECK(closed_form_family_from_string("eq1-lower-bound") ==
          ClosedFormFamily::Eq1LowerBound);
    CHECK_THROWS_AS(closed_form_family_from_string("I9"), std::domain_error);
}

TEST_CASE("closed forms match the partition engine") {
    for (int n = 6; n <= 12; n += 2)
        for (int r = 3; r <= 9; ++r) {
            CHECK(count_partition(IntegerSet::i1(n), r).g ==
                  closed_form(ClosedFormFamily::I1, n, r));
            CHECK(count_partition(IntegerSet::i2(n), r).g ==
                  closed_form(ClosedFormFamily::I2, n, r));
        }
    for (int n = 5; n <= 11; n += 2)
        for (int r = 3; r <= 9; ++r)
            CHECK(count_partition(IntegerSet::i3(n), r).g ==
                  closed_form(ClosedFormFamily::I3, n, r));
}

TEST_CASE("r^|A| upper bound with equality exactly on triple-free sets") {
    for (uint64_t mask = 0; mask < (1u << 10); ++mask) {
        IntegerSet a = IntegerSet::from_mask(10, mask);
        BigCount g = count_partition(a, 3).g;
        BigCount cap = pow_big(3, static_cast<unsigned long>(a.size()));
        CHECK(g <= cap);
        CHECK((g == cap) == (restricted_triple_count(a) == 0));
    }
}

TEST_CASE("two-color lower bound and extension bound") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        IntegerSet a = oracle::random_subset(10, rng);
        if (a.empty()) continue;
        for (int r : {2, 3, 5, 8}) {
            BigCount g = count_partition(a, r).g;
            BigCount lower = binomial(static_cast<unsigned>(r), 2) *
                                 (pow_big(2, static_cast<unsigned long>(a.size())) - 2) +
                             r;
            CHECK(g >= lower);
        }
        // g(A + {x}, r) <= r g(A, r)
        for (int x = 1; x <= 10; ++x) {
            if (a.contains(x)) continue;
            IntegerSet bigger = a;
            bigger.insert(x);
            CHECK(count_partition(bigger, 4).g <= 4 * count_partition(a, 4).g);
            break;
        }
    }
}

TEST_CASE("color-permutation divisibility via the partition identity") {
    std::mt19937_64 rng(8080);
    for (int trial = 0; trial < 25; ++trial) {
        IntegerSet a = oracle::random_subset(9, rng);
        int r = 4;
        auto [g, profile] = count_partition(a, r);
        BigCount fewer_colors = 0;
        for (size_t j = 0; j + 1 < profile.p.size(); ++j)
            fewer_colors += profile.p[j] * falling_factorial(static_cast<unsigned>(r),
                                                             static_cast<unsigned>(j));
        BigCount full_color = g - fewer_colors;
        CHECK(full_color % falling_factorial(static_cast<unsigned>(r),
                                             static_cast<unsigned>(r)) ==
              0);
    }
}

TEST_CASE("count cache") {
    CountCache cache;
    IntegerSet a = IntegerSet::i1(8);
    CHECK(cache.get(a, 5) == std::nullopt);
    BigCount first = count_partition_cached(a, 5, cache);
    CHECK(cache.size() == 1);
    CHECK(cache.hits() == 0);
    CHECK(count_partition_cached(a, 5, cache) == first);
    CHECK(cache.hits() == 1);
    // ambient distinguishes entries
    count_partition_cached(IntegerSet::i1(8).with_ambient(10), 5, cache);
    CHECK(cache.size() == 2);
    cache.clear();
    CHECK(cache.size() == 0);
}
