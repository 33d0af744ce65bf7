#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rainbow/counting.hpp"
#include "rainbow/json_io.hpp"
#include "rainbow/templates.hpp"

using namespace rainbow;

namespace {

Template random_template(int n, int r, std::mt19937_64& rng) {
    Template t(n, r);
    uint32_t all = (uint32_t{1} << r) - 1;
    for (int x = 1; x <= n; ++x) t.set_palette(x, static_cast<uint32_t>(rng()) & all);
    return t;
}

}  // namespace

TEST_CASE("subtemplate relation") {
    Template full = Template::full(6, 3);
    IntegerSet a = IntegerSet::i2(6);
    Template coloring = Template::from_coloring(a, 3, {1, 2, 2, 3});
    CHECK(is_subtemplate(coloring, full));
    CHECK_FALSE(is_subtemplate(full, coloring));
    CHECK(is_subtemplate(full, full));
    CHECK(is_subtemplate(coloring, coloring));

    Template p1(4, 3), p2(4, 3);
    p1.set_palette(3, 0b010);
    p2.set_palette(3, 0b101);
    CHECK_FALSE(is_subtemplate(p1, p2));

    CHECK_THROWS_AS(is_subtemplate(Template(4, 3), Template(5, 3)), std::domain_error);
    CHECK_THROWS_AS(is_subtemplate(Template(4, 3), Template(4, 4)), std::domain_error);
}

TEST_CASE("rainbow subtemplate counts") {
    CHECK(rs_count(Template::full(6, 3)) == 36);  // 6 triples x 3!
    // s([n]) r(r-1)(r-2) for full palettes, across sizes
    for (int n : {3, 7, 10})
        for (int r : {3, 4, 5})
            CHECK(rs_count(Template::full(n, r)) ==
                  BigCount(full_interval_triple_count(n)) * r * (r - 1) * (r - 2));

    Template mono(6, 3);
    for (int x = 1; x <= 6; ++x) mono.set_palette(x, 0b001);
    CHECK(rs_count(mono) == 0);

    Template forced(3, 3);
    forced.set_palette(1, 0b001);
    forced.set_palette(2, 0b010);
    forced.set_palette(3, 0b100);
    CHECK(rs_count(forced) == 1);
}

TEST_CASE("per-triple inclusion-exclusion, exhaustive at r=3") {
    for (uint32_t pa = 0; pa < 8; ++pa)
        for (uint32_t pb = 0; pb < 8; ++pb)
            for (uint32_t pc = 0; pc < 8; ++pc)
                CHECK(rainbow_choices(pa, pb, pc) ==
                      oracle::rainbow_choices_brute(pa, pb, pc, 3));
}

TEST_CASE("per-triple inclusion-exclusion, sampled at r=5") {
    std::mt19937_64 rng(350);
    for (int trial = 0; trial < 2000; ++trial) {
        uint32_t pa = rng() & 31, pb = rng() & 31, pc = rng() & 31;
        CHECK(rainbow_choices(pa, pb, pc) == oracle::rainbow_choices_brute(pa, pb, pc, 5));
    }
}

TEST_CASE("rs_count is monotone under subtemplates") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        Template p2 = random_template(9, 4, rng);
        Template p1 = p2;
        // knock random colors out to get a subtemplate
        for (int x = 1; x <= 9; ++x)
            p1.set_palette(x, p1.palette(x) & static_cast<uint32_t>(rng()));
        REQUIRE(is_subtemplate(p1, p2));
        CHECK(rs_count(p1) <= rs_count(p2));
    }
}

TEST_CASE("goodness") {
    // rainbow-free coloring of a triple-free set, extended by empty palettes
    IntegerSet a = IntegerSet::i2(6);
    Template coloring = Template::from_coloring(a, 3, {1, 2, 3, 1});
    auto rep = is_good(coloring, a);
    CHECK(rep.good);
    CHECK(rep.rs == 0);

    auto full = is_good(Template::full(6, 3), IntegerSet::full(6));
    CHECK_FALSE(full.good);
    CHECK(full.rs == 36);
    CHECK(full.budget < 4);  // 6^(2/3) ~ 3.30
    CHECK(full.budget > 3);
    CHECK(full.slack < 0);

    Template missing(6, 3);  // empty palette on an element of A
    auto bad = is_good(missing, IntegerSet::i2(6));
    CHECK_FALSE(bad.good);
    CHECK_FALSE(bad.nonempty_palettes);
    CHECK(bad.rs_within_budget);

    CHECK_THROWS_AS(is_good(Template::full(5, 3), IntegerSet::full(6)), std::domain_error);
}

TEST_CASE("palette profiles") {
    CHECK(palette_profile(Template::full(10, 4), IntegerSet::full(10)).x3 == 10);

    IntegerSet a(7, {2, 4, 6});
    Template coloring = Template::from_coloring(a, 5, {1, 1, 2});
    auto prof = palette_profile(coloring, a);
    CHECK(prof.x1 == 3);
    CHECK(prof.x2 == 0);
    CHECK(prof.x3 == 0);
    auto prof_full = palette_profile(coloring, IntegerSet::full(7));
    CHECK(prof_full.x1 == 3);
    CHECK(prof_full.empty == 4);

    Template sizes(4, 4);
    sizes.set_palette(1, 0b0001);
    sizes.set_palette(2, 0b0011);
    sizes.set_palette(3, 0b0111);
    sizes.set_palette(4, 0b1111);
    auto p = palette_profile(sizes, IntegerSet::full(4));
    CHECK(p.x1 == 1);
    CHECK(p.x2 == 1);
    CHECK(p.x3 == 2);
}

TEST_CASE("coloring-template bridge on subsets of [7]") {
    // rainbow-free colorings of A are exactly the colorings-as-templates that
    // sit below the full template with RS = 0
    int r = 3;
    for (uint64_t mask = 0; mask < (1u << 7); ++mask) {
        IntegerSet a = IntegerSet::from_mask(7, mask);
        std::vector<int> ms = a.members();
        Template full = Template::full(7, r);
        long long zero_rs = 0;
        std::vector<int> colors(ms.size(), 1);
        for (;;) {
            Template t = Template::from_coloring(a, r, colors);
            if (is_subtemplate(t, full) && rs_count(t) == 0) ++zero_rs;
            size_t pos = 0;
            while (pos < colors.size() && ++colors[pos] > r) colors[pos++] = 1;
            if (pos == colors.size()) break;
            if (ms.empty()) break;
        }
        BigCount expected = count_naive(a, r);
        CHECK(BigCount(zero_rs) == expected);
    }
}

TEST_CASE("colorings-as-templates are total with colors in [r]") {
    IntegerSet a = IntegerSet::i2(6);
    CHECK_THROWS_AS(Template::from_coloring(a, 3, {1, 2}), std::domain_error);  // not total
    CHECK_THROWS_AS(Template::from_coloring(a, 3, {1, 2, 3, 4}), std::domain_error);
    CHECK_THROWS_AS(Template::from_coloring(a, 3, {1, 2, 3, 0}), std::domain_error);
}

TEST_CASE("palette pair counts") {
    Template t(6, 4);
    t.set_palette(1, 0b0011);  // {1,2}
    t.set_palette(2, 0b0011);
    t.set_palette(3, 0b0110);  // {2,3}
    t.set_palette(4, 0b0001);
    t.set_palette(5, 0b0011);
    CHECK(palette_pair_count(t, IntegerSet::full(6), 1, 2) == 3);
    CHECK(palette_pair_count(t, IntegerSet::full(6), 2, 3) == 1);
    CHECK(palette_pair_count(t, IntegerSet::full(6), 1, 4) == 0);
    CHECK(palette_pair_count(t, IntegerSet(6, {3, 4}), 2, 3) == 1);
    CHECK_THROWS_AS(palette_pair_count(t, IntegerSet::full(6), 2, 2), std::domain_error);
    CHECK_THROWS_AS(palette_pair_count(t, IntegerSet::full(6), 0, 2), std::domain_error);
}

TEST_CASE("template JSON round trip") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 50; ++trial) {
        Template t = random_template(8, 5, rng);
        Json j = template_to_json(t);
        CHECK(template_from_json(j) == t);
    }
    // omitted palettes parse as empty
    Json j{{"n", 4}, {"r", 3}, {"palettes", Json{{"2", Json::array({1, 3})}}}};
    Template t = template_from_json(j);
    CHECK(t.palette(1) == 0);
    CHECK(t.palette(2) == 0b101);
    CHECK(t.palette_size(3) == 0);
}
