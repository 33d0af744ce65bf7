#include "rainbow/templates.hpp"

#include <bit>

namespace rainbow {

Template::Template(int n, int r) : n_(n), r_(r), palettes_(static_cast<size_t>(n), 0) {
    if (n < 0) throw std::domain_error("template order must be nonnegative");
    if (r < 0 || r > 31) throw std::domain_error("color count must be in [0, 31]");
}

void Template::check_element(int x) const {
    if (x < 1 || x > n_)
        throw std::domain_error("element " + std::to_string(x) + " outside [" +
                                std::to_string(n_) + "]");
}

uint32_t Template::palette(int x) const {
    check_element(x);
    return palettes_[static_cast<size_t>(x - 1)];
}

void Template::set_palette(int x, uint32_t mask) {
    check_element(x);
    if (r_ < 32 && (mask >> r_) != 0)
        throw std::domain_error("palette color outside [r] at element " + std::to_string(x));
    palettes_[static_cast<size_t>(x - 1)] = mask;
}

void Template::add_color(int x, int color) {
    check_element(x);
    if (color < 1 || color > r_)
        throw std::domain_error("color " + std::to_string(color) + " outside [r]");
    palettes_[static_cast<size_t>(x - 1)] |= uint32_t{1} << (color - 1);
}

int Template::palette_size(int x) const { return std::popcount(palette(x)); }

Template Template::full(int n, int r) {
    Template t(n, r);
    uint32_t all = r == 0 ? 0 : (r == 32 ? ~uint32_t{0} : (uint32_t{1} << r) - 1);
    for (int x = 1; x <= n; ++x) t.set_palette(x, all);
    return t;
}

Template Template::from_coloring(const IntegerSet& a, int r, const std::vector<int>& colors) {
    std::vector<int> ms = a.members();
    if (colors.size() != ms.size())
        throw std::domain_error("coloring length does not match |A|");
    Template t(a.ambient(), r);
    for (size_t i = 0; i < ms.size(); ++i) t.add_color(ms[i], colors[i]);
    return t;
}

bool is_subtemplate(const Template& p1, const Template& p2) {
    if (p1.order() != p2.order() || p1.colors() != p2.colors())
        throw std::domain_error("subtemplate test requires matching order and color count");
    for (int x = 1; x <= p1.order(); ++x)
        if ((p1.palette(x) & ~p2.palette(x)) != 0) return false;
    return true;
}

long long rainbow_choices(uint32_t pa, uint32_t pb, uint32_t pc) {
    long long a = std::popcount(pa), b = std::popcount(pb), c = std::popcount(pc);
    long long ab = std::popcount(pa & pb), ac = std::popcount(pa & pc),
              bc = std::popcount(pb & pc);
    long long abc = std::popcount(pa & pb & pc);
    return a * b * c - ab * c - ac * b - bc * a + 2 * abc;
}

BigCount rs_count(const Template& p) {
    BigCount total = 0;
    IntegerSet ground = IntegerSet::full(p.order());
    for (const RestrictedTriple& tr : restricted_triples(ground))
        total += rainbow_choices(p.palette(tr.a), p.palette(tr.b), p.palette(tr.c));
    return total;
}

GoodnessReport is_good(const Template& p, const IntegerSet& a) {
    if (p.order() != a.ambient())
        throw std::domain_error("template order must equal the set's ambient n");
    GoodnessReport rep;
    rep.nonempty_palettes = true;
    for (int x : a.members())
        if (p.palette_size(x) == 0) {
            rep.nonempty_palettes = false;
            break;
        }
    rep.rs = rs_count(p);
    long long n = p.order();
    BigCount s = full_interval_triple_count(n);
    // RS <= n^(-1/3) s  <=>  RS^3 n <= s^3 (both sides nonnegative)
    rep.rs_within_budget = rep.rs * rep.rs * rep.rs * n <= s * s * s;
    rep.budget = n > 0 ? to_real(s) / pow(Real(n), Real(1) / 3) : Real(0);
    rep.slack = rep.budget - to_real(rep.rs);
    rep.good = rep.nonempty_palettes && rep.rs_within_budget;
    return rep;
}

long long palette_pair_count(const Template& p, const IntegerSet& domain, int i, int j) {
    if (i < 1 || i > p.colors() || j < 1 || j > p.colors() || i == j)
        throw std::domain_error("palette pair requires two distinct colors in [r]");
    uint32_t pair = (uint32_t{1} << (i - 1)) | (uint32_t{1} << (j - 1));
    long long count = 0;
    for (int x : domain.members())
        if (p.palette(x) == pair) ++count;
    return count;
}

PaletteProfile palette_profile(const Template& p, const IntegerSet& domain) {
    if (p.order() < domain.ambient())
        throw std::domain_error("domain exceeds template order");
    PaletteProfile prof;
    for (int x : domain.members()) {
        switch (int sz = p.palette_size(x); sz) {
            case 0: ++prof.empty; break;
            case 1: ++prof.x1; break;
            case 2: ++prof.x2; break;
            default: ++prof.x3; break;
        }
    }
    return prof;
}

}  // namespace rainbow
