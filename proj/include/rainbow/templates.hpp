#pragma once

// r-templates of order n: a palette P(x) of allowed colors for every
// x in [n]. Rainbow-sum counting over subtemplates, the goodness predicate,
// and palette-size profiles.

#include <cstdint>
#include <vector>

#include "rainbow/integer_set.hpp"
#include "rainbow/numeric.hpp"

namespace rainbow {

class Template {
  public:
    Template() = default;
    Template(int n, int r);

    int order() const { return n_; }
    int colors() const { return r_; }

    // Palettes are bitmasks over colors 1..r (bit c-1 = color c).
    uint32_t palette(int x) const;
    void set_palette(int x, uint32_t mask);
    void add_color(int x, int color);
    int palette_size(int x) const;

    static Template full(int n, int r);  // every palette = [r]
    // A coloring of A viewed as a template: singleton palettes on A, empty
    // palettes elsewhere. colors[i] colors the i-th smallest member of A.
    static Template from_coloring(const IntegerSet& a, int r, const std::vector<int>& colors);

    bool operator==(const Template&) const = default;

  private:
    void check_element(int x) const;
    int n_ = 0, r_ = 0;
    std::vector<uint32_t> palettes_;
};

// Pointwise palette inclusion. Mismatched order or color count is a domain
// error.
bool is_subtemplate(const Template& p1, const Template& p2);

// RS(P): over every restricted triple (a,b,c) of [n], the number of color
// choices (ca, cb, cc) from P(a) x P(b) x P(c) that are pairwise distinct.
// Per-triple inclusion-exclusion:
//   |Pa||Pb||Pc| - |Pa^Pb||Pc| - |Pa^Pc||Pb| - |Pb^Pc||Pa| + 2|Pa^Pb^Pc|
BigCount rs_count(const Template& p);

// Exposed for the exhaustive cross-check against brute-force enumeration.
long long rainbow_choices(uint32_t pa, uint32_t pb, uint32_t pc);

// Good template of A: nonempty palette on every element of A, and
// RS(P) <= n^(-1/3) s([n]). The flag is decided exactly via
// RS^3 * n <= s([n])^3; the slack is reported as a 50-digit float.
struct GoodnessReport {
    bool nonempty_palettes = false;
    bool rs_within_budget = false;
    bool good = false;
    BigCount rs;
    Real budget;  // n^(-1/3) s([n])
    Real slack;   // budget - rs
};
GoodnessReport is_good(const Template& p, const IntegerSet& a);

// Counts of domain elements with palette size exactly 1, exactly 2, and
// >= 3; empty palettes are tallied separately.
struct PaletteProfile {
    long long x1 = 0, x2 = 0, x3 = 0;
    long long empty = 0;
};
PaletteProfile palette_profile(const Template& p, const IntegerSet& domain);

// Y_{i,j}: domain elements whose palette is exactly {i, j}. The comparison
// threshold (1 - 2 delta) n uses a caller-supplied delta; there is no
// silent default.
long long palette_pair_count(const Template& p, const IntegerSet& domain, int i, int j);

}  // namespace rainbow
