#pragma once

// Ground-set representation: subsets of [n] = {1..n} as dense bitmasks,
// restricted/classical Schur triple enumeration, and sumset arithmetic.
// The ambient n is part of a set's identity: {1,2} in [4] != {1,2} in [6].

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

// Ordered triple a < b < c with a + b = c. Three distinct elements; the
// only kind of triple a rainbow coloring can violate.
struct RestrictedTriple {
    int a = 0, b = 0, c = 0;

    RestrictedTriple(int a_, int b_, int c_) : a(a_), b(b_), c(c_) {
        if (!(a < b && b < c && a + b == c))
            throw std::domain_error("restricted triple requires a<b<c, a+b=c");
    }
    bool contains(int t) const { return t == a || t == b || t == c; }
    auto operator<=>(const RestrictedTriple&) const = default;
};

// Classical Schur triple x <= y < z with x + y = z (x = y permitted).
struct SchurTriple {
    int x = 0, y = 0, z = 0;

    SchurTriple(int x_, int y_, int z_) : x(x_), y(y_), z(z_) {
        if (!(x <= y && y < z && x + y == z))
            throw std::domain_error("Schur triple requires x<=y<z, x+y=z");
    }
    auto operator<=>(const SchurTriple&) const = default;
};

class IntegerSet {
  public:
    IntegerSet() = default;
    explicit IntegerSet(int n) : n_(check_ambient(n)), bits_((n + 63) / 64, 0) {}
    IntegerSet(int n, const std::vector<int>& members);

    // The named families from the extremal-candidate zoo. Each constructor
    // rejects n below the smallest value where the definition is non-degenerate.
    static IntegerSet full(int n);                 // [n]
    static IntegerSet interval(int n, int lo, int hi);
    static IntegerSet odds(int n);                 // O = {1,3,...,2*ceil(n/2)-1}
    static IntegerSet i0(int n);                   // [floor(n/2)+1, n]
    static IntegerSet i1(int n);                   // [n/2-1, n], n even
    static IntegerSet i2(int n);                   // [n/2, n],   n even
    static IntegerSet i3(int n);                   // [(n-1)/2, n], n odd

    int ambient() const { return n_; }
    int size() const;
    bool empty() const { return size() == 0; }

    bool contains(int m) const {
        return m >= 1 && m <= n_ && (bits_[(m - 1) >> 6] >> ((m - 1) & 63)) & 1u;
    }
    void insert(int m);
    void erase(int m);

    std::vector<int> members() const;  // ascending
    int min_element() const;           // throws on empty set

    // Same ambient and same members.
    bool operator==(const IntegerSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    // Canonical encoding order: ambient first, then the bitmask as a
    // little-endian integer. Used wherever results are sorted.
    std::strong_ordering operator<=>(const IntegerSet& o) const;

    // Compact literal: maximal runs joined by '+', e.g. "1..4+9..12", "7",
    // "empty(6)". Re-parses losslessly given the ambient.
    std::string to_literal() const;

    // Re-ambient to a larger interval (members preserved).
    IntegerSet with_ambient(int n) const;

    uint64_t low_mask() const { return bits_.empty() ? 0 : bits_[0]; }
    static IntegerSet from_mask(int n, uint64_t mask);

  private:
    static int check_ambient(int n) {
        if (n < 0) throw std::domain_error("ambient n must be nonnegative");
        return n;
    }
    int n_ = 0;
    std::vector<uint64_t> bits_;
};

// S(A): all restricted Schur triples within A, sorted lexicographically.
std::vector<RestrictedTriple> restricted_triples(const IntegerSet& a);
long long restricted_triple_count(const IntegerSet& a);  // s(A) without materializing

// S(t, A): the triples of S(A) containing t. Requires t in A.
std::vector<RestrictedTriple> triples_through(int t, const IntegerSet& a);
long long triples_through_count(int t, const IntegerSet& a);  // s(t, A)

// Classical count: x <= y < z, x + y = z, all in A.
long long schur_triple_count(const IntegerSet& a);
std::vector<SchurTriple> schur_triples(const IntegerSet& a);

// s([n]) closed form: (n^2-2n)/4 for even n, (n^2-2n+1)/4 otherwise.
long long full_interval_triple_count(long long n);

// Sumset/difference set. Values may leave [n]; they are returned unclipped
// together with the ambient the inputs lived in.
struct ShiftedSet {
    std::vector<int> values;  // sorted ascending, may be negative for diffs
    int ambient = 0;          // max of the input ambients
};
ShiftedSet sumset(const IntegerSet& a, const IntegerSet& b);
ShiftedSet diffset(const IntegerSet& a, const IntegerSet& b);

// Set-literal grammar accepted everywhere sets are inputs:
//   "2,3,5"           comma list
//   "lo..hi"          interval
//   "1..4+9..12"      union ('+' and ',' both join terms)
//   "O(n)" "I0(n)" "I1(n)" "I2(n)" "I3(n)" "full(n)" "empty(n)"  named families
// ambient_override > 0 re-ambients the parsed set (must cover every member).
// Parse failures throw SetParseError carrying the offending position.
struct SetParseError : std::domain_error {
    SetParseError(const std::string& msg, size_t pos)
        : std::domain_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    size_t position;
};
IntegerSet parse_set(const std::string& literal, int ambient_override = 0);

}  // namespace rainbow
