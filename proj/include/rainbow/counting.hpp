#pragma once

// Exact computation of g(A, r), the number of rainbow sum-free r-colorings:
// a naive coloring backtracker, a color-symmetry-reduced partition engine,
// and closed-form evaluators for the named families.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/integer_set.hpp"
#include "rainbow/numeric.hpp"

namespace rainbow {

// Backtracks over elements in increasing order, colors in [r]; each
// restricted triple is checked once, when its largest element is colored.
BigCount count_naive(const IntegerSet& a, int r);

// p[j] = number of partitions of A into exactly j nonempty unlabeled classes
// such that no restricted triple meets three distinct classes. Rainbow-
// freeness depends only on the induced color partition, so
//   g(A, r) = sum_j p[j] * r*(r-1)*...*(r-j+1).
struct PartitionProfile {
    std::vector<BigCount> p;  // indices 0..r
};

struct PartitionCount {
    BigCount g;
    PartitionProfile profile;
};

PartitionCount count_partition(const IntegerSet& a, int r);

enum class ClosedFormFamily { I1, I2, I3, Eq1LowerBound };

ClosedFormFamily closed_form_family_from_string(const std::string& name);

// Integer forms of the interval-family formulas:
//   I1 (even n >= 6): r^(n/2-2) * (3r-2)^2
//   I2 (even n >= 6): r^(n/2+1)
//   I3 (odd  n >= 5): r^(ceil(n/2)-1) * (3r-2)
//   Eq1LowerBound   : C(r,2) * (2^n - 2) + r
// The n thresholds are the smallest values where the stated triple structure
// holds; violating them is a domain error.
BigCount closed_form(ClosedFormFamily family, int n, int r);

// Memoization keyed by (canonical encoding of A, r). Values are
// deterministic, so concurrent last-writer-wins collisions are benign.
class CountCache {
  public:
    std::optional<BigCount> get(const IntegerSet& a, int r);
    void put(const IntegerSet& a, int r, const BigCount& g);
    size_t size() const;
    size_t hits() const { return hits_; }
    void clear();

  private:
    static std::string key(const IntegerSet& a, int r);
    mutable std::mutex mu_;
    std::map<std::string, BigCount> entries_;
    size_t hits_ = 0;
};

BigCount count_partition_cached(const IntegerSet& a, int r, CountCache& cache);

}  // namespace rainbow
