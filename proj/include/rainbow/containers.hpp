#pragma once

// The rainbow-triple constraint hypergraph on [n] x [r]: edges are
// rainbow-colored restricted triples. Degree statistics, the co-degree
// function, and certified checks of the container-theorem hypotheses at the
// proof's parameter instantiation. The container collection itself is never
// constructed (the hypotheses first hold near n ~ 1e18); this is a
// diagnostics layer.

#include <array>
#include <vector>

#include "rainbow/config.hpp"
#include "rainbow/integer_set.hpp"
#include "rainbow/numeric.hpp"

namespace rainbow {

// Certified verdicts on the k=3 container-theorem hypotheses at
//   tau = sqrt(96 * 3! * r) n^(-1/3),  epsilon = n^(-1/3) / (r(r-1)(r-2)):
//   (a) tau < 1/(200 * 3!^2 * 3) = 1/21600
//   (b) Delta(H, tau) <= epsilon / (12 * 3!) = epsilon / 72
// Both are decided in exact integer arithmetic (the irrationalities cancel
// after raising to the sixth power); the float margins are display only.
struct HypothesisReport {
    bool epsilon_in_range = false;  // 0 < epsilon < 1/2
    bool tau_condition = false;     // (a); also forces tau < 1/2
    bool codegree_condition = false;
    bool all_hold = false;
    Real tau;
    Real epsilon;
    Real codegree_value;   // Delta(H, tau) at the proof's tau
    Real tau_margin;       // 1/21600 - tau
    Real codegree_margin;  // epsilon/72 - Delta(H, tau)
};

HypothesisReport hypothesis_check(const BigCount& n, int r);

struct HypergraphStats {
    long long n = 0;
    int r = 0;
    BigCount vertex_count;     // n r
    BigCount edge_count;       // s([n]) r(r-1)(r-2)
    BigRat average_degree;     // d = 3 e / v
    BigCount delta2;           // max co-degree over vertex pairs
    bool delta2_scanned = false;  // direct pair scan (n small) vs closed form
    BigCount delta2_formula;   // 2(r-2), the asymptotic value
    int delta3 = 0;            // 1 once any edge exists
    HypothesisReport hypothesis;
};

// Edge count analytically from s([n]); Delta_2 by direct co-degree
// maximization over element pairs when n is small enough to scan, closed
// form beyond. Requires n >= 1, r >= 3.
HypergraphStats hypergraph_stats(long long n, int r);

// Delta(H, tau) = 4 Delta_2/(d tau) + 2 Delta_3/(d tau^2), evaluated exactly
// for rational tau in (0, 1). An edgeless hypergraph yields 0.
BigRat codegree_function(const HypergraphStats& stats, const BigRat& tau);

struct FeasibleN {
    BigCount min_n;        // smallest n where both hypotheses hold
    BigCount tau_bracket;  // smallest n passing the tau condition alone
};
// Binary search over the certified predicate; the expressions are monotone
// in n at this scale. Requires r >= 3.
FeasibleN min_feasible_n(int r);

// Explicit edge materialization for cross-checks. Each edge is a rainbow
// coloring of one restricted triple, as ((a,ca),(b,cb),(c,cc)).
struct HyperVertex {
    int element;
    int color;
    auto operator<=>(const HyperVertex&) const = default;
};
using HyperEdge = std::array<HyperVertex, 3>;
std::vector<HyperEdge> enumerate_hypergraph_edges(int n, int r, const Config& cfg = {});

}  // namespace rainbow
