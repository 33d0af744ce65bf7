#include "rainbow/containers.hpp"

#include <algorithm>

namespace rainbow {

namespace {

// s([n]) as a big integer for n beyond the long long closed form.
BigCount big_full_triple_count(const BigCount& n) {
    if (n < 0) throw std::domain_error("n must be nonnegative");
    BigCount numerator = n * n - 2 * n;
    if (n % 2 != 0) numerator += 1;
    return numerator / 4;
}

// Number of restricted triples of [n] containing both x < y: the sum triple
// (x, y, x+y) when it fits, and the difference triple {y-x, x, y} when
// y != 2x.
int pair_triple_count(long long n, long long x, long long y) {
    int t = 0;
    if (x + y <= n) ++t;
    if (y != 2 * x) ++t;
    return t;
}

// Max over element pairs of pair_triple_count, without scanning: 2 for
// n >= 4 (witness (1,3)), 1 for n = 3, 0 below.
int max_pair_triples(const BigCount& n) {
    if (n >= 4) return 2;
    if (n == 3) return 1;
    return 0;
}

constexpr long long kPairScanLimit = 5000;

}  // namespace

HypothesisReport hypothesis_check(const BigCount& n, int r) {
    if (r < 3) throw std::domain_error("hypothesis check requires r >= 3");
    if (n < 1) throw std::domain_error("hypothesis check requires n >= 1");
    HypothesisReport rep;

    BigCount rainbow_ways = BigCount(r) * (r - 1) * (r - 2);
    Real n_cbrt = pow(to_real(n), Real(1) / 3);
    rep.tau = 24 * sqrt(Real(r)) / n_cbrt;
    rep.epsilon = 1 / (n_cbrt * to_real(rainbow_ways));

    // epsilon < 1/2  <=>  8 < n (r(r-1)(r-2))^3; epsilon > 0 always
    rep.epsilon_in_range = 8 < n * rainbow_ways * rainbow_ways * rainbow_ways;

    // tau < 1/21600  <=>  tau^6 = 576^3 r^3 / n^2 < 21600^-6
    BigCount tau_threshold = pow_big(576, 3) * pow_big(r, 3) * pow_big(21600, 6);
    rep.tau_condition = n * n > tau_threshold;
    rep.tau_margin = Real(1) / 21600 - rep.tau;

    // Delta(H, tau) <= eps/72, deltas from the hypergraph at this n.
    BigCount s = big_full_triple_count(n);
    BigCount delta2 = max_pair_triples(n) * BigCount(r - 2);
    int delta3 = s > 0 ? 1 : 0;
    if (s == 0) {
        rep.codegree_condition = true;  // no edges, Delta(H, tau) = 0
        rep.codegree_value = 0;
        rep.codegree_margin = rep.epsilon / 72;
    } else {
        BigRat d = BigRat(3 * s * rainbow_ways, n * r);
        // Delta(H,tau) <= eps/72 (both sides scaled by n^(1/3)):
        //   delta2 n^(2/3) / (6 sqrt(r) d) + delta3 n / (288 r d) <= 1/(72 R)
        BigRat c0(1, 72 * rainbow_ways);
        BigRat q = c0 - BigRat(delta3 * n, 288 * r) / d;
        if (delta2 == 0) {
            rep.codegree_condition = q >= 0;
        } else if (q < 0) {
            rep.codegree_condition = false;
        } else {
            // delta2 n^(2/3) / (6 sqrt(r) d) <= q, sixth power kills the roots:
            //   delta2^6 n^4 <= q^6 6^6 d^6 r^3
            BigRat lhs = BigRat(pow_big(delta2, 6) * pow_big(n, 4));
            BigRat q6 = q * q;
            q6 = q6 * q6 * q6;
            BigRat d6 = d * d;
            d6 = d6 * d6 * d6;
            rep.codegree_condition = lhs <= q6 * 46656 * d6 * pow_big(r, 3);
        }
        Real d_real = to_real(d);
        rep.codegree_value = 4 * to_real(delta2) / (d_real * rep.tau) +
                             2 * delta3 / (d_real * rep.tau * rep.tau);
        rep.codegree_margin = rep.epsilon / 72 - rep.codegree_value;
    }

    rep.all_hold = rep.epsilon_in_range && rep.tau_condition && rep.codegree_condition;
    return rep;
}

HypergraphStats hypergraph_stats(long long n, int r) {
    if (r < 3) throw std::domain_error("hypergraph requires r >= 3");
    if (n < 1) throw std::domain_error("hypergraph requires n >= 1");
    HypergraphStats st;
    st.n = n;
    st.r = r;
    BigCount bn = n;
    st.vertex_count = bn * r;
    BigCount rainbow_ways = BigCount(r) * (r - 1) * (r - 2);
    st.edge_count = big_full_triple_count(bn) * rainbow_ways;
    st.average_degree = BigRat(3 * st.edge_count, st.vertex_count);
    st.delta2_formula = BigCount(2) * (r - 2);
    st.delta3 = st.edge_count > 0 ? 1 : 0;
    if (n <= kPairScanLimit) {
        st.delta2_scanned = true;
        int best = 0;
        for (long long x = 1; x <= n; ++x)
            for (long long y = x + 1; y <= n; ++y)
                best = std::max(best, pair_triple_count(n, x, y));
        st.delta2 = BigCount(best) * (r - 2);
    } else {
        st.delta2 = BigCount(max_pair_triples(bn)) * (r - 2);
    }
    st.hypothesis = hypothesis_check(bn, r);
    return st;
}

BigRat codegree_function(const HypergraphStats& stats, const BigRat& tau) {
    if (tau <= 0 || tau >= 1) throw std::domain_error("tau must lie in (0, 1)");
    if (stats.edge_count == 0) return 0;
    const BigRat& d = stats.average_degree;
    return BigRat(4 * stats.delta2) / (d * tau) + BigRat(2 * stats.delta3) / (d * tau * tau);
}

FeasibleN min_feasible_n(int r) {
    if (r < 3) throw std::domain_error("min_feasible_n requires r >= 3");
    BigCount tau_threshold = pow_big(576, 3) * pow_big(r, 3) * pow_big(21600, 6);
    BigCount bracket = isqrt_big(tau_threshold) + 1;  // smallest n with n^2 > threshold

    auto holds = [&](const BigCount& n) { return hypothesis_check(n, r).all_hold; };

    BigCount hi = bracket;
    while (!holds(hi)) hi *= 2;
    BigCount lo = 3;
    while (lo < hi) {
        BigCount mid = (lo + hi) / 2;
        if (holds(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return {lo, bracket};
}

std::vector<HyperEdge> enumerate_hypergraph_edges(int n, int r, const Config& cfg) {
    if (r < 3) throw std::domain_error("hypergraph requires r >= 3");
    if (n > cfg.hypergraph_edges_max_n)
        throw ThresholdRefusal("explicit edge materialization refused for n = " +
                                   std::to_string(n) + " > " +
                                   std::to_string(cfg.hypergraph_edges_max_n),
                               "hypergraph_edges_max_n");
    std::vector<HyperEdge> edges;
    for (const RestrictedTriple& tr : restricted_triples(IntegerSet::full(n)))
        for (int ca = 1; ca <= r; ++ca)
            for (int cb = 1; cb <= r; ++cb) {
                if (cb == ca) continue;
                for (int cc = 1; cc <= r; ++cc) {
                    if (cc == ca || cc == cb) continue;
                    edges.push_back({HyperVertex{tr.a, ca}, HyperVertex{tr.b, cb},
                                     HyperVertex{tr.c, cc}});
                }
            }
    return edges;
}

}  // namespace rainbow
