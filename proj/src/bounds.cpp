#include "rainbow/bounds.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rainbow {

LinkGraph link_graph(int t, const IntegerSet& a) {
    LinkGraph g;
    g.t = t;
    for (int v : a.members())
        if (v != t) g.vertices.push_back(v);
    for (const RestrictedTriple& tr : triples_through(t, a)) {
        int x, y;
        if (tr.a == t) {
            x = tr.b;
            y = tr.c;
        } else if (tr.b == t) {
            x = tr.a;
            y = tr.c;
        } else {
            x = tr.a;
            y = tr.b;
        }
        g.edges.emplace_back(x, y);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

int max_matching(const LinkGraph& g) {
    std::map<int, std::vector<int>> adj;
    for (int v : g.vertices) adj[v];
    for (auto [x, y] : g.edges) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    for (auto& [v, nb] : adj)
        if (nb.size() > 2)
            throw std::logic_error("link graph degree exceeds 2 at " + std::to_string(v));

    std::set<int> seen;
    int total = 0;
    for (auto& [start, nb0] : adj) {
        if (seen.count(start)) continue;
        // walk the component; a vertex of degree < 2 marks a path end
        std::vector<int> stack{start};
        seen.insert(start);
        long long degree_sum = 0;
        bool has_endpoint = false;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            degree_sum += static_cast<long long>(adj[v].size());
            if (adj[v].size() < 2) has_endpoint = true;
            for (int w : adj[v])
                if (seen.insert(w).second) stack.push_back(w);
        }
        int edges = static_cast<int>(degree_sum / 2);
        if (edges == 0) continue;
        total += has_endpoint ? (edges + 1) / 2  // path
                              : edges / 2;       // cycle
    }
    return total;
}

int matching_number(int t, const IntegerSet& a) { return max_matching(link_graph(t, a)); }

MatchingBoundEntry matching_bound(const IntegerSet& a, int r) {
    if (r < 3) throw std::domain_error("matching bound requires r >= 3");
    if (a.empty()) throw std::domain_error("matching bound requires a nonempty set");
    // (3r-2)/r^2 < 1, so the min over t is attained at the max matching size
    int best_t = 0, best_k = -1;
    for (int t : a.members()) {
        int k = matching_number(t, a);
        if (k > best_k) {
            best_k = k;
            best_t = t;
        }
    }
    MatchingBoundEntry out;
    out.best_t = best_t;
    out.k = best_k;
    out.value = pow_big(r, static_cast<unsigned long>(a.size() - 2 * best_k)) *
                pow_big(3 * r - 2, static_cast<unsigned long>(best_k));
    return out;
}

Prop51Report prop51_check(const IntegerSet& a, int r) {
    Prop51Report rep;
    int n = a.ambient();
    int ceil_half = (n + 1) / 2;
    rep.c = a.size() - ceil_half;
    if (r < 8) {
        rep.reason = "requires r >= 8";
        return rep;
    }
    if (rep.c <= 1) {
        rep.reason = "requires |A| = ceil(n/2) + c with c > 1";
        return rep;
    }
    rep.applicable = true;
    for (int t : a.members()) {
        int k = matching_number(t, a);
        if (k >= 2 * (rep.c - 1)) rep.case_i.push_back({t, k});
        if (k >= 2 * (rep.c - 1) + 1) rep.case_ii.push_back({t, k});
    }
    rep.bound_case_i = pow_big(r, static_cast<unsigned long>(ceil_half + 1));
    rep.bound_case_ii =
        pow_big(r, static_cast<unsigned long>(ceil_half - 1)) * BigCount(3 * r - 2);
    return rep;
}

ManySchurBoundEntry many_schur_bound(const IntegerSet& a, int r,
                                     std::optional<BigRat> mu_override) {
    ManySchurBoundEntry out;
    int n = a.ambient();
    if (n == 0) {
        out.mu = 0;
        out.exact_integer = true;
        out.exact_value = a.empty() ? 1 : 0;
        out.value = to_real(out.exact_value);
        out.exponent = 0;
        out.applicable = r >= 4;
        if (r < 4) out.reason = "requires r >= 4";
        return out;
    }
    BigRat mu_max(restricted_triple_count(a), static_cast<long long>(n) * n);
    out.mu = mu_override.value_or(mu_max);
    out.mu_is_default = !mu_override.has_value();
    if (r < 4) {
        out.reason = "requires r >= 4";
    } else if (out.mu < 0 || out.mu > mu_max) {
        out.reason = "mu exceeds s(A)/n^2 = " + rat_to_string(mu_max);
    } else {
        out.applicable = true;
    }

    if (out.mu == 0) {
        out.exact_integer = true;
        out.exact_value = pow_big(r, static_cast<unsigned long>(a.size()));
        out.exponent = Real(a.size());
        out.value = to_real(out.exact_value);
        return out;
    }
    Real lg_r = log(Real(r)) / log(Real(2));
    Real lg_m = log(Real(3 * r - 2)) / log(Real(2));
    out.exponent =
        Real(a.size()) - 3 * (2 * lg_r - lg_m) * to_real(out.mu) * Real(n) / (2 * lg_r);
    out.value = pow(Real(r), out.exponent);
    return out;
}

bool many_schur_dominates(const ManySchurBoundEntry& bound, int r, const BigCount& g) {
    if (bound.exact_integer) return bound.exact_value >= g;
    // round the bound's exponent down before comparing, so a "true" verdict
    // survives the float evaluation error
    Real margin = Real("1e-40") * (1 + abs(bound.exponent));
    Real certified_lower = pow(Real(r), bound.exponent - margin);
    return certified_lower >= to_real(g);
}

Real dense_bound(int n, int r, int a) {
    if (r < 3) throw std::domain_error("dense bound requires r >= 3");
    if (a < 0 || a > n) throw std::domain_error("dense bound requires 0 <= a <= n");
    if (n < 2) throw std::domain_error("dense bound requires n >= 2 (log n > 0)");
    Real lg_n = log(Real(n)) / log(Real(2));
    Real first = to_real(binomial(static_cast<unsigned>(r), 2) *
                         pow_big(2, static_cast<unsigned long>(a)));
    Real second = pow(Real(2), Real(n) - Real(n) / (26 * lg_n));
    return first + second;
}

DenseCrossoverReport dense_crossover(int r, int max_n, CountCache* cache) {
    if (r < 3) throw std::domain_error("dense bound requires r >= 3");
    if (max_n < 2 || max_n > 26)
        throw std::domain_error("crossover scan supports 2 <= max_n <= 26");
    CountCache local;
    CountCache& memo = cache ? *cache : local;
    DenseCrossoverReport rep;
    rep.r = r;
    rep.max_n = max_n;
    for (int n = 2; n <= max_n; ++n) {
        DenseCrossoverRow row;
        row.n = n;
        row.g_full = count_partition_cached(IntegerSet::full(n), r, memo);
        row.bound = dense_bound(n, r, n);
        row.dominates = row.bound * (1 - Real("1e-40")) >= to_real(row.g_full);
        rep.rows.push_back(row);
    }
    for (auto it = rep.rows.rbegin(); it != rep.rows.rend() && it->dominates; ++it)
        rep.onset = it->n;
    return rep;
}

NonTriplePairs non_triple_pairs(const IntegerSet& a) {
    NonTriplePairs out;
    int n = a.ambient();
    std::vector<int> ms = a.members();
    for (size_t i = 0; i < ms.size(); ++i)
        for (size_t j = i + 1; j < ms.size(); ++j) {
            int x = ms[i], y = ms[j];
            bool sum_in = x + y <= n && a.contains(x + y);
            bool diff_in = y != 2 * x && a.contains(y - x);
            if (sum_in || diff_in) continue;
            out.pairs.emplace_back(x, y);
            if (y == 2 * x)
                x + y <= n ? ++out.f1 : ++out.f2;
            else
                x + y <= n ? ++out.f3 : ++out.f4;
        }
    if (n > 0) {
        out.bound = BigRat(n - a.size()) * n + BigRat(n, 6);
        out.bound_holds = BigRat(static_cast<long long>(out.pairs.size())) <= out.bound;
    }
    return out;
}

std::vector<std::pair<int, int>> disjoint_pair_cover(int t, const IntegerSet& a,
                                                     const IntegerSet& excluded) {
    int n = a.ambient();
    if (t < 1 || t > n)
        throw std::domain_error("t = " + std::to_string(t) + " outside [" +
                                std::to_string(n) + "]");
    auto available = [&](int v) {
        return v != t && a.contains(v) && !excluded.contains(v);
    };

    // complementary pairs a + b = t
    std::vector<std::pair<int, int>> s1;
    for (int x = 1; 2 * x < t; ++x) s1.emplace_back(x, t - x);
    // shifted pairs {a, t+a} in the proof's range t < a <= n - t (these are
    // automatically disjoint once 3t >= n)
    std::vector<std::pair<int, int>> s2;
    for (int x = t + 1; x <= n - t; ++x) s2.emplace_back(x, t + x);
    // the remaining shifted pairs (x below t, so the triple is (x, t, x+t))
    std::vector<std::pair<int, int>> rest;
    for (int x = 1; x < t && x + t <= n; ++x) rest.emplace_back(x, x + t);

    std::vector<std::pair<int, int>> order;
    if (5 * t > 2 * n) {
        order = s1;
        order.insert(order.end(), s2.begin(), s2.end());
    } else {
        order = s2;
        order.insert(order.end(), s1.begin(), s1.end());
    }
    order.insert(order.end(), rest.begin(), rest.end());

    std::set<int> used;
    std::vector<std::pair<int, int>> family;
    for (auto [x, y] : order) {
        if (!available(x) || !available(y)) continue;
        if (used.count(x) || used.count(y)) continue;
        used.insert(x);
        used.insert(y);
        family.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(family.begin(), family.end());
    return family;
}

}  // namespace rainbow
