#include "rainbow/counting.hpp"

#include <algorithm>

namespace rainbow {

namespace {

// For each element index i, the pairs (j, k) of earlier indices with
// ms[j] + ms[k] == ms[i]: the triples whose last element is ms[i].
std::vector<std::vector<std::pair<int, int>>> closing_pairs(const std::vector<int>& ms) {
    std::vector<std::vector<std::pair<int, int>>> out(ms.size());
    for (size_t i = 0; i < ms.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            for (size_t k = j + 1; k < i; ++k)
                if (ms[j] + ms[k] == ms[i]) out[i].emplace_back(static_cast<int>(j),
                                                                static_cast<int>(k));
    return out;
}

struct NaiveCounter {
    const std::vector<std::vector<std::pair<int, int>>>& pairs;
    int r;
    std::vector<int> color;
    BigCount total = 0;

    void run(size_t i) {
        if (i == color.size()) {
            ++total;
            return;
        }
        for (int c = 1; c <= r; ++c) {
            color[i] = c;
            bool ok = true;
            for (auto [j, k] : pairs[i]) {
                int cj = color[j], ck = color[k];
                if (cj != ck && cj != c && ck != c) {
                    ok = false;
                    break;
                }
            }
            if (ok) run(i + 1);
        }
    }
};

struct PartitionCounter {
    const std::vector<std::vector<std::pair<int, int>>>& pairs;
    int max_classes;
    std::vector<int> cls;
    std::vector<BigCount>& p;

    void run(size_t i, int used) {
        if (i == cls.size()) {
            ++p[static_cast<size_t>(used)];
            return;
        }
        // first-occurrence canonical ordering: classes 0..used-1, or open
        // class `used` while under the class budget
        int limit = std::min(used + 1, max_classes);
        for (int c = 0; c < limit; ++c) {
            cls[i] = c;
            bool ok = true;
            for (auto [j, k] : pairs[i]) {
                int cj = cls[j], ck = cls[k];
                if (cj != ck && cj != c && ck != c) {
                    ok = false;
                    break;
                }
            }
            if (ok) run(i + 1, std::max(used, c + 1));
        }
    }
};

}  // namespace

BigCount count_naive(const IntegerSet& a, int r) {
    if (r < 0) throw std::domain_error("color count must be nonnegative");
    std::vector<int> ms = a.members();
    if (ms.empty()) return 1;
    if (r == 0) return 0;
    auto pairs = closing_pairs(ms);
    NaiveCounter counter{pairs, r, std::vector<int>(ms.size(), 0)};
    counter.run(0);
    return counter.total;
}

PartitionCount count_partition(const IntegerSet& a, int r) {
    if (r < 0) throw std::domain_error("color count must be nonnegative");
    std::vector<int> ms = a.members();
    PartitionCount out;
    out.profile.p.assign(static_cast<size_t>(r) + 1, 0);
    if (ms.empty()) {
        out.profile.p[0] = 1;
        out.g = 1;
        return out;
    }
    if (r > 0) {
        auto pairs = closing_pairs(ms);
        PartitionCounter counter{pairs, std::min<int>(r, static_cast<int>(ms.size())),
                                 std::vector<int>(ms.size(), 0), out.profile.p};
        counter.run(0, 0);
    }
    out.g = 0;
    for (size_t j = 0; j < out.profile.p.size(); ++j)
        out.g += out.profile.p[j] * falling_factorial(static_cast<unsigned>(r),
                                                      static_cast<unsigned>(j));
    return out;
}

ClosedFormFamily closed_form_family_from_string(const std::string& name) {
    if (name == "I1") return ClosedFormFamily::I1;
    if (name == "I2") return ClosedFormFamily::I2;
    if (name == "I3") return ClosedFormFamily::I3;
    if (name == "eq1-lower-bound") return ClosedFormFamily::Eq1LowerBound;
    throw std::domain_error("unknown closed form family '" + name + "'");
}

BigCount closed_form(ClosedFormFamily family, int n, int r) {
    if (r < 0) throw std::domain_error("color count must be nonnegative");
    BigCount rr = r;
    switch (family) {
        case ClosedFormFamily::I1:
            if (n < 6 || n % 2 != 0)
                throw std::domain_error("closed form for I1 requires even n >= 6");
            return pow_big(rr, static_cast<unsigned long>(n / 2 - 2)) *
                   BigCount(3 * r - 2) * BigCount(3 * r - 2);
        case ClosedFormFamily::I2:
            if (n < 6 || n % 2 != 0)
                throw std::domain_error("closed form for I2 requires even n >= 6");
            return pow_big(rr, static_cast<unsigned long>(n / 2 + 1));
        case ClosedFormFamily::I3:
            if (n < 5 || n % 2 != 1)
                throw std::domain_error("closed form for I3 requires odd n >= 5");
            return pow_big(rr, static_cast<unsigned long>((n + 1) / 2 - 1)) *
                   BigCount(3 * r - 2);
        case ClosedFormFamily::Eq1LowerBound:
            if (n < 1) throw std::domain_error("eq1 lower bound requires n >= 1");
            return binomial(static_cast<unsigned>(r), 2) *
                       (pow_big(2, static_cast<unsigned long>(n)) - 2) +
                   rr;
    }
    throw std::domain_error("unreachable closed form family");
}

std::string CountCache::key(const IntegerSet& a, int r) {
    return a.to_literal() + "@" + std::to_string(a.ambient()) + "#" + std::to_string(r);
}

std::optional<BigCount> CountCache::get(const IntegerSet& a, int r) {
    std::lock_guard lock(mu_);
    auto it = entries_.find(key(a, r));
    if (it == entries_.end()) return std::nullopt;
    ++hits_;
    return it->second;
}

void CountCache::put(const IntegerSet& a, int r, const BigCount& g) {
    std::lock_guard lock(mu_);
    entries_[key(a, r)] = g;
}

size_t CountCache::size() const {
    std::lock_guard lock(mu_);
    return entries_.size();
}

void CountCache::clear() {
    std::lock_guard lock(mu_);
    entries_.clear();
    hits_ = 0;
}

BigCount count_partition_cached(const IntegerSet& a, int r, CountCache& cache) {
    if (auto hit = cache.get(a, r)) return *hit;
    BigCount g = count_partition(a, r).g;
    cache.put(a, r, g);
    return g;
}

}  // namespace rainbow
