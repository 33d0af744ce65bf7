#include "rainbow/integer_set.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>

namespace rainbow {

IntegerSet::IntegerSet(int n, const std::vector<int>& members) : IntegerSet(n) {
    for (int m : members) insert(m);
}

IntegerSet IntegerSet::full(int n) {
    IntegerSet s(n);
    for (int m = 1; m <= n; ++m) s.insert(m);
    return s;
}

IntegerSet IntegerSet::interval(int n, int lo, int hi) {
    IntegerSet s(n);
    if (lo < 1 || hi > n || lo > hi)
        throw std::domain_error("interval [" + std::to_string(lo) + "," + std::to_string(hi) +
                                "] does not fit in [" + std::to_string(n) + "]");
    for (int m = lo; m <= hi; ++m) s.insert(m);
    return s;
}

IntegerSet IntegerSet::odds(int n) {
    if (n < 1) throw std::domain_error("O(n) requires n >= 1");
    IntegerSet s(n);
    for (int m = 1; m <= n; m += 2) s.insert(m);
    return s;
}

IntegerSet IntegerSet::i0(int n) {
    if (n < 1) throw std::domain_error("I0(n) requires n >= 1");
    return interval(n, n / 2 + 1, n);
}

IntegerSet IntegerSet::i1(int n) {
    if (n < 4 || n % 2 != 0) throw std::domain_error("I1(n) requires even n >= 4");
    return interval(n, n / 2 - 1, n);
}

IntegerSet IntegerSet::i2(int n) {
    if (n < 2 || n % 2 != 0) throw std::domain_error("I2(n) requires even n >= 2");
    return interval(n, n / 2, n);
}

IntegerSet IntegerSet::i3(int n) {
    if (n < 3 || n % 2 != 1) throw std::domain_error("I3(n) requires odd n >= 3");
    return interval(n, (n - 1) / 2, n);
}

int IntegerSet::size() const {
    int c = 0;
    for (uint64_t w : bits_) c += std::popcount(w);
    return c;
}

void IntegerSet::insert(int m) {
    if (m < 1 || m > n_)
        throw std::domain_error("element " + std::to_string(m) + " outside [" +
                                std::to_string(n_) + "]");
    bits_[(m - 1) >> 6] |= uint64_t{1} << ((m - 1) & 63);
}

void IntegerSet::erase(int m) {
    if (m >= 1 && m <= n_) bits_[(m - 1) >> 6] &= ~(uint64_t{1} << ((m - 1) & 63));
}

std::vector<int> IntegerSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(size()));
    for (size_t w = 0; w < bits_.size(); ++w) {
        uint64_t word = bits_[w];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(static_cast<int>(w * 64 + b + 1));
            word &= word - 1;
        }
    }
    return out;
}

int IntegerSet::min_element() const {
    for (size_t w = 0; w < bits_.size(); ++w)
        if (bits_[w]) return static_cast<int>(w * 64 + std::countr_zero(bits_[w]) + 1);
    throw std::domain_error("min of empty set");
}

std::strong_ordering IntegerSet::operator<=>(const IntegerSet& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    // little-endian numeric compare of the masks
    size_t len = std::max(bits_.size(), o.bits_.size());
    for (size_t i = len; i-- > 0;) {
        uint64_t l = i < bits_.size() ? bits_[i] : 0;
        uint64_t r = i < o.bits_.size() ? o.bits_[i] : 0;
        if (auto c = l <=> r; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::string IntegerSet::to_literal() const {
    std::vector<int> ms = members();
    if (ms.empty()) return "empty(" + std::to_string(n_) + ")";
    std::string out;
    size_t i = 0;
    while (i < ms.size()) {
        size_t j = i;
        while (j + 1 < ms.size() && ms[j + 1] == ms[j] + 1) ++j;
        if (!out.empty()) out += '+';
        out += std::to_string(ms[i]);
        if (j > i) out += ".." + std::to_string(ms[j]);
        i = j + 1;
    }
    return out;
}

IntegerSet IntegerSet::with_ambient(int n) const {
    IntegerSet out(n);
    for (int m : members()) out.insert(m);
    return out;
}

IntegerSet IntegerSet::from_mask(int n, uint64_t mask) {
    if (n > 64) throw std::domain_error("from_mask supports n <= 64");
    IntegerSet s(n);
    if (!s.bits_.empty()) s.bits_[0] = mask & (n == 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1));
    return s;
}

std::vector<RestrictedTriple> restricted_triples(const IntegerSet& a) {
    std::vector<RestrictedTriple> out;
    std::vector<int> ms = a.members();
    for (size_t i = 0; i < ms.size(); ++i)
        for (size_t j = i + 1; j < ms.size(); ++j) {
            int c = ms[i] + ms[j];
            if (c > a.ambient()) break;
            if (a.contains(c)) out.emplace_back(ms[i], ms[j], c);
        }
    std::sort(out.begin(), out.end());
    return out;
}

long long restricted_triple_count(const IntegerSet& a) {
    long long count = 0;
    std::vector<int> ms = a.members();
    for (size_t i = 0; i < ms.size(); ++i)
        for (size_t j = i + 1; j < ms.size(); ++j) {
            int c = ms[i] + ms[j];
            if (c > a.ambient()) break;
            if (a.contains(c)) ++count;
        }
    return count;
}

std::vector<RestrictedTriple> triples_through(int t, const IntegerSet& a) {
    if (!a.contains(t))
        throw std::domain_error("element " + std::to_string(t) + " not in the set");
    std::vector<RestrictedTriple> out;
    for (const RestrictedTriple& tr : restricted_triples(a))
        if (tr.contains(t)) out.push_back(tr);
    return out;
}

long long triples_through_count(int t, const IntegerSet& a) {
    return static_cast<long long>(triples_through(t, a).size());
}

std::vector<SchurTriple> schur_triples(const IntegerSet& a) {
    std::vector<SchurTriple> out;
    std::vector<int> ms = a.members();
    for (size_t i = 0; i < ms.size(); ++i)
        for (size_t j = i; j < ms.size(); ++j) {
            int z = ms[i] + ms[j];
            if (z > a.ambient()) break;
            if (a.contains(z)) out.emplace_back(ms[i], ms[j], z);
        }
    std::sort(out.begin(), out.end());
    return out;
}

long long schur_triple_count(const IntegerSet& a) {
    long long count = 0;
    std::vector<int> ms = a.members();
    for (size_t i = 0; i < ms.size(); ++i)
        for (size_t j = i; j < ms.size(); ++j) {
            int z = ms[i] + ms[j];
            if (z > a.ambient()) break;
            if (a.contains(z)) ++count;
        }
    return count;
}

long long full_interval_triple_count(long long n) {
    if (n < 0) throw std::domain_error("n must be nonnegative");
    return n % 2 == 0 ? (n * n - 2 * n) / 4 : (n * n - 2 * n + 1) / 4;
}

namespace {

ShiftedSet combine(const IntegerSet& a, const IntegerSet& b, int sign) {
    std::set<int> vals;
    for (int x : a.members())
        for (int y : b.members()) vals.insert(x + sign * y);
    ShiftedSet out;
    out.values.assign(vals.begin(), vals.end());
    out.ambient = std::max(a.ambient(), b.ambient());
    return out;
}

}  // namespace

ShiftedSet sumset(const IntegerSet& a, const IntegerSet& b) { return combine(a, b, +1); }
ShiftedSet diffset(const IntegerSet& a, const IntegerSet& b) { return combine(a, b, -1); }

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    int parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw SetParseError("expected integer", start);
        long long v = 0;
        for (size_t i = start; i < pos; ++i) {
            v = v * 10 + (s[i] - '0');
            if (v > 1'000'000'000) throw SetParseError("integer too large", start);
        }
        return static_cast<int>(v);
    }

    // named family: identifier '(' int ')'
    IntegerSet parse_named() {
        size_t start = pos;
        std::string name;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])))) {
            name += s[pos];
            ++pos;
        }
        if (peek() != '(') throw SetParseError("expected '(' after family name", pos);
        ++pos;
        int n = parse_int();
        if (peek() != ')') throw SetParseError("expected ')'", pos);
        ++pos;
        try {
            if (name == "O") return IntegerSet::odds(n);
            if (name == "I0") return IntegerSet::i0(n);
            if (name == "I1") return IntegerSet::i1(n);
            if (name == "I2") return IntegerSet::i2(n);
            if (name == "I3") return IntegerSet::i3(n);
            if (name == "full") return IntegerSet::full(n);
            if (name == "empty") return IntegerSet(n);
        } catch (const std::domain_error& e) {
            throw SetParseError(e.what(), start);
        }
        throw SetParseError("unknown family '" + name + "'", start);
    }

    // term: int | int..int
    void parse_term(std::vector<std::pair<int, int>>& runs) {
        size_t start = pos;
        int lo = parse_int();
        int hi = lo;
        skip_ws();
        if (pos + 1 < s.size() && s[pos] == '.' && s[pos + 1] == '.') {
            pos += 2;
            hi = parse_int();
        }
        if (lo < 1 || hi < lo) throw SetParseError("bad range", start);
        runs.emplace_back(lo, hi);
    }
};

}  // namespace

IntegerSet parse_set(const std::string& literal, int ambient_override) {
    Parser p(literal);
    if (p.done()) throw SetParseError("empty set literal", 0);

    IntegerSet result;
    if (std::isalpha(static_cast<unsigned char>(p.peek()))) {
        result = p.parse_named();
        if (!p.done()) throw SetParseError("trailing input after family", p.pos);
    } else {
        std::vector<std::pair<int, int>> runs;
        p.parse_term(runs);
        while (!p.done()) {
            char c = p.peek();
            if (c != '+' && c != ',')
                throw SetParseError("expected '+' or ',' between terms", p.pos);
            ++p.pos;
            p.parse_term(runs);
        }
        int max_elem = 0;
        for (auto [lo, hi] : runs) max_elem = std::max(max_elem, hi);
        result = IntegerSet(max_elem);
        for (auto [lo, hi] : runs)
            for (int m = lo; m <= hi; ++m) result.insert(m);
    }

    if (ambient_override > 0) {
        if (!result.empty() && ambient_override < std::max(result.members().back(), 0))
            throw std::domain_error("ambient " + std::to_string(ambient_override) +
                                    " smaller than max element");
        result = result.with_ambient(ambient_override);
    }
    return result;
}

}  // namespace rainbow
