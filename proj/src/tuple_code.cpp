#include "slowreal/tuple_code.hpp"

#include <algorithm>
#include <mutex>

namespace slowreal {

Integer cantor_pair(const Integer& a, const Integer& b) {
    Integer s = a + b;
    return s * (s + 1) / 2 + b;
}

std::pair<Integer, Integer> cantor_unpair(const Integer& c) {
    // s = floor((sqrt(8c+1)-1)/2), then b = c - s(s+1)/2, a = s - b.
    Integer t = 8 * c + 1;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), t.get_mpz_t());
    Integer s = (root - 1) / 2;
    Integer tri = s * (s + 1) / 2;
    Integer b = c - tri;
    Integer a = s - b;
    return {a, b};
}

Integer zigzag(const Integer& z) { return z >= 0 ? Integer(2 * z) : Integer(-2 * z - 1); }

Integer unzigzag(const Integer& n) {
    return n % 2 == 0 ? Integer(n / 2) : Integer(-(n + 1) / 2);
}

Integer rational_code(const Rational& q) {
    return cantor_pair(zigzag(q.get_num()), Integer(q.get_den() - 1));
}

Rational rational_from_code(const Integer& c) {
    auto [u, v] = cantor_unpair(c);
    return make_rational(unzigzag(u), v + 1);
}

bool code_is_canonical(const Integer& c) {
    auto [u, v] = cantor_unpair(c);
    Integer num = unzigzag(u);
    Integer den = v + 1;
    Integer g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return g == 1;
}

Integer triple_code(std::uint64_t n, const Rational& a, const Rational& r) {
    Integer nn(static_cast<unsigned long>(n));
    return cantor_pair(cantor_pair(nn, rational_code(a)), rational_code(r));
}

std::optional<Triple> triple_from_code(const Integer& c) {
    if (c < 0) return std::nullopt;
    auto [u, cr] = cantor_unpair(c);
    auto [nn, ca] = cantor_unpair(u);
    if (!nn.fits_ulong_p()) return std::nullopt;
    if (!code_is_canonical(ca) || !code_is_canonical(cr)) return std::nullopt;
    Rational r = rational_from_code(cr);
    if (r <= 0) return std::nullopt;
    Triple t;
    t.n = nn.get_ui();
    t.a = rational_from_code(ca);
    t.r = r;
    return t;
}

Triple master_triple(const Integer& j) {
    auto [j1, j2] = cantor_unpair(j);
    auto [u, w] = cantor_unpair(j2);
    Triple t;
    t.n = j1.fits_ulong_p() ? j1.get_ui() : ~0ull;
    t.a = rational_from_code(u);
    // positive radius: decode w as a pair (i, k) -> (i+1)/(k+1)
    auto [wi, wk] = cantor_unpair(w);
    t.r = make_rational(wi + 1, wk + 1);
    return t;
}

namespace {

struct RationalTableState {
    std::mutex mu;
    std::uint64_t capacity = 0;                 // codes covered: [0, capacity]
    std::vector<CodedRational> by_value;        // canonical only, sorted by value
};

RationalTableState& table_state() {
    static RationalTableState s;
    return s;
}

void grow_table(RationalTableState& s, std::uint64_t bound) {
    if (bound <= s.capacity && !s.by_value.empty()) return;
    std::uint64_t target = std::max<std::uint64_t>(bound, 1024);
    // round capacity up so repeated nearby bounds reuse the same table
    std::uint64_t cap = 1024;
    while (cap < target) cap *= 2;
    std::vector<CodedRational> entries;
    entries.reserve(cap / 3);
    for (std::uint64_t c = 0; c <= cap; ++c) {
        Integer ci(static_cast<unsigned long>(c));
        if (!code_is_canonical(ci)) continue;
        entries.push_back({rational_from_code(ci), c});
    }
    std::sort(entries.begin(), entries.end(),
              [](const CodedRational& x, const CodedRational& y) {
                  return x.value < y.value;
              });
    s.by_value = std::move(entries);
    s.capacity = cap;
}

}  // namespace

std::vector<CodedRational> rationals_in_range(const Rational& lo,
                                              const Rational& hi,
                                              std::uint64_t code_bound) {
    auto& s = table_state();
    std::scoped_lock lock(s.mu);
    grow_table(s, code_bound);
    std::vector<CodedRational> out;
    auto cmp = [](const CodedRational& e, const Rational& v) { return e.value < v; };
    auto it = std::lower_bound(s.by_value.begin(), s.by_value.end(), lo, cmp);
    for (; it != s.by_value.end() && it->value <= hi; ++it)
        if (it->code <= code_bound) out.push_back(*it);
    return out;
}

std::vector<CodedRational> rationals_up_to(std::uint64_t code_bound) {
    auto& s = table_state();
    std::scoped_lock lock(s.mu);
    grow_table(s, code_bound);
    std::vector<CodedRational> out;
    for (const auto& e : s.by_value)
        if (e.code <= code_bound) out.push_back(e);
    return out;
}

}  // namespace slowreal
