#include "slowreal/combinatorics.hpp"

#include "slowreal/tuple_code.hpp"

#include <algorithm>
#include <stdexcept>

namespace slowreal {

namespace {

std::uint64_t checked_colour(const Colouring& c, std::uint64_t i) {
    std::uint64_t v = c.colour(i);
    if (v > c.max_colour)
        throw std::invalid_argument("colouring value exceeds max_colour");
    return v;
}

}  // namespace

std::uint64_t ipp_window(const Colouring& c, std::uint64_t window) {
    std::vector<std::uint64_t> counts(c.max_colour + 1, 0);
    for (std::uint64_t i = 0; i < window; ++i) ++counts[checked_colour(c, i)];
    std::uint64_t best = 0;
    for (std::uint64_t v = 1; v <= c.max_colour; ++v)
        if (counts[v] > counts[best]) best = v;  // ties keep the least colour
    return best;
}

std::vector<std::vector<std::uint64_t>> permutation_order(const Colouring& c,
                                                          std::uint64_t steps) {
    std::vector<std::uint64_t> d(c.max_colour + 1);
    for (std::uint64_t v = 0; v <= c.max_colour; ++v) d[v] = v;
    std::vector<std::vector<std::uint64_t>> trace{d};
    for (std::uint64_t i = 0; i < steps; ++i) {
        std::uint64_t col = checked_colour(c, i);
        auto it = std::find(d.begin(), d.end(), col);
        d.erase(it);
        d.push_back(col);  // most recently seen goes last
        trace.push_back(d);
    }
    return trace;
}

std::vector<std::uint64_t> stable_suborder(const FiniteLinearOrder& order,
                                           std::uint64_t threshold) {
    std::vector<std::uint64_t> s = order.elements;
    const auto& less = order.less;
    bool removed = true;
    while (removed && !s.empty()) {
        removed = false;
        for (std::size_t p = 1; p < s.size() && !removed; ++p) {
            for (std::size_t ti = 0; ti < s.size() && !removed; ++ti) {
                std::uint64_t t = s[ti];
                std::uint64_t upper = 0, lower = 0;
                std::size_t first_upper = s.size();
                for (std::size_t j = 0; j < p; ++j)
                    if (!less(s[j], t)) {  // s[j] >= t in the order
                        ++upper;
                        first_upper = std::min(first_upper, j);
                    }
                for (std::size_t j = p; j < s.size(); ++j)
                    if (less(s[j], t)) ++lower;
                if (upper > threshold && lower > threshold) {
                    s.erase(s.begin() + static_cast<std::ptrdiff_t>(first_upper));
                    removed = true;
                }
            }
        }
    }
    return s;
}

std::vector<std::uint64_t> cohesive_selector(const BitSequenceFamily& family,
                                             std::uint64_t depth,
                                             std::uint64_t window) {
    std::vector<std::uint64_t> survivors;
    survivors.reserve(window);
    for (std::uint64_t j = 0; j < window; ++j) survivors.push_back(j);
    for (std::uint64_t pos = 0; pos <= depth && !survivors.empty(); ++pos) {
        std::size_t ones = 0;
        for (std::uint64_t j : survivors)
            if (family.bit(pos, j) != 0) ++ones;
        std::size_t zeros = survivors.size() - ones;
        int keep;
        if (ones > zeros)
            keep = 1;
        else if (zeros > ones)
            keep = 0;
        else
            keep = family.bit(pos, survivors.front()) != 0 ? 1 : 0;
        std::vector<std::uint64_t> next;
        next.reserve(survivors.size());
        for (std::uint64_t j : survivors)
            if ((family.bit(pos, j) != 0 ? 1 : 0) == keep) next.push_back(j);
        survivors = std::move(next);
    }
    return survivors;
}

int binary_digit(const Rational& x, std::uint64_t d) {
    if (x >= 1) return 1;
    if (x <= 0) return 0;
    // floor(x * 2^(d+1)) mod 2
    Integer shifted;
    mpz_mul_2exp(shifted.get_mpz_t(), x.get_num().get_mpz_t(),
                 static_cast<unsigned long>(d) + 1);
    Integer digit;
    mpz_fdiv_q(digit.get_mpz_t(), shifted.get_mpz_t(), x.get_den().get_mpz_t());
    return mpz_odd_p(digit.get_mpz_t()) ? 1 : 0;
}

std::vector<std::uint64_t> cauchy_subsequence(
    const std::function<Rational(std::uint64_t)>& q, std::uint64_t depth,
    std::uint64_t window) {
    if (!q) throw std::invalid_argument("cauchy_subsequence: null stream");
    BitSequenceFamily digits{[q](std::uint64_t d, std::uint64_t n) {
        return binary_digit(clamp(q(n), Rational(0), Rational(1)), d);
    }};
    return cohesive_selector(digits, depth, window);
}

std::vector<std::uint64_t> interleaved_subsequence(
    const std::function<Rational(std::uint64_t, std::uint64_t)>& q,
    std::uint64_t depth, std::uint64_t window) {
    if (!q) throw std::invalid_argument("interleaved_subsequence: null table");
    BitSequenceFamily bits{[q](std::uint64_t p, std::uint64_t n) {
        auto [k, t] = cantor_unpair(Integer(static_cast<unsigned long>(p)));
        Rational v = clamp(q(k.get_ui(), n), Rational(0), Rational(1));
        return binary_digit(v, t.get_ui());
    }};
    return cohesive_selector(bits, depth, window);
}

ArzelaResult arzela_ascoli(const FnSequence& fs, const Rational& bound,
                           std::uint64_t depth, std::uint64_t window) {
    auto rows = rationals_up_to(window);
    Rational b = rat_abs(bound);
    auto scaled = [fs, rows, b](std::uint64_t k, std::uint64_t n) -> Rational {
        if (k >= rows.size()) return Rational(0);
        Rational v = fs.at(n, rows[k].value, n);
        return div_or_zero(v + b, 2 * b);  // [-b, b] -> [0, 1]
    };
    ArzelaResult out;
    out.selector = interleaved_subsequence(scaled, depth, window);
    out.verdict.fuel_used = window;
    if (out.selector.size() < 2) {
        out.verdict.outcome = Outcome::unknown;
        return out;
    }
    out.verdict.outcome = Outcome::holds;
    std::vector<std::uint64_t> sel = out.selector;
    out.limit = ContinuousFn([fs, sel](const Rational& q, std::uint64_t i) {
        std::uint64_t n = sel[std::min<std::uint64_t>(i, sel.size() - 1)];
        return fs.at(n, q, i);
    });
    return out;
}

bool sequential_hb_decode(const std::function<std::uint64_t(std::uint64_t)>& f,
                          std::uint64_t n, std::uint64_t h_n) {
    for (std::uint64_t i = 0; i < h_n; ++i)
        if (f(i) == n) return true;
    return false;
}

}  // namespace slowreal
