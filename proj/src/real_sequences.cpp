#include "slowreal/real_sequences.hpp"

#include "slowreal/combinatorics.hpp"

#include <stdexcept>

namespace slowreal {

UniformRealSequence::UniformRealSequence(Table table) : cell_(std::make_shared<Cell>()) {
    if (!table) throw std::invalid_argument("UniformRealSequence: null table");
    cell_->table = std::move(table);
}

UniformRealSequence UniformRealSequence::from_real(const SlowReal& x) {
    return UniformRealSequence([x](std::uint64_t, std::uint64_t i) { return x.at(i); });
}

Rational UniformRealSequence::at(std::uint64_t n, std::uint64_t i) const {
    std::pair<std::uint64_t, std::uint64_t> key(n, i);
    {
        std::lock_guard<std::mutex> lock(cell_->mu);
        auto it = cell_->memo.find(key);
        if (it != cell_->memo.end()) return it->second;
    }
    Rational v = cell_->table(n, i);
    std::lock_guard<std::mutex> lock(cell_->mu);
    auto [it, inserted] = cell_->memo.emplace(key, std::move(v));
    return it->second;
}

SlowReal member(const UniformRealSequence& s, std::uint64_t n) {
    return SlowReal([s, n](std::uint64_t i) { return s.at(n, i); });
}

SlowReal diagonal_limit(const UniformRealSequence& s,
                        const std::optional<UniformRateWitness>&) {
    return SlowReal([s](std::uint64_t n) { return s.at(n, n); });
}

Supremum supremum(const UniformRealSequence& s, const Rational&) {
    auto argmax = [s](std::uint64_t i) {
        std::uint64_t best = 0;
        Rational m = s.at(0, i);
        for (std::uint64_t n = 1; n <= i; ++n) {
            Rational v = s.at(n, i);
            if (v > m) {  // strict: ties keep the least n
                m = v;
                best = n;
            }
        }
        return best;
    };
    SlowReal value([s](std::uint64_t i) {
        Rational m = s.at(0, i);
        for (std::uint64_t n = 1; n <= i; ++n) m = rat_max(m, s.at(n, i));
        return m;
    });
    return Supremum{value, argmax};
}

SlowReal monotone_limit(const UniformRealSequence& s, const Rational& bound) {
    return supremum(s, bound).value;
}

SlowReal nested_intervals(const UniformRealSequence& xs, const UniformRealSequence& ys) {
    // bound only documents the contract; the upper ends' stage 0 serves
    return monotone_limit(xs, ys.at(0, 0));
}

Verdict limsup_approx(const UniformRealSequence& s, const Rational& bound,
                      const Rational& eps, std::uint64_t fuel) {
    if (eps <= 0) throw std::invalid_argument("limsup_approx: eps must be positive");
    Verdict out;
    out.fuel_used = fuel;

    Rational top(bound);
    std::uint64_t half = fuel / 2;
    // maximal diagonal value over the top half of the window
    Rational peak = s.at(half, half);
    for (std::uint64_t n = half + 1; n <= fuel; ++n) peak = rat_max(peak, s.at(n, n));

    // minimal l with peak >= bound - (l+1)*eps/2; the |diagonal| <= bound
    // contract caps the search at 4*bound/eps + 2 levels
    Rational step = eps / 2;
    Integer cap_i = rat_ceil(div_or_zero(4 * rat_abs(bound), eps)) + 2;
    unsigned long cap = cap_i.fits_ulong_p() ? cap_i.get_ui() : 1ul << 20;
    for (unsigned long l = 0; l <= cap; ++l) {
        if (peak >= top - Rational(static_cast<long>(l) + 1) * step) {
            out.outcome = Outcome::holds;
            out.value = top - Rational(static_cast<long>(l)) * step;
            return out;
        }
    }
    out.outcome = Outcome::unknown;  // only reachable on contract violations
    return out;
}

BolzanoWeierstrass bolzano_weierstrass(const UniformRealSequence& s,
                                       const Rational& bound, std::uint64_t fuel) {
    Rational b = rat_abs(bound);
    auto scaled = [s, b](std::uint64_t n) -> Rational {
        Rational v = clamp(s.at(n, n), Rational(-b), b);
        return div_or_zero(v + b, 2 * b);
    };
    std::uint64_t depth = 0;
    while ((1ull << (depth + 1)) <= fuel && depth < 62) ++depth;

    BolzanoWeierstrass out;
    out.verdict.fuel_used = fuel;
    out.selector = cauchy_subsequence(scaled, depth, fuel);
    if (out.selector.size() < 2) {
        out.verdict.outcome = Outcome::unknown;
        out.limit = SlowReal(Rational(0));
        return out;
    }
    out.verdict.outcome = Outcome::holds;
    std::vector<std::uint64_t> sel = out.selector;
    out.limit = SlowReal([s, sel](std::uint64_t i) {
        std::uint64_t n = sel[std::min<std::uint64_t>(i, sel.size() - 1)];
        return s.at(n, n);
    });
    return out;
}

UniformRealSequence eval_sequence(const FnSequence& fs, const SlowReal& x,
                                  const std::optional<UniformRateWitness>&) {
    return UniformRealSequence(
        [fs, x](std::uint64_t n, std::uint64_t i) { return fs.at(n, x.at(i), i); });
}

}  // namespace slowreal
