#include "slowreal/slow_real.hpp"

#include <stdexcept>
#include <utility>

namespace slowreal {

SlowReal::SlowReal(Rational constant)
    : SlowReal(Generator([q = std::move(constant)](std::uint64_t) { return q; })) {}

SlowReal::SlowReal(Generator gen) : cell_(std::make_shared<Cell>()) {
    if (!gen) throw std::invalid_argument("SlowReal: null generator");
    cell_->gen = std::move(gen);
}

Rational SlowReal::at(std::uint64_t i) const {
    {
        std::lock_guard<std::mutex> lock(cell_->mu);
        auto it = cell_->memo.find(i);
        if (it != cell_->memo.end()) return it->second;
    }
    // Compute outside the lock: generators routinely query other reals
    // (and composed generators query several), so holding the lock here
    // could deadlock. Generators are deterministic, so a duplicated
    // computation from a racing thread inserts the same value.
    Rational v = cell_->gen(i);
    std::lock_guard<std::mutex> lock(cell_->mu);
    auto [it, inserted] = cell_->memo.emplace(i, std::move(v));
    return it->second;
}

Rational approximate(const SlowReal& x, std::uint64_t i) { return x.at(i); }

SlowReal field_op(FieldOp op, const SlowReal& x, const std::optional<SlowReal>& y) {
    bool binary = op == FieldOp::add || op == FieldOp::sub || op == FieldOp::mul;
    if (binary != y.has_value())
        throw std::invalid_argument(binary ? "field_op: missing second operand"
                                           : "field_op: unary op given two operands");
    switch (op) {
        case FieldOp::add: return add(x, *y);
        case FieldOp::sub: return sub(x, *y);
        case FieldOp::mul: return mul(x, *y);
        case FieldOp::abs: return abs(x);
        case FieldOp::neg: return neg(x);
    }
    throw std::invalid_argument("field_op: unknown tag");
}

// The explicit Rational returns matter: gmpxx arithmetic yields expression
// templates that reference their operands, and letting one escape a lambda
// would leave it pointing at dead temporaries.
SlowReal add(const SlowReal& x, const SlowReal& y) {
    return SlowReal([x, y](std::uint64_t i) -> Rational { return x.at(i) + y.at(i); });
}

SlowReal sub(const SlowReal& x, const SlowReal& y) {
    return SlowReal([x, y](std::uint64_t i) -> Rational { return x.at(i) - y.at(i); });
}

SlowReal mul(const SlowReal& x, const SlowReal& y) {
    return SlowReal([x, y](std::uint64_t i) -> Rational { return x.at(i) * y.at(i); });
}

SlowReal neg(const SlowReal& x) {
    return SlowReal([x](std::uint64_t i) { return Rational(-x.at(i)); });
}

SlowReal abs(const SlowReal& x) {
    return SlowReal([x](std::uint64_t i) { return rat_abs(x.at(i)); });
}

SlowReal scale(const Rational& c, const SlowReal& x) {
    return SlowReal([c, x](std::uint64_t i) { return Rational(c * x.at(i)); });
}

SlowReal shift(const Rational& c, const SlowReal& x) {
    return SlowReal([c, x](std::uint64_t i) { return Rational(c + x.at(i)); });
}

SlowReal invert(const SlowReal& x, const OrderWitness& apartness) {
    if (apartness.delta <= 0)
        throw std::invalid_argument("invert: apartness witness needs delta > 0");
    // The witness content (|x_n| > delta from stage N on) is the caller's
    // claim and cannot be verified here; it is what makes the stage-wise
    // reciprocal below a Cauchy sequence again.
    return SlowReal([x](std::uint64_t i) {
        Rational q = x.at(i);
        if (q == 0) return Rational(0);
        return Rational(1 / q);
    });
}

namespace {

// Least N <= fuel with lo(n) + delta < hi(n) on all of [N, fuel], or
// fuel + 1 if no suffix works.
std::uint64_t least_separated_start(const std::vector<Rational>& diff,
                                    const Rational& delta) {
    // diff[n] = hi(n) - lo(n); scan once for the last violating index.
    std::uint64_t start = 0;
    for (std::uint64_t n = 0; n < diff.size(); ++n) {
        if (diff[n] <= delta) start = n + 1;
    }
    return start;
}

std::vector<Rational> stage_diffs(const SlowReal& lo, const SlowReal& hi,
                                  std::uint64_t fuel) {
    std::vector<Rational> diff;
    diff.reserve(fuel + 1);
    for (std::uint64_t n = 0; n <= fuel; ++n) diff.push_back(hi.at(n) - lo.at(n));
    return diff;
}

// Smallest k (largest delta = 2^-k), then least N, confirming separation.
std::optional<OrderWitness> search_separation(const std::vector<Rational>& diff,
                                              std::uint64_t fuel) {
    for (std::uint64_t k = 0; k <= fuel; ++k) {
        Rational delta = pow2(-static_cast<long>(k));
        std::uint64_t start = least_separated_start(diff, delta);
        if (start <= fuel) return OrderWitness{delta, start};
    }
    return std::nullopt;
}

}  // namespace

Verdict strict_less(const SlowReal& x, const SlowReal& y, std::uint64_t fuel) {
    Verdict v;
    v.fuel_used = fuel;
    if (auto w = search_separation(stage_diffs(x, y, fuel), fuel)) {
        v.outcome = Outcome::holds;
        v.order = *w;
        return v;
    }
    if (auto w = search_separation(stage_diffs(y, x, fuel), fuel)) {
        v.outcome = Outcome::fails;
        v.order = *w;
        return v;
    }
    v.outcome = Outcome::unknown;
    return v;
}

Verdict leq_refuted(const SlowReal& x, const SlowReal& y, std::uint64_t fuel) {
    Verdict v = strict_less(y, x, fuel);
    if (v.fails()) {
        // y < x failed because x < y was confirmed; that does not refute
        // x <= y, so report Unknown-with-evidence as plain Unknown.
        v.outcome = Outcome::unknown;
        v.order.reset();
    }
    return v;
}

SlowReal specker(const std::function<std::uint64_t(std::uint64_t)>& f) {
    if (!f) throw std::invalid_argument("specker: null enumeration");
    return SlowReal([f](std::uint64_t n) {
        Rational sum(0);
        for (std::uint64_t i = 0; i <= n; ++i)
            sum += pow2(-static_cast<long>(f(i)) - 1);
        return sum;
    });
}

Verdict extract_rate(const SlowReal& x, std::uint64_t k, std::uint64_t fuel) {
    std::vector<Rational> v;
    v.reserve(fuel + 1);
    for (std::uint64_t n = 0; n <= fuel; ++n) v.push_back(x.at(n));

    // Suffix extrema make the window oscillation max - min over [N, fuel]
    // an O(1) lookup per candidate N.
    std::vector<Rational> smax(v), smin(v);
    for (std::uint64_t n = fuel; n-- > 0;) {
        smax[n] = rat_max(smax[n], smax[n + 1]);
        smin[n] = rat_min(smin[n], smin[n + 1]);
    }

    Rational tol = pow2(-static_cast<long>(k));
    Verdict out;
    out.fuel_used = fuel;
    out.outcome = Outcome::holds;
    for (std::uint64_t n = 0; n <= fuel; ++n) {
        if (smax[n] - smin[n] <= tol) {
            out.index = n;
            return out;
        }
    }
    // Unreachable: N = fuel always satisfies the bound on a one-point
    // window. Kept for safety against future edits.
    out.index = fuel;
    return out;
}

Integer archimedean_bound(const SlowReal& x, std::uint64_t fuel) {
    Rational m(0);
    for (std::uint64_t n = 0; n <= fuel; ++n) m = rat_max(m, rat_abs(x.at(n)));
    return rat_ceil(m) + 1;
}

SlowReal finite_max(const std::vector<SlowReal>& xs) {
    if (xs.empty()) throw std::invalid_argument("finite_max: empty list");
    return SlowReal([xs](std::uint64_t i) {
        Rational m = xs.front().at(i);
        for (std::size_t j = 1; j < xs.size(); ++j) m = rat_max(m, xs[j].at(i));
        return m;
    });
}

}  // namespace slowreal
