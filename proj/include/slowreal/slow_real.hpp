// Rate-free reals.
//
// A SlowReal is a total function from stage indices to exact rationals,
// promised (but never checked, and not checkable) to be a Cauchy sequence.
// No convergence rate travels with the value: every consumer must either
// produce stage-wise answers of the same kind, or search a finite window
// and return a defeasible Verdict.
//
// Generators must be deterministic: stage i always yields the same
// rational. Stages are memoized behind a shared, thread-safe cell so a
// value can be passed around and re-queried cheaply.
#pragma once

#include "slowreal/rational.hpp"
#include "slowreal/verdict.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace slowreal {

class SlowReal {
public:
    using Generator = std::function<Rational(std::uint64_t)>;

    SlowReal() : SlowReal(Rational(0)) {}
    explicit SlowReal(Rational constant);
    explicit SlowReal(Generator gen);

    // Stage i of the underlying sequence, memoized.
    Rational at(std::uint64_t i) const;

private:
    struct Cell {
        Generator gen;
        mutable std::mutex mu;
        mutable std::unordered_map<std::uint64_t, Rational> memo;
    };
    std::shared_ptr<Cell> cell_;
};

// Test-harness side channel: a modulus k -> N such that all stages from N
// on stay within 2^-k of each other. Library operations never consume one;
// tests use it to turn defeasible verdicts into checked facts.
using RateWitness = std::function<std::uint64_t(std::uint64_t)>;

Rational approximate(const SlowReal& x, std::uint64_t i);

// Field structure, computed stage-wise on the representations. The named
// functions are the primary interface; field_op is the same thing behind a
// runtime-selected tag (handy for drivers and the CLI).
enum class FieldOp { add, sub, mul, abs, neg };

SlowReal field_op(FieldOp op, const SlowReal& x,
                  const std::optional<SlowReal>& y = std::nullopt);

SlowReal add(const SlowReal& x, const SlowReal& y);
SlowReal sub(const SlowReal& x, const SlowReal& y);
SlowReal mul(const SlowReal& x, const SlowReal& y);
SlowReal neg(const SlowReal& x);
SlowReal abs(const SlowReal& x);
SlowReal scale(const Rational& c, const SlowReal& x);
SlowReal shift(const Rational& c, const SlowReal& x);

// Reciprocal. The caller asserts apartness from zero by supplying an order
// witness (delta, N): |x_n| > delta for every n >= N. The witness is the
// caller's claim, not something this function can check; stages where the
// representation happens to hit 0 exactly are mapped to 0.
SlowReal invert(const SlowReal& x, const OrderWitness& apartness);

// Defeasible strict order. Searches dyadic separations delta = 2^-k for
// k = 0..fuel, and for each delta the least window start N <= fuel with
//     x_n + delta < y_n   for all n in [N, fuel].
// First success (smallest k, then least N) gives Holds with that witness.
// If instead y < x is confirmed the same way, returns Fails carrying the
// reverse witness. Otherwise Unknown.
Verdict strict_less(const SlowReal& x, const SlowReal& y, std::uint64_t fuel);

// Refutation of x <= y: Holds exactly when strict_less(y, x) holds, with
// the same witness. x <= y itself is never confirmable, only refutable.
Verdict leq_refuted(const SlowReal& x, const SlowReal& y, std::uint64_t fuel);

// Sum of a enumerated geometric-like series: stage n is
//     sum_{i <= n} 2^-(f(i)+1)
// for an injective f (injectivity is the caller's obligation). The value
// is a perfectly ordinary real; what is missing is any rate of
// convergence, which depends on how slowly f reveals small exponents.
SlowReal specker(const std::function<std::uint64_t(std::uint64_t)>& f);

// Candidate convergence rate at precision 2^-k: the least N <= fuel such
// that every pair of stages m, n in [N, fuel] satisfies
// |x_m - x_n| <= 2^-k. Holds with index = N whenever the window is
// nonempty (N = fuel always qualifies vacuously), so the answer is always
// a candidate; larger fuel can revoke it.
Verdict extract_rate(const SlowReal& x, std::uint64_t k, std::uint64_t fuel);

// Defeasible integer bound: ceil(max_{n <= fuel} |x_n|) + 1, so the window
// stays strictly below the bound with a whole unit to spare.
Integer archimedean_bound(const SlowReal& x, std::uint64_t fuel);

// Stage-wise maximum of a nonempty list. Throws std::invalid_argument on
// an empty list.
SlowReal finite_max(const std::vector<SlowReal>& xs);

}  // namespace slowreal
