// Continuous functions as stage-indexed rational tables.
//
// A ContinuousFn is a total rule (q, i) -> f(q)_i. Continuity at a real x
// is a contract on the table (small input balls eventually give small
// output oscillation), not something the type can check; evaluation at a
// SlowReal is the diagonal read f(x_i)_i, and the table stays total even
// on contract-violating inputs so failures show up in audits, not crashes.
#pragma once

#include "slowreal/rational.hpp"
#include "slowreal/slow_real.hpp"
#include "slowreal/verdict.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>

namespace slowreal {

class ContinuousFn {
public:
    using Table = std::function<Rational(const Rational& q, std::uint64_t i)>;

    explicit ContinuousFn(Table table);

    // f(q)_i, memoized per (q, i).
    Rational at(const Rational& q, std::uint64_t i) const;

private:
    struct Cell {
        Table table;
        mutable std::mutex mu;
        mutable std::map<std::pair<Rational, std::uint64_t>, Rational> memo;
    };
    std::shared_ptr<Cell> cell_;
};

// A sequence of continuous functions; table read as f_n(q)_i.
class FnSequence {
public:
    using Table =
        std::function<Rational(std::uint64_t n, const Rational& q, std::uint64_t i)>;

    explicit FnSequence(Table table);

    Rational at(std::uint64_t n, const Rational& q, std::uint64_t i) const;

    // Row view; shares this sequence's memo.
    ContinuousFn member(std::uint64_t n) const;

private:
    struct Cell {
        Table table;
        mutable std::mutex mu;
        mutable std::map<std::tuple<std::uint64_t, Rational, std::uint64_t>, Rational> memo;
    };
    std::shared_ptr<Cell> cell_;
};

// Test-harness modulus for a rated function at a fixed point: k -> N
// realizing the continuity contract at tolerance 2^-k.
using ContinuityModulus = std::function<std::uint64_t(std::uint64_t)>;

// Diagonal evaluation: stage i of the result is f(x_i)_i.
SlowReal eval(const ContinuousFn& f, const SlowReal& x);

// h(q)_i = g(f(q)_i)_i.
ContinuousFn compose(const ContinuousFn& g, const ContinuousFn& f);

enum class PointwiseOp { add, sub, mul, div, max };

// Stage-wise combination; div maps 0-denominator stages to 0.
ContinuousFn pointwise_combine(PointwiseOp op, const ContinuousFn& f,
                               const ContinuousFn& g);

// Stage i sums the first i+1 terms, each clamped to [-bounds(n), bounds(n)].
// The clamp is mandatory: it keeps the partial sums bounded by the budget
// even when a term violates its advertised bound.
ContinuousFn weighted_series(const FnSequence& fs,
                             std::function<Rational(std::uint64_t)> bounds);

// f(q)_i = f_i(q)_i; the evidence parameter is the caller's claim that the
// tower is uniformly Cauchy and is not consulted at runtime.
ContinuousFn uniform_limit(const FnSequence& fs,
                           const std::optional<ContinuityModulus>& evidence = {});

// Defeasible continuity modulus of f at x for tolerance 2^-k: searches
// N in the power-of-two ladder 1, 2, 4, ... <= fuel such that all sampled
// rationals q, r of code <= fuel inside B_{1/N}(window estimate of x) give
// |f(q)_i - f(r)_j| <= 2^-k for all i, j in [N, fuel]. The center of the
// ball is estimated from the stage window of x (its last stage <= fuel).
Verdict modulus_search(const ContinuousFn& f, const SlowReal& x, std::uint64_t k,
                       std::uint64_t fuel);

// Common builders (the CLI registry names these).
ContinuousFn fn_identity();
ContinuousFn fn_const(const Rational& c);
ContinuousFn fn_affine(const Rational& a, const Rational& b);  // a*q + b
ContinuousFn fn_poly(const std::vector<Rational>& coeffs);     // c0 + c1 q + ...
ContinuousFn fn_abs();

}  // namespace slowreal
