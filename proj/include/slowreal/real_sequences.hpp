// Sequences of reals under the uniform Cauchy contract, and the
// completeness constructions built on them: diagonal limits, suprema,
// monotone and nested-interval limits, limsup approximation, and
// Bolzano-Weierstrass extraction.
//
// The uniformity contract (one modulus serving every member at once) is,
// like the SlowReal contract, a promise of the caller; audits in the test
// harness use UniformRateWitness to check it on rated instances.
#pragma once

#include "slowreal/continuous_fn.hpp"
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
#include <vector>

namespace slowreal {

class UniformRealSequence {
public:
    using Table = std::function<Rational(std::uint64_t n, std::uint64_t i)>;

    explicit UniformRealSequence(Table table);

    static UniformRealSequence from_real(const SlowReal& x);

    // Stage i of member n, memoized.
    Rational at(std::uint64_t n, std::uint64_t i) const;

private:
    struct Cell {
        Table table;
        mutable std::mutex mu;
        mutable std::map<std::pair<std::uint64_t, std::uint64_t>, Rational> memo;
    };
    std::shared_ptr<Cell> cell_;
};

// Test-harness modulus: k -> N with |gen(n,i) - gen(n,j)| <= 2^-k for every
// member n and all i, j >= N.
using UniformRateWitness = std::function<std::uint64_t(std::uint64_t)>;

// Row view; reads through the sequence's memo.
SlowReal member(const UniformRealSequence& s, std::uint64_t n);

// The diagonal (gen(n, n)). When the members form a Cauchy sequence of
// reals this is their limit; the evidence parameter records that claim for
// audits and is not consulted at runtime.
SlowReal diagonal_limit(const UniformRealSequence& s,
                        const std::optional<UniformRateWitness>& evidence = {});

struct Supremum {
    SlowReal value;                                      // stage i: max_{n<=i} gen(n,i)
    std::function<std::uint64_t(std::uint64_t)> selector;  // least argmax per stage
};

// Least upper bound of a bounded sequence, realized as the staged running
// maximum. `bound` documents the contract (every member <= bound); the
// construction itself never needs it.
Supremum supremum(const UniformRealSequence& s, const Rational& bound);

// Limit of a non-decreasing bounded sequence = its supremum. For a
// non-increasing sequence, apply to the negated sequence and negate.
SlowReal monotone_limit(const UniformRealSequence& s, const Rational& bound);

// Common point of a nested chain x_n <= x_{n+1} <= y_{n+1} <= y_n: the
// monotone limit of the lower ends. ys participates through the contract
// (and through audits), not the computation.
SlowReal nested_intervals(const UniformRealSequence& xs,
                          const UniformRealSequence& ys);

// Defeasible limsup approximation: finds the minimal level l such that the
// diagonal reaches bound - (l+1)*eps/2 somewhere in the top half of the
// window [0, fuel], and reports q = bound - l*eps/2 as the value payload.
// Requires eps > 0.
Verdict limsup_approx(const UniformRealSequence& s, const Rational& bound,
                      const Rational& eps, std::uint64_t fuel);

struct BolzanoWeierstrass {
    Verdict verdict;
    std::vector<std::uint64_t> selector;  // strictly increasing
    SlowReal limit;
};

// Accumulation-point extraction: clamps the diagonal to [-bound, bound]
// stage-wise (exactly as a precondition repair, keeping the operation
// total), rescales to [0,1], and runs the digit-stabilization selector
// with window = fuel. Unknown when fewer than two indices survive.
BolzanoWeierstrass bolzano_weierstrass(const UniformRealSequence& s,
                                       const Rational& bound, std::uint64_t fuel);

// The reals f_n(x) as a sequence: gen(n, i) = f_n(x_i)_i. Equicontinuity
// at x is the contract that makes the result uniform.
UniformRealSequence eval_sequence(const FnSequence& fs, const SlowReal& x,
                                  const std::optional<UniformRateWitness>& evidence = {});

}  // namespace slowreal
