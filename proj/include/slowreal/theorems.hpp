// Named theorems of one-variable analysis as executable constructions.
//
// Every operation here returns stage-indexed data built from exact rational
// arithmetic: bisection reruns per stage (IVT), dyadic stage sums (Riemann),
// Bernstein tables, iterate towers (Banach), bounded searches (Caristi,
// extrema), staged extension pipelines (Tietze), the middle-third
// anti-diagonal, and the nested-ball recursion behind Baire category.
// Searches that can exhaust their fuel report Unknown instead of guessing.
#ifndef SLOWREAL_THEOREMS_HPP
#define SLOWREAL_THEOREMS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "slowreal/continuous_fn.hpp"
#include "slowreal/open_sets.hpp"
#include "slowreal/rational.hpp"
#include "slowreal/real_sequences.hpp"
#include "slowreal/slow_real.hpp"
#include "slowreal/verdict.hpp"

namespace slowreal {

// The intervals [a_i, b_i] of one stage-n bisection run, i = 0..n. Each
// interval halves the previous one and stays nested inside it.
using BisectionTrace = std::vector<std::pair<Rational, Rational>>;

// Root finder: stage n reruns bisection on [0, 1] from scratch, branching
// on the sign of the stage-n value at each midpoint (normalized per stage
// so the left end reads negative). Stage value is a_n^n, or the midpoint
// itself when a stage value is exactly zero. Total for every f; the output
// is Cauchy when f is continuous with a sign change, and the documented
// failure mode otherwise.
SlowReal ivt_root(const ContinuousFn& f);

// The full interval list of the stage-n rerun.
BisectionTrace ivt_trace(const ContinuousFn& f, std::uint64_t n);

struct ExtremumResult {
    Verdict verdict;
    std::optional<SlowReal> argmax;
    SlowReal value = SlowReal([](std::uint64_t) { return Rational(0); });
};

// Maximum of f on [0, 1]: stage n takes the dyadic grid point i*2^-n with
// the largest stage-n value, then a Cauchy subsequence of those candidates
// is extracted combinatorially. The observation window is floor(log2 fuel)
// stages (the stage-n grid costs 2^n evaluations) with half that many
// binary digits. Unknown when fewer than two candidates survive; value
// then falls back to the stage maxima diagonal.
ExtremumResult extremum(const ContinuousFn& f, std::uint64_t fuel);

// Searches the least N <= fuel such that all coded rationals p, q in
// [0, 1] with code <= fuel and |p - q| < 1/N have |f(p)_i - f(q)_j| < 2^-k
// for all N <= i, j <= fuel. Holds carries N in index; defeasible in both
// the rational corpus and the stage window.
Verdict uniform_continuity_modulus(const ContinuousFn& f, std::uint64_t k,
                                   std::uint64_t fuel);

// Stage n is the exact left Riemann sum of f over the 2^n-interval dyadic
// partition of [0, 1], using stage-n values.
SlowReal riemann_integral(const ContinuousFn& f);

// Degree-n Bernstein polynomial of f: table (q, i) -> sum_k f(k/n)_i *
// C(n,k) q^k (1-q)^(n-k), exact. Throws std::invalid_argument for n = 0.
ContinuousFn bernstein(const ContinuousFn& f, std::uint64_t n);

// Least degree that guarantees uniform error below eps for a function
// bounded by `bound` with modulus delta (degree > bound/(delta^2 * eps)).
// Throws std::invalid_argument unless bound, delta, eps are positive.
std::uint64_t bernstein_degree(const Rational& bound, const Rational& delta,
                               const Rational& eps);

struct BanachResult {
    UniformRealSequence seq;
    SlowReal fix;
};

// Iterates of a rho-contraction f of [0, 1]: gen(n, i) applies the stage-i
// table n times to the clamped stage-i value of x0 (all intermediate
// values clamped into [0, 1]); fix is the diagonal limit. Throws
// std::invalid_argument unless 0 <= rho < 1.
BanachResult banach_iterates(const ContinuousFn& f, const Rational& rho,
                             const SlowReal& x0);

// Lower semicontinuous code: a table of non-negative rationals g_i(q).
// The derived g'_k(q) = min over i <= k of g_i(q) is non-increasing in k
// and is the form every construction below consumes; prime() memoizes the
// running minima per argument.
class LscCode {
   public:
    using Table = std::function<Rational(std::uint64_t, const Rational&)>;

    explicit LscCode(Table table);

    Rational at(std::uint64_t i, const Rational& q) const;
    Rational prime(std::uint64_t k, const Rational& q) const;

   private:
    struct Cell;
    std::shared_ptr<Cell> cell_;
};

struct CaristiResult {
    Verdict verdict;
    std::optional<SlowReal> point;
    std::vector<Rational> trace;
};

// Fixed-point search under the hypothesis g(f(x)) <= g(x) - |x - f(x)|:
// starting from q_0 = 0, step m searches candidates j <= fuel, where j
// unpairs to (d, cq) naming the index i = i(m)+1+d and the rational q
// decoded from cq, for the first with q inside B(2^(1-m), f(q_m)_i) and
// g'_i(q) <= g'_i(m)(q_m) - |q_m - q| + 2^(1-m). Runs fuel steps; Unknown
// as soon as one step exhausts its candidates.
CaristiResult caristi_point(const ContinuousFn& f, const LscCode& g,
                            std::uint64_t fuel);

// Bounded evaluation of the comparison g(x) <= g(y) + z at eps = 2^-k:
// for every m <= fuel some n <= fuel must validate "every coded q in
// B(2^-n, y) admits a coded p in B(2^-m, x) with g'(p) <= g'(q) + z + eps"
// (indices and codes bounded by fuel, reals read at stage fuel; the primed
// minima make index fuel the hardest case on both sides). Holds or Fails
// with the witnessing m in index; both directions are defeasible.
Verdict lsc_leq_query(const LscCode& g, const SlowReal& x, const SlowReal& y,
                      const SlowReal& z, std::uint64_t k, std::uint64_t fuel);

// Staged Tietze extension of f: C -> [-1, 1] to the whole line. Layer n
// builds the two sublevel codes of f_n relative to C at level 2^n/3^(n+1),
// their characteristics g_{n,0}, g_{n,1}, the quotient g_n = g_{n,0} /
// (g_{n,0} + g_{n,1}), the layer h_n = (2/3)^(n+1) (g_n - 1/2), and
// f_{n+1} = f_n - h_n, for n <= depth. Returns the clamped series of the
// layers; on C the residual against f is bounded by 2 * (2/3)^depth (the
// exact residual is f_{depth+1}, one factor 2/3 better).
ContinuousFn tietze_extend(const ContinuousFn& f, const ClosedSetCode& c,
                           std::uint64_t depth);

// A family of reals: row n, stage i. Rows promise the Cauchy contract
// individually but not uniformly (that distinction is the whole point).
using RealFamily = std::function<Rational(std::uint64_t, std::uint64_t)>;

// The middle-third point set at level n: 2^(n+1) left endpoints, sorted.
// Distinct points are at least 2/3^(n+1) apart. Intended for audits and
// small n; the anti-diagonal itself never materializes these sets.
std::vector<Rational> cantor_level(std::uint64_t n);

// A real different from every row of the family: stage k re-reads each row
// at its stabilization index i(n, k) and walks left or right in the
// middle-third tree to dodge it. Guarantees |y_k - x_{n,k}| >= 1/(2*3^(n+1))
// for k >= n, exactly, whenever row n honours its contract.
SlowReal cantor_antidiagonal(const RealFamily& xs);

struct BaireStage {
    std::vector<Rational> centers;
    std::vector<Rational> radii;
    std::vector<Triple> picks;
};

// The stage-k run of the nested-ball recursion: starting from B(r, a),
// step i finds the minimal-code triple (N, b, s) whose ball meets
// B(r_i/2, a_i) and which the i-th open set admits on stages [N, k), then
// nests the largest dyadic ball inside the intersection. centers/radii
// hold a_0..a_k, r_0..r_k; picks holds the k chosen triples.
BaireStage baire_stage(const OpenFamily& us, const Rational& a,
                       const Rational& r, std::uint64_t k);

// The point of Baire category: stage k of the output is the stage-k final
// center a_k^k. Lands in B(r, a) and, when every set of the family is
// dense and open, in each of them. Throws std::invalid_argument for
// r <= 0.
SlowReal baire_point(const OpenFamily& us, const Rational& a,
                     const Rational& r);

}  // namespace slowreal

#endif  // SLOWREAL_THEOREMS_HPP
