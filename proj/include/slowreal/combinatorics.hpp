// Finite-scale combinatorial engines: pigeonhole windows, last-appearance
// permutation orders, crossing-split trimming, and the bit-stabilization
// selectors that extract Cauchy subsequences from bounded rational streams.
//
// None of these searches can be complete (the principles they realize have
// no algorithms); each is a deterministic, fuel-monotone heuristic whose
// failures on adversarial inputs are themselves the point.
#pragma once

#include "slowreal/continuous_fn.hpp"
#include "slowreal/rational.hpp"
#include "slowreal/verdict.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace slowreal {

struct Colouring {
    std::function<std::uint64_t(std::uint64_t)> colour;
    std::uint64_t max_colour = 0;  // values must lie in [0, max_colour]
};

struct FiniteLinearOrder {
    std::vector<std::uint64_t> elements;
    std::function<bool(std::uint64_t, std::uint64_t)> less;  // total strict order
};

// R(i, j): the j-th bit of the i-th set.
struct BitSequenceFamily {
    std::function<int(std::uint64_t i, std::uint64_t j)> bit;
};

// Colour with the most occurrences on [0, window); least colour on ties.
// Throws std::invalid_argument when the colouring exceeds max_colour.
std::uint64_t ipp_window(const Colouring& c, std::uint64_t window);

// Trace d(0..steps) of "order colours by last appearance": d(0) is the
// identity on {0..max_colour}; each step moves the seen colour to the back,
// shifting the colours after it down one slot.
std::vector<std::vector<std::uint64_t>> permutation_order(const Colouring& c,
                                                          std::uint64_t steps);

// Greedy trimming of crossing splits. A crossing split is a cut position p
// and a pivot element t of the current list: J = elements before p that are
// >= t in the order, I = elements from p on that are < t; every member of I
// is order-below every member of J while sitting index-after it. While some
// split has |I| > threshold and |J| > threshold (scanning p ascending, then
// t in list order), the least-index element of J is removed. The survivor
// list passes its own no-large-split check by construction.
std::vector<std::uint64_t> stable_suborder(const FiniteLinearOrder& order,
                                           std::uint64_t threshold);

// Iterative prefix stabilization: survivors start as [0, window); for bit
// positions 0..depth in order, keep the indices whose bit equals the
// majority bit among current survivors (ties keep the class of the least
// surviving index). Survivors agree on every processed bit.
std::vector<std::uint64_t> cohesive_selector(const BitSequenceFamily& family,
                                             std::uint64_t depth,
                                             std::uint64_t window);

// Binary digit d (0-based, weight 2^-(d+1)) of x in [0,1]; x = 1 reads as
// the all-ones expansion so the two endpoints stay distinguishable.
int binary_digit(const Rational& x, std::uint64_t d);

// Cauchy subsequence of a [0,1]-valued stream (values clamped): feeds the
// digit family R(d, n) = digit d of q_n to cohesive_selector. Survivors
// agree on digits 0..depth, hence lie in one dyadic cell of width
// 2^-(depth+1).
std::vector<std::uint64_t> cauchy_subsequence(
    const std::function<Rational(std::uint64_t)>& q, std::uint64_t depth,
    std::uint64_t window);

// Simultaneous version for countably many rows q(k, n): bit position p of
// the interleaved code is digit t of row k at the same n, where (k, t) is
// the pairing decomposition of p. Projecting the selector to any row k
// yields agreement on that row's digits t with pair(k, t) <= depth; rows
// are totally interleaved, so no row needs a length bookkeeping game.
std::vector<std::uint64_t> interleaved_subsequence(
    const std::function<Rational(std::uint64_t, std::uint64_t)>& q,
    std::uint64_t depth, std::uint64_t window);

struct ArzelaResult {
    Verdict verdict;
    std::vector<std::uint64_t> selector;
    ContinuousFn limit = fn_const(Rational(0));
};

// Diagonal compactness for function sequences: rows are indexed by the
// rationals of code <= window; row k feeds the stream n -> f_n(q_k)_n,
// scaled from [-bound, bound] into [0,1], to interleaved_subsequence. The
// limit reads the tower along the selector (extended by its last entry).
// Unknown when fewer than two indices survive.
ArzelaResult arzela_ascoli(const FnSequence& fs, const Rational& bound,
                           std::uint64_t depth, std::uint64_t window);

// Range decoding against a claimed uniform subcover bound h(n): n is
// declared in range exactly when f hits it before h(n). A wrong h decodes
// wrongly; only a true bound is reliable, which is the demonstration.
bool sequential_hb_decode(const std::function<std::uint64_t(std::uint64_t)>& f,
                          std::uint64_t n, std::uint64_t h_n);

}  // namespace slowreal
