// Open subsets of the line as countable codes.
//
// An open set is coded by a predicate on triples (n, a, r): stage n, rational
// center a, rational radius r > 0. A real x belongs to the coded set when
// some ball B_r(a) contains the tail of x's stage sequence and the triple
// (n, a, r) is in the code for every stage n past some threshold. Membership
// is therefore a semi-decidable search and member() returns a defeasible
// Verdict: Holds comes with the witnessing (N, a, r), Unknown reports fuel
// exhaustion and claims nothing.
//
// The calculus below (unions, preimages under continuous function tables,
// characteristic functions, separating functions, intersections, intervals,
// sublevel sets, finite subcovers, locally finite refinements) manipulates
// the codes themselves; every operation is total and the cost of a query is
// confined to the stage/fuel arguments. Intersections are the expensive
// corner: they route through a product of characteristic functions whose
// certificate radii shrink with the codes of the participating balls, so
// member() on an intersection typically stays Unknown at practical fuel even
// when both halves certify quickly. Tests pin both effects.
#pragma once

#include "slowreal/continuous_fn.hpp"
#include "slowreal/rational.hpp"
#include "slowreal/slow_real.hpp"
#include "slowreal/tuple_code.hpp"
#include "slowreal/verdict.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace slowreal {

struct OpenSetCode {
    // Total, deterministic membership test on triples (n, a, r).
    using Contains = std::function<bool(std::uint64_t, const Rational&, const Rational&)>;

    Contains contains;

    // When set, every (a, r) admitted by contains has cantor_pair of the
    // component codes <= family_bound. Literal codes know this; it lets
    // unions and preimages cap their component scans. Purely an accelerator:
    // results are identical with it unset.
    std::optional<std::uint64_t> family_bound;

    // All (code, triple) pairs with triple code <= code_bound that the set
    // admits, ascending by code. Derived from contains, so it enumerates
    // exactly the admitted triples by construction.
    std::vector<std::pair<std::uint64_t, Triple>> triples_up_to(std::uint64_t code_bound) const;
};

// A closed set is carried by a code for its complement.
struct ClosedSetCode {
    OpenSetCode complement;
};

using OpenFamily = std::function<OpenSetCode(std::uint64_t)>;

OpenSetCode empty_set();
OpenSetCode full_line();

// Union of the given open balls, each admitted at every stage. Radii must be
// positive; throws std::invalid_argument otherwise.
OpenSetCode from_balls(const std::vector<std::pair<Rational, Rational>>& balls);

// Open rays with rational endpoint: ray_above(q) codes (q, +inf) as the
// triples with a - r >= q, ray_below(q) codes (-inf, q) as those with
// a + r <= q.
OpenSetCode ray_above(const Rational& q);
OpenSetCode ray_below(const Rational& q);

// Membership search: scan candidate balls (a, r) with pair code <= fuel in
// code order, and certify the first one whose ball contains x's stages and
// whose triples sit in the code on a common suffix [N, fuel]. Holds carries
// ball = (N, a, r) and index = N.
Verdict member(const OpenSetCode& U, const SlowReal& x, std::uint64_t fuel);

// Union of a finite list (the list is the prefix of a countable family whose
// remaining members are empty).
OpenSetCode union_sets(const std::vector<OpenSetCode>& components);

// Union of a countable family. A triple (n, a, r) is admitted by tracking,
// per ball (a, r), the least Cantor-coded pair (i, j) such that component i
// admits (k, a, r) for all k in [j, n-1] (vacuous when j >= n), and asking
// whether component i admits (n, a, r) itself. component_bound caps the
// indices that can carry a non-empty component; pass a generous bound when
// the family is genuinely infinite (indices above the queried stage can
// never win the minimization, so the cap is exact).
OpenSetCode union_family(const OpenFamily& family, std::uint64_t component_bound);

// Splits a code into single-ball components indexed by the pair code of
// (a, r); indices that do not decode to a canonical ball give empty sets.
OpenFamily basic_decomposition(const OpenSetCode& U);

// Preimage of an open code under a continuous function table: union over
// the single-ball components (a, r) of V of the codes admitting (n, b, s)
// when (n, a, r) is in V and the table maps every coded rational of code
// <= n inside B_s(b) into B_{r-s}(a) at stage n.
OpenSetCode preimage(const ContinuousFn& f, const OpenSetCode& V);

// Height of the tent over ball (a, r) at q: max(0, min(1, r - |a - q|)).
Rational hat_value(const Rational& a, const Rational& r, const Rational& q);

// Characteristic function of an open code: stage i takes the maximum of
// 1/(i+1) and hat_value(a, r, q)/(c+1) over the admitted triples of code
// c < i that the code has kept at every stage from their own n up to i.
// Positive exactly on the coded set in the limit; each stage is positive.
ContinuousFn characteristic(const OpenSetCode& U);

// Separating function for disjoint closed codes: 0 on C0, 1 on C1, built as
// g0/(g0+g1) from the characteristics of the complements. Denominators stay
// positive at every stage.
ContinuousFn urysohn(const ClosedSetCode& c0, const ClosedSetCode& c1);

// Intersection via the product of characteristics pulled back over (0, 2).
OpenSetCode intersect(const OpenSetCode& u, const OpenSetCode& v);

// Open interval with real endpoints; nullopt means the side is unbounded.
// One-sided intervals are preimages of (0, +inf) under the staged distance
// to the endpoint; two-sided ones intersect the two rays, and inherit
// intersection's certification cost.
OpenSetCode interval(const std::optional<SlowReal>& lo, const std::optional<SlowReal>& hi);

// Code for {x : f(x) < q} relative to a closed domain C: admits (n, b, s)
// when the complement of C does, or when every coded sample of code <= n in
// B_s(b) evaluates below q - s at stage n.
OpenSetCode sublevel_open(const ContinuousFn& f, const ClosedSetCode& c, const Rational& q);

struct SubcoverResult {
    Verdict verdict;
    std::vector<std::uint64_t> indices;  // components used, ascending
};

// Finite subcover search for [0, 1]: dyadic subdivision; each subinterval
// must sit inside a ball (a, r) of pair code <= fuel that some component
// i <= fuel admits at every stage of a window [n, fuel]. Unknown when
// subdivision depth exceeds fuel.
SubcoverResult heine_borel_subcover(const std::vector<OpenSetCode>& cover, std::uint64_t fuel);

// Locally finite refinement: V_n = f_n^{-1}(0, 1/2 + delta) where the f_n
// telescope min(1/2, sum of normalized characteristics). delta defaults to
// 2^-8. Returns V_0..V_{n_max}. refinement_layer exposes f_n for audits.
ContinuousFn refinement_layer(const std::vector<OpenSetCode>& cover, std::uint64_t n);
std::vector<OpenSetCode> locally_finite_refinement(const std::vector<OpenSetCode>& cover,
                                                   std::uint64_t n_max,
                                                   const Rational& delta = make_rational(1, 256));

}  // namespace slowreal
