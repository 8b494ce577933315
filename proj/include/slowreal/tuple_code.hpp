// Coding of tuples and rationals into naturals.
//
// The pairing is the Cantor polynomial pi(a,b) = (a+b)(a+b+1)/2 + b. It is a
// bijection N x N -> N with pi(a,b) >= a and pi(a,b) >= b; several staged
// constructions (characteristic functions, minimal-code searches) lean on
// that domination property, so it is pinned by tests.
//
// Rationals are coded as code(p/q) = pi(zigzag(p), q-1) for p/q in lowest
// terms with q > 0. Small dyadics then have codes polynomial in the
// denominator, which keeps every "rationals with code <= n" loop at desk
// scale. Triples (n, a, r) from the open-set calculus are coded as
// pi(pi(n, code(a)), code(r)), so a triple's code always dominates its
// stage component n.
#pragma once

#include "slowreal/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace slowreal {

Integer cantor_pair(const Integer& a, const Integer& b);
std::pair<Integer, Integer> cantor_unpair(const Integer& c);

// Z -> N: 0,-1,1,-2,2,... -> 0,1,2,3,4,...
Integer zigzag(const Integer& z);
Integer unzigzag(const Integer& n);

// Canonical code of a rational (lowest terms, positive denominator).
Integer rational_code(const Rational& q);

// Total decoding; normalizes, so non-canonical codes alias canonical ones.
Rational rational_from_code(const Integer& c);

// True when c is the canonical code of the rational it decodes to.
bool code_is_canonical(const Integer& c);

Integer triple_code(std::uint64_t n, const Rational& a, const Rational& r);

struct Triple {
    std::uint64_t n = 0;
    Rational a;
    Rational r;  // > 0
};

// Master enumeration of triples used by open-set code enumerators: total on
// j, covers every (n, center, positive radius) eventually.
Triple master_triple(const Integer& j);

// Inverse of triple_code on canonical codes: decodes c as
// pi(pi(n, code(a)), code(r)) and returns the triple when both component
// codes are canonical, r > 0, and n fits in 64 bits. Everything else decodes
// to nullopt, so scans over candidate codes stay total.
std::optional<Triple> triple_from_code(const Integer& c);

struct CodedRational {
    Rational value;
    std::uint64_t code = 0;  // canonical
};

// All rationals with canonical code <= bound that lie in [lo, hi], sorted by
// value. Backed by a growing global table; thread-safe.
std::vector<CodedRational> rationals_in_range(const Rational& lo,
                                              const Rational& hi,
                                              std::uint64_t code_bound);

// The single rational of canonical code c, if c is canonical and c <= bound
// grown so far; convenience for deterministic sweeps.
std::vector<CodedRational> rationals_up_to(std::uint64_t code_bound);

}  // namespace slowreal
