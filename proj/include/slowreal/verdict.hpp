// Three-valued outcomes for the semi-decidable queries (order, membership,
// modulus searches). A Holds/Fails answer is checked only on a finite stage
// window, so it is defeasible unless the inputs carry rate witnesses;
// Unknown is always a legal answer and reports the fuel it exhausted.
#pragma once

#include "slowreal/rational.hpp"
#include "slowreal/tuple_code.hpp"

#include <cstdint>
#include <optional>

namespace slowreal {

enum class Outcome { holds, fails, unknown };

// Witness for strict order: all n in [start, window_end] validated
// lhs(n) + delta < rhs(n).
struct OrderWitness {
    Rational delta;
    std::uint64_t start = 0;
};

struct Verdict {
    Outcome outcome = Outcome::unknown;
    std::uint64_t fuel_used = 0;

    // payloads; which ones are set depends on the producing query
    std::optional<OrderWitness> order;   // strict order (delta, N)
    std::optional<Triple> ball;          // open-set membership (N, a, r)
    std::optional<std::uint64_t> index;  // candidate stage/modulus N
    std::optional<Rational> value;       // candidate value (limsup and friends)

    bool holds() const { return outcome == Outcome::holds; }
    bool fails() const { return outcome == Outcome::fails; }
    bool unknown() const { return outcome == Outcome::unknown; }

    static Verdict make_unknown(std::uint64_t fuel) {
        Verdict v;
        v.outcome = Outcome::unknown;
        v.fuel_used = fuel;
        return v;
    }
};

}  // namespace slowreal
