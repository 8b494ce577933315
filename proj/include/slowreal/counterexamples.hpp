// Reversal gadgets: named constructions that demonstrate where rate-free
// representations lose computability. Each gadget is deterministic in its
// parameters; the interesting behavior is what the fuel-bounded engines
// can NOT conclude about it. Delay schedules let tests place witnesses
// beyond any fuel, so "requires a stronger principle" becomes an
// observable Unknown.
#pragma once

#include "slowreal/combinatorics.hpp"
#include "slowreal/continuous_fn.hpp"
#include "slowreal/open_sets.hpp"
#include "slowreal/rational.hpp"
#include "slowreal/real_sequences.hpp"
#include "slowreal/slow_real.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace slowreal {

// Catalogue entry for one gadget: its registry name, the parameters it
// takes, and the failure mode it is built to exhibit.
struct GadgetDescriptor {
    std::string name;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string note;
};

std::vector<GadgetDescriptor> gadget_catalogue();

// Growing spikes: f(r)_i = max over n <= i of the hat of height 2^n and
// half-width 2^-n centered at q(n). Exact rational maxima at every stage.
// Unbounded wherever the centers accumulate, which starves both the
// extremum search and every uniform-continuity certificate.
ContinuousFn hat_function(std::function<Rational(std::uint64_t)> q);

// Sign step driven by a colouring: f(q)_i is -1 when (N+1)*q <= c(i) and
// +1 otherwise, where N is the colouring bound. h = f + identity is the
// strictly increasing variant whose bisection root tracks c(i)/(N+1), so
// root stages revise exactly when the colouring does.
struct StepGadget {
    ContinuousFn f;
    ContinuousFn h;
};

StepGadget step_gadget(const Colouring& c);

// Delayed existential witnesses: rule n -> the witness for statement n,
// if any. The stage at which a witness becomes visible is the witness
// value itself.
using WitnessRule = std::function<std::optional<std::uint64_t>(std::uint64_t)>;

// The tent map (3x, then 2-3x, then 3x-2 on thirds of [0,1], constant in
// the stage) together with the seed whose stage j reads
// (2/3) * sum of 3^-n over the statements n <= j witnessed by some m <= j.
// Iterate n decodes statement n: it lands at or above 2/3 exactly when
// statement n has a witness, and at or below 1/3 otherwise.
struct TentGadget {
    ContinuousFn f;
    SlowReal x0;
};

TentGadget tent_gadget(const WitnessRule& phi_witness);

// Iterate table for the demo: gen(n, i) applies the tent map n times to
// the stage-i seed value, exactly.
UniformRealSequence tent_iterates(const TentGadget& g);

// theta(m, n, k): the decidable matrix of the statements
// phi(k) = "some m satisfies theta(m, n, k) for every n".
using ThetaRule =
    std::function<bool(std::uint64_t m, std::uint64_t n, std::uint64_t k)>;

// Bit-summed failure counter: walks, for each k <= K, the lexicographic
// list of pairs (m, n) such that theta(m, n', k) holds below n; emits
// s_k(i) = 1 exactly when the walk leaves column m at step i. Sequence
// member i is the rational sum of s_k(i) * 2^-k over k <= min(i, K).
// Its limsup encodes the truth of every phi(k): the k-th bit dies out
// exactly when phi(k) holds.
UniformRealSequence limsup_gadget(const ThetaRule& theta, std::uint64_t K);

// Shrinking-ball families U_n = {(i, 0, 1/(k+1))} where k is the last
// index <= i at which the colouring took colour n (or 0). A ball persists
// only while its colour stays quiet, so membership anywhere but 0 is
// refuted as soon as the colour recurs, and even 0 is certified only for
// colours that go quiet inside the fuel window.
OpenFamily intersection_gadget(const Colouring& c);

}  // namespace slowreal
