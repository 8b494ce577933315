#include "slowreal/counterexamples.hpp"

#include "doctest.h"
#include "slowreal/open_sets.hpp"
#include "slowreal/real_sequences.hpp"
#include "slowreal/theorems.hpp"
#include "slowreal/tuple_code.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

using namespace slowreal;

namespace {

SlowReal constant(const Rational& v) {
    return SlowReal([v](std::uint64_t) -> Rational { return v; });
}

// Centers 1/2, 1/3, 1/4, ...: spike n sits at 1/(n+2), so the spikes
// accumulate at 0 and every neighbourhood of 0 sees unbounded heights.
ContinuousFn shrinking_hat() {
    return hat_function([](std::uint64_t n) -> Rational {
        return make_rational(1, static_cast<long>(n) + 2);
    });
}

const Rational kHalf = make_rational(1, 2);

}  // namespace

TEST_CASE("gadget catalogue names the five families") {
    std::vector<GadgetDescriptor> cat = gadget_catalogue();
    REQUIRE(cat.size() == 5);
    CHECK(cat[0].name == "hat");
    CHECK(cat[1].name == "step");
    CHECK(cat[2].name == "tent");
    CHECK(cat[3].name == "limsup");
    CHECK(cat[4].name == "intersection");
    for (const GadgetDescriptor& g : cat) {
        CHECK(!g.parameters.empty());
        CHECK(!g.note.empty());
    }
}

TEST_CASE("hat stages take the pointwise max of the active spikes") {
    ContinuousFn hat = shrinking_hat();
    // At 1/2 the stage-0 spike peaks at 1, then the height-2 spike at 1/3
    // reaches over with 2*(1 - 2*1/6) = 4/3 and nothing taller ever lands.
    CHECK(hat.at(kHalf, 0) == Rational(1));
    CHECK(hat.at(kHalf, 1) == make_rational(4, 3));
    CHECK(hat.at(kHalf, 4) == make_rational(4, 3));
    // At 0 only the two widest spikes contribute before the widths collapse
    // faster than the centers approach.
    CHECK(hat.at(Rational(0), 0) == kHalf);
    CHECK(hat.at(Rational(0), 1) == make_rational(2, 3));
    CHECK(hat.at(Rational(0), 3) == make_rational(2, 3));
    // At 1/4 the on-center spike gives 4, but the neighbour at 1/5 tops it.
    CHECK(hat.at(make_rational(1, 4), 0) == make_rational(3, 4));
    CHECK(hat.at(make_rational(1, 4), 1) == make_rational(5, 3));
    CHECK(hat.at(make_rational(1, 4), 2) == Rational(4));
    CHECK(hat.at(make_rational(1, 4), 3) == make_rational(24, 5));
    CHECK(hat.at(make_rational(1, 4), 5) == make_rational(24, 5));
    // 1/8 is the center of spike 6; one stage earlier the 1/7 spike grazes it.
    CHECK(hat.at(make_rational(1, 8), 5) == make_rational(96, 7));
    CHECK(hat.at(make_rational(1, 8), 6) == Rational(64));
    CHECK(hat.at(make_rational(1, 8), 7) == Rational(64));
}

TEST_CASE("hat centers carry at least their spike height") {
    ContinuousFn hat = shrinking_hat();
    for (std::uint64_t n = 0; n <= 8; ++n) {
        Rational center = make_rational(1, static_cast<long>(n) + 2);
        CHECK(hat.at(center, n) >= pow2(static_cast<long>(n)));
    }
}

TEST_CASE("hat defeats the uniform searches") {
    ContinuousFn hat = shrinking_hat();
    CHECK(uniform_continuity_modulus(hat, 2, 64).unknown());

    // A short observation window still looks stable: the grid argmax has
    // camped on the stage-8 spike near 1/10 long enough to certify.
    ExtremumResult narrow = extremum(hat, 512);
    CHECK(narrow.verdict.holds());
    REQUIRE(narrow.argmax.has_value());
    CHECK(narrow.argmax->at(8) == make_rational(13, 128));
    CHECK(narrow.value.at(8) == make_rational(768, 5));
    // Raising the fuel lengthens the window, later spikes steal the argmax,
    // and the candidate is withdrawn.
    ExtremumResult wide = extremum(hat, 4096);
    CHECK(wide.verdict.unknown());
    CHECK(!wide.argmax.has_value());
    CHECK(wide.verdict.fuel_used == 4096);
    // The fallback value still reports the stage maxima diagonal.
    CHECK(wide.value.at(8) == make_rational(768, 5));
}

TEST_CASE("hat modulus candidates at the accumulation point keep escaping") {
    ContinuousFn hat = shrinking_hat();
    SlowReal zero = constant(Rational(0));
    // Each verdict is vacuously correct for the rationals coded so far: the
    // ball B_{1/N}(0) contains no nonzero sample of small code. More fuel
    // codes a spike center inside the old ball, refutes the candidate, and
    // the ladder proposes a larger N. The index never settles because the
    // spikes accumulate at 0 with unbounded heights.
    Verdict coarse = modulus_search(hat, zero, 2, 128);
    CHECK(coarse.holds());
    REQUIRE(coarse.index.has_value());
    CHECK(*coarse.index == 16);
    Verdict finer = modulus_search(hat, zero, 2, 192);
    CHECK(finer.holds());
    REQUIRE(finer.index.has_value());
    CHECK(*finer.index == 32);
    // Away from the accumulation point the search settles honestly.
    Verdict at_half = modulus_search(hat, constant(kHalf), 2, 128);
    CHECK(at_half.holds());
}

TEST_CASE("hat rejects a null center rule") {
    CHECK_THROWS_AS(hat_function(nullptr), std::invalid_argument);
}

TEST_CASE("step gadget jumps where the colouring points") {
    Colouring col{[](std::uint64_t i) -> std::uint64_t { return i < 5 ? 3 : 1; }, 3};
    StepGadget sg = step_gadget(col);
    // scale = max_colour + 1 = 4: stage i flips sign at c(i)/4.
    CHECK(sg.f.at(kHalf, 0) == Rational(-1));
    CHECK(sg.f.at(kHalf, 6) == Rational(1));
    CHECK(sg.h.at(Rational(0), 0) == Rational(-1));
    CHECK(sg.h.at(Rational(1), 0) == Rational(2));
}

TEST_CASE("step gadget root revises when the colouring changes") {
    Colouring col{[](std::uint64_t i) -> std::uint64_t { return i < 5 ? 3 : 1; }, 3};
    SlowReal root = ivt_root(step_gadget(col).h);
    CHECK(root.at(1) == kHalf);
    CHECK(root.at(2) == make_rational(3, 4));
    CHECK(root.at(4) == make_rational(3, 4));
    CHECK(root.at(5) == make_rational(1, 4));
    CHECK(root.at(10) == make_rational(1, 4));
    CHECK(root.at(16) == make_rational(1, 4));
    // |root_4 - root_5| = 1/2 exceeds 2^-4 + 2^-5, so no real with the
    // standard modulus runs through both stages: the root was revised.
    CHECK(rat_abs(root.at(4) - root.at(5)) > make_rational(3, 32));
}

TEST_CASE("step gadget root is steady under a constant colouring") {
    Colouring col{[](std::uint64_t) -> std::uint64_t { return 1; }, 3};
    SlowReal root = ivt_root(step_gadget(col).h);
    CHECK(root.at(2) == make_rational(1, 4));
    CHECK(root.at(5) == make_rational(1, 4));
    CHECK(root.at(12) == make_rational(1, 4));
}

TEST_CASE("step gadget rejects a null colouring") {
    CHECK_THROWS_AS(step_gadget(Colouring{nullptr, 3}), std::invalid_argument);
}

TEST_CASE("tent seed sums the witnessed digits") {
    TentGadget g = tent_gadget([](std::uint64_t n) -> std::optional<std::uint64_t> {
        if (n == 0) return 0;
        return std::nullopt;
    });
    CHECK(g.x0.at(0) == make_rational(2, 3));
    CHECK(g.x0.at(5) == make_rational(2, 3));
    UniformRealSequence it = tent_iterates(g);
    // 2/3 maps to 3*(2/3) - 2 = 0 and stays there.
    CHECK(member(it, 1).at(0) == Rational(0));
    CHECK(member(it, 1).at(4) == Rational(0));
    CHECK(member(it, 2).at(4) == Rational(0));
}

TEST_CASE("tent iterate crosses 2/3 only after its witness appears") {
    TentGadget g = tent_gadget([](std::uint64_t n) -> std::optional<std::uint64_t> {
        if (n == 1) return 6;
        return std::nullopt;
    });
    UniformRealSequence it = tent_iterates(g);
    // Before stage 6 every iterate is identically 0: a finite-fuel observer
    // cannot tell this instance from the empty one.
    for (std::uint64_t j : {std::uint64_t(0), std::uint64_t(5)}) {
        CHECK(g.x0.at(j) == Rational(0));
        CHECK(member(it, 1).at(j) == Rational(0));
        CHECK(member(it, 2).at(j) == Rational(0));
    }
    // From stage 6 the seed becomes 2/9 and iterate 1 lands on 2/3 exactly.
    CHECK(g.x0.at(6) == make_rational(2, 9));
    CHECK(member(it, 1).at(6) == make_rational(2, 3));
    CHECK(member(it, 2).at(6) == Rational(0));
    CHECK(member(it, 1).at(8) == make_rational(2, 3));
}

TEST_CASE("tent iterates decode a finite witness set") {
    TentGadget g = tent_gadget([](std::uint64_t n) -> std::optional<std::uint64_t> {
        if (n == 0 || n == 2) return 0;
        return std::nullopt;
    });
    UniformRealSequence it = tent_iterates(g);
    CHECK(g.x0.at(9) == make_rational(20, 27));
    CHECK(member(it, 1).at(9) == make_rational(2, 9));
    CHECK(member(it, 2).at(9) == make_rational(2, 3));
    CHECK(member(it, 3).at(9) == Rational(0));
    // Membership in the set is exactly "iterate n reaches 2/3".
    for (std::uint64_t n = 0; n <= 3; ++n) {
        bool in_set = (n == 0 || n == 2);
        CHECK((member(it, n).at(9) >= make_rational(2, 3)) == in_set);
    }
}

TEST_CASE("tent gadget rejects a null witness rule") {
    CHECK_THROWS_AS(tent_gadget(nullptr), std::invalid_argument);
}

TEST_CASE("limsup walk emits a switch bit per level") {
    UniformRealSequence always = limsup_gadget(
        [](std::uint64_t, std::uint64_t, std::uint64_t) { return true; }, 3);
    for (std::uint64_t n : {std::uint64_t(0), std::uint64_t(3), std::uint64_t(7)})
        CHECK(member(always, n).at(0) == Rational(0));

    // theta false everywhere: every step is a switch, so x_n fills in all
    // the bits up to level min(n, K).
    UniformRealSequence never = limsup_gadget(
        [](std::uint64_t, std::uint64_t, std::uint64_t) { return false; }, 3);
    CHECK(member(never, 0).at(0) == Rational(1));
    CHECK(member(never, 1).at(0) == make_rational(3, 2));
    CHECK(member(never, 2).at(0) == make_rational(7, 4));
    CHECK(member(never, 3).at(0) == make_rational(15, 8));
    CHECK(member(never, 7).at(0) == make_rational(15, 8));
}

TEST_CASE("limsup walk switches at the triangular stages for theta = [n < m]") {
    UniformRealSequence s = limsup_gadget(
        [](std::uint64_t m, std::uint64_t n, std::uint64_t) { return n < m; }, 3);
    // The walk spends m+1 steps in column m, so the switches land at
    // 0, 2, 5, 9, 14, ... and every level switches simultaneously.
    std::vector<Rational> expected = {
        Rational(1),          Rational(0), make_rational(7, 4),  Rational(0),
        Rational(0),          make_rational(15, 8), Rational(0), Rational(0),
        Rational(0),          make_rational(15, 8), Rational(0), Rational(0),
        Rational(0),          Rational(0), make_rational(15, 8)};
    for (std::uint64_t n = 0; n < expected.size(); ++n)
        CHECK(member(s, n).at(0) == expected[n]);
}

TEST_CASE("limsup approximation decodes one bit per level") {
    // Odd levels walk theta = [n < m] (switch infinitely often); even levels
    // leave column 0 once and then settle. The recurring pattern is
    // 1/2 + 1/8 = 5/8.
    ThetaRule mixed = [](std::uint64_t m, std::uint64_t n, std::uint64_t k) {
        if (k % 2 == 1) return n < m;
        return m != 0;
    };
    UniformRealSequence s = limsup_gadget(mixed, 3);
    CHECK(member(s, 0).at(0) == Rational(1));
    CHECK(member(s, 2).at(0) == kHalf);
    CHECK(member(s, 5).at(0) == make_rational(5, 8));
    CHECK(member(s, 9).at(0) == make_rational(5, 8));

    Verdict v = limsup_approx(s, Rational(2), make_rational(1, 16), 64);
    REQUIRE(v.holds());
    REQUIRE(v.value.has_value());
    CHECK(*v.value == make_rational(21, 32));
    // The payload pins the recurring level set: exactly one subset of
    // {1, 1/2, 1/4, 1/8} sums to within 1/16 of it, and it is {1/2, 1/8}.
    int hits = 0;
    std::uint64_t decoded = 0;
    for (std::uint64_t bits = 0; bits < 16; ++bits) {
        Rational sum(0);
        for (int k = 0; k < 4; ++k)
            if (bits & (1u << k)) sum += pow2(-k);
        if (rat_abs(*v.value - sum) <= make_rational(1, 16)) {
            ++hits;
            decoded = bits;
        }
    }
    CHECK(hits == 1);
    CHECK(decoded == 0b1010);

    UniformRealSequence never = limsup_gadget(
        [](std::uint64_t, std::uint64_t, std::uint64_t) { return false; }, 3);
    Verdict full = limsup_approx(never, Rational(2), make_rational(1, 16), 64);
    REQUIRE(full.holds());
    CHECK(*full.value == make_rational(61, 32));
}

TEST_CASE("limsup gadget rejects a null theta") {
    CHECK_THROWS_AS(limsup_gadget(nullptr, 3), std::invalid_argument);
}

TEST_CASE("intersection gadget certifies only the quiescent colours") {
    // Colour 0 last occurs at index 1, colour 1 at index 3, colour 2 recurs
    // forever. The only ball U_n admits at stage i is centered at 0 with
    // radius 1/(k+1) for k the last occurrence seen so far, so U_0 and U_1
    // eventually freeze their ball while U_2 keeps shrinking it.
    Colouring col{[](std::uint64_t j) -> std::uint64_t {
                      return j < 2 ? 0 : j < 4 ? 1 : 2;
                  },
                  2};
    OpenFamily fam = intersection_gadget(col);
    SlowReal zero = constant(Rational(0));

    CHECK(member(fam(0), zero, 16).unknown());
    Verdict u0 = member(fam(0), zero, 64);
    REQUIRE(u0.holds());
    REQUIRE(u0.ball.has_value());
    CHECK(u0.ball->n == 1);
    CHECK(u0.ball->a == Rational(0));
    CHECK(u0.ball->r == kHalf);
    CHECK(triple_code(u0.ball->n, u0.ball->a, u0.ball->r) == Integer(43));

    CHECK(member(fam(1), zero, 64).unknown());
    Verdict u1 = member(fam(1), zero, 200);
    REQUIRE(u1.holds());
    REQUIRE(u1.ball.has_value());
    CHECK(u1.ball->n == 3);
    CHECK(u1.ball->r == make_rational(1, 4));
    CHECK(triple_code(u1.ball->n, u1.ball->a, u1.ball->r) == Integer(318));

    // 0 sits in U_2 at every stage via the current ball, but no single ball
    // persists, so membership never certifies.
    for (std::uint64_t i : {std::uint64_t(4), std::uint64_t(9), std::uint64_t(40)})
        CHECK(fam(2).contains(i, Rational(0), Rational(1) / Rational(Integer(i + 1))));
    CHECK(member(fam(2), zero, 400).unknown());

    // Points other than 0 are never inside any admitted ball long enough.
    CHECK(member(fam(0), constant(kHalf), 400).unknown());
}

TEST_CASE("intersection gadget rejects a null colouring") {
    CHECK_THROWS_AS(intersection_gadget(Colouring{nullptr, 2}), std::invalid_argument);
}
