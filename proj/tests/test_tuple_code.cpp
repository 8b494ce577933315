#include "slowreal/tuple_code.hpp"

#include "doctest.h"

#include <set>

using namespace slowreal;

namespace {
Integer I(long v) { return Integer(v); }
}

TEST_CASE("cantor pairing matches pinned values") {
    // frozen from an independent oracle (notes kept outside the repo)
    CHECK(cantor_pair(I(0), I(0)) == 0);
    CHECK(cantor_pair(I(2), I(1)) == 7);
    CHECK(cantor_pair(I(6), I(3)) == 48);
    CHECK(cantor_pair(I(0), I(3)) == 9);
    CHECK(cantor_pair(I(9), I(3)) == 81);
    CHECK(cantor_pair(I(35), I(7)) == 910);
    CHECK(cantor_pair(I(9), I(7)) == 143);
    CHECK(cantor_pair(I(0), I(10)) == 65);
}

TEST_CASE("pairing is a bijection on an initial segment") {
    std::set<Integer> seen;
    for (long a = 0; a < 60; ++a)
        for (long b = 0; b < 60; ++b) {
            Integer c = cantor_pair(I(a), I(b));
            auto [ra, rb] = cantor_unpair(c);
            CHECK(ra == a);
            CHECK(rb == b);
            CHECK(seen.insert(c).second);
        }
    for (long c = 0; c < 2000; ++c) {
        auto [a, b] = cantor_unpair(I(c));
        CHECK(cantor_pair(a, b) == c);
    }
}

TEST_CASE("pairing dominates both components") {
    for (long a = 0; a < 50; ++a)
        for (long b = 0; b < 50; ++b) {
            Integer c = cantor_pair(I(a), I(b));
            CHECK(c >= a);
            CHECK(c >= b);
        }
}

TEST_CASE("zigzag is the standard integer enumeration") {
    CHECK(zigzag(I(0)) == 0);
    CHECK(zigzag(I(-1)) == 1);
    CHECK(zigzag(I(1)) == 2);
    CHECK(zigzag(I(-2)) == 3);
    CHECK(zigzag(I(2)) == 4);
    for (long z = -40; z <= 40; ++z) CHECK(unzigzag(zigzag(I(z))) == z);
}

TEST_CASE("rational codes match pinned values") {
    CHECK(rational_code(Rational(0)) == 0);
    CHECK(rational_code(Rational(1)) == 3);
    CHECK(rational_code(Rational(-1)) == 1);
    CHECK(rational_code(make_rational(1, 2)) == 7);
    CHECK(rational_code(make_rational(3, 4)) == 48);
    CHECK(rational_code(Rational(2)) == 10);
    CHECK(rational_code(make_rational(1, 3)) == 12);
    CHECK(rational_code(make_rational(-5, 7)) == 126);
    CHECK(rational_code(make_rational(3, 2)) == 29);
    CHECK(rational_code(make_rational(5, 4)) == 94);
    // dyadics stay cheap: codes grow polynomially in the denominator
    CHECK(rational_code(make_rational(1, 4)) == 18);
    CHECK(rational_code(make_rational(1, 8)) == 52);
    CHECK(rational_code(make_rational(1, 16)) == 168);
}

TEST_CASE("rational decode is total and round-trips canonical codes") {
    for (long c = 0; c < 3000; ++c) {
        Rational q = rational_from_code(I(c));
        CHECK(q.get_den() > 0);
        if (code_is_canonical(I(c))) {
            CHECK(rational_code(q) == c);
        } else {
            // alias of a smaller canonical code
            CHECK(rational_code(q) < c);
        }
    }
}

TEST_CASE("triple codes match pinned values and dominate the stage") {
    CHECK(triple_code(0, Rational(0), Rational(1)) == 9);
    CHECK(triple_code(0, Rational(1), Rational(1)) == 81);
    CHECK(triple_code(0, make_rational(1, 2), make_rational(1, 2)) == 910);
    CHECK(triple_code(0, Rational(1), make_rational(1, 2)) == 143);
    CHECK(triple_code(0, Rational(0), Rational(2)) == 65);
    CHECK(triple_code(3, make_rational(-1, 3), make_rational(1, 5)) == 4975);
    for (std::uint64_t n = 0; n < 20; ++n)
        CHECK(triple_code(n, make_rational(1, 2), Rational(1)) >= n);
}

TEST_CASE("triple_from_code inverts triple_code on valid inputs only") {
    auto t = triple_from_code(I(9));
    REQUIRE(t.has_value());
    CHECK(t->n == 0);
    CHECK(t->a == 0);
    CHECK(t->r == 1);

    auto u = triple_from_code(I(4975));
    REQUIRE(u.has_value());
    CHECK(u->n == 3);
    CHECK(u->a == make_rational(-1, 3));
    CHECK(u->r == make_rational(1, 5));

    // round trip over an initial segment: decodable codes re-encode to
    // themselves and always carry a positive radius
    int decodable = 0;
    for (long c = 0; c < 2000; ++c) {
        auto v = triple_from_code(I(c));
        if (!v) continue;
        ++decodable;
        CHECK(v->r > 0);
        CHECK(triple_code(v->n, v->a, v->r) == I(c));
    }
    CHECK(decodable > 0);

    // code 0 unpairs to radius code 0, the rational 0: rejected as r <= 0
    CHECK_FALSE(triple_from_code(I(0)).has_value());
    // code 2 carries radius code 1, the rational -1: also rejected
    CHECK_FALSE(triple_from_code(I(2)).has_value());
    // code 5 carries radius code 2, which decodes non-canonically (0/2):
    // rejected rather than normalized
    CHECK_FALSE(triple_from_code(I(5)).has_value());
}

TEST_CASE("master_triple is total and eventually covers any target") {
    bool found = false;
    for (long j = 0; j < 200000 && !found; ++j) {
        Triple t = master_triple(I(j));
        CHECK(t.r > 0);
        if (t.n == 2 && t.a == make_rational(1, 2) && t.r == make_rational(1, 3))
            found = true;
    }
    CHECK(found);
}

TEST_CASE("rationals_up_to lists canonical codes sorted by value") {
    auto xs = rationals_up_to(12);
    REQUIRE(xs.size() == 9);
    // frozen enumeration: every canonical code <= 12 with its value
    const char* expect[] = {"-2", "-1", "-1/2", "-1/3", "0", "1/3", "1/2", "1", "2"};
    std::uint64_t codes[] = {6, 1, 4, 8, 0, 12, 7, 3, 10};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        CHECK(xs[i].value == parse_rational(expect[i]));
        CHECK(xs[i].code == codes[i]);
    }
}

TEST_CASE("rationals_in_range filters by interval and code bound") {
    auto xs = rationals_in_range(Rational(0), Rational(1), 12);
    REQUIRE(xs.size() == 4);
    CHECK(xs[0].value == Rational(0));
    CHECK(xs[1].value == make_rational(1, 3));
    CHECK(xs[2].value == make_rational(1, 2));
    CHECK(xs[3].value == Rational(1));
    // growing the bound only adds entries
    auto ys = rationals_in_range(Rational(0), Rational(1), 200);
    CHECK(ys.size() > xs.size());
    for (std::size_t i = 0; i + 1 < ys.size(); ++i) CHECK(ys[i].value < ys[i + 1].value);
    for (const auto& e : ys) {
        CHECK(e.code <= 200);
        CHECK(e.value >= 0);
        CHECK(e.value <= 1);
        CHECK(rational_code(e.value) == static_cast<long>(e.code));
    }
}
