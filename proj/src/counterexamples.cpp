#include "slowreal/counterexamples.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace slowreal {

namespace {

// One tent-map step, exact on the three rational pieces.
Rational tent_step(const Rational& x) {
    if (x <= make_rational(1, 3)) return 3 * x;
    if (x < make_rational(2, 3)) return 2 - 3 * x;
    return 3 * x - 2;
}

}  // namespace

std::vector<GadgetDescriptor> gadget_catalogue() {
    return {
        {"hat",
         {{"centers", "rule n -> rational in [0,1]"}},
         "unbounded spikes: extremum and modulus searches stay Unknown"},
        {"step",
         {{"colouring", "rule n -> colour <= N"}, {"colours", "N"}},
         "bisection root revises whenever the colouring changes"},
        {"tent",
         {{"witnesses", "rule n -> optional delay"}},
         "iterate n crosses 2/3 only after the witness for n appears"},
        {"limsup",
         {{"theta", "rule (m,n,k) -> bit"}, {"levels", "K"}},
         "limsup approximation at 2^-(K+1) decides K+1 statements at once"},
        {"intersection",
         {{"colouring", "rule n -> colour"}},
         "ball persistence dies with each recurrence of the colour"},
    };
}

ContinuousFn hat_function(std::function<Rational(std::uint64_t)> q) {
    if (!q) throw std::invalid_argument("hat_function: null center rule");
    return ContinuousFn([q](const Rational& r, std::uint64_t i) -> Rational {
        Rational best(0);
        for (std::uint64_t n = 0; n <= i; ++n) {
            Rational height = pow2(static_cast<long>(n));
            Rational hat = height * (1 - height * rat_abs(q(n) - r));
            if (hat > best) best = hat;
        }
        return best;
    });
}

StepGadget step_gadget(const Colouring& c) {
    if (!c.colour) throw std::invalid_argument("step_gadget: null colouring");
    Rational scale(Integer(c.max_colour + 1));
    ContinuousFn f([c, scale](const Rational& q, std::uint64_t i) -> Rational {
        return scale * q <= Rational(Integer(c.colour(i))) ? Rational(-1)
                                                           : Rational(1);
    });
    ContinuousFn h = pointwise_combine(PointwiseOp::add, f, fn_identity());
    return {std::move(f), std::move(h)};
}

TentGadget tent_gadget(const WitnessRule& phi_witness) {
    if (!phi_witness) throw std::invalid_argument("tent_gadget: null witness rule");
    ContinuousFn f([](const Rational& x, std::uint64_t) -> Rational {
        return tent_step(x);
    });
    SlowReal x0([phi_witness](std::uint64_t j) -> Rational {
        Rational sum(0);
        for (std::uint64_t n = 0; n <= j; ++n) {
            std::optional<std::uint64_t> m = phi_witness(n);
            if (m && *m <= j) sum += Rational(1) / pow3(n).get_num();
        }
        return make_rational(2, 3) * sum;
    });
    return {std::move(f), std::move(x0)};
}

UniformRealSequence tent_iterates(const TentGadget& g) {
    SlowReal x0 = g.x0;
    return UniformRealSequence(
        [x0](std::uint64_t n, std::uint64_t i) -> Rational {
            Rational v = x0.at(i);
            for (std::uint64_t t = 0; t < n; ++t) v = tent_step(v);
            return v;
        });
}

namespace {

// Lexicographic walk through the pairs (m, n) with theta(m, n', k) below n:
// from (m, n) the walk steps to (m, n+1) while theta holds and to (m+1, 0)
// when it breaks. Memoized per level k.
struct LimsupWalk {
    ThetaRule theta;
    std::mutex mu;
    std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, std::uint64_t>>>
        columns;

    // first components of walk entries i and i+1 differ?
    bool switched_at(std::uint64_t k, std::uint64_t i) {
        std::scoped_lock lock(mu);
        auto& walk = columns[k];
        if (walk.empty()) walk.push_back({0, 0});
        while (walk.size() <= i + 1) {
            auto [m, n] = walk.back();
            if (theta(m, n, k))
                walk.push_back({m, n + 1});
            else
                walk.push_back({m + 1, 0});
        }
        return walk[i].first != walk[i + 1].first;
    }
};

}  // namespace

UniformRealSequence limsup_gadget(const ThetaRule& theta, std::uint64_t K) {
    if (!theta) throw std::invalid_argument("limsup_gadget: null theta");
    auto walk = std::make_shared<LimsupWalk>();
    walk->theta = theta;
    return UniformRealSequence(
        [walk, K](std::uint64_t n, std::uint64_t) -> Rational {
            Rational sum(0);
            std::uint64_t top = n < K ? n : K;
            for (std::uint64_t k = 0; k <= top; ++k) {
                if (walk->switched_at(k, n))
                    sum += pow2(-static_cast<long>(k));
            }
            return sum;
        });
}

OpenFamily intersection_gadget(const Colouring& c) {
    if (!c.colour) throw std::invalid_argument("intersection_gadget: null colouring");
    auto colour = c.colour;
    return [colour](std::uint64_t n) {
        return OpenSetCode(
            [colour, n](std::uint64_t i, const Rational& a, const Rational& r) {
                if (a != 0) return false;
                std::uint64_t k = 0;
                for (std::uint64_t j = 1; j <= i; ++j)
                    if (colour(j) == n) k = j;
                return r == Rational(1) / Rational(Integer(k + 1));
            });
    };
}

}  // namespace slowreal
