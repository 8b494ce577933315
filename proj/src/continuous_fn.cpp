#include "slowreal/continuous_fn.hpp"

#include "slowreal/tuple_code.hpp"

#include <stdexcept>
#include <tuple>
#include <vector>

namespace slowreal {

ContinuousFn::ContinuousFn(Table table) : cell_(std::make_shared<Cell>()) {
    if (!table) throw std::invalid_argument("ContinuousFn: null table");
    cell_->table = std::move(table);
}

Rational ContinuousFn::at(const Rational& q, std::uint64_t i) const {
    std::pair<Rational, std::uint64_t> key(q, i);
    {
        std::lock_guard<std::mutex> lock(cell_->mu);
        auto it = cell_->memo.find(key);
        if (it != cell_->memo.end()) return it->second;
    }
    Rational v = cell_->table(q, i);  // outside the lock; tables may recurse
    std::lock_guard<std::mutex> lock(cell_->mu);
    auto [it, inserted] = cell_->memo.emplace(std::move(key), std::move(v));
    return it->second;
}

FnSequence::FnSequence(Table table) : cell_(std::make_shared<Cell>()) {
    if (!table) throw std::invalid_argument("FnSequence: null table");
    cell_->table = std::move(table);
}

Rational FnSequence::at(std::uint64_t n, const Rational& q, std::uint64_t i) const {
    std::tuple<std::uint64_t, Rational, std::uint64_t> key(n, q, i);
    {
        std::lock_guard<std::mutex> lock(cell_->mu);
        auto it = cell_->memo.find(key);
        if (it != cell_->memo.end()) return it->second;
    }
    Rational v = cell_->table(n, q, i);
    std::lock_guard<std::mutex> lock(cell_->mu);
    auto [it, inserted] = cell_->memo.emplace(std::move(key), std::move(v));
    return it->second;
}

ContinuousFn FnSequence::member(std::uint64_t n) const {
    FnSequence self = *this;
    return ContinuousFn(
        [self, n](const Rational& q, std::uint64_t i) { return self.at(n, q, i); });
}

SlowReal eval(const ContinuousFn& f, const SlowReal& x) {
    return SlowReal([f, x](std::uint64_t i) { return f.at(x.at(i), i); });
}

ContinuousFn compose(const ContinuousFn& g, const ContinuousFn& f) {
    return ContinuousFn(
        [g, f](const Rational& q, std::uint64_t i) { return g.at(f.at(q, i), i); });
}

ContinuousFn pointwise_combine(PointwiseOp op, const ContinuousFn& f,
                               const ContinuousFn& g) {
    return ContinuousFn([op, f, g](const Rational& q, std::uint64_t i) -> Rational {
        Rational a = f.at(q, i), b = g.at(q, i);
        switch (op) {
            case PointwiseOp::add: return a + b;
            case PointwiseOp::sub: return a - b;
            case PointwiseOp::mul: return a * b;
            case PointwiseOp::div: return div_or_zero(a, b);
            case PointwiseOp::max: return rat_max(a, b);
        }
        throw std::invalid_argument("pointwise_combine: unknown tag");
    });
}

ContinuousFn weighted_series(const FnSequence& fs,
                             std::function<Rational(std::uint64_t)> bounds) {
    if (!bounds) throw std::invalid_argument("weighted_series: null bounds");
    return ContinuousFn([fs, bounds](const Rational& q, std::uint64_t i) -> Rational {
        Rational sum(0);
        for (std::uint64_t n = 0; n <= i; ++n) {
            Rational b = rat_abs(bounds(n));
            sum += clamp(fs.at(n, q, i), Rational(-b), b);
        }
        return sum;
    });
}

ContinuousFn uniform_limit(const FnSequence& fs,
                           const std::optional<ContinuityModulus>&) {
    return ContinuousFn(
        [fs](const Rational& q, std::uint64_t i) { return fs.at(i, q, i); });
}

Verdict modulus_search(const ContinuousFn& f, const SlowReal& x, std::uint64_t k,
                       std::uint64_t fuel) {
    Verdict out;
    out.fuel_used = fuel;
    Rational tol = pow2(-static_cast<long>(k));
    Rational center = x.at(fuel);
    for (std::uint64_t n = 1; n <= fuel; n *= 2) {
        Rational radius = make_rational(1, static_cast<long>(n));
        // open ball: drop samples sitting exactly on the rim
        auto samples = rationals_in_range(center - radius, center + radius, fuel);
        bool ok = true;
        bool any = false;
        Rational lo(0), hi(0);
        for (const auto& s : samples) {
            if (rat_abs(s.value - center) >= radius) continue;
            for (std::uint64_t i = n; i <= fuel && ok; ++i) {
                Rational v = f.at(s.value, i);
                if (!any) {
                    lo = hi = v;
                    any = true;
                } else {
                    lo = rat_min(lo, v);
                    hi = rat_max(hi, v);
                }
                if (hi - lo > tol) ok = false;
            }
            if (!ok) break;
        }
        if (ok && n <= fuel) {
            out.outcome = Outcome::holds;
            out.index = n;
            return out;
        }
        if (n > fuel / 2) break;  // avoid overflow on the doubling ladder
    }
    out.outcome = Outcome::unknown;
    return out;
}

ContinuousFn fn_identity() {
    return ContinuousFn([](const Rational& q, std::uint64_t) { return q; });
}

ContinuousFn fn_const(const Rational& c) {
    return ContinuousFn([c](const Rational&, std::uint64_t) { return c; });
}

ContinuousFn fn_affine(const Rational& a, const Rational& b) {
    return ContinuousFn(
        [a, b](const Rational& q, std::uint64_t) -> Rational { return a * q + b; });
}

ContinuousFn fn_poly(const std::vector<Rational>& coeffs) {
    return ContinuousFn([coeffs](const Rational& q, std::uint64_t) -> Rational {
        Rational acc(0);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * q + *it;
        return acc;
    });
}

ContinuousFn fn_abs() {
    return ContinuousFn([](const Rational& q, std::uint64_t) { return rat_abs(q); });
}

}  // namespace slowreal
