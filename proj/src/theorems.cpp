#include "slowreal/theorems.hpp"

#include "slowreal/combinatorics.hpp"
#include "slowreal/tuple_code.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace slowreal {

namespace {

Rational clamp01(const Rational& q) { return clamp(q, Rational(0), Rational(1)); }

ContinuousFn fn_negate(const ContinuousFn& f) {
    return pointwise_combine(PointwiseOp::sub, fn_const(Rational(0)), f);
}

// One stage-n bisection rerun. Midpoint signs are normalized by the sign
// of the stage-n value at 0 so the walk always chases a left-negative
// crossing. Returns the trace and, when some midpoint evaluates to
// exactly zero, that midpoint.
std::pair<BisectionTrace, std::optional<Rational>> bisect_stage(
    const ContinuousFn& f, std::uint64_t n) {
    int sigma = f.at(Rational(0), n) > 0 ? -1 : 1;
    BisectionTrace trace;
    Rational a(0), b(1);
    trace.emplace_back(a, b);
    std::optional<Rational> zero;
    for (std::uint64_t i = 0; i < n; ++i) {
        Rational delta = (a + b) / 2;
        Rational v = sigma * f.at(delta, n);
        if (!zero && v == 0) zero = delta;
        if (v >= 0)
            b = delta;
        else
            a = delta;
        trace.emplace_back(a, b);
    }
    return {std::move(trace), std::move(zero)};
}

// Dyadic point i * 2^-n as an exact rational.
Rational dyadic(std::uint64_t i, std::uint64_t n) {
    return Rational(Integer(i)) / Rational(Integer(1) << n);
}

// Stage-n grid argmax (first index on ties) and the maximal value.
std::pair<Rational, Rational> grid_argmax(const ContinuousFn& f, std::uint64_t n) {
    Rational best_q(0);
    Rational best_v = f.at(Rational(0), n);
    std::uint64_t count = std::uint64_t(1) << n;
    for (std::uint64_t i = 1; i <= count; ++i) {
        Rational q = dyadic(i, n);
        Rational v = f.at(q, n);
        if (v > best_v) {
            best_v = v;
            best_q = q;
        }
    }
    return {std::move(best_q), std::move(best_v)};
}

Integer pow3_int(std::uint64_t k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(k));
    return r;
}

}  // namespace

SlowReal ivt_root(const ContinuousFn& f) {
    return SlowReal([f](std::uint64_t n) -> Rational {
        auto [trace, zero] = bisect_stage(f, n);
        return zero ? *zero : trace.back().first;
    });
}

BisectionTrace ivt_trace(const ContinuousFn& f, std::uint64_t n) {
    return bisect_stage(f, n).first;
}

ExtremumResult extremum(const ContinuousFn& f, std::uint64_t fuel) {
    std::uint64_t window = 0;
    for (std::uint64_t v = fuel; v > 1; v >>= 1) ++window;
    std::uint64_t depth = window / 2;

    auto points = std::make_shared<std::vector<Rational>>();
    auto maxima = std::make_shared<std::vector<Rational>>();
    for (std::uint64_t n = 0; n < window; ++n) {
        auto [q, v] = grid_argmax(f, n);
        points->push_back(q);
        maxima->push_back(v);
    }

    ExtremumResult res;
    res.value = SlowReal([f, maxima](std::uint64_t n) -> Rational {
        return n < maxima->size() ? (*maxima)[n] : grid_argmax(f, n).second;
    });

    std::vector<std::uint64_t> sel;
    if (window > 0) {
        sel = cauchy_subsequence(
            [points](std::uint64_t n) -> Rational {
                return (*points)[n < points->size() ? n : points->size() - 1];
            },
            depth, window);
    }
    if (sel.size() < 2) {
        res.verdict = Verdict::make_unknown(fuel);
        return res;
    }
    auto indices = std::make_shared<std::vector<std::uint64_t>>(std::move(sel));
    res.argmax = SlowReal([points, indices](std::uint64_t m) -> Rational {
        std::uint64_t i = (*indices)[m < indices->size() ? m : indices->size() - 1];
        return (*points)[i];
    });
    res.value = eval(f, *res.argmax);
    res.verdict.outcome = Outcome::holds;
    res.verdict.fuel_used = fuel;
    return res;
}

Verdict uniform_continuity_modulus(const ContinuousFn& f, std::uint64_t k,
                                   std::uint64_t fuel) {
    Rational eps = pow2(-static_cast<long>(k));
    std::vector<Rational> rs;
    for (const auto& e : rationals_up_to(fuel))
        if (e.value >= 0 && e.value <= 1) rs.push_back(e.value);

    // suffix extrema of the stage values: smin[r][N] = min over [N, fuel]
    std::size_t m = rs.size();
    std::vector<std::vector<Rational>> smin(m), smax(m);
    for (std::size_t r = 0; r < m; ++r) {
        smin[r].resize(fuel + 1);
        smax[r].resize(fuel + 1);
        smin[r][fuel] = smax[r][fuel] = f.at(rs[r], fuel);
        for (std::uint64_t i = fuel; i-- > 0;) {
            Rational v = f.at(rs[r], i);
            smin[r][i] = rat_min(v, smin[r][i + 1]);
            smax[r][i] = rat_max(v, smax[r][i + 1]);
        }
    }

    for (std::uint64_t n = 1; n <= fuel; ++n) {
        Rational gap = make_rational(1, Integer(n));
        bool ok = true;
        for (std::size_t p = 0; p < m && ok; ++p) {
            for (std::size_t q = p; q < m && ok; ++q) {
                if (rat_abs(rs[p] - rs[q]) >= gap) continue;
                if (smax[p][n] - smin[q][n] >= eps || smax[q][n] - smin[p][n] >= eps)
                    ok = false;
            }
        }
        if (ok) {
            Verdict v;
            v.outcome = Outcome::holds;
            v.fuel_used = fuel;
            v.index = n;
            return v;
        }
    }
    return Verdict::make_unknown(fuel);
}

SlowReal riemann_integral(const ContinuousFn& f) {
    return SlowReal([f](std::uint64_t n) -> Rational {
        Rational width = pow2(-static_cast<long>(n));
        Rational sum(0);
        std::uint64_t count = std::uint64_t(1) << n;
        for (std::uint64_t i = 0; i < count; ++i) sum += f.at(dyadic(i, n), n);
        return sum * width;
    });
}

ContinuousFn bernstein(const ContinuousFn& f, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("bernstein: degree must be positive");
    return ContinuousFn([f, n](const Rational& q, std::uint64_t i) -> Rational {
        Rational one_minus = Rational(1) - q;
        std::vector<Rational> op(n + 1);
        op[0] = 1;
        for (std::uint64_t j = 1; j <= n; ++j) op[j] = op[j - 1] * one_minus;

        Rational sum(0);
        Integer binom(1);
        Rational qp(1);
        for (std::uint64_t kk = 0; kk <= n; ++kk) {
            Rational node = make_rational(Integer(kk), Integer(n));
            sum += f.at(node, i) * Rational(binom) * qp * op[n - kk];
            if (kk < n) {
                binom = binom * Integer(n - kk) / Integer(kk + 1);
                qp *= q;
            }
        }
        return sum;
    });
}

std::uint64_t bernstein_degree(const Rational& bound, const Rational& delta,
                               const Rational& eps) {
    if (bound <= 0 || delta <= 0 || eps <= 0)
        throw std::invalid_argument("bernstein_degree: arguments must be positive");
    Rational threshold = bound / (delta * delta * eps);
    Integer floor = rat_floor(threshold);
    if (!floor.fits_ulong_p())
        throw std::invalid_argument("bernstein_degree: threshold out of range");
    return static_cast<std::uint64_t>(floor.get_ui()) + 1;
}

BanachResult banach_iterates(const ContinuousFn& f, const Rational& rho,
                             const SlowReal& x0) {
    if (rho < 0 || rho >= 1)
        throw std::invalid_argument("banach_iterates: rho must be in [0, 1)");
    UniformRealSequence seq(
        [f, x0](std::uint64_t n, std::uint64_t i) -> Rational {
            Rational v = clamp01(x0.at(i));
            for (std::uint64_t t = 0; t < n; ++t) v = clamp01(f.at(v, i));
            return v;
        });
    SlowReal fix = diagonal_limit(seq);
    return {std::move(seq), std::move(fix)};
}

struct LscCode::Cell {
    Table table;
    mutable std::mutex mu;
    // running minima per argument: mins[q][i] = min of table(0..i, q)
    mutable std::map<Rational, std::vector<Rational>> mins;
};

LscCode::LscCode(Table table) : cell_(std::make_shared<Cell>()) {
    if (!table) throw std::invalid_argument("LscCode: null table");
    cell_->table = std::move(table);
}

Rational LscCode::at(std::uint64_t i, const Rational& q) const {
    return cell_->table(i, q);
}

Rational LscCode::prime(std::uint64_t k, const Rational& q) const {
    std::lock_guard<std::mutex> lock(cell_->mu);
    auto& v = cell_->mins[q];
    while (v.size() <= k) {
        Rational g = cell_->table(v.size(), q);
        v.push_back(v.empty() ? g : rat_min(v.back(), g));
    }
    return v[k];
}

CaristiResult caristi_point(const ContinuousFn& f, const LscCode& g,
                            std::uint64_t fuel) {
    // candidate rationals by code, decoded once
    std::vector<Rational> decoded(fuel + 1);
    for (std::uint64_t c = 0; c <= fuel; ++c)
        decoded[c] = rational_from_code(Integer(c));

    auto trace = std::make_shared<std::vector<Rational>>();
    trace->push_back(Rational(0));
    std::uint64_t im = 0;
    Rational qm(0);
    Rational gm = g.prime(0, qm);

    CaristiResult res;
    for (std::uint64_t m = 0; m < fuel; ++m) {
        Rational radius = pow2(1 - static_cast<long>(m));
        bool found = false;
        for (std::uint64_t j = 0; j <= fuel && !found; ++j) {
            auto [d, cq] = cantor_unpair(Integer(j));
            std::uint64_t i = im + 1 + static_cast<std::uint64_t>(d.get_ui());
            const Rational& q = decoded[static_cast<std::uint64_t>(cq.get_ui())];
            if (rat_abs(q - f.at(qm, i)) >= radius) continue;
            Rational gq = g.prime(i, q);
            if (gq <= gm - rat_abs(qm - q) + radius) {
                im = i;
                qm = q;
                gm = std::move(gq);
                trace->push_back(qm);
                found = true;
            }
        }
        if (!found) {
            res.verdict = Verdict::make_unknown(fuel);
            res.trace = *trace;
            return res;
        }
    }
    res.verdict.outcome = Outcome::holds;
    res.verdict.fuel_used = fuel;
    res.trace = *trace;
    res.point = SlowReal([trace](std::uint64_t m) -> Rational {
        return (*trace)[m < trace->size() ? m : trace->size() - 1];
    });
    return res;
}

Verdict lsc_leq_query(const LscCode& g, const SlowReal& x, const SlowReal& y,
                      const SlowReal& z, std::uint64_t k, std::uint64_t fuel) {
    Rational eps = pow2(-static_cast<long>(k));
    Rational xv = x.at(fuel);
    Rational yv = y.at(fuel);
    Rational zv = z.at(fuel);

    std::vector<Rational> values;
    std::vector<Rational> primes;
    for (const auto& e : rationals_up_to(fuel)) {
        values.push_back(e.value);
        primes.push_back(g.prime(fuel, e.value));
    }

    // min of g'_fuel over the coded rationals within `radius` of `center`
    auto ball_min = [&](const Rational& center,
                        const Rational& radius) -> std::optional<Rational> {
        std::optional<Rational> best;
        for (std::size_t t = 0; t < values.size(); ++t) {
            if (rat_abs(values[t] - center) >= radius) continue;
            if (!best || primes[t] < *best) best = primes[t];
        }
        return best;
    };

    // The inner exists-n is monotone: growing n shrinks the y-ball, which
    // raises its minimum until the ball holds no coded rational at all and
    // the condition passes vacuously. So n = fuel decides it.
    std::optional<Rational> q_min = ball_min(yv, pow2(-static_cast<long>(fuel)));
    for (std::uint64_t m = 0; m <= fuel; ++m) {
        bool ok;
        if (!q_min) {
            ok = true;
        } else {
            std::optional<Rational> p_min = ball_min(xv, pow2(-static_cast<long>(m)));
            ok = p_min && *p_min <= *q_min + zv + eps;
        }
        if (!ok) {
            Verdict v;
            v.outcome = Outcome::fails;
            v.fuel_used = fuel;
            v.index = m;
            return v;
        }
    }
    Verdict v;
    v.outcome = Outcome::holds;
    v.fuel_used = fuel;
    return v;
}

ContinuousFn tietze_extend(const ContinuousFn& f, const ClosedSetCode& c,
                           std::uint64_t depth) {
    auto layers = std::make_shared<std::vector<ContinuousFn>>();
    auto bounds = std::make_shared<std::vector<Rational>>();
    ContinuousFn cur = f;
    for (std::uint64_t n = 0; n <= depth; ++n) {
        Rational level = make_rational(Integer(1) << n, pow3_int(n + 1));
        OpenSetCode u0 = sublevel_open(fn_negate(cur), c, level);
        OpenSetCode u1 = sublevel_open(cur, c, level);
        ContinuousFn g0 = characteristic(u0);
        ContinuousFn g1 = characteristic(u1);
        ContinuousFn gn = pointwise_combine(
            PointwiseOp::div, g0, pointwise_combine(PointwiseOp::add, g0, g1));
        ContinuousFn hn = pointwise_combine(
            PointwiseOp::mul, fn_const(make_rational(Integer(2) << n, pow3_int(n + 1))),
            pointwise_combine(PointwiseOp::sub, gn, fn_const(make_rational(1, 2))));
        layers->push_back(hn);
        bounds->push_back(level);
        cur = pointwise_combine(PointwiseOp::sub, cur, hn);
    }
    FnSequence tower([layers](std::uint64_t n, const Rational& q,
                              std::uint64_t i) -> Rational {
        return n < layers->size() ? (*layers)[n].at(q, i) : Rational(0);
    });
    return weighted_series(tower, [bounds](std::uint64_t n) -> Rational {
        return n < bounds->size() ? (*bounds)[n] : Rational(0);
    });
}

std::vector<Rational> cantor_level(std::uint64_t n) {
    std::vector<Rational> pts{Rational(0), make_rational(2, 3)};
    for (std::uint64_t m = 1; m <= n; ++m) {
        Rational shift = make_rational(Integer(2), pow3_int(m + 1));
        std::size_t sz = pts.size();
        for (std::size_t t = 0; t < sz; ++t) pts.push_back(pts[t] + shift);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

namespace {

// Does the open interval (lo, hi) meet a level-n middle-third point, and
// does that point branch right (last digit 1)? The interval is never wider
// than the minimal point separation, so at most one point can be inside
// and at most one subtree stays viable per level; the descent tracks the
// digit prefix sum p, whose subtree spans [p, p + 3^-m - 3^-(n+1)].
bool meets_right_branch(std::uint64_t n, const Rational& lo, const Rational& hi) {
    struct Frame {
        std::uint64_t m;
        Rational p;
        int last;
    };
    std::vector<Frame> stack{{0, Rational(0), 0}};
    Rational tail_all = make_rational(1, pow3_int(n + 1));
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        if (fr.m > n) {
            if (fr.p > lo && fr.p < hi) return fr.last == 1;
            continue;
        }
        Rational span = make_rational(1, pow3_int(fr.m)) - tail_all;
        if (fr.p >= hi || fr.p + span <= lo) continue;
        Rational step = make_rational(2, pow3_int(fr.m + 1));
        stack.push_back({fr.m + 1, fr.p, 0});
        stack.push_back({fr.m + 1, fr.p + step, 1});
    }
    return false;
}

}  // namespace

SlowReal cantor_antidiagonal(const RealFamily& xs) {
    return SlowReal([xs](std::uint64_t k) -> Rational {
        Rational y(0);
        for (std::uint64_t n = 0; n <= k; ++n) {
            std::vector<Rational> row(k + 1);
            for (std::uint64_t i = 0; i <= k; ++i) row[i] = xs(n, i);
            // i(n, k): first index from which the row wobbles by <= 3^-(n+2)
            Rational tol = make_rational(1, pow3_int(n + 2));
            std::vector<Rational> smin(row), smax(row);
            for (std::uint64_t i = k; i-- > 0;) {
                smin[i] = rat_min(smin[i], smin[i + 1]);
                smax[i] = rat_max(smax[i], smax[i + 1]);
            }
            std::uint64_t i0 = k;
            for (std::uint64_t i = 0; i <= k; ++i) {
                if (smax[i] - smin[i] <= tol) {
                    i0 = i;
                    break;
                }
            }
            const Rational& v = row[i0];
            Rational half_next = make_rational(1, 2 * pow3_int(n + 1));
            Rational half_wide = make_rational(1, 2 * pow3_int(n));
            if (!meets_right_branch(n, v - half_wide, v + half_next))
                y += make_rational(2, pow3_int(n + 1));
        }
        return y;
    });
}

BaireStage baire_stage(const OpenFamily& us, const Rational& a,
                       const Rational& r, std::uint64_t k) {
    BaireStage st;
    st.centers.push_back(a);
    st.radii.push_back(r);
    for (std::uint64_t i = 0; i < k; ++i) {
        OpenSetCode u = us(i);
        const Rational& ai = st.centers.back();
        Rational half = st.radii.back() / 2;
        for (Integer j(0);; ++j) {
            Triple t = master_triple(j);
            if (rat_abs(ai - t.a) >= half + t.r) continue;
            bool admitted = true;
            for (std::uint64_t nn = t.n; nn < k && admitted; ++nn)
                admitted = u.contains(nn, t.a, t.r);
            if (!admitted) continue;

            Rational lo = rat_max(ai - half, t.a - t.r);
            Rational hi = rat_min(ai + half, t.a + t.r);
            Rational w = hi - lo;
            Rational grid(1);
            while (grid > w / 4) grid /= 2;
            while (grid * 2 <= w / 4) grid *= 2;
            Rational c = Rational(rat_ceil((lo + grid) / grid)) * grid;

            st.picks.push_back(t);
            st.centers.push_back(c);
            st.radii.push_back(grid);
            break;
        }
    }
    return st;
}

SlowReal baire_point(const OpenFamily& us, const Rational& a, const Rational& r) {
    if (r <= 0) throw std::invalid_argument("baire_point: radius must be positive");
    return SlowReal([us, a, r](std::uint64_t k) -> Rational {
        return baire_stage(us, a, r, k).centers.back();
    });
}

}  // namespace slowreal
