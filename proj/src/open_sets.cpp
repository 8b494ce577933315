#include "slowreal/open_sets.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace slowreal {

namespace {

// Cantor pair on machine words; fuels stay far below the overflow range.
std::uint64_t pair_key(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s * (s + 1) / 2 + b;
}

struct DecodedPair {
    std::uint64_t code = 0;
    Rational a;
    Rational r;  // > 0
};

// Growing table of pair codes that decode to a canonical ball (a, r > 0).
// Returned by value: a contains callback may reenter and grow the table, so
// references into it would not be stable.
std::vector<DecodedPair> coded_pairs_up_to(std::uint64_t bound) {
    struct State {
        std::mutex mu;
        std::uint64_t scanned_to = 0;  // codes [0, scanned_to) decoded
        std::vector<DecodedPair> valid;
    };
    static State s;
    std::scoped_lock lock(s.mu);
    while (s.scanned_to <= bound) {
        std::uint64_t c = s.scanned_to++;
        auto [ca, cr] = cantor_unpair(Integer(static_cast<unsigned long>(c)));
        if (!code_is_canonical(ca) || !code_is_canonical(cr)) continue;
        Rational r = rational_from_code(cr);
        if (r <= 0) continue;
        s.valid.push_back({c, rational_from_code(ca), r});
    }
    return s.valid;
}

// Growing table of triple codes that decode to a canonical (n, a, r > 0);
// returns the valid codes in [from, to).
std::vector<std::pair<std::uint64_t, Triple>> coded_triples_in(std::uint64_t from,
                                                               std::uint64_t to) {
    struct State {
        std::mutex mu;
        std::uint64_t scanned_to = 0;
        std::vector<std::pair<std::uint64_t, Triple>> valid;
    };
    static State s;
    std::scoped_lock lock(s.mu);
    while (s.scanned_to < to) {
        std::uint64_t c = s.scanned_to++;
        auto t = triple_from_code(Integer(static_cast<unsigned long>(c)));
        if (t) s.valid.push_back({c, *t});
    }
    auto lo = std::lower_bound(s.valid.begin(), s.valid.end(), from,
                               [](const auto& e, std::uint64_t v) { return e.first < v; });
    auto hi = std::lower_bound(lo, s.valid.end(), to,
                               [](const auto& e, std::uint64_t v) { return e.first < v; });
    return {lo, hi};
}

struct RationalPairLess {
    bool operator()(const std::pair<Rational, Rational>& x,
                    const std::pair<Rational, Rational>& y) const {
        int c = mpq_cmp(x.first.get_mpq_t(), y.first.get_mpq_t());
        if (c != 0) return c < 0;
        return mpq_cmp(x.second.get_mpq_t(), y.second.get_mpq_t()) < 0;
    }
};

// ---- union of a countable family ----------------------------------------
//
// Admission of (n, a, r) follows the least Cantor-coded pair (i, j) such
// that component i admits (k, a, r) for every k in [j, n-1]. For fixed i the
// least valid j is one past the component's last failure below n, so the
// minimizing pair is argmin_i pair_key(i, last_fail_i + 1). Components with
// index > n can never win (pair_key(i, 0) > pair_key(0, n) there), which
// keeps the scan finite for genuinely countable families.

struct CompTrack {
    std::uint64_t checked_to = 0;   // positions [0, checked_to) evaluated
    std::int64_t last_fail = -1;    // largest failing position seen, or -1
};

struct BallState {
    std::vector<char> result;       // admission by stage, computed contiguously
    std::vector<CompTrack> comps;
};

struct UnionState {
    std::mutex mu;
    OpenFamily family;
    std::uint64_t component_bound = 0;
    std::vector<std::optional<OpenSetCode>> comp_cache;
    std::map<std::pair<Rational, Rational>, BallState, RationalPairLess> balls;

    const OpenSetCode& component(std::uint64_t i) {
        if (comp_cache.size() <= i) comp_cache.resize(i + 1);
        if (!comp_cache[i]) comp_cache[i] = family(i);
        return *comp_cache[i];
    }

    bool admits(std::uint64_t n, const Rational& a, const Rational& r) {
        std::scoped_lock lock(mu);
        auto& bs = balls[{a, r}];
        while (bs.result.size() <= n) {
            std::uint64_t m = bs.result.size();
            std::uint64_t ilim = std::min<std::uint64_t>(component_bound, m + 1);
            if (ilim == 0) ilim = 1;
            if (bs.comps.size() < ilim) bs.comps.resize(ilim);
            std::uint64_t best_key = std::numeric_limits<std::uint64_t>::max();
            std::uint64_t best_i = 0;
            for (std::uint64_t i = 0; i < ilim; ++i) {
                auto& ct = bs.comps[i];
                const OpenSetCode& comp = component(i);
                while (ct.checked_to < m) {
                    if (!comp.contains(ct.checked_to, a, r))
                        ct.last_fail = static_cast<std::int64_t>(ct.checked_to);
                    ++ct.checked_to;
                }
                std::uint64_t j = static_cast<std::uint64_t>(ct.last_fail + 1);
                std::uint64_t key = pair_key(i, j);
                if (key < best_key) {
                    best_key = key;
                    best_i = i;
                }
            }
            bs.result.push_back(component(best_i).contains(m, a, r) ? 1 : 0);
        }
        return bs.result[n] != 0;
    }
};

// ---- characteristic ------------------------------------------------------

struct CharEntry {
    std::uint64_t code = 0;
    Triple t;
    std::uint64_t checked_to = 0;                 // contains true on [t.n, checked_to)
    std::optional<std::uint64_t> fail_at;
};

struct CharState {
    std::mutex mu;
    OpenSetCode::Contains contains;
    std::uint64_t scanned_to = 0;
    std::vector<CharEntry> entries;  // valid triple codes, ascending

    // kept at every stage in [t.n, i)?
    bool persists(CharEntry& e, std::uint64_t i) {
        while (!e.fail_at && e.checked_to < i) {
            if (contains(e.checked_to, e.t.a, e.t.r))
                ++e.checked_to;
            else
                e.fail_at = e.checked_to;
        }
        return !e.fail_at || *e.fail_at >= i;
    }

    Rational value_at(const Rational& q, std::uint64_t i) {
        std::scoped_lock lock(mu);
        if (scanned_to < i) {
            for (const auto& [c, t] : coded_triples_in(scanned_to, i)) {
                CharEntry e;
                e.code = c;
                e.t = t;
                e.checked_to = t.n;
                entries.push_back(e);
            }
            scanned_to = i;
        }
        Rational best = make_rational(1, Integer(static_cast<unsigned long>(i)) + 1);
        for (auto& e : entries) {
            if (e.code >= i) break;
            Rational cap = make_rational(1, Integer(static_cast<unsigned long>(e.code)) + 1);
            if (cap <= best) break;  // entries ascend in code, caps only shrink
            Rational h = hat_value(e.t.a, e.t.r, q);
            if (h == 0) continue;
            Rational w = h * cap;
            if (w <= best) continue;
            if (persists(e, i)) best = w;
        }
        return best;
    }
};

OpenSetCode make_code(OpenSetCode::Contains contains,
                      std::optional<std::uint64_t> family_bound) {
    OpenSetCode u;
    u.contains = std::move(contains);
    u.family_bound = family_bound;
    return u;
}

}  // namespace

std::vector<std::pair<std::uint64_t, Triple>> OpenSetCode::triples_up_to(
    std::uint64_t code_bound) const {
    std::vector<std::pair<std::uint64_t, Triple>> out;
    for (const auto& [c, t] : coded_triples_in(0, code_bound + 1))
        if (contains(t.n, t.a, t.r)) out.push_back({c, t});
    return out;
}

OpenSetCode empty_set() {
    return make_code([](std::uint64_t, const Rational&, const Rational&) { return false; }, 0);
}

OpenSetCode full_line() {
    return make_code([](std::uint64_t, const Rational&, const Rational&) { return true; },
                     std::nullopt);
}

OpenSetCode from_balls(const std::vector<std::pair<Rational, Rational>>& balls) {
    std::optional<std::uint64_t> bound = 0;
    for (const auto& [a, r] : balls) {
        if (r <= 0) throw std::invalid_argument("from_balls: radius must be positive");
        Integer pc = cantor_pair(rational_code(a), rational_code(r));
        if (bound && pc.fits_ulong_p())
            bound = std::max<std::uint64_t>(*bound, pc.get_ui());
        else
            bound = std::nullopt;
    }
    auto shared = std::make_shared<std::vector<std::pair<Rational, Rational>>>(balls);
    return make_code(
        [shared](std::uint64_t, const Rational& a, const Rational& r) {
            for (const auto& [ba, br] : *shared)
                if (a == ba && r == br) return true;
            return false;
        },
        bound);
}

OpenSetCode ray_above(const Rational& q) {
    Rational lo = q;
    return make_code(
        [lo](std::uint64_t, const Rational& a, const Rational& r) {
            Rational edge = a - r;
            return edge >= lo;
        },
        std::nullopt);
}

OpenSetCode ray_below(const Rational& q) {
    Rational hi = q;
    return make_code(
        [hi](std::uint64_t, const Rational& a, const Rational& r) {
            Rational edge = a + r;
            return edge <= hi;
        },
        std::nullopt);
}

Verdict member(const OpenSetCode& U, const SlowReal& x, std::uint64_t fuel) {
    for (const auto& cand : coded_pairs_up_to(fuel)) {
        if (cand.code > fuel) break;
        // cheap rejects first: last stage inside the ball, then last stage
        // admitted, then the full suffix scans.
        if (rat_abs(x.at(fuel) - cand.a) >= cand.r) continue;
        if (!U.contains(fuel, cand.a, cand.r)) continue;
        std::uint64_t geo_n = 0;
        for (std::uint64_t n = fuel; n-- > 0;) {
            if (rat_abs(x.at(n) - cand.a) >= cand.r) {
                geo_n = n + 1;
                break;
            }
        }
        std::uint64_t con_n = 0;
        for (std::uint64_t n = fuel; n-- > 0;) {
            if (!U.contains(n, cand.a, cand.r)) {
                con_n = n + 1;
                break;
            }
        }
        Verdict v;
        v.outcome = Outcome::holds;
        v.fuel_used = fuel;
        std::uint64_t start = std::max(geo_n, con_n);
        v.ball = Triple{start, cand.a, cand.r};
        v.index = start;
        return v;
    }
    return Verdict::make_unknown(fuel);
}

OpenSetCode union_family(const OpenFamily& family, std::uint64_t component_bound) {
    auto state = std::make_shared<UnionState>();
    state->family = family;
    state->component_bound = component_bound;
    return make_code(
        [state](std::uint64_t n, const Rational& a, const Rational& r) {
            return state->admits(n, a, r);
        },
        std::nullopt);
}

OpenSetCode union_sets(const std::vector<OpenSetCode>& components) {
    auto shared = std::make_shared<std::vector<OpenSetCode>>(components);
    auto fam = [shared](std::uint64_t i) {
        return i < shared->size() ? (*shared)[i] : empty_set();
    };
    OpenSetCode u = union_family(fam, shared->size());
    std::optional<std::uint64_t> bound = 0;
    for (const auto& c : *shared) {
        if (!c.family_bound) {
            bound = std::nullopt;
            break;
        }
        bound = std::max(*bound, *c.family_bound);
    }
    u.family_bound = bound;
    return u;
}

OpenFamily basic_decomposition(const OpenSetCode& U) {
    auto contains = U.contains;
    return [contains](std::uint64_t i) {
        auto [ca, cr] = cantor_unpair(Integer(static_cast<unsigned long>(i)));
        if (!code_is_canonical(ca) || !code_is_canonical(cr)) return empty_set();
        Rational r = rational_from_code(cr);
        if (r <= 0) return empty_set();
        Rational a = rational_from_code(ca);
        OpenSetCode comp = make_code(
            [contains, a, r](std::uint64_t n, const Rational& b, const Rational& s) {
                return b == a && s == r && contains(n, a, r);
            },
            i);
        return comp;
    };
}

OpenSetCode preimage(const ContinuousFn& f, const OpenSetCode& V) {
    OpenFamily decomp = basic_decomposition(V);
    auto vcontains = V.contains;
    OpenFamily fam = [decomp, vcontains, f](std::uint64_t i) {
        auto [ca, cr] = cantor_unpair(Integer(static_cast<unsigned long>(i)));
        if (!code_is_canonical(ca) || !code_is_canonical(cr)) return empty_set();
        Rational r = rational_from_code(cr);
        if (r <= 0) return empty_set();
        Rational a = rational_from_code(ca);
        return make_code(
            [vcontains, f, a, r](std::uint64_t n, const Rational& b, const Rational& s) {
                if (!vcontains(n, a, r)) return false;
                Rational margin = r - s;
                for (const auto& sample : rationals_in_range(b - s, b + s, n)) {
                    if (rat_abs(sample.value - b) >= s) continue;  // open ball
                    if (margin <= 0) return false;
                    if (rat_abs(f.at(sample.value, n) - a) >= margin) return false;
                }
                return true;
            },
            std::nullopt);
    };
    std::uint64_t bound = V.family_bound ? *V.family_bound + 1
                                         : std::numeric_limits<std::uint64_t>::max();
    OpenSetCode u = union_family(fam, bound);
    u.family_bound = std::nullopt;
    return u;
}

Rational hat_value(const Rational& a, const Rational& r, const Rational& q) {
    Rational h = r - rat_abs(a - q);
    return rat_max(Rational(0), rat_min(Rational(1), h));
}

ContinuousFn characteristic(const OpenSetCode& U) {
    auto state = std::make_shared<CharState>();
    state->contains = U.contains;
    return ContinuousFn([state](const Rational& q, std::uint64_t i) -> Rational {
        return state->value_at(q, i);
    });
}

ContinuousFn urysohn(const ClosedSetCode& c0, const ClosedSetCode& c1) {
    ContinuousFn g0 = characteristic(c0.complement);
    ContinuousFn g1 = characteristic(c1.complement);
    return pointwise_combine(PointwiseOp::div, g0,
                             pointwise_combine(PointwiseOp::add, g0, g1));
}

OpenSetCode intersect(const OpenSetCode& u, const OpenSetCode& v) {
    ContinuousFn product =
        pointwise_combine(PointwiseOp::mul, characteristic(u), characteristic(v));
    return preimage(product, from_balls({{Rational(1), Rational(1)}}));
}

OpenSetCode interval(const std::optional<SlowReal>& lo, const std::optional<SlowReal>& hi) {
    if (!lo && !hi) return full_line();
    if (lo && hi)
        return intersect(interval(lo, std::nullopt), interval(std::nullopt, hi));
    if (lo) {
        SlowReal x = *lo;
        ContinuousFn dist([x](const Rational& q, std::uint64_t n) -> Rational {
            Rational edge = x.at(n);
            Rational d = q - edge;
            return q > edge ? d : Rational(0);
        });
        return preimage(dist, ray_above(Rational(0)));
    }
    SlowReal y = *hi;
    ContinuousFn dist([y](const Rational& q, std::uint64_t n) -> Rational {
        Rational edge = y.at(n);
        Rational d = edge - q;
        return q < edge ? d : Rational(0);
    });
    return preimage(dist, ray_above(Rational(0)));
}

OpenSetCode sublevel_open(const ContinuousFn& f, const ClosedSetCode& c, const Rational& q) {
    auto ccontains = c.complement.contains;
    Rational level = q;
    return make_code(
        [ccontains, f, level](std::uint64_t n, const Rational& b, const Rational& s) {
            if (ccontains(n, b, s)) return true;
            Rational margin = level - s;
            for (const auto& sample : rationals_in_range(b - s, b + s, n)) {
                if (rat_abs(sample.value - b) >= s) continue;
                if (f.at(sample.value, n) >= margin) return false;
            }
            return true;
        },
        std::nullopt);
}

SubcoverResult heine_borel_subcover(const std::vector<OpenSetCode>& cover,
                                    std::uint64_t fuel) {
    SubcoverResult res;
    res.verdict.fuel_used = fuel;
    std::set<std::uint64_t> used;
    // active(i, c): component i admits the decoded triple of c at every stage
    // of [n, fuel]
    std::map<std::pair<std::uint64_t, std::uint64_t>, bool> active_memo;
    auto active = [&](std::uint64_t i, std::uint64_t c, const Triple& t) {
        auto key = std::make_pair(i, c);
        auto it = active_memo.find(key);
        if (it != active_memo.end()) return it->second;
        bool ok = true;
        for (std::uint64_t n = t.n; n <= fuel; ++n) {
            if (!cover[i].contains(n, t.a, t.r)) {
                ok = false;
                break;
            }
        }
        active_memo[key] = ok;
        return ok;
    };
    const auto triples = coded_triples_in(0, fuel + 1);
    std::uint64_t comp_limit = std::min<std::uint64_t>(cover.size(), fuel + 1);

    struct Piece {
        std::uint64_t depth;
        Integer k;
    };
    std::vector<Piece> work{{0, Integer(0)}};
    while (!work.empty()) {
        Piece p = work.back();
        work.pop_back();
        Rational den = pow2(static_cast<long>(p.depth));
        Rational lo = Rational(p.k) / den;
        Rational hi = Rational(p.k + 1) / den;
        bool covered = false;
        for (const auto& [c, t] : triples) {
            if (c > fuel) break;
            if (!(t.a - t.r < lo && hi < t.a + t.r)) continue;
            for (std::uint64_t i = 0; i < comp_limit; ++i) {
                if (active(i, c, t)) {
                    used.insert(i);
                    covered = true;
                    break;
                }
            }
            if (covered) break;
        }
        if (covered) continue;
        if (p.depth >= fuel) return {Verdict::make_unknown(fuel), {}};
        work.push_back({p.depth + 1, p.k * 2});
        work.push_back({p.depth + 1, p.k * 2 + 1});
    }
    res.verdict.outcome = Outcome::holds;
    res.indices.assign(used.begin(), used.end());
    return res;
}

ContinuousFn refinement_layer(const std::vector<OpenSetCode>& cover, std::uint64_t n) {
    auto chars = std::make_shared<std::vector<ContinuousFn>>();
    for (const auto& u : cover) chars->push_back(characteristic(u));
    auto empty_char = std::make_shared<ContinuousFn>(characteristic(empty_set()));
    FnSequence tower([chars, empty_char](std::uint64_t m, const Rational& q,
                                         std::uint64_t i) -> Rational {
        return m < chars->size() ? (*chars)[m].at(q, i) : empty_char->at(q, i);
    });
    ContinuousFn h = weighted_series(
        tower, [](std::uint64_t m) -> Rational { return pow2(-static_cast<long>(m)); });
    std::uint64_t layer = n;
    return ContinuousFn([chars, empty_char, h, layer](const Rational& q,
                                                      std::uint64_t i) -> Rational {
        Rational hv = h.at(q, i);
        Rational below(0);
        Rational upto(0);
        for (std::uint64_t m = 0; m <= layer; ++m) {
            const ContinuousFn& cm = m < chars->size() ? (*chars)[m] : *empty_char;
            Rational g = div_or_zero(cm.at(q, i), pow2(static_cast<long>(m)) * hv);
            if (m < layer) below += g;
            upto += g;
        }
        Rational half = make_rational(1, 2);
        return rat_min(half, upto) - rat_min(half, below);
    });
}

std::vector<OpenSetCode> locally_finite_refinement(const std::vector<OpenSetCode>& cover,
                                                   std::uint64_t n_max,
                                                   const Rational& delta) {
    if (delta <= 0) throw std::invalid_argument("locally_finite_refinement: delta must be positive");
    Rational center = (make_rational(1, 2) + delta) / 2;
    OpenSetCode target = from_balls({{center, center}});
    std::vector<OpenSetCode> out;
    for (std::uint64_t n = 0; n <= n_max; ++n)
        out.push_back(preimage(refinement_layer(cover, n), target));
    return out;
}

}  // namespace slowreal
