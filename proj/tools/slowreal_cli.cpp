// Command-line front end: builds objects from the registry, runs the
// constructions, and emits convergence tables. Every numeric field in the
// output is an exact rational string; the decimal column is a fixed
// 12-digit truncation computed by integer division, so identical
// invocations produce byte-identical bytes.
//
// Exit codes: 0 when the run succeeds (including definite Fails verdicts),
// 2 when the final verdict is Unknown (fuel exhausted), 1 on usage or
// parse errors.

#include "CLI11.hpp"
#include "json.hpp"

#include "slowreal/combinatorics.hpp"
#include "slowreal/counterexamples.hpp"
#include "slowreal/open_sets.hpp"
#include "slowreal/real_sequences.hpp"
#include "slowreal/registry.hpp"
#include "slowreal/theorems.hpp"
#include "slowreal/tuple_code.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace slowreal;
using Json = nlohmann::ordered_json;

namespace {

struct Row {
    std::uint64_t stage = 0;
    Rational value;
    std::string annotation;
};

struct Output {
    std::string subcommand;
    Json config = Json::object();
    std::vector<Row> rows;
    std::string verdict;  // empty when the run has no verdict
    Json report;          // extra structured fields, JSON output only
    int exit_code = 0;
};

struct Common {
    std::uint64_t stages = 8;
    std::uint64_t fuel = 256;
    std::uint64_t tol_exp = 10;
    std::string format = "json";
    std::uint64_t seed = 0;
    std::string out_path;
};

void attach_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--stages", c.stages, "rows of the convergence table")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--fuel", c.fuel, "budget for the bounded searches")
        ->capture_default_str();
    cmd->add_option("--tol-exp", c.tol_exp, "tolerance exponent k, meaning 2^-k")
        ->capture_default_str();
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--seed", c.seed, "corpus sampling seed (recorded)")
        ->capture_default_str();
    cmd->add_option("--out", c.out_path, "write the table to this path");
}

// Fixed 12-digit truncation toward zero, by integer division only.
std::string decimal12(const Rational& q) {
    Integer num = q.get_num();
    Integer den = q.get_den();
    bool negative = num < 0;
    if (negative) num = -num;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 12);
    Integer whole = num / den;
    std::string frac = Integer((num % den) * scale / den).get_str();
    frac.insert(0, 12 - frac.size(), '0');
    return (negative ? "-" : "") + whole.get_str() + "." + frac;
}

std::string verdict_name(const Verdict& v) {
    return v.holds() ? "holds" : v.fails() ? "fails" : "unknown";
}

int verdict_exit(const Verdict& v) { return v.unknown() ? 2 : 0; }

std::string emit_json(const Output& o) {
    Json doc;
    doc["subcommand"] = o.subcommand;
    doc["config"] = o.config;
    Json rows = Json::array();
    for (const Row& r : o.rows) {
        Json row;
        row["stage"] = r.stage;
        row["value"] = r.value.get_str();
        row["decimal"] = decimal12(r.value);
        row["annotation"] = r.annotation;
        rows.push_back(row);
    }
    doc["rows"] = rows;
    if (!o.verdict.empty()) doc["verdict"] = o.verdict;
    if (!o.report.is_null()) doc["report"] = o.report;
    return doc.dump(2) + "\n";
}

std::string emit_csv(const Output& o) {
    std::string s = "stage,num,den,decimal,annotation\n";
    for (const Row& r : o.rows) {
        s += std::to_string(r.stage);
        s += ",";
        s += r.value.get_num().get_str();
        s += ",";
        s += r.value.get_den().get_str();
        s += ",";
        s += decimal12(r.value);
        s += ",";
        s += r.annotation;
        s += "\n";
    }
    return s;
}

SlowReal constant_real(const Rational& v) {
    return SlowReal([v](std::uint64_t) -> Rational { return v; });
}

ClosedSetCode whole_line_domain() {
    ClosedSetCode c;
    c.complement = empty_set();
    return c;
}

Json base_config(const Common& c) {
    Json cfg;
    cfg["stages"] = c.stages;
    cfg["fuel"] = c.fuel;
    cfg["tol_exp"] = c.tol_exp;
    cfg["seed"] = c.seed;
    return cfg;
}

// ---------------------------------------------------------------- handlers

Output run_approx(const Common& c, const std::string& fn, const std::string& at) {
    Output o;
    o.subcommand = "approx";
    o.config = base_config(c);
    o.config["fn"] = fn;
    o.config["at"] = at;
    ContinuousFn f = make_function(fn);
    Rational q = parse_rational(at);
    for (std::uint64_t i = 0; i < c.stages; ++i)
        o.rows.push_back({i, f.at(q, i), ""});
    return o;
}

Output run_ivt(const Common& c, const std::string& fn) {
    Output o;
    o.subcommand = "ivt";
    o.config = base_config(c);
    o.config["fn"] = fn;
    ContinuousFn f = make_function(fn);
    SlowReal root = ivt_root(f);
    for (std::uint64_t i = 0; i < c.stages; ++i) {
        BisectionTrace tr = ivt_trace(f, i);
        std::string bracket = "bracket " + tr.back().first.get_str() + ".." +
                              tr.back().second.get_str();
        o.rows.push_back({i, root.at(i), bracket});
    }
    return o;
}

Output run_integrate(const Common& c, const std::string& fn) {
    Output o;
    o.subcommand = "integrate";
    o.config = base_config(c);
    o.config["fn"] = fn;
    SlowReal integral = riemann_integral(make_function(fn));
    for (std::uint64_t i = 0; i < c.stages; ++i)
        o.rows.push_back({i, integral.at(i), ""});
    return o;
}

Output run_bernstein(const Common& c, const std::string& fn, const std::string& at) {
    Output o;
    o.subcommand = "bernstein";
    o.config = base_config(c);
    o.config["fn"] = fn;
    o.config["at"] = at;
    ContinuousFn f = make_function(fn);
    Rational q = parse_rational(at);
    for (std::uint64_t d = 1; d <= c.stages; ++d)
        o.rows.push_back({d, bernstein(f, d).at(q, d), "degree"});
    return o;
}

Output run_banach(const Common& c, const std::string& fn, const std::string& rho,
                  const std::string& x0) {
    Output o;
    o.subcommand = "banach";
    o.config = base_config(c);
    o.config["fn"] = fn;
    o.config["rho"] = rho;
    o.config["x0"] = x0;
    BanachResult b = banach_iterates(make_function(fn), parse_rational(rho),
                                     constant_real(parse_rational(x0)));
    for (std::uint64_t m = 0; m < c.stages; ++m)
        o.rows.push_back({m, member(b.seq, m).at(m), "iterate"});
    o.rows.push_back({c.stages, b.fix.at(c.stages), "fixed-point"});
    return o;
}

Output run_caristi(const Common& c, const std::string& fn, const std::string& pot) {
    Output o;
    o.subcommand = "caristi";
    o.config = base_config(c);
    o.config["fn"] = fn;
    o.config["potential"] = pot;
    ContinuousFn f = make_function(fn);
    ContinuousFn p = make_function(pot);
    LscCode g([p](std::uint64_t i, const Rational& q) -> Rational { return p.at(q, i); });
    CaristiResult r = caristi_point(f, g, c.fuel);
    std::uint64_t shown = r.trace.size();
    if (shown > c.stages) shown = c.stages;
    for (std::uint64_t m = 0; m < shown; ++m)
        o.rows.push_back({m, r.trace[m], "trace"});
    if (!r.trace.empty() && shown < r.trace.size())
        o.rows.push_back({r.trace.size() - 1, r.trace.back(), "trace-end"});
    if (r.point) o.rows.push_back({c.fuel, r.point->at(c.fuel), "fixed-point"});
    o.verdict = verdict_name(r.verdict);
    o.exit_code = verdict_exit(r.verdict);
    return o;
}

Output run_tietze(const Common& c, const std::string& fn, std::uint64_t depth,
                  const std::string& at) {
    Output o;
    o.subcommand = "tietze";
    o.config = base_config(c);
    o.config["fn"] = fn;
    o.config["depth"] = depth;
    o.config["at"] = at;
    ContinuousFn h = tietze_extend(make_function(fn), whole_line_domain(), depth);
    Rational q = parse_rational(at);
    for (std::uint64_t i = 0; i < c.stages; ++i)
        o.rows.push_back({i, h.at(q, i), ""});
    return o;
}

RealFamily diagonal_family(const std::string& name) {
    if (name == "alternating")
        return [](std::uint64_t n, std::uint64_t) -> Rational {
            return Rational(Integer(n % 2));
        };
    if (name == "constant")
        return [](std::uint64_t, std::uint64_t) -> Rational { return Rational(0); };
    if (name == "delayed")
        return [](std::uint64_t n, std::uint64_t i) -> Rational {
            return i >= 2 * n ? Rational(1) : Rational(0);
        };
    throw std::invalid_argument(
        "unknown family '" + name + "'; available: alternating, constant, delayed");
}

Output run_cantor(const Common& c, const std::string& family) {
    Output o;
    o.subcommand = "cantor-diagonal";
    o.config = base_config(c);
    o.config["family"] = family;
    SlowReal y = cantor_antidiagonal(diagonal_family(family));
    for (std::uint64_t i = 0; i < c.stages; ++i)
        o.rows.push_back({i, y.at(i), ""});
    return o;
}

OpenFamily baire_family(const std::string& name) {
    if (name == "full")
        return [](std::uint64_t) {
            return OpenSetCode(
                [](std::uint64_t, const Rational&, const Rational&) { return true; });
        };
    if (name == "avoid")
        // The n-th set omits the n-th coded rational, so the point dodges
        // every one of them.
        return [](std::uint64_t n) {
            return OpenSetCode([n](std::uint64_t, const Rational& a, const Rational& r) {
                Rational p = rational_from_code(Integer(n));
                return a + r <= p || a - r >= p;
            });
        };
    throw std::invalid_argument("unknown family '" + name + "'; available: avoid, full");
}

Output run_baire(const Common& c, const std::string& family, const std::string& a,
                 const std::string& r) {
    Output o;
    o.subcommand = "baire";
    o.config = base_config(c);
    o.config["family"] = family;
    o.config["a"] = a;
    o.config["r"] = r;
    BaireStage st = baire_stage(baire_family(family), parse_rational(a),
                                parse_rational(r), c.stages - 1);
    for (std::uint64_t i = 0; i < st.centers.size(); ++i)
        o.rows.push_back({i, st.centers[i], "radius " + st.radii[i].get_str()});
    return o;
}

Output run_heine_borel(const Common& c, const std::string& cover) {
    Output o;
    o.subcommand = "heine-borel";
    o.config = base_config(c);
    o.config["cover"] = cover;
    SubcoverResult r = heine_borel_subcover(make_cover(cover), c.fuel);
    for (std::uint64_t i = 0; i < r.indices.size(); ++i)
        o.rows.push_back({i, Rational(Integer(r.indices[i])), "component"});
    o.verdict = verdict_name(r.verdict);
    o.exit_code = verdict_exit(r.verdict);
    return o;
}

BitSequenceFamily cohesive_family(const std::string& name) {
    if (name == "bits")
        return {[](std::uint64_t i, std::uint64_t j) -> int {
            return static_cast<int>((i >> j) & 1);
        }};
    if (name == "alternating")
        return {[](std::uint64_t i, std::uint64_t j) -> int {
            return static_cast<int>((i + j) % 2);
        }};
    if (name == "constant")
        return {[](std::uint64_t i, std::uint64_t) -> int {
            return static_cast<int>(i % 2);
        }};
    throw std::invalid_argument(
        "unknown family '" + name + "'; available: alternating, bits, constant");
}

Output run_cohesive(const Common& c, const std::string& family, std::uint64_t depth,
                    std::uint64_t window) {
    Output o;
    o.subcommand = "cohesive";
    o.config = base_config(c);
    o.config["family"] = family;
    o.config["depth"] = depth;
    o.config["window"] = window;
    BitSequenceFamily fam = cohesive_family(family);
    std::vector<std::uint64_t> last;
    for (std::uint64_t d = 0; d <= depth; ++d) {
        last = cohesive_selector(fam, d, window);
        o.rows.push_back({d, Rational(Integer(last.size())), "survivors"});
    }
    o.verdict = last.size() >= 2 ? "holds" : "unknown";
    o.exit_code = last.size() >= 2 ? 0 : 2;
    return o;
}

FnSequence arzela_family(const std::string& name) {
    if (name == "oscillate")
        return FnSequence([](std::uint64_t n, const Rational& q, std::uint64_t) -> Rational {
            return n % 2 == 0 ? Rational(q + make_rational(1, 16))
                              : Rational(q - make_rational(1, 16));
        });
    if (name == "shrink")
        return FnSequence([](std::uint64_t n, const Rational& q, std::uint64_t) -> Rational {
            return q / Rational(Integer(n + 1));
        });
    throw std::invalid_argument(
        "unknown family '" + name + "'; available: oscillate, shrink");
}

Output run_arzela(const Common& c, const std::string& family, std::uint64_t depth,
                  std::uint64_t window, const std::string& at) {
    Output o;
    o.subcommand = "arzela";
    o.config = base_config(c);
    o.config["family"] = family;
    o.config["depth"] = depth;
    o.config["window"] = window;
    o.config["at"] = at;
    ArzelaResult r = arzela_ascoli(arzela_family(family), Rational(2), depth, window);
    for (std::uint64_t i = 0; i < r.selector.size(); ++i)
        o.rows.push_back({i, Rational(Integer(r.selector[i])), "selector"});
    if (r.verdict.holds()) {
        Rational q = parse_rational(at);
        o.rows.push_back({c.fuel, r.limit.at(q, c.fuel), "limit at " + q.get_str()});
    }
    o.verdict = verdict_name(r.verdict);
    o.exit_code = verdict_exit(r.verdict);
    return o;
}

ThetaRule theta_rule(const std::string& name) {
    if (name == "true")
        return [](std::uint64_t, std::uint64_t, std::uint64_t) { return true; };
    if (name == "false")
        return [](std::uint64_t, std::uint64_t, std::uint64_t) { return false; };
    if (name == "triangular")
        return [](std::uint64_t m, std::uint64_t n, std::uint64_t) { return n < m; };
    if (name == "mixed")
        return [](std::uint64_t m, std::uint64_t n, std::uint64_t k) {
            if (k % 2 == 1) return n < m;
            return m != 0;
        };
    throw std::invalid_argument(
        "unknown theta '" + name + "'; available: false, mixed, triangular, true");
}

Output run_limsup(const Common& c, const std::string& theta, std::uint64_t levels) {
    Output o;
    o.subcommand = "limsup";
    o.config = base_config(c);
    o.config["theta"] = theta;
    o.config["levels"] = levels;
    UniformRealSequence s = limsup_gadget(theta_rule(theta), levels);
    for (std::uint64_t n = 0; n < c.stages; ++n)
        o.rows.push_back({n, member(s, n).at(0), ""});
    Verdict v = limsup_approx(s, Rational(2),
                              pow2(-static_cast<long>(c.tol_exp)), c.fuel);
    if (v.value) o.rows.push_back({c.fuel, *v.value, "limsup candidate"});
    o.verdict = verdict_name(v);
    o.exit_code = verdict_exit(v);
    return o;
}

// -------------------------------------------------- scripted demonstrations

Output run_cx_specker(const Common& c, std::uint64_t delay) {
    Output o;
    o.subcommand = "counterexample";
    o.config = base_config(c);
    o.config["name"] = "specker";
    o.config["delay"] = delay;
    // Injective reveal schedule: exponents below `delay` are held back until
    // stage `delay`, so the sum jumps long after a small window closed.
    auto reveal = [delay](std::uint64_t n) -> std::uint64_t {
        return n < delay ? n + delay + 1 : n - delay;
    };
    SlowReal x = specker(reveal);
    for (std::uint64_t i = 0; i < c.stages; ++i)
        o.rows.push_back({i, x.at(i), ""});
    Verdict candidate = extract_rate(x, c.tol_exp, c.fuel);
    Verdict audit = extract_rate(x, c.tol_exp, 4 * c.fuel);
    bool refuted = audit.index && candidate.index && *audit.index > *candidate.index;
    Json rep;
    rep["candidate_rate"] = candidate.index ? *candidate.index : 0;
    rep["audit_fuel"] = 4 * c.fuel;
    rep["audit_rate"] = audit.index ? *audit.index : 0;
    rep["refuted"] = refuted;
    o.report = rep;
    o.verdict = refuted ? "unknown" : "holds";
    o.exit_code = refuted ? 2 : 0;
    return o;
}

Output run_cx_hat(const Common& c) {
    Output o;
    o.subcommand = "counterexample";
    o.config = base_config(c);
    o.config["name"] = "hat";
    // Fixed fuels: the script is the demonstration, so it pins the window
    // where the argmax still looks stable and the one where it escapes.
    ContinuousFn hat = make_function("hat-gallery");
    ExtremumResult narrow = extremum(hat, 512);
    ExtremumResult wide = extremum(hat, 4096);
    for (std::uint64_t i = 0; i < c.stages; ++i)
        o.rows.push_back({i, wide.value.at(i), "stage max"});
    Json rep;
    rep["extremum_narrow_fuel"] = 512;
    rep["extremum_narrow"] = verdict_name(narrow.verdict);
    rep["extremum_wide_fuel"] = 4096;
    rep["extremum_wide"] = verdict_name(wide.verdict);
    rep["uniform_modulus"] = verdict_name(uniform_continuity_modulus(hat, 2, 64));
    o.report = rep;
    o.verdict = verdict_name(wide.verdict);
    o.exit_code = verdict_exit(wide.verdict);
    return o;
}

Output run_cx_step(const Common& c) {
    Output o;
    o.subcommand = "counterexample";
    o.config = base_config(c);
    o.config["name"] = "step";
    SlowReal root = ivt_root(make_function("step-gallery"));
    std::vector<Rational> vals;
    for (std::uint64_t i = 0; i < c.stages; ++i) {
        vals.push_back(root.at(i));
        o.rows.push_back({i, vals.back(), ""});
    }
    bool revised = false;
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
        Rational budget = pow2(-static_cast<long>(i)) + pow2(-static_cast<long>(i + 1));
        if (rat_abs(vals[i] - vals[i + 1]) > budget) revised = true;
    }
    Json rep;
    rep["revised"] = revised;
    o.report = rep;
    o.verdict = revised ? "holds" : "unknown";
    o.exit_code = revised ? 0 : 2;
    return o;
}

Output run_cx_tent(const Common& c, std::uint64_t witness, std::uint64_t delay) {
    Output o;
    o.subcommand = "counterexample";
    o.config = base_config(c);
    o.config["name"] = "tent";
    o.config["witness"] = witness;
    o.config["delay"] = delay;
    TentGadget g = tent_gadget([witness, delay](std::uint64_t n) -> std::optional<std::uint64_t> {
        if (n == witness) return delay;
        return std::nullopt;
    });
    UniformRealSequence it = tent_iterates(g);
    std::uint64_t read_stage = delay + 4;
    std::vector<std::uint64_t> decoded;
    for (std::uint64_t n = 0; n < c.stages; ++n) {
        Rational v = member(it, n).at(read_stage);
        bool crosses = v >= make_rational(2, 3);
        if (crosses) decoded.push_back(n);
        o.rows.push_back({n, v, crosses ? "crosses" : ""});
    }
    Json rep;
    rep["read_stage"] = read_stage;
    rep["decoded"] = decoded;
    o.report = rep;
    return o;
}

Output run_cx_limsup(const Common& c, std::uint64_t levels) {
    Output o = run_limsup(c, "mixed", levels);
    o.subcommand = "counterexample";
    o.config["name"] = "limsup";
    Verdict v = limsup_approx(limsup_gadget(theta_rule("mixed"), levels), Rational(2),
                              pow2(-static_cast<long>(levels) - 1), c.fuel);
    Json rep;
    rep["epsilon"] = "1/" + pow2(static_cast<long>(levels) + 1).get_num().get_str();
    if (v.value) {
        rep["candidate"] = v.value->get_str();
        // Decode: which subset of {2^0 .. 2^-levels} lies within epsilon.
        std::vector<std::uint64_t> bits;
        Rational eps = pow2(-static_cast<long>(levels) - 1);
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (levels + 1)); ++mask) {
            Rational sum(0);
            for (std::uint64_t k = 0; k <= levels; ++k)
                if (mask & (std::uint64_t(1) << k)) sum += pow2(-static_cast<long>(k));
            if (rat_abs(*v.value - sum) <= eps) {
                bits.clear();
                for (std::uint64_t k = 0; k <= levels; ++k)
                    if (mask & (std::uint64_t(1) << k)) bits.push_back(k);
                break;
            }
        }
        rep["recurring_levels"] = bits;
    }
    o.report = rep;
    o.verdict = verdict_name(v);
    o.exit_code = verdict_exit(v);
    return o;
}

Output run_cx_intersection(const Common& c) {
    Output o;
    o.subcommand = "counterexample";
    o.config = base_config(c);
    o.config["name"] = "intersection";
    Colouring col{[](std::uint64_t j) -> std::uint64_t {
                      return j < 2 ? 0 : j < 4 ? 1 : 2;
                  },
                  2};
    OpenFamily fam = intersection_gadget(col);
    SlowReal zero = constant_real(Rational(0));
    bool any_unknown = false;
    for (std::uint64_t n = 0; n <= 2; ++n) {
        Verdict v = member(fam(n), zero, c.fuel);
        any_unknown = any_unknown || v.unknown();
        Rational radius = v.ball ? v.ball->r : Rational(0);
        o.rows.push_back({n, radius, verdict_name(v)});
    }
    o.verdict = any_unknown ? "unknown" : "holds";
    o.exit_code = any_unknown ? 2 : 0;
    return o;
}

void write_output(const Output& o, const Common& c) {
    std::string text = c.format == "csv" ? emit_csv(o) : emit_json(o);
    if (c.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(c.out_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open output path " + c.out_path);
        f << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lazy exact real arithmetic: convergence tables and gadget reports"};
    app.require_subcommand(1);

    Common c;
    std::string fn = "identity";
    std::string potential = "abs";
    std::string at = "0";
    std::string rho = "1/2";
    std::string x0 = "0";
    std::string family;
    std::string cover = "gallery:two-ball";
    std::string theta = "mixed";
    std::string cx_name;
    std::uint64_t depth = 2;
    std::uint64_t window = 16;
    std::uint64_t levels = 3;
    std::uint64_t witness = 1;
    std::uint64_t delay = 100;

    CLI::App* approx = app.add_subcommand("approx", "stage readings of a function at a point");
    approx->add_option("--fn", fn, "function spec")->required();
    approx->add_option("--at", at, "evaluation point p/q");
    attach_common(approx, c);

    CLI::App* ivt = app.add_subcommand("ivt", "bisection root of a sign-changing function");
    ivt->add_option("--fn", fn, "function spec")->required();
    attach_common(ivt, c);

    CLI::App* integrate = app.add_subcommand("integrate", "dyadic left sums on [0, 1]");
    integrate->add_option("--fn", fn, "function spec")->required();
    attach_common(integrate, c);

    CLI::App* bern = app.add_subcommand("bernstein", "polynomial approximants at a point");
    bern->add_option("--fn", fn, "function spec")->required();
    bern->add_option("--at", at, "evaluation point p/q");
    attach_common(bern, c);

    CLI::App* banach = app.add_subcommand("banach", "contraction iterates and fixed point");
    banach->add_option("--fn", fn, "function spec")->required();
    banach->add_option("--rho", rho, "contraction factor in [0, 1)");
    banach->add_option("--x0", x0, "starting point p/q");
    attach_common(banach, c);

    CLI::App* caristi = app.add_subcommand("caristi", "potential-descent fixed point search");
    caristi->add_option("--fn", fn, "function spec")->required();
    caristi->add_option("--potential", potential, "non-negative potential spec");
    attach_common(caristi, c);

    CLI::App* tietze = app.add_subcommand("tietze", "staged extension readings at a point");
    tietze->add_option("--fn", fn, "function spec")->required();
    tietze->add_option("--depth", depth, "layers of the extension")->capture_default_str();
    tietze->add_option("--at", at, "evaluation point p/q");
    attach_common(tietze, c);

    CLI::App* cantor = app.add_subcommand("cantor-diagonal", "antidiagonal of a real family");
    cantor->add_option("--family", family, "alternating | constant | delayed")->required();
    attach_common(cantor, c);

    CLI::App* baire = app.add_subcommand("baire", "nested ball centers through dense opens");
    baire->add_option("--family", family, "avoid | full")->required();
    baire->add_option("--a", at, "starting center p/q");
    baire->add_option("--r", rho, "starting radius p/q");
    attach_common(baire, c);

    CLI::App* hb = app.add_subcommand("heine-borel", "finite subcover search for [0, 1]");
    hb->add_option("--cover", cover, "cover spec")->capture_default_str();
    attach_common(hb, c);

    CLI::App* cohesive = app.add_subcommand("cohesive", "per-depth survivor counts");
    cohesive->add_option("--family", family, "alternating | bits | constant")->required();
    cohesive->add_option("--depth", depth, "bit positions to stabilize")->capture_default_str();
    cohesive->add_option("--window", window, "initial survivor window")->capture_default_str();
    attach_common(cohesive, c);

    CLI::App* arzela = app.add_subcommand("arzela", "diagonal selector for a function family");
    arzela->add_option("--family", family, "oscillate | shrink")->required();
    arzela->add_option("--depth", depth, "digits to stabilize")->capture_default_str();
    arzela->add_option("--window", window, "rational sample window")->capture_default_str();
    arzela->add_option("--at", at, "report the limit at this point");
    attach_common(arzela, c);

    CLI::App* limsup = app.add_subcommand("limsup", "switch-counting walk and its limsup");
    limsup->add_option("--theta", theta, "false | mixed | triangular | true")
        ->capture_default_str();
    limsup->add_option("--levels", levels, "levels K (bits 2^0 .. 2^-K)")->capture_default_str();
    attach_common(limsup, c);

    CLI::App* cx = app.add_subcommand("counterexample", "scripted gadget demonstration");
    cx->add_option("name", cx_name, "specker | hat | step | tent | limsup | intersection")
        ->required();
    cx->add_option("--delay", delay, "witness delay")->capture_default_str();
    cx->add_option("--witness", witness, "witnessed index (tent)")->capture_default_str();
    cx->add_option("--levels", levels, "levels K (limsup)")->capture_default_str();
    attach_common(cx, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        Output o;
        if (*approx) o = run_approx(c, fn, at);
        else if (*ivt) o = run_ivt(c, fn);
        else if (*integrate) o = run_integrate(c, fn);
        else if (*bern) o = run_bernstein(c, fn, at);
        else if (*banach) o = run_banach(c, fn, rho, x0);
        else if (*caristi) o = run_caristi(c, fn, potential);
        else if (*tietze) o = run_tietze(c, fn, depth, at);
        else if (*cantor) o = run_cantor(c, family);
        else if (*baire) o = run_baire(c, family, at, rho);
        else if (*hb) o = run_heine_borel(c, cover);
        else if (*cohesive) o = run_cohesive(c, family, depth, window);
        else if (*arzela) o = run_arzela(c, family, depth, window, at);
        else if (*limsup) o = run_limsup(c, theta, levels);
        else if (*cx) {
            if (cx_name == "specker") o = run_cx_specker(c, delay);
            else if (cx_name == "hat") o = run_cx_hat(c);
            else if (cx_name == "step") o = run_cx_step(c);
            else if (cx_name == "tent") o = run_cx_tent(c, witness, delay);
            else if (cx_name == "limsup") o = run_cx_limsup(c, levels);
            else if (cx_name == "intersection") o = run_cx_intersection(c);
            else
                throw std::invalid_argument(
                    "unknown gadget '" + cx_name +
                    "'; available: hat, intersection, limsup, specker, step, tent");
        }
        write_output(o, c);
        return o.exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
