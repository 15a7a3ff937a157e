#include "commands.hpp"

#include "grl/cfrac.hpp"
#include "grl/error.hpp"
#include "grl/examples.hpp"
#include "grl/integral_rep.hpp"
#include "grl/nevanlinna.hpp"
#include "grl/shifts.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

namespace grl::cli {

using nlohmann::json;

namespace {

const std::set<std::string> kPreconditionKinds = {
    "PreconditionFailed", "InapplicableParameters", "ParameterPole", "PoleError",   "UndefinedB",
    "DegenerateParams",   "DenominatorZero",        "NearCutPole",   "MalformedFraction", "DegeneratePoints",
    "LadderDegeneracy",
};

json cjson(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json poly_json(const RealPoly& p) { return p.coeffs; }

struct Context {
    const Request& r;
    json inputs = json::object();
    json result = json::object();
    json diagnostics;
    std::string csv; // filled by commands that support --format csv

    void warn(const std::string& w) { diagnostics["warnings"].push_back(w); }
};

Params need_params(Context& ctx) {
    const Request& r = ctx.r;
    if (!r.a || !r.b || !r.c) throw UsageError(r.command + " needs --a, --b and --c");
    ctx.inputs["a"] = *r.a;
    ctx.inputs["b"] = *r.b;
    ctx.inputs["c"] = *r.c;
    return Params(*r.a, *r.b, *r.c);
}

Shifts need_shifts(Context& ctx) {
    const Request& r = ctx.r;
    if (!r.n1 || !r.n2 || !r.m) throw UsageError(r.command + " needs --n1, --n2 and --m");
    ctx.inputs["n1"] = *r.n1;
    ctx.inputs["n2"] = *r.n2;
    ctx.inputs["m"] = *r.m;
    return derive_shifts(*r.n1, *r.n2, *r.m);
}

std::optional<cplx> opt_z(Context& ctx) {
    const Request& r = ctx.r;
    if (!r.z_re && !r.z_im) return std::nullopt;
    const cplx z(r.z_re.value_or(0.0), r.z_im.value_or(0.0));
    ctx.inputs["z"] = cjson(z);
    return z;
}

cplx need_z(Context& ctx) {
    auto z = opt_z(ctx);
    if (!z) throw UsageError(ctx.r.command + " needs --z-re (and optionally --z-im)");
    return *z;
}

Bank need_bank(Context& ctx) {
    if (ctx.r.bank != "upper" && ctx.r.bank != "lower") throw UsageError("--bank must be upper or lower");
    ctx.inputs["bank"] = ctx.r.bank;
    return ctx.r.bank == "upper" ? Bank::upper : Bank::lower;
}

bool on_cut(cplx z) { return z.imag() == 0 && z.real() >= 1; }

void cmd_eval_ratio(Context& ctx) {
    const Params p = need_params(ctx);
    const Shifts s = need_shifts(ctx);
    const cplx z = need_z(ctx);
    ctx.inputs["tol"] = ctx.r.tol;
    cplx v;
    if (on_cut(z)) {
        if (z.real() == 1) fail("PreconditionFailed", "z = 1 is a branch point");
        v = ratio_on_cut(p, s, z.real(), need_bank(ctx), ctx.r.tol);
    } else {
        v = ratio(p, s, z, ctx.r.tol);
    }
    ctx.result = cjson(v);
}

void cmd_eval_2f1(Context& ctx) {
    const Params p = need_params(ctx);
    const cplx z = need_z(ctx);
    ctx.inputs["tol"] = ctx.r.tol;
    cplx v;
    if (on_cut(z)) {
        if (z.real() == 1) fail("PreconditionFailed", "z = 1 is a branch point");
        v = hyp2f1_on_cut(p, z.real(), need_bank(ctx), ctx.r.tol);
    } else {
        v = hyp2f1(p, z, ctx.r.tol);
    }
    ctx.result = cjson(v);
}

// alpha_0 / (1 - alpha_1 z / (... / (1 - alpha_n z)))
cplx approximant(const CFrac& f, int n, cplx z) {
    cplx t = 1;
    for (int j = n; j >= 1; --j) t = 1.0 - f.alpha(j) * z / t;
    return f.alpha(0) / t;
}

void cmd_cfrac(Context& ctx) {
    const Params p = need_params(ctx);
    const Request& r = ctx.r;
    if (r.kind != "011" && r.kind != "010") throw UsageError("--kind must be 011 or 010");
    if (r.count < 0 || r.count > 100000) throw UsageError("--count must be in 0..100000");
    ctx.inputs["kind"] = r.kind;
    ctx.inputs["count"] = r.count;
    const CFrac f = r.kind == "011" ? gauss_cfrac_011(p) : gauss_cfrac_010(p);
    int n = r.count;
    if (f.last() >= 0) n = std::min(n, f.last());
    json alphas = json::array();
    for (int j = 0; j <= n; ++j) alphas.push_back(f.alpha(j));
    ctx.result["alphas"] = alphas;
    ctx.result["terminating"] = f.terminating;
    ctx.result["positive_from"] = f.positive_from;
    ctx.result["sup_abs_alpha"] = sup_abs_alpha(f, n + 1);
    const auto z = opt_z(ctx);
    if (z) {
        CFracEvalInfo info;
        const cplx v = eval_cfrac(f, *z, r.tol, 100000, &info);
        ctx.result["value"] = cjson(v);
        ctx.result["depth"] = info.depth;
        ctx.diagnostics["nodes"] = info.depth;
        if (info.tiny_substitutions > 0)
            ctx.warn("modified Lentz substituted " + std::to_string(info.tiny_substitutions) + " vanishing denominators");
        if (r.format == Format::csv) {
            std::ostringstream os;
            os.precision(17);
            os << "n,error\n";
            for (int k = 0; k <= n; ++k) os << k << "," << std::abs(approximant(f, k, *z) - v) << "\n";
            ctx.csv = os.str();
        }
    } else if (r.format == Format::csv) {
        throw UsageError("cfrac --format csv needs --z-re");
    }
}

void cmd_classify(Context& ctx) {
    const Params p = need_params(ctx);
    const Request& r = ctx.r;
    if (r.n1 || r.n2 || r.m) {
        const Shifts s = need_shifts(ctx);
        if (s.n1 != 0 || s.n2 != 1 || s.m != 1)
            fail("PreconditionFailed", "index computation is available for the shifts (0,1,1) only");
    }
    const NevanlinnaClass k = classify_gauss_ratio(p);
    ctx.result = {{"epsilon", k.epsilon},   {"kappa", k.kappa},         {"lambda", k.lambda},
                  {"is_rational", k.is_rational}, {"K", k.K}, {"Lambda", k.Lambda_deg},
                  {"status", k.status == NevanlinnaStatus::classified ? "classified" : "not_in_s_union"}};
    if (r.pick_check) {
        ctx.inputs["seed"] = r.seed;
        const Shifts s = derive_shifts(0, 1, 1);
        const double eps = k.epsilon;
        const int n_points = 2 * std::max(k.kappa, k.lambda) + 4;
        const auto f = [&](cplx z) { return eps * ratio(p, s, z); };
        const auto zf = [&](cplx z) { return eps * z * ratio(p, s, z); };
        const PickOracleResult pk = pick_oracle(f, n_points, 50, r.seed);
        const PickOracleResult pl = pick_oracle(zf, n_points, 50, r.seed);
        ctx.result["pick"] = {{"kappa_observed", pk.max_negative}, {"lambda_observed", pl.max_negative},
                              {"points", n_points},                {"draws", pk.draws},
                              {"seed", r.seed}};
        if (pk.max_negative > k.kappa || pl.max_negative > k.lambda)
            ctx.warn("Pick oracle exceeds the predicted indices");
    }
}

void cmd_runckel(Context& ctx) {
    const Params p = need_params(ctx);
    const RunckelReport rk = runckel_check(p);
    ctx.result = {{"satisfied", rk.satisfied}, {"condition", to_string(rk.which)}, {"details", rk.details}};
}

void cmd_boundary(Context& ctx) {
    const Params p = need_params(ctx);
    const Shifts s = need_shifts(ctx);
    const Request& r = ctx.r;
    const BoundaryDensity d = boundary_density(p, s);
    ctx.result["B"] = d.B;
    ctx.result["P"] = poly_json(d.P);
    ctx.result["r"] = s.r;
    ctx.result["bp_sign"] = to_string(bp_sign_on_unit_interval(d));
    std::vector<double> xs;
    if (r.x) {
        xs.push_back(*r.x);
        ctx.inputs["x"] = *r.x;
    } else if (r.x_from && r.x_to) {
        if (r.points < 0) throw UsageError("--points must be >= 0");
        ctx.inputs["x_from"] = *r.x_from;
        ctx.inputs["x_to"] = *r.x_to;
        ctx.inputs["points"] = r.points;
        for (int i = 0; i < r.points; ++i) {
            const double w = r.points == 1 ? 0.0 : static_cast<double>(i) / (r.points - 1);
            xs.push_back(*r.x_from + w * (*r.x_to - *r.x_from));
        }
    } else if (r.format == Format::csv) {
        throw UsageError("boundary --format csv needs --x-from, --x-to and --points");
    }
    json pts = json::array();
    std::ostringstream os;
    os.precision(17);
    os << "x,density\n";
    for (double x : xs) {
        const double im = boundary_im(d, x, Bank::upper, r.tol);
        pts.push_back({{"x", x}, {"im_upper", im}, {"density", im / std::numbers::pi}});
        os << x << "," << im / std::numbers::pi << "\n";
    }
    ctx.result["points"] = pts;
    if (r.format == Format::csv) ctx.csv = os.str();
}

void cmd_integral_rep(Context& ctx) {
    const Params p = need_params(ctx);
    const Shifts s = need_shifts(ctx);
    const cplx z = need_z(ctx);
    ctx.inputs["tol"] = ctx.r.tol;
    ctx.inputs["max_nodes"] = ctx.r.max_nodes;
    const Representation rep = build_representation(p, s);
    const QuadratureResult q = eval_representation(rep, z, ctx.r.tol, ctx.r.max_nodes);
    const cplx direct = ratio(p, s, z);
    ctx.result = {{"value", cjson(q.value)},
                  {"direct", cjson(direct)},
                  {"rel_error", std::abs(q.value - direct) / std::abs(direct)},
                  {"N", rep.N},
                  {"Q", poly_json(rep.Q)},
                  {"taylor_head", rep.taylor_head},
                  {"B", rep.density.B},
                  {"P", poly_json(rep.density.P)},
                  {"runckel", to_string(rep.runckel)},
                  {"nu", rep.at_one.nu}};
    ctx.diagnostics["error_estimate"] = q.abs_error_estimate;
    ctx.diagnostics["nodes"] = q.nodes_used;
}

json identity_json(const IdentityCheck& c) {
    return {{"z", c.z}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"residual", c.residual}, {"error_estimate", c.error_estimate}};
}

void cmd_verify_example(Context& ctx) {
    const Request& r = ctx.r;
    if (r.example < 1 || r.example > 15) throw UsageError("example index must be in 1..15");
    ctx.inputs["example"] = r.example;
    Params p = example_spec(r.example).params;
    if (r.a || r.b || r.c) p = need_params(ctx);
    std::vector<cplx> grid = default_z_grid();
    if (auto z = opt_z(ctx)) grid = {*z};
    ctx.inputs["tol"] = r.tol;
    const ExampleReport rep = verify_example(r.example, p, grid, r.tol);
    json rows = json::array();
    double err = 0;
    int nodes = 0;
    for (const auto& row : rep.rows) {
        rows.push_back({{"z", cjson(row.z)},
                        {"representation", cjson(row.representation)},
                        {"direct", cjson(row.direct)},
                        {"rel_error", row.rel_error},
                        {"error_estimate", row.error_estimate}});
        err = std::max(err, row.error_estimate);
        nodes += row.nodes;
    }
    ctx.result = {{"index", rep.index},
                  {"params", {{"a", p.a}, {"b", p.b}, {"c", p.c}}},
                  {"shifts", {{"n1", rep.shifts.n1}, {"n2", rep.shifts.n2}, {"m", rep.shifts.m}}},
                  {"N", rep.N},
                  {"Q", poly_json(rep.Q)},
                  {"runckel", to_string(rep.runckel)},
                  {"rows", rows},
                  {"max_rel_error", rep.max_rel_error},
                  {"bp_formula_deviation", rep.bp_formula_deviation},
                  {"q_tail_ratio", rep.q_tail_ratio}};
    if (rep.identity) ctx.result["identity"] = identity_json(*rep.identity);
    ctx.diagnostics["error_estimate"] = err;
    ctx.diagnostics["nodes"] = nodes;
}

void cmd_moments(Context& ctx) {
    const Params p = need_params(ctx);
    const Shifts s = need_shifts(ctx);
    const Request& r = ctx.r;
    std::vector<Moment> which;
    if (r.which == "all") which = {Moment::z0, Moment::z1, Moment::z01};
    else if (r.which == "z0") which = {Moment::z0};
    else if (r.which == "z1") which = {Moment::z1};
    else if (r.which == "z01") which = {Moment::z01};
    else throw UsageError("--which must be z0, z1, z01 or all");
    ctx.inputs["which"] = r.which;
    ctx.inputs["tol"] = r.tol;
    const Representation rep = build_representation(p, s);
    double err = 0;
    for (Moment m : which) {
        try {
            const MomentCheck mc = moment_identity_check(rep, m, std::min(r.tol, 1e-10));
            const double scale = std::max(std::abs(mc.rhs), 1e-300);
            ctx.result[to_string(m)] = {{"lhs", mc.lhs}, {"rhs", mc.rhs}, {"rel_error", std::abs(mc.lhs - mc.rhs) / scale}};
            err = std::max(err, mc.lhs_error);
        } catch (const Error& e) {
            if (which.size() == 1 || e.kind() != "PreconditionFailed") throw;
            ctx.warn(std::string(to_string(m)) + " skipped: " + e.what());
        }
    }
    ctx.diagnostics["error_estimate"] = err;
}

void dispatch(Context& ctx) {
    const std::string& c = ctx.r.command;
    if (ctx.r.format == Format::csv && c != "boundary" && c != "cfrac")
        throw UsageError("--format csv is available for boundary and cfrac only");
    if (c == "eval-ratio") return cmd_eval_ratio(ctx);
    if (c == "eval-2f1") return cmd_eval_2f1(ctx);
    if (c == "cfrac") return cmd_cfrac(ctx);
    if (c == "classify") return cmd_classify(ctx);
    if (c == "runckel") return cmd_runckel(ctx);
    if (c == "boundary") return cmd_boundary(ctx);
    if (c == "integral-rep") return cmd_integral_rep(ctx);
    if (c == "verify-example") return cmd_verify_example(ctx);
    if (c == "moments") return cmd_moments(ctx);
    throw UsageError("unknown command " + c);
}

} // namespace

int run(const Request& r, std::ostream& out, std::ostream& err) {
    Context ctx{r, json::object(), json::object(),
                {{"error_estimate", nullptr}, {"nodes", nullptr}, {"warnings", json::array()}}, {}};
    json doc = {{"command", r.command}};
    int code = 0;
    try {
        dispatch(ctx);
    } catch (const UsageError&) {
        throw;
    } catch (const Error& e) {
        code = kPreconditionKinds.count(e.kind()) ? 2 : 1;
        doc["error"] = {{"kind", e.kind()}, {"message", e.what()}};
        err << "grl: " << e.what() << "\n";
    } catch (const std::exception& e) {
        code = 1;
        doc["error"] = {{"kind", "InternalError"}, {"message", e.what()}};
        err << "grl: internal error: " << e.what() << "\n";
    }
    doc["inputs"] = ctx.inputs;
    if (code == 0) {
        if (r.format == Format::csv) {
            if (r.output.empty()) {
                out << ctx.csv;
                return 0;
            }
            std::ofstream f(r.output);
            if (!f || !(f << ctx.csv) || !f.flush()) {
                doc["error"] = {{"kind", "IOError"}, {"message", "cannot write " + r.output}};
                err << "grl: cannot write " << r.output << "\n";
                out << doc.dump(2) << "\n";
                return 1;
            }
            const auto rows = std::count(ctx.csv.begin(), ctx.csv.end(), '\n') - 1;
            ctx.result["csv"] = {{"path", r.output}, {"rows", rows}};
        }
        doc["result"] = ctx.result;
        doc["diagnostics"] = ctx.diagnostics;
    }
    out << doc.dump(2) << "\n";
    return code;
}

} // namespace grl::cli
