#include "commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

constexpr int kUsage = 64;

void add_common(CLI::App* sub, grl::cli::Request& r, std::string& format) {
    sub->add_option("--a", r.a, "parameter a");
    sub->add_option("--b", r.b, "parameter b");
    sub->add_option("--c", r.c, "parameter c");
    sub->add_option("--n1", r.n1, "shift of a");
    sub->add_option("--n2", r.n2, "shift of b");
    sub->add_option("--m", r.m, "shift of c");
    sub->add_option("--z-re", r.z_re, "real part of z");
    sub->add_option("--z-im", r.z_im, "imaginary part of z");
    sub->add_option("--tol", r.tol, "tolerance (default 1e-10 or $GRL_TOL)");
    sub->add_option("--max-nodes", r.max_nodes, "largest global quadrature rule");
    sub->add_option("--seed", r.seed, "seed for random point sets");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

void check_finite(const grl::cli::Request& r) {
    auto chk = [](const std::optional<double>& v, const char* name) {
        if (v && !std::isfinite(*v)) throw grl::cli::UsageError(std::string("--") + name + " must be finite");
    };
    chk(r.a, "a");
    chk(r.b, "b");
    chk(r.c, "c");
    chk(r.z_re, "z-re");
    chk(r.z_im, "z-im");
    chk(r.x, "x");
    chk(r.x_from, "x-from");
    chk(r.x_to, "x-to");
    if (!std::isfinite(r.tol) || !(r.tol > 0)) throw grl::cli::UsageError("--tol must be a positive finite number");
    if (r.max_nodes < 16 || r.max_nodes > 512) throw grl::cli::UsageError("--max-nodes must be in 16..512");
}

} // namespace

int main(int argc, char** argv) {
    grl::cli::Request r;
    if (const char* env = std::getenv("GRL_TOL")) {
        try {
            r.tol = std::stod(env);
        } catch (const std::exception&) {
            std::cerr << "grl: GRL_TOL is not a number: " << env << "\n";
            return kUsage;
        }
    }
    std::string format = "json";

    CLI::App app{"Ratios of Gauss hypergeometric functions with integer shifts"};
    app.require_subcommand(1);
    auto sub = [&](const char* name, const char* help) {
        CLI::App* s = app.add_subcommand(name, help);
        add_common(s, r, format);
        return s;
    };
    sub("eval-ratio", "R(z) = 2F1(a+n1,b+n2;c+m;z)/2F1(a,b;c;z)")->add_option("--bank", r.bank, "upper or lower");
    sub("eval-2f1", "2F1(a,b;c;z)")->add_option("--bank", r.bank, "upper or lower");
    CLI::App* cf = sub("cfrac", "Gauss continued fraction coefficients and value");
    cf->add_option("--kind", r.kind, "011 or 010");
    cf->add_option("--count", r.count, "number of coefficients after alpha_0");
    sub("classify", "Nevanlinna indices of R_{0,1,1}")->add_flag("--pick-check", r.pick_check, "run the Pick oracle");
    sub("runckel", "zero-free conditions I-V");
    CLI::App* bd = sub("boundary", "density of the ratio on the cut");
    bd->add_option("--x", r.x, "single point x > 1");
    bd->add_option("--x-from", r.x_from, "range start");
    bd->add_option("--x-to", r.x_to, "range end");
    bd->add_option("--points", r.points, "number of points in the range");
    bd->add_option("--output", r.output, "CSV destination");
    cf->add_option("--output", r.output, "CSV destination");
    sub("integral-rep", "evaluate the integral representation");
    sub("verify-example", "reproduce one of the 15 examples")->add_option("index", r.example, "1..15")->required();
    sub("moments", "moment identities at z = 0 and z = 1")->add_option("--which", r.which, "z0, z1, z01 or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    r.command = app.get_subcommands().front()->get_name();
    r.format = format == "csv" ? grl::cli::Format::csv : grl::cli::Format::json;
    try {
        check_finite(r);
        return grl::cli::run(r, std::cout, std::cerr);
    } catch (const grl::cli::UsageError& e) {
        std::cerr << "grl: " << e.what() << "\n";
        return kUsage;
    }
}
