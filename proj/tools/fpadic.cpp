// Command-line surface for the fermionic p-adic measure library. Every
// subcommand prints deterministically (no timestamps, fixed field order),
// so outputs are directly usable as golden files.
//
// Exit codes: 0 computation ok / all checks pass, 1 a check failed,
// 2 usage or validation error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fpadic/checks.hpp"
#include "fpadic/table_io.hpp"

namespace {

using namespace fpadic;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    long p = 0;
    int prec = 24;
    std::string format = "human";
    std::string f_literal;
    std::string g_literal;
    std::string P_literal;
    std::string table_path;
    std::string cyl_literal;
    std::string emit_table_path;
    int emit_depth = 3;
    int upto = 0;
    int m = 0;
    long point = 0;
    int level = 0;
    int slack = 1;
    long budget = kDefaultSummationBudget;
};

bool json_mode(const Options& o) { return o.format == "json"; }

Cylinder parse_cylinder(const std::string& text, const Context& ctx) {
    size_t comma = text.find(',');
    if (comma == std::string::npos) {
        throw ParseError("cylinder literal must be 'a,n', got '" + text + "'");
    }
    long a = 0;
    int n = 0;
    try {
        a = std::stol(text.substr(0, comma));
        n = std::stoi(text.substr(comma + 1));
    } catch (const std::exception&) {
        throw ParseError("cylinder literal must be 'a,n', got '" + text + "'");
    }
    return Cylinder(a, n, ctx);
}

std::string scalar_json(const Scalar& s) {
    std::string out = "{\"p\":" + std::to_string(s.context().p()) +
                      ",\"N\":" + std::to_string(s.context().precision());
    if (s.is_zero()) {
        out += ",\"zero\":true";
    } else {
        out += ",\"zero\":false,\"v\":" + std::to_string(s.valuation()) +
               ",\"u\":\"" + s.unit().get_str() + "\"";
    }
    out += ",\"canonical\":\"" + s.to_canonical_string() + "\"}";
    return out;
}

void print_scalar(const Scalar& s, const Options& o) {
    if (json_mode(o)) {
        std::cout << scalar_json(s) << "\n";
    } else {
        std::cout << s.to_digit_string() << "\n";
    }
}

// Builds the measure selected by --f and/or --table. With both present the
// result is the sum of the induced measure and the loaded table.
Measure make_measure(const Options& o, const Context& ctx) {
    std::optional<Measure> induced;
    std::optional<Measure> loaded;
    if (!o.f_literal.empty()) {
        induced = Measure::induced(parse_function(o.f_literal, ctx));
    }
    if (!o.table_path.empty()) {
        LoadedTable t = read_table_file(o.table_path);
        if (t.ctx != ctx) {
            throw Error("table context (p=" + std::to_string(t.ctx.p()) +
                        ", N=" + std::to_string(t.ctx.precision()) +
                        ") does not match the requested context");
        }
        loaded = std::move(t.measure);
    }
    if (induced && loaded) {
        return measure_combine(Scalar::one(ctx), *induced, Scalar::one(ctx),
                               *loaded);
    }
    if (induced) return *induced;
    if (loaded) return *loaded;
    throw Error("no measure given: use --f and/or --table");
}

int emit_report(const CheckReport& r, const Options& o) {
    if (json_mode(o)) {
        std::cout << r.to_json() << "\n";
    } else {
        std::cout << r.to_text();
    }
    switch (r.status) {
        case CheckStatus::pass: return kExitOk;
        case CheckStatus::fail: return kExitCheckFailed;
        case CheckStatus::precondition: return kExitUsage;
    }
    return kExitUsage;
}

int run_euler(const Options& o) {
    Context ctx(o.p, o.prec);
    for (int k = 0; k <= o.upto; ++k) {
        Scalar e = euler_number(k, ctx);
        if (json_mode(o)) {
            std::cout << "{\"k\":" << k << ",\"E\":" << scalar_json(e) << "}\n";
        } else {
            std::cout << "E_" << k << " = " << e.to_digit_string() << "\n";
        }
    }
    return kExitOk;
}

int run_integrate(const Options& o) {
    Context ctx(o.p, o.prec);
    print_scalar(integrate(parse_function(o.f_literal, ctx)), o);
    return kExitOk;
}

int run_sum(const Options& o) {
    Context ctx(o.p, o.prec);
    print_scalar(fermionic_sum(parse_function(o.f_literal, ctx), o.m, o.budget), o);
    return kExitOk;
}

int run_measure(const Options& o) {
    Context ctx(o.p, o.prec);
    Measure mu = make_measure(o, ctx);
    if (!o.emit_table_path.empty()) {
        write_table_file(o.emit_table_path, mu, o.emit_depth);
    }
    print_scalar(measure_value(mu, parse_cylinder(o.cyl_literal, ctx)), o);
    return kExitOk;
}

int run_derivative(const Options& o) {
    Context ctx(o.p, o.prec);
    Measure mu = make_measure(o, ctx);
    auto [value, bound] = rn_derivative(mu, o.point, o.level);
    if (json_mode(o)) {
        std::cout << "{\"value\":" << scalar_json(value) << ",\"error_bound\":"
                  << bound << "}\n";
    } else {
        std::cout << "value = " << value.to_digit_string() << "\n";
        std::cout << "error_bound = " << bound << "\n";
    }
    return kExitOk;
}

int run_check_theorem1(const Options& o) {
    Context ctx(o.p, o.prec);
    Polynomial P = to_polynomial(parse_function(o.P_literal, ctx));
    UDFunction g = parse_function(o.g_literal, ctx);
    return emit_report(verify_theorem1(P, g, o.level, o.slack), o);
}

int run_check_congruence(const Options& o) {
    Context ctx(o.p, o.prec);
    Polynomial P = to_polynomial(parse_function(o.f_literal, ctx));
    return emit_report(congruence_check(P, parse_cylinder(o.cyl_literal, ctx)), o);
}

int run_check_additivity(const Options& o) {
    Context ctx(o.p, o.prec);
    Measure mu = make_measure(o, ctx);
    return emit_report(additivity_check(mu, parse_cylinder(o.cyl_literal, ctx)), o);
}

int run_check_strong(const Options& o) {
    Context ctx(o.p, o.prec);
    Measure mu = make_measure(o, ctx);
    return emit_report(strong_delta(mu, o.level), o);
}

int run_check_decompose(const Options& o) {
    Context ctx(o.p, o.prec);
    Measure mu = make_measure(o, ctx);
    Decomposition d = decompose(mu, o.level);
    return emit_report(d.report, o);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fermionic p-adic invariant measures on Z_p: exact "
                 "computation and congruence-level verification"};
    app.require_subcommand(1);

    Options o;
    app.add_option("--format", o.format, "output mode")
        ->check(CLI::IsMember({"human", "json"}));

    auto add_common = [&](CLI::App* cmd) {
        cmd->fallthrough();
        cmd->add_option("--p", o.p, "odd prime p")->required();
        cmd->add_option("--prec", o.prec, "working precision (p-adic digits)");
    };

    CLI::App* euler = app.add_subcommand("euler", "print Euler numbers E_0..E_K");
    add_common(euler);
    euler->add_option("--upto", o.upto, "largest index K")->required();

    CLI::App* integ = app.add_subcommand("integrate",
                                         "fermionic invariant integral of f");
    add_common(integ);
    integ->add_option("--f", o.f_literal, "function literal")->required();

    CLI::App* sum = app.add_subcommand("sum", "alternating partial sum over [0, p^m)");
    add_common(sum);
    sum->add_option("--f", o.f_literal, "function literal")->required();
    sum->add_option("--m", o.m, "summation level")->required();
    sum->add_option("--budget", o.budget, "term budget");

    CLI::App* meas = app.add_subcommand("measure", "value of mu_{f,-1} on a cylinder");
    add_common(meas);
    meas->add_option("--f", o.f_literal, "function literal");
    meas->add_option("--table", o.table_path, "measure table file");
    meas->add_option("--cyl", o.cyl_literal, "cylinder 'a,n'")->required();
    meas->add_option("--emit-table", o.emit_table_path,
                     "also write the measure's level table to this file");
    meas->add_option("--depth", o.emit_depth, "depth for --emit-table");

    CLI::App* deriv = app.add_subcommand(
        "derivative", "Radon-Nikodym derivative estimate with error bound");
    add_common(deriv);
    deriv->add_option("--f", o.f_literal, "function literal");
    deriv->add_option("--table", o.table_path, "measure table file");
    deriv->add_option("--point", o.point, "integer point a")->required();
    deriv->add_option("--level", o.level, "cylinder level n")->required();

    CLI::App* check = app.add_subcommand("check", "run a verification");
    check->require_subcommand(1);
    check->fallthrough();

    CLI::App* t1 = check->add_subcommand("theorem1",
                                         "integral identity for mu_{P,-1}");
    add_common(t1);
    t1->add_option("--P", o.P_literal, "polynomial literal")->required();
    t1->add_option("--g", o.g_literal, "function literal")->required();
    t1->add_option("--level", o.level, "Riemann-sum level")->required();
    t1->add_option("--slack", o.slack, "congruence slack digits");

    CLI::App* cong = check->add_subcommand("congruence",
                                           "mu_{P,-1} = (-1)^a P(a) mod p^n");
    add_common(cong);
    cong->add_option("--f", o.f_literal, "polynomial literal")->required();
    cong->add_option("--cyl", o.cyl_literal, "cylinder 'a,n'")->required();

    CLI::App* add = check->add_subcommand("additivity", "child-sum identity");
    add_common(add);
    add->add_option("--f", o.f_literal, "function literal");
    add->add_option("--table", o.table_path, "measure table file");
    add->add_option("--cyl", o.cyl_literal, "cylinder 'a,n'")->required();

    CLI::App* strong = check->add_subcommand("strong", "strong-measure delta fit");
    add_common(strong);
    strong->add_option("--f", o.f_literal, "function literal");
    strong->add_option("--table", o.table_path, "measure table file");
    strong->add_option("--levels", o.level, "deltas for levels 0..n-1")->required();

    CLI::App* dec = check->add_subcommand("decompose",
                                          "split into induced part plus remainder");
    add_common(dec);
    dec->add_option("--f", o.f_literal, "function literal");
    dec->add_option("--table", o.table_path, "measure table file");
    dec->add_option("--level", o.level, "derivative table level")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (euler->parsed()) return run_euler(o);
        if (integ->parsed()) return run_integrate(o);
        if (sum->parsed()) return run_sum(o);
        if (meas->parsed()) return run_measure(o);
        if (deriv->parsed()) return run_derivative(o);
        if (check->parsed()) {
            if (t1->parsed()) return run_check_theorem1(o);
            if (cong->parsed()) return run_check_congruence(o);
            if (add->parsed()) return run_check_additivity(o);
            if (strong->parsed()) return run_check_strong(o);
            if (dec->parsed()) return run_check_decompose(o);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
