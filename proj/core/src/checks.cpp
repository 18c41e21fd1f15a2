#include "fpadic/checks.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace fpadic {

namespace {

constexpr long kZeroDelta = std::numeric_limits<long>::max();

long pow_long(long p, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > std::numeric_limits<long>::max() / p) {
            throw Error("level too deep for this machine");
        }
        r *= p;
    }
    return r;
}

std::string format_double(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

std::string witness_string(const Cylinder& c) {
    return std::to_string(c.base) + "," + std::to_string(c.level);
}

// Dispatch table for rendering; text and JSON walk the same field order.
struct FieldWriter {
    std::ostringstream text;
    std::ostringstream json;
    bool first = true;

    void raw(const std::string& key, const std::string& text_value,
             const std::string& json_value) {
        text << key << ": " << text_value << "\n";
        json << (first ? "" : ",") << "\"" << key << "\":" << json_value;
        first = false;
    }
    void str(const std::string& key, const std::string& v) {
        raw(key, v, "\"" + json_escape(v) + "\"");
    }
    void num(const std::string& key, const std::string& v) { raw(key, v, v); }
};

void write_fields(const CheckReport& r, FieldWriter& w) {
    w.str("check", r.name);
    w.num("p", std::to_string(r.p));
    w.num("N", std::to_string(r.precision));
    for (const auto& [k, v] : r.params) w.str(k, v);
    const char* status = r.status == CheckStatus::pass     ? "pass"
                         : r.status == CheckStatus::fail   ? "fail"
                                                           : "precondition-violated";
    w.str("status", status);
    for (const auto& [k, v] : r.constants) w.num(k, format_double(v));
    if (r.witness) w.str("witness", witness_string(*r.witness));
    if (r.residual_norm) w.num("residual_norm", format_double(*r.residual_norm));
    if (!r.levels.empty()) {
        std::string t, j;
        for (size_t i = 0; i < r.levels.size(); ++i) {
            if (i) {
                t += ",";
                j += ",";
            }
            t += std::to_string(r.levels[i]);
            j += std::to_string(r.levels[i]);
        }
        w.raw("levels", t, "[" + j + "]");
    }
    if (!r.note.empty()) w.str("note", r.note);
}

} // namespace

std::string CheckReport::to_text() const {
    FieldWriter w;
    write_fields(*this, w);
    return w.text.str();
}

std::string CheckReport::to_json() const {
    FieldWriter w;
    write_fields(*this, w);
    return "{" + w.json.str() + "}";
}

std::string to_literal(const Polynomial& f) {
    std::string out = "poly:";
    if (f.is_zero()) return out + "0";
    for (int k = 0; k <= f.degree(); ++k) {
        if (k) out += ",";
        out += f.coefficient(k).to_rational_string();
    }
    return out;
}

StrongFit fit_strong_constant(const Measure& mu, int max_delta_level) {
    if (max_delta_level < 0) throw Error("negative strong-fit level");
    const Context& ctx = mu.context();
    if (mu.max_level() < max_delta_level + 1) {
        throw TableError("strong fit needs level " +
                         std::to_string(max_delta_level + 1) + " but the measure"
                         " is only evaluable to level " +
                         std::to_string(mu.max_level()));
    }
    StrongFit fit;
    long best_ratio = std::numeric_limits<long>::min(); // ratio k - e_k
    for (int k = 0; k <= max_delta_level; ++k) {
        long e = kZeroDelta;
        long worst_base = 0;
        long bases = pow_long(ctx.p(), k);
        long step = bases;
        for (long a = 0; a < bases; ++a) {
            Scalar va = measure_value(mu, Cylinder(a, k, ctx));
            for (long j = 0; j < ctx.p(); ++j) {
                Scalar vb = measure_value(mu, Cylinder(a + j * step, k + 1, ctx));
                if (j % 2 == 1) vb = -vb; // parity of the lift flips the sign
                Scalar d = va - vb;
                if (!d.is_zero() && d.valuation() < e) {
                    e = d.valuation();
                    worst_base = a;
                }
            }
        }
        fit.delta_exponents.push_back(e);
        if (e != kZeroDelta) {
            fit.any_nonzero = true;
            long ratio = k - e; // delta_k * p^k = p^ratio
            if (ratio > best_ratio) {
                best_ratio = ratio;
                fit.worst = Cylinder(worst_base, k, ctx);
                fit.worst_delta = norm_from_valuation(ctx.p(), e);
            }
        }
    }
    // c = max over examined levels of delta_k * p^k.
    if (fit.any_nonzero) fit.c_exponent = best_ratio;

    // Strongness gate: ratios nonincreasing from level 1 on.
    fit.monotone = true;
    for (size_t k = 1; k + 1 < fit.delta_exponents.size(); ++k) {
        long ek = fit.delta_exponents[k];
        long en = fit.delta_exponents[k + 1];
        if (ek == kZeroDelta && en == kZeroDelta) continue;
        if (ek == kZeroDelta) { // zero ratio followed by nonzero
            fit.monotone = false;
            break;
        }
        if (en == kZeroDelta) continue;
        if (static_cast<long>(k) + 1 - en > static_cast<long>(k) - ek) {
            fit.monotone = false;
            break;
        }
    }
    return fit;
}

CheckReport additivity_check(const Measure& mu, const Cylinder& c) {
    const Context& ctx = mu.context();
    CheckReport r;
    r.name = "additivity";
    r.p = ctx.p();
    r.precision = ctx.precision();
    r.params.emplace_back("cylinder", witness_string(c));
    r.levels = {c.level, c.level + 1};

    Scalar lhs = measure_value(mu, c);
    Scalar rhs = Scalar::zero(ctx);
    long step = pow_long(ctx.p(), c.level);
    for (long j = 0; j < ctx.p(); ++j) {
        rhs = rhs + measure_value(mu, Cylinder(c.base + j * step, c.level + 1, ctx));
    }
    Scalar residual = lhs - rhs;
    r.status = residual.is_zero() ? CheckStatus::pass : CheckStatus::fail;
    r.witness = c;
    r.residual_norm = residual.norm();
    return r;
}

CheckReport strong_delta(const Measure& mu, int max_level) {
    if (max_level < 1) throw Error("strong_delta requires max_level >= 1");
    const Context& ctx = mu.context();
    StrongFit fit = fit_strong_constant(mu, max_level - 1);

    CheckReport r;
    r.name = "strong";
    r.p = ctx.p();
    r.precision = ctx.precision();
    r.status = fit.monotone ? CheckStatus::pass : CheckStatus::fail;
    r.constants.emplace_back("c", fit.c(ctx.p()));
    if (fit.worst) {
        r.witness = fit.worst;
        r.residual_norm = fit.worst_delta;
    }
    for (int k = 0; k < max_level; ++k) r.levels.push_back(k);
    return r;
}

std::pair<Scalar, double> rn_derivative(const Measure& mu, long a, int level,
                                        const StrongFit& fit) {
    if (level < 1) throw Error("derivative level must be >= 1");
    if (a < 0) throw Error("derivative point must be a nonnegative integer");
    const Context& ctx = mu.context();
    long modulus = pow_long(ctx.p(), level);
    long base = a % modulus;
    Scalar value = measure_value(mu, Cylinder(base, level, ctx));
    if ((a - base) % 2 != 0) value = -value; // lift to a's parity class
    double bound = fit.any_nonzero
                       ? norm_from_valuation(ctx.p(), level - fit.c_exponent)
                       : 0.0;
    return {value, bound};
}

std::pair<Scalar, double> rn_derivative(const Measure& mu, long a, int level) {
    int fit_levels = std::max(level - 1, 1);
    if (mu.max_level() != std::numeric_limits<int>::max()) {
        fit_levels = std::min(fit_levels, mu.max_level() - 1);
        if (fit_levels < 0) throw TableError("table too shallow to fit a constant");
    }
    return rn_derivative(mu, a, level, fit_strong_constant(mu, fit_levels));
}

CheckReport congruence_check(const Polynomial& P, const Cylinder& c) {
    const Context& ctx = P.context();
    CheckReport r;
    r.name = "congruence";
    r.p = ctx.p();
    r.precision = ctx.precision();
    r.params.emplace_back("P", to_literal(P));
    r.params.emplace_back("cylinder", witness_string(c));
    r.levels = {c.level};

    if (!P.has_integral_coefficients()) {
        r.status = CheckStatus::precondition;
        r.note = "P has a coefficient outside Z_p; the congruence claim "
                 "applies to integral coefficients only";
        return r;
    }
    Measure mu = Measure::induced(UDFunction(P));
    Scalar value = measure_value(mu, c);
    Scalar target = P(Scalar::from_integer(c.base, ctx));
    if (c.base % 2 != 0) target = -target;
    Scalar residual = value - target;
    r.status = congruent(value, target, c.level) ? CheckStatus::pass
                                                 : CheckStatus::fail;
    r.witness = c;
    r.residual_norm = residual.norm();
    return r;
}

Scalar integrate_against(const UDFunction& g, const Measure& mu, int level) {
    if (level < 0) throw Error("negative level");
    const Context& ctx = mu.context();
    if (g.context() != ctx) throw Error("context mismatch");
    Scalar acc = Scalar::zero(ctx);
    long points = pow_long(ctx.p(), level);
    for (long i = 0; i < points; ++i) {
        Scalar gi = evaluate(g, Scalar::from_integer(i, ctx));
        if (gi.is_zero()) continue;
        acc = acc + gi * measure_value(mu, Cylinder(i, level, ctx));
    }
    return acc;
}

namespace {

bool has_integral_mahler_coeffs(const UDFunction& f) {
    for (const Scalar& a : mahler_coeffs(f, std::max(mahler_length(f), 1))) {
        if (!a.is_zero() && a.valuation() < 0) return false;
    }
    return true;
}

} // namespace

CheckReport verify_theorem1(const Polynomial& P, const UDFunction& g,
                            int level, int slack) {
    const Context& ctx = P.context();
    CheckReport r;
    r.name = "theorem1";
    r.p = ctx.p();
    r.precision = ctx.precision();
    r.params.emplace_back("P", to_literal(P));
    r.params.emplace_back("g", to_literal(to_polynomial(g)));
    r.params.emplace_back("level", std::to_string(level));
    r.params.emplace_back("slack", std::to_string(slack));
    for (int k = 0; k < level; ++k) r.levels.push_back(k);

    if (level < 1 || slack < 0 || slack > level) {
        throw Error("theorem1 requires 0 <= slack <= level, level >= 1");
    }
    if (!has_integral_mahler_coeffs(UDFunction(P)) ||
        !has_integral_mahler_coeffs(g)) {
        r.status = CheckStatus::precondition;
        r.note = "P or g takes values outside Z_p";
        return r;
    }

    Measure mu_P = Measure::induced(UDFunction(P));
    Scalar lhs = integrate_against(g, mu_P, level);
    Scalar rhs = integrate(to_polynomial(g) * P);
    bool congruence_ok = congruent(lhs, rhs, level - slack);

    StrongFit fit = fit_strong_constant(mu_P, std::max(level - 1, 0));
    r.status = (congruence_ok && fit.monotone) ? CheckStatus::pass
                                               : CheckStatus::fail;
    r.constants.emplace_back("c", fit.c(ctx.p()));
    r.residual_norm = (lhs - rhs).norm();
    if (fit.worst) r.witness = fit.worst;
    return r;
}

Decomposition decompose(const Measure& mu, int level) {
    const Context& ctx = mu.context();
    if (level < 1) throw Error("decomposition level must be >= 1");
    if (mu.max_level() < level) {
        throw TableError("measure not evaluable to level " + std::to_string(level));
    }

    // Strong-measure precondition.
    StrongFit fit = fit_strong_constant(mu, level - 1);
    if (!fit.monotone) {
        throw Error("input measure fails the strong-measure fit; "
                    "decomposition needs a strongly fermionic input");
    }

    // Certified digits of the level-L derivative table.
    long c_exp = fit.any_nonzero ? std::max(fit.c_exponent, 0L) : 0L;
    int certified = level - static_cast<int>(c_exp);
    if (certified < 1) {
        throw Error("derivative table not stabilized at level " +
                    std::to_string(level));
    }

    // Derivative table h(a) and the associated function table
    // g(a) = (-1)^a h(a), a < p^L.
    long points = pow_long(ctx.p(), level);
    std::vector<Scalar> g_table;
    g_table.reserve(static_cast<size_t>(points));
    for (long a = 0; a < points; ++a) {
        Scalar h = measure_value(mu, Cylinder(a, level, ctx));
        if (a % 2 != 0) h = -h;
        if (!h.is_zero() && h.valuation() < 0) {
            throw Error("derivative table leaves Z_p; cannot interpolate");
        }
        g_table.push_back(std::move(h));
    }

    // Mahler coefficients of the table function, truncated to the certified
    // precision: each forward difference is replaced by its balanced
    // residue mod p^M, which drops the finite-level correction terms.
    std::vector<Scalar> coeffs;
    coeffs.reserve(g_table.size());
    {
        std::vector<Scalar> row = g_table;
        for (size_t step = 0; step < g_table.size(); ++step) {
            coeffs.push_back(
                Scalar::from_integer(row[0].balanced_residue(certified), ctx));
            for (size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
            row.pop_back();
        }
    }
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.empty()) coeffs.push_back(Scalar::zero(ctx));

    Measure mu1 = Measure::induced(UDFunction(MahlerFunction(coeffs, ctx)));
    Measure mu2 = measure_combine(Scalar::one(ctx), mu,
                                  -Scalar::one(ctx), mu1);

    // Report: exact pointwise sum, remainder boundedness K, remainder
    // decay C over every cylinder up to the decomposition level.
    CheckReport r;
    r.name = "decompose";
    r.p = ctx.p();
    r.precision = ctx.precision();
    r.params.emplace_back("level", std::to_string(level));
    r.params.emplace_back("certified_digits", std::to_string(certified));
    for (int k = 0; k <= level; ++k) r.levels.push_back(k);

    bool sum_exact = true;
    bool k_nonzero = false;
    long k_exp = 0;           // K = p^{-k_exp}
    bool decay_nonzero = false;
    long decay_ratio = 0;     // C = p^{decay_ratio}
    std::optional<Cylinder> worst;
    double worst_norm = 0.0;
    for (int n = 0; n <= level; ++n) {
        long bases = pow_long(ctx.p(), n);
        for (long a = 0; a < bases; ++a) {
            Cylinder cyl(a, n, ctx);
            Scalar total = measure_value(mu, cyl);
            Scalar part1 = measure_value(mu1, cyl);
            Scalar part2 = measure_value(mu2, cyl);
            if (total != part1 + part2) sum_exact = false;
            if (!part2.is_zero()) {
                long v = part2.valuation();
                if (!k_nonzero || v < k_exp) {
                    k_exp = v;
                    k_nonzero = true;
                    worst = cyl;
                    worst_norm = part2.norm();
                }
                if (!decay_nonzero || n - v > decay_ratio) {
                    decay_nonzero = true;
                    decay_ratio = n - v;
                }
            }
        }
    }

    r.status = sum_exact ? CheckStatus::pass : CheckStatus::fail;
    r.constants.emplace_back("c", fit.c(ctx.p()));
    r.constants.emplace_back(
        "K", k_nonzero ? norm_from_valuation(ctx.p(), k_exp) : 0.0);
    r.constants.emplace_back(
        "C", decay_nonzero ? norm_from_valuation(ctx.p(), -decay_ratio) : 0.0);
    if (worst) {
        r.witness = worst;
        r.residual_norm = worst_norm;
    }
    return Decomposition{std::move(mu1), std::move(mu2), std::move(r)};
}

} // namespace fpadic
