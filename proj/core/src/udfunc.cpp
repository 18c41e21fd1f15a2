#include "fpadic/udfunc.hpp"

#include <algorithm>

namespace fpadic {

namespace {

// Exact comparison of n1*p^{-v1} vs n2*p^{-v2} for small nonnegative n.
// Returns true when the left side is larger.
bool weighted_norm_greater(long n1, long v1, long n2, long v2, long p) {
    if (n1 == 0) return false;
    if (n2 == 0) return true;
    mpz_class lhs(n1), rhs(n2);
    mpz_class pz(p);
    if (v2 > v1) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(v2 - v1));
        lhs *= f;
    } else if (v1 > v2) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(v1 - v2));
        rhs *= f;
    }
    return lhs > rhs;
}

// max_{n in [lo, count)} n*|a_n|_p as (n, valuation), or n = 0 when empty/zero.
std::pair<long, long> max_weighted_tail(const std::vector<Scalar>& coeffs,
                                        int lo, long p) {
    long best_n = 0;
    long best_v = 0;
    for (int n = std::max(lo, 0); n < static_cast<int>(coeffs.size()); ++n) {
        const Scalar& a = coeffs[static_cast<size_t>(n)];
        if (n == 0 || a.is_zero()) continue;
        if (weighted_norm_greater(n, a.valuation(), best_n, best_v, p)) {
            best_n = n;
            best_v = a.valuation();
        }
    }
    return {best_n, best_v};
}

} // namespace

MahlerFunction::MahlerFunction(std::vector<Scalar> coefficients,
                               const Context& ctx)
    : ctx_(ctx), coeffs_(std::move(coefficients)) {
    for (const Scalar& a : coeffs_) {
        if (a.context() != ctx_) throw Error("coefficient context mismatch");
    }
    auto [n, v] = max_weighted_tail(coeffs_, 1, ctx_.p());
    decay_witness_ =
        n == 0 ? 0.0 : static_cast<double>(n) * norm_from_valuation(ctx_.p(), v);
}

const Context& UDFunction::context() const {
    return std::visit(
        [](const auto& n) -> const Context& {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Polynomial> ||
                          std::is_same_v<T, MahlerFunction>) {
                return n.context();
            } else if constexpr (std::is_same_v<T, Scaled>) {
                return n.f->context();
            } else {
                return n.f->context();
            }
        },
        node_);
}

Scalar binomial_value(const Scalar& x, int n) {
    const Context& ctx = x.context();
    Scalar acc = Scalar::one(ctx);
    for (int j = 0; j < n; ++j) {
        acc = acc * (x - Scalar::from_integer(j, ctx)) /
              Scalar::from_integer(j + 1, ctx);
    }
    return acc;
}

Scalar evaluate(const UDFunction& f, const Scalar& x) {
    if (!x.is_zero() && x.valuation() < 0) {
        throw Error("evaluation point lies outside Z_p");
    }
    return std::visit(
        [&](const auto& n) -> Scalar {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Polynomial>) {
                return n(x);
            } else if constexpr (std::is_same_v<T, MahlerFunction>) {
                Scalar acc = Scalar::zero(n.context());
                for (int i = 0; i < n.count(); ++i) {
                    const Scalar& a = n.coefficients()[static_cast<size_t>(i)];
                    if (a.is_zero()) continue;
                    acc = acc + a * binomial_value(x, i);
                }
                return acc;
            } else if constexpr (std::is_same_v<T, UDFunction::Scaled>) {
                return n.alpha * evaluate(*n.f, x);
            } else {
                return evaluate(*n.f, x) + evaluate(*n.g, x);
            }
        },
        f.node());
}

int mahler_length(const UDFunction& f) {
    return std::visit(
        [](const auto& n) -> int {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Polynomial>) {
                return n.degree() + 1;
            } else if constexpr (std::is_same_v<T, MahlerFunction>) {
                return n.count();
            } else if constexpr (std::is_same_v<T, UDFunction::Scaled>) {
                return mahler_length(*n.f);
            } else {
                return std::max(mahler_length(*n.f), mahler_length(*n.g));
            }
        },
        f.node());
}

std::vector<Scalar> mahler_coeffs(const UDFunction& f, int count) {
    if (count < 1) throw Error("mahler_coeffs requires count >= 1");
    const Context& ctx = f.context();
    // Forward-difference table over f(0..count-1).
    std::vector<Scalar> row;
    row.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        row.push_back(evaluate(f, Scalar::from_integer(k, ctx)));
    }
    std::vector<Scalar> out;
    out.reserve(static_cast<size_t>(count));
    out.push_back(row[0]);
    for (int step = 1; step < count; ++step) {
        for (size_t i = 0; i + 1 < row.size(); ++i) {
            row[i] = row[i + 1] - row[i];
        }
        row.pop_back();
        out.push_back(row[0]);
    }
    return out;
}

Polynomial to_polynomial(const UDFunction& f) {
    return std::visit(
        [](const auto& n) -> Polynomial {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Polynomial>) {
                return n;
            } else if constexpr (std::is_same_v<T, MahlerFunction>) {
                Polynomial acc(n.context());
                for (int i = 0; i < n.count(); ++i) {
                    const Scalar& a = n.coefficients()[static_cast<size_t>(i)];
                    if (a.is_zero()) continue;
                    acc = acc + Polynomial::binomial_basis(i, n.context()).scaled(a);
                }
                return acc;
            } else if constexpr (std::is_same_v<T, UDFunction::Scaled>) {
                return to_polynomial(*n.f).scaled(n.alpha);
            } else {
                return to_polynomial(*n.f) + to_polynomial(*n.g);
            }
        },
        f.node());
}

std::pair<Polynomial, double> truncate(const MahlerFunction& f, int m) {
    if (m < 0 || m > f.count()) {
        throw Error("truncation index outside stored coefficient range");
    }
    const Context& ctx = f.context();
    Polynomial head(ctx);
    for (int i = 0; i < m; ++i) {
        const Scalar& a = f.coefficients()[static_cast<size_t>(i)];
        if (a.is_zero()) continue;
        head = head + Polynomial::binomial_basis(i, ctx).scaled(a);
    }
    auto [n, v] = max_weighted_tail(f.coefficients(), m, ctx.p());
    double bound =
        n == 0 ? 0.0 : static_cast<double>(n) * norm_from_valuation(ctx.p(), v);
    return {std::move(head), bound};
}

Scalar difference_quotient(const UDFunction& f, const Scalar& m,
                           const Scalar& x) {
    if (m.is_zero()) throw Error("difference quotient at m = 0");
    if ((!x.is_zero() && x.valuation() < 0) || m.valuation() < 0) {
        throw Error("difference quotient arguments outside Z_p");
    }
    return (evaluate(f, x + m) - evaluate(f, x)) / m;
}

double sup_norm(const UDFunction& f) {
    std::vector<Scalar> a = mahler_coeffs(f, std::max(mahler_length(f), 1));
    long best_v = 0;
    bool any = false;
    for (const Scalar& c : a) {
        if (c.is_zero()) continue;
        if (!any || c.valuation() < best_v) {
            best_v = c.valuation();
            any = true;
        }
    }
    if (!any) return 0.0;
    return norm_from_valuation(f.context().p(), best_v);
}

double lip_norm_estimate(const UDFunction& f, int depth) {
    if (depth < 1) throw Error("lip_norm_estimate requires depth >= 1");
    const Context& ctx = f.context();
    long p = ctx.p();

    bool nonzero = false;
    long best_v = 0; // running max over |quotient|_p as p^{-best_v}
    auto consider = [&](const Scalar& q) {
        if (q.is_zero()) return;
        if (!nonzero || q.valuation() < best_v) {
            best_v = q.valuation();
            nonzero = true;
        }
    };

    long points = 1;
    for (int i = 0; i < depth; ++i) points *= p;
    for (long xi = 0; xi < points; ++xi) {
        Scalar x = Scalar::from_integer(xi, ctx);
        for (int j = 0; j < depth; ++j) {
            for (long u = 1; u < p; ++u) {
                Scalar m = Scalar::from_integer(u, ctx) * Scalar::p_power(j, ctx);
                consider(difference_quotient(f, m, x));
            }
        }
    }
    double quotient_part = nonzero ? norm_from_valuation(p, best_v) : 0.0;
    return std::max(sup_norm(f), quotient_part);
}

UDFunction parse_function(std::string_view literal, const Context& ctx) {
    auto parse_coeffs = [&](std::string_view body) {
        std::vector<Scalar> out;
        while (true) {
            size_t comma = body.find(',');
            std::string_view tok =
                comma == std::string_view::npos ? body : body.substr(0, comma);
            out.push_back(parse_scalar(tok, ctx));
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
        return out;
    };
    constexpr std::string_view kPoly = "poly:";
    constexpr std::string_view kMahler = "mahler:";
    if (literal.substr(0, kPoly.size()) == kPoly) {
        return UDFunction(Polynomial(parse_coeffs(literal.substr(kPoly.size())), ctx));
    }
    if (literal.substr(0, kMahler.size()) == kMahler) {
        return UDFunction(
            MahlerFunction(parse_coeffs(literal.substr(kMahler.size())), ctx));
    }
    throw ParseError("function literal must start with 'poly:' or 'mahler:', got '" +
                     std::string(literal) + "'");
}

} // namespace fpadic
