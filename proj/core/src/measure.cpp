#include "fpadic/measure.hpp"

#include <algorithm>

namespace fpadic {

namespace {

constexpr long kZeroDelta = std::numeric_limits<long>::max();

long pow_long(long p, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > std::numeric_limits<long>::max() / p) {
            throw Error("cylinder level too deep for this machine");
        }
        r *= p;
    }
    return r;
}

} // namespace

Cylinder::Cylinder(long base_, int level_, const Context& ctx_)
    : base(base_), level(level_), ctx(ctx_) {
    if (level < 0) throw Error("cylinder level must be nonnegative");
    if (base < 0 || base >= pow_long(ctx.p(), level)) {
        throw Error("cylinder base " + std::to_string(base) +
                    " outside [0, p^" + std::to_string(level) + ")");
    }
}

Measure Measure::induced(UDFunction f) {
    Context ctx = f.context();
    Polynomial poly = to_polynomial(f);
    return Measure(ctx, Node(FunctionInduced{std::move(f), std::move(poly)}));
}

Measure Measure::tabulated(std::vector<std::vector<Scalar>> level_values,
                           const Context& ctx) {
    if (level_values.empty()) throw TableError("empty measure table");
    long expected = 1;
    for (size_t n = 0; n < level_values.size(); ++n) {
        if (static_cast<long>(level_values[n].size()) != expected) {
            throw TableError("level " + std::to_string(n) + " holds " +
                             std::to_string(level_values[n].size()) +
                             " values, expected p^n = " + std::to_string(expected));
        }
        for (const Scalar& v : level_values[n]) {
            if (v.context() != ctx) throw TableError("table value context mismatch");
        }
        expected *= ctx.p();
    }

    // Weak-measure Cauchy validation: delta_n = max_a |T[n][a] - T[n+1][a]|
    // over the nested chains, recorded and required nonincreasing.
    std::vector<long> delta_exponents;
    for (size_t n = 0; n + 1 < level_values.size(); ++n) {
        long e = kZeroDelta;
        for (size_t a = 0; a < level_values[n].size(); ++a) {
            Scalar d = level_values[n][a] - level_values[n + 1][a];
            if (!d.is_zero()) e = std::min(e, d.valuation());
        }
        delta_exponents.push_back(e);
    }
    for (size_t n = 0; n + 1 < delta_exponents.size(); ++n) {
        if (delta_exponents[n + 1] < delta_exponents[n]) {
            throw TableError(
                "table fails the weak-measure Cauchy validation: delta_" +
                std::to_string(n + 1) + " exceeds delta_" + std::to_string(n));
        }
    }
    return Measure(ctx, Node(Tabulated{std::move(level_values),
                                       std::move(delta_exponents)}));
}

Measure measure_combine(const Scalar& alpha, const Measure& mu,
                        const Scalar& beta, const Measure& nu) {
    if (mu.context() != nu.context() || alpha.context() != mu.context() ||
        beta.context() != mu.context()) {
        throw Error("measure combination context mismatch");
    }
    return Measure(mu.context(),
                   Measure::Node(Measure::Combination{
                       alpha, std::make_shared<const Measure>(mu), beta,
                       std::make_shared<const Measure>(nu)}));
}

int Measure::max_level() const {
    return std::visit(
        [](const auto& n) -> int {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, FunctionInduced>) {
                return std::numeric_limits<int>::max();
            } else if constexpr (std::is_same_v<T, Tabulated>) {
                return static_cast<int>(n.values.size()) - 1;
            } else {
                return std::min(n.mu->max_level(), n.nu->max_level());
            }
        },
        node_);
}

Scalar measure_value(const Measure& mu, const Cylinder& c) {
    if (mu.context() != c.ctx) throw Error("cylinder context mismatch");
    return std::visit(
        [&](const auto& n) -> Scalar {
            using T = std::decay_t<decltype(n)>;
            const Context& ctx = mu.context();
            if constexpr (std::is_same_v<T, Measure::FunctionInduced>) {
                // (-1)^a * I(f(a + p^n x)), by exact recomposition.
                Polynomial sub = n.monomial_form.compose_affine(
                    Scalar::from_integer(c.base, ctx),
                    Scalar::p_power(c.level, ctx));
                Scalar v = integrate(sub);
                return (c.base % 2 == 0) ? v : -v;
            } else if constexpr (std::is_same_v<T, Measure::Tabulated>) {
                if (c.level >= static_cast<int>(n.values.size())) {
                    throw TableError("cylinder level " + std::to_string(c.level) +
                                     " beyond table depth " +
                                     std::to_string(n.values.size() - 1));
                }
                return n.values[static_cast<size_t>(c.level)]
                               [static_cast<size_t>(c.base)];
            } else {
                return n.alpha * measure_value(*n.mu, c) +
                       n.beta * measure_value(*n.nu, c);
            }
        },
        mu.node());
}

} // namespace fpadic
