#pragma once

#include <limits>
#include <memory>

#include "fpadic/fermionic.hpp"

namespace fpadic {

/// The cylinder a + p^n Z_p. Level 0 is the whole of Z_p (base 0).
struct Cylinder {
    Cylinder(long base, int level, const Context& ctx);

    long base;
    int level;
    Context ctx;
};

/// A finitely described assignment of scalars to cylinders:
///   - FunctionInduced: values (-1)^a * I(f(a + p^n x)) from a UD function;
///   - Tabulated: explicit per-residue values for levels 0..L, validated on
///     construction against the weak-measure Cauchy condition
///     |mu(a+p^n Z_p) - mu(a+p^{n+1} Z_p)| <= delta_n with delta_n
///     nonincreasing;
///   - Combination: alpha*mu + beta*nu, evaluated pointwise.
/// Measures are immutable; combinations share their operands.
class Measure {
public:
    struct FunctionInduced {
        UDFunction f;
        Polynomial monomial_form; // exact conversion, computed once
    };
    struct Tabulated {
        // values[n] holds p^n entries, level-n cylinder bases in order.
        std::vector<std::vector<Scalar>> values;
        // delta_exponents[n]: delta_n = p^{-e}; max long when delta_n = 0.
        std::vector<long> delta_exponents;
    };
    struct Combination {
        Scalar alpha;
        std::shared_ptr<const Measure> mu;
        Scalar beta;
        std::shared_ptr<const Measure> nu;
    };
    using Node = std::variant<FunctionInduced, Tabulated, Combination>;

    static Measure induced(UDFunction f);
    static Measure tabulated(std::vector<std::vector<Scalar>> level_values,
                             const Context& ctx);

    const Context& context() const { return ctx_; }
    const Node& node() const { return node_; }

    // Deepest level at which every component can be evaluated;
    // INT_MAX when unbounded (no tabulated component).
    int max_level() const;

private:
    Measure(Context ctx, Node node) : ctx_(std::move(ctx)), node_(std::move(node)) {}

    Context ctx_;
    Node node_;

    friend Measure measure_combine(const Scalar& alpha, const Measure& mu,
                                   const Scalar& beta, const Measure& nu);
};

// The formal combination alpha*mu + beta*nu.
Measure measure_combine(const Scalar& alpha, const Measure& mu,
                        const Scalar& beta, const Measure& nu);

// mu(a + p^n Z_p).
Scalar measure_value(const Measure& mu, const Cylinder& c);

} // namespace fpadic
