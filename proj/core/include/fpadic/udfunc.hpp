#pragma once

#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "fpadic/polynomial.hpp"

namespace fpadic {

/// Finite Mahler series f(x) = sum_n a_n * binomial(x, n). The stored
/// coefficient list is the whole function; decay_witness records
/// max_{n>=1} n*|a_n|_p, the quantity whose vanishing tail characterises
/// uniform differentiability.
class MahlerFunction {
public:
    MahlerFunction(std::vector<Scalar> coefficients, const Context& ctx);

    const Context& context() const { return ctx_; }
    const std::vector<Scalar>& coefficients() const { return coeffs_; }
    int count() const { return static_cast<int>(coeffs_.size()); }
    double decay_witness() const { return decay_witness_; }

private:
    Context ctx_;
    std::vector<Scalar> coeffs_;
    double decay_witness_;
};

/// A uniformly differentiable function on Z_p, represented as a finite
/// expression tree over polynomial and Mahler leaves. Immutable; subtrees
/// are shared.
class UDFunction {
public:
    struct Scaled {
        Scalar alpha;
        std::shared_ptr<const UDFunction> f;
    };
    struct Sum {
        std::shared_ptr<const UDFunction> f;
        std::shared_ptr<const UDFunction> g;
    };
    using Node = std::variant<Polynomial, MahlerFunction, Scaled, Sum>;

    UDFunction(Polynomial f) : node_(std::move(f)) {}        // NOLINT(google-explicit-constructor)
    UDFunction(MahlerFunction f) : node_(std::move(f)) {}    // NOLINT(google-explicit-constructor)

    static UDFunction scaled(Scalar alpha, UDFunction f) {
        return UDFunction(Node(Scaled{std::move(alpha),
                                      std::make_shared<const UDFunction>(std::move(f))}));
    }
    static UDFunction sum(UDFunction f, UDFunction g) {
        return UDFunction(Node(Sum{std::make_shared<const UDFunction>(std::move(f)),
                                   std::make_shared<const UDFunction>(std::move(g))}));
    }

    const Node& node() const { return node_; }
    const Context& context() const;

private:
    explicit UDFunction(Node n) : node_(std::move(n)) {}

    Node node_;
};

// binomial(x, n) evaluated at an arbitrary scalar x.
Scalar binomial_value(const Scalar& x, int n);

// Exact value of f at x; x must lie in Z_p (valuation >= 0).
Scalar evaluate(const UDFunction& f, const Scalar& x);

// Number of Mahler coefficients needed to represent f exactly.
int mahler_length(const UDFunction& f);

// a_0..a_{count-1} by exact forward differences of f at 0..count-1.
std::vector<Scalar> mahler_coeffs(const UDFunction& f, int count);

// Exact conversion of the whole tree to the monomial basis.
Polynomial to_polynomial(const UDFunction& f);

// Truncation f_m = sum_{i<m} a_i*binomial(x,i) in monomial form, together
// with the tail bound sup_{n>=m} n*|a_n|_p (n weighted as a real integer).
// The bound dominates ||f - f_m||_inf for m >= 1.
std::pair<Polynomial, double> truncate(const MahlerFunction& f, int m);

// (f(x+m) - f(x)) / m for m != 0, with x and x+m in Z_p.
Scalar difference_quotient(const UDFunction& f, const Scalar& m, const Scalar& x);

// ||f||_inf = max_n |a_n|_p over the Mahler coefficients.
double sup_norm(const UDFunction& f);

// Sampled lower bound on ||f||_1 = ||f||_inf v ||diff quotient||_inf:
// the quotient is scanned over x in [0, p^depth) and m = u*p^j with
// u in [1, p) and j in [0, depth).
double lip_norm_estimate(const UDFunction& f, int depth);

// Function literals: "poly:c0,c1,...,cd" (monomial basis) or
// "mahler:a0,a1,...,am", coefficients as integers or num/den rationals.
UDFunction parse_function(std::string_view literal, const Context& ctx);

} // namespace fpadic
