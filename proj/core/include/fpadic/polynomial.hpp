#pragma once

#include <vector>

#include "fpadic/scalar.hpp"

namespace fpadic {

/// Polynomial over Q_p in the monomial basis, coefficients c_0..c_d with a
/// nonzero leading coefficient (trailing exact zeros are trimmed).
class Polynomial {
public:
    explicit Polynomial(const Context& ctx) : ctx_(ctx) {}
    Polynomial(std::vector<Scalar> coefficients, const Context& ctx);

    static Polynomial from_integers(const std::vector<long>& coefficients,
                                    const Context& ctx);
    // x^k.
    static Polynomial monomial(int k, const Context& ctx);
    // binomial(x, n) expanded into monomials; coefficients pick up 1/n!.
    static Polynomial binomial_basis(int n, const Context& ctx);

    const Context& context() const { return ctx_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Scalar>& coefficients() const { return coeffs_; }
    // c_k, exact zero beyond the degree.
    Scalar coefficient(int k) const;

    Scalar operator()(const Scalar& x) const;

    Polynomial scaled(const Scalar& alpha) const;
    friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

    // f(shift + scale * x), expanded exactly via the binomial theorem.
    Polynomial compose_affine(const Scalar& shift, const Scalar& scale) const;

    // True when every coefficient lies in Z_p (valuation >= 0).
    bool has_integral_coefficients() const;

private:
    void trim();

    Context ctx_;
    std::vector<Scalar> coeffs_;
};

} // namespace fpadic
