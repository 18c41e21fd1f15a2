#include "fpadic/polynomial.hpp"

namespace fpadic {

Polynomial::Polynomial(std::vector<Scalar> coefficients, const Context& ctx)
    : ctx_(ctx), coeffs_(std::move(coefficients)) {
    for (const Scalar& c : coeffs_) {
        if (c.context() != ctx_) throw Error("coefficient context mismatch");
    }
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::from_integers(const std::vector<long>& coefficients,
                                     const Context& ctx) {
    std::vector<Scalar> cs;
    cs.reserve(coefficients.size());
    for (long c : coefficients) cs.push_back(Scalar::from_integer(c, ctx));
    return Polynomial(std::move(cs), ctx);
}

Polynomial Polynomial::monomial(int k, const Context& ctx) {
    std::vector<Scalar> cs(static_cast<size_t>(k) + 1, Scalar::zero(ctx));
    cs.back() = Scalar::one(ctx);
    return Polynomial(std::move(cs), ctx);
}

Polynomial Polynomial::binomial_basis(int n, const Context& ctx) {
    // Build x(x-1)...(x-n+1) and divide by n! one linear factor at a time:
    // B_{j+1} = B_j * (x - j) / (j + 1).
    Polynomial b(std::vector<Scalar>{Scalar::one(ctx)}, ctx);
    for (int j = 0; j < n; ++j) {
        std::vector<Scalar> next(b.coeffs_.size() + 1, Scalar::zero(ctx));
        Scalar minus_j = Scalar::from_integer(-j, ctx);
        Scalar inv = Scalar::one(ctx) / Scalar::from_integer(j + 1, ctx);
        for (size_t i = 0; i < b.coeffs_.size(); ++i) {
            next[i + 1] = next[i + 1] + b.coeffs_[i] * inv;
            next[i] = next[i] + b.coeffs_[i] * minus_j * inv;
        }
        b.coeffs_ = std::move(next);
    }
    b.trim();
    return b;
}

Scalar Polynomial::coefficient(int k) const {
    if (k < 0 || k > degree()) return Scalar::zero(ctx_);
    return coeffs_[static_cast<size_t>(k)];
}

Scalar Polynomial::operator()(const Scalar& x) const {
    Scalar acc = Scalar::zero(ctx_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::scaled(const Scalar& alpha) const {
    std::vector<Scalar> cs;
    cs.reserve(coeffs_.size());
    for (const Scalar& c : coeffs_) cs.push_back(c * alpha);
    return Polynomial(std::move(cs), ctx_);
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    if (f.ctx_ != g.ctx_) throw Error("polynomial context mismatch");
    std::vector<Scalar> cs(std::max(f.coeffs_.size(), g.coeffs_.size()),
                           Scalar::zero(f.ctx_));
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i < f.coeffs_.size()) cs[i] = cs[i] + f.coeffs_[i];
        if (i < g.coeffs_.size()) cs[i] = cs[i] + g.coeffs_[i];
    }
    return Polynomial(std::move(cs), f.ctx_);
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    if (f.ctx_ != g.ctx_) throw Error("polynomial context mismatch");
    if (f.is_zero() || g.is_zero()) return Polynomial(f.ctx_);
    std::vector<Scalar> cs(f.coeffs_.size() + g.coeffs_.size() - 1,
                           Scalar::zero(f.ctx_));
    for (size_t i = 0; i < f.coeffs_.size(); ++i) {
        for (size_t j = 0; j < g.coeffs_.size(); ++j) {
            cs[i + j] = cs[i + j] + f.coeffs_[i] * g.coeffs_[j];
        }
    }
    return Polynomial(std::move(cs), f.ctx_);
}

Polynomial Polynomial::compose_affine(const Scalar& shift,
                                      const Scalar& scale) const {
    // result_l = sum_{k>=l} c_k * C(k,l) * shift^{k-l} * scale^l
    int d = degree();
    if (d < 0) return Polynomial(ctx_);
    std::vector<Scalar> out(static_cast<size_t>(d) + 1, Scalar::zero(ctx_));

    // Powers of the shift, shift^0..shift^d.
    std::vector<Scalar> spow;
    spow.reserve(static_cast<size_t>(d) + 1);
    spow.push_back(Scalar::one(ctx_));
    for (int i = 1; i <= d; ++i) spow.push_back(spow.back() * shift);

    for (int k = 0; k <= d; ++k) {
        const Scalar& ck = coeffs_[static_cast<size_t>(k)];
        if (ck.is_zero()) continue;
        for (int l = 0; l <= k; ++l) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k),
                         static_cast<unsigned long>(l));
            Scalar term = ck * Scalar::from_integer(binom, ctx_) *
                          spow[static_cast<size_t>(k - l)];
            out[static_cast<size_t>(l)] = out[static_cast<size_t>(l)] + term;
        }
    }
    // Multiply coefficient l by scale^l.
    Scalar sc = Scalar::one(ctx_);
    for (int l = 1; l <= d; ++l) {
        sc = sc * scale;
        out[static_cast<size_t>(l)] = out[static_cast<size_t>(l)] * sc;
    }
    return Polynomial(std::move(out), ctx_);
}

bool Polynomial::has_integral_coefficients() const {
    for (const Scalar& c : coeffs_) {
        if (!c.is_zero() && c.valuation() < 0) return false;
    }
    return true;
}

} // namespace fpadic
