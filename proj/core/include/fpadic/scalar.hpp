#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fpadic/context.hpp"

namespace fpadic {

/// An element of Q_p at working precision N. The held value is an exact
/// rational (every operation is the exact field operation), presented
/// canonically as p^v * u with u the unit residue modulo p^N. Precision
/// governs the observable surface: congruence tests, residues, and digit
/// rendering all stop at N digits, and the digit window is absolute, so a
/// nonzero value of valuation >= N renders as zero mod p^N. The valuation
/// floor -V bounds the p-part of denominators; operations whose result
/// falls below it are rejected. Values are immutable and safe to share
/// across threads.
class Scalar {
public:
    // Exact zero.
    explicit Scalar(const Context& ctx) : ctx_(ctx), zero_(true), v_(0) {}

    static Scalar zero(const Context& ctx) { return Scalar(ctx); }
    static Scalar one(const Context& ctx) { return from_integer(1, ctx); }
    static Scalar from_integer(long n, const Context& ctx);
    static Scalar from_integer(const mpz_class& n, const Context& ctx);

    // num/den embedded into Q_p. With allow_p_in_denominator = false a
    // reduced denominator divisible by p is rejected instead of lowering
    // the valuation.
    static Scalar from_rational(const mpz_class& num, const mpz_class& den,
                                const Context& ctx,
                                bool allow_p_in_denominator = true);

    // p^e; e may be negative down to the floor.
    static Scalar p_power(long e, const Context& ctx);

    const Context& context() const { return ctx_; }
    bool is_zero() const { return zero_; }

    // Valuation of a nonzero scalar. Calling this on zero is an error.
    long valuation() const;

    // Unit part: the p-free part of the value reduced mod p^N, in [1, p^N).
    mpz_class unit() const;

    // The exact held rational.
    const mpq_class& rational() const { return value_; }

    // |x|_p = p^{-v}; 0 for exact zero.
    double norm() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);

    friend bool operator==(const Scalar& x, const Scalar& y);
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    // Canonical residue of the value modulo p^k, as an integer in [0, p^k).
    // Requires a p-adic integer (v >= 0) and k within held precision.
    mpz_class residue(int k) const;

    // Residue modulo p^k mapped into (-p^k/2, p^k/2].
    mpz_class balanced_residue(int k) const;

    // Base-p digits over the absolute window [min(v,0), N), least
    // significant first.
    std::vector<int> digits() const;

    // "d0 + d1*p + d2*p^2 + ... + O(p^N)" over the absolute window, zero
    // digits omitted; exact zero renders as "0".
    std::string to_digit_string() const;

    // "p^v * u mod p^N".
    std::string to_canonical_string() const;

    // The exact value as "num" or "num/den"; round-trips through
    // parse_scalar.
    std::string to_rational_string() const;

private:
    Scalar(const Context& ctx, mpq_class value);

    static void check_same_context(const Scalar& x, const Scalar& y);

    Context ctx_;
    mpq_class value_;
    bool zero_;
    long v_;
};

// True iff |x - y|_p <= p^{-k}. Requires k <= N - max(-v_x, -v_y, 0) so the
// comparison stays within held precision.
bool congruent(const Scalar& x, const Scalar& y, long k);

// Accepts an optionally signed integer "n" or rational "n/d".
Scalar parse_scalar(std::string_view text, const Context& ctx);

} // namespace fpadic
