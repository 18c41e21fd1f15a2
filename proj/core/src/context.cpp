#include "fpadic/context.hpp"

#include <cmath>

namespace fpadic {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

} // namespace

Context::Context(long p, int precision, int valuation_floor)
    : p_(p),
      precision_(precision),
      valuation_floor_(valuation_floor < 0 ? precision : valuation_floor) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) {
        throw Error("p must be an odd prime >= 3, got " + std::to_string(p));
    }
    if (precision < 1) {
        throw Error("precision must be >= 1, got " + std::to_string(precision));
    }
    mpz_ui_pow_ui(modulus_.get_mpz_t(), static_cast<unsigned long>(p_),
                  static_cast<unsigned long>(precision_));
}

mpz_class Context::pow_p(long e) const {
    if (e < 0) throw Error("pow_p requires a nonnegative exponent");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p_),
                  static_cast<unsigned long>(e));
    return r;
}

double norm_from_valuation(long p, long v) {
    return std::pow(static_cast<double>(p), static_cast<double>(-v));
}

} // namespace fpadic
