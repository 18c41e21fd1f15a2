#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fpadic {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A requested valuation fell below the configured floor -V.
struct ValuationFloorError : Error {
    using Error::Error;
};

// A congruence or residue was requested beyond the digits actually held.
struct PrecisionError : Error {
    using Error::Error;
};

// A brute-force summation would exceed the configured term budget.
struct BudgetError : Error {
    using Error::Error;
};

// Malformed text input (scalar literals, function literals, table files).
struct ParseError : Error {
    using Error::Error;
};

// A tabulated measure was asked for a level beyond its depth, or failed
// its construction-time validation.
struct TableError : Error {
    using Error::Error;
};

/// Working parameters for Q_p arithmetic: an odd prime p and the number of
/// significant p-adic digits carried. All scalars below hold their unit part
/// modulo p^precision. The valuation floor bounds how negative a valuation
/// may get before an operation is rejected.
class Context {
public:
    // valuation_floor < 0 selects the default floor V = precision.
    Context(long p, int precision, int valuation_floor = -1);

    long p() const { return p_; }
    int precision() const { return precision_; }
    int valuation_floor() const { return valuation_floor_; }

    // p^precision, the working modulus.
    const mpz_class& modulus() const { return modulus_; }

    // p^e for e >= 0.
    mpz_class pow_p(long e) const;

    // Contexts are interchangeable when p and precision agree.
    friend bool operator==(const Context& a, const Context& b) {
        return a.p_ == b.p_ && a.precision_ == b.precision_;
    }
    friend bool operator!=(const Context& a, const Context& b) { return !(a == b); }

private:
    long p_;
    int precision_;
    int valuation_floor_;
    mpz_class modulus_;
};

// p^{-v} as a double, the shared norm helper. Using one code path keeps
// norm comparisons bitwise-consistent across the library and its tests.
double norm_from_valuation(long p, long v);

} // namespace fpadic
