#pragma once

#include <optional>
#include <string>

#include "fpadic/measure.hpp"

namespace fpadic {

enum class CheckStatus { pass, fail, precondition };

/// Outcome of a property verification: what was checked, at which
/// parameters, whether every examined instance satisfied the asserted
/// congruence or bound, the constants fitted along the way, and the
/// worst-case witness. Renders as "key: value" lines or as a flat JSON
/// object; both renderings are deterministic.
struct CheckReport {
    std::string name;
    long p = 0;
    int precision = 0;
    std::vector<std::pair<std::string, std::string>> params;
    CheckStatus status = CheckStatus::fail;
    std::vector<std::pair<std::string, double>> constants;
    std::optional<Cylinder> witness;
    std::optional<double> residual_norm;
    std::vector<int> levels;
    std::string note;

    bool passed() const { return status == CheckStatus::pass; }
    std::string to_text() const;
    std::string to_json() const;
};

/// Result of fitting the strong-measure constant: per-level deltas
/// delta_k = max over bases a < p^k and lifts a' = a + j*p^k of
/// |mu(a + p^k Z_p) - (-1)^j mu(a' + p^{k+1} Z_p)|, the sign factor
/// compensating the parity flip of odd lifts. The fitted constant is
/// c = max_k delta_k * p^k; the measure counts as strongly fermionic at
/// desk scale when the ratios delta_k * p^k are nonincreasing for k >= 1
/// (level 0 is excluded: the bound is asymptotic).
struct StrongFit {
    // delta_k = p^{-delta_exponents[k]}; delta_k = 0 encoded as LONG_MAX.
    std::vector<long> delta_exponents;
    bool any_nonzero = false;
    long c_exponent = 0; // c = p^{c_exponent} when any_nonzero, else c = 0
    bool monotone = false;
    std::optional<Cylinder> worst;
    double worst_delta = 0.0;

    double c(long p) const {
        return any_nonzero ? norm_from_valuation(p, -c_exponent) : 0.0;
    }
};

// Deltas for k in [0, max_delta_level]; needs levels up to
// max_delta_level + 1 evaluable.
StrongFit fit_strong_constant(const Measure& mu, int max_delta_level);

// Child-sum identity mu(a + p^n Z_p) = sum_j mu(a + j p^n + p^{n+1} Z_p):
// passes iff the residual is exactly zero at working precision.
CheckReport additivity_check(const Measure& mu, const Cylinder& c);

// Strong-measure fit over delta_0..delta_{max_level-1}.
CheckReport strong_delta(const Measure& mu, int max_level);

// Level-n Radon-Nikodym estimate at the integer point a: the value of mu
// on the level-n cylinder through a, lifted to a's parity class, together
// with the certified error bound c * p^{-n} (c fitted through at least
// delta_1 so short prefixes do not underestimate the constant).
std::pair<Scalar, double> rn_derivative(const Measure& mu, long a, int level);
std::pair<Scalar, double> rn_derivative(const Measure& mu, long a, int level,
                                        const StrongFit& fit);

// mu_{P,-1}(a + p^n Z_p) == (-1)^a P(a) (mod p^n), for P with coefficients
// in Z_p. A violated precondition is reported, not silently passed.
CheckReport congruence_check(const Polynomial& P, const Cylinder& c);

// Level-n Riemann sum sum_{i < p^n} g(i) * mu(i + p^n Z_p).
Scalar integrate_against(const UDFunction& g, const Measure& mu, int level);

// Integral identity int g d mu_{P,-1} = int g*P d mu_{-1} at level n,
// asserted modulo p^{n - slack}, plus a strong-measure fit of mu_{P,-1}
// over the lower levels. P and g must take Z_p values (integral Mahler
// coefficients).
CheckReport verify_theorem1(const Polynomial& P, const UDFunction& g,
                            int level, int slack = 1);

struct Decomposition {
    Measure mu1;
    Measure mu2;
    CheckReport report;
};

// Splits a strongly fermionic measure as mu = mu1 + mu2 where mu1 is
// induced by g(x) = (-1)^x h(x) rebuilt from the level-L derivative table
// h(a) = rn_derivative(mu, a, L), and mu2 = mu - mu1 is the bounded
// remainder. The table is truncated to its certified precision p^M,
// M = L - log_p(c), before Mahler interpolation, so measures induced by a
// function are recovered exactly at desk scale. The report asserts the
// exact pointwise sum on every cylinder up to level L and fits the
// boundedness constant K and decay constant C of the remainder.
Decomposition decompose(const Measure& mu, int level);

// "poly:c0,c1,..." with exact rational coefficients; round-trips through
// the CLI function parser.
std::string to_literal(const Polynomial& f);

} // namespace fpadic
