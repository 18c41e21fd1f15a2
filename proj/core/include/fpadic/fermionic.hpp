#pragma once

#include "fpadic/udfunc.hpp"

namespace fpadic {

inline constexpr long kDefaultSummationBudget = 10'000'000;

/// Memo table of Euler numbers E_0..E_K at working precision. E_k is the
/// fermionic moment of x^k; the table is filled by the recurrence
/// E_0 = 1, E_n = -(1/2) * sum_{j<n} C(n,j) E_j, which the test suite pins
/// against the defining alternating partial sums. Each instance is an
/// independent cache; extend-on-read makes concurrent use safe only per
/// instance.
class EulerTable {
public:
    explicit EulerTable(const Context& ctx);

    const Context& context() const { return ctx_; }
    int size() const { return static_cast<int>(values_.size()); }

    // E_k, extending the table as needed. Euler numbers lie in Z_p for odd
    // p; a computed value with negative valuation is rejected.
    const Scalar& get(int k);

private:
    Context ctx_;
    std::vector<Scalar> values_;
};

// E_k computed through a per-context thread-local table.
Scalar euler_number(int k, const Context& ctx);

// Partial sum sum_{x=0}^{p^m - 1} f(x) (-1)^x of the fermionic integral.
// Rejects p^m beyond the term budget.
Scalar fermionic_sum(const UDFunction& f, int m,
                     long budget = kDefaultSummationBudget);

// The fermionic invariant integral of f over Z_p, computed termwise from
// closed forms: monomial moments are Euler numbers, and the Mahler basis
// integrates to (-1/2)^n per coefficient.
Scalar integrate(const UDFunction& f);
Scalar integrate(const Polynomial& f);

} // namespace fpadic
