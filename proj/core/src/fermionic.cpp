#include "fpadic/fermionic.hpp"

#include <map>
#include <utility>

namespace fpadic {

EulerTable::EulerTable(const Context& ctx) : ctx_(ctx) {
    values_.push_back(Scalar::one(ctx_)); // E_0
}

const Scalar& EulerTable::get(int k) {
    if (k < 0) throw Error("Euler index must be nonnegative");
    Scalar minus_half =
        Scalar::from_rational(mpz_class(-1), mpz_class(2), ctx_);
    while (static_cast<int>(values_.size()) <= k) {
        int n = static_cast<int>(values_.size());
        Scalar acc = Scalar::zero(ctx_);
        for (int j = 0; j < n; ++j) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n),
                         static_cast<unsigned long>(j));
            acc = acc + Scalar::from_integer(binom, ctx_) *
                            values_[static_cast<size_t>(j)];
        }
        Scalar e = minus_half * acc;
        if (!e.is_zero() && e.valuation() < 0) {
            throw Error("Euler number left Z_p; recurrence is broken");
        }
        values_.push_back(std::move(e));
    }
    return values_[static_cast<size_t>(k)];
}

Scalar euler_number(int k, const Context& ctx) {
    thread_local std::map<std::pair<long, int>, EulerTable> tables;
    auto key = std::make_pair(ctx.p(), ctx.precision());
    auto it = tables.find(key);
    if (it == tables.end()) {
        it = tables.emplace(key, EulerTable(ctx)).first;
    }
    return it->second.get(k);
}

Scalar fermionic_sum(const UDFunction& f, int m, long budget) {
    if (m < 0) throw Error("summation level must be nonnegative");
    const Context& ctx = f.context();
    long terms = 1;
    for (int i = 0; i < m; ++i) {
        if (terms > budget / ctx.p()) {
            throw BudgetError("p^" + std::to_string(m) +
                              " exceeds the summation budget of " +
                              std::to_string(budget) + " terms");
        }
        terms *= ctx.p();
    }
    Scalar acc = Scalar::zero(ctx);
    for (long x = 0; x < terms; ++x) {
        Scalar v = evaluate(f, Scalar::from_integer(x, ctx));
        acc = (x % 2 == 0) ? acc + v : acc - v;
    }
    return acc;
}

Scalar integrate(const Polynomial& f) {
    const Context& ctx = f.context();
    EulerTable euler(ctx);
    Scalar acc = Scalar::zero(ctx);
    for (int k = 0; k <= f.degree(); ++k) {
        const Scalar& c = f.coefficients()[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        acc = acc + c * euler.get(k);
    }
    return acc;
}

Scalar integrate(const UDFunction& f) {
    return std::visit(
        [&](const auto& n) -> Scalar {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Polynomial>) {
                return integrate(n);
            } else if constexpr (std::is_same_v<T, MahlerFunction>) {
                // binomial(x, n) integrates to (-1/2)^n.
                const Context& ctx = n.context();
                Scalar acc = Scalar::zero(ctx);
                Scalar weight = Scalar::one(ctx);
                Scalar minus_half =
                    Scalar::from_rational(mpz_class(-1), mpz_class(2), ctx);
                for (int i = 0; i < n.count(); ++i) {
                    const Scalar& a = n.coefficients()[static_cast<size_t>(i)];
                    if (!a.is_zero()) acc = acc + a * weight;
                    weight = weight * minus_half;
                }
                return acc;
            } else if constexpr (std::is_same_v<T, UDFunction::Scaled>) {
                return n.alpha * integrate(*n.f);
            } else {
                return integrate(*n.f) + integrate(*n.g);
            }
        },
        f.node());
}

} // namespace fpadic
