#include <cmath>
#include <random>

#include <doctest.h>

#include "fpadic/fermionic.hpp"
#include "oracles.hpp"

using namespace fpadic;

namespace {

UDFunction mono(int k, const Context& ctx) {
    return UDFunction(Polynomial::monomial(k, ctx));
}

UDFunction mahler_basis(int n, const Context& ctx) {
    std::vector<Scalar> a(static_cast<size_t>(n) + 1, Scalar::zero(ctx));
    a.back() = Scalar::one(ctx);
    return UDFunction(MahlerFunction(std::move(a), ctx));
}

} // namespace

TEST_CASE("alternating partial sums") {
    Context c5(5, 24), c3(3, 24);
    UDFunction one(Polynomial::from_integers({1}, c5));
    for (int m : {0, 1, 3}) {
        CHECK(fermionic_sum(one, m) == Scalar::one(c5));
    }
    CHECK(fermionic_sum(mono(1, c5), 2) == Scalar::from_integer(12, c5));
    CHECK(fermionic_sum(mahler_basis(2, c3), 2) == Scalar::from_integer(16, c3));

    SUBCASE("budget") {
        CHECK_THROWS_AS(fermionic_sum(mono(1, Context(7, 24)), 9), BudgetError);
        CHECK(fermionic_sum(mono(0, c3), 2, 10).is_zero() == false);
        CHECK_THROWS_AS(fermionic_sum(mono(0, c3), 3, 10), BudgetError);
    }
}

TEST_CASE("euler numbers") {
    Context c52(5, 2);
    CHECK(euler_number(0, c52) == Scalar::one(c52));
    CHECK(euler_number(1, c52) == Scalar::from_rational(-1, 2, c52));
    CHECK(euler_number(1, c52).residue(2) == 12);
    CHECK(euler_number(3, c52).residue(2) == 19);
    CHECK(euler_number(2, c52).is_zero());

    SUBCASE("values stay in Z_p") {
        for (long p : {3L, 5L, 7L}) {
            Context ctx(p, 24);
            EulerTable table(ctx);
            for (int k = 0; k <= 12; ++k) {
                const Scalar& e = table.get(k);
                if (!e.is_zero()) CHECK(e.valuation() >= 0);
            }
        }
    }

    SUBCASE("recurrence matches the defining sums") {
        // Independent oracle: E_k = lim_m sum_{i<p^m} (-1)^i i^k.
        for (long p : {3L, 5L}) {
            Context ctx(p, 24);
            for (unsigned long k = 0; k <= 6; ++k) {
                mpz_class s = oracles::alt_sum_monomial(p, 4, k);
                CHECK(congruent(euler_number(static_cast<int>(k), ctx),
                                oracles::to_scalar(s, ctx), 3));
            }
        }
    }
}

TEST_CASE("closed-form integration") {
    Context c5(5, 24), c3(3, 24);
    CHECK(integrate(mono(2, c5)).is_zero()); // E_2 = 0
    Scalar q = integrate(mahler_basis(2, Context(3, 2)));
    CHECK(q.residue(2) == 7); // 1/4 mod 9
    CHECK(integrate(UDFunction(Polynomial::from_integers({1}, c5))) ==
          Scalar::one(c5));

    SUBCASE("mahler moments match brute force") {
        // int binomial(x,n) = (-1/2)^n, validated against enumeration.
        for (long p : {3L, 5L}) {
            Context ctx(p, 24);
            for (int n = 0; n <= 6; ++n) {
                mpz_class s = oracles::alt_sum_binomial(p, 4, static_cast<unsigned long>(n));
                CHECK(congruent(integrate(mahler_basis(n, ctx)),
                                oracles::to_scalar(s, ctx), 3));
            }
        }
    }

    SUBCASE("tree linearity") {
        UDFunction f = UDFunction::sum(
            UDFunction::scaled(Scalar::from_integer(3, c3), mono(2, c3)),
            mahler_basis(1, c3));
        CHECK(integrate(f) ==
              Scalar::from_integer(3, c3) * integrate(mono(2, c3)) +
                  integrate(mahler_basis(1, c3)));
    }
}

TEST_CASE("integral vs partial sums on random polynomials") {
    // congruent(integrate(f), fermionic_sum(f, m), m - ceil(log_p(deg+1)))
    std::mt19937_64 rng(0xfadeULL);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (long p : {3L, 5L}) {
        Context ctx(p, 24);
        for (int round = 0; round < 8; ++round) {
            std::vector<long> cs;
            for (int i = 0; i <= 6; ++i) cs.push_back(coeff(rng));
            Polynomial f(Polynomial::from_integers(cs, ctx));
            if (f.is_zero()) continue;
            long slack = static_cast<long>(
                std::ceil(std::log(static_cast<double>(f.degree() + 1)) /
                          std::log(static_cast<double>(p))));
            for (int m : {4, 5}) {
                CHECK(congruent(integrate(f), fermionic_sum(UDFunction(f), m),
                                m - slack));
            }
        }
    }
}
