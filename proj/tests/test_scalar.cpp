#include <limits>
#include <random>

#include <doctest.h>

#include "fpadic/scalar.hpp"

using namespace fpadic;

TEST_CASE("context validates its parameters") {
    CHECK_THROWS_AS(Context(2, 4), Error);   // even
    CHECK_THROWS_AS(Context(9, 4), Error);   // composite
    CHECK_THROWS_AS(Context(1, 4), Error);
    CHECK_THROWS_AS(Context(5, 0), Error);
    Context c(5, 2);
    CHECK(c.modulus() == 25);
    CHECK(c.valuation_floor() == 2);
}

TEST_CASE("rational embedding reaches canonical form") {
    Context c52(5, 2);
    Scalar h = Scalar::from_rational(1, 2, c52);
    CHECK(h.valuation() == 0);
    CHECK(h.unit() == 13); // 2*13 = 26 = 1 mod 25

    CHECK(Scalar::from_rational(0, 7, c52).is_zero());

    Scalar fifty = Scalar::from_integer(50, c52);
    CHECK(fifty.valuation() == 2);
    CHECK(fifty.unit() == 2);

    SUBCASE("denominator policies") {
        CHECK_THROWS_AS(Scalar::from_rational(1, 0, c52), Error);
        Scalar fifth = Scalar::from_rational(1, 5, c52);
        CHECK(fifth.valuation() == -1);
        CHECK_THROWS_AS(Scalar::from_rational(1, 5, c52, false), Error);
    }
    SUBCASE("valuation floor") {
        Context deep(5, 2, 1); // floor -1
        CHECK_THROWS_AS(Scalar::from_rational(1, 25, deep), ValuationFloorError);
    }
}

TEST_CASE("arithmetic reduces canonically") {
    Context c52(5, 2), c53(5, 3);

    // 12 = -1/2 and 13 = 1/2 mod 25: the sum is zero at held precision
    // (valuation N), and renders as zero mod 25.
    Scalar s = Scalar::from_integer(12, c52) + Scalar::from_integer(13, c52);
    CHECK(congruent(s, Scalar::zero(c52), 2));
    CHECK(s.valuation() == 2);
    CHECK(s.to_digit_string() == "0 + O(5^2)");

    Scalar x = Scalar::from_rational(7, 3, c52);
    CHECK(x * Scalar::one(c52) == x);

    Scalar d = Scalar::from_integer(3, c53) / Scalar::from_integer(2, c53);
    CHECK(d.valuation() == 0);
    CHECK(d.unit() == 64); // 2*64 - 3 = 125

    SUBCASE("division by exact zero") {
        CHECK_THROWS_AS(x / Scalar::zero(c52), Error);
    }
    SUBCASE("partial cancellation raises the valuation") {
        Scalar t = Scalar::from_integer(20, c52) + Scalar::from_integer(5, c52);
        CHECK(t.valuation() == 2);
        CHECK(t.unit() == 1);
    }
    SUBCASE("context mismatch is rejected") {
        CHECK_THROWS_AS(Scalar::one(c52) + Scalar::one(c53), Error);
    }
}

TEST_CASE("norm examples") {
    Context c(5, 4);
    CHECK(Scalar::from_integer(50, c).norm() == doctest::Approx(1.0 / 25));
    CHECK(Scalar::from_rational(1, 2, c).norm() == 1.0);
    CHECK(Scalar::zero(c).norm() == 0.0);
}

TEST_CASE("congruence predicate") {
    Context c3(3, 24), c5(5, 24);
    CHECK(congruent(Scalar::from_integer(-14, c3), Scalar::from_integer(4, c3), 2));
    Scalar x = Scalar::from_rational(22, 7, c3);
    CHECK(congruent(x, x, 24));
    CHECK_FALSE(congruent(Scalar::one(c5), Scalar::from_integer(2, c5), 1));

    SUBCASE("modulus beyond held precision") {
        CHECK_THROWS_AS(congruent(x, x, 25), PrecisionError);
        // a negative valuation lowers the usable modulus
        Scalar fifth = Scalar::from_rational(1, 5, c5);
        CHECK_THROWS_AS(congruent(fifth, fifth, 24), PrecisionError);
        CHECK(congruent(fifth, fifth, 23));
    }
}

TEST_CASE("rendering and parsing") {
    Context c53(5, 3);
    Scalar d = Scalar::from_integer(3, c53) / Scalar::from_integer(2, c53);
    CHECK(d.to_digit_string() == "4 + 2*5 + 2*5^2 + O(5^3)");
    CHECK(d.to_canonical_string() == "5^0 * 64 mod 5^3");
    CHECK(Scalar::zero(c53).to_digit_string() == "0");

    Scalar fifty = Scalar::from_integer(50, Context(5, 4));
    CHECK(fifty.to_digit_string() == "2*5^2 + O(5^4)");
    CHECK(fifty.to_rational_string() == "50");
    // The digit window is absolute: past the precision a value shows as 0.
    CHECK(Scalar::from_integer(50, Context(5, 2)).to_digit_string() ==
          "0 + O(5^2)");

    Scalar fifth = Scalar::from_rational(2, 5, c53);
    CHECK(fifth.to_rational_string() == "2/5");
    CHECK(parse_scalar("2/5", c53) == fifth);
    CHECK(parse_scalar(" -7 ", c53) == Scalar::from_integer(-7, c53));
    CHECK(parse_scalar("14/21", c53) == Scalar::from_rational(2, 3, c53));

    CHECK_THROWS_AS(parse_scalar("", c53), ParseError);
    CHECK_THROWS_AS(parse_scalar("x", c53), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/", c53), ParseError);
    CHECK_THROWS_AS(parse_scalar("3/0", c53), ParseError);
}

TEST_CASE("residues") {
    Context c3(3, 24);
    Scalar m14 = Scalar::from_integer(-14, c3);
    CHECK(m14.residue(2) == 4);
    CHECK(m14.balanced_residue(2) == 4);
    CHECK(Scalar::from_integer(8, c3).balanced_residue(2) == -1);
    CHECK_THROWS_AS(Scalar::from_rational(1, 3, c3).residue(1), PrecisionError);
}

namespace {

// Deterministic random rationals with bounded p-content.
struct RationalGen {
    std::mt19937_64 rng;
    explicit RationalGen(unsigned long long seed) : rng(seed) {}

    Scalar next(const Context& ctx) {
        std::uniform_int_distribution<long> num(-1000000, 1000000);
        std::uniform_int_distribution<long> den(1, 1000000);
        long n = num(rng);
        long d = den(rng);
        return Scalar::from_rational(n, d, ctx);
    }
};

} // namespace

TEST_CASE("algebraic properties hold on random inputs") {
    // Norm claims are checked at the valuation level, which is exact:
    // |x|_p = p^{-v} is monotone in v.
    auto val_or_inf = [](const Scalar& s) {
        return s.is_zero() ? std::numeric_limits<long>::max() : s.valuation();
    };
    for (long p : {3L, 5L, 7L}) {
        Context ctx(p, 24);
        RationalGen gen(0x5eedULL + static_cast<unsigned long long>(p));
        for (int i = 0; i < 500; ++i) {
            Scalar x = gen.next(ctx);
            Scalar y = gen.next(ctx);

            // Ultrametric inequality, with equality when the norms differ.
            long vs = val_or_inf(x + y);
            long vmin = std::min(val_or_inf(x), val_or_inf(y));
            CHECK(vs >= vmin);
            if (val_or_inf(x) != val_or_inf(y)) CHECK(vs == vmin);

            // Multiplicativity: valuations add.
            Scalar prod = x * y;
            if (x.is_zero() || y.is_zero()) {
                CHECK(prod.is_zero());
            } else {
                REQUIRE(!prod.is_zero());
                CHECK(prod.valuation() == x.valuation() + y.valuation());
            }

            // Inverse round-trip.
            if (!x.is_zero()) {
                CHECK(congruent(x * (Scalar::one(ctx) / x), Scalar::one(ctx), 24));
            }
        }
    }
}

TEST_CASE("equal rationals embed identically") {
    Context ctx(7, 24);
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<long> dist(1, 40000);
    for (int i = 0; i < 200; ++i) {
        long a = dist(rng), b = dist(rng), k = dist(rng) % 50 + 1;
        Scalar lhs = Scalar::from_rational(a * k, b * k, ctx);
        Scalar rhs = Scalar::from_rational(a, b, ctx);
        CHECK((lhs - rhs).is_zero());
    }
}
