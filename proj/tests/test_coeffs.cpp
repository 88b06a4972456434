#include <doctest.h>

#include "ayh/cyclotomic.hpp"
#include "gen.hpp"

using namespace ayh;

static LaurentZ q_pow(int e, long long c = 1) { return LaurentZ::monomial(c, e); }

TEST_CASE("laurent multiplication") {
    LaurentZ gap = laurent_gap();                 // q - q^-1
    LaurentZ qp = q_pow(1) + q_pow(-1);           // q + q^-1

    CHECK(gap * qp == q_pow(2) - q_pow(-2));
    CHECK((gap * qp).str() == "q^2 - q^-2");

    Rng rng(1);
    for (int t = 0; t < 50; ++t) {
        LaurentZ a = random_laurent(rng);
        CHECK(a * LaurentZ(1) == a);
    }

    LaurentZ sq = gap * gap;
    CHECK(sq == q_pow(2) - LaurentZ(2) + q_pow(-2));
    CHECK(sq.str() == "q^2 - 2 + q^-2");
}

TEST_CASE("laurent bar involution") {
    LaurentZ gap = laurent_gap();
    CHECK(gap.bar() == q_pow(-1) - q_pow(1));
    CHECK(LaurentZ(3).bar() == LaurentZ(3));

    Rng rng(2);
    for (int t = 0; t < 100; ++t) {
        LaurentZ a = random_laurent(rng);
        LaurentZ b = random_laurent(rng);
        CHECK(a.bar().bar() == a);
        CHECK((a * b).bar() == a.bar() * b.bar()); // ring homomorphism
        CHECK((a + b).bar() == a.bar() + b.bar());
    }
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(3);
    for (int t = 0; t < 1000; ++t) {
        LaurentZ a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
    for (int t = 0; t < 1000; ++t) {
        int r = static_cast<int>(rng.range(1, 5));
        Cyclotomic a = random_cyclotomic(rng, r), b = random_cyclotomic(rng, r),
                   c = random_cyclotomic(rng, r);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a * Cyclotomic::one(r) == a);
    }
}

TEST_CASE("cyclotomic reduction") {
    // r=2: z^2 = 1
    CHECK(Cyclotomic::zeta_pow(2, 2) == Cyclotomic::one(2));

    // r=2: (1+z)/2 is idempotent (here z = -1, so it is zero)
    Cyclotomic half = Cyclotomic::rational(2, Rational(1, 2));
    Cyclotomic e = half * (Cyclotomic::one(2) + Cyclotomic::zeta_pow(2, 1));
    CHECK(e * e == e);

    // with z a primitive root, 1 + z + z^2 vanishes for r=3
    Cyclotomic s = Cyclotomic::one(3) + Cyclotomic::zeta_pow(3, 1) + Cyclotomic::zeta_pow(3, 2);
    CHECK(s.is_zero());
}

TEST_CASE("root-of-unity orthogonality sums, r <= 6") {
    for (int r = 1; r <= 6; ++r) {
        for (int k = 0; k < r; ++k) {
            Cyclotomic sum = Cyclotomic::zero(r);
            for (int s = 0; s < r; ++s)
                sum += Cyclotomic::zeta_pow(r, static_cast<long long>(k) * s);
            sum *= Cyclotomic::rational(r, Rational(1, r));
            if (k == 0)
                CHECK(sum == Cyclotomic::one(r));
            else
                CHECK(sum.is_zero());
        }
    }
}

static bool denominator_divides_power(long long den, int r) {
    if (r == 1) return den == 1;
    long long d = den;
    for (int p = 2; p <= r; ++p)
        while (d % p == 0 && r % p == 0) d /= p;
    return d == 1;
}

TEST_CASE("cyclotomic denominators stay supported on r") {
    Rng rng(4);
    for (int t = 0; t < 200; ++t) {
        int r = static_cast<int>(rng.range(2, 6));
        Cyclotomic a = random_cyclotomic(rng, r) * random_cyclotomic(rng, r);
        for (const auto& comp : a.comps())
            for (const auto& [e, c] : comp.terms())
                CHECK(denominator_divides_power(c.den(), r));
    }
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(3, 2) * Rational(2, 3) == Rational(1));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK(Rational(7, 3).str() == "7/3");
}
