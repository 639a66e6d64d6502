#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "helpers.hpp"

using namespace coxaff;
using namespace coxaff::testing;

TEST_CASE("ring identities from the golden quadratic") {
    CHECK(tau() * tau() == g(1) + tau());            // tau^2 = tau + 1
    CHECK(tau() * (g(1) - tau()) == g(-1));          // tau sigma = -1
    CHECK((g(2) - tau()) * (g(3) - tau()) == g(7, -4));
    CHECK((g(3) - tau()) * (g(2) + tau()) == g(5));
    CHECK((g(3) - tau()) * tau() * tau() == g(2) + tau());
    CHECK((g(2) - tau()) * (g(2) - tau()) == g(5, -3));
}

TEST_CASE("field axioms on random values") {
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        Golden x = rng.golden(), y = rng.golden(), z = rng.golden();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + (-x) == Golden(0));
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == Golden(1));
            CHECK((y / x) * x == y);
        }
    }
    CHECK_THROWS_AS(g(1) / Golden(0), std::domain_error);
}

TEST_CASE("conjugation is an involutive ring homomorphism") {
    CHECK(tau().conjugate() == sigma());
    CHECK(g(5).conjugate() == g(5));
    CHECK((g(2) - tau()).conjugate() == g(1) + tau());
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        Golden x = rng.golden(), y = rng.golden();
        CHECK(x.conjugate().conjugate() == x);
        CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
        CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
    }
}

TEST_CASE("norm is rational and multiplicative") {
    CHECK(tau().norm() == Rational(-1));
    // (2-t)(1+t) = 1 by direct expansion
    CHECK((g(2) - tau()) * (g(1) + tau()) == g(1));
    CHECK((g(2) - tau()).norm() == Rational(1));
    CHECK((g(3) - tau()).norm() == Rational(5));
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        Golden x = rng.golden(), y = rng.golden();
        CHECK((x * y).norm() == x.norm() * y.norm());
        CHECK(x * x.conjugate() == Golden(x.norm()));
    }
}

TEST_CASE("tau powers") {
    CHECK(tau_pow(0) == g(1));
    CHECK(tau_pow(2) == g(1) + tau());
    CHECK(tau_pow(-1) == tau() - g(1));
    CHECK(tau_pow(-2) == g(2) - tau());  // (tau-1)^2
    for (long j = -64; j <= 64; j += 13)
        for (long k = -64; k <= 64; k += 11)
            CHECK(tau_pow(j) * tau_pow(k) == tau_pow(j + k));
}

TEST_CASE("integrality and units") {
    CHECK_FALSE(gq(3, 4, -3, 4).is_zt_integer());  // 3/4(1-tau)
    CHECK((g(2) - tau()).is_unit());               // tau^-2
    CHECK_FALSE((g(3) - tau()).is_unit());         // norm 5
    CHECK(g(1).is_unit());
    CHECK_FALSE(g(2).is_unit());
    CHECK(tau_pow(-5).is_unit());
}

TEST_CASE("exact sign agrees with the numeric embedding") {
    CHECK(tau().sign() == 1);
    CHECK((g(2) - tau()).sign() == 1);
    CHECK((g(1) - tau()).sign() == -1);
    CHECK(Golden(0).sign() == 0);
    CHECK((g(1) - tau()).sign_conjugate() == 1);  // sigma' = tau - ... > 0
    Rng rng;
    for (int i = 0; i < 500; ++i) {
        Golden x = rng.golden(50, 9);
        double e = x.embed();
        if (std::fabs(e) > 1e-9) CHECK(x.sign() == (e > 0 ? 1 : -1));
        double ec = x.embed_conjugate();
        if (std::fabs(ec) > 1e-9) CHECK(x.sign_conjugate() == (ec > 0 ? 1 : -1));
    }
}

TEST_CASE("embedding tracks exact arithmetic") {
    CHECK(tau().embed() == doctest::Approx(1.6180339887498949).epsilon(1e-14));
    CHECK((g(2) - tau()).embed() == doctest::Approx(0.3819660112501051).epsilon(1e-14));
    CHECK((g(1) - tau()).embed() == doctest::Approx(-0.6180339887498949).epsilon(1e-14));
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        Golden x = rng.golden(), y = rng.golden();
        double lhs = (x * y).embed();
        double rhs = x.embed() * y.embed();
        CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(rhs)));
    }
}

TEST_CASE("text form round-trips") {
    CHECK(Golden::parse("2-1t") == g(2) - tau());
    CHECK(Golden::parse("3/4+1/2t") == gq(3, 4, 1, 2));
    CHECK(Golden::parse("tau^3") == tau_pow(3));
    CHECK(Golden::parse("tau^-2") == g(2) - tau());
    CHECK(Golden::parse("tau") == tau());
    CHECK(Golden::parse("-t") == -tau());
    CHECK(Golden::parse("2+t") == g(2) + tau());
    CHECK(Golden::parse(" -5/3 ") == gq(-5, 3));
    CHECK(Golden::parse("0") == Golden(0));
    CHECK_FALSE(Golden::try_parse("2-1x").has_value());
    CHECK_FALSE(Golden::try_parse("t^2t").has_value());
    CHECK_FALSE(Golden::try_parse("").has_value());
    Rng rng;
    for (int i = 0; i < 300; ++i) {
        Golden x = rng.golden(30, 7);
        CHECK(Golden::parse(x.str()) == x);
    }
}

TEST_CASE("golden square roots") {
    CHECK(golden_sqrt(g(2) - tau()) == tau_pow(-1));
    CHECK(golden_sqrt(g(5)) == g(-1, 2));  // sqrt5 = 2 tau - 1
    CHECK(golden_sqrt(g(5, -3)) == g(2) - tau());
    CHECK_FALSE(golden_sqrt(g(3) - tau()).has_value());
    CHECK_FALSE(golden_sqrt(gq(4, 3) * (g(2) - tau())).has_value());
    CHECK_FALSE(golden_sqrt(-tau()).has_value());
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        Golden x = rng.golden();
        auto r = golden_sqrt(x * x);
        REQUIRE(r.has_value());
        CHECK(*r * *r == x * x);
        CHECK(r->sign() >= 0);
    }
}

TEST_CASE("rational parsing and square roots") {
    CHECK(parse_rational("-7/3") == Rational(-7, 3));
    CHECK(rational_sqrt(Rational(49, 4)) == Rational(7, 2));
    CHECK_FALSE(rational_sqrt(Rational(5)).has_value());
    CHECK_FALSE(rational_sqrt(Rational(-4)).has_value());
}
