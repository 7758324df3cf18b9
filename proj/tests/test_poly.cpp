#include "mtwgeo/geometry.hpp"

#include <doctest.h>

#include <random>

using namespace mtw;

TEST_CASE("ring axioms on random elements") {
    RingPtr r = sphere_ring();
    std::mt19937_64 rng(1);
    auto rnd = [&] {
        Poly p(r);
        for (int k = 0; k < 4; ++k) {
            std::vector<int> mono(r->vars.size(), 0);
            for (auto& e : mono) e = int(rng() % 3);
            p = p + Poly::from_terms(r, {{mono, GaussRat(Rational(int(rng() % 9) - 4))}});
        }
        return p;
    };
    for (int k = 0; k < 10; ++k) {
        Poly a = rnd(), b = rnd(), c = rnd();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("conjugation is an involutive ring map") {
    RingPtr r = sphere_ring();
    Poly z1 = Poly::var(r, "z1"), z2 = Poly::var(r, "z2");
    Poly p = z1 * z1 + z2 * GaussRat::i() + Poly::constant(r, GaussRat(Rational(1) / 3));
    Poly q = z1 * z2.conj() - Poly::constant(r, GaussRat::i());
    CHECK(p.conj().conj() == p);
    CHECK((p * q).conj() == p.conj() * q.conj());
    CHECK((p + q).conj() == p.conj() + q.conj());
}

TEST_CASE("sphere relation: |z1|^2 + |z2|^2 reduces to 1") {
    RingPtr r = sphere_ring();
    Poly z1 = Poly::var(r, "z1"), z2 = Poly::var(r, "z2");
    Poly s = z1 * z1.conj() + z2 * z2.conj();
    CHECK(s == Poly::constant(r, GaussRat(1)));
}

TEST_CASE("derivatives satisfy Leibniz in the ambient ring") {
    RingPtr r = ambient_ring();
    std::mt19937_64 rng(2);
    auto rnd = [&] {
        Poly p(r);
        for (int k = 0; k < 3; ++k) {
            std::vector<int> mono(r->vars.size(), 0);
            for (auto& e : mono) e = int(rng() % 3);
            p = p + Poly::from_terms(r, {{mono, GaussRat(Rational(int(rng() % 9) - 4))}});
        }
        return p;
    };
    for (int k = 0; k < 8; ++k) {
        Poly a = rnd(), b = rnd();
        for (int v = 0; v < int(r->vars.size()); ++v)
            CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    }
}

TEST_CASE("jet helpers") {
    RingPtr r = sphere_ring(5); // jet variable to order 5
    int tv = r->jet_var;
    Poly t = Poly::var(r, tv);

    SUBCASE("exp of a constant direction has factorial coefficients") {
        Poly e = jet_exp(Poly::constant(r, GaussRat(3)));
        Rational coeff = 1; // 3^k / k!
        for (int k = 0; k <= 5; ++k) {
            if (k > 0) coeff = coeff * 3 / k;
            CHECK(e.jet_coeff(k) == Poly::constant(r, GaussRat(coeff)));
        }
    }

    SUBCASE("invert is an exact jet inverse") {
        Poly z1 = Poly::var(r, "z1");
        Poly u = Poly::constant(r, GaussRat(2)) + t * z1 + t * t * GaussRat::i();
        CHECK(u * jet_invert(u) == Poly::constant(r, GaussRat(1)));
    }

    SUBCASE("sqrt(1 + j) squares back") {
        Poly z2 = Poly::var(r, "z2");
        Poly j = t * z2 * z2.conj() - t * t * Poly::constant(r, GaussRat(Rational(1) / 2));
        Poly s = jet_sqrt_one_plus(j);
        CHECK(s * s == Poly::constant(r, GaussRat(1)) + j);
    }
}

TEST_CASE("expression parser round trips") {
    RingPtr r = sphere_ring();
    Poly z1 = Poly::var(r, "z1"), z2 = Poly::var(r, "z2");
    Poly p = z1 * z1 * GaussRat(Rational(1) / 2) - z2.conj() * GaussRat::i() +
             Poly::constant(r, GaussRat(Rational(-3) / 7));
    CHECK(parse_poly(r, p.str()) == p);
    CHECK(parse_poly(r, "i*z1^2 + (1/2 - i)*zb2") ==
          z1 * z1 * GaussRat::i() + z2.conj() * (GaussRat(Rational(1) / 2) - GaussRat::i()));
    CHECK(parse_poly(r, "z1*zb1 + z2*zb2") == Poly::constant(r, GaussRat(1)));
    CHECK_THROWS(parse_poly(r, "z1 +"));
    CHECK_THROWS(parse_poly(r, "q3"));
}
