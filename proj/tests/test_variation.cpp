#include "mtwgeo/spectral.hpp"
#include "mtwgeo/variation.hpp"

#include <doctest.h>

#include <random>

using namespace mtw;

TEST_CASE("closed-form linearizations match the exact geometry jets") {
    FrameData f0 = model_frame(ModelId::sphere3());
    ConnectionData c0 = solve_connection(f0);
    std::mt19937_64 rng(17);
    for (int k = 0; k < 5; ++k) {
        Poly E = random_poly(f0.ring, rng, 2, 3);
        Poly g = random_poly(f0.ring, rng, 2, 3);
        DeformationTangent d{E, g + g.conj()};
        VariationJet vj = variation_jet(d, 1);
        RingPtr jr = vj.Rjet.ring();
        CHECK(transplant(jr, linearize_R(f0, c0, d)) == vj.Rjet.jet_coeff(1));
        CHECK(transplant(jr, linearize_A(f0, c0, d)) == vj.A11jet.jet_coeff(1));
    }
}

TEST_CASE("the rossi direction: flat scalar variation, constant torsion variation") {
    FrameData f0 = model_frame(ModelId::sphere3());
    ConnectionData c0 = solve_connection(f0);
    DeformationTangent d = rossi_tangent(f0.ring);
    VariationJet vj = variation_jet(d, 3);
    RingPtr jr = vj.Rjet.ring();
    CHECK(vj.Rjet.jet_coeff(0) == Poly::constant(jr, GaussRat(2)));
    CHECK(vj.Rjet.jet_coeff(1).is_zero());
    CHECK(vj.Rjet.jet_coeff(2) == Poly::constant(jr, GaussRat(4)));
    CHECK(vj.A11jet.jet_coeff(0).is_zero());
    CHECK(vj.A11jet.jet_coeff(1) == Poly::constant(jr, GaussRat::i() * GaussRat(-4)));
    CHECK(linearize_R(f0, c0, d).is_zero());
    CHECK(linearize_A(f0, c0, d) == Poly::constant(f0.ring, GaussRat::i() * GaussRat(-4)));
}

TEST_CASE("gamma on constants") {
    {
        FrameData f = model_frame(ModelId::sphere3());
        ConnectionData c = solve_connection(f);
        GammaValue g = gamma(f, c, Poly::constant(f.ring, GaussRat(1)));
        CHECK(g.torsion.is_zero());
        CHECK(g.scalar == Poly::constant(f.ring, GaussRat(2)));
    }
    {
        FrameData f = model_frame(ModelId::heisenberg(1));
        ConnectionData c = solve_connection(f);
        GammaValue g = gamma(f, c, Poly::constant(f.ring, GaussRat(1)));
        CHECK(g.torsion.is_zero());
        CHECK(g.scalar.is_zero());
    }
}

TEST_CASE("gamma is the exact adjoint of the scalar-curvature linearization") {
    FrameData f0 = model_frame(ModelId::sphere3());
    ConnectionData c0 = solve_connection(f0);
    std::mt19937_64 rng(19);
    for (int k = 0; k < 6; ++k) {
        Poly g = random_poly(f0.ring, rng, 3, 4);
        Poly fn = g + g.conj();
        GammaValue gm = gamma(f0, c0, fn);
        Poly E = random_poly(f0.ring, rng, 3, 4);
        if (k % 2 == 0) E = E + gm.torsion;
        Poly h = random_poly(f0.ring, rng, 3, 4);
        DeformationTangent d{E, h + h.conj()};
        GaussRat lhs = sphere_integral(fn * linearize_R(f0, c0, d));
        DeformationTangent gt = gamma_tangent(ModelId::sphere3(), fn);
        GaussRat rhs =
            sphere_integral(gt.E11 * d.E11.conj() + gt.E11.conj() * d.E11 + gt.u * d.u);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("divergence adjoint and the epsilon contraction") {
    FrameData f0 = model_frame(ModelId::sphere3());
    ConnectionData c0 = solve_connection(f0);
    std::mt19937_64 rng(23);
    for (int k = 0; k < 3; ++k) {
        Poly fn = random_poly(f0.ring, rng, 3, 4);
        Poly tau = random_poly(f0.ring, rng, 3, 4);
        Poly f1 = cov_deriv(f0, c0, Dir::D1, fn, 0, 0);
        Poly f1b = cov_deriv(f0, c0, Dir::D1b, fn, 0, 0);
        CHECK(sphere_integral(f1 * tau.conj() + f1b * tau) ==
              inner_product(fn, dstar(f0, c0, tau)));
    }
    Poly E = random_poly(f0.ring, rng, 2, 3);
    CHECK(epsilon1(f0, c0, E) == cov_deriv(f0, c0, Dir::D1b, E, -2, 0) * GaussRat::i());
}
