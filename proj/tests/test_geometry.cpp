#include "mtwgeo/geometry.hpp"

#include <doctest.h>

using namespace mtw;

namespace {
void check_frame_duality(const FrameData& f) {
    Poly one = Poly::constant(f.ring, GaussRat(1));
    CHECK(f.theta.pair(f.T) == one);
    for (int a = 0; a < f.n; ++a) {
        CHECK(f.theta.pair(f.Z[a]).is_zero());
        CHECK(f.theta.pair(f.Zbar[a]).is_zero());
        CHECK(f.theta1[a].pair(f.T).is_zero());
        for (int b = 0; b < f.n; ++b) {
            CHECK(f.theta1[a].pair(f.Z[b]) == (a == b ? one : Poly(f.ring)));
            CHECK(f.theta1[a].pair(f.Zbar[b]).is_zero());
        }
    }
}
} // namespace

TEST_CASE("admissible frame duality on every model") {
    check_frame_duality(model_frame(ModelId::sphere3()));
    check_frame_duality(model_frame(ModelId::rossi3(Rational(1) / 2)));
    check_frame_duality(model_frame(ModelId::rossi_jet(3)));
    check_frame_duality(model_frame(ModelId::heisenberg(1)));
    check_frame_duality(model_frame(ModelId::heisenberg(2)));
}

TEST_CASE("sphere structure relations") {
    FrameData f = model_frame(ModelId::sphere3());
    CHECK(f.h == Poly::constant(f.ring, GaussRat(1)));
    // [Z_1, Z_1bar] = -i T exactly.
    VectorField c = bracket(f.Z[0], f.Zbar[0]);
    CHECK(c == f.T.scaled(Poly::constant(f.ring, -GaussRat::i())));
    // d theta(Z_1, Z_1bar) = i h.
    CHECK(d_eval(f.theta, f.Z[0], f.Zbar[0]) == f.h * GaussRat::i());
    CHECK(d_eval(f.theta, f.T, f.Z[0]).is_zero());
}

TEST_CASE("Jacobi identity for frame fields") {
    for (const ModelId& m : {ModelId::sphere3(), ModelId::heisenberg(2)}) {
        FrameData f = model_frame(m);
        VectorField X = f.Z[0], Y = f.Zbar[f.n - 1], W = f.T;
        VectorField j = bracket(X, bracket(Y, W)) + bracket(Y, bracket(W, X)) +
                        bracket(W, bracket(X, Y));
        CHECK(j == VectorField::zero(f.ring));
    }
}

TEST_CASE("model id parsing") {
    auto s = ModelId::parse("sphere3");
    REQUIRE(s.has_value());
    CHECK(s->kind == ModelId::Kind::Sphere3);
    auto r = ModelId::parse("rossi:-2/5");
    REQUIRE(r.has_value());
    CHECK(r->kind == ModelId::Kind::Rossi3);
    CHECK(r->t == Rational(-2) / 5);
    auto h = ModelId::parse("heisenberg:3");
    REQUIRE(h.has_value());
    CHECK(h->n == 3);
    CHECK_FALSE(ModelId::parse("rossi:3/2").has_value()); // out of (-1,1)
    CHECK_FALSE(ModelId::parse("bogus").has_value());
}

TEST_CASE("transplant matches variables by name") {
    RingPtr a = ambient_ring(), s = sphere_ring();
    Poly p = Poly::var(a, "z1") * Poly::var(a, "zb1") + Poly::var(a, "z2");
    Poly q = transplant(s, p);
    // The sphere relation applies after transplanting.
    CHECK(q == Poly::constant(s, GaussRat(1)) -
                   Poly::var(s, "z2") * Poly::var(s, "zb2") + Poly::var(s, "z2"));
}

TEST_CASE("scalar_invert on constants and jets") {
    RingPtr r = sphere_ring(4);
    Poly one = Poly::constant(r, GaussRat(1));
    Poly c = Poly::constant(r, GaussRat(Rational(-3) / 7));
    CHECK(c * scalar_invert(c) == one);
    Poly t = Poly::var(r, r->jet_var);
    Poly u = Poly::constant(r, GaussRat(2)) + t * Poly::var(r, "z1") * Poly::var(r, "zb1");
    CHECK(u * scalar_invert(u) == one);
    CHECK_THROWS(scalar_invert(Poly(r)));
}

TEST_CASE("solve_jet_linear recovers a planted solution") {
    RingPtr r = sphere_ring(3);
    Poly t = Poly::var(r, r->jet_var);
    Poly one = Poly::constant(r, GaussRat(1));
    Poly x0 = one + t * GaussRat::i(), x1 = t * Poly::var(r, "z1");
    std::vector<std::vector<Poly>> m = {{one + t, t * GaussRat(2)}, {t, one - t}};
    std::vector<Poly> rhs = {m[0][0] * x0 + m[0][1] * x1, m[1][0] * x0 + m[1][1] * x1};
    auto sol = solve_jet_linear(m, rhs);
    REQUIRE(sol.size() == 2);
    CHECK(sol[0] == x0);
    CHECK(sol[1] == x1);
}

TEST_CASE("reeb field of the undeformed contact form is T") {
    FrameData f = model_frame(ModelId::sphere3());
    CHECK(reeb_field(f.theta, f) == f.T);
}

TEST_CASE("trivial deformation returns the base frame data") {
    RingPtr s = sphere_ring();
    FrameData f = deform_frame(Poly(s), Poly(s), 2);
    check_frame_duality(f);
    CHECK(f.h.jet_coeff(0) == transplant(f.ring, Poly::constant(s, GaussRat(1))));
    CHECK(f.h.jet_coeff(1).is_zero());
    CHECK(f.h.jet_coeff(2).is_zero());
}
