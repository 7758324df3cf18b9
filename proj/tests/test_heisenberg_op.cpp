#include "mtwgeo/connection.hpp"
#include "mtwgeo/heisenberg_op.hpp"

#include <doctest.h>

#include <random>

using namespace mtw;

namespace {

/// Apply a normal-ordered constant-coefficient operator to a polynomial
/// function on the Heisenberg group, using the honest frame vector fields.
/// This is the independent oracle for the operator-algebra arithmetic.
Poly apply_op(const HeisOp& op, const FrameData& f, const Poly& fn) {
    Poly out(f.ring);
    for (const auto& [key, c] : op.terms()) {
        const auto& [za, zb, k] = key;
        Poly g = fn;
        for (int j = 0; j < k; ++j) g = f.T.apply(g);
        for (int a = int(zb.size()) - 1; a >= 0; --a)
            for (int j = 0; j < zb[a]; ++j) g = f.Zbar[a].apply(g);
        for (int a = int(za.size()) - 1; a >= 0; --a)
            for (int j = 0; j < za[a]; ++j) g = f.Z[a].apply(g);
        out = out + g * c;
    }
    return out;
}

} // namespace

TEST_CASE("generator relations") {
    for (int n : {1, 2}) {
        HeisOp z = HeisOp::Z(n, 0), zb = HeisOp::Zbar(n, 0), t = HeisOp::T(n);
        CHECK(z * zb - zb * z == t * (-GaussRat::i()));
        if (n == 2) {
            HeisOp zb1 = HeisOp::Zbar(n, 1);
            CHECK(z * zb1 - zb1 * z == HeisOp::zero(n)); // mixed indices commute
        }
        CHECK(z * t == t * z); // T is central
        // Associativity on a nontrivial word.
        CHECK((z * zb) * (zb * z) == z * (zb * zb) * z);
    }
}

TEST_CASE("heisenberg order grading") {
    int n = 2;
    HeisOp z = HeisOp::Z(n, 0), t = HeisOp::T(n);
    CHECK(HeisOp::zero(n).heis_order() == -1);
    CHECK(HeisOp::identity(n).heis_order() == 0);
    CHECK(z.heis_order() == 1);
    CHECK(t.heis_order() == 2);
    CHECK((z * z * t).heis_order() == 4);
    CHECK(HeisOp::sublaplacian(n).heis_order() == 2);
}

TEST_CASE("operator arithmetic agrees with honest derivatives of functions") {
    for (int n : {1, 2}) {
        FrameData f = model_frame(ModelId::heisenberg(n));
        std::mt19937_64 rng(31);
        for (int k = 0; k < 3; ++k) {
            Poly fn = random_poly(f.ring, rng, 3, 5);
            // Words multiplied in the algebra act the same as composed fields.
            HeisOp w1 = HeisOp::Zbar(n, 0) * HeisOp::Z(n, n - 1);
            HeisOp w2 = HeisOp::Z(n, n - 1) * HeisOp::Zbar(n, 0) * HeisOp::T(n);
            CHECK(apply_op(w1, f, fn) == f.Zbar[0].apply(f.Z[n - 1].apply(fn)));
            CHECK(apply_op(w2, f, fn) ==
                  f.Z[n - 1].apply(f.Zbar[0].apply(f.T.apply(fn))));
        }
    }
}

TEST_CASE("sublaplacian symbol matches the curved-space implementation at n = 1") {
    FrameData f = model_frame(ModelId::heisenberg(1));
    ConnectionData c = solve_connection(f);
    std::mt19937_64 rng(37);
    for (int k = 0; k < 4; ++k) {
        Poly fn = random_poly(f.ring, rng, 3, 5);
        CHECK(apply_op(HeisOp::sublaplacian(1), f, fn) == sublaplacian(f, c, fn));
    }
}

TEST_CASE("the composed operator splits into sublaplacian and Reeb parts") {
    // Residual of DR Gamma against ((2n^2+4n+3)/2) Delta^2 - (n(n+2)/2) T^2.
    for (int n : {1, 2, 3}) {
        HeisOp res = HeisOp::drgamma_residual(n);
        CHECK(res.is_zero()); // exactly zero, stronger than low order
        CHECK(res.heis_order() <= 3);
    }
    // Function-level oracle: apply the full composite and the split form.
    for (int n : {1, 2}) {
        FrameData f = model_frame(ModelId::heisenberg(n));
        std::mt19937_64 rng(41);
        HeisOp delta = HeisOp::sublaplacian(n), t = HeisOp::T(n);
        for (int k = 0; k < 3; ++k) {
            Poly fn = random_poly(f.ring, rng, 4, 5);
            Poly lhs = apply_op(HeisOp::drgamma_flat(n), f, fn);
            Poly d2 = apply_op(delta * delta, f, fn);
            Poly t2 = apply_op(t * t, f, fn);
            Poly rhs = d2 * GaussRat(Rational(2 * n * n + 4 * n + 3) / 2) -
                       t2 * GaussRat(Rational(n * (n + 2)) / 2);
            CHECK(lhs == rhs);
        }
    }
}
