#include "mtwgeo/spectral.hpp"

#include <doctest.h>

using namespace mtw;

TEST_CASE("normalized sphere integrals of monomials") {
    RingPtr r = sphere_ring();
    Poly z1 = Poly::var(r, "z1"), z2 = Poly::var(r, "z2");
    CHECK(sphere_integral(Poly::constant(r, GaussRat(1))) == GaussRat(1));
    CHECK(sphere_integral(z1 * z1.conj()) == GaussRat(Rational(1) / 2));
    CHECK(sphere_integral(z1 * z1 * z1.conj() * z1.conj()) == GaussRat(Rational(1) / 3));
    CHECK(sphere_integral(z1 * z2.conj()) == GaussRat{});
    CHECK(sphere_integral(z1 * z1.conj() * z2 * z2.conj()) == GaussRat(Rational(1) / 6));
}

TEST_CASE("harmonic spaces: dimension, orthogonality, exact expansion") {
    RingPtr r = sphere_ring();
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; p + q <= 4; ++q) {
            auto basis = harmonic_basis(r, p, q);
            CHECK(int(basis.size()) == p + q + 1);
            for (size_t i = 0; i < basis.size(); ++i)
                for (size_t j = i + 1; j < basis.size(); ++j)
                    CHECK(inner_product(basis[i], basis[j]) == GaussRat{});
        }
    SpectralSpace S = harmonic_space(r, {{2, 1}, {1, 2}});
    Poly f = S.basis[0] * GaussRat(Rational(3) / 2) - S.basis[4] * GaussRat::i();
    auto coords = S.expand(f);
    CHECK(coords[0] == GaussRat(Rational(3) / 2));
    CHECK(coords[4] == -GaussRat::i());
    for (int i : {1, 2, 3, 5, 6, 7}) CHECK(coords[i] == GaussRat{});
}

TEST_CASE("sublaplacian is the exact scalar on harmonic blocks") {
    FrameData f = model_frame(ModelId::sphere3());
    ConnectionData c = solve_connection(f);
    for (int p = 0; p <= 6; ++p)
        for (int q = 0; p + q <= 6; ++q) {
            SpectralSpace S = harmonic_space(f.ring, {{p, q}});
            Mat L = operator_matrix(S, [&](const Poly& u) { return sublaplacian(f, c, u); });
            CHECK(L == Mat::identity(S.dim()).scaled(GaussRat(Rational(-(2 * p * q + p + q)))));
        }
}

TEST_CASE("serial and parallel matrix assembly agree") {
    FrameData f = model_frame(ModelId::sphere3());
    ConnectionData c = solve_connection(f);
    SpectralSpace S = harmonic_space_upto(f.ring, 4);
    auto op = drgamma_op(f, c);
    CHECK(operator_matrix(S, op, false) == operator_matrix(S, op, true));
}

TEST_CASE("charpolys of the double-derivative block operator") {
    CHECK(zz_charpoly(2, 0) == QPoly(std::vector<Rational>{-4, 0, 1}).pow(3));
    CHECK(zz_charpoly(3, 1) == QPoly(std::vector<Rational>{-36, 0, 1}).pow(5));
    // Nilpotent on the (1,0) + (0,1) block.
    CHECK(zz_charpoly(1, 0) == QPoly::x().pow(4));
}

TEST_CASE("exact kernels of the adjoint operator") {
    KernelResult sph = exact_kernel(ModelId::sphere3());
    CHECK(sph.real_dimension == 4);
    CHECK(sph.eigenvalue_target == Rational(1));
    REQUIRE(sph.admissible.size() == 2);

    const Rational ts[] = {Rational(1) / 10, Rational(1) / 2, Rational(-3) / 4};
    for (const Rational& t : ts) {
        KernelResult k = exact_kernel(ModelId::rossi3(t));
        Rational omt2 = 1 - t * t;
        CHECK(k.eigenvalue_target == (1 + 18 * t * t + t * t * t * t) / (omt2 * omt2));
        CHECK(k.real_dimension == 0);
    }
}

TEST_CASE("no-solution certificates are internally consistent") {
    auto certs = rossi_certificates();
    REQUIRE(certs.size() == 2);
    // Independent reconstruction of both polynomials from the closed forms:
    // scalar: lambda (1-t^2)^2 - (1 + 18 t^2 + t^4),
    // torsion (squared): e^2 (1-t^2)^4 - 100 t^2 (1+t^2)^2.
    QPoly omt2(std::vector<Rational>{1, 0, -1});
    QPoly num(std::vector<Rational>{1, 0, 18, 0, 1});
    QPoly t2(std::vector<Rational>{0, 0, 1});
    QPoly opt2(std::vector<Rational>{1, 0, 1});
    for (const Certificate& c : certs) {
        QPoly scalar = omt2 * omt2 * QPoly::constant(c.lambda) - num;
        QPoly torsion =
            omt2.pow(4) * QPoly::constant(c.zz_eigen2) - t2 * opt2 * opt2 * QPoly::constant(100);
        CHECK(c.scalar_eq == scalar);
        CHECK(c.torsion_eq == torsion);
        CHECK(c.gcd == QPoly::constant(1));
        for (auto& [lo, hi] : c.scalar_roots_in_unit) {
            CHECK(lo > Rational(-1));
            CHECK(hi < Rational(1));
            CHECK(c.scalar_eq.count_real_roots(lo, hi) == 1);
        }
    }
    CHECK(certs[0].lambda == Rational(2));
    CHECK(certs[0].zz_eigen2 == Rational(4));
    CHECK(certs[1].lambda == Rational(10));
    CHECK(certs[1].zz_eigen2 == Rational(36));
}

TEST_CASE("spectral analysis of the composed operator at moderate degree") {
    DrGammaAnalysis A = drgamma_analysis(5, true);
    CHECK(A.hermitian);
    CHECK(A.psd);
    CHECK(A.kernel_dim == 4);
    CHECK(A.diagonal);
    // The constant block is not in the kernel: composed value 4.
    bool found_const = false;
    for (int i = 0; i < A.space.dim(); ++i)
        if (A.space.deg[i] == std::pair<int, int>{0, 0}) {
            found_const = true;
            CHECK(A.diag[i] == GaussRat(4));
        }
    CHECK(found_const);
}
