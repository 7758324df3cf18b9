#include "mtwgeo/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace mtw;

namespace {
Mat random_mat(std::mt19937_64& rng, int rows, int cols) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = GaussRat(Rational(int(rng() % 9) - 4)) +
                         GaussRat::i() * GaussRat(Rational(int(rng() % 5) - 2));
    return m;
}
} // namespace

TEST_CASE("rank of a product is bounded by the inner dimension") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 10; ++k) {
        Mat b = random_mat(rng, 5, 2), c = random_mat(rng, 2, 6);
        CHECK((b * c).rank() <= 2);
    }
    CHECK(Mat::identity(4).rank() == 4);
}

TEST_CASE("nullspace vectors are annihilated and complete") {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 6; ++k) {
        Mat b = random_mat(rng, 3, 2), c = random_mat(rng, 2, 5);
        Mat a = b * c; // rank <= 2, nullity >= 3
        auto ns = a.nullspace();
        CHECK(int(ns.size()) == a.cols() - a.rank());
        for (const auto& v : ns) {
            for (int i = 0; i < a.rows(); ++i) {
                GaussRat s;
                for (int j = 0; j < a.cols(); ++j) s = s + a.at(i, j) * v[j];
                CHECK(s == GaussRat{});
            }
        }
    }
}

TEST_CASE("solve recovers a known solution") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 6; ++k) {
        Mat a = random_mat(rng, 4, 4);
        if (a.rank() < 4) continue;
        Mat x = random_mat(rng, 4, 2);
        auto got = a.solve(a * x);
        REQUIRE(got.has_value());
        CHECK(*got == x);
    }
}

TEST_CASE("characteristic polynomial") {
    SUBCASE("companion matrix of x^3 - 2x + 5") {
        Mat c(3, 3);
        c.at(0, 2) = GaussRat(Rational(-5));
        c.at(1, 0) = GaussRat(1);
        c.at(1, 2) = GaussRat(2);
        c.at(2, 1) = GaussRat(1);
        CHECK(c.charpoly_real() == QPoly(std::vector<Rational>{5, -2, 0, 1}));
    }
    SUBCASE("Cayley-Hamilton on random hermitian matrices") {
        std::mt19937_64 rng(6);
        for (int k = 0; k < 4; ++k) {
            Mat b = random_mat(rng, 3, 3);
            Mat a = b + b.conj_transpose(); // hermitian => real charpoly
            QPoly p = a.charpoly_real();
            Mat acc(3, 3);
            Mat pw = Mat::identity(3);
            for (int d = 0; d <= p.degree(); ++d) {
                acc = acc + pw.scaled(GaussRat(p.coeff(d)));
                pw = pw * a;
            }
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("exact positive semidefiniteness") {
    std::mt19937_64 rng(7);
    Mat b = random_mat(rng, 3, 4);
    Mat g = b.conj_transpose() * b; // Gram matrix, PSD
    CHECK(g.is_hermitian());
    CHECK(g.is_psd_hermitian());
    Mat neg = g - Mat::identity(4).scaled(GaussRat(1000));
    CHECK_FALSE(neg.is_psd_hermitian());
}

TEST_CASE("univariate gcd and real-root isolation") {
    QPoly a = QPoly(std::vector<Rational>{-1, 1}) * QPoly(std::vector<Rational>{1, 0, 1});
    QPoly b = QPoly(std::vector<Rational>{-1, 1}) * QPoly(std::vector<Rational>{2, 1});
    CHECK(QPoly::gcd(a, b) == QPoly(std::vector<Rational>{-1, 1}));

    // (x^2 - 2)(x^2 - 3): two positive real roots in (0, 2].
    QPoly p = QPoly(std::vector<Rational>{-2, 0, 1}) * QPoly(std::vector<Rational>{-3, 0, 1});
    CHECK(p.count_real_roots(0, 2) == 2);
    CHECK(p.count_real_roots(-2, 2) == 4);
    auto iso = p.isolate_real_roots(Rational(1) / 64);
    CHECK(iso.size() == 4);
    for (auto& [lo, hi] : iso) {
        CHECK(hi - lo <= Rational(1) / 64);
        CHECK(p.count_real_roots(lo, hi) == 1);
    }
}
