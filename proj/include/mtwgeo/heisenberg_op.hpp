#pragma once

#include "mtwgeo/rational.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace mtw {

/// Left-invariant differential operator on the Heisenberg group H^n with
/// constant coefficients, kept in normal order Z^a Zbar^b T^k using
/// [Z_a, Zbar_b] = -i delta_ab T with T central. The Heisenberg order
/// grades Z and Zbar at 1 and T at 2.
class HeisOp {
public:
    explicit HeisOp(int n) : n_(n) {}
    static HeisOp zero(int n) { return HeisOp(n); }
    static HeisOp identity(int n);
    static HeisOp Z(int n, int a);
    static HeisOp Zbar(int n, int a);
    static HeisOp T(int n);

    /// Normal-ordered term key: (Z exponents, Zbar exponents, T power).
    using Key = std::tuple<std::vector<int>, std::vector<int>, int>;

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, GaussRat>& terms() const { return terms_; }
    int heis_order() const; // max |a| + |b| + 2k over nonzero terms, -1 when zero

    HeisOp operator+(const HeisOp& o) const;
    HeisOp operator-(const HeisOp& o) const;
    HeisOp operator*(const HeisOp& o) const;
    HeisOp operator*(const GaussRat& s) const;
    HeisOp operator-() const;
    bool operator==(const HeisOp& o) const { return terms_ == o.terms_; }

    std::string str() const;

    /// Sublaplacian sum_a (Z_a Zbar_a + Zbar_a Z_a).
    static HeisOp sublaplacian(int n);
    /// The flat composite DR Gamma:
    /// sum_ab Zbar_a Zbar_b Z_a Z_b + sum_ab Z_a Z_b Zbar_a Zbar_b + (n+1)^2 Delta_b^2.
    static HeisOp drgamma_flat(int n);
    /// DR Gamma minus its Heisenberg-principal part
    /// ((2n^2+4n+3)/2) Delta_b^2 - (n(n+2)/2) T^2.
    static HeisOp drgamma_residual(int n);

private:
    HeisOp mul_Z(int a) const; // append one generator on the right
    HeisOp mul_Zbar(int a) const;
    HeisOp mul_T() const;

    int n_;
    std::map<Key, GaussRat> terms_;
};

} // namespace mtw
