#pragma once

#include "mtwgeo/rational.hpp"

#include <utility>
#include <vector>

namespace mtw {

/// Dense univariate polynomial over Q, coefficient k on x^k.
/// Used for resultant-free gcd certificates, characteristic polynomials
/// and Sturm-sequence real-root isolation.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> c) : coeffs_(std::move(c)) { trim(); }
    static QPoly constant(const Rational& c);
    static QPoly x();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    QPoly pow(unsigned k) const;
    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

    Rational eval(const Rational& x) const;
    QPoly derivative() const;
    /// Divide into quotient/remainder; divisor must be nonzero.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
    /// Monic gcd; gcd(0,0) = 0.
    static QPoly gcd(QPoly a, QPoly b);
    QPoly monic() const;

    /// Number of distinct real roots in (a, b], via the Sturm chain.
    int count_real_roots(const Rational& a, const Rational& b) const;
    int count_real_roots() const;
    /// Disjoint isolating intervals (one distinct real root each),
    /// bisected until each has width <= max_width.
    std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Rational& max_width) const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<QPoly> sturm_chain() const;
    static int sign_changes(const std::vector<QPoly>& chain, const Rational& x);

    std::vector<Rational> coeffs_;
};

} // namespace mtw
