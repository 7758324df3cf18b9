#pragma once

#include "mtwgeo/rational.hpp"

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace mtw {

/// Variable table and normalization rules shared by a family of polynomials.
///
/// A ring fixes the variable list, the conjugation pairing, an optional
/// truncation variable (the deformation parameter t, truncated at jet_order),
/// and monomial rewrite rules applied to a fixed point. The sphere ring
/// carries the rule z1*zb1 -> 1 - z2*zb2; the Rossi ring additionally carries
/// lam*lam -> 1 - t^2 for the exact square-root unit.
struct Ring {
    struct Rule {
        int a, b; // lhs monomial x_a * x_b
        std::vector<std::pair<std::vector<int>, GaussRat>> rhs;
    };

    std::vector<std::string> vars;
    std::vector<int> conj;      // conj[i] == i for real variables
    std::vector<int> geom_vars; // ambient coordinates (differentiable)
    int jet_var = -1;
    int jet_order = 0;
    std::vector<Rule> rules;

    int find(const std::string& name) const; // -1 when absent
};

using RingPtr = std::shared_ptr<const Ring>;

/// Multivariate polynomial over the Gaussian rationals, kept in canonical
/// form: rewrite rules applied to a fixed point, jet variable truncated,
/// no zero coefficients stored. Values are immutable; operations are pure.
class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    static Poly constant(RingPtr ring, GaussRat c);
    static Poly var(const RingPtr& ring, int v);
    static Poly var(const RingPtr& ring, const std::string& name);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant value; zero polynomial yields 0. Throws when non-constant.
    GaussRat constant_value() const;
    int term_count() const { return static_cast<int>(terms_.size()); }
    int total_degree() const;
    int degree_in(int v) const;
    GaussRat coeff(const std::vector<int>& mono) const;
    const std::map<std::vector<int>, GaussRat>& terms() const { return terms_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const GaussRat& s) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    Poly pow(unsigned k) const;

    Poly conj() const;
    /// Ambient partial derivative (taken on the stored representative).
    Poly derivative(int v) const;

    /// Coefficient of t^k as a polynomial with the jet variable cleared.
    Poly jet_coeff(int k) const;
    /// Substitute an exact value for one variable.
    Poly substitute(int v, const GaussRat& value) const;

    std::complex<double> eval(const std::vector<std::complex<double>>& point) const;

    /// Expression-grammar rendering (tokens: variables, i, rationals, + - * ^).
    std::string str() const;

    /// Build from a raw term list (normalizes).
    static Poly from_terms(RingPtr ring, std::map<std::vector<int>, GaussRat> terms);

private:
    void normalize();

    RingPtr ring_;
    std::map<std::vector<int>, GaussRat> terms_;
};

inline Poly operator*(const GaussRat& s, const Poly& p) { return p * s; }

/// Parse the plain-text expression grammar over the ring's variables.
/// Throws std::runtime_error with a position message on bad input.
Poly parse_poly(const RingPtr& ring, const std::string& text);

// --- truncated jets in the ring's deformation variable ---------------------

/// Taylor jet of e^{t u}: sum_k t^k u^k / k!. u must not involve t.
Poly jet_exp(const Poly& u);
/// Two-sided inverse to the ring's jet order. The t^0 coefficient must be a
/// nonzero constant.
Poly jet_invert(const Poly& j);
/// Jet of (1 + x)^{1/2} evaluated at x = p, where p has zero constant term.
Poly jet_sqrt_one_plus(const Poly& p);

} // namespace mtw
