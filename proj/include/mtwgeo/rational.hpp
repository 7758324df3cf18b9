#pragma once

#include <gmpxx.h>
#include <string>

namespace mtw {

using Rational = mpq_class;

/// Gaussian rational a + bi with exact rational parts.
struct GaussRat {
    Rational re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long n) : re(n), im(0) {}
    GaussRat(const Rational& r) : re(r), im(0) {}
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }
    Rational norm() const { return re * re + im * im; }

    GaussRat operator-() const { return GaussRat(-re, -im); }
    GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
    GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
    GaussRat operator*(const GaussRat& o) const {
        return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GaussRat operator/(const GaussRat& o) const {
        Rational n = o.norm();
        GaussRat p = *this * o.conj();
        return GaussRat(p.re / n, p.im / n);
    }
    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }
};

inline GaussRat operator*(const Rational& r, const GaussRat& g) { return GaussRat(r * g.re, r * g.im); }

std::string to_string(const Rational& r);
/// Serialized as "p/q" when real, "p/q+r/s i" otherwise (CLI report format).
std::string to_string(const GaussRat& g);

double to_double(const Rational& r);
inline double re_double(const GaussRat& g) { return to_double(g.re); }

} // namespace mtw
