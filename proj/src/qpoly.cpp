#include "mtwgeo/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace mtw {

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r.get_num();
    if (r.get_den() != 1) os << "/" << r.get_den();
    return os.str();
}

std::string to_string(const GaussRat& g) {
    if (g.im == 0) return to_string(g.re);
    std::string im = to_string(g.im) + " i";
    if (g.re == 0) return im;
    if (g.im > 0) return to_string(g.re) + "+" + im;
    return to_string(g.re) + im; // sign carried by the numerator
}

double to_double(const Rational& r) { return r.get_d(); }

QPoly QPoly::constant(const Rational& c) {
    if (c == 0) return QPoly{};
    return QPoly({c});
}

QPoly QPoly::x() { return QPoly({Rational(0), Rational(1)}); }

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& QPoly::coeff(int k) const {
    static const Rational zero(0);
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[k];
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (size_t k = 0; k < o.coeffs_.size(); ++k) c[k] += o.coeffs_[k];
    return QPoly(std::move(c));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
    std::vector<Rational> c(coeffs_);
    for (auto& x : c) x = -x;
    return QPoly(std::move(c));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly{};
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t j = 0; j < coeffs_.size(); ++j)
        for (size_t k = 0; k < o.coeffs_.size(); ++k) c[j + k] += coeffs_[j] * o.coeffs_[k];
    return QPoly(std::move(c));
}

QPoly QPoly::pow(unsigned k) const {
    QPoly r = constant(Rational(1));
    for (unsigned j = 0; j < k; ++j) r = r * *this;
    return r;
}

Rational QPoly::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

QPoly QPoly::derivative() const {
    if (coeffs_.size() <= 1) return QPoly{};
    std::vector<Rational> c(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = Rational((long)k) * coeffs_[k];
    return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("QPoly: division by zero");
    QPoly r = *this;
    std::vector<Rational> q(std::max<int>(0, degree() - d.degree() + 1), Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Rational f = r.coeffs_.back() / d.coeffs_.back();
        int shift = r.degree() - d.degree();
        q[shift] = f;
        std::vector<Rational> sub(shift, Rational(0));
        for (const auto& c : d.coeffs_) sub.push_back(f * c);
        r = r - QPoly(std::move(sub));
    }
    return {QPoly(std::move(q)), r};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> c(coeffs_);
    Rational lead = c.back();
    for (auto& x : c) x /= lead;
    return QPoly(std::move(c));
}

std::vector<QPoly> QPoly::sturm_chain() const {
    std::vector<QPoly> chain;
    chain.push_back(*this);
    chain.push_back(derivative());
    while (!chain.back().is_zero()) {
        QPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

int QPoly::sign_changes(const std::vector<QPoly>& chain, const Rational& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        Rational v = p.eval(x);
        int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
    }
    return changes;
}

int QPoly::count_real_roots(const Rational& a, const Rational& b) const {
    if (is_zero()) throw std::invalid_argument("QPoly: root count of zero polynomial");
    auto chain = sturm_chain();
    return sign_changes(chain, a) - sign_changes(chain, b);
}

int QPoly::count_real_roots() const {
    // Cauchy bound.
    Rational bound(1);
    for (const auto& c : coeffs_) {
        Rational m = abs(c / coeffs_.back());
        if (m > bound) bound = m;
    }
    bound += 1;
    return count_real_roots(-bound, bound);
}

std::vector<std::pair<Rational, Rational>> QPoly::isolate_real_roots(const Rational& max_width) const {
    Rational bound(1);
    for (const auto& c : coeffs_) {
        Rational m = abs(c / coeffs_.back());
        if (m > bound) bound = m;
    }
    bound += 1;
    auto chain = sturm_chain();
    std::vector<std::pair<Rational, Rational>> out;
    std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        int count = sign_changes(chain, a) - sign_changes(chain, b);
        if (count == 0) continue;
        if (count == 1 && b - a <= max_width) {
            out.push_back({a, b});
            continue;
        }
        Rational mid = (a + b) / 2;
        if (eval(mid) == 0) {
            // Nudge the split so the root stays interior to one half.
            Rational quarter = (b - a) / 4;
            work.push_back({a, mid + quarter});
            work.push_back({mid + quarter, b});
        } else {
            work.push_back({a, mid});
            work.push_back({mid, b});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeff(k);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        Rational a = first ? c : abs(c);
        first = false;
        if (k == 0 || a != 1) os << to_string(a);
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace mtw
