#include "mtwgeo/heisenberg_op.hpp"

#include <sstream>
#include <stdexcept>

namespace mtw {

HeisOp HeisOp::identity(int n) {
    HeisOp h(n);
    h.terms_[{std::vector<int>(n, 0), std::vector<int>(n, 0), 0}] = GaussRat(1);
    return h;
}

HeisOp HeisOp::Z(int n, int a) {
    HeisOp h(n);
    std::vector<int> e(n, 0);
    e[a] = 1;
    h.terms_[{e, std::vector<int>(n, 0), 0}] = GaussRat(1);
    return h;
}

HeisOp HeisOp::Zbar(int n, int a) {
    HeisOp h(n);
    std::vector<int> e(n, 0);
    e[a] = 1;
    h.terms_[{std::vector<int>(n, 0), e, 0}] = GaussRat(1);
    return h;
}

HeisOp HeisOp::T(int n) {
    HeisOp h(n);
    h.terms_[{std::vector<int>(n, 0), std::vector<int>(n, 0), 1}] = GaussRat(1);
    return h;
}

int HeisOp::heis_order() const {
    int d = -1;
    for (const auto& [key, c] : terms_) {
        const auto& [a, b, k] = key;
        int s = 2 * k;
        for (int e : a) s += e;
        for (int e : b) s += e;
        d = std::max(d, s);
    }
    return d;
}

HeisOp HeisOp::operator+(const HeisOp& o) const {
    HeisOp h = *this;
    for (const auto& [key, c] : o.terms_) {
        auto [pos, fresh] = h.terms_.try_emplace(key, GaussRat());
        pos->second += c;
        if (pos->second.is_zero()) h.terms_.erase(pos);
    }
    return h;
}

HeisOp HeisOp::operator-() const {
    HeisOp h = *this;
    for (auto& [key, c] : h.terms_) c = -c;
    return h;
}

HeisOp HeisOp::operator-(const HeisOp& o) const { return *this + (-o); }

HeisOp HeisOp::operator*(const GaussRat& s) const {
    if (s.is_zero()) return HeisOp(n_);
    HeisOp h = *this;
    for (auto& [key, c] : h.terms_) c = c * s;
    return h;
}

HeisOp HeisOp::mul_Z(int a) const {
    // (Z^p Zbar^b T^k) Z_a = Z^{p+e_a} Zbar^b T^k + i b_a Z^p Zbar^{b-e_a} T^{k+1}
    HeisOp h(n_);
    for (const auto& [key, c] : terms_) {
        auto [p, b, k] = key;
        {
            auto pp = p;
            pp[a] += 1;
            auto [pos, fresh] = h.terms_.try_emplace(Key{pp, b, k}, GaussRat());
            pos->second += c;
            if (pos->second.is_zero()) h.terms_.erase(pos);
        }
        if (b[a] > 0) {
            auto bb = b;
            bb[a] -= 1;
            GaussRat coef = GaussRat(Rational((long)b[a])) * GaussRat::i() * c;
            auto [pos, fresh] = h.terms_.try_emplace(Key{p, bb, k + 1}, GaussRat());
            pos->second += coef;
            if (pos->second.is_zero()) h.terms_.erase(pos);
        }
    }
    return h;
}

HeisOp HeisOp::mul_Zbar(int a) const {
    HeisOp h(n_);
    for (const auto& [key, c] : terms_) {
        auto [p, b, k] = key;
        auto bb = b;
        bb[a] += 1;
        auto [pos, fresh] = h.terms_.try_emplace(Key{p, bb, k}, GaussRat());
        pos->second += c;
        if (pos->second.is_zero()) h.terms_.erase(pos);
    }
    return h;
}

HeisOp HeisOp::mul_T() const {
    HeisOp h(n_);
    for (const auto& [key, c] : terms_) {
        auto [p, b, k] = key;
        h.terms_[{p, b, k + 1}] = c;
    }
    return h;
}

HeisOp HeisOp::operator*(const HeisOp& o) const {
    if (n_ != o.n_) throw std::invalid_argument("HeisOp: rank mismatch");
    HeisOp out(n_);
    for (const auto& [key, c] : o.terms_) {
        const auto& [p, b, k] = key;
        HeisOp acc = *this * c;
        for (int a = 0; a < n_; ++a)
            for (int e = 0; e < p[a]; ++e) acc = acc.mul_Z(a);
        for (int a = 0; a < n_; ++a)
            for (int e = 0; e < b[a]; ++e) acc = acc.mul_Zbar(a);
        for (int e = 0; e < k; ++e) acc = acc.mul_T();
        out = out + acc;
    }
    return out;
}

std::string HeisOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        const auto& [a, b, k] = key;
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(c) << ")";
        for (int j = 0; j < n_; ++j)
            if (a[j]) os << "*Z" << j + 1 << (a[j] > 1 ? "^" + std::to_string(a[j]) : "");
        for (int j = 0; j < n_; ++j)
            if (b[j]) os << "*Zb" << j + 1 << (b[j] > 1 ? "^" + std::to_string(b[j]) : "");
        if (k) os << "*T" << (k > 1 ? "^" + std::to_string(k) : "");
    }
    return os.str();
}

HeisOp HeisOp::sublaplacian(int n) {
    HeisOp d(n);
    for (int a = 0; a < n; ++a)
        d = d + HeisOp::Z(n, a) * HeisOp::Zbar(n, a) + HeisOp::Zbar(n, a) * HeisOp::Z(n, a);
    return d;
}

HeisOp HeisOp::drgamma_flat(int n) {
    HeisOp out(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            out = out + Zbar(n, a) * Zbar(n, b) * Z(n, a) * Z(n, b);
            out = out + Z(n, a) * Z(n, b) * Zbar(n, a) * Zbar(n, b);
        }
    HeisOp d = sublaplacian(n);
    return out + d * d * GaussRat(Rational((n + 1) * (n + 1)));
}

HeisOp HeisOp::drgamma_residual(int n) {
    HeisOp d = sublaplacian(n);
    HeisOp t = T(n);
    HeisOp principal = d * d * GaussRat(Rational(2 * n * n + 4 * n + 3) / 2) -
                       t * t * GaussRat(Rational(n * (n + 2)) / 2);
    return drgamma_flat(n) - principal;
}

} // namespace mtw
