#include "mtwgeo/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mtw {

int Ring::find(const std::string& name) const {
    for (size_t k = 0; k < vars.size(); ++k)
        if (vars[k] == name) return static_cast<int>(k);
    return -1;
}

Poly Poly::constant(RingPtr ring, GaussRat c) {
    Poly p(std::move(ring));
    if (!c.is_zero()) p.terms_[std::vector<int>(p.ring_->vars.size(), 0)] = std::move(c);
    return p;
}

Poly Poly::var(const RingPtr& ring, int v) {
    std::map<std::vector<int>, GaussRat> t;
    std::vector<int> mono(ring->vars.size(), 0);
    mono[v] = 1;
    t[std::move(mono)] = GaussRat(1);
    return from_terms(ring, std::move(t));
}

Poly Poly::var(const RingPtr& ring, const std::string& name) {
    int v = ring->find(name);
    if (v < 0) throw std::invalid_argument("Poly::var: unknown variable " + name);
    return var(ring, v);
}

Poly Poly::from_terms(RingPtr ring, std::map<std::vector<int>, GaussRat> terms) {
    Poly p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Poly::normalize() {
    const Ring& R = *ring_;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second.is_zero()) { it = terms_.erase(it); changed = true; continue; }
            if (R.jet_var >= 0 && it->first[R.jet_var] > R.jet_order) {
                it = terms_.erase(it);
                changed = true;
                continue;
            }
            const Ring::Rule* hit = nullptr;
            for (const auto& rule : R.rules) {
                const std::vector<int>& m = it->first;
                bool div = (rule.a == rule.b) ? m[rule.a] >= 2 : (m[rule.a] >= 1 && m[rule.b] >= 1);
                if (div) { hit = &rule; break; }
            }
            if (!hit) { ++it; continue; }
            std::vector<int> quot = it->first;
            quot[hit->a] -= 1;
            quot[hit->b] -= 1;
            GaussRat c = it->second;
            it = terms_.erase(it);
            for (const auto& [rexp, rc] : hit->rhs) {
                std::vector<int> m = quot;
                for (size_t k = 0; k < m.size(); ++k) m[k] += rexp[k];
                auto [pos, fresh] = terms_.try_emplace(std::move(m), GaussRat());
                pos->second += c * rc;
            }
            changed = true;
            break; // map iterators invalidated; restart scan
        }
    }
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (int e : terms_.begin()->first)
        if (e != 0) return false;
    return true;
}

GaussRat Poly::constant_value() const {
    if (terms_.empty()) return GaussRat();
    if (!is_constant()) throw std::runtime_error("Poly: non-constant where constant expected: " + str());
    return terms_.begin()->second;
}

int Poly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (int e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

int Poly::degree_in(int v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
}

GaussRat Poly::coeff(const std::vector<int>& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? GaussRat() : it->second;
}

Poly Poly::operator+(const Poly& o) const {
    std::map<std::vector<int>, GaussRat> t = terms_;
    for (const auto& [m, c] : o.terms_) {
        auto [pos, fresh] = t.try_emplace(m, GaussRat());
        pos->second += c;
    }
    return from_terms(ring_ ? ring_ : o.ring_, std::move(t));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly p(ring_);
    for (const auto& [m, c] : terms_) p.terms_[m] = -c;
    return p;
}

Poly Poly::operator*(const GaussRat& s) const {
    if (s.is_zero()) return Poly(ring_);
    Poly p(ring_);
    for (const auto& [m, c] : terms_) p.terms_[m] = c * s;
    return p;
}

Poly Poly::operator*(const Poly& o) const {
    std::map<std::vector<int>, GaussRat> t;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            std::vector<int> m = m1;
            for (size_t k = 0; k < m.size(); ++k) m[k] += m2[k];
            auto [pos, fresh] = t.try_emplace(std::move(m), GaussRat());
            pos->second += c1 * c2;
        }
    return from_terms(ring_ ? ring_ : o.ring_, std::move(t));
}

Poly Poly::pow(unsigned k) const {
    Poly r = constant(ring_, GaussRat(1));
    for (unsigned j = 0; j < k; ++j) r = r * *this;
    return r;
}

Poly Poly::conj() const {
    const Ring& R = *ring_;
    std::map<std::vector<int>, GaussRat> t;
    for (const auto& [m, c] : terms_) {
        std::vector<int> cm(m.size(), 0);
        for (size_t k = 0; k < m.size(); ++k) cm[R.conj[k]] = m[k];
        t[std::move(cm)] = c.conj();
    }
    return from_terms(ring_, std::move(t));
}

Poly Poly::derivative(int v) const {
    std::map<std::vector<int>, GaussRat> t;
    for (const auto& [m, c] : terms_) {
        if (m[v] == 0) continue;
        std::vector<int> dm = m;
        dm[v] -= 1;
        auto [pos, fresh] = t.try_emplace(std::move(dm), GaussRat());
        pos->second += GaussRat(Rational((long)m[v])) * c;
    }
    return from_terms(ring_, std::move(t));
}

Poly Poly::jet_coeff(int k) const {
    const Ring& R = *ring_;
    if (R.jet_var < 0) throw std::runtime_error("Poly::jet_coeff: ring has no jet variable");
    std::map<std::vector<int>, GaussRat> t;
    for (const auto& [m, c] : terms_) {
        if (m[R.jet_var] != k) continue;
        std::vector<int> mm = m;
        mm[R.jet_var] = 0;
        t[std::move(mm)] = c;
    }
    return from_terms(ring_, std::move(t));
}

Poly Poly::substitute(int v, const GaussRat& value) const {
    std::map<std::vector<int>, GaussRat> t;
    for (const auto& [m, c] : terms_) {
        GaussRat f = c;
        for (int e = 0; e < m[v]; ++e) f *= value;
        std::vector<int> mm = m;
        mm[v] = 0;
        auto [pos, fresh] = t.try_emplace(std::move(mm), GaussRat());
        pos->second += f;
    }
    return from_terms(ring_, std::move(t));
}

std::complex<double> Poly::eval(const std::vector<std::complex<double>>& point) const {
    std::complex<double> sum = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> v(to_double(c.re), to_double(c.im));
        for (size_t k = 0; k < m.size(); ++k)
            for (int e = 0; e < m[k]; ++e) v *= point[k];
        sum += v;
    }
    return sum;
}

namespace {

std::string coef_str(const GaussRat& c) {
    if (c.im == 0) return to_string(c.re);
    if (c.re == 0) {
        if (c.im == 1) return "i";
        if (c.im == -1) return "-i";
        return to_string(c.im) + "*i";
    }
    return "(" + to_string(c) + ")";
}

} // namespace

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = coef_str(c);
        if (!first) os << (cs[0] == '-' ? " " : " + ");
        first = false;
        bool has_var = false;
        std::ostringstream vars;
        for (size_t k = 0; k < m.size(); ++k) {
            if (m[k] == 0) continue;
            if (has_var) vars << "*";
            has_var = true;
            vars << ring_->vars[k];
            if (m[k] > 1) vars << "^" << m[k];
        }
        if (!has_var) {
            os << cs;
        } else if (cs == "1") {
            os << vars.str();
        } else if (cs == "-1") {
            os << "-" << vars.str();
        } else {
            os << cs << "*" << vars.str();
        }
    }
    return os.str();
}

// --- expression parser -----------------------------------------------------

namespace {

struct Parser {
    const RingPtr& ring;
    const std::string& s;
    size_t pos = 0;

    void skip() { while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos; }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg);
    }

    Poly expr() {
        Poly r = term();
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }

    Poly term() {
        Poly r = factor();
        while (eat('*')) r = r * factor();
        return r;
    }

    Poly factor() {
        Poly a = atom();
        skip();
        if (eat('^')) {
            skip();
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            if (pos == start) fail("expected exponent");
            a = a.pow(std::stoul(s.substr(start, pos - start)));
        }
        return a;
    }

    Poly atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == '-') { ++pos; return -factor(); }
        if (std::isdigit((unsigned char)c)) return rational();
        if (std::isalpha((unsigned char)c)) {
            size_t start = pos;
            while (pos < s.size() && (std::isalnum((unsigned char)s[pos]))) ++pos;
            std::string name = s.substr(start, pos - start);
            if (name == "i") return Poly::constant(ring, GaussRat::i());
            int v = ring->find(name);
            if (v < 0) fail("unknown variable '" + name + "'");
            return Poly::var(ring, v);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Poly rational() {
        auto integer = [&]() -> mpz_class {
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            if (pos == start) fail("expected integer");
            return mpz_class(s.substr(start, pos - start));
        };
        mpz_class num = integer();
        mpz_class den = 1;
        size_t save = pos;
        skip();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            skip();
            if (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
                den = integer();
                if (den == 0) fail("zero denominator");
            } else {
                pos = save; // '/' belonged to something else
            }
        } else {
            pos = save;
        }
        Rational q(num, den);
        q.canonicalize();
        return Poly::constant(ring, GaussRat(q));
    }
};

} // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
    Parser p{ring, text};
    Poly r = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

// --- jets ------------------------------------------------------------------

Poly jet_exp(const Poly& u) {
    const Ring& R = *u.ring();
    if (R.jet_var < 0) throw std::runtime_error("jet_exp: ring has no jet variable");
    if (u.degree_in(R.jet_var) > 0) throw std::invalid_argument("jet_exp: u must not involve t");
    Poly t = Poly::var(u.ring(), R.jet_var);
    Poly sum = Poly::constant(u.ring(), GaussRat(1));
    Poly pow = sum;
    Rational fact(1);
    for (int k = 1; k <= R.jet_order; ++k) {
        pow = pow * t * u;
        fact *= k;
        sum += pow * GaussRat(Rational(1) / fact);
    }
    return sum;
}

Poly jet_invert(const Poly& j) {
    const Ring& R = *j.ring();
    if (R.jet_var < 0) throw std::runtime_error("jet_invert: ring has no jet variable");
    Poly head = j.jet_coeff(0);
    if (!head.is_constant() || head.constant_value().is_zero())
        throw std::invalid_argument("jet_invert: constant term is not an invertible constant");
    GaussRat c = head.constant_value();
    GaussRat cinv = GaussRat(1) / c;
    Poly r = Poly::constant(j.ring(), GaussRat(1)) - j * cinv; // vanishes at order 0
    Poly sum = Poly::constant(j.ring(), GaussRat(1));
    Poly pow = sum;
    for (int k = 1; k <= R.jet_order; ++k) {
        pow = pow * r;
        sum += pow;
    }
    return sum * cinv;
}

Poly jet_sqrt_one_plus(const Poly& p) {
    const Ring& R = *p.ring();
    if (!p.jet_coeff(0).is_zero())
        throw std::invalid_argument("jet_sqrt_one_plus: argument must vanish at order 0");
    // Binomial series: sum_k C(1/2, k) p^k.
    Poly sum = Poly::constant(p.ring(), GaussRat(1));
    Poly pow = sum;
    Rational binom(1);
    for (int k = 1; k <= R.jet_order; ++k) {
        binom *= Rational(3 - 2 * k) / (2 * k); // C(1/2,k) = C(1/2,k-1) * (1/2 - k + 1)/k
        pow = pow * p;
        sum += pow * GaussRat(binom);
    }
    return sum;
}

} // namespace mtw
