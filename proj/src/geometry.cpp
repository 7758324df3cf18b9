#include "mtwgeo/geometry.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace mtw {

// --- models ----------------------------------------------------------------

ModelId ModelId::rossi3(const Rational& t) {
    if (abs(t) >= 1) throw std::invalid_argument("rossi3: parameter must satisfy |t| < 1");
    ModelId m;
    m.kind = Kind::Rossi3;
    m.t = t;
    return m;
}

ModelId ModelId::rossi_jet(int order) {
    if (order < 1) throw std::invalid_argument("rossi_jet: order must be >= 1");
    ModelId m;
    m.kind = Kind::RossiJet;
    m.jet_order = order;
    return m;
}

ModelId ModelId::heisenberg(int n) {
    if (n < 1) throw std::invalid_argument("heisenberg: n must be >= 1");
    ModelId m;
    m.kind = Kind::Heisenberg;
    m.n = n;
    return m;
}

std::optional<ModelId> ModelId::parse(const std::string& s) {
    if (s == "sphere3") return sphere3();
    if (s.rfind("rossi:", 0) == 0) {
        mpq_class t;
        if (t.set_str(s.substr(6), 10) != 0) return std::nullopt;
        t.canonicalize();
        if (abs(t) >= 1) return std::nullopt;
        return rossi3(t);
    }
    if (s.rfind("heisenberg:", 0) == 0) {
        try {
            size_t used = 0;
            int n = std::stoi(s.substr(11), &used);
            if (used != s.size() - 11 || n < 1) return std::nullopt;
            return heisenberg(n);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::string ModelId::str() const {
    switch (kind) {
    case Kind::Sphere3: return "sphere3";
    case Kind::Rossi3: return "rossi:" + to_string(t);
    case Kind::RossiJet: return "rossi-jet:" + std::to_string(jet_order);
    case Kind::Heisenberg: return "heisenberg:" + std::to_string(n);
    }
    return "?";
}

// --- rings -----------------------------------------------------------------

static void add_sphere_rule(Ring& R) {
    size_t nv = R.vars.size();
    Ring::Rule rule;
    rule.a = 0; // z1
    rule.b = 2; // zb1
    std::vector<int> one(nv, 0), m(nv, 0);
    m[1] = m[3] = 1; // z2*zb2
    rule.rhs = {{one, GaussRat(1)}, {m, GaussRat(-1)}};
    R.rules.push_back(rule);
}

RingPtr sphere_ring(int jet_order) {
    auto R = std::make_shared<Ring>();
    R->vars = {"z1", "z2", "zb1", "zb2"};
    R->conj = {2, 3, 0, 1};
    R->geom_vars = {0, 1, 2, 3};
    if (jet_order > 0) {
        R->vars.push_back("t");
        R->conj.push_back(4);
        R->jet_var = 4;
        R->jet_order = jet_order;
    }
    add_sphere_rule(*R);
    return R;
}

RingPtr rossi_ring(const Rational& t) {
    if (abs(t) >= 1) throw std::invalid_argument("rossi_ring: |t| < 1 required");
    auto R = std::make_shared<Ring>();
    R->vars = {"z1", "z2", "zb1", "zb2", "lam"};
    R->conj = {2, 3, 0, 1, 4};
    R->geom_vars = {0, 1, 2, 3};
    add_sphere_rule(*R);
    Ring::Rule sq;
    sq.a = sq.b = 4;
    sq.rhs = {{std::vector<int>(5, 0), GaussRat(Rational(1) - t * t)}};
    R->rules.push_back(sq);
    return R;
}

RingPtr heis_ring(int n, int jet_order) {
    auto R = std::make_shared<Ring>();
    for (int a = 1; a <= n; ++a) R->vars.push_back("z" + std::to_string(a));
    for (int a = 1; a <= n; ++a) R->vars.push_back("zb" + std::to_string(a));
    R->vars.push_back("s");
    R->conj.resize(2 * n + 1);
    for (int a = 0; a < n; ++a) {
        R->conj[a] = n + a;
        R->conj[n + a] = a;
    }
    R->conj[2 * n] = 2 * n;
    for (int k = 0; k <= 2 * n; ++k) R->geom_vars.push_back(k);
    if (jet_order > 0) {
        R->vars.push_back("t");
        R->conj.push_back(2 * n + 1);
        R->jet_var = 2 * n + 1;
        R->jet_order = jet_order;
    }
    return R;
}

RingPtr ambient_ring() {
    auto R = std::make_shared<Ring>();
    R->vars = {"z1", "z2", "zb1", "zb2"};
    R->conj = {2, 3, 0, 1};
    R->geom_vars = {0, 1, 2, 3};
    return R;
}

Poly transplant(const RingPtr& to, const Poly& p) {
    if (!p.ring()) return Poly(to);
    const Ring& from = *p.ring();
    std::vector<int> where(from.vars.size());
    for (size_t k = 0; k < from.vars.size(); ++k) where[k] = to->find(from.vars[k]);
    std::map<std::vector<int>, GaussRat> out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> mm(to->vars.size(), 0);
        for (size_t k = 0; k < m.size(); ++k) {
            if (m[k] == 0) continue;
            if (where[k] < 0)
                throw std::runtime_error("transplant: target ring lacks variable " + from.vars[k]);
            mm[where[k]] += m[k];
        }
        auto [pos, fresh] = out.try_emplace(std::move(mm), GaussRat());
        pos->second += c;
    }
    return Poly::from_terms(to, std::move(out));
}

Poly scalar_invert(const Poly& p) {
    if (!p.ring() || p.ring()->jet_var < 0) {
        GaussRat c = p.constant_value();
        if (c.is_zero()) throw std::runtime_error("scalar_invert: zero scalar");
        return Poly::constant(p.ring(), GaussRat(1) / c);
    }
    return jet_invert(p);
}

// --- fields and forms ------------------------------------------------------

VectorField VectorField::zero(const RingPtr& r) {
    return {r, std::vector<Poly>(r->geom_vars.size(), Poly(r))};
}

Poly VectorField::apply(const Poly& f) const {
    Poly out(ring);
    for (size_t k = 0; k < comp.size(); ++k)
        if (!comp[k].is_zero()) out += comp[k] * f.derivative(ring->geom_vars[k]);
    return out;
}

VectorField VectorField::operator+(const VectorField& o) const {
    VectorField r = *this;
    for (size_t k = 0; k < comp.size(); ++k) r.comp[k] += o.comp[k];
    return r;
}

VectorField VectorField::operator-(const VectorField& o) const {
    VectorField r = *this;
    for (size_t k = 0; k < comp.size(); ++k) r.comp[k] -= o.comp[k];
    return r;
}

VectorField VectorField::scaled(const Poly& f) const {
    VectorField r = *this;
    for (auto& c : r.comp) c = c * f;
    return r;
}

static std::vector<int> geom_position(const Ring& R) {
    std::vector<int> pos(R.vars.size(), -1);
    for (size_t k = 0; k < R.geom_vars.size(); ++k) pos[R.geom_vars[k]] = static_cast<int>(k);
    return pos;
}

VectorField VectorField::conj() const {
    std::vector<int> pos = geom_position(*ring);
    VectorField r = VectorField::zero(ring);
    for (size_t k = 0; k < comp.size(); ++k) {
        int j = pos[ring->conj[ring->geom_vars[k]]];
        r.comp[j] = comp[k].conj();
    }
    return r;
}

OneForm OneForm::zero(const RingPtr& r) {
    return {r, std::vector<Poly>(r->geom_vars.size(), Poly(r))};
}

Poly OneForm::pair(const VectorField& X) const {
    Poly out(ring);
    for (size_t k = 0; k < comp.size(); ++k) out += comp[k] * X.comp[k];
    return out;
}

OneForm OneForm::operator+(const OneForm& o) const {
    OneForm r = *this;
    for (size_t k = 0; k < comp.size(); ++k) r.comp[k] += o.comp[k];
    return r;
}

OneForm OneForm::operator-(const OneForm& o) const {
    OneForm r = *this;
    for (size_t k = 0; k < comp.size(); ++k) r.comp[k] -= o.comp[k];
    return r;
}

OneForm OneForm::scaled(const Poly& f) const {
    OneForm r = *this;
    for (auto& c : r.comp) c = c * f;
    return r;
}

OneForm OneForm::conj() const {
    std::vector<int> pos = geom_position(*ring);
    OneForm r = OneForm::zero(ring);
    for (size_t k = 0; k < comp.size(); ++k) {
        int j = pos[ring->conj[ring->geom_vars[k]]];
        r.comp[j] = comp[k].conj();
    }
    return r;
}

VectorField bracket(const VectorField& X, const VectorField& Y) {
    VectorField r = VectorField::zero(X.ring);
    for (size_t k = 0; k < r.comp.size(); ++k) r.comp[k] = X.apply(Y.comp[k]) - Y.apply(X.comp[k]);
    return r;
}

Poly d_eval(const std::function<Poly(const VectorField&)>& eta, const VectorField& X,
            const VectorField& Y) {
    return X.apply(eta(Y)) - Y.apply(eta(X)) - eta(bracket(X, Y));
}

Poly d_eval(const OneForm& eta, const VectorField& X, const VectorField& Y) {
    return X.apply(eta.pair(Y)) - Y.apply(eta.pair(X)) - eta.pair(bracket(X, Y));
}

Poly FrameData::eval_frame_form(const Poly& cT, const std::vector<Poly>& cZ,
                                const std::vector<Poly>& cZb, const VectorField& X) const {
    Poly out = theta.pair(X) * cT;
    for (int a = 0; a < n; ++a) {
        out += theta1[a].pair(X) * cZ[a];
        out += theta1[a].conj().pair(X) * cZb[a];
    }
    return out;
}

// --- model frames ----------------------------------------------------------

static FrameData sphere_frame(const RingPtr& r) {
    auto v = [&](const char* name) { return Poly::var(r, name); };
    GaussRat I = GaussRat::i();
    FrameData f;
    f.model = ModelId::sphere3();
    f.ring = r;
    f.n = 1;
    f.theta = OneForm{r, {v("zb1") * (-I / GaussRat(2)), v("zb2") * (-I / GaussRat(2)),
                          v("z1") * (I / GaussRat(2)), v("z2") * (I / GaussRat(2))}};
    f.theta1 = {OneForm{r, {v("z2"), -v("z1"), Poly(r), Poly(r)}}};
    f.T = VectorField{r, {v("z1") * I, v("z2") * I, v("zb1") * (-I), v("zb2") * (-I)}};
    f.Z = {VectorField{r, {v("zb2"), -v("zb1"), Poly(r), Poly(r)}}};
    f.Zbar = {f.Z[0].conj()};
    f.h = f.theta.pair(bracket(f.Z[0], f.Zbar[0])) * I;
    return f;
}

static FrameData rossi_frame(const ModelId& m, const RingPtr& r, const Poly& tpar,
                             const Poly& invlam) {
    FrameData base = sphere_frame(r);
    FrameData f = base;
    f.model = m;
    f.Z = {(base.Z[0] + base.Zbar[0].scaled(tpar)).scaled(invlam)};
    f.Zbar = {f.Z[0].conj()};
    f.theta1 = {(base.theta1[0] - base.theta1[0].conj().scaled(tpar)).scaled(invlam)};
    f.h = f.theta.pair(bracket(f.Z[0], f.Zbar[0])) * GaussRat::i();
    return f;
}

FrameData model_frame(const ModelId& m) {
    switch (m.kind) {
    case ModelId::Kind::Sphere3:
        return sphere_frame(sphere_ring(0));
    case ModelId::Kind::Rossi3: {
        RingPtr r = rossi_ring(m.t);
        Poly lam = Poly::var(r, "lam");
        Poly invlam = lam * GaussRat(Rational(1) / (1 - m.t * m.t));
        return rossi_frame(m, r, Poly::constant(r, GaussRat(m.t)), invlam);
    }
    case ModelId::Kind::RossiJet: {
        RingPtr r = sphere_ring(m.jet_order);
        Poly tp = Poly::var(r, "t");
        Poly invlam = jet_invert(jet_sqrt_one_plus(-(tp * tp)));
        return rossi_frame(m, r, tp, invlam);
    }
    case ModelId::Kind::Heisenberg: {
        RingPtr r = heis_ring(m.n);
        int n = m.n;
        GaussRat I = GaussRat::i();
        FrameData f;
        f.model = m;
        f.ring = r;
        f.n = n;
        f.theta = OneForm::zero(r);
        for (int a = 0; a < n; ++a) {
            f.theta.comp[a] = Poly::var(r, n + a) * (-I / GaussRat(2));     // -(i/2) zb_a dz^a
            f.theta.comp[n + a] = Poly::var(r, a) * (I / GaussRat(2));      // (i/2) z_a dzb^a
        }
        f.theta.comp[2 * n] = Poly::constant(r, GaussRat(1));
        f.T = VectorField::zero(r);
        f.T.comp[2 * n] = Poly::constant(r, GaussRat(1));
        for (int a = 0; a < n; ++a) {
            OneForm th = OneForm::zero(r);
            th.comp[a] = Poly::constant(r, GaussRat(1));
            f.theta1.push_back(th);
            VectorField z = VectorField::zero(r);
            z.comp[a] = Poly::constant(r, GaussRat(1));
            z.comp[2 * n] = Poly::var(r, n + a) * (I / GaussRat(2));
            f.Z.push_back(z);
            f.Zbar.push_back(z.conj());
        }
        f.h = f.theta.pair(bracket(f.Z[0], f.Zbar[0])) * I;
        return f;
    }
    }
    throw std::logic_error("model_frame: unreachable");
}

// --- jet linear solves -----------------------------------------------------

static bool is_unit_scalar(const Poly& p) {
    if (p.is_zero()) return false;
    if (!p.ring() || p.ring()->jet_var < 0) return p.is_constant();
    Poly lead = p.jet_coeff(0);
    return lead.is_constant() && !lead.constant_value().is_zero();
}

std::vector<Poly> solve_jet_linear(std::vector<std::vector<Poly>> m, std::vector<Poly> rhs) {
    size_t n = rhs.size();
    std::vector<int> colof(n);
    std::vector<bool> used(n, false);
    for (size_t step = 0; step < n; ++step) {
        size_t pr = n, pc = n;
        for (size_t r = step; r < n && pr == n; ++r)
            for (size_t c = 0; c < n; ++c)
                if (!used[c] && is_unit_scalar(m[r][c])) { pr = r; pc = c; break; }
        if (pr == n) throw std::runtime_error("solve_jet_linear: no invertible pivot");
        std::swap(m[pr], m[step]);
        std::swap(rhs[pr], rhs[step]);
        used[pc] = true;
        colof[step] = static_cast<int>(pc);
        Poly inv = scalar_invert(m[step][pc]);
        for (auto& e : m[step]) e = e * inv;
        rhs[step] = rhs[step] * inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == step || m[r][pc].is_zero()) continue;
            Poly f = m[r][pc];
            for (size_t c = 0; c < n; ++c) m[r][c] -= f * m[step][c];
            rhs[r] -= f * rhs[step];
        }
    }
    std::vector<Poly> x(n);
    for (size_t step = 0; step < n; ++step) x[colof[step]] = rhs[step];
    return x;
}

VectorField reeb_field(const OneForm& theta_t, const FrameData& base) {
    std::vector<VectorField> B = {base.T};
    for (const auto& z : base.Z) B.push_back(z);
    for (const auto& z : base.Zbar) B.push_back(z);
    size_t dim = B.size();
    std::vector<std::vector<Poly>> m(dim, std::vector<Poly>(dim));
    std::vector<Poly> rhs(dim, Poly(theta_t.ring));
    for (size_t c = 0; c < dim; ++c) m[0][c] = theta_t.pair(B[c]);
    rhs[0] = Poly::constant(theta_t.ring, GaussRat(1));
    for (size_t e = 1; e < dim; ++e)
        for (size_t c = 0; c < dim; ++c) m[e][c] = d_eval(theta_t, B[c], B[e]);
    std::vector<Poly> u = solve_jet_linear(std::move(m), std::move(rhs));
    VectorField T_t = VectorField::zero(theta_t.ring);
    for (size_t c = 0; c < dim; ++c) T_t = T_t + B[c].scaled(u[c]);
    // the solve used d(theta_t)(T_t, B_e) for e >= 1; the remaining contraction
    // must vanish as well
    if (!d_eval(theta_t, T_t, B[0]).is_zero())
        throw std::runtime_error("reeb_field: contraction residual nonzero");
    return T_t;
}

// --- deformation paths -----------------------------------------------------

using Mat2 = std::array<Poly, 4>; // row-major [[0,1],[2,3]]

static Mat2 mat2_mul(const Mat2& A, const Mat2& B) {
    return {A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3],
            A[2] * B[0] + A[3] * B[2], A[2] * B[1] + A[3] * B[3]};
}

FrameData deform_frame(const Poly& E11, const Poly& u, int order) {
    RingPtr r = sphere_ring(order);
    for (const auto& [m, c] : E11.terms())
        if (E11.ring()->jet_var >= 0 && m[E11.ring()->jet_var] != 0)
            throw std::invalid_argument("deform_frame: tangent data must not involve t");
    FrameData base = sphere_frame(r);
    Poly e = transplant(r, E11), uu = transplant(r, u);
    Poly tp = Poly::var(r, "t");
    Poly zero(r), one = Poly::constant(r, GaussRat(1));
    GaussRat I = GaussRat::i();

    // A = -t J0 Ehat on the (v^1, v^1bar) coordinates, Ehat = [[0, 2 conj(e)], [2e, 0]]
    Mat2 A = {zero, tp * e.conj() * (GaussRat(-2) * I), tp * e * (GaussRat(2) * I), zero};
    Mat2 M = {one, zero, zero, one}, P = {one, zero, zero, one};
    Rational fact = 1;
    for (int k = 1; k <= order; ++k) {
        P = mat2_mul(P, A);
        fact *= k;
        GaussRat s(Rational(1) / fact);
        M = {M[0] + P[0] * s, M[1] + P[1] * s, M[2] + P[2] * s, M[3] + P[3] * s};
    }
    Mat2 J0 = {Poly::constant(r, I), zero, zero, Poly::constant(r, -I)};
    Mat2 Js = mat2_mul(J0, M);

    // +i eigenvector (1, w) of Js
    Poly w = Js[2] * scalar_invert(Poly::constant(r, I) - Js[3]);
    if (!(Js[0] + Js[1] * w - Poly::constant(r, I)).is_zero())
        throw std::runtime_error("deform_frame: eigenvector residual nonzero");

    FrameData f = base;
    f.Z = {base.Z[0] + base.Zbar[0].scaled(w)};
    f.Zbar = {f.Z[0].conj()};
    f.theta = base.theta.scaled(jet_exp(uu));
    f.T = reeb_field(f.theta, base);

    // dual theta^1 over the base coframe: alpha*theta + beta*theta^1 + gamma*theta^1bar
    OneForm th1b = base.theta1[0].conj();
    std::vector<VectorField> probes = {f.Z[0], f.Zbar[0], f.T};
    std::vector<std::vector<Poly>> m(3, std::vector<Poly>(3));
    std::vector<Poly> rhs = {one, zero, zero};
    for (int e2 = 0; e2 < 3; ++e2) {
        m[e2][0] = base.theta.pair(probes[e2]);
        m[e2][1] = base.theta1[0].pair(probes[e2]);
        m[e2][2] = th1b.pair(probes[e2]);
    }
    std::vector<Poly> abc = solve_jet_linear(std::move(m), std::move(rhs));
    f.theta1 = {base.theta.scaled(abc[0]) + base.theta1[0].scaled(abc[1]) + th1b.scaled(abc[2])};
    f.h = f.theta.pair(bracket(f.Z[0], f.Zbar[0])) * I;
    return f;
}

} // namespace mtw
