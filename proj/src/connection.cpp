#include "mtwgeo/connection.hpp"

#include <stdexcept>

namespace mtw {

static void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error("solve_connection: inconsistent system: " + what);
}

ConnectionData solve_connection(const FrameData& f) {
    ConnectionData c;
    c.n = f.n;
    const RingPtr& r = f.ring;

    if (f.model.kind == ModelId::Kind::Heisenberg) {
        // flat solve: every structure coefficient must vanish identically
        std::vector<VectorField> B = {f.T};
        for (const auto& z : f.Z) B.push_back(z);
        for (const auto& z : f.Zbar) B.push_back(z);
        for (int a = 0; a < f.n; ++a)
            for (size_t x = 0; x < B.size(); ++x)
                for (size_t y = x + 1; y < B.size(); ++y)
                    require(d_eval(f.theta1[a], B[x], B[y]).is_zero(), "d theta^a != 0");
        for (int a = 0; a < f.n; ++a)
            for (int b = 0; b < f.n; ++b) {
                Poly hab = f.theta.pair(bracket(f.Z[a], f.Zbar[b])) * GaussRat::i();
                Poly want = Poly::constant(r, GaussRat(a == b ? 1 : 0));
                require(hab == want, "Levi form not the identity");
            }
        for (int a = 0; a < f.n; ++a) {
            require(d_eval(f.theta, f.T, f.Z[a]).is_zero(), "d theta(T, Z)");
            for (int b = 0; b < f.n; ++b)
                require(d_eval(f.theta, f.Z[a], f.Z[b]).is_zero(), "d theta(Z, Z)");
        }
        c.flat = true;
        c.omega_T = c.omega_Z = c.omega_Zb = Poly(r);
        c.Aup = c.A11 = Poly(r);
        c.R = Poly(r);
        return c;
    }

    if (f.n != 1) throw std::invalid_argument("solve_connection: curved frames implemented at n = 1");

    const OneForm& th1 = f.theta1[0];
    const VectorField &T = f.T, &Z = f.Z[0], &Zb = f.Zbar[0];
    Poly invh = scalar_invert(f.h);

    c.omega_T = -d_eval(th1, T, Z);
    c.Aup = d_eval(th1, T, Zb);
    c.omega_Zb = d_eval(th1, Z, Zb);
    c.omega_Z = Z.apply(f.h) * invh - c.omega_Zb.conj();
    c.A11 = f.h * c.Aup.conj();

    // remaining component of the hermitian condition d h = omega h + h conj(omega)
    require(T.apply(f.h) * invh == c.omega_T + c.omega_T.conj(), "hermitian T-component");
    // contact structure equation d theta = i h theta^1 ^ theta^1bar
    require(d_eval(f.theta, T, Z).is_zero(), "d theta(T, Z1)");
    require(d_eval(f.theta, T, Zb).is_zero(), "d theta(T, Z1bar)");
    require(d_eval(f.theta, Z, Zb) == f.h * GaussRat::i(), "d theta(Z1, Z1bar)");

    auto omega = [&](const VectorField& X) {
        return f.eval_frame_form(c.omega_T, {c.omega_Z}, {c.omega_Zb}, X);
    };
    c.R = d_eval(omega, Z, Zb) * invh;
    require(c.R == c.R.conj(), "scalar curvature not real");
    return c;
}

Poly scalar_curvature(const ModelId& m) { return solve_connection(model_frame(m)).R; }

Poly frame_apply(const FrameData& f, Dir d, const Poly& p) {
    switch (d) {
    case Dir::D0: return f.T.apply(p);
    case Dir::D1: return f.Z[0].apply(p);
    case Dir::D1b: return f.Zbar[0].apply(p);
    }
    throw std::logic_error("frame_apply: unreachable");
}

Poly cov_deriv(const FrameData& f, const ConnectionData& c, Dir d, const Poly& comp, int w_unbar,
               int w_bar) {
    Poly out = frame_apply(f, d, comp);
    if (w_unbar != 0) {
        const Poly& w = d == Dir::D0 ? c.omega_T : (d == Dir::D1 ? c.omega_Z : c.omega_Zb);
        out += comp * w * GaussRat(Rational((long)w_unbar));
    }
    if (w_bar != 0) {
        // omega_1bar^1bar = conj(omega_1^1 . conj(X))
        const Poly w = d == Dir::D0 ? c.omega_T.conj()
                                    : (d == Dir::D1 ? c.omega_Zb.conj() : c.omega_Z.conj());
        out += comp * w * GaussRat(Rational((long)w_bar));
    }
    return out;
}

Poly sublaplacian(const FrameData& f, const ConnectionData& c, const Poly& u) {
    if (c.flat) {
        Poly out(f.ring);
        for (int a = 0; a < f.n; ++a)
            out += f.Z[a].apply(f.Zbar[a].apply(u)) + f.Zbar[a].apply(f.Z[a].apply(u));
        return out;
    }
    Poly d1 = cov_deriv(f, c, Dir::D1, u, 0, 0);
    Poly d1b = cov_deriv(f, c, Dir::D1b, u, 0, 0);
    Poly both = cov_deriv(f, c, Dir::D1b, d1, -1, 0) + cov_deriv(f, c, Dir::D1, d1b, 0, -1);
    return both * scalar_invert(f.h);
}

Poly random_poly(const RingPtr& r, std::mt19937_64& rng, int max_degree, int terms) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<size_t> pick(0, r->geom_vars.size() - 1);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::map<std::vector<int>, GaussRat> t;
    for (int k = 0; k < terms; ++k) {
        std::vector<int> m(r->vars.size(), 0);
        int d = deg(rng);
        for (int j = 0; j < d; ++j) m[r->geom_vars[pick(rng)]] += 1;
        GaussRat c(Rational((long)coef(rng)), Rational((long)coef(rng)));
        auto [pos, fresh] = t.try_emplace(std::move(m), GaussRat());
        pos->second += c;
    }
    return Poly::from_terms(r, std::move(t));
}

// exact commutation identities for second covariant derivatives at n = 1;
// signs follow from d^2 = 0 in the admissible coframe
static Poly res_scalar_mixed(const FrameData& f, const ConnectionData& c, const Poly& u) {
    Poly d1 = cov_deriv(f, c, Dir::D1, u, 0, 0);
    Poly d1b = cov_deriv(f, c, Dir::D1b, u, 0, 0);
    return cov_deriv(f, c, Dir::D1b, d1, -1, 0) - cov_deriv(f, c, Dir::D1, d1b, 0, -1) -
           f.h * f.T.apply(u) * GaussRat::i();
}

static Poly res_scalar_reeb(const FrameData& f, const ConnectionData& c, const Poly& u) {
    Poly d1 = cov_deriv(f, c, Dir::D1, u, 0, 0);
    Poly d0 = cov_deriv(f, c, Dir::D0, u, 0, 0);
    return cov_deriv(f, c, Dir::D0, d1, -1, 0) - cov_deriv(f, c, Dir::D1, d0, 0, 0) +
           c.Aup.conj() * cov_deriv(f, c, Dir::D1b, u, 0, 0);
}

static Poly res_tensor_curv(const FrameData& f, const ConnectionData& c, const Poly& s1) {
    Poly d1 = cov_deriv(f, c, Dir::D1, s1, -1, 0);
    Poly d1b = cov_deriv(f, c, Dir::D1b, s1, -1, 0);
    return cov_deriv(f, c, Dir::D1b, d1, -2, 0) - cov_deriv(f, c, Dir::D1, d1b, -1, -1) -
           f.h * cov_deriv(f, c, Dir::D0, s1, -1, 0) * GaussRat::i() - c.R * f.h * s1;
}

static Poly res_tensor_tors(const FrameData& f, const ConnectionData& c, const Poly& s1) {
    Poly d0 = cov_deriv(f, c, Dir::D0, s1, -1, 0);
    Poly d1b = cov_deriv(f, c, Dir::D1b, s1, -1, 0);
    return cov_deriv(f, c, Dir::D1b, d0, -1, 0) - cov_deriv(f, c, Dir::D0, d1b, -1, -1) -
           cov_deriv(f, c, Dir::D1, s1 * c.Aup, 0, -1);
}

static Poly res_upper_curv(const FrameData& f, const ConnectionData& c, const Poly& t1) {
    Poly d1 = cov_deriv(f, c, Dir::D1, t1, 1, 0);
    Poly d1b = cov_deriv(f, c, Dir::D1b, t1, 1, 0);
    return cov_deriv(f, c, Dir::D1b, d1, 0, 0) - cov_deriv(f, c, Dir::D1, d1b, 1, -1) -
           f.h * cov_deriv(f, c, Dir::D0, t1, 1, 0) * GaussRat::i() + c.R * f.h * t1;
}

std::vector<ResidualCheck> commutator_residuals(const ModelId& m, unsigned seed, int samples) {
    FrameData f = model_frame(m);
    ConnectionData c = solve_connection(f);
    std::mt19937_64 rng(seed);
    std::vector<ResidualCheck> out;

    auto run = [&](const std::string& name, const std::function<Poly(const Poly&)>& res) {
        ResidualCheck rc{name, true, ""};
        for (int k = 0; k < samples; ++k) {
            Poly u = random_poly(f.ring, rng, 3, 4);
            Poly r = res(u);
            if (!r.is_zero()) {
                rc.pass = false;
                rc.detail = "residual " + r.str() + " at input " + u.str();
                break;
            }
        }
        out.push_back(std::move(rc));
    };

    if (m.kind == ModelId::Kind::Heisenberg && m.n > 1) {
        run("scalar-holomorphic", [&](const Poly& u) {
            Poly r(f.ring);
            for (int a = 0; a < f.n; ++a)
                for (int b = 0; b < f.n; ++b)
                    r += f.Z[a].apply(f.Z[b].apply(u)) - f.Z[b].apply(f.Z[a].apply(u));
            return r;
        });
        run("scalar-mixed", [&](const Poly& u) {
            Poly r(f.ring);
            for (int a = 0; a < f.n; ++a)
                for (int b = 0; b < f.n; ++b) {
                    Poly lhs = f.Zbar[b].apply(f.Z[a].apply(u)) - f.Z[a].apply(f.Zbar[b].apply(u));
                    if (a == b) lhs -= f.T.apply(u) * GaussRat::i();
                    r += lhs * lhs.conj(); // accumulate so one pass covers all pairs
                }
            return r;
        });
        run("scalar-reeb", [&](const Poly& u) {
            Poly r(f.ring);
            for (int a = 0; a < f.n; ++a)
                r += f.T.apply(f.Z[a].apply(u)) - f.Z[a].apply(f.T.apply(u));
            return r;
        });
        return out;
    }

    run("scalar-reeb-conj", [&](const Poly& u) {
        Poly d1b = cov_deriv(f, c, Dir::D1b, u, 0, 0);
        Poly d0 = cov_deriv(f, c, Dir::D0, u, 0, 0);
        return cov_deriv(f, c, Dir::D0, d1b, 0, -1) - cov_deriv(f, c, Dir::D1b, d0, 0, 0) +
               c.Aup * cov_deriv(f, c, Dir::D1, u, 0, 0);
    });
    run("scalar-mixed", [&](const Poly& u) { return res_scalar_mixed(f, c, u); });
    run("scalar-reeb", [&](const Poly& u) { return res_scalar_reeb(f, c, u); });
    run("tensor-curvature", [&](const Poly& s) { return res_tensor_curv(f, c, s); });
    run("tensor-torsion", [&](const Poly& s) { return res_tensor_tors(f, c, s); });
    run("cotensor-curvature", [&](const Poly& t) { return res_upper_curv(f, c, t); });
    return out;
}

} // namespace mtw
