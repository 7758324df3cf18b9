#include "mtwgeo/spectral.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mtw {

static Rational factorial(int k) {
    Rational r = 1;
    for (int j = 2; j <= k; ++j) r *= j;
    return r;
}

GaussRat sphere_integral(const Poly& p) {
    if (p.is_zero()) return GaussRat();
    const Ring& R = *p.ring();
    int z1 = R.find("z1"), z2 = R.find("z2"), zb1 = R.find("zb1"), zb2 = R.find("zb2");
    GaussRat out;
    for (const auto& [m, c] : p.terms()) {
        for (size_t k = 0; k < m.size(); ++k)
            if (m[k] != 0 && (int)k != z1 && (int)k != z2 && (int)k != zb1 && (int)k != zb2)
                throw std::runtime_error("sphere_integral: non-coordinate variable present");
        if (m[z1] != m[zb1] || m[z2] != m[zb2]) continue;
        int a1 = m[z1], a2 = m[z2];
        out += (factorial(a1) * factorial(a2) / factorial(a1 + a2 + 1)) * c;
    }
    return out;
}

GaussRat inner_product(const Poly& f, const Poly& g) { return sphere_integral(f * g.conj()); }

std::vector<Poly> harmonic_basis(const RingPtr& r, int p, int q) {
    RingPtr amb = ambient_ring();
    struct Mono {
        int a1, a2, b1, b2;
    };
    auto enumerate = [](int pp, int qq) {
        std::vector<Mono> v;
        for (int a1 = 0; a1 <= pp; ++a1)
            for (int b1 = 0; b1 <= qq; ++b1) v.push_back({a1, pp - a1, b1, qq - b1});
        return v;
    };
    std::vector<Mono> cols = enumerate(p, q);
    std::vector<Mono> rows = (p >= 1 && q >= 1) ? enumerate(p - 1, q - 1) : std::vector<Mono>{};
    auto row_index = [&](int a1, int b1) { return a1 * q + b1; }; // rows: a1 in [0,p-1], b1 in [0,q-1]
    Mat L((int)rows.size(), (int)cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        const Mono& m = cols[j];
        // 4(d_z1 d_zb1 + d_z2 d_zb2) z^a zbar^b
        if (m.a1 >= 1 && m.b1 >= 1)
            L.at(row_index(m.a1 - 1, m.b1 - 1), (int)j) += GaussRat(Rational(4L * m.a1 * m.b1));
        if (m.a2 >= 1 && m.b2 >= 1)
            L.at(row_index(m.a1, m.b1), (int)j) += GaussRat(Rational(4L * m.a2 * m.b2));
    }
    std::vector<std::vector<GaussRat>> null = L.nullspace();
    if ((int)null.size() != p + q + 1)
        throw std::runtime_error("harmonic_basis: unexpected dimension");
    std::vector<std::pair<int, Poly>> elems; // (weight, reduced)
    for (const auto& v : null) {
        std::map<std::vector<int>, GaussRat> t;
        int w = 0;
        bool wset = false;
        for (size_t j = 0; j < v.size(); ++j) {
            if (v[j].is_zero()) continue;
            const Mono& m = cols[j];
            if (!wset) { w = m.a1 - m.b1; wset = true; }
            else if (w != m.a1 - m.b1)
                throw std::runtime_error("harmonic_basis: mixed-weight nullspace vector");
            std::vector<int> mono(amb->vars.size(), 0);
            mono[amb->find("z1")] = m.a1;
            mono[amb->find("z2")] = m.a2;
            mono[amb->find("zb1")] = m.b1;
            mono[amb->find("zb2")] = m.b2;
            t[std::move(mono)] = v[j];
        }
        elems.emplace_back(w, transplant(r, Poly::from_terms(amb, std::move(t))));
    }
    std::sort(elems.begin(), elems.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Poly> out;
    for (auto& [w, e] : elems) out.push_back(std::move(e));
    return out;
}

SpectralSpace harmonic_space(const RingPtr& r, const std::vector<std::pair<int, int>>& degs) {
    SpectralSpace S;
    S.ring = r;
    for (auto [p, q] : degs) {
        std::vector<Poly> b = harmonic_basis(r, p, q);
        for (int k = 0; k < (int)b.size(); ++k) {
            S.deg.emplace_back(p, q);
            S.weight.push_back(-q + k); // weights run -q..p after sorting
            S.norm2.push_back(inner_product(b[k], b[k]));
            S.basis.push_back(std::move(b[k]));
        }
    }
    return S;
}

SpectralSpace harmonic_space_upto(const RingPtr& r, int max_degree) {
    std::vector<std::pair<int, int>> degs;
    for (int k = 0; k <= max_degree; ++k)
        for (int p = 0; p <= k; ++p) degs.emplace_back(p, k - p);
    return harmonic_space(r, degs);
}

std::vector<GaussRat> SpectralSpace::expand(const Poly& f) const {
    const Ring& R = *ring;
    int z1 = R.find("z1"), z2 = R.find("z2"), zb1 = R.find("zb1"), zb2 = R.find("zb2");
    // split by full torus weight (w1, w2); basis element i carries
    // (weight_i, (p_i - q_i) - weight_i)
    std::map<std::pair<int, int>, Poly> groups;
    for (const auto& [m, c] : f.terms()) {
        std::pair<int, int> w{m[z1] - m[zb1], m[z2] - m[zb2]};
        auto [it, fresh] = groups.try_emplace(w, Poly(ring));
        std::map<std::vector<int>, GaussRat> one{{m, c}};
        it->second += Poly::from_terms(ring, std::move(one));
    }
    std::vector<GaussRat> x(basis.size());
    Poly recon(ring);
    for (const auto& [w, g] : groups) {
        for (size_t i = 0; i < basis.size(); ++i) {
            auto [p, q] = deg[i];
            if (weight[i] != w.first || (p - q) - weight[i] != w.second) continue;
            GaussRat c = inner_product(g, basis[i]) / norm2[i];
            if (c.is_zero()) continue;
            x[i] += c;
            recon += basis[i] * c;
        }
    }
    if (recon != f) throw std::runtime_error("SpectralSpace::expand: function outside span");
    return x;
}

Mat operator_matrix(const SpectralSpace& S, const std::function<Poly(const Poly&)>& op,
                    bool parallel) {
    int d = S.dim();
    std::vector<std::vector<GaussRat>> cols(d);
    if (parallel) {
#ifdef MTWGEO_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int j = 0; j < d; ++j) cols[j] = S.expand(op(S.basis[j]));
    } else {
        for (int j = 0; j < d; ++j) cols[j] = S.expand(op(S.basis[j]));
    }
    Mat M(d, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) M.at(i, j) = cols[j][i];
    return M;
}

Mat gram_matrix(const SpectralSpace& S) {
    int d = S.dim();
    Mat G(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) G.at(i, j) = inner_product(S.basis[i], S.basis[j]);
    return G;
}

GammaMaps gamma_maps(const FrameData& f, const ConnectionData& c) {
    int n = f.n;
    auto torsion = [f, c, n](const Poly& fn) {
        Poly f11 = cov_deriv(f, c, Dir::D1, cov_deriv(f, c, Dir::D1, fn, 0, 0), -1, 0);
        return f11 * GaussRat::i() + fn * c.A11 * GaussRat(n);
    };
    auto torsion_conj = [f, c, n](const Poly& fn) {
        Poly fbb = cov_deriv(f, c, Dir::D1b, cov_deriv(f, c, Dir::D1b, fn, 0, 0), 0, -1);
        return fbb * (-GaussRat::i()) + fn * c.A11.conj() * GaussRat(n);
    };
    auto scalar = [f, c, n](const Poly& fn) {
        return sublaplacian(f, c, fn) * GaussRat(n + 1) + c.R * fn;
    };
    return {torsion, torsion_conj, scalar};
}

std::function<Poly(const Poly&)> drgamma_op(const FrameData& f, const ConnectionData& c) {
    GammaMaps g = gamma_maps(f, c);
    int n = f.n;
    return [f, c, g, n](const Poly& fn) {
        Poly E = -g.torsion(fn);
        Poly Ec = -g.torsion_conj(fn);
        Poly u = -g.scalar(fn);
        Poly invh2 = scalar_invert(f.h);
        invh2 = invh2 * invh2;
        Poly s1 = cov_deriv(f, c, Dir::D1b, E, -2, 0);
        Poly X = (cov_deriv(f, c, Dir::D1b, s1, -2, -1) * GaussRat::i() -
                  c.A11.conj() * E * GaussRat(n)) *
                 invh2;
        Poly s1c = cov_deriv(f, c, Dir::D1, Ec, 0, -2);
        Poly Xc = (cov_deriv(f, c, Dir::D1, s1c, -1, -2) * (-GaussRat::i()) -
                   c.A11 * Ec * GaussRat(n)) *
                  invh2;
        return X + Xc - sublaplacian(f, c, u) * GaussRat(n + 1) - c.R * u;
    };
}

QPoly zz_charpoly(int p, int q) {
    RingPtr r = sphere_ring(0);
    FrameData f = model_frame(ModelId::sphere3());
    std::vector<std::pair<int, int>> degs = {{p, q}};
    if (p != q) degs.emplace_back(q, p);
    SpectralSpace S = harmonic_space(r, degs);
    auto op = [&](const Poly& g) {
        return f.Z[0].apply(f.Z[0].apply(g)) + f.Zbar[0].apply(f.Zbar[0].apply(g));
    };
    return operator_matrix(S, op).charpoly_real();
}

// --- kernel ----------------------------------------------------------------

/// coordinates of polys over the union of their monomials; used for exact
/// nullspace and span computations on function lists
static Mat poly_columns(const std::vector<std::vector<Poly>>& images) {
    std::map<std::pair<size_t, std::vector<int>>, int> rowid;
    for (const auto& col : images)
        for (size_t s = 0; s < col.size(); ++s)
            for (const auto& [m, c] : col[s].terms()) {
                auto key = std::make_pair(s, m);
                if (!rowid.count(key)) {
                    int id = (int)rowid.size();
                    rowid[key] = id;
                }
            }
    Mat A((int)rowid.size(), (int)images.size());
    for (size_t j = 0; j < images.size(); ++j)
        for (size_t s = 0; s < images[j].size(); ++s)
            for (const auto& [m, c] : images[j][s].terms())
                A.at(rowid[{s, m}], (int)j) = c;
    return A;
}

static int span_rank(const std::vector<Poly>& fns) {
    std::vector<std::vector<Poly>> cols;
    for (const auto& f : fns) cols.push_back({f});
    if (cols.empty()) return 0;
    return poly_columns(cols).rank();
}

KernelResult exact_kernel(const ModelId& m) {
    if (m.kind != ModelId::Kind::Sphere3 && m.kind != ModelId::Kind::Rossi3)
        throw std::invalid_argument("exact_kernel: supported models are sphere3 and rossi:<t>");
    KernelResult K;
    if (m.kind == ModelId::Kind::Sphere3) {
        K.eigenvalue_target = 1;
    } else {
        Rational t2 = m.t * m.t;
        K.eigenvalue_target = (1 + 18 * t2 + t2 * t2) / ((1 - t2) * (1 - t2));
    }
    if (K.eigenvalue_target.get_den() == 1 && K.eigenvalue_target >= 0) {
        long L = K.eigenvalue_target.get_num().get_si();
        for (long p = 0; p <= L; ++p)
            if ((L - p) % (2 * p + 1) == 0) {
                long q = (L - p) / (2 * p + 1);
                K.admissible.emplace_back((int)p, (int)q);
            }
        std::sort(K.admissible.begin(), K.admissible.end());
        K.admissible.erase(std::unique(K.admissible.begin(), K.admissible.end()),
                           K.admissible.end());
    }
    if (K.admissible.empty()) {
        K.real_dimension = 0;
        return K;
    }

    FrameData f = model_frame(m);
    ConnectionData c = solve_connection(f);
    SpectralSpace S = harmonic_space(f.ring, K.admissible);
    GammaMaps g = gamma_maps(f, c);
    std::vector<std::vector<Poly>> images;
    for (const Poly& b : S.basis)
        images.push_back({g.torsion(b), g.torsion_conj(b), g.scalar(b)});
    std::vector<std::vector<GaussRat>> null = poly_columns(images).nullspace();

    std::vector<Poly> complex_kernel;
    for (const auto& v : null) {
        Poly fn(S.ring);
        for (size_t j = 0; j < v.size(); ++j) fn += S.basis[j] * v[j];
        complex_kernel.push_back(fn);
    }
    // real points: the kernel is conjugation stable, so real/imaginary parts span
    std::vector<Poly> chosen;
    for (const Poly& fn : complex_kernel)
        for (const Poly& cand : {fn + fn.conj(), (fn - fn.conj()) * GaussRat::i()}) {
            if (cand.is_zero()) continue;
            chosen.push_back(cand);
            if (span_rank(chosen) < (int)chosen.size()) chosen.pop_back();
        }
    if ((int)chosen.size() != (int)complex_kernel.size())
        throw std::runtime_error("exact_kernel: kernel is not conjugation stable");
    K.real_dimension = (int)chosen.size();
    K.real_basis = std::move(chosen);
    return K;
}

// --- Rossi certificates ----------------------------------------------------

std::vector<Certificate> rossi_certificates() {
    QPoly common_poly(std::vector<Rational>{1, 0, 18, 0, 1}); // 1 + 18 t^2 + t^4
    QPoly omt2(std::vector<Rational>{1, 0, -1});              // 1 - t^2
    QPoly tor_rhs = QPoly(std::vector<Rational>{0, 10}) *
                    QPoly(std::vector<Rational>{1, 0, 1}); // 10 t (1 + t^2)
    std::vector<Certificate> out;
    for (auto [p, q] : {std::pair<int, int>{2, 0}, std::pair<int, int>{3, 1}}) {
        Certificate ce;
        ce.p = p;
        ce.q = q;
        ce.lambda = 2 * p * q + p + q;
        QPoly cp = zz_charpoly(p, q);
        int d = cp.degree();
        // char poly must be (x^2 - e^2)^{d/2}
        ce.zz_eigen2 = -cp.coeff(d - 2) * 2 / d;
        QPoly model(std::vector<Rational>{-ce.zz_eigen2, 0, 1});
        if (!(model.pow((unsigned)(d / 2)) == cp))
            throw std::runtime_error("rossi_certificates: unexpected charpoly shape");
        ce.scalar_eq = omt2 * omt2 * QPoly::constant(ce.lambda) - common_poly;
        ce.torsion_eq = (omt2 * omt2 * omt2 * omt2) * QPoly::constant(ce.zz_eigen2) -
                        tor_rhs * tor_rhs;
        ce.gcd = QPoly::gcd(ce.scalar_eq, ce.torsion_eq);
        for (auto& iv : ce.scalar_eq.isolate_real_roots(Rational(1, 1024))) {
            Rational mid = (iv.first + iv.second) / 2;
            if (mid > -1 && mid < 1) ce.scalar_roots_in_unit.push_back(iv);
        }
        out.push_back(std::move(ce));
    }
    return out;
}

// --- DR Gamma spectral analysis --------------------------------------------

DrGammaAnalysis drgamma_analysis(int max_degree, bool parallel) {
    DrGammaAnalysis A;
    RingPtr r = sphere_ring(0);
    FrameData f = model_frame(ModelId::sphere3());
    ConnectionData c = solve_connection(f);
    A.space = harmonic_space_upto(r, max_degree);
    A.M = operator_matrix(A.space, drgamma_op(f, c), parallel);
    int d = A.space.dim();
    A.diagonal = true;
    for (int i = 0; i < d && A.diagonal; ++i)
        for (int j = 0; j < d; ++j)
            if (i != j && !A.M.at(i, j).is_zero()) { A.diagonal = false; break; }
    // pairing matrix <O b_j, b_i> = norm2_i * M[i][j]
    Mat B(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) B.at(i, j) = A.space.norm2[i] * A.M.at(i, j);
    A.hermitian = B.is_hermitian();
    A.psd = A.hermitian && B.is_psd_hermitian();
    A.kernel_dim = 0;
    std::map<int, Rational> ratio;
    for (int i = 0; i < d; ++i) {
        GaussRat mu = A.M.at(i, i);
        A.diag.push_back(mu);
        if (mu.is_zero()) ++A.kernel_dim;
        auto [p, q] = A.space.deg[i];
        Rational lam = 2 * p * q + p + q;
        Rational pred = Rational(9, 2) * lam * lam + Rational(3, 2) * (p - q) * (p - q);
        A.predicted.push_back(pred);
        if (pred != 0) {
            Rational rel = abs(mu.re / pred - 1);
            int level = p + q;
            auto [it, fresh] = ratio.try_emplace(level, rel);
            if (!fresh && rel > it->second) it->second = rel;
        }
    }
    for (auto& [k, v] : ratio) A.level_ratio.emplace_back(k, v);
    return A;
}

} // namespace mtw
