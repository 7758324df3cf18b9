#include "mtwgeo/variation.hpp"

namespace mtw {

DeformationTangent rossi_tangent(const RingPtr& r) {
    return {Poly::constant(r, GaussRat::i()), Poly(r)};
}

Poly linearize_R(const FrameData& f, const ConnectionData& c, const DeformationTangent& d) {
    int n = f.n;
    Poly invh = scalar_invert(f.h);
    Poly invh2 = invh * invh;
    Poly s1 = cov_deriv(f, c, Dir::D1b, d.E11, -2, 0);
    Poly s2 = cov_deriv(f, c, Dir::D1b, s1, -2, -1);
    Poly X = (s2 * GaussRat::i() - c.A11.conj() * d.E11 * GaussRat(n)) * invh2;
    return X + X.conj() - sublaplacian(f, c, d.u) * GaussRat(n + 1) - c.R * d.u;
}

Poly linearize_R(const ModelId& m, const DeformationTangent& d) {
    FrameData f = model_frame(m);
    return linearize_R(f, solve_connection(f), d);
}

Poly linearize_A(const FrameData& f, const ConnectionData& c, const DeformationTangent& d) {
    Poly t0 = cov_deriv(f, c, Dir::D0, d.E11, -2, 0) * GaussRat::i();
    Poly u11 = cov_deriv(f, c, Dir::D1, cov_deriv(f, c, Dir::D1, d.u, 0, 0), -1, 0);
    return t0 + u11 * GaussRat::i();
}

Poly linearize_A(const ModelId& m, const DeformationTangent& d) {
    FrameData f = model_frame(m);
    return linearize_A(f, solve_connection(f), d);
}

GammaValue gamma(const FrameData& f, const ConnectionData& c, const Poly& fn) {
    Poly f11 = cov_deriv(f, c, Dir::D1, cov_deriv(f, c, Dir::D1, fn, 0, 0), -1, 0);
    GammaValue g;
    g.torsion = f11 * GaussRat::i() + fn * c.A11 * GaussRat(f.n);
    g.scalar = sublaplacian(f, c, fn) * GaussRat(f.n + 1) + c.R * fn;
    return g;
}

GammaValue gamma(const ModelId& m, const Poly& fn) {
    FrameData f = model_frame(m);
    return gamma(f, solve_connection(f), fn);
}

DeformationTangent gamma_tangent(const ModelId& m, const Poly& fn) {
    GammaValue g = gamma(m, fn);
    return {-g.torsion, -g.scalar};
}

Poly dstar(const FrameData& f, const ConnectionData& c, const Poly& tau1) {
    Poly invh = scalar_invert(f.h);
    Poly a = cov_deriv(f, c, Dir::D1b, tau1, -1, 0);
    Poly b = cov_deriv(f, c, Dir::D1, tau1.conj(), 0, -1);
    return -(a + b) * invh;
}

Poly epsilon1(const FrameData& f, const ConnectionData& c, const Poly& E11) {
    return cov_deriv(f, c, Dir::D1b, E11, -2, 0) * scalar_invert(f.h) * GaussRat::i();
}

VariationJet variation_jet(const DeformationTangent& d, int order) {
    FrameData f = deform_frame(d.E11, d.u, order);
    ConnectionData c = solve_connection(f);
    return {c.R, c.A11, f.h};
}

} // namespace mtw
