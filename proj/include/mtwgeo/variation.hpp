#pragma once

#include "mtwgeo/connection.hpp"

namespace mtw {

/// Tangent to the space of deformations at a model structure: a contact-form
/// factor u (real function) and the (1,1)-component E_{11} of the complex
/// structure direction. The associated path endomorphism 2 Re(E) acts on
/// (v^1, v^1bar) coordinates as [[0, 2 conj(E11)], [2 E11, 0]].
struct DeformationTangent {
    Poly E11;
    Poly u;
};

/// The direction whose path is the Rossi family reparameterized by tanh:
/// E_{11} = i, u = 0.
DeformationTangent rossi_tangent(const RingPtr& r);

/// First variation of the Webster scalar curvature along the tangent.
Poly linearize_R(const FrameData& f, const ConnectionData& c, const DeformationTangent& d);
Poly linearize_R(const ModelId& m, const DeformationTangent& d);

/// First variation of the torsion component A_{11} along the tangent.
Poly linearize_A(const FrameData& f, const ConnectionData& c, const DeformationTangent& d);
Poly linearize_A(const ModelId& m, const DeformationTangent& d);

/// Adjoint operator on functions: Gamma f = (i f_{,11} + n f A_{11},
/// (n+1) Delta_b f + R f). The deformation tangent it represents is
/// (-torsion, -scalar).
struct GammaValue {
    Poly torsion; // the (11)-component
    Poly scalar;
};
GammaValue gamma(const FrameData& f, const ConnectionData& c, const Poly& fn);
GammaValue gamma(const ModelId& m, const Poly& fn);
DeformationTangent gamma_tangent(const ModelId& m, const Poly& fn);

/// Divergence of a (1,0)-form given by its component tau_1 (the conjugate
/// component is conj(tau_1)); adjoint of f -> (f_{,1}, f_{,1bar}) under the
/// L^2 pairings used here.
Poly dstar(const FrameData& f, const ConnectionData& c, const Poly& tau1);

/// Contraction epsilon(E)_1 = i E_{11,}{}^1 appearing in the first variation.
Poly epsilon1(const FrameData& f, const ConnectionData& c, const Poly& E11);

/// Exact jets of the geometry along the path of the tangent (sphere base).
struct VariationJet {
    Poly Rjet, A11jet, hjet;
};
VariationJet variation_jet(const DeformationTangent& d, int order);

} // namespace mtw
