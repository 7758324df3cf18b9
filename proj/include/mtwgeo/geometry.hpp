#pragma once

#include "mtwgeo/poly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mtw {

/// Model geometries shipped with the engine.
struct ModelId {
    enum class Kind { Sphere3, Rossi3, RossiJet, Heisenberg };
    Kind kind = Kind::Sphere3;
    Rational t;        // Rossi parameter, 0 < |t| < 1
    int n = 1;         // Heisenberg CR dimension
    int jet_order = 2; // RossiJet expansion order about t = 0

    static ModelId sphere3() { return {}; }
    static ModelId rossi3(const Rational& t);
    static ModelId rossi_jet(int order);
    static ModelId heisenberg(int n);
    /// "sphere3" | "rossi:<p>/<q>" | "heisenberg:<n>"
    static std::optional<ModelId> parse(const std::string& s);
    std::string str() const;
};

/// Polynomial vector field on the ambient coordinates (ring's geom_vars).
struct VectorField {
    RingPtr ring;
    std::vector<Poly> comp; // one per geom var

    static VectorField zero(const RingPtr& r);
    Poly apply(const Poly& f) const; // directional derivative, reduced
    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField scaled(const Poly& f) const;
    VectorField conj() const;
    bool operator==(const VectorField& o) const { return comp == o.comp; }
};

/// One-form with ambient polynomial coefficients; only the pairing against
/// vector fields is exposed, so sphere-ideal ambiguity of representatives
/// never matters.
struct OneForm {
    RingPtr ring;
    std::vector<Poly> comp;

    static OneForm zero(const RingPtr& r);
    Poly pair(const VectorField& X) const;
    OneForm operator+(const OneForm& o) const;
    OneForm operator-(const OneForm& o) const;
    OneForm scaled(const Poly& f) const;
    OneForm conj() const;
};

VectorField bracket(const VectorField& X, const VectorField& Y);

/// d(eta)(X, Y) = X(eta(Y)) - Y(eta(X)) - eta([X,Y]), for eta given as an
/// arbitrary functional on vector fields (a frame-expressed one-form works).
Poly d_eval(const std::function<Poly(const VectorField&)>& eta, const VectorField& X,
            const VectorField& Y);
Poly d_eval(const OneForm& eta, const VectorField& X, const VectorField& Y);

/// Admissible frame package {theta, theta^alpha, T, Z_alpha} with Levi data.
struct FrameData {
    ModelId model;
    RingPtr ring;
    int n = 1;
    OneForm theta;
    std::vector<OneForm> theta1; // theta^alpha
    VectorField T;
    std::vector<VectorField> Z, Zbar;
    Poly h; // h_{1 1bar} at n = 1; Heisenberg frames have h_{ab} = delta_ab (asserted)

    /// Expand a tangent field over {T, Z_a, Z_abar} and evaluate a
    /// frame-expressed one-form with components (cT, cZ[a], cZb[a]).
    Poly eval_frame_form(const Poly& cT, const std::vector<Poly>& cZ, const std::vector<Poly>& cZb,
                         const VectorField& X) const;
};

// Ring factories. jet_order = 0 means no deformation variable.
RingPtr sphere_ring(int jet_order = 0);
RingPtr rossi_ring(const Rational& t); // carries the exact unit lam, lam^2 = 1 - t^2
RingPtr heis_ring(int n, int jet_order = 0);

/// Free ring on z1, z2, zb1, zb2 (no sphere relation); used where ambient
/// representatives matter, e.g. harmonic polynomial computations.
RingPtr ambient_ring();

/// Rebuild a polynomial in another ring, matching variables by name. Every
/// variable occurring in p must exist in the target ring.
Poly transplant(const RingPtr& to, const Poly& p);

/// Exact inverse of a unit scalar: a nonzero constant, or a jet whose t^0
/// coefficient is a nonzero constant.
Poly scalar_invert(const Poly& p);

FrameData model_frame(const ModelId& m);

/// Unique jet vector field with theta_t(T_t) = 1, d theta_t(T_t, .) = 0.
/// theta_t must be a jet deformation of the base frame's contact form.
VectorField reeb_field(const OneForm& theta_t, const FrameData& base);

/// Frame along the path (J exp(-t J E-hat), e^{t u} theta) over the sphere,
/// to the ring's jet order. E-hat is the endomorphism 2 Re(E); its (1,1bar)
/// component is 2*E11 in the tangent-space coordinates used throughout.
FrameData deform_frame(const Poly& E11, const Poly& u, int order);

/// Solve a small linear system with jet-scalar entries; every pivot must
/// have an invertible (nonzero constant) leading jet coefficient.
std::vector<Poly> solve_jet_linear(std::vector<std::vector<Poly>> m, std::vector<Poly> rhs);

} // namespace mtw
