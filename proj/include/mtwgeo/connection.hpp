#pragma once

#include "mtwgeo/geometry.hpp"

#include <random>

namespace mtw {

/// Frame direction for covariant differentiation at n = 1.
enum class Dir { D0, D1, D1b };

/// Connection coefficients in the admissible frame. At n = 1 the full data
/// is the single form omega_1^1 (components against T, Z_1, Z_1bar), the
/// torsion A^1_{1bar}, and the scalar curvature. Heisenberg frames solve to
/// the flat connection; the solver verifies every coefficient vanishes and
/// sets `flat`.
struct ConnectionData {
    bool flat = false;
    int n = 1;
    Poly omega_T, omega_Z, omega_Zb; // omega_1^1(T), omega_1^1(Z_1), omega_1^1(Z_1bar)
    Poly Aup;                        // A^1_{1bar}
    Poly A11;                        // A_{11} = h * conj(A^1_{1bar})
    Poly R;                          // Webster scalar curvature
};

/// Solve the structure equations for the frame's unique compatible
/// connection. Throws std::runtime_error when the system is inconsistent
/// (e.g. the consistency component of the hermitian condition fails).
ConnectionData solve_connection(const FrameData& f);

Poly scalar_curvature(const ModelId& m);

/// Plain frame derivative of a function (n = 1 frames).
Poly frame_apply(const FrameData& f, Dir d, const Poly& p);

/// Covariant derivative of a single tensor component at n = 1. The weights
/// are (#upper - #lower) counts of unbarred and barred indices of the
/// component; e.g. sigma_1 has (-1, 0), E_{11} has (-2, 0), tau^1 has (1, 0).
Poly cov_deriv(const FrameData& f, const ConnectionData& c, Dir d, const Poly& comp, int w_unbar,
               int w_bar);

/// Sublaplacian on functions. Eigenvalues on spherical harmonics H^{p,q}
/// come out as -(2pq + p + q) in this orientation.
Poly sublaplacian(const FrameData& f, const ConnectionData& c, const Poly& u);

/// Exact residual battery for the commutation identities of second covariant
/// derivatives (scalars and one-tensors, including the torsion and curvature
/// terms). Every residual must reduce to the zero polynomial.
struct ResidualCheck {
    std::string name;
    bool pass;
    std::string detail; // first nonzero residual, when failing
};
std::vector<ResidualCheck> commutator_residuals(const ModelId& m, unsigned seed, int samples);

/// Random polynomial in the ring's geometric variables (deterministic given
/// the generator state).
Poly random_poly(const RingPtr& r, std::mt19937_64& rng, int max_degree, int terms);

} // namespace mtw
