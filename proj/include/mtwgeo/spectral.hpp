#pragma once

#include "mtwgeo/linalg.hpp"
#include "mtwgeo/variation.hpp"

#include <functional>

namespace mtw {

/// Exact integral over S^3 with the normalized invariant measure:
/// int z^a zbar^b = delta_{ab} a1! a2! / (|a|+1)!.
GaussRat sphere_integral(const Poly& p);
/// L^2 inner product int f conj(g).
GaussRat inner_product(const Poly& f, const Poly& g);

/// Weight basis of the spherical harmonic space H^{p,q}: one element per
/// torus weight, pairwise L^2-orthogonal, dimension p + q + 1. Elements are
/// canonical-form restrictions to the sphere, built in the given ring.
std::vector<Poly> harmonic_basis(const RingPtr& r, int p, int q);

/// Direct sum of harmonic spaces with bookkeeping for exact operator
/// assembly via Gram projection.
struct SpectralSpace {
    RingPtr ring;
    std::vector<std::pair<int, int>> deg; // (p, q) per element
    std::vector<int> weight;              // torus weight per element
    std::vector<Poly> basis;
    std::vector<GaussRat> norm2; // diagonal Gram entries

    int dim() const { return static_cast<int>(basis.size()); }
    /// Expand f (which must lie in the span) over the basis; verified by
    /// reconstructing f exactly from the projections.
    std::vector<GaussRat> expand(const Poly& f) const;
};

SpectralSpace harmonic_space(const RingPtr& r, const std::vector<std::pair<int, int>>& degs);
/// All (p, q) with p + q <= max_degree.
SpectralSpace harmonic_space_upto(const RingPtr& r, int max_degree);

/// Exact matrix of a linear operator that preserves the span. `parallel`
/// switches to the OpenMP column assembly; results are identical.
Mat operator_matrix(const SpectralSpace& S, const std::function<Poly(const Poly&)>& op,
                    bool parallel = false);
Mat gram_matrix(const SpectralSpace& S);

/// Complex-linear extension of DR composed with Gamma at the model.
std::function<Poly(const Poly&)> drgamma_op(const FrameData& f, const ConnectionData& c);

/// Stacked components of Gamma (torsion, conjugate slot, scalar) as
/// complex-linear maps; their common kernel on real functions is ker Gamma.
struct GammaMaps {
    std::function<Poly(const Poly&)> torsion, torsion_conj, scalar;
};
GammaMaps gamma_maps(const FrameData& f, const ConnectionData& c);

/// Characteristic polynomial of Z_1 Z_1 + Z_1bar Z_1bar on
/// H^{p,q} (+) H^{q,p} (equivalently of its restriction to the real points).
QPoly zz_charpoly(int p, int q);

/// Exact kernel of Gamma localized by the sublaplacian eigenvalue condition.
struct KernelResult {
    Rational eigenvalue_target;               // required value of 2pq + p + q
    std::vector<std::pair<int, int>> admissible;
    int real_dimension;
    std::vector<Poly> real_basis;
};
KernelResult exact_kernel(const ModelId& m);

/// No-solution certificate for one candidate harmonic block of the Rossi
/// kernel equations: the scalar- and (squared) torsion-equation polynomials
/// in t are coprime over Q, so no parameter satisfies both.
struct Certificate {
    int p, q;
    Rational lambda;     // 2pq + p + q
    Rational zz_eigen2;  // e^2 with char poly (x^2 - e^2)^{dim/2}
    QPoly scalar_eq;     // lambda (1-t^2)^2 - (1 + 18 t^2 + t^4)
    QPoly torsion_eq;    // e^2 (1-t^2)^4 - 100 t^2 (1+t^2)^2
    QPoly gcd;           // must be the constant 1
    std::vector<std::pair<Rational, Rational>> scalar_roots_in_unit; // isolated in (-1,1)
};
std::vector<Certificate> rossi_certificates();

/// DR Gamma spectral analysis on the sphere up to a total degree.
struct DrGammaAnalysis {
    SpectralSpace space;
    Mat M;                   // operator matrix (diagonal on the weight basis)
    bool diagonal;
    bool hermitian;          // pairing matrix <O b_j, b_i> is hermitian
    bool psd;
    int kernel_dim;          // zero diagonal entries
    std::vector<GaussRat> diag;
    std::vector<Rational> predicted; // (9/2) lambda^2 + (3/2)(p-q)^2 per element
    /// max |mu/predicted - 1| over elements of exact total degree k
    std::vector<std::pair<int, Rational>> level_ratio;
};
DrGammaAnalysis drgamma_analysis(int max_degree, bool parallel = false);

} // namespace mtw
