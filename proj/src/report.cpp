#include "mtwgeo/report.hpp"

#include "mtwgeo/heisenberg_op.hpp"
#include "mtwgeo/spectral.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mtw {

bool Report::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["suite"] = suite;
    j["seed"] = seed;
    j["pass"] = pass();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = c.pass ? "pass" : "fail";
        jc["expected"] = c.expected;
        jc["actual"] = c.actual;
        jc["provenance"] = c.provenance;
        j["checks"].push_back(jc);
    }
    j["timing_seconds"] = seconds;
    return j.dump(2);
}

namespace {

void add(Report& r, const std::string& name, const std::string& prov, const std::string& expected,
         const std::string& actual, bool pass) {
    r.checks.push_back({name, expected, actual, prov, pass});
}

void add_eq(Report& r, const std::string& name, const std::string& prov, const std::string& expected,
            const std::string& actual) {
    add(r, name, prov, expected, actual, expected == actual);
}

void add_poly_eq(Report& r, const std::string& name, const std::string& prov, const Poly& expected,
                 const Poly& actual) {
    add(r, name, prov, expected.str(), actual.str(), expected == actual);
}

std::string rat(const Rational& q) { return to_string(q); }

Poly constant_of(const RingPtr& ring, const GaussRat& v) { return Poly::constant(ring, v); }

/// Rank of the span of a polynomial list, via exact monomial coordinates.
int span_rank(const std::vector<Poly>& ps) {
    std::map<std::vector<int>, int> idx;
    for (const auto& p : ps)
        for (const auto& [m, c] : p.terms()) idx.emplace(m, 0);
    int ncols = 0;
    for (auto& kv : idx) kv.second = ncols++;
    Mat A(static_cast<int>(ps.size()), ncols == 0 ? 1 : ncols);
    for (int i = 0; i < static_cast<int>(ps.size()); ++i)
        for (const auto& [m, c] : ps[i].terms()) A.at(i, idx[m]) = c;
    return A.rank();
}

// ---- rossi ---------------------------------------------------------------

Report suite_rossi(std::uint64_t) {
    Report r;
    r.suite = "rossi";
    const Rational ts[] = {Rational(1) / 10, Rational(1) / 3, Rational(1) / 2, Rational(9) / 10};
    for (const Rational& t : ts) {
        ModelId m = ModelId::rossi3(t);
        FrameData f = model_frame(m);
        ConnectionData c = solve_connection(f);
        Rational omt2 = 1 - t * t;
        std::string tag = "rossi(" + rat(t) + ")";
        GaussRat wexp = GaussRat::i() * GaussRat(Rational(-2) * (1 + t * t) / omt2);
        add_poly_eq(r, tag + ".omega11.theta", "paper", constant_of(f.ring, wexp), c.omega_T);
        add_poly_eq(r, tag + ".omega11.theta1", "paper", Poly(f.ring), c.omega_Z);
        add_poly_eq(r, tag + ".omega11.theta1bar", "paper", Poly(f.ring), c.omega_Zb);
        GaussRat aexp = GaussRat::i() * GaussRat(Rational(-4) * t / omt2);
        add_poly_eq(r, tag + ".A11", "paper", constant_of(f.ring, aexp), c.A11);
        GaussRat rexp(Rational(2) * (1 + t * t) / omt2);
        add_poly_eq(r, tag + ".scalar_curvature", "paper", constant_of(f.ring, rexp), c.R);
        KernelResult k = exact_kernel(m);
        add_eq(r, tag + ".kernel_dim", "paper", "0", std::to_string(k.real_dimension));
        add_eq(r, tag + ".kernel_target", "derived",
               rat((1 + 18 * t * t + t * t * t * t) / (omt2 * omt2)), rat(k.eigenvalue_target));
    }
    // No-solution certificates for the two near-miss harmonic blocks.
    for (const Certificate& c : rossi_certificates()) {
        std::string tag = "certificate(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")";
        add_eq(r, tag + ".lambda", "derived", c.p == 2 ? "2" : "10", rat(c.lambda));
        add_eq(r, tag + ".zz_eigenvalue_sq", "paper", c.p == 2 ? "4" : "36", rat(c.zz_eigen2));
        add_eq(r, tag + ".gcd", "derived", "1", c.gcd.str("t"));
        std::ostringstream roots;
        roots << c.scalar_roots_in_unit.size() << " isolated";
        add(r, tag + ".scalar_roots_in_unit_interval", "derived", "isolated (reported)", roots.str(),
            true);
        add(r, tag + ".scalar_eq", "derived", "reported", c.scalar_eq.str("t"), true);
        add(r, tag + ".torsion_eq", "derived", "reported", c.torsion_eq.str("t"), true);
    }
    // Characteristic polynomials of Z1 Z1 + Z1bar Z1bar on the two blocks:
    // shape asserted, multiplicities reported as computed.
    QPoly x2m4(std::vector<Rational>{-4, 0, 1}), x2m36(std::vector<Rational>{-36, 0, 1});
    add_eq(r, "zz_charpoly(2,0)", "derived", x2m4.pow(3).str("x"), zz_charpoly(2, 0).str("x"));
    add(r, "zz_charpoly(2,0).multiplicity", "derived", "reported", "3", true);
    add_eq(r, "zz_charpoly(3,1)", "derived", x2m36.pow(5).str("x"), zz_charpoly(3, 1).str("x"));
    add(r, "zz_charpoly(3,1).multiplicity", "derived", "reported", "5", true);
    return r;
}

// ---- kernel --------------------------------------------------------------

Report suite_kernel(std::uint64_t) {
    Report r;
    r.suite = "kernel";
    ModelId sph = ModelId::sphere3();
    KernelResult k = exact_kernel(sph);
    add_eq(r, "sphere3.kernel_dim", "paper", "4", std::to_string(k.real_dimension));
    // Span equality with {Re z1, Im z1, Re z2, Im z2}.
    RingPtr sr = model_frame(sph).ring;
    std::vector<Poly> ref;
    for (const char* v : {"z1", "z2"}) {
        Poly z = Poly::var(sr, sr->find(v));
        ref.push_back(z + z.conj());
        ref.push_back((z - z.conj()) * GaussRat::i());
    }
    std::vector<Poly> joint = ref;
    for (const Poly& b : k.real_basis) joint.push_back(transplant(sr, b));
    bool span_ok = k.real_basis.size() == 4 && span_rank(ref) == 4 && span_rank(joint) == 4;
    add(r, "sphere3.kernel_span", "paper", "span{Re z1, Im z1, Re z2, Im z2}",
        span_ok ? "equal span" : "different span", span_ok);
    // Gamma on constants.
    {
        ModelId h1 = ModelId::heisenberg(1);
        FrameData f = model_frame(h1);
        ConnectionData c = solve_connection(f);
        GammaValue g = gamma(f, c, Poly::constant(f.ring, GaussRat(1)));
        add_poly_eq(r, "heisenberg1.gamma(1).torsion", "paper", Poly(f.ring), g.torsion);
        add_poly_eq(r, "heisenberg1.gamma(1).scalar", "paper", Poly(f.ring), g.scalar);
    }
    {
        FrameData f = model_frame(sph);
        ConnectionData c = solve_connection(f);
        GammaValue g = gamma(f, c, Poly::constant(f.ring, GaussRat(1)));
        add_poly_eq(r, "sphere3.gamma(1).torsion", "paper", Poly(f.ring), g.torsion);
        add_poly_eq(r, "sphere3.gamma(1).scalar", "paper", constant_of(f.ring, GaussRat(2)),
                    g.scalar);
        Poly dg = drgamma_op(f, c)(Poly::constant(f.ring, GaussRat(1)));
        add_poly_eq(r, "sphere3.drgamma(1)", "derived", constant_of(f.ring, GaussRat(4)), dg);
    }
    return r;
}

// ---- commutators ---------------------------------------------------------

Report suite_commutators(std::uint64_t seed) {
    Report r;
    r.suite = "commutators";
    const ModelId models[] = {ModelId::sphere3(), ModelId::heisenberg(1), ModelId::heisenberg(2),
                              ModelId::rossi3(Rational(1) / 2)};
    for (const ModelId& m : models) {
        for (const ResidualCheck& c :
             commutator_residuals(m, static_cast<unsigned>(seed), 20)) {
            add(r, m.str() + "." + c.name, "derived", "0",
                c.pass ? "0" : c.detail, c.pass);
        }
    }
    return r;
}

// ---- linearizations ------------------------------------------------------

Report suite_linearizations(std::uint64_t seed) {
    Report r;
    r.suite = "linearizations";
    FrameData f0 = model_frame(ModelId::sphere3());
    ConnectionData c0 = solve_connection(f0);
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 20; ++k) {
        Poly E = random_poly(f0.ring, rng, 3, 4);
        Poly g = random_poly(f0.ring, rng, 3, 4);
        DeformationTangent d{E, g + g.conj()};
        VariationJet vj = variation_jet(d, 1);
        RingPtr jr = vj.Rjet.ring();
        Poly dR = linearize_R(f0, c0, d);
        Poly dA = linearize_A(f0, c0, d);
        std::string tag = "tangent[" + std::to_string(k) + "]";
        add(r, tag + ".scalar_jet", "derived", "jet coefficient matches closed form",
            transplant(jr, dR) == vj.Rjet.jet_coeff(1) ? "match" : "mismatch",
            transplant(jr, dR) == vj.Rjet.jet_coeff(1));
        add(r, tag + ".torsion_jet", "derived", "jet coefficient matches closed form",
            transplant(jr, dA) == vj.A11jet.jet_coeff(1) ? "match" : "mismatch",
            transplant(jr, dA) == vj.A11jet.jet_coeff(1));
    }
    {
        DeformationTangent d = rossi_tangent(f0.ring);
        VariationJet vj = variation_jet(d, 2);
        RingPtr jr = vj.Rjet.ring();
        add_poly_eq(r, "rossi_tangent.scalar_dot", "paper", Poly(jr), vj.Rjet.jet_coeff(1));
        add_poly_eq(r, "rossi_tangent.torsion_dot", "paper",
                    Poly::constant(jr, GaussRat::i() * GaussRat(-4)), vj.A11jet.jet_coeff(1));
        add_poly_eq(r, "rossi_tangent.scalar_dot.closed_form", "derived", Poly(f0.ring),
                    linearize_R(f0, c0, d));
        add_poly_eq(r, "rossi_tangent.torsion_dot.closed_form", "derived",
                    constant_of(f0.ring, GaussRat::i() * GaussRat(-4)), linearize_A(f0, c0, d));
    }
    return r;
}

// ---- adjointness ---------------------------------------------------------

Report suite_adjointness(std::uint64_t seed) {
    Report r;
    r.suite = "adjointness";
    FrameData f0 = model_frame(ModelId::sphere3());
    ConnectionData c0 = solve_connection(f0);
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 30; ++k) {
        Poly g = random_poly(f0.ring, rng, 3, 4);
        Poly fn = g + g.conj();
        Poly E = random_poly(f0.ring, rng, 3, 4);
        Poly h = random_poly(f0.ring, rng, 3, 4);
        GammaValue gm = gamma(f0, c0, fn);
        if (k % 3 == 0) E = E + gm.torsion; // force a nonzero torsion pairing
        DeformationTangent d{E, h + h.conj()};
        GaussRat lhs = sphere_integral(fn * linearize_R(f0, c0, d));
        // <gamma_tangent(fn), d> with <(E,u),(E',u')> = int (2 Re(E conj E') + u u').
        Poly gt = gm.torsion * GaussRat(-1), gs = gm.scalar * GaussRat(-1);
        GaussRat rhs = sphere_integral(gt * d.E11.conj() + gt.conj() * d.E11 + gs * d.u);
        add_eq(r, "pair[" + std::to_string(k) + "]", "derived", to_string(lhs), to_string(rhs));
    }
    // Divergence adjoint: <grad f, tau> = <f, dstar tau>.
    for (int k = 0; k < 5; ++k) {
        Poly fn = random_poly(f0.ring, rng, 4, 5);
        Poly tau = random_poly(f0.ring, rng, 4, 5);
        Poly f1 = cov_deriv(f0, c0, Dir::D1, fn, 0, 0);
        Poly f1b = cov_deriv(f0, c0, Dir::D1b, fn, 0, 0);
        GaussRat lhs = sphere_integral(f1 * tau.conj() + f1b * tau);
        GaussRat rhs = inner_product(fn, dstar(f0, c0, tau));
        add_eq(r, "dstar[" + std::to_string(k) + "]", "derived", to_string(lhs), to_string(rhs));
    }
    return r;
}

// ---- splitting -----------------------------------------------------------

Report suite_splitting(std::uint64_t) {
    Report r;
    r.suite = "splitting";
    for (int n = 1; n <= 3; ++n) {
        HeisOp res = HeisOp::drgamma_residual(n);
        int ord = res.heis_order();
        add(r, "heisenberg" + std::to_string(n) + ".residual_order", "paper", "<= 3",
            std::to_string(ord), ord <= 3);
    }
    // Exact spectra on the sphere: sublaplacian scalar, Reeb scalar, and the
    // dimension law on each harmonic block up to total degree 8.
    FrameData f0 = model_frame(ModelId::sphere3());
    ConnectionData c0 = solve_connection(f0);
    for (int p = 0; p <= 8; ++p)
        for (int q = 0; p + q <= 8; ++q) {
            SpectralSpace S = harmonic_space(f0.ring, {{p, q}});
            std::string tag = "H(" + std::to_string(p) + "," + std::to_string(q) + ")";
            add_eq(r, tag + ".dim", "derived", std::to_string(p + q + 1),
                   std::to_string(S.dim()));
            Rational lam = Rational(2 * p * q + p + q);
            Mat L = operator_matrix(S, [&](const Poly& u) { return sublaplacian(f0, c0, u); });
            bool ok = L == Mat::identity(S.dim()).scaled(GaussRat(-lam));
            add(r, tag + ".sublaplacian_scalar", "paper", "-" + rat(lam) + " * Id",
                ok ? "exact match" : "mismatch", ok);
            Mat Tm = operator_matrix(S, [&](const Poly& u) { return f0.T.apply(u); });
            bool okT = Tm == Mat::identity(S.dim()).scaled(GaussRat::i() * GaussRat(p - q));
            add(r, tag + ".reeb_scalar", "derived", rat(Rational(p - q)) + " i * Id",
                okT ? "exact match" : "mismatch", okT);
        }
    // DR Gamma analysis up to total degree 10.
    DrGammaAnalysis A = drgamma_analysis(10, true);
    add(r, "drgamma.block_structure", "derived", "reported",
        A.diagonal ? "diagonal on the weight basis" : "not diagonal", true);
    add(r, "drgamma.pairing_hermitian", "derived", "hermitian", A.hermitian ? "hermitian" : "no",
        A.hermitian);
    add(r, "drgamma.psd", "derived", "positive semidefinite",
        A.psd ? "positive semidefinite" : "no", A.psd);
    // Independent kernel of Gamma: stacked component maps per total degree.
    GammaMaps gm = gamma_maps(f0, c0);
    int ker_gamma = 0;
    for (int k = 0; k <= 10; ++k) {
        std::vector<std::pair<int, int>> degs;
        for (int p = 0; p <= k; ++p) degs.push_back({p, k - p});
        SpectralSpace S = harmonic_space(f0.ring, degs);
        Mat Mt = operator_matrix(S, gm.torsion, true);
        Mat Mtc = operator_matrix(S, gm.torsion_conj, true);
        Mat Ms = operator_matrix(S, gm.scalar, true);
        Mat stacked(3 * S.dim(), S.dim());
        for (int i = 0; i < S.dim(); ++i)
            for (int j = 0; j < S.dim(); ++j) {
                stacked.at(i, j) = Mt.at(i, j);
                stacked.at(S.dim() + i, j) = Mtc.at(i, j);
                stacked.at(2 * S.dim() + i, j) = Ms.at(i, j);
            }
        ker_gamma += S.dim() - stacked.rank();
    }
    add_eq(r, "drgamma.kernel_dim_equals_ker_gamma", "derived", std::to_string(ker_gamma),
           std::to_string(A.kernel_dim));
    // Every zero-diagonal basis element is annihilated by Gamma; with the
    // dimension match this gives exact equality of the kernels.
    bool anni = true;
    for (int i = 0; i < A.space.dim(); ++i)
        if (A.diag[i] == GaussRat{}) {
            const Poly& b = A.space.basis[i];
            if (!gm.torsion(b).is_zero() || !gm.torsion_conj(b).is_zero() ||
                !gm.scalar(b).is_zero())
                anni = false;
        }
    add(r, "drgamma.kernel_annihilated_by_gamma", "derived", "annihilated",
        anni ? "annihilated" : "no", anni);
    // |mu/predicted - 1| trend between total degrees 5 and 10.
    Rational r5(-1), r10(-1);
    for (const auto& [k, v] : A.level_ratio) {
        if (k == 5) r5 = v;
        if (k == 10) r10 = v;
    }
    bool trend = r5 >= 0 && r10 >= 0 && r10 < r5;
    add(r, "drgamma.ratio_trend", "derived", "|ratio-1| at degree 10 < at degree 5",
        "degree5=" + rat(r5) + " degree10=" + rat(r10), trend);
    return r;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"commutators", "linearizations", "adjointness",
                                                   "rossi",       "kernel",         "splitting"};
    return names;
}

Report run_suite(const std::string& suite, std::uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    Report r;
    if (suite == "commutators") r = suite_commutators(seed);
    else if (suite == "linearizations") r = suite_linearizations(seed);
    else if (suite == "adjointness") r = suite_adjointness(seed);
    else if (suite == "rossi") r = suite_rossi(seed);
    else if (suite == "kernel") r = suite_kernel(seed);
    else if (suite == "splitting") r = suite_splitting(seed);
    else if (suite == "all") {
        r.suite = "all";
        for (const std::string& s : suite_names()) {
            Report sub = run_suite(s, seed);
            for (Check& c : sub.checks) {
                c.name = s + "." + c.name;
                r.checks.push_back(std::move(c));
            }
        }
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    r.seed = seed;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace mtw
