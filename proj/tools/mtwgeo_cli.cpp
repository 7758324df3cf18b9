#include "mtwgeo/report.hpp"
#include "mtwgeo/spectral.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int fail_usage(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& out) {
    mtw::Report r;
    try {
        r = mtw::run_suite(suite, seed);
    } catch (const std::invalid_argument& e) {
        return fail_usage(e.what());
    }
    std::string json = r.to_json();
    if (out.empty()) {
        std::cout << json << "\n";
    } else {
        std::ofstream f(out);
        if (!f) return fail_usage("cannot open output file: " + out);
        f << json << "\n";
    }
    return r.pass() ? 0 : 1;
}

int cmd_scan(const std::vector<std::string>& ts) {
    std::vector<mtw::Rational> params;
    for (const std::string& s : ts) {
        mtw::Rational t;
        try {
            t = mtw::Rational(s);
            t.canonicalize();
        } catch (...) {
            return fail_usage("not a rational: " + s);
        }
        if (!(t > -1 && t < 1) || t == 0) return fail_usage("t must lie in (-1,1) \\ {0}: " + s);
        params.push_back(t);
    }
    std::cout << "t,R,A11_imag,kernel_dim\n";
    for (const mtw::Rational& t : params) {
        mtw::Rational omt2 = 1 - t * t;
        mtw::Rational R = mtw::Rational(2) * (1 + t * t) / omt2;
        mtw::Rational a_im = mtw::Rational(-4) * t / omt2;
        mtw::KernelResult k = mtw::exact_kernel(mtw::ModelId::rossi3(t));
        std::cout << mtw::to_string(t) << "," << mtw::to_string(R) << "," << mtw::to_string(a_im)
                  << "," << k.real_dimension << "\n";
    }
    return 0;
}

int cmd_curvature(const mtw::ModelId& m) {
    mtw::FrameData f = mtw::model_frame(m);
    mtw::ConnectionData c = mtw::solve_connection(f);
    std::cout << "model: " << m.str() << "\n";
    std::cout << "levi_h: " << f.h.str() << "\n";
    std::cout << "omega11_theta: " << c.omega_T.str() << "\n";
    std::cout << "omega11_theta1: " << c.omega_Z.str() << "\n";
    std::cout << "omega11_theta1bar: " << c.omega_Zb.str() << "\n";
    std::cout << "A11: " << c.A11.str() << "\n";
    std::cout << "scalar_curvature: " << c.R.str() << "\n";
    return 0;
}

int cmd_kernel(const mtw::ModelId& m) {
    mtw::KernelResult k = mtw::exact_kernel(m);
    std::cout << "model: " << m.str() << "\n";
    std::cout << "eigenvalue_target: " << mtw::to_string(k.eigenvalue_target) << "\n";
    std::cout << "admissible_blocks:";
    for (auto& [p, q] : k.admissible) std::cout << " (" << p << "," << q << ")";
    std::cout << "\nreal_dimension: " << k.real_dimension << "\n";
    for (const mtw::Poly& b : k.real_basis) std::cout << "basis: " << b.str() << "\n";
    return 0;
}

int cmd_spectra(int max_degree) {
    mtw::ModelId sph = mtw::ModelId::sphere3();
    mtw::KernelResult k = mtw::exact_kernel(sph);
    std::cout << "p,q,dim,delta_b_eigenvalue,kernel_contribution\n";
    mtw::RingPtr r = mtw::model_frame(sph).ring;
    for (int d = 0; d <= max_degree; ++d)
        for (int p = d; p >= 0; --p) {
            int q = d - p;
            int dim = static_cast<int>(mtw::harmonic_basis(r, p, q).size());
            bool in_kernel = false;
            for (auto& [ap, aq] : k.admissible) in_kernel |= (ap == p && aq == q);
            std::cout << p << "," << q << "," << dim << "," << -(2 * p * q + p + q) << ","
                      << (in_kernel ? dim : 0) << "\n";
        }
    return 0;
}

int cmd_linearize(const mtw::ModelId& m, const std::string& etxt, const std::string& utxt) {
    mtw::FrameData f = mtw::model_frame(m);
    mtw::ConnectionData c = mtw::solve_connection(f);
    mtw::DeformationTangent d{mtw::Poly(f.ring), mtw::Poly(f.ring)};
    try {
        if (!etxt.empty()) d.E11 = mtw::parse_poly(f.ring, etxt);
        if (!utxt.empty()) d.u = mtw::parse_poly(f.ring, utxt);
    } catch (const std::exception& e) {
        return fail_usage(std::string("bad expression: ") + e.what());
    }
    if (!(d.u == d.u.conj())) return fail_usage("contact direction u must be real");
    std::cout << "model: " << m.str() << "\n";
    std::cout << "E11: " << d.E11.str() << "\n";
    std::cout << "u: " << d.u.str() << "\n";
    std::cout << "scalar_variation: " << mtw::linearize_R(f, c, d).str() << "\n";
    std::cout << "torsion_variation: " << mtw::linearize_A(f, c, d).str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact pseudohermitian geometry engine"};
    app.require_subcommand(1);

    std::string suite, out;
    std::uint64_t seed = 42;
    auto* verify = app.add_subcommand("verify", "Run a verification suite, JSON report");
    verify->add_option("suite", suite, "one of: commutators, linearizations, adjointness, rossi, kernel, splitting, all")
        ->required();
    verify->add_option("--seed", seed, "seed for the randomized batteries");
    verify->add_option("--out", out, "write the JSON report to a file instead of stdout");

    std::string family;
    std::vector<std::string> ts;
    auto* scan = app.add_subcommand("scan", "Scan a model family, CSV output");
    scan->add_option("family", family, "family name (rossi)")->required();
    scan->add_option("--t", ts, "rational parameters, e.g. 1/2,-1/3")->required()->delimiter(',');

    std::string model = "sphere3";
    auto* curvature = app.add_subcommand("curvature", "Connection, torsion and curvature of a model");
    curvature->add_option("--model", model, "sphere3 | rossi:<p>/<q> | heisenberg:<n>");

    std::string kmodel = "sphere3";
    auto* kernel = app.add_subcommand("kernel", "Exact kernel of the adjoint operator");
    kernel->add_option("--model", kmodel, "sphere3 | rossi:<p>/<q>");

    int max_degree = 8;
    auto* spectra = app.add_subcommand("spectra", "Harmonic spectra table, CSV output");
    spectra->add_option("--max-degree", max_degree, "largest total degree p+q")
        ->check(CLI::NonNegativeNumber);

    std::string lmodel = "sphere3", etxt, utxt;
    auto* linearize = app.add_subcommand("linearize", "First variations along a tangent");
    linearize->add_option("--model", lmodel, "sphere3 | rossi:<p>/<q>");
    linearize->add_option("--e", etxt, "E11 component, e.g. \"i*z1^2 + 1/2*zb2\"");
    linearize->add_option("--u", utxt, "real contact factor, e.g. \"z1*zb1\"");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto parse_model = [](const std::string& s) { return mtw::ModelId::parse(s); };
    if (verify->parsed()) return cmd_verify(suite, seed, out);
    if (scan->parsed()) {
        if (family != "rossi") return fail_usage("unknown family: " + family);
        return cmd_scan(ts);
    }
    if (curvature->parsed()) {
        auto m = parse_model(model);
        if (!m) return fail_usage("bad model: " + model);
        return cmd_curvature(*m);
    }
    if (kernel->parsed()) {
        auto m = parse_model(kmodel);
        if (!m || m->kind == mtw::ModelId::Kind::Heisenberg)
            return fail_usage("kernel needs a compact model: " + kmodel);
        return cmd_kernel(*m);
    }
    if (spectra->parsed()) return cmd_spectra(max_degree);
    if (linearize->parsed()) {
        auto m = parse_model(lmodel);
        if (!m || m->kind == mtw::ModelId::Kind::Heisenberg)
            return fail_usage("linearize needs a compact model: " + lmodel);
        return cmd_linearize(*m, etxt, utxt);
    }
    return 2;
}
