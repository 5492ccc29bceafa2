#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <xherm/xherm.hpp>

using namespace xherm;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2 };

Complex parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            const double re = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return {re, 0};
        }
        const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
        const double re = std::stod(a, &used);
        if (used != a.size()) throw std::invalid_argument(s);
        const double im = std::stod(b, &used);
        if (used != b.size()) throw std::invalid_argument(s);
        return {re, im};
    } catch (const std::logic_error&) {
        throw CLI::ValidationError("complex", "expected RE or RE,IM, got '" + s + "'");
    }
}

std::vector<int> parse_indices(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
            throw CLI::ValidationError("--indices", "bad index '" + tok + "'");
        }
    }
    if (out.empty()) throw CLI::ValidationError("--indices", "empty list");
    return out;
}

struct PolyArgs {
    std::string kind = "classical";
    int n = 0;
    bool coeffs = false;
    std::string eval;
    int trunc = -1;
};

int cmd_poly(const PolyArgs& a) {
    const int K = a.trunc < 0 ? default_truncation(a.n) : a.trunc;
    const bool do_eval = !a.eval.empty();
    const Complex z = do_eval ? parse_complex(a.eval) : Complex(0);
    auto emit_value = [](Complex v) { std::cout << format_double(v.real()) << ' ' << format_double(v.imag()) << '\n'; };
    auto emit_poly = [&](const RationalPoly& p) {
        if (do_eval && !a.coeffs) return emit_value(p.eval(z));
        std::cout << coeffs_json(p).dump() << '\n';
        if (do_eval) emit_value(p.eval(z));
    };

    if (a.kind == "classical") {
        if (a.n < 0) throw domain_error("classical Hermite: n must be non-negative");
        emit_poly(hermite(a.n));
    } else if (a.kind == "xop") {
        emit_poly(xop_polynomial(a.n));
    } else if (a.kind == "hhat") {
        if ((a.n == 1 || a.n == 2) && do_eval && !a.coeffs) {
            emit_value(hhat_gap(a.n, z));
        } else {
            emit_poly(hhat(a.n));
        }
    } else if (a.kind == "alpha") {
        const Alpha al = alpha(a.n, K);
        if (al.is_analytic()) {
            if (a.coeffs) throw gap_sequence_error(a.n);
            if (!do_eval) throw domain_error("alpha_n for n in {1,2} has no coefficient list; use --eval");
            emit_value(al.eval(z));
        } else {
            emit_poly(al.series().as_poly());
        }
    } else {
        SeriesKind kind = a.kind == "beta" ? SeriesKind::beta : a.kind == "mu" ? SeriesKind::mu : SeriesKind::nu;
        if (a.n < 0) throw domain_error("series: n must be non-negative");
        const SeriesSolution s = detail::make_series(a.n, K, kind);
        if (do_eval && !a.coeffs) {
            emit_value(s.eval(z));
        } else {
            std::cout << coeffs_json(s.as_poly()).dump() << '\n';
            if (do_eval) emit_value(s.eval(z));
        }
    }
    return kOk;
}

struct VerifyArgs {
    std::string suite;
    int n_max = -1;
    int k_max = -1;
    double tol = -1;
    bool json = false;
    bool verbose = false;
    std::string kind = "hhat";
    std::string indices = "0,3,4,5,6,7";
    std::vector<int> ns;
    std::vector<int> grid{41, 41};
    int threads = 0;
};

int emit_report(const SuiteReport& r, const VerifyArgs& a, const nlohmann::ordered_json& params) {
    if (a.json) {
        nlohmann::ordered_json j;
        j["schema"] = kSchema;
        j["params"] = params;
        j["report"] = report_json(r);
        std::cout << j.dump(2) << '\n';
    } else {
        std::printf("%-12s %6zu checks  %4zu failed  worst %s  %s\n", r.suite.c_str(), r.checks.size(), r.failures(),
                    detail::fmt(r.worst()).c_str(), r.pass() ? "PASS" : "FAIL");
        for (const auto& c : r.checks)
            if (!c.pass || a.verbose)
                std::printf("  %s  %-44s %s (tol %s) %s\n", c.pass ? "ok  " : "FAIL", c.name.c_str(),
                            detail::fmt(c.value).c_str(), detail::fmt(c.tol).c_str(), c.detail.c_str());
        for (const auto& n : r.notes) std::printf("  note: %s\n", n.c_str());
    }
    return r.pass() ? kOk : kFail;
}

SuiteReport merge(std::string name, const std::vector<SuiteReport>& parts) {
    SuiteReport out{std::move(name), {}, {}};
    for (const auto& p : parts) {
        for (auto c : p.checks) {
            c.name = p.suite + "/" + c.name;
            out.checks.push_back(std::move(c));
        }
        for (const auto& n : p.notes) out.notes.push_back(p.suite + ": " + n);
    }
    out.sort();
    return out;
}

int cmd_verify(const VerifyArgs& a) {
    nlohmann::ordered_json params;
    params["suite"] = a.suite;
    if (a.suite == "ode") {
        OdeSuiteOptions o;
        if (a.n_max >= 0) o.n_max = a.n_max;
        if (a.k_max >= 0) o.truncation = a.k_max;
        if (a.tol > 0) o.tol = a.tol;
        params["n_max"] = o.n_max;
        params["truncation"] = o.truncation;
        params["tol"] = o.tol;
        return emit_report(ode_suite(o), a, params);
    }
    if (a.suite == "wronskian") {
        WronskianSuiteOptions o;
        if (a.n_max >= 0) o.n_max = a.n_max;
        if (a.k_max >= 0) o.truncation = a.k_max;
        if (a.tol > 0) o.tol = a.tol;
        params["n_max"] = o.n_max;
        params["truncation"] = o.truncation;
        params["tol"] = o.tol;
        return emit_report(wronskian_suite(o), a, params);
    }
    if (a.suite == "deltas") {
        DeltaSuiteOptions o;
        if (a.n_max >= 0) o.n_max = a.n_max;
        if (a.k_max >= 0) o.k_max = a.k_max;
        params["k_max"] = o.k_max;
        params["n_max"] = o.n_max;
        return emit_report(delta_suite(o), a, params);
    }
    if (a.suite == "gram") {
        const GramKind kind = a.kind == "xop" ? GramKind::xop
                              : a.kind == "nu" ? GramKind::nu
                              : a.kind == "mu" ? GramKind::mu
                                               : GramKind::hhat;
        const double tol = a.tol > 0 ? a.tol : 1e-8;
        const auto idx = parse_indices(a.indices);
        params["kind"] = to_string(kind);
        params["indices"] = idx;
        params["tol"] = tol;
        return emit_report(gram_suite(kind, idx, tol), a, params);
    }
    if (a.suite == "frame") {
        FrameSuiteOptions o;
        if (!a.ns.empty()) o.ns = a.ns;
        if (a.n_max >= 0) {
            o.ns.clear();
            for (int n = 0; n <= a.n_max; ++n) o.ns.push_back(n);
        }
        if (a.tol > 0) o.tol = a.tol;
        params["n"] = o.ns;
        params["tol"] = o.tol;
        std::vector<SuiteReport> parts{frame_suite(o)};
        for (int n : o.ns) parts.push_back(association_suite(WeierstrassParams::figure_defaults(n), 20, 1e-8));
        return emit_report(merge("frame", parts), a, params);
    }
    if (a.suite == "curvature") {
        CurvatureSuiteOptions o;
        if (a.grid.size() != 2) throw CLI::ValidationError("--grid", "expected NU NV");
        o.nu = a.grid[0];
        o.nv = a.grid[1];
        if (a.tol > 0) o.tol = a.tol;
        o.threads = a.threads;
        const std::vector<int> ns = a.ns.empty() ? std::vector<int>{3} : a.ns;
        params["n"] = ns;
        params["grid"] = a.grid;
        params["tol"] = o.tol;
        std::vector<SuiteReport> parts;
        for (int n : ns) parts.push_back(curvature_suite(WeierstrassParams::figure_defaults(n), o));
        return emit_report(merge("curvature", parts), a, params);
    }
    throw CLI::ValidationError("verify", "unknown suite '" + a.suite + "'");
}

struct SurfaceArgs {
    int n = 3;
    std::vector<int> grid{41, 41};
    std::vector<double> domain{-1, 1, -1, 1};
    std::string xi0 = "1,3";
    std::string c1 = "1", c2 = "1";
    std::string lambda;
    std::string chi_form = "associated";
    std::string format = "obj";
    std::string out = "-";
    int threads = 0;
};

int cmd_surface(const SurfaceArgs& a) {
    WeierstrassParams p = WeierstrassParams::figure_defaults(a.n);
    p.xi0 = parse_complex(a.xi0);
    p.c1 = parse_complex(a.c1);
    p.c2 = parse_complex(a.c2);
    if (!a.lambda.empty()) p.spectral_lambda = parse_complex(a.lambda);
    p.chi_form = a.chi_form == "as-printed" ? ChiForm::as_printed : ChiForm::associated;
    if (a.grid.size() != 2) throw CLI::ValidationError("--grid", "expected NU NV");
    if (a.domain.size() != 4) throw CLI::ValidationError("--domain", "expected X0 X1 Y0 Y1");
    const MeshDomain dom{a.domain[0], a.domain[1], a.domain[2], a.domain[3]};
    p.validate();
    const Immersion imm(p);
    if (!imm.closed_form_active())
        std::cerr << "note: closed-form brackets failed the derivative check; using direct quadrature\n";
    const SurfaceMesh m = generate_mesh(imm, dom, a.grid[0], a.grid[1], a.threads);

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (a.out != "-") {
        file.open(a.out);
        if (!file) {
            std::cerr << "error: cannot open " << a.out << '\n';
            return kFail;
        }
        os = &file;
    }
    if (a.format == "obj")
        write_obj(*os, m);
    else if (a.format == "csv")
        write_csv(*os, m);
    else
        write_mesh_json(*os, m, p);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exceptional Hermite X2(1) toolkit: polynomials, identity suites, minimal surfaces"};
    app.require_subcommand(1);

    PolyArgs pa;
    auto* poly = app.add_subcommand("poly", "Coefficients or values of a family member");
    poly->add_option("--kind", pa.kind, "classical|xop|hhat|alpha|beta|mu|nu")
        ->check(CLI::IsMember({"classical", "xop", "hhat", "alpha", "beta", "mu", "nu"}));
    poly->add_option("--n", pa.n, "Index")->required();
    poly->add_flag("--coeffs", pa.coeffs, "Exact coefficients as JSON keyed by degree");
    poly->add_option("--eval", pa.eval, "Evaluate at RE[,IM]");
    poly->add_option("--trunc", pa.trunc, "Series truncation K");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run an identity suite; exit 0 iff all checks pass");
    verify->add_option("suite", va.suite, "ode|wronskian|deltas|gram|frame|curvature")
        ->required()
        ->check(CLI::IsMember({"ode", "wronskian", "deltas", "gram", "frame", "curvature"}));
    verify->add_option("--n-max", va.n_max, "Largest n");
    verify->add_option("--k-max", va.k_max, "Largest k (deltas) or series truncation");
    verify->add_option("--tol", va.tol, "Tolerance");
    verify->add_flag("--json", va.json, "Machine-readable report");
    verify->add_flag("-v,--verbose", va.verbose, "List passing checks too");
    verify->add_option("--kind", va.kind, "Gram family: hhat|xop|nu|mu")
        ->check(CLI::IsMember({"hhat", "xop", "nu", "mu"}));
    verify->add_option("--indices", va.indices, "Gram indices, comma separated");
    verify->add_option("--n", va.ns, "Indices for frame/curvature");
    verify->add_option("--grid", va.grid, "Mesh size NU NV")->expected(2);
    verify->add_option("--threads", va.threads, "Worker threads (default: XHERM_THREADS or 1)");

    SurfaceArgs sa;
    auto* surface = app.add_subcommand("surface", "Export the minimal surface mesh");
    surface->add_option("--n", sa.n, "Index");
    surface->add_option("--grid", sa.grid, "NU NV")->expected(2);
    surface->add_option("--domain", sa.domain, "X0 X1 Y0 Y1")->expected(4);
    surface->add_option("--xi0", sa.xi0, "Base point RE,IM");
    surface->add_option("--c1", sa.c1, "c1 as RE[,IM]");
    surface->add_option("--c2", sa.c2, "c2 as RE[,IM]");
    surface->add_option("--lambda", sa.lambda, "Spectral parameter RE[,IM] (default sqrt(pi))");
    surface->add_option("--chi-form", sa.chi_form, "associated|as-printed")
        ->check(CLI::IsMember({"associated", "as-printed"}));
    surface->add_option("--format", sa.format, "obj|csv|json")->check(CLI::IsMember({"obj", "csv", "json"}));
    surface->add_option("--out", sa.out, "Output path, - for stdout");
    surface->add_option("--threads", sa.threads, "Worker threads (default: XHERM_THREADS or 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*poly) return cmd_poly(pa);
        if (*verify) return cmd_verify(va);
        if (*surface) return cmd_surface(sa);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const vertex_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    } catch (const convergence_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
