#pragma once

#include <array>
#include <charconv>
#include <ostream>
#include <string>
#include <system_error>

#include <json.hpp>

#include "rational_poly.hpp"
#include "verify.hpp"
#include "weierstrass.hpp"

namespace xherm {

inline constexpr const char* kSchema = "xherm/1";

/// Shortest decimal that reads back to the same double; -0 prints as 0.
inline std::string format_double(double v) {
    if (v == 0) v = 0;
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, end);
}

inline double clean(double v) { return v == 0 ? 0.0 : v; }

/// "v x y z" per vertex in row-major order, then 1-indexed quads.
inline void write_obj(std::ostream& os, const SurfaceMesh& m) {
    os << "# xherm surface " << m.nu << "x" << m.nv << "\n";
    for (const auto& p : m.points)
        os << "v " << format_double(p[0]) << ' ' << format_double(p[1]) << ' ' << format_double(p[2]) << '\n';
    for (int j = 0; j + 1 < m.nv; ++j)
        for (int i = 0; i + 1 < m.nu; ++i) {
            const std::size_t k = m.index(i, j) + 1;
            os << "f " << k << ' ' << k + 1 << ' ' << k + m.nu + 1 << ' ' << k + m.nu << '\n';
        }
}

inline void write_csv(std::ostream& os, const SurfaceMesh& m) {
    os << "x,y,F1,F2,F3,err\n";
    for (int j = 0; j < m.nv; ++j)
        for (int i = 0; i < m.nu; ++i) {
            const std::size_t k = m.index(i, j);
            const auto& p = m.points[k];
            os << format_double(m.x[static_cast<std::size_t>(i)]) << ',' << format_double(m.y[static_cast<std::size_t>(j)])
               << ',' << format_double(p[0]) << ',' << format_double(p[1]) << ',' << format_double(p[2]) << ','
               << format_double(m.error[k]) << '\n';
        }
}

inline nlohmann::ordered_json complex_json(Complex z) { return {clean(z.real()), clean(z.imag())}; }

inline nlohmann::ordered_json params_json(const WeierstrassParams& p) {
    nlohmann::ordered_json j;
    j["n"] = p.n;
    j["c1"] = complex_json(p.c1);
    j["c2"] = complex_json(p.c2);
    j["lambda"] = complex_json(p.spectral_lambda);
    j["xi0"] = complex_json(p.xi0);
    j["chi_form"] = p.chi_form == ChiForm::associated ? "associated" : "as-printed";
    return j;
}

inline nlohmann::ordered_json mesh_json(const SurfaceMesh& m) {
    nlohmann::ordered_json j;
    j["nu"] = m.nu;
    j["nv"] = m.nv;
    j["domain"] = {clean(m.domain.x0), clean(m.domain.x1), clean(m.domain.y0), clean(m.domain.y1)};
    auto& xs = j["x"] = nlohmann::ordered_json::array();
    for (double v : m.x) xs.push_back(clean(v));
    auto& ys = j["y"] = nlohmann::ordered_json::array();
    for (double v : m.y) ys.push_back(clean(v));
    auto& pts = j["points"] = nlohmann::ordered_json::array();
    for (const auto& p : m.points) pts.push_back({clean(p[0]), clean(p[1]), clean(p[2])});
    auto& err = j["error"] = nlohmann::ordered_json::array();
    for (double v : m.error) err.push_back(clean(v));
    return j;
}

inline void write_mesh_json(std::ostream& os, const SurfaceMesh& m, const WeierstrassParams& p) {
    nlohmann::ordered_json j;
    j["schema"] = kSchema;
    j["params"] = params_json(p);
    j["mesh"] = mesh_json(m);
    os << j.dump() << '\n';
}

inline nlohmann::ordered_json report_json(const SuiteReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["pass"] = r.pass();
    j["failures"] = r.failures();
    auto& cs = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["value"] = clean(c.value);
        e["tol"] = clean(c.tol);
        if (!c.detail.empty()) e["detail"] = c.detail;
        cs.push_back(std::move(e));
    }
    j["notes"] = r.notes;
    return j;
}

/// Exact coefficients keyed by degree, nonzero terms only.
inline nlohmann::ordered_json coeffs_json(const RationalPoly& p) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, c] : p.terms()) j[std::to_string(k)] = c.get_str();
    return j;
}

}  // namespace xherm
