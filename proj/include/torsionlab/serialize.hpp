#pragma once

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "torsionlab/alt_form.hpp"
#include "torsionlab/clifford_s7.hpp"
#include "torsionlab/curvature.hpp"
#include "torsionlab/g2.hpp"
#include "torsionlab/lie.hpp"
#include "torsionlab/vectorial.hpp"

namespace torsionlab {

using json = nlohmann::ordered_json;

/// {dim, degree, terms: [[[i,j,...], coeff], ...]} with 1-based increasing
/// indices, terms in canonical key order.
inline json to_json(const AltForm& form) {
  json terms = json::array();
  for (const auto& [key, c] : form.terms()) terms.push_back(json::array({key, c}));
  return json{{"dim", form.dim()}, {"degree", form.degree()}, {"terms", terms}};
}

inline AltForm alt_form_from_json(const json& j) {
  AltForm form(j.at("dim").get<int>(), j.at("degree").get<int>());
  for (const auto& term : j.at("terms")) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_array() || !term[1].is_number())
      throw std::invalid_argument("alt_form_from_json: malformed term");
    form.add_term(term[0].get<MultiIndex>(), term[1].get<double>());
  }
  return form;
}

/// Nested arrays r[i][j][k][l].
inline json to_json(const CurvatureTensor& r) {
  const int n = r.dim();
  json out = json::array();
  for (int i = 0; i < n; ++i) {
    json ji = json::array();
    for (int j = 0; j < n; ++j) {
      json jj = json::array();
      for (int k = 0; k < n; ++k) {
        json jk = json::array();
        for (int l = 0; l < n; ++l) jk.push_back(r(i, j, k, l));
        jj.push_back(std::move(jk));
      }
      ji.push_back(std::move(jj));
    }
    out.push_back(std::move(ji));
  }
  return out;
}

/// {name, dim, entries: [[i,j,k,value], ...]} with 1-based indices; the loader
/// rejects constants that are not totally antisymmetric or fail Jacobi.
inline json to_json(const lie::StructureConstants& c) {
  json entries = json::array();
  for (int i = 1; i <= c.dim(); ++i)
    for (int j = i + 1; j <= c.dim(); ++j)
      for (int k = j + 1; k <= c.dim(); ++k) {
        const double v = c.at(i - 1, j - 1, k - 1);
        if (v != 0.0) entries.push_back(json::array({i, j, k, v}));
      }
  return json{{"name", c.name()}, {"dim", c.dim()}, {"entries", entries}};
}

inline lie::StructureConstants structure_constants_from_json(const json& j,
                                                             double tol = 1e-12) {
  lie::StructureConstants c(j.at("name").get<std::string>(), j.at("dim").get<int>());
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 4)
      throw std::invalid_argument("structure_constants_from_json: malformed entry");
    c.set_antisymmetric(e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<double>());
  }
  if (c.antisymmetry_residual() > tol)
    throw std::invalid_argument("structure_constants_from_json: not totally antisymmetric");
  if (c.jacobi_residual() > tol)
    throw std::invalid_argument("structure_constants_from_json: Jacobi identity fails");
  return c;
}

/// Integer generator tables of the rank-8 Clifford module.
inline json to_json(const s7::CliffordRep7& rep) {
  json out = json::array();
  for (const auto& k : rep.kappa_int) {
    json rows = json::array();
    for (int r = 0; r < 8; ++r) {
      json row = json::array();
      for (int c = 0; c < 8; ++c) row.push_back(k(r, c));
      rows.push_back(std::move(row));
    }
    out.push_back(std::move(rows));
  }
  return out;
}

/// One pointwise verification record of the characteristic-torsion pipeline.
struct G2PointRecord {
  std::uint64_t point_seed = 0;
  g2::FGResiduals residuals;
  double tc_deviation = 0.0;
};

inline json to_json(const G2PointRecord& rec) {
  return json{{"point_seed", rec.point_seed},
              {"residuals",
               {{"nearly_parallel", rec.residuals.nearly_parallel},
                {"cocalibrated", rec.residuals.cocalibrated},
                {"conformally_parallel", rec.residuals.conformally_parallel}}},
              {"tc_deviation", rec.tc_deviation}};
}

/// One record per line; the streamable form of pointwise results.
inline std::string to_json_lines(const std::vector<G2PointRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

/// Patch fixture schema {name, dim, metric: <builtin>, domain: {lo, hi}, fd_step};
/// metric names: euclidean, half_plane, sphere_polar, flat_torus.
inline vectorial::MetricPatch patch_from_json(const json& j) {
  const std::string metric = j.at("metric").get<std::string>();
  vectorial::MetricPatch p;
  if (metric == "euclidean") {
    p = vectorial::euclidean_patch(j.at("dim").get<int>());
  } else if (metric == "half_plane") {
    p = vectorial::half_plane_patch();
  } else if (metric == "sphere_polar") {
    p = vectorial::sphere_polar_patch();
  } else if (metric == "flat_torus") {
    p = vectorial::flat_torus_patch();
  } else {
    throw std::invalid_argument("patch_from_json: unknown metric '" + metric + "'");
  }
  if (j.contains("domain")) {
    const auto lo = j["domain"].at("lo").get<std::vector<double>>();
    const auto hi = j["domain"].at("hi").get<std::vector<double>>();
    if (static_cast<int>(lo.size()) != p.dim || static_cast<int>(hi.size()) != p.dim)
      throw std::invalid_argument("patch_from_json: domain dimension mismatch");
    for (int i = 0; i < p.dim; ++i) {
      p.domain.lo(i) = lo[static_cast<std::size_t>(i)];
      p.domain.hi(i) = hi[static_cast<std::size_t>(i)];
    }
  }
  if (j.contains("fd_step")) p.fd_step = j["fd_step"].get<double>();
  p.validate();
  return p;
}

}  // namespace torsionlab
