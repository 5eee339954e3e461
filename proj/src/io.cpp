#include "hypack/io.hpp"

#include "hypack/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace hypack {
namespace {

using nlohmann::json;

json coords_json(const Coords& c) {
  json a = json::array();
  for (double x : c) a.push_back(x);
  return a;
}

json matrix_json(const Eigen::MatrixXd& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(coords_json(m.row(i).transpose()));
  return a;
}

template <class T, class F>
json list_json(const std::vector<T>& items, F&& f) {
  json a = json::array();
  for (const auto& it : items) a.push_back(f(it));
  return a;
}

void write(std::ostringstream& os, const json& j, int indent, int level) {
  const auto newline = [&](int lvl) {
    if (indent >= 0) os << '\n' << std::string(static_cast<std::size_t>(indent * lvl), ' ');
  };
  switch (j.type()) {
    case json::value_t::number_float: os << format_real(j.get<double>()); break;
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        break;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); });
      os << '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) os << (flat && indent >= 0 ? ", " : ",");
        if (!flat) newline(level + 1);
        write(os, e, indent, level + 1);
        first = false;
      }
      if (!flat) newline(level);
      os << ']';
      break;
    }
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        break;
      }
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',';
        newline(level + 1);
        os << json(it.key()).dump() << (indent >= 0 ? ": " : ":");
        write(os, it.value(), indent, level + 1);
        first = false;
      }
      newline(level);
      os << '}';
      break;
    }
    default: os << j.dump(); break;
  }
}

[[noreturn]] void bad(const std::string& source, const std::string& where, const std::string& what) {
  throw FixtureError(source + ": " + where + ": " + what);
}

}  // namespace

std::string format_real(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_text(const json& j, int indent) {
  std::ostringstream os;
  write(os, j, indent, 0);
  return os.str();
}

json to_json(const DensityReport& r) {
  json j;
  j["p"] = r.p;
  j["s"] = r.s;
  j["h"] = r.h;
  j["theta"] = r.theta;
  j["vol3_base"] = r.vol3_base;
  j["vol4_orthoscheme"] = r.vol4_orthoscheme;
  j["vol4_hyperball"] = r.vol4_hyperball_piece;
  j["delta"] = r.delta;
  return j;
}

json to_json(const OptimumResult& r) {
  json j;
  j["p_opt"] = r.p_opt;
  j["delta_opt"] = r.delta_opt;
  j["iterations"] = r.iterations;
  j["bracket_width"] = r.bracket_width;
  return j;
}

json to_json(const CutEvent& e) {
  json j;
  j["event"] = "cut";
  j["cut_vertex"] = coords_json(e.cut_vertex.coords());
  j["incident_base_planes"] = e.incident_base_planes;
  j["n_before"] = e.n_before;
  j["n_after"] = std::max(e.n_after_first, e.n_after_second);
  j["n_after_pieces"] = {e.n_after_first, e.n_after_second};
  j["clearance"] = e.clearance;
  j["lemma31_checked"] = e.lemma31_checked;
  return j;
}

json to_json(const ProjectivePolytope& poly) {
  json j;
  j["dim"] = poly.dim;
  j["halfspaces"] = list_json(poly.halfspaces, [](const Halfspace& h) {
    return json::array({coords_json(h.form.coeffs()), h.side});
  });
  j["vertices"] = list_json(poly.vertices, [](const LorentzVector& v) { return coords_json(v.coords()); });
  j["outer_vertices"] = outer_vertex_count(poly);
  return j;
}

json to_json(const DecompositionFixture& fx) {
  json j;
  j["dim"] = fx.dim;
  j["halfspaces"] = list_json(fx.halfspaces, [](const Halfspace& h) {
    return json::array({coords_json(h.form.coeffs()), h.side});
  });
  j["base_plane_indices"] = fx.base_plane_indices;
  j["height"] = fx.height;
  return j;
}

json geometry_json(const RegularSimplex4& g) {
  auto point = [](const LorentzVector& v) { return coords_json(v.coords()); };
  auto form = [](const HyperplaneForm& u) { return coords_json(u.coeffs()); };
  json j;
  j["s"] = g.s;
  j["p"] = g.p;
  j["vertices"] = list_json(g.vertices, point);
  j["centers"] = list_json(g.centers, point);
  j["face_forms"] = list_json(g.face_forms, form);
  j["polar_forms"] = list_json(g.polar_forms, form);
  j["gram_orthoscheme"] = matrix_json(gram_of_forms(g.face_forms).entries());
  j["gram_simplex"] = matrix_json(gram_of_forms(g.facet_forms).entries());
  return j;
}

void write_sweep_csv(std::ostream& out, std::span<const DensityReport> rows) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows) {
    out << format_real(r.p) << ',' << format_real(r.s) << ',' << format_real(r.h) << ',' << format_real(r.theta)
        << ',' << format_real(r.vol3_base) << ',' << format_real(r.vol4_orthoscheme) << ','
        << format_real(r.vol4_hyperball_piece) << ',' << format_real(r.delta) << '\n';
  }
}

DecompositionFixture parse_fixture(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(source, "byte " + std::to_string(e.byte), "malformed JSON");
  }
  if (!j.is_object()) bad(source, "$", "expected an object");
  for (const char* key : {"dim", "halfspaces", "base_plane_indices", "height"}) {
    if (!j.contains(key)) bad(source, "$", std::string("missing key \"") + key + "\"");
  }

  DecompositionFixture fx;
  if (!j["dim"].is_number_integer()) bad(source, "$.dim", "expected an integer");
  fx.dim = j["dim"].get<int>();
  if (fx.dim != 3 && fx.dim != 4) bad(source, "$.dim", "must be 3 or 4");

  const json& hs = j["halfspaces"];
  if (!hs.is_array()) bad(source, "$.halfspaces", "expected an array");
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::string at = "$.halfspaces[" + std::to_string(i) + "]";
    const json& h = hs[i];
    if (!h.is_array() || h.size() != 2) bad(source, at, "expected [coefficients, side]");
    if (!h[0].is_array() || h[0].size() != static_cast<std::size_t>(fx.dim + 1)) {
      bad(source, at + "[0]", "expected " + std::to_string(fx.dim + 1) + " coefficients");
    }
    Coords c(fx.dim + 1);
    for (int k = 0; k <= fx.dim; ++k) {
      if (!h[0][k].is_number()) bad(source, at + "[0][" + std::to_string(k) + "]", "expected a number");
      c[k] = h[0][k].get<double>();
    }
    if (!h[1].is_number_integer() || (h[1].get<int>() != 1 && h[1].get<int>() != -1)) {
      bad(source, at + "[1]", "side must be 1 or -1");
    }
    try {
      fx.halfspaces.push_back({HyperplaneForm::normalized(c), h[1].get<int>()});
    } catch (const GeometryError& e) {
      bad(source, at + "[0]", e.what());
    }
  }

  const json& bi = j["base_plane_indices"];
  if (!bi.is_array()) bad(source, "$.base_plane_indices", "expected an array");
  for (std::size_t i = 0; i < bi.size(); ++i) {
    const std::string at = "$.base_plane_indices[" + std::to_string(i) + "]";
    if (!bi[i].is_number_integer()) bad(source, at, "expected an integer");
    const int k = bi[i].get<int>();
    if (k < 0 || k >= static_cast<int>(fx.halfspaces.size())) bad(source, at, "index out of range");
    fx.base_plane_indices.push_back(k);
  }

  if (!j["height"].is_number() || !(j["height"].get<double>() >= 0.0)) {
    bad(source, "$.height", "expected a nonnegative number");
  }
  fx.height = j["height"].get<double>();
  return fx;
}

DecompositionFixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str(), path);
}

}  // namespace hypack
