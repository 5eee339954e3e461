// hypack: densities of congruent hyperball packings in hyperbolic 4-space
// attached to regular truncated simplices.
//
// Exit codes: 0 success, 1 failed check, 2 usage or domain error, 3 I/O error.

#include "hypack/density.hpp"
#include "hypack/errors.hpp"
#include "hypack/io.hpp"
#include "hypack/simplex_model.hpp"
#include "hypack/truncation.hpp"
#include "hypack/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace hypack;

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

double resolve_p(const std::optional<double>& p, const std::optional<double>& s) {
  if (p) return *p;
  if (s) return s_to_p(*s);
  throw std::invalid_argument("one of --p or --s is required");
}

// Writes to `path`, or standard output for "-".
template <class F>
void emit(const std::string& path, F&& body) {
  if (path == "-") {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  body(out);
  out.flush();
  if (!out) throw IoError("write to " + path + " failed");
}

void print_csv_rows(std::ostream& os, const char* kind, const std::vector<Coords>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << kind << ',' << i;
    for (double x : rows[i]) os << ',' << format_real(x);
    os << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperball packing densities for regular truncated 4-simplices"};
  app.require_subcommand(1);

  std::optional<double> p_opt, s_opt;
  double tol = 1e-10;
  double from = 0.0, to = 10.0;
  int steps = 1000;
  std::string out = "-";
  std::string format = "json";
  std::string fixture;
  std::string policy = "clearance";
  double mc_samples = 1e7;
  std::uint64_t seed = 42;
  int tamper = 0;

  auto add_point = [&](CLI::App* sub) {
    auto* po = sub->add_option("--p", p_opt, "Coxeter parameter p in (5.1043, 6)");
    auto* so = sub->add_option("--s", s_opt, "vertex parameter s in (1, 1.633)");
    po->excludes(so);
    so->excludes(po);
  };

  auto* eval = app.add_subcommand("eval", "density report at one parameter value");
  add_point(eval);

  auto* optimize = app.add_subcommand("optimize", "maximize the density over p");
  optimize->add_option("--tol", tol, "bracket width")->check(CLI::Range(1e-14, 1e-3));

  auto* sweep_cmd = app.add_subcommand("sweep", "density on an even grid of p, clipped to the domain");
  sweep_cmd->add_option("--from", from, "first p (clipped)");
  sweep_cmd->add_option("--to", to, "last p (clipped)");
  sweep_cmd->add_option("--steps", steps, "grid points")->check(CLI::Range(2, 10'000'000));
  sweep_cmd->add_option("--out", out, "output file, - for standard output");
  sweep_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* geometry = app.add_subcommand("geometry", "coordinates, forms and Gram matrices of the simplex");
  add_point(geometry);
  geometry->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  geometry->add_option("--out", out, "output file, - for standard output");

  auto* decompose_cmd = app.add_subcommand("decompose", "cut a fixture cell into truncated simplices");
  decompose_cmd->add_option("fixture", fixture, "fixture JSON file")->required();
  decompose_cmd->add_option("--policy", policy, "cut order: clearance or lexicographic")
      ->check(CLI::IsMember({"clearance", "lexicographic"}));

  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
  verify_cmd->add_option("--mc_samples", mc_samples, "Monte Carlo samples per volume")->check(CLI::Range(1.0, 1e12));
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_option("--tamper", tamper)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if ((eval->parsed() || geometry->parsed()) && !p_opt && !s_opt) {
    std::cerr << "error: one of --p or --s is required\n";
    return kUsage;
  }

  try {
    if (eval->parsed()) {
      const double p = resolve_p(p_opt, s_opt);
      std::cout << json_text(to_json(density(p)), 2) << '\n';
      return kOk;
    }
    if (optimize->parsed()) {
      std::cout << json_text(to_json(maximize(tol)), 2) << '\n';
      return kOk;
    }
    if (sweep_cmd->parsed()) {
      const auto rows = sweep(from, to, steps);
      emit(out, [&](std::ostream& os) {
        if (format == "csv") {
          write_sweep_csv(os, rows);
        } else {
          nlohmann::json a = nlohmann::json::array();
          for (const auto& r : rows) a.push_back(to_json(r));
          os << json_text(a, 2) << '\n';
        }
      });
      return kOk;
    }
    if (geometry->parsed()) {
      const double s = s_opt ? *s_opt : p_to_s(*p_opt);
      const RegularSimplex4 g = build_simplex(s);
      emit(out, [&](std::ostream& os) {
        if (format == "json") {
          os << json_text(geometry_json(g), 2) << '\n';
          return;
        }
        os << "kind,index,c0,c1,c2,c3,c4\n";
        std::vector<Coords> rows;
        for (const auto& v : g.vertices) rows.push_back(v.coords());
        print_csv_rows(os, "vertex", rows);
        rows.clear();
        for (const auto& v : g.centers) rows.push_back(v.coords());
        print_csv_rows(os, "center", rows);
        rows.clear();
        for (const auto& u : g.face_forms) rows.push_back(u.coeffs());
        print_csv_rows(os, "face_form", rows);
        rows.clear();
        for (const auto& u : g.polar_forms) rows.push_back(u.coeffs());
        print_csv_rows(os, "polar_form", rows);
        rows.clear();
        const Eigen::MatrixXd go = gram_of_forms(g.face_forms).entries();
        for (Eigen::Index i = 0; i < go.rows(); ++i) rows.push_back(go.row(i).transpose());
        print_csv_rows(os, "gram_orthoscheme", rows);
        rows.clear();
        const Eigen::MatrixXd gs = gram_of_forms(g.facet_forms).entries();
        for (Eigen::Index i = 0; i < gs.rows(); ++i) rows.push_back(gs.row(i).transpose());
        print_csv_rows(os, "gram_simplex", rows);
      });
      return kOk;
    }
    if (decompose_cmd->parsed()) {
      const DecompositionFixture fx = load_fixture(fixture);
      const auto bases = fx.base_planes();
      ProjectivePolytope poly;
      try {
        poly = vertex_enumeration(fx.halfspaces, fx.dim);
      } catch (const GeometryError& e) {
        throw FixtureError(fixture + ": $.halfspaces: " + e.what());
      }
      const CutPolicy pol =
          policy == "clearance" ? CutPolicy::MostIncidentThenClearance : CutPolicy::MostIncidentThenLexicographic;
      const Decomposition d = decompose(poly, bases, fx.height, pol);
      for (const auto& e : d.events) std::cout << json_text(to_json(e)) << '\n';
      nlohmann::json summary;
      summary["event"] = "result";
      summary["cuts"] = d.events.size();
      summary["pieces"] = d.pieces.size();
      nlohmann::json pieces = nlohmann::json::array();
      for (const auto& piece : d.pieces) {
        nlohmann::json pj = to_json(piece);
        pj["truncated_simplex"] = is_truncated_simplex(piece, bases);
        pieces.push_back(pj);
      }
      summary["piece_details"] = pieces;
      std::cout << json_text(summary) << '\n';
      return kOk;
    }
    if (verify_cmd->parsed()) {
      VerifyOptions opt;
      opt.mc_samples = static_cast<std::uint64_t>(std::llround(mc_samples));
      opt.seed = seed;
      opt.tamper = tamper;
      bool all = true;
      run_checks(opt, [&](const CheckResult& r) {
        nlohmann::json j;
        j["id"] = r.id;
        j["name"] = r.name;
        j["passed"] = r.passed;
        j["detail"] = r.detail;
        j["seconds"] = r.seconds;
        std::cout << json_text(j) << std::endl;
        all = all && r.passed;
      });
      return all ? kOk : kCheckFailed;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const FixtureError& e) {
    std::cerr << "error: invalid fixture: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}
