#pragma once

// Serialization: JSON documents with every real printed at 17 significant
// digits, the sweep CSV table, and decomposition fixtures.

#include "hypack/density.hpp"
#include "hypack/simplex_model.hpp"
#include "hypack/truncation.hpp"

#include <json.hpp>

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>

namespace hypack {

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid fixture content; the message names the offending location.
class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_real(double x);

/// Compact (indent < 0) or indented JSON text; reals use format_real.
std::string json_text(const nlohmann::json& j, int indent = -1);

nlohmann::json to_json(const DensityReport& r);
nlohmann::json to_json(const OptimumResult& r);
nlohmann::json to_json(const CutEvent& e);
nlohmann::json to_json(const ProjectivePolytope& poly);
nlohmann::json to_json(const DecompositionFixture& fx);

/// s, p, vertices, centers, face_forms, polar_forms, gram_orthoscheme,
/// gram_simplex.
nlohmann::json geometry_json(const RegularSimplex4& g);

inline constexpr const char* kSweepHeader = "p,s,h,theta,vol3_base,vol4_orthoscheme,vol4_hyperball,delta";

void write_sweep_csv(std::ostream& out, std::span<const DensityReport> rows);

/// source is used as a prefix in error messages.
DecompositionFixture parse_fixture(const std::string& text, const std::string& source = "<fixture>");
DecompositionFixture load_fixture(const std::string& path);

}  // namespace hypack
