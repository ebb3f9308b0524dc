#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acute/mesh_io.hpp"

namespace acute::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kBadInput = 2, kStalled = 3 };

inline const std::vector<std::string> kTargets{"600cell", "x543",      "face-template", "W",          "Wstar",
                                               "Y",       "Ystar",     "cube-acute",    "octa-acute", "ref-t0",
                                               "ref-t1",  "icosa-cones", "dodeca-cones"};

inline const std::vector<std::string> kChecks{"acute", "rich", "flag", "no-square", "geometric", "ds"};

struct GenerateOptions {
  double scale_min = 1.0;  ///< Step-1 scale search, used by x543 and face-template
  double scale_max = 3.0;
};

/// Throws std::invalid_argument for an unknown target.
MeshDocument generate(const std::string& target, const GenerateOptions& opts = {});

/// Checks each target is expected to pass.
std::vector<std::string> advertised_checks(const std::string& target);

struct VerifyOptions {
  std::vector<std::string> checks;
  double margin_deg = kDefaultFloatMarginDeg;  ///< float mode only
  AngleMode mode = AngleMode::Auto;
  bool per_tetrahedron = false;  ///< include every dihedral in the acute report
};

/// Report keyed by check name; each entry has "pass" and check-specific data.
/// Throws MeshIoError(MissingEmbedding) for geometric checks on bare complexes.
nlohmann::json verify(const MeshDocument& doc, const VerifyOptions& opts);

nlohmann::json stats(const MeshDocument& doc);

/// Entry point of the command line tool; never throws.
int run(int argc, const char* const* argv);

}  // namespace acute::cli
