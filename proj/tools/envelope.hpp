#pragma once

// Output envelope of the CLI: one fixed shape for every subcommand, so the
// JSON schema stays stable and the text rendering reports the same numbers.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "normbundle/normbundle.hpp"

namespace nbcli {

inline constexpr const char* kSchemaVersion = "1";

struct OutputEnvelope {
  int degree = 0;
  int dim_center = 0;
  int e = 0;
  int s = 0;
  std::vector<normbundle::Component> components;
  std::vector<int> phi;
  std::vector<int> c;
  std::optional<bool> verified;
};

inline OutputEnvelope build_envelope(const normbundle::ValidatedSpace& space) {
  const normbundle::CurveSummary summary = normbundle::summarize(space);
  OutputEnvelope env;
  env.degree = summary.d;
  env.dim_center = space.dim();
  env.e = summary.e;
  env.s = summary.s;
  env.components = summary.components;
  env.phi = normbundle::phi_table(summary).values;
  env.c = normbundle::splitting_type(summary).c;
  return env;
}

inline nlohmann::json to_json(const OutputEnvelope& env) {
  nlohmann::json out;
  out["schema_version"] = kSchemaVersion;
  out["degree"] = env.degree;
  out["dim_center"] = env.dim_center;
  out["e"] = env.e;
  out["s"] = env.s;
  out["components"] = nlohmann::json::array();
  for (const normbundle::Component& comp : env.components) {
    nlohmann::json jc;
    jc["blocks"] = nlohmann::json::array();
    for (const normbundle::Block& blk : comp.blocks) {
      jc["blocks"].push_back({blk.alpha, blk.beta});
    }
    jc["b"] = comp.b_values();
    jc["lambda"] = comp.lambda;
    jc["partition"] = comp.partition;
    out["components"].push_back(jc);
  }
  out["phi"] = env.phi;
  out["c"] = env.c;
  if (env.verified.has_value()) out["verified"] = *env.verified;
  return out;
}

inline std::string join(const std::vector<int>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

inline std::string render_text(const OutputEnvelope& env,
                               const std::vector<int>& center) {
  std::ostringstream out;
  out << "degree:     " << env.degree << "\n";
  out << "center:     " << join(center, ",") << "\n";
  out << "dim center: " << env.dim_center << "  (e = " << env.e << ")\n";
  out << "s:          " << env.s << "\n";
  out << "components:\n";
  for (const normbundle::Component& comp : env.components) {
    out << "  blocks";
    for (const normbundle::Block& blk : comp.blocks) {
      out << " [" << blk.alpha << "," << blk.beta << "]";
    }
    out << "  b (" << join(comp.b_values(), ",") << ")";
    out << "  lambda " << comp.lambda;
    out << "  partition (" << join(comp.partition, ",") << ")\n";
  }
  out << "phi:        " << join(env.phi, " ") << "\n";
  out << "splitting:  (" << join(env.c, ",") << ")\n";
  if (env.verified.has_value()) {
    out << "verified:   " << (*env.verified ? "yes" : "NO") << "\n";
  }
  return out.str();
}

}  // namespace nbcli
