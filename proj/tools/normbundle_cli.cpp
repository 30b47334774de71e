// Command line front end.
//
//   normbundle type       --degree D (--center LIST | --curve LIST) [--json]
//   normbundle phi        --degree D (--center LIST | --curve LIST) [--json]
//   normbundle verify     --degree D (--center LIST | --curve LIST)
//                         [--kmax K] [--json]
//   normbundle enumerate  --degree D --s S [--jobs N] [--out FILE]
//   normbundle achievable --degree D --s S --type LIST [--json]
//
// Exit codes: 0 success, 1 candidate type not achievable, 2 invalid input,
// 3 formula/oracle mismatch in verify.  All output is integer-only and
// byte-stable across runs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "envelope.hpp"
#include "json.hpp"
#include "normbundle/normbundle.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what,
                                bool allow_repeats) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string token =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? text.size() + 1 : comma + 1;
    if (token.empty()) {
      throw std::invalid_argument(std::string(what) + " list has an empty entry");
    }
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse '" + token + "' in " + what + " list");
    }
    if (used != token.size()) {
      throw std::invalid_argument("cannot parse '" + token + "' in " + what + " list");
    }
    out.push_back(value);
  }
  if (!allow_repeats) {
    std::vector<int> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      throw std::invalid_argument(std::string(what) + " list repeats exponent " +
                                  std::to_string(*dup));
    }
  }
  return out;
}

int jobs_from_env() {
  const char* env = std::getenv("NORMBUNDLE_JOBS");
  if (env == nullptr) return 1;
  try {
    const int n = std::stoi(env);
    return n >= 1 ? n : 1;
  } catch (const std::exception&) {
    return 1;
  }
}

struct SpaceArgs {
  int degree = 0;
  std::string center;
  std::string curve;

  normbundle::ValidatedSpace build() const {
    std::vector<int> list;
    normbundle::MonomialSpace space;
    if (!center.empty()) {
      space = normbundle::from_center(degree, parse_int_list(center, "center", false));
    } else {
      space = normbundle::from_curve(degree, parse_int_list(curve, "curve", false));
    }
    return normbundle::validate(space);
  }
};

void add_space_options(CLI::App* cmd, SpaceArgs& args) {
  cmd->add_option("--degree", args.degree, "degree d of the curve")->required();
  auto* center = cmd->add_option("--center", args.center,
                                 "comma-separated exponents spanning the center");
  auto* curve = cmd->add_option("--curve", args.curve,
                                "comma-separated exponents of the parametrization");
  center->excludes(curve);
  curve->excludes(center);
}

void require_one_of_center_curve(const SpaceArgs& args) {
  if (args.center.empty() && args.curve.empty()) {
    throw std::invalid_argument("need --center or --curve");
  }
}

int cmd_type(const SpaceArgs& args, bool json) {
  const normbundle::ValidatedSpace space = args.build();
  nbcli::OutputEnvelope env = nbcli::build_envelope(space);
  if (json) {
    std::cout << nbcli::to_json(env).dump() << "\n";
  } else {
    std::cout << nbcli::render_text(env, space.exponents());
  }
  return 0;
}

int cmd_phi(const SpaceArgs& args, bool json) {
  const normbundle::ValidatedSpace space = args.build();
  if (json) {
    std::cout << nbcli::to_json(nbcli::build_envelope(space)).dump() << "\n";
    return 0;
  }
  const normbundle::PhiTable table =
      normbundle::phi_table(normbundle::summarize(space));
  std::cout << "  k  phi  d2phi\n";
  for (int k = 0; k <= table.kmax(); ++k) {
    std::printf("%3d  %3d  %5d\n", k, table.at(k), table.second_difference(k));
  }
  return 0;
}

int cmd_verify(const SpaceArgs& args, std::optional<int> kmax, bool json) {
  const normbundle::ValidatedSpace space = args.build();
  const normbundle::CurveSummary summary = normbundle::summarize(space);
  const normbundle::PhiTable fast = normbundle::phi_table(summary);

  // Oracle side, optionally depth-bounded: with --kmax only phi(k), k <= kmax
  // is recomputed and compared.
  normbundle::PhiTable slow;
  bool truncated = false;
  if (kmax.has_value()) {
    const int bound = std::max(1, *kmax);
    truncated = bound < fast.kmax();
    slow.values.push_back(space.degree() + space.e());
    slow.values.push_back(2 * space.dim());
    for (int k = 2; k <= bound; ++k) {
      slow.values.push_back(normbundle::phi_oracle(space, k));
    }
  } else {
    slow = normbundle::phi_table_oracle(space);
  }

  bool verified = true;
  const int compare_up_to =
      truncated ? slow.kmax() : std::max(fast.kmax(), slow.kmax());
  for (int k = 0; k <= compare_up_to; ++k) {
    if (fast.at(k) != slow.at(k)) verified = false;
  }

  nbcli::OutputEnvelope env = nbcli::build_envelope(space);
  if (!truncated && verified) {
    // phi tables pin the type, but compare the splitting routes end to end.
    verified = normbundle::splitting_type(summary) ==
               normbundle::splitting_from_phi(slow, space.s());
  }
  env.verified = verified;

  if (json) {
    std::cout << nbcli::to_json(env).dump() << "\n";
  } else {
    std::cout << nbcli::render_text(env, space.exponents());
    if (!verified) {
      std::cout << "phi mismatch (k: formula vs oracle):\n";
      for (int k = 0; k <= compare_up_to; ++k) {
        std::printf("%3d  %3d  %3d%s\n", k, fast.at(k), slow.at(k),
                    fast.at(k) == slow.at(k) ? "" : "  <--");
      }
    } else if (truncated) {
      std::cout << "checked phi up to k = " << slow.kmax() << " only\n";
    }
  }
  return verified ? 0 : 3;
}

int cmd_enumerate(int degree, int s, int jobs, const std::string& out_path) {
  const normbundle::EnumerationReport report =
      normbundle::enumerate_centers(degree, s, jobs);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::invalid_argument("cannot open " + out_path + " for writing");
    out = &file;
  }
  for (const auto& [type, entry] : report.histogram) {
    nlohmann::json row;
    row["c"] = type.c;
    row["count"] = entry.count;
    row["witness"] = entry.witness;
    *out << row.dump() << "\n";
  }
  std::cerr << "d=" << report.d << " s=" << report.s << ": "
            << report.total_spaces << " centers, " << report.histogram.size()
            << " splitting types\n";
  return 0;
}

int cmd_achievable(int degree, int s, const std::string& type_list, bool json) {
  const normbundle::SplittingType candidate(
      parse_int_list(type_list, "type", true));
  const normbundle::Achievability result =
      normbundle::achievable(degree, s, candidate);
  if (json) {
    nlohmann::json out;
    out["achievable"] = result.achievable;
    if (result.achievable) out["witness"] = result.witness;
    std::cout << out.dump() << "\n";
  } else {
    if (result.achievable) {
      std::cout << "achievable: yes\nwitness: " << nbcli::join(result.witness, ",")
                << "\n";
    } else {
      std::cout << "achievable: no\n";
    }
  }
  return result.achievable ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"splitting type of the normal bundle of a rational monomial curve"};
  app.require_subcommand(1);

  SpaceArgs type_args, phi_args, verify_args;
  bool type_json = false, phi_json = false, verify_json = false;
  std::optional<int> verify_kmax;

  CLI::App* type_cmd = app.add_subcommand("type", "splitting type of one curve");
  add_space_options(type_cmd, type_args);
  type_cmd->add_flag("--json", type_json, "emit the JSON envelope");

  CLI::App* phi_cmd = app.add_subcommand("phi", "twist-count table of one curve");
  add_space_options(phi_cmd, phi_args);
  phi_cmd->add_flag("--json", phi_json, "emit the JSON envelope");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "cross-check the closed form against the exact linear algebra");
  add_space_options(verify_cmd, verify_args);
  int kmax_value = -1;
  CLI::Option* kmax_opt =
      verify_cmd->add_option("--kmax", kmax_value, "bound the oracle depth");
  verify_cmd->add_flag("--json", verify_json, "emit the JSON envelope");

  int enum_degree = 0, enum_s = 0, enum_jobs = jobs_from_env();
  std::string enum_out;
  CLI::App* enum_cmd =
      app.add_subcommand("enumerate", "all splitting types for fixed (d, s)");
  enum_cmd->add_option("--degree", enum_degree, "degree d")->required();
  enum_cmd->add_option("--s", enum_s, "ambient dimension s")->required();
  enum_cmd->add_option("--jobs", enum_jobs, "worker threads");
  enum_cmd->add_option("--out", enum_out, "write JSONL here instead of stdout");

  int ach_degree = 0, ach_s = 0;
  std::string ach_type;
  bool ach_json = false;
  CLI::App* ach_cmd =
      app.add_subcommand("achievable", "is this splitting type realized?");
  ach_cmd->add_option("--degree", ach_degree, "degree d")->required();
  ach_cmd->add_option("--s", ach_s, "ambient dimension s")->required();
  ach_cmd->add_option("--type", ach_type, "candidate type, comma-separated")
      ->required();
  ach_cmd->add_flag("--json", ach_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (type_cmd->parsed()) {
      require_one_of_center_curve(type_args);
      return cmd_type(type_args, type_json);
    }
    if (phi_cmd->parsed()) {
      require_one_of_center_curve(phi_args);
      return cmd_phi(phi_args, phi_json);
    }
    if (verify_cmd->parsed()) {
      require_one_of_center_curve(verify_args);
      if (kmax_opt->count() > 0) verify_kmax = kmax_value;
      return cmd_verify(verify_args, verify_kmax, verify_json);
    }
    if (enum_cmd->parsed()) {
      return cmd_enumerate(enum_degree, enum_s, enum_jobs, enum_out);
    }
    if (ach_cmd->parsed()) {
      return cmd_achievable(ach_degree, ach_s, ach_type, ach_json);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return 2;
}
