#include "cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "bimehler/hermite.hpp"
#include "bimehler/mehler.hpp"
#include "bimehler/profiles.hpp"
#include "cli/json_io.hpp"

namespace bimehler::cli {

namespace {

constexpr const char* kDash = "\xE2\x80\x94";  // em dash

std::string join(const std::vector<int>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(labels[i]);
  }
  return out;
}

std::string describe(const Component& c) {
  const std::string weight = to_string(component_weight(c));
  switch (c.tag) {
    case CaseTag::kI:
      return "Case I (man " + std::to_string(c.men.front()) + "), weight " + weight;
    case CaseTag::kIa:
      return "Case Ia (woman " + std::to_string(c.women.front()) + "), weight " + weight;
    default:
      return "Case " + std::string(to_string(c.tag)) + ", k=" + std::to_string(c.k) +
             ", weight " + weight + " (men " + join(c.men) + "; women " + join(c.women) + ")";
  }
}

int report_decomposition(const Profile& p, const OutputConfig& config, std::ostream& out,
                         std::ostream& err) {
  std::vector<Component> components;
  WeightPoly weight;
  try {
    components = decompose(p);
    weight = profile_weight(p);
  } catch (const InvalidProfileError& e) {
    err << "invalid profile: " << e.what() << "\n";
    return kExitInvalidProfile;
  }
  WeightPoly product(1);
  for (const Component& c : components) product *= component_weight(c);
  const bool consistent = product == weight;

  if (config.format == OutputFormat::kJson) {
    nlohmann::json listed = nlohmann::json::array();
    for (const Component& c : components) listed.push_back(component_to_json(c));
    out << nlohmann::json{{"profile", profile_to_json(p)},
                          {"components", listed},
                          {"profile_weight", to_string(weight)},
                          {"product_weight", to_string(product)},
                          {"consistent", consistent}}
               .dump(2)
        << "\n";
  } else {
    for (const Component& c : components) out << describe(c) << "\n";
    out << "product of component weights " << product << (consistent ? " = " : " != ")
        << "profile weight " << weight << "\n";
  }
  return consistent ? kExitOk : kExitFailed;
}

void add_format_option(CLI::App* app, std::string& format) {
  app->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_str("text");
}

}  // namespace

int cmd_hermite(unsigned m, unsigned n, const OutputConfig& config, std::ostream& out) {
  const WeightPoly h = hermite_poly(m, n);
  if (config.format == OutputFormat::kJson) {
    out << nlohmann::json{{"m", m}, {"n", n}, {"poly", to_string(h)}}.dump() << "\n";
  } else {
    out << h << "\n";
  }
  return kExitOk;
}

int cmd_enumerate(unsigned m, unsigned n, bool full, const OutputConfig& config,
                  std::ostream& out, std::ostream& err) {
  WeightPoly enumerated;
  try {
    enumerated = full ? enumerate_full(m, n, config.limit.value_or(kDefaultFullLimit))
                      : enumerate_marital(m, n, config.limit.value_or(kDefaultMaritalLimit));
  } catch (const LimitExceededError& e) {
    err << "error: " << e.what() << " (raise it with --limit)\n";
    return kExitLimit;
  }
  const WeightPoly formula = full ? hermite_pair_poly(m, n) : hermite_poly(m, n);
  const bool agrees = enumerated == formula;

  if (config.format == OutputFormat::kJson) {
    out << nlohmann::json{{"m", m},
                          {"n", n},
                          {"full", full},
                          {"enumerated", to_string(enumerated)},
                          {"formula", to_string(formula)},
                          {"agrees", agrees}}
               .dump()
        << "\n";
  } else if (agrees) {
    out << enumerated << " " << kDash << " AGREES\n";
  } else {
    out << enumerated << " " << kDash << " DISAGREES with formula " << formula << "\n";
  }
  return agrees ? kExitOk : kExitFailed;
}

int cmd_verify(unsigned max_m, unsigned max_n, const OutputConfig& config,
               std::ostream& out) {
  const VerifyReport report = verify(max_m, max_n);
  if (config.format == OutputFormat::kJson) {
    out << report_to_json(report).dump(2) << "\n";
  } else if (report.passed()) {
    out << "PASS (" << report.cell_count() << " cells, 3 forms)\n";
  } else {
    out << "FAIL (" << report.mismatches.size() << " mismatches over "
        << report.cell_count() << " cells, 3 forms)\n";
    for (const Mismatch& mm : report.mismatches) {
      out << "  (" << mm.m << "," << mm.n << ") " << mm.forms << ": expected "
          << mm.expected << ", got " << mm.actual << "\n";
    }
  }
  return report.passed() ? kExitOk : kExitFailed;
}

int cmd_decompose(const std::string& profile_json, const OutputConfig& config,
                  std::ostream& out, std::ostream& err) {
  Profile p;
  try {
    p = parse_profile(profile_json);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return report_decomposition(p, config, out, err);
}

int cmd_decompose_random(unsigned m, unsigned n, const OutputConfig& config,
                         std::ostream& out, std::ostream& err) {
  if (!config.seed) {
    err << "error: --random requires --seed\n";
    return kExitUsage;
  }
  Profile p;
  try {
    p = random_profile(m, n, *config.seed);
  } catch (const LimitExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kExitLimit;
  }
  if (config.format == OutputFormat::kText) {
    out << "profile " << profile_to_json(p).dump() << "\n";
  }
  return report_decomposition(p, config, out, err);
}

int cmd_case_series(const std::string& tag, unsigned max_m, unsigned max_n,
                    const OutputConfig& config, std::ostream& out, std::ostream& err) {
  CaseTag parsed;
  try {
    parsed = parse_case_tag(tag);
  } catch (const UnknownCaseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const BiSeries f = case_series(parsed, max_m, max_n);
  if (config.format == OutputFormat::kJson) {
    nlohmann::json j = series_to_json(f);
    j["case"] = tag;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (unsigned m = 0; m <= max_m; ++m) {
    for (unsigned n = 0; n <= max_n; ++n) {
      if (!f.coeff(m, n).is_zero()) out << "(" << m << "," << n << "): " << f.coeff(m, n) << "\n";
    }
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Two-sex exponential generating functions and the straight Mehler formula",
               "bimehler"};
  app.require_subcommand(1);

  OutputConfig config;
  std::string format = "text";
  unsigned m = 0;
  unsigned n = 0;
  unsigned max_m = 4;
  unsigned max_n = 4;
  bool full = false;
  bool random = false;
  std::string file;
  std::string tag;
  std::uint64_t seed = 0;
  unsigned limit = 0;

  auto* hermite = app.add_subcommand("hermite", "Print the straight Hermite polynomial H_{m,n}(x)");
  hermite->add_option("m", m, "Number of men")->required();
  hermite->add_option("n", n, "Number of women")->required();
  add_format_option(hermite, format);

  auto* enumerate = app.add_subcommand(
      "enumerate", "Brute-force the weight enumerator and compare it with the formula");
  enumerate->add_option("m", m, "Number of men")->required();
  enumerate->add_option("n", n, "Number of women")->required();
  enumerate->add_flag("--full", full, "Enumerate marriages and affairs together");
  auto* limit_opt = enumerate->add_option("--limit", limit, "Largest m and n to enumerate");
  add_format_option(enumerate, format);

  auto* verify_cmd = app.add_subcommand(
      "verify", "Check the three Mehler series forms agree coefficient by coefficient");
  verify_cmd->add_option("--max-m", max_m, "Truncation bound in t (men)")->required();
  verify_cmd->add_option("--max-n", max_n, "Truncation bound in s (women)")->required();
  add_format_option(verify_cmd, format);

  auto* decompose_cmd = app.add_subcommand(
      "decompose", "Split a profile (JSON from --file or stdin) into connected components");
  decompose_cmd->add_option("--file", file, "Profile JSON file (default: stdin)");
  auto* random_flag = decompose_cmd->add_flag(
      "--random", random, "Use a random profile on --max-m men and --max-n women");
  auto* seed_opt = decompose_cmd->add_option("--seed", seed, "Seed for --random");
  auto* dm_opt = decompose_cmd->add_option("--max-m", max_m, "Men in the random profile");
  auto* dn_opt = decompose_cmd->add_option("--max-n", max_n, "Women in the random profile");
  dm_opt->needs(random_flag);
  dn_opt->needs(random_flag);
  seed_opt->needs(random_flag);
  random_flag->excludes("--file");
  add_format_option(decompose_cmd, format);

  auto* case_cmd = app.add_subcommand(
      "case-series", "Print the labelled coefficients of one component case's BiEGF");
  case_cmd->add_option("tag", tag, "One of I, Ia, II, IIa, III, IIIa, IV")->required();
  case_cmd->add_option("--max-m", max_m, "Truncation bound in t (men)");
  case_cmd->add_option("--max-n", max_n, "Truncation bound in s (women)");
  add_format_option(case_cmd, format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const std::string help = app.get_subcommands().empty()
                                 ? app.help()
                                 : app.get_subcommands().front()->help();
    err << "error: " << e.what() << "\n" << help;
    return kExitUsage;
  }

  config.format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;
  if (*limit_opt) config.limit = limit;
  if (*seed_opt) config.seed = seed;

  if (*hermite) return cmd_hermite(m, n, config, out);
  if (*enumerate) return cmd_enumerate(m, n, full, config, out, err);
  if (*verify_cmd) return cmd_verify(max_m, max_n, config, out);
  if (*case_cmd) return cmd_case_series(tag, max_m, max_n, config, out, err);

  if (random) {
    if (!*dm_opt || !*dn_opt) {
      err << "error: --random requires --max-m and --max-n\n";
      return kExitUsage;
    }
    return cmd_decompose_random(max_m, max_n, config, out, err);
  }
  std::string text;
  if (file.empty()) {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream stream(file);
    if (!stream) {
      err << "error: cannot open " << file << "\n";
      return kExitUsage;
    }
    text.assign(std::istreambuf_iterator<char>(stream), std::istreambuf_iterator<char>());
  }
  return cmd_decompose(text, config, out, err);
}

}  // namespace bimehler::cli
