#include "strata/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "strata/error.hpp"
#include "strata/homology.hpp"
#include "strata/surface.hpp"
#include "strata/torus.hpp"
#include "strata/twist_orbit.hpp"

namespace strata::cli {

namespace {

using ojson = nlohmann::ordered_json;

double tolerance_from_env() {
  const char* raw = std::getenv(kToleranceEnv);
  if (raw == nullptr || *raw == '\0') return kGeomTolerance;
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(raw).size() || !(value > 0)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(kToleranceEnv) + " must be a positive decimal, got '" + raw + "'");
  }
  return value;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, what + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

std::complex<double> parse_complex(const std::string& text, const std::string& what) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    std::size_t u1 = 0, u2 = 0;
    const std::string re = text.substr(0, comma), im = text.substr(comma + 1);
    const double a = std::stod(re, &u1), b = std::stod(im, &u2);
    if (u1 != re.size() || u2 != im.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidArgument, what + " must be 're,im', got '" + text + "'");
  }
}

ojson json_complex(std::complex<double> z) { return ojson::array({z.real(), z.imag()}); }

ojson count_json(const ComponentCount& c) {
  ojson count;
  switch (c.kind) {
    case CountKind::kExactly: count["exactly"] = c.n; break;
    case CountKind::kAtLeast: count["at_least"] = c.n; break;
    case CountKind::kUnknown: count["unknown"] = true; break;
  }
  ojson out;
  out["count"] = count;
  out["theorem"] = c.theorem;
  return out;
}

ojson error_json(std::string_view code, const std::string& message, ojson context) {
  ojson e;
  e["code"] = code;
  e["message"] = message;
  e["context"] = std::move(context);
  return e;
}

// Error that carries a JSON context object for the error document.
struct ContextError {
  Error error;
  ojson context;
};

struct Options {
  std::string surface;
  std::string cycle;
  bool basis = false;
  std::string out;
  int genus = 0;
  std::string seed;
  std::string orders;
  std::string space;
  std::string tau;
  std::string shift = "none";
  std::string torus_cycle;
  std::string offset;
  int samples = torus::kDefaultSamples;
  std::string foliation_path;
  int grid = 32;
  std::string report;
};

ojson cmd_validate(const Options& o, double tol) {
  const HalfTranslationSurface s = load_surface(o.surface);
  const auto violations = validate(s, tol);
  if (!violations.empty()) {
    ojson list = ojson::array();
    for (const auto& v : violations) {
      list.push_back({{"kind", to_string(v.kind)}, {"message", v.message}});
    }
    throw ContextError{Error(ErrorCode::kInvalidSurface,
                             "surface violates " + std::to_string(violations.size()) +
                                 " invariant(s)"),
                       {{"command", "validate"}, {"violations", list}}};
  }
  ojson out;
  out["valid"] = true;
  out["violations"] = ojson::array();
  return out;
}

ojson cmd_stratum(const Options& o, double tol) {
  const HalfTranslationSurface s = load_surface(o.surface);
  require_valid(s, tol);
  const Stratum st = stratum(s, tol);
  ojson out;
  out["genus"] = st.genus;
  out["orders"] = st.orders;
  out["stratum"] = to_string(st);
  out["translation"] = is_translation(s);
  if (is_translation(s)) out["abelian_orders"] = abelian_stratum(s, tol).orders;
  out["vertex_cycles"] = ojson::array();
  for (const VertexCycle& v : vertex_cycles(s, tol)) {
    ojson corners = ojson::array();
    for (Corner c : v.corners) corners.push_back({c.polygon, c.vertex});
    out["vertex_cycles"].push_back(
        {{"corners", corners}, {"angle_over_pi", v.angle_multiple}, {"order", v.quadratic_order()}});
  }
  return out;
}

ojson cmd_ga(const Options& o, double tol) {
  const HalfTranslationSurface s = load_surface(o.surface);
  require_valid(s, tol);
  ojson out;
  if (!o.cycle.empty()) {
    const Cycle c(s, parse_int_list(o.cycle, "--cycle"));
    out["cycle"] = c.pairings();
    out["ga"] = ga(s, c);
    out["well_defined_on_homology"] = all_orders_even(s, tol);
    return out;
  }
  const SymplecticBasis b = symplectic_basis(s, tol);
  out["genus"] = b.genus();
  out["is_square"] = is_square(s, tol);
  out["alpha"] = ojson::array();
  out["beta"] = ojson::array();
  for (const Cycle& c : b.alpha) out["alpha"].push_back(c.pairings());
  for (const Cycle& c : b.beta) out["beta"].push_back(c.pairings());
  out["parity"] = parity_vector(s, b, tol).to_string();
  return out;
}

ojson cmd_double_cover(const Options& o, double tol) {
  const HalfTranslationSurface s = load_surface(o.surface);
  require_valid(s, tol);
  const DoubleCover d = double_cover(s);
  ojson out = to_json(d);
  out["cover_vertex_orders"] = vertex_orders(d.cover, tol);
  if (d.connected) out["cover_genus"] = genus(d.cover, tol);
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw Error(ErrorCode::kIo, "cannot write '" + o.out + "'");
    f << to_json(d).dump(2) << "\n";
  }
  return out;
}

ojson cmd_orbit(const Options& o) {
  const ParityVector seed = ParityVector::parse(o.seed);
  if (seed.genus() != o.genus) {
    throw Error(ErrorCode::kLengthMismatch,
                "seed has " + std::to_string(seed.size()) + " digits but genus " +
                    std::to_string(o.genus) + " needs " + std::to_string(2 * o.genus));
  }
  const auto gens = paper_generators(o.genus);
  const auto vectors = orbit(seed, gens);
  ojson out;
  out["genus"] = o.genus;
  out["seed"] = seed.to_string();
  out["generators"] = ojson::array();
  for (const auto& g : gens) out["generators"].push_back(g.cls().to_string());
  out["orbit_size"] = vectors.size();
  out["vectors"] = ojson::array();
  for (const auto& v : vectors) out["vectors"].push_back(v.to_string());
  return out;
}

ojson cmd_components(const Options& o) {
  const std::vector<int> orders = parse_int_list(o.orders, "--orders");
  const ComponentCount c = o.space == "teich" ? q_components_over_teich(o.genus, orders)
                                              : qd_components(o.genus, orders);
  return count_json(c);
}

ojson cmd_torus(const Options& o, double tol) {
  const torus::Tau tau(parse_complex(o.tau, "--tau"));
  static const std::map<std::string, torus::HalfPeriod> kShifts = {
      {"none", torus::HalfPeriod::kNone},
      {"h1", torus::HalfPeriod::kH1},
      {"h2", torus::HalfPeriod::kH2},
      {"h3", torus::HalfPeriod::kH3}};
  const torus::TorusDifferential d{tau, kShifts.at(o.shift)};
  ojson out;
  if (!o.foliation_path.empty()) {
    std::ofstream f(o.foliation_path);
    if (!f) throw Error(ErrorCode::kIo, "cannot write '" + o.foliation_path + "'");
    f.precision(17);
    f << "x,y,angle\n";
    const auto samples = torus::foliation(d, o.grid, tol);
    for (const auto& p : samples) f << p.x << "," << p.y << "," << p.angle << "\n";
    out["foliation_samples"] = samples.size();
  }
  if (o.torus_cycle.empty()) return out;

  torus::TorusCycle c{o.torus_cycle == "alpha" ? torus::CycleKind::kAlpha
                                              : torus::CycleKind::kBeta,
                      {}};
  if (!o.offset.empty()) c.offset = parse_complex(o.offset, "--offset");
  const torus::WindingResult w = torus::winding_ga(d, c, o.samples, tol);
  const torus::HalfPeriodValues e = torus::halfperiod_values(tau, tol);
  out["ga"] = w.ga;
  out["winding"] = w.winding;
  ojson residuals;
  residuals["winding"] = w.winding_residual;
  residuals["halfperiod_sum"] = std::abs(e.e1 + e.e2 + e.e3);
  residuals["clearance"] = w.clearance;
  residuals["tolerance"] = tol;
  out["residuals"] = residuals;
  out["offset"] = json_complex(w.offset);
  return out;
}

}  // namespace

ojson report_json(const Report& r) {
  ojson doc;
  doc["tool"] = "strata_lab";
  doc["version"] = kVersion;
  doc["command"] = r.command;
  doc["args"] = r.args;
  doc["tolerances"] = {{"geometry", r.geom_tolerance}, {"torus", r.torus_tolerance}};
  doc["output"] = r.output;
  return doc;
}

void emit_report(const Report& r, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIo, "cannot write report '" + path + "'");
  f << report_json(r).dump(2) << "\n";
  if (!f) throw Error(ErrorCode::kIo, "failed writing report '" + path + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Half-translation surface toolkit", "strata_lab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;
  app.add_option("--report", o.report, "Write a reproducibility report to this file");

  auto* validate_cmd = app.add_subcommand("validate", "Check surface invariants");
  validate_cmd->add_option("--surface", o.surface, "Surface JSON file")->required();

  auto* stratum_cmd = app.add_subcommand("stratum", "Genus, zero orders and vertex cycles");
  stratum_cmd->add_option("--surface", o.surface, "Surface JSON file")->required();

  auto* ga_cmd = app.add_subcommand("ga", "Monodromy of a cycle or parity vector of a basis");
  ga_cmd->add_option("--surface", o.surface, "Surface JSON file")->required();
  auto* cycle_opt = ga_cmd->add_option("--cycle", o.cycle, "Pairing indices, comma separated");
  auto* basis_opt = ga_cmd->add_flag("--basis", o.basis, "Symplectic basis and parity vector");
  cycle_opt->excludes(basis_opt);

  auto* cover_cmd = app.add_subcommand("double-cover", "Canonical double cover");
  cover_cmd->add_option("--surface", o.surface, "Surface JSON file")->required();
  cover_cmd->add_option("--out", o.out, "Also write the cover document to this file");

  auto* orbit_cmd = app.add_subcommand("orbit", "Dehn-twist orbit of a parity vector");
  orbit_cmd->add_option("--genus", o.genus, "Genus")->required()->check(CLI::Range(1, kMaxOrbitGenus));
  orbit_cmd->add_option("--seed", o.seed, "Seed bitstring a1..ag b1..bg")->required();

  auto* comp_cmd = app.add_subcommand("components", "Connected components of a stratum");
  comp_cmd->add_option("--genus", o.genus, "Genus")->required()->check(CLI::NonNegativeNumber);
  comp_cmd->add_option("--orders", o.orders, "Zero orders, comma separated")->required();
  comp_cmd->add_option("--space", o.space, "teich or moduli")
      ->required()
      ->check(CLI::IsMember({"teich", "moduli"}));

  auto* torus_cmd = app.add_subcommand("torus", "Weierstrass p differentials on C / <1, tau>");
  torus_cmd->add_option("--tau", o.tau, "Modulus as re,im")->required();
  torus_cmd->add_option("--shift", o.shift, "none, h1, h2 or h3")
      ->check(CLI::IsMember({"none", "h1", "h2", "h3"}));
  auto* tcycle = torus_cmd->add_option("--cycle", o.torus_cycle, "alpha or beta")
                     ->check(CLI::IsMember({"alpha", "beta"}));
  torus_cmd->add_option("--offset", o.offset, "Loop basepoint as re,im")->needs(tcycle);
  torus_cmd->add_option("--samples", o.samples, "Initial loop samples")->check(CLI::Range(4, 1 << 20));
  auto* fol = torus_cmd->add_option("--emit-foliation", o.foliation_path,
                                    "Write horizontal directions as CSV");
  torus_cmd->add_option("--grid", o.grid, "Foliation grid size")->check(CLI::Range(1, 4096))->needs(fol);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::string command;
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << error_json("usage", e.what(), ojson::object()).dump(2) << "\n";
    return kInputError;
  }
  command = app.get_subcommands().front()->get_name();

  try {
    if (command == "torus" && o.torus_cycle.empty() && o.foliation_path.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "torus needs --cycle or --emit-foliation");
    }
    const double tol = tolerance_from_env();
    ojson result;
    if (command == "validate") result = cmd_validate(o, tol);
    else if (command == "stratum") result = cmd_stratum(o, tol);
    else if (command == "ga") result = cmd_ga(o, tol);
    else if (command == "double-cover") result = cmd_double_cover(o, tol);
    else if (command == "orbit") result = cmd_orbit(o);
    else if (command == "components") result = cmd_components(o);
    else result = cmd_torus(o, tol);

    if (!o.report.empty()) emit_report({command, args, tol, tol, result}, o.report);
    out << result.dump(2) << "\n";
    return kOk;
  } catch (const ContextError& e) {
    out << error_json(to_string(e.error.code()), e.error.what(), e.context).dump(2) << "\n";
    return kInputError;
  } catch (const Error& e) {
    out << error_json(to_string(e.code()), e.what(), {{"command", command}}).dump(2) << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    out << error_json("internal", e.what(), {{"command", command}}).dump(2) << "\n";
    return kInternal;
  }
}

}  // namespace strata::cli
