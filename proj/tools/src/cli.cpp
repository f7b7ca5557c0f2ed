#include "macic/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "macic/detmodel.hpp"
#include "macic/dmeval.hpp"
#include "macic/fme.hpp"
#include "macic/gaussian.hpp"
#include "macic/gdof.hpp"
#include "macic/io.hpp"
#include "macic/random.hpp"
#include "macic/region.hpp"

namespace macic::cli {
namespace {

using io::json;

// Thrown for parameter values that parse but describe no valid run.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed or schema-violating input files.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Sink {
  std::ostream& out;
  std::string dir;

  void emit(const std::string& file, const std::string& text) const {
    if (dir.empty()) {
      out << text;
      return;
    }
    std::filesystem::create_directories(dir);
    const auto path = std::filesystem::path(dir) / file;
    std::ofstream f(path);
    if (!f) throw ConfigError("cannot write " + path.string());
    f << text;
    out << path.string() << "\n";
  }
  void emit(const std::string& file, const json& j) const { emit(file, j.dump(2) + "\n"); }
};

json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Schema failures surface from io as SchemaError or from nlohmann as type/out_of_range errors.
template <class F>
auto parse_input(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const io::SchemaError& e) {
    throw InputError(what + ": " + e.what());
  } catch (const json::exception& e) {
    throw InputError(what + ": " + e.what());
  }
}

Rational flag_rational(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(flag + ": " + e.what());
  }
}

std::string decimal(const Rational& x) {
  std::ostringstream s;
  s.precision(12);
  s << to_double(x);
  return s.str();
}

std::string csv_pair(const Rational& x) { return decimal(x) + "," + to_fraction_string(x); }

json region_json(const SetFunctionTable& t, bool vertices) {
  const Polytope p = build_generic_region(t);
  json j;
  j["polytope"] = io::polytope_to_json(p);
  j["symmetric_max"] = io::rational_json(symmetric_max(t));
  if (vertices) {
    if (p.dim > kMaxVertexDim) throw ConfigError("vertex enumeration needs at most 6 users in total");
    json v = json::array();
    for (const auto& x : enumerate_vertices(p)) {
      json pt = json::array();
      for (const auto& c : x) pt.push_back(io::rational_json(c));
      v.push_back(pt);
    }
    j["vertices"] = v;
  }
  return j;
}

int cmd_region(const Sink& sink, const std::string& input, bool vertices) {
  const json doc = read_json(input);
  const auto ch = parse_input(input, [&] { return io::channel_from_json(doc); });
  json j;
  j["channel"] = io::channel_to_json(ch);
  j["inner"] = region_json(rationalize(gaussian::inner_table(ch)), vertices);
  j["outer"] = region_json(rationalize(gaussian::outer_table(ch)), vertices);
  sink.emit("region.json", j);
  return kOk;
}

int cmd_gap(const Sink& sink, const std::string& input, int random, std::uint64_t seed, int max_k, bool no_clamp) {
  std::vector<gaussian::Channel> channels;
  if (!input.empty()) {
    const json doc = read_json(input);
    parse_input(input, [&] {
      const json& list = doc.is_object() && doc.contains("instances") ? doc.at("instances") : doc;
      if (list.is_array()) {
        for (const auto& c : list) channels.push_back(io::channel_from_json(c));
      } else {
        channels.push_back(io::channel_from_json(list));
      }
      return 0;
    });
  } else {
    if (random < 1) throw ConfigError("--random must be positive when no --input is given");
    if (max_k < 1 || max_k > 4) throw ConfigError("--max-K must be in [1, 4]");
    rnd::Rng rng(seed);
    for (int i = 0; i < random; ++i) channels.push_back(rnd::random_gaussian_channel(rng, max_k));
  }

  gaussian::GapOptions opt;
  opt.clamp = !no_clamp;
  json reports = json::array();
  std::size_t failed = 0;
  double max_gap = 0;
  for (std::size_t i = 0; i < channels.size(); ++i) {
    const auto r = gaussian::gap_report(channels[i], opt);
    for (const auto& f : r.functions) max_gap = std::max(max_gap, f.max_gap);
    if (!r.ok()) ++failed;
    json e = io::gap_report_to_json(r);
    e["index"] = i;
    e["channel"] = io::channel_to_json(channels[i]);
    reports.push_back(e);
  }
  json j;
  j["instances"] = channels.size();
  j["failed"] = failed;
  j["max_function_gap"] = max_gap;
  j["clamp"] = opt.clamp;
  j["reports"] = reports;
  sink.emit("gap.json", j);
  return failed == 0 ? kOk : kPropertyViolation;
}

std::vector<Rational> grid(const std::string& max_text, const std::string& step_text) {
  const Rational max = flag_rational("--alpha-max", max_text);
  const Rational step = flag_rational("--step", step_text);
  if (step <= 0) throw ConfigError("--step must be positive");
  if (max < 0) throw ConfigError("--alpha-max must be nonnegative");
  if (Rational(max / step) > 100000) throw ConfigError("alpha grid has more than 100000 points");
  return gdof::alpha_grid(max, step);
}

int cmd_gdof_curve(const Sink& sink, const std::vector<int>& ks, const std::string& max, const std::string& step) {
  if (ks.empty()) throw ConfigError("--K needs at least one value");
  for (int k : ks) {
    if (k < 1 || k > 4) throw ConfigError("--K values must be in [1, 4]");
  }
  const auto rows = gdof::dsym_curve(ks, grid(max, step));
  std::ostringstream csv;
  csv << "K,alpha,alpha_fraction,dsym,dsym_fraction,K_dsym,K_dsym_fraction\n";
  int status = kOk;
  for (const auto& r : rows) {
    csv << r.users_per_cell << "," << csv_pair(r.alpha) << "," << csv_pair(r.dsym) << "," << csv_pair(r.sum)
        << "\n";
    if (r.users_per_cell >= 2 && r.dsym != gdof::dsym_closed_form(r.users_per_cell, r.alpha)) {
      status = kPropertyViolation;
    }
  }
  sink.emit("gdof_curve.csv", csv.str());
  return status;
}

int cmd_timeshare_curve(const Sink& sink, const std::string& max, const std::string& step) {
  const auto rows = gdof::timeshare_curve(grid(max, step));
  std::ostringstream csv;
  csv << "alpha,alpha_fraction,d1,d1_fraction,timeshare,timeshare_fraction,superposition,superposition_fraction\n";
  int status = kOk;
  for (const auto& r : rows) {
    csv << csv_pair(r.alpha) << "," << csv_pair(r.d1) << "," << csv_pair(r.timeshare) << ","
        << csv_pair(r.superposition) << "\n";
    if (r.timeshare > r.superposition) status = kPropertyViolation;
  }
  sink.emit("timeshare_curve.csv", csv.str());
  return status;
}

const char* status_name(fme::VerifyStatus s) {
  switch (s) {
    case fme::VerifyStatus::equal:
      return "equal";
    case fme::VerifyStatus::mismatch:
      return "mismatch";
    case fme::VerifyStatus::precondition_failed:
      return "precondition_failed";
  }
  return "?";
}

int cmd_fme_verify(const Sink& sink, const std::string& input, int trials, int ka, int kb, std::uint64_t seed,
                   const std::string& tables) {
  std::vector<SetFunctionTable> list;
  if (!input.empty()) {
    const json doc = read_json(input);
    list.push_back(parse_input(input, [&] { return io::table_from_json(doc); }));
  } else {
    if (trials < 1) throw ConfigError("--trials must be positive");
    if (ka < 1 || kb < 1 || ka > 2 || kb > 2) throw ConfigError("--Ka and --Kb must be in [1, 2]");
    if (tables != "entropic" && tables != "box") throw ConfigError("--tables must be entropic or box");
    rnd::Rng rng(seed);
    for (int i = 0; i < trials; ++i) {
      list.push_back(tables == "entropic" ? rnd::random_entropic_table(rng, ka, kb)
                                          : rnd::random_box_table(rng, ka, kb));
    }
  }
  json results = json::array();
  std::size_t mismatched = 0, precondition = 0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto r = fme::verify_projection(list[i]);
    if (r.status == fme::VerifyStatus::mismatch) ++mismatched;
    if (r.status == fme::VerifyStatus::precondition_failed) ++precondition;
    results.push_back({{"index", i},
                       {"status", status_name(r.status)},
                       {"projected_rows", r.projected_rows},
                       {"detail", r.detail}});
  }
  json j;
  j["trials"] = list.size();
  j["equal"] = list.size() - mismatched - precondition;
  j["mismatch"] = mismatched;
  j["precondition_failed"] = precondition;
  j["results"] = results;
  sink.emit("fme_verify.json", j);
  // A supplied table that breaks the preconditions is not a valid instance.
  if (!input.empty() && precondition > 0) return kInfeasibleConfig;
  return mismatched + precondition == 0 ? kOk : kPropertyViolation;
}

int cmd_dm_verify(const Sink& sink, const std::string& input, int trials, std::uint64_t seed, int max_k,
                  const std::vector<int>& alphabets, bool no_clamp) {
  std::vector<std::pair<dm::Distribution, dm::SdChannel>> list;
  if (!input.empty()) {
    const json doc = read_json(input);
    list.push_back(parse_input(input, [&] {
      return std::make_pair(io::distribution_from_json(doc.at("distribution")),
                            io::sd_channel_from_json(doc.at("channel")));
    }));
  } else {
    if (trials < 1) throw ConfigError("--trials must be positive");
    if (max_k < 1 || max_k > 2) throw ConfigError("--max-K must be in [1, 2]");
    if (alphabets.empty()) throw ConfigError("--alphabet needs at least one value");
    for (int a : alphabets) {
      if (a < 2 || a > 3) throw ConfigError("--alphabet values must be 2 or 3");
    }
    rnd::Rng rng(seed);
    for (int i = 0; i < trials; ++i) {
      const int ka = 1 + i % max_k;
      const int kb = 1 + (i / max_k) % max_k;
      const int q = alphabets[static_cast<std::size_t>(i / (max_k * max_k)) % alphabets.size()];
      list.push_back(rnd::random_sd_instance(rng, ka, kb, q));
    }
  }
  json results = json::array();
  std::size_t failed = 0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& [d, ch] = list[i];
    try {
      d.validate();
      ch.validate(d.users[0], d.users[1]);
    } catch (const std::invalid_argument& e) {
      if (!input.empty()) throw ConfigError(e.what());
      throw;
    }
    const auto r = dm::verify_containment(d, ch, 1e-6, !no_clamp);
    if (!r.ok()) ++failed;
    json tv = json::array();
    for (const auto& v : r.table_violations) tv.push_back({{"what", v.what}, {"amount", v.amount}});
    results.push_back({{"index", i},
                       {"users", {d.users[0], d.users[1]}},
                       {"x_size", d.x_size[0]},
                       {"shift", {{"a", r.shift.on_rates_a}, {"b", r.shift.on_rates_b}}},
                       {"outer_vertices", r.outer_vertices},
                       {"contained", r.contained},
                       {"table_violations", tv},
                       {"failures", r.failures}});
  }
  json j;
  j["trials"] = list.size();
  j["failed"] = failed;
  j["clamp"] = !no_clamp;
  j["results"] = results;
  sink.emit("dm_verify.json", j);
  return failed == 0 ? kOk : kPropertyViolation;
}

int cmd_det_sim(const Sink& sink, int k, const std::string& alpha_text, int q, std::size_t uses,
                std::uint64_t seed) {
  const Rational alpha = flag_rational("--alpha", alpha_text);
  if (k < 1 || k > 8) throw ConfigError("--K must be in [1, 8]");
  if (q < 1 || q > 64) throw ConfigError("--q must be in [1, 64]");
  det::Allocation alloc;
  try {
    alloc = det::build_allocation(k, alpha, q);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  json j;
  j["alpha"] = io::rational_json(alpha);
  j["allocation"] = io::allocation_to_json(alloc);
  int status = kOk;
  try {
    rnd::Rng rng(seed);
    const auto r = det::simulate(alloc, uses, rng);
    j["simulation"] = {{"uses", r.uses}, {"bits", r.bits}, {"bit_errors", r.bit_errors}, {"ok", r.ok()}};
    if (!r.ok()) status = kPropertyViolation;
  } catch (const det::DecodingFailure& e) {
    j["simulation"] = {{"ok", false}, {"collision_levels", e.collision().levels}, {"detail", e.what()}};
    status = kPropertyViolation;
  }
  const Rational cell_a = alloc.cell_sum(Cell::a);
  j["cell_sum"] = io::rational_json(cell_a);
  if (k >= 2) {
    const Rational target = Rational(k) * gdof::dsym_closed_form(k, alpha);
    j["cell_sum_target"] = io::rational_json(target);
    if (cell_a != target || alloc.cell_sum(Cell::b) != target) status = kPropertyViolation;
  }
  j["timeshare_cell_sum"] = io::rational_json(det::timeshare_cell_sum(gdof::dsym_region(1, alpha)));
  j["ok"] = status == kOk;
  sink.emit("det_sim.json", j);
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"MAC-IC-MAC capacity region toolkit"};
  app.require_subcommand(1);
  std::string out_dir;
  app.add_option("--out", out_dir, "Write artifacts into this directory instead of stdout");

  std::string input;
  bool vertices = false, no_clamp = false;
  int random = 0, max_k = 3, dm_max_k = 2, trials = 50, ka = 2, kb = 2, k = 2, q = 2;
  std::uint64_t seed = 1;
  std::size_t uses = 10000;
  std::vector<int> ks{1, 2, 3, 4}, alphabets{2, 3};
  std::string alpha_max = "3", step = "1/100", alpha = "1/2", tables = "entropic";

  auto* region = app.add_subcommand("region", "Inner and outer regions of a Gaussian instance");
  region->add_option("--input", input, "Channel JSON file")->required();
  region->add_flag("--vertices", vertices, "Also enumerate vertices");

  auto* gap = app.add_subcommand("gap", "Gap reports for an instance file or a random sweep");
  gap->add_option("--input", input, "Channel JSON file (object, array, or {\"instances\": [...]})");
  gap->add_option("--random", random, "Number of random channels");
  gap->add_option("--seed", seed, "RNG seed");
  gap->add_option("--max-K", max_k, "Largest users per cell in the random sweep");
  gap->add_flag("--no-clamp", no_clamp, "Do not clamp shifted vertices at zero");

  auto* curve = app.add_subcommand("gdof-curve", "Symmetric GDoF CSV over a K list and alpha grid");
  curve->add_option("--K", ks, "Users per cell")->delimiter(',');
  curve->add_option("--alpha-max", alpha_max, "Largest alpha (fraction or decimal)");
  curve->add_option("--step", step, "Alpha step (fraction or decimal)");

  auto* ts = app.add_subcommand("timeshare-curve", "Time-sharing versus superposition CSV");
  ts->add_option("--alpha-max", alpha_max, "Largest alpha");
  ts->add_option("--step", step, "Alpha step");

  auto* fmev = app.add_subcommand("fme-verify", "Projection versus closed form on random tables");
  fmev->add_option("--input", input, "Set-function table JSON file");
  fmev->add_option("--trials", trials, "Number of random tables");
  fmev->add_option("--Ka", ka, "Users in cell a");
  fmev->add_option("--Kb", kb, "Users in cell b");
  fmev->add_option("--seed", seed, "RNG seed");
  fmev->add_option("--tables", tables, "Random table family: entropic or box");

  auto* dmv = app.add_subcommand("dm-verify", "Shifted outer-bound containment on random SD instances");
  dmv->add_option("--input", input, "JSON file with \"distribution\" and \"channel\"");
  dmv->add_option("--trials", trials, "Number of random instances");
  dmv->add_option("--seed", seed, "RNG seed");
  dmv->add_option("--max-K", dm_max_k, "Largest users per cell");
  dmv->add_option("--alphabet", alphabets, "Alphabet sizes to cycle through")->delimiter(',');
  dmv->add_flag("--no-clamp", no_clamp, "Do not clamp shifted vertices at zero");

  auto* det = app.add_subcommand("det-sim", "Deterministic-model allocation and round-trip simulation");
  det->add_option("--K", k, "Users per cell");
  det->add_option("--alpha", alpha, "Interference exponent");
  det->add_option("--q", q, "Direct-link levels");
  det->add_option("--uses", uses, "Channel uses");
  det->add_option("--seed", seed, "RNG seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInfeasibleConfig;
  }
  // The timeshare comparison lives on [0, 2] by default.
  if (ts->parsed() && ts->count("--alpha-max") == 0) alpha_max = "2";

  const Sink sink{out, out_dir};
  try {
    if (region->parsed()) return cmd_region(sink, input, vertices);
    if (gap->parsed()) return cmd_gap(sink, input, random, seed, max_k, no_clamp);
    if (curve->parsed()) return cmd_gdof_curve(sink, ks, alpha_max, step);
    if (ts->parsed()) return cmd_timeshare_curve(sink, alpha_max, step);
    if (fmev->parsed()) return cmd_fme_verify(sink, input, trials, ka, kb, seed, tables);
    if (dmv->parsed()) return cmd_dm_verify(sink, input, trials, seed, dm_max_k, alphabets, no_clamp);
    if (det->parsed()) return cmd_det_sim(sink, k, alpha, q, uses, seed);
  } catch (const InputError& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const ConfigError& e) {
    err << "infeasible config: " << e.what() << "\n";
    return kInfeasibleConfig;
  } catch (const std::invalid_argument& e) {
    err << "infeasible config: " << e.what() << "\n";
    return kInfeasibleConfig;
  } catch (const std::length_error& e) {
    err << "infeasible config: " << e.what() << "\n";
    return kInfeasibleConfig;
  }
  return kInfeasibleConfig;
}

}  // namespace macic::cli
