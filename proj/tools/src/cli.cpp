#include "symwalk_cli/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unistd.h>

#include "symwalk/analysis.hpp"
#include "symwalk/characters.hpp"
#include "symwalk/io.hpp"
#include "symwalk/partitions.hpp"
#include "symwalk/walks.hpp"

namespace symwalk::cli {

namespace {

/// Raised when a computed result fails a self-check.
class InvariantViolation : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int n = 0;
  long t = 0;
  long t_max = 0;
  int i = 0;
  std::string walk = "transposition";
  std::string format = "json";
  std::string kind = "cl";
  std::string parity;
  std::string output;
  bool approx = false;
  bool stabilize = false;
};

bool csv(const Config& cfg) { return cfg.format == "csv"; }

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string quoted(const std::string& s) { return '"' + s + '"'; }

void check_mass(const ClassDistribution& d) {
  if (d.total_mass() != 1) {
    throw InvariantViolation("distribution mass is " + to_string(d.total_mass()) +
                             ", not 1");
  }
}

void cmd_chars(const Config& cfg, std::ostream& out) {
  if (cfg.n < 1 || cfg.n > kMaxTableDegree) {
    throw DomainError("chars: n must lie in [1, " + std::to_string(kMaxTableDegree) + "]");
  }
  auto table = build_table(cfg.n);
  if (csv(cfg)) {
    write_csv(out, table);
  } else {
    emit_json(out, to_json(table));
  }
}

void cmd_dist(const Config& cfg, std::ostream& out) {
  auto walk = parse_walk_descriptor(cfg.walk, cfg.n);
  if (cfg.t < 0) throw DomainError("dist: t must be nonnegative");
  auto d = distribution(walk, cfg.t);
  check_mass(d);
  if (csv(cfg)) {
    write_csv(out, d, cfg.approx);
  } else {
    emit_json(out, to_json(d, cfg.approx));
  }
}

TimeParity parse_time_parity(const std::string& text) {
  if (text == "any") return TimeParity::Any;
  if (text == "even") return TimeParity::Even;
  if (text == "odd") return TimeParity::Odd;
  throw DomainError("parity must be any, even or odd, not \"" + text + "\"");
}

void cmd_order_at(const Config& cfg, const WalkSpec& walk, OrderKind kind,
                  std::ostream& out) {
  if (cfg.t < 0) throw DomainError("order: t must be nonnegative");
  auto d = distribution(walk, cfg.t);
  check_mass(d);
  auto inversions = check_order(d, kind);
  if (csv(cfg)) {
    out << "alpha,beta,p_alpha_num,p_alpha_den,p_beta_num,p_beta_den\n";
    for (const auto& inv : inversions) {
      out << inv.alpha.to_string() << ',' << inv.beta.to_string() << ','
          << inv.p_alpha.get_num() << ',' << inv.p_alpha.get_den() << ','
          << inv.p_beta.get_num() << ',' << inv.p_beta.get_den() << '\n';
    }
    return;
  }
  Json rows = Json::array();
  for (const auto& inv : inversions) {
    rows.push_back(Json{{"alpha", inv.alpha.to_string()},
                        {"beta", inv.beta.to_string()},
                        {"p_alpha", rational_to_json(inv.p_alpha)},
                        {"p_beta", rational_to_json(inv.p_beta)}});
  }
  emit_json(out, Json{{"schema", kSchemaVersion},
                      {"walk", walk.name()},
                      {"n", walk.degree()},
                      {"t", cfg.t},
                      {"kind", to_string(kind)},
                      {"inversions", std::move(rows)}});
}

int cmd_order_stabilize(const Config& cfg, const WalkSpec& walk, OrderKind kind,
                        std::ostream& out, std::ostream& err) {
  TimeParity parity = TimeParity::Any;
  if (!cfg.parity.empty()) {
    parity = parse_time_parity(cfg.parity);
  } else if (walk.step_sign() == -1) {
    parity = TimeParity::Even;
  }
  auto report = stabilization_report(walk, parity);

  Json mismatches = Json::array();
  for (const auto& cert : report.certificates) {
    if (!cert.certified) continue;
    auto c = compare(kind, cert.alpha, cert.beta);
    int predicted = c == Comparison::Greater ? 1 : c == Comparison::Less ? -1 : 0;
    if (predicted != cert.eventual_sign) {
      mismatches.push_back(Json::array({cert.alpha.to_string(), cert.beta.to_string()}));
    }
  }
  if (!report.uncertified.empty()) {
    err << "warning: " << report.uncertified.size() << " pair(s) left uncertified\n";
  }

  if (csv(cfg)) {
    out << "alpha,beta,i,t_star,sign,certified\n";
    for (const auto& cert : report.certificates) {
      out << cert.alpha.to_string() << ',' << cert.beta.to_string() << ',' << cert.i
          << ',' << (cert.t_star ? std::to_string(*cert.t_star) : std::string()) << ','
          << cert.eventual_sign << ',' << (cert.certified ? 1 : 0) << '\n';
    }
  } else {
    Json j = to_json(report);
    j["walk"] = walk.name();
    j["n"] = walk.degree();
    j["kind"] = to_string(kind);
    j["mismatches"] = std::move(mismatches);
    j["warning"] = !report.uncertified.empty();
    emit_json(out, j);
  }
  if (!report.consistent) {
    throw InvariantViolation("certified pairwise signs do not form a total order");
  }
  return kExitOk;
}

int cmd_order(const Config& cfg, std::ostream& out, std::ostream& err) {
  auto walk = parse_walk_descriptor(cfg.walk, cfg.n);
  auto kind = parse_order_kind(cfg.kind);
  if (!is_total(kind)) throw UnsupportedError("order: kind must be a total order");
  if (cfg.stabilize) return cmd_order_stabilize(cfg, walk, kind, out, err);
  cmd_order_at(cfg, walk, kind, out);
  return kExitOk;
}

void cmd_tv(const Config& cfg, std::ostream& out) {
  auto walk = parse_walk_descriptor(cfg.walk, cfg.n);
  if (cfg.t_max < 0) throw DomainError("tv: tmax must be nonnegative");
  std::vector<DistanceRow> rows;
  for (long t = 0; t <= cfg.t_max; ++t) {
    auto d = distribution(walk, t);
    check_mass(d);
    rows.push_back({t, tv_distance(walk, d), separation(walk, d), linf(walk, d)});
  }
  if (csv(cfg)) {
    write_distance_header(out, cfg.approx);
    for (const auto& row : rows) write_csv(out, row, cfg.approx);
    return;
  }
  Json curve = Json::array();
  for (const auto& row : rows) {
    curve.push_back(Json{{"t", row.t},
                         {"tv", rational_to_json(row.tv)},
                         {"sep", rational_to_json(row.sep)},
                         {"linf", rational_to_json(row.linf)}});
  }
  emit_json(out, Json{{"schema", kSchemaVersion},
                      {"walk", walk.name()},
                      {"n", walk.degree()},
                      {"curve", std::move(curve)}});
}

void cmd_split(const Config& cfg, std::ostream& out) {
  auto walk = parse_walk_descriptor(cfg.walk, cfg.n);
  if (cfg.t < 0) throw DomainError("split: t must be nonnegative");
  auto split = stationary_split(walk, cfg.t);
  std::optional<PredictedSplit> predicted;
  if (walk.is_transposition_family()) predicted = predicted_split(walk);

  if (csv(cfg)) {
    out << "class,side" << (predicted ? ",predicted" : "") << '\n';
    auto rows = [&](const std::vector<CycleType>& classes, const char* side) {
      for (const auto& c : classes) {
        out << c.to_string() << ',' << side;
        if (predicted) out << ',' << (predicted->above(c) ? "above" : "below");
        out << '\n';
      }
    };
    rows(split.above, "above");
    rows(split.equal, "equal");
    rows(split.below, "below");
    return;
  }
  Json j = to_json(split);
  j["walk"] = walk.name();
  j["n"] = walk.degree();
  if (predicted) {
    Json disagreements = Json::array();
    for (const auto& c : split.above) {
      if (!predicted->above(c)) disagreements.push_back(c.to_string());
    }
    for (const auto* side : {&split.equal, &split.below}) {
      for (const auto& c : *side) {
        if (predicted->above(c)) disagreements.push_back(c.to_string());
      }
    }
    j["disagreements_with_rule"] = std::move(disagreements);
  }
  emit_json(out, j);
}

void cmd_detector(const Config& cfg, std::ostream& out) {
  std::vector<Partition> found;
  for (const auto& lambda : enumerate_partitions(cfg.n)) {
    if (is_i_cycle_detector(lambda, cfg.i)) found.push_back(lambda);
  }
  if (csv(cfg)) {
    out << "partition,h21,h12\n";
    for (const auto& p : found) {
      auto h = subhook_lengths(p);
      out << quoted(p.to_string()) << ',' << h.h21 << ',' << h.h12 << '\n';
    }
    return;
  }
  Json list = Json::array();
  for (const auto& p : found) list.push_back(p.to_string());
  emit_json(out, Json{{"schema", kSchemaVersion},
                      {"n", cfg.n},
                      {"i", cfg.i},
                      {"detectors", std::move(list)}});
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw DomainError("cannot open " + tmp.string() + " for writing");
    file << content;
    file.flush();
    if (!file) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw DomainError("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw DomainError("cannot move output into place at " + path);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact distributions and likelihood orders of class-function random "
               "walks on the symmetric group"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "symwalk 0.1.0");
  Config cfg;

  auto common = [&](CLI::App* sub, bool with_walk) {
    sub->add_option("--n", cfg.n, "Degree of the symmetric group")->required();
    if (with_walk) {
      sub->add_option("--walk", cfg.walk,
                      "transposition | lazy:<p> | three-cycle | n-cycle | custom:<path>");
    }
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output,-o", cfg.output, "Write to this file instead of stdout");
  };

  auto* chars = app.add_subcommand("chars", "Character table of S_n");
  common(chars, false);

  auto* dist = app.add_subcommand("dist", "Per-element distribution at time t");
  common(dist, true);
  dist->add_option("--t", cfg.t, "Number of steps")->required();
  dist->add_flag("--approx", cfg.approx, "Add a decimal column");

  auto* order = app.add_subcommand("order", "Inversions at t, or certified eventual order");
  common(order, true);
  auto* order_t = order->add_option("--t", cfg.t, "Number of steps");
  auto* stab = order->add_flag("--stabilize", cfg.stabilize, "Certify the eventual order");
  order_t->excludes(stab);
  order->add_option("--kind", cfg.kind, "cl | neg-cl | alt-cl | reverse-lex | lulov-lex");
  order->add_option("--parity", cfg.parity, "Time parity for --stabilize: any | even | odd")
      ->needs(stab);

  auto* tv = app.add_subcommand("tv", "Distance-to-stationarity curve for t = 0..tmax");
  common(tv, true);
  tv->add_option("--tmax", cfg.t_max, "Last time step")->required();
  tv->add_flag("--approx", cfg.approx, "Add decimal columns");

  auto* split = app.add_subcommand("split", "Classes above, at and below stationarity");
  common(split, true);
  split->add_option("--t", cfg.t, "Number of steps")->required();

  auto* detector = app.add_subcommand("detector", "i-cycle detectors of size n");
  common(detector, false);
  detector->add_option("--i", cfg.i, "Cycle length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    // --help and --version.
    std::ostringstream help;
    int code = app.exit(e, help, help);
    out << help.str();
    return code;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, msg, msg);
    err << msg.str();
    return kExitUsage;
  }

  std::ostringstream buffer;
  std::ostream& sink = cfg.output.empty() ? out : buffer;
  int code = kExitOk;
  try {
    if (order->parsed() && !cfg.stabilize && order_t->count() == 0) {
      throw DomainError("order: give --t or --stabilize");
    }
    // Command output is buffered so a failing run never leaves a partial file.
    std::ostringstream result;
    if (chars->parsed()) cmd_chars(cfg, result);
    if (dist->parsed()) cmd_dist(cfg, result);
    if (order->parsed()) code = cmd_order(cfg, result, err);
    if (tv->parsed()) cmd_tv(cfg, result);
    if (split->parsed()) cmd_split(cfg, result);
    if (detector->parsed()) cmd_detector(cfg, result);
    sink << result.str();
    if (!cfg.output.empty()) write_atomically(cfg.output, buffer.str());
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return code;
}

}  // namespace symwalk::cli
