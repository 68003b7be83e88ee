#pragma once

// Command-line front end for topoidx.
//
//   topoidx <command> [flags]
//
// Commands: generate, distances, hosoya, wiener, verify, fit.
// Exit codes: 0 success, 1 usage error, 2 computation error,
// 3 verification failure.

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "topo/closed_forms.hpp"
#include "topo/distances.hpp"
#include "topo/edge_list.hpp"
#include "topo/error.hpp"
#include "topo/family_fit.hpp"
#include "topo/generators.hpp"
#include "topo/hosoya.hpp"

namespace topo::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kComputation = 2, kVerification = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { generate, distances, hosoya, wiener, verify, fit };
enum class Format { text, json };

struct FamilySpec {
  std::string name = "jahangir";
  std::optional<int> n;
  std::optional<long long> m;
  Probability p{1, 2};
  std::uint64_t seed = 0;
};

struct RunConfig {
  Command command = Command::hosoya;
  Format format = Format::text;
  std::optional<std::string> input;  // "-" reads stdin
  std::optional<FamilySpec> family;
  j5::MRange m_range{3, 3};
  std::vector<long long> samples;
  std::vector<long long> holdout;
  std::size_t degree = 0;
  unsigned threads = 1;
};

inline constexpr std::string_view kUsageText =
    "usage: topoidx <command> [flags]\n"
    "\n"
    "commands:\n"
    "  generate   write a graph in edge-list format\n"
    "  distances  distance distribution d(G,k)\n"
    "  hosoya     Hosoya polynomial\n"
    "  wiener     Wiener index\n"
    "  verify     check the J(5,m) closed forms against BFS  (--m-range a..b)\n"
    "  fit        interpolate per-distance counts in m       (--samples, --degree, --holdout)\n"
    "\n"
    "graph source (generate/distances/hosoya/wiener):\n"
    "  --input FILE | -                          edge-list file or stdin\n"
    "  --family jahangir --n N --m M\n"
    "  --family cycle|path|star|complete|wheel --m K\n"
    "  --family random --m K [--p NUM/DEN] [--seed S]\n"
    "\n"
    "common:\n"
    "  --format text|json   (default text)\n"
    "  --threads T          BFS worker threads, 0 = all cores (default 1)\n";

namespace detail {

template <class Int>
Int parse_int(std::string_view flag, std::string_view s) {
  Int value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw UsageError("invalid integer for " + std::string(flag) + ": '" + std::string(s) + "'");
  return value;
}

inline std::vector<long long> parse_list(std::string_view flag, std::string_view s) {
  std::vector<long long> out;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    out.push_back(parse_int<long long>(flag, s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline j5::MRange parse_range(std::string_view flag, std::string_view s) {
  auto dots = s.find("..");
  if (dots == std::string_view::npos)
    throw UsageError("expected a..b for " + std::string(flag) + ", got '" + std::string(s) + "'");
  j5::MRange r{parse_int<long long>(flag, s.substr(0, dots)),
               parse_int<long long>(flag, s.substr(dots + 2))};
  if (r.last < r.first) throw UsageError("empty range for " + std::string(flag) + ": '" + std::string(s) + "'");
  return r;
}

inline Probability parse_probability(std::string_view s) {
  Probability p{1, 1};
  auto slash = s.find('/');
  p.num = parse_int<std::uint64_t>("--p", s.substr(0, slash));
  if (slash != std::string_view::npos) p.den = parse_int<std::uint64_t>("--p", s.substr(slash + 1));
  if (p.den == 0 || p.num == 0 || p.num > p.den)
    throw UsageError("--p must be a fraction in (0, 1], got '" + std::string(s) + "'");
  return p;
}

inline long long min_parameter(const std::string& family) {
  if (family == "jahangir" || family == "cycle" || family == "wheel") return 3;
  return 1;
}

}  // namespace detail

/// Parses argv (without the program name). Unknown commands, unknown flags,
/// flags that do not apply to the command and out-of-range values all raise
/// UsageError naming the offending token.
inline RunConfig parse_args(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("missing command");
  static const std::map<std::string, Command> commands{
      {"generate", Command::generate}, {"distances", Command::distances},
      {"hosoya", Command::hosoya},     {"wiener", Command::wiener},
      {"verify", Command::verify},     {"fit", Command::fit}};
  auto cmd = commands.find(args[0]);
  if (cmd == commands.end()) throw UsageError("unknown command '" + args[0] + "'");

  RunConfig cfg;
  cfg.command = cmd->second;

  std::set<std::string> allowed{"--format", "--threads"};
  switch (cfg.command) {
    case Command::verify: allowed.insert({"--family", "--n", "--m-range"}); break;
    case Command::fit:
      allowed.insert({"--family", "--n", "--samples", "--degree", "--holdout"});
      break;
    default: allowed.insert({"--input", "--family", "--n", "--m", "--p", "--seed"}); break;
  }

  std::map<std::string, std::string> flags;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& tok = args[i];
    if (tok.rfind("--", 0) != 0) throw UsageError("unexpected argument '" + tok + "'");
    if (!allowed.count(tok)) throw UsageError("unknown flag '" + tok + "' for command " + args[0]);
    if (i + 1 >= args.size()) throw UsageError("flag '" + tok + "' needs a value");
    if (!flags.emplace(tok, args[i + 1]).second) throw UsageError("repeated flag '" + tok + "'");
    ++i;
  }
  auto get = [&](const std::string& f) -> std::optional<std::string> {
    auto it = flags.find(f);
    if (it == flags.end()) return std::nullopt;
    return it->second;
  };

  if (auto f = get("--format")) {
    if (*f == "text")
      cfg.format = Format::text;
    else if (*f == "json")
      cfg.format = Format::json;
    else
      throw UsageError("--format must be text or json, got '" + *f + "'");
  }
  if (auto t = get("--threads")) cfg.threads = detail::parse_int<unsigned>("--threads", *t);

  if (get("--input") && get("--family"))
    throw UsageError("--input and --family are mutually exclusive");
  if (auto in = get("--input")) {
    for (const char* f : {"--n", "--m", "--p", "--seed"})
      if (get(f)) throw UsageError(std::string(f) + " cannot be combined with --input");
    cfg.input = *in;
    return cfg;
  }

  FamilySpec fam;
  if (auto name = get("--family")) fam.name = *name;
  static const std::set<std::string> graph_families{"jahangir", "cycle",    "path",  "star",
                                                    "complete", "wheel", "random"};
  if (!graph_families.count(fam.name)) throw UsageError("unknown family '" + fam.name + "'");
  if (cfg.command == Command::verify && fam.name != "jahangir")
    throw UsageError("verify only supports --family jahangir");
  if (cfg.command == Command::fit && fam.name == "random")
    throw UsageError("fit needs a deterministic family; 'random' is not one");

  if (auto n = get("--n")) {
    if (fam.name != "jahangir") throw UsageError("--n only applies to --family jahangir");
    fam.n = detail::parse_int<int>("--n", *n);
    if (*fam.n < 1) throw UsageError("--n must be >= 1, got " + *n);
  } else if (fam.name == "jahangir") {
    throw UsageError("--family jahangir needs --n");
  }
  if (fam.name != "random" && (get("--p") || get("--seed")))
    throw UsageError("--p and --seed only apply to --family random");
  if (auto p = get("--p")) fam.p = detail::parse_probability(*p);
  if (auto s = get("--seed")) fam.seed = detail::parse_int<std::uint64_t>("--seed", *s);

  const long long lo = detail::min_parameter(fam.name);
  switch (cfg.command) {
    case Command::verify: {
      if (*fam.n != 5) throw UsageError("verify only has closed forms for --n 5");
      auto r = get("--m-range");
      if (!r) throw UsageError("verify needs --m-range a..b");
      cfg.m_range = detail::parse_range("--m-range", *r);
      if (cfg.m_range.first < 3) throw UsageError("--m-range must start at m >= 3, got '" + *r + "'");
      break;
    }
    case Command::fit: {
      auto s = get("--samples");
      auto d = get("--degree");
      if (!s) throw UsageError("fit needs --samples");
      if (!d) throw UsageError("fit needs --degree");
      cfg.samples = detail::parse_list("--samples", *s);
      cfg.degree = detail::parse_int<std::size_t>("--degree", *d);
      if (auto h = get("--holdout")) cfg.holdout = detail::parse_list("--holdout", *h);
      for (long long m : cfg.samples)
        if (m < lo) throw UsageError("--samples value " + std::to_string(m) + " below minimum " + std::to_string(lo));
      for (long long m : cfg.holdout)
        if (m < lo) throw UsageError("--holdout value " + std::to_string(m) + " below minimum " + std::to_string(lo));
      std::set<long long> uniq(cfg.samples.begin(), cfg.samples.end());
      if (uniq.size() != cfg.samples.size()) throw UsageError("--samples contains a repeated value");
      if (cfg.samples.size() < cfg.degree + 1)
        throw UsageError("--degree " + *d + " needs at least " + std::to_string(cfg.degree + 1) + " --samples");
      for (long long m : cfg.holdout)
        if (uniq.count(m)) throw UsageError("--holdout value " + std::to_string(m) + " is also a sample");
      break;
    }
    default: {
      auto m = get("--m");
      if (!m) throw UsageError("--family " + fam.name + " needs --m");
      fam.m = detail::parse_int<long long>("--m", *m);
      if (*fam.m < lo)
        throw UsageError("--m must be >= " + std::to_string(lo) + " for " + fam.name + ", got " + *m);
      if (*fam.m > 10'000'000) throw UsageError("--m too large: " + *m);
      break;
    }
  }
  cfg.family = fam;
  return cfg;
}

namespace detail {

inline FamilyDescriptor descriptor(const FamilySpec& f) {
  if (f.name == "jahangir") return family::jahangir(*f.n);
  if (f.name == "cycle") return family::cycle();
  if (f.name == "path") return family::path();
  if (f.name == "star") return family::star();
  if (f.name == "complete") return family::complete();
  if (f.name == "wheel") return family::wheel();
  throw UsageError("family '" + f.name + "' has no parametric descriptor");
}

inline Graph load_graph(const RunConfig& cfg, std::istream& in) {
  if (cfg.input) {
    if (*cfg.input == "-") return read_edge_list(in);
    std::ifstream file(*cfg.input);
    if (!file) throw Error("cannot open input file '" + *cfg.input + "'");
    return read_edge_list(file);
  }
  const auto& f = *cfg.family;
  if (f.name == "random") return random_connected(static_cast<int>(*f.m), f.p, f.seed);
  return descriptor(f)(*f.m);
}

inline void emit(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump(2) << '\n'; }

inline std::string join(const std::vector<long long>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

}  // namespace detail

/// Executes a validated config. Results go to out, diagnostics to err.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
  const DistributionOptions opts{cfg.threads};
  const bool json = cfg.format == Format::json;
  try {
    switch (cfg.command) {
      case Command::generate: {
        const Graph g = detail::load_graph(cfg, in);
        if (!json) {
          write_edge_list(out, g);
        } else {
          nlohmann::ordered_json j;
          j["vertex_count"] = g.vertex_count();
          j["edge_count"] = g.edge_count();
          j["edges"] = nlohmann::ordered_json::array();
          for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
          detail::emit(out, j);
        }
        return kOk;
      }
      case Command::distances: {
        const Graph g = detail::load_graph(cfg, in);
        const auto dd = distance_distribution(g, opts);
        if (!json) {
          for (std::size_t k = 1; k <= dd.diameter(); ++k) out << k << ' ' << dd.count(k) << '\n';
        } else {
          nlohmann::ordered_json j;
          j["vertex_count"] = g.vertex_count();
          j["edge_count"] = g.edge_count();
          j["diameter"] = dd.diameter();
          j["counts"] = std::vector<std::uint64_t>(dd.counts().begin() + 1, dd.counts().end());
          detail::emit(out, j);
        }
        return kOk;
      }
      case Command::hosoya: {
        const auto p = hosoya_polynomial(detail::load_graph(cfg, in), opts);
        if (json)
          detail::emit(out, to_json(p));
        else
          out << format_polynomial(p) << '\n';
        return kOk;
      }
      case Command::wiener: {
        const auto w = wiener_index(detail::load_graph(cfg, in), opts);
        if (json) {
          nlohmann::ordered_json j;
          j["wiener"] = to_json(w);
          detail::emit(out, j);
        } else {
          out << w << '\n';
        }
        return kOk;
      }
      case Command::verify: {
        const auto rep = j5::verify_against_oracle(cfg.m_range, opts);
        if (json) {
          detail::emit(out, j5::to_json(rep));
        } else {
          std::size_t failed = 0;
          for (const auto& c : rep.results) {
            out << "m=" << c.m << ' ' << (c.pass ? "pass" : "FAIL");
            if (c.first_mismatch) out << " (first differing coefficient: x^" << *c.first_mismatch << ')';
            if (c.wiener_closed != c.wiener_oracle)
              out << " (wiener " << c.wiener_closed << " vs " << c.wiener_oracle << ')';
            out << '\n';
            failed += !c.pass;
          }
          out << "errata:";
          for (const auto& e : rep.errata) out << ' ' << e;
          out << '\n';
          if (failed == 0)
            out << "all " << rep.results.size() << " pass\n";
          else
            out << failed << " of " << rep.results.size() << " failed\n";
        }
        if (!rep.all_pass()) {
          err << "verify: closed form disagrees with brute force\n";
          return kVerification;
        }
        return kOk;
      }
      case Command::fit: {
        const auto family = detail::descriptor(*cfg.family);
        const auto formula = fit(family, cfg.samples, cfg.degree, opts);
        const auto holdout = verify_formula(formula, cfg.holdout, opts);
        if (json) {
          nlohmann::ordered_json j;
          j["formula"] = to_json(formula);
          j["wiener"] = to_json(wiener_polynomial(formula));
          j["holdout"] = to_json(holdout);
          detail::emit(out, j);
        } else {
          out << "family " << family.name;
          for (const auto& [k, v] : family.fixed) out << ' ' << k << '=' << v;
          out << ", degree " << cfg.degree << ", samples " << detail::join(cfg.samples) << '\n';
          for (std::size_t k = 1; k <= formula.per_k.size(); ++k)
            out << "k=" << k << ": " << format_polynomial(formula.per_k[k - 1], "m") << '\n';
          out << "wiener: " << format_polynomial(wiener_polynomial(formula), "m") << '\n';
          out << "holdout " << (cfg.holdout.empty() ? "(none)" : detail::join(cfg.holdout)) << ": "
              << (holdout.pass() ? "pass" : "FAIL") << " (" << holdout.comparisons
              << " comparisons, " << holdout.mismatches.size() << " mismatches)\n";
          for (const auto& mm : holdout.mismatches)
            out << "  m=" << mm.m << " k=" << mm.k << ": predicted " << to_string(mm.predicted)
                << ", observed " << mm.observed << '\n';
        }
        if (!holdout.pass()) {
          err << "fit: formula fails on holdout\n";
          return kVerification;
        }
        return kOk;
      }
    }
  } catch (const UsageError& e) {
    err << "topoidx: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "topoidx: " << e.what() << '\n';
    return kComputation;
  }
  return kOk;
}

/// parse_args + run, with usage errors reported on err.
inline int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                std::istream& in = std::cin) {
  if (!args.empty() && (args[0] == "--help" || args[0] == "-h" || args[0] == "help")) {
    out << kUsageText;
    return kOk;
  }
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const UsageError& e) {
    err << "topoidx: " << e.what() << '\n' << kUsageText;
    return kUsage;
  }
  return run(cfg, out, err, in);
}

}  // namespace topo::cli
