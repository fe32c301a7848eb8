// affchar: command-line front end for permutation-weight characters of A_r^(1).
//
//   affchar permweights --rank 4 --level 1 --labels 0,0,0,0 --max-depth 8
//   affchar character   --rank 4 --level 1 --labels 0,0,0,0 --max-depth 7
//   affchar oracle      --rank 4 --level 1 --shells 2
//   affchar compare     --rank 4 --level 1 --max-depth 8 --shells 2
//   affchar theta       --rank 4 --truncate 8
//
// Exit codes: 0 success, 1 comparison mismatch, 2 invalid input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "affchar/affine_orbits.hpp"
#include "affchar/character.hpp"
#include "affchar/json_io.hpp"
#include "affchar/qseries.hpp"
#include "affchar/theta_oracle.hpp"

namespace {

using namespace affchar;

constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

struct RunConfig {
  int rank = 4;
  Coord level = 1;
  std::string labels;  // comma separated; empty means all zero
  int max_depth = 8;
  std::optional<int> truncate;
  std::string method = "lemma";
  Coord shells = 2;
  std::string format = "json";
  std::string out;
  std::string fixture;
};

class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Coord> parse_labels(const std::string& text, int rank) {
  if (text.empty()) return std::vector<Coord>(static_cast<std::size_t>(rank), 0);
  std::vector<Coord> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse label '" + item + "'");
    }
  }
  return out;
}

AffineDominant make_dominant(const RunConfig& cfg) {
  try {
    const Rank rank(cfg.rank);
    return AffineDominant(cfg.level, DynkinLabels(rank, parse_labels(cfg.labels, cfg.rank)));
  } catch (const LatticeError& e) {
    throw InvalidInput(e.what());
  }
}

EnumerationMethod parse_method(const std::string& m) {
  if (m == "lemma") return EnumerationMethod::lemma;
  if (m == "translation") return EnumerationMethod::translation;
  throw InvalidInput("unknown method '" + m + "'");
}

// Writes to --out when given, standard output otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InvalidInput("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void write_series_csv(std::ostream& os, const IntSeries& s) {
  os << "order,value\n";
  for (int n = 0; n <= s.trunc(); ++n) os << n << ',' << s[n] << '\n';
}

int cmd_permweights(const RunConfig& cfg) {
  const auto dom = make_dominant(cfg);
  if (cfg.max_depth < 0) throw InvalidInput("--max-depth must be non-negative");
  const auto set = permutation_weights(dom, cfg.max_depth, parse_method(cfg.method));

  std::string notation;
  for (const auto& pw : set) notation += (notation.empty() ? "" : " ") + list_notation(pw);
  std::cerr << set.size() << " permutation weights: " << notation << '\n';

  Output out(cfg.out);
  if (cfg.format == "csv") {
    out.stream() << "labels,depth,sign\n";
    for (const auto& pw : set) {
      std::string labels;
      for (auto a : pw.lambda_labels.values()) labels += (labels.empty() ? "" : " ") + std::to_string(a);
      out.stream() << labels << ',' << pw.depth << ',' << pw.sign << '\n';
    }
  } else {
    const auto& spec = set.spec();
    Json j{{"algebra", dom.algebra_name()},
           {"weight", to_json(dom)},
           {"k_tilde", spec.k_tilde},
           {"lambda_tilde", to_json(spec.lambda_tilde)},
           {"max_depth", set.max_depth()},
           {"count", set.size()},
           {"notation", notation},
           {"members", to_json(set)}};
    out.stream() << j.dump(2) << '\n';
  }
  return 0;
}

int cmd_character(const RunConfig& cfg) {
  const auto dom = make_dominant(cfg);
  if (cfg.max_depth < 0) throw InvalidInput("--max-depth must be non-negative");
  const int trunc = cfg.truncate.value_or(cfg.max_depth);
  if (trunc < 0 || trunc > cfg.max_depth) throw InvalidInput("--truncate must lie in [0, --max-depth]");
  auto cs = normalized_character(dom, cfg.max_depth, parse_method(cfg.method));
  cs.chi = cs.chi.truncated(trunc);

  Output out(cfg.out);
  if (cfg.format == "csv") {
    write_series_csv(out.stream(), cs.chi);
  } else {
    out.stream() << to_json(cs).dump(2) << '\n';
  }
  return 0;
}

int max_shell_depth(const AffineDominant& dom, Coord shells) {
  const auto spec = make_shifted_spec(dom);
  Coord best = 0;
  for (Coord n = 0; n <= shells; ++n)
    for (const auto& alpha : root_shell(dom.rank(), n).members)
      best = std::max(best, translation_depth(spec, alpha.coords(), n));
  return static_cast<int>(best);
}

int cmd_oracle(const RunConfig& cfg) {
  const auto dom = make_dominant(cfg);
  if (cfg.shells < 0) throw InvalidInput("--shells must be non-negative");
  const auto trivial = AffineDominant::trivial(dom.rank());
  const int trunc = cfg.truncate.value_or(
      std::max(max_shell_depth(dom, cfg.shells), max_shell_depth(trivial, cfg.shells)));
  if (trunc < 0) throw InvalidInput("--truncate must be non-negative");

  const int order = guaranteed_order(dom, cfg.shells);
  const IntSeries chi = oracle_character(dom, cfg.shells, trunc);

  Output out(cfg.out);
  if (cfg.format == "csv") {
    write_series_csv(out.stream(), chi);
    return 0;
  }
  Json num = Json::array();
  Json den = Json::array();
  for (Coord n = 1; n <= cfg.shells; ++n) {
    num.push_back(to_json(t_polynomial(dom, n, trunc)));
    den.push_back(to_json(t_polynomial(trivial, n, trunc)));
  }
  Json j{{"algebra", dom.algebra_name()},
         {"weight", to_json(dom)},
         {"shells", cfg.shells},
         {"guaranteed_order", order},
         {"t_numerator", num},
         {"t_denominator", den},
         {"chi", to_json(chi)}};
  out.stream() << j.dump(2) << '\n';
  return 0;
}

int cmd_theta(const RunConfig& cfg) {
  if (cfg.rank < 1 || cfg.rank > kDefaultMaxRank) throw InvalidInput("--rank out of range");
  const Rank rank(cfg.rank);
  const int trunc = cfg.truncate.value_or(cfg.max_depth);
  if (trunc < 0) throw InvalidInput("--truncate must be non-negative");
  const IntSeries theta = lattice_theta(rank, trunc);
  const IntSeries basic = basic_character_rhs(rank, trunc);

  Output out(cfg.out);
  if (cfg.format == "csv") {
    out.stream() << "order,theta,basic_character\n";
    for (int n = 0; n <= trunc; ++n) out.stream() << n << ',' << theta[n] << ',' << basic[n] << '\n';
  } else {
    Json j{{"algebra", "A" + std::to_string(cfg.rank)}, {"theta", to_json(theta)}, {"basic_character", to_json(basic)}};
    out.stream() << j.dump(2) << '\n';
  }
  return 0;
}

std::string cell(const std::optional<BigInt>& v) { return v ? v->str() : "-"; }

int cmd_compare(const RunConfig& cfg) {
  const auto dom = make_dominant(cfg);
  if (cfg.max_depth < 0) throw InvalidInput("--max-depth must be non-negative");
  if (cfg.shells < 0) throw InvalidInput("--shells must be non-negative");

  const auto perm = normalized_character(dom, cfg.max_depth, parse_method(cfg.method)).chi;
  const int order = guaranteed_order(dom, cfg.shells);
  const IntSeries oracle = oracle_character(dom, cfg.shells, cfg.max_depth);
  const bool basic = dom == AffineDominant::basic(dom.rank());
  std::optional<IntSeries> eta;
  if (basic) eta = basic_character_rhs(dom.rank(), cfg.max_depth);
  std::optional<IntSeries> fixture;
  if (!cfg.fixture.empty()) {
    std::ifstream in(cfg.fixture);
    if (!in) throw InvalidInput("cannot read fixture " + cfg.fixture);
    try {
      fixture = int_series_from_json(Json::parse(in));
    } catch (const std::exception& e) {
      throw InvalidInput(std::string("bad fixture: ") + e.what());
    }
  }

  Json rows = Json::array();
  int first_bad = -1;
  std::ostringstream table;
  table << "order  permutation  oracle  eta-quotient" << (fixture ? "  fixture" : "") << "  status\n";
  for (int n = 0; n <= cfg.max_depth; ++n) {
    const BigInt p = perm[n];
    std::optional<BigInt> o, e, f;
    if (n <= oracle.trunc()) o = oracle[n];
    if (eta) e = (*eta)[n];
    if (fixture && n <= fixture->trunc()) f = (*fixture)[n];
    bool ok = true;
    for (const auto& other : {o, e, f})
      if (other && *other != p) ok = false;
    if (!ok && first_bad < 0) first_bad = n;
    table << n << "  " << p << "  " << cell(o) << "  " << cell(e);
    if (fixture) table << "  " << cell(f);
    table << "  " << (ok ? "PASS" : "FAIL") << '\n';
    Json row{{"order", n}, {"permutation", p.str()}, {"status", ok ? "PASS" : "FAIL"}};
    row["oracle"] = o ? Json(o->str()) : Json(nullptr);
    row["eta_quotient"] = e ? Json(e->str()) : Json(nullptr);
    if (fixture) row["fixture"] = f ? Json(f->str()) : Json(nullptr);
    rows.push_back(row);
  }

  std::cout << dom.algebra_name() << " labels " << to_json(dom)["labels"].dump() << " level " << dom.level()
            << ", max depth " << cfg.max_depth << ", shells " << cfg.shells << " (oracle trusted through q^"
            << order << ")\n"
            << table.str();
  if (first_bad >= 0) {
    std::cout << "FAIL: first differing order " << first_bad << '\n';
  } else {
    std::cout << "PASS\n";
  }

  if (!cfg.out.empty()) {
    Output out(cfg.out);
    if (cfg.format == "csv") {
      out.stream() << "order,permutation,oracle,eta_quotient,status\n";
      for (const auto& r : rows) {
        auto str = [](const Json& v) { return v.is_null() ? std::string() : v.get<std::string>(); };
        out.stream() << r["order"].get<int>() << ',' << str(r["permutation"]) << ',' << str(r["oracle"]) << ','
                     << str(r["eta_quotient"]) << ',' << str(r["status"]) << '\n';
      }
    } else {
      Json j{{"algebra", dom.algebra_name()},
             {"weight", to_json(dom)},
             {"M", cfg.max_depth},
             {"shells", cfg.shells},
             {"guaranteed_order", order},
             {"rows", rows},
             {"pass", first_bad < 0}};
      if (first_bad >= 0) j["first_difference"] = first_bad;
      out.stream() << j.dump(2) << '\n';
    }
  }
  return first_bad < 0 ? 0 : kExitMismatch;
}

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--rank", cfg.rank, "rank r of A_r");
  cmd->add_option("--level", cfg.level, "level k");
  cmd->add_option("--labels", cfg.labels, "comma separated Dynkin labels of lambda^+");
  cmd->add_option("--max-depth", cfg.max_depth, "depth cutoff M");
  cmd->add_option("--truncate", cfg.truncate, "series truncation order N");
  cmd->add_option("--method", cfg.method, "permutation-weight enumerator")
      ->check(CLI::IsMember({"lemma", "translation"}));
  cmd->add_option("--shells", cfg.shells, "root-lattice shell cutoff for the theta oracle");
  cmd->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", cfg.out, "output file (default: standard output)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation-weight characters of affine A_r^(1) algebras"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("AFFCHAR_FORMAT"); env && (std::string(env) == "csv" || std::string(env) == "json")) {
    cfg.format = env;
  }

  auto* permweights = app.add_subcommand("permweights", "list permutation weights up to a depth");
  auto* character = app.add_subcommand("character", "normalized character from permutation weights");
  auto* oracle = app.add_subcommand("oracle", "theta-function T-polynomials and character");
  auto* compare = app.add_subcommand("compare", "compare permutation, oracle and eta-quotient characters");
  auto* theta = app.add_subcommand("theta", "root-lattice theta series and basic character");
  for (auto* cmd : {permweights, character, oracle, compare, theta}) add_common_options(cmd, cfg);
  compare->add_option("--fixture", cfg.fixture, "expected chi as a JSON series");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (permweights->parsed()) return cmd_permweights(cfg);
    if (character->parsed()) return cmd_character(cfg);
    if (oracle->parsed()) return cmd_oracle(cfg);
    if (compare->parsed()) return cmd_compare(cfg);
    if (theta->parsed()) return cmd_theta(cfg);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const LatticeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
