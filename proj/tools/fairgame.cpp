// Command-line surface over the fair matching game solver: solution-tree
// enumeration, root scans, the ternary max-coordinate parametrization,
// Lorentz quadric counts, bag simulation, and structural invariant suites.
//
// Every subcommand prints one self-describing record per line: JSON objects
// by default, CSV rows (header first) with --format csv. Integer fields are
// decimal strings so large coordinates survive consumers that parse JSON
// numbers as 53-bit doubles. Exit codes: 0 success, 1 verification failure,
// 2 usage or domain errors. Set FAIRGAME_LOG=1 for progress diagnostics on
// stderr.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fairgame/games.hpp"
#include "fairgame/ternary.hpp"
#include "fairgame/tree.hpp"

namespace {

using fairgame::Integer;
using fairgame::Rational;
using fairgame::SolutionVector;
using json = nlohmann::ordered_json;

bool log_enabled() {
  static const bool on = [] {
    const char* v = std::getenv("FAIRGAME_LOG");
    return v != nullptr && *v != '\0' && std::string_view(v) != "0";
  }();
  return on;
}

void log_line(const std::string& msg) {
  if (log_enabled()) std::cerr << "[fairgame] " << msg << '\n';
}

std::string dec(const Integer& v) { return v.get_str(); }

std::string dec(std::uint64_t v) { return std::to_string(v); }

std::string ratio(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Fixed-precision companion for rate-like fields; the exact value always
// travels alongside as "num/den".
std::string decimal6(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", q.get_d());
  return buf;
}

json coords_json(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(dec(c));
  return a;
}

// Comma-separated integers; report the offending entry on a parse failure
// rather than letting the raw mpz error escape.
std::vector<Integer> parse_tuple(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto from = item.find_first_not_of(" \t");
    const auto to = item.find_last_not_of(" \t");
    if (from == std::string::npos)
      throw std::invalid_argument("empty entry in tuple '" + text + "'");
    const std::string token = item.substr(from, to - from + 1);
    try {
      out.emplace_back(token);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("'" + token + "' in tuple '" + text +
                                  "' is not an integer");
    }
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

// Streams records as JSON lines or CSV rows. All records of one invocation
// carry the same field set, so the CSV header comes from the first record;
// array cells are ';'-joined.
class RecordWriter {
 public:
  explicit RecordWriter(bool csv) : csv_(csv) {}

  void write(const json& rec) {
    if (!csv_) {
      std::cout << rec.dump() << '\n';
      return;
    }
    if (!header_done_) {
      bool first = true;
      for (const auto& [key, value] : rec.items()) {
        if (!first) std::cout << ',';
        std::cout << key;
        first = false;
      }
      std::cout << '\n';
      header_done_ = true;
    }
    bool first = true;
    for (const auto& [key, value] : rec.items()) {
      if (!first) std::cout << ',';
      std::cout << csv_escape(cell(value));
      first = false;
    }
    std::cout << '\n';
  }

 private:
  static std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) out += ';';
        out += cell(v[i]);
      }
      return out;
    }
    return v.dump();
  }

  bool csv_ = false;
  bool header_done_ = false;
};

json vertex_record(const SolutionVector& x, long depth) {
  json rec;
  rec["kind"] = "vertex";
  rec["depth"] = std::to_string(depth);
  rec["coords"] = coords_json(x.coords());
  rec["sum"] = dec(x.sum());
  rec["height"] = dec(x.height());
  rec["norm_sq"] = dec(x.norm_sq());
  rec["fair"] = x.fair();
  rec["sign"] = fairgame::to_string(fairgame::sign_of(x));
  return rec;
}

struct EnumerateOptions {
  int n = 0;
  std::string root_text;
  bool has_root = false;
  std::string depth_text, height_text, norm_text;
  int bound_flags = 0;
  int jobs = 1;
  bool csv = false;
};

int run_enumerate(const EnumerateOptions& opt) {
  if (opt.n < 2) {
    std::cerr << "error: --n must be at least 2\n";
    return 2;
  }
  if (opt.bound_flags != 1) {
    std::cerr << "error: exactly one of --depth, --height, --norm is "
                 "required\n";
    return 2;
  }
  std::vector<Integer> coords;
  if (opt.has_root) {
    coords = parse_tuple(opt.root_text);
    if (static_cast<int>(coords.size()) != opt.n) {
      std::cerr << "error: --root must list exactly " << opt.n
                << " coordinates\n";
      return 2;
    }
  } else {
    coords.assign(opt.n, Integer(0));
  }
  SolutionVector root{std::move(coords)};  // rejects non-solutions

  fairgame::EnumerationBound bound;
  if (!opt.depth_text.empty()) {
    bound.kind = fairgame::BoundKind::max_depth;
    bound.limit = Integer(opt.depth_text);
  } else if (!opt.height_text.empty()) {
    bound.kind = fairgame::BoundKind::max_height;
    bound.limit = Integer(opt.height_text);
  } else {
    bound.kind = fairgame::BoundKind::max_norm;
    bound.limit = Integer(opt.norm_text);
  }

  RecordWriter writer(opt.csv);
  std::uint64_t emitted = 0;
  fairgame::enumerate_component(
      root, bound,
      [&](const SolutionVector& x, long depth) {
        writer.write(vertex_record(x, depth));
        ++emitted;
      },
      opt.jobs);
  log_line("enumerate: " + std::to_string(emitted) + " vertices");
  return 0;
}

// Ascending (n-3)-tuples with entries in [-max_abs, max_abs], then every
// root any tuple's factorization scan discovers, deduplicated across tuples
// (first witness wins) and sorted by coordinates.
std::vector<fairgame::RootRecord> scan_roots(int n, int max_abs) {
  const int len = n - 3;
  std::vector<std::vector<Integer>> tuples;
  std::vector<Integer> cur;
  std::function<void(int, int)> fill = [&](int pos, int lo) {
    if (pos == len) {
      tuples.push_back(cur);
      return;
    }
    for (int v = lo; v <= max_abs; ++v) {
      cur.emplace_back(v);
      fill(pos + 1, v);
      cur.pop_back();
    }
  };
  fill(0, -max_abs);

  std::map<SolutionVector, fairgame::RootWitness> found;
  for (const auto& a : tuples) {
    for (auto& rec : fairgame::find_roots_extending(a)) {
      found.emplace(rec.root, rec.witness);
    }
  }
  std::vector<fairgame::RootRecord> out;
  out.reserve(found.size());
  for (auto& [root, witness] : found) out.push_back({root, witness});
  log_line("scan_roots: n=" + std::to_string(n) + " max_abs=" +
           std::to_string(max_abs) + " tuples=" +
           std::to_string(tuples.size()) + " roots=" +
           std::to_string(out.size()));
  return out;
}

struct RootsOptions {
  int n = 0;
  std::string a_text;
  bool has_a = false;
  int max_abs = 3;
  bool csv = false;
};

int run_roots(const RootsOptions& opt) {
  if (opt.n < 3) {
    std::cerr << "error: --n must be at least 3\n";
    return 2;
  }
  std::vector<fairgame::RootRecord> roots;
  if (opt.has_a) {
    auto a = parse_tuple(opt.a_text);
    if (static_cast<int>(a.size()) != opt.n - 3) {
      std::cerr << "error: --a must list exactly " << opt.n - 3
                << " value(s) for --n " << opt.n << '\n';
      return 2;
    }
    roots = fairgame::find_roots_extending(a);
  } else {
    roots = scan_roots(opt.n, opt.max_abs);
  }

  RecordWriter writer(opt.csv);
  for (const auto& rr : roots) {
    json rec;
    rec["kind"] = "root";
    rec["coords"] = coords_json(rr.root.coords());
    rec["sum"] = dec(rr.root.sum());
    rec["height"] = dec(rr.root.height());
    rec["fair"] = rr.root.fair();
    rec["sign"] = fairgame::to_string(fairgame::sign_of(rr.root));
    rec["witness_a"] = coords_json(rr.witness.a);
    rec["witness_m"] = dec(rr.witness.m);
    rec["witness_b"] = dec(rr.witness.b);
    rec["witness_c"] = dec(rr.witness.c);
    writer.write(rec);
  }
  return 0;
}

struct C3Options {
  std::string check_text, list_text, density_text;
  bool csv = false;
};

int run_c3(const C3Options& opt) {
  const int given = int(!opt.check_text.empty()) + int(!opt.list_text.empty()) +
                    int(!opt.density_text.empty());
  if (given != 1) {
    std::cerr << "error: exactly one of --check, --list, --density is "
                 "required\n";
    return 2;
  }
  RecordWriter writer(opt.csv);
  if (!opt.check_text.empty()) {
    Integer c(opt.check_text);
    const bool member = fairgame::c3_contains(c);
    const bool residue = fairgame::c3_contains_residue(c);
    json rec;
    rec["kind"] = "c3_membership";
    rec["c"] = dec(c);
    rec["member"] = member;
    rec["residue_member"] = residue;
    rec["agree"] = member == residue;
    writer.write(rec);
    return 0;
  }
  if (!opt.list_text.empty()) {
    Integer limit(opt.list_text);
    for (const auto& c : fairgame::c3_list(limit)) {
      json rec;
      rec["kind"] = "c3_element";
      rec["c"] = dec(c);
      writer.write(rec);
    }
    return 0;
  }
  Integer limit(opt.density_text);
  const auto members = fairgame::c3_list(limit);
  const Rational density = fairgame::c3_density(limit);
  json rec;
  rec["kind"] = "c3_density";
  rec["limit"] = dec(limit);
  rec["count"] = std::to_string(members.size());
  rec["density"] = ratio(density);
  rec["density_decimal"] = decimal6(density);
  writer.write(rec);
  return 0;
}

int run_count_max(const std::string& c_text, bool csv) {
  Integer c(c_text);
  const Integer formula = fairgame::count_max_coordinate(c);
  const auto games = fairgame::games_with_max_coordinate(c);
  json game_list = json::array();
  for (const auto& g : games) {
    std::string s;
    for (std::size_t i = 0; i < g.triple.size(); ++i) {
      if (i != 0) s += ' ';
      s += dec(g.triple[i]);
    }
    game_list.push_back(s);
  }
  json rec;
  rec["kind"] = "count_max";
  rec["c"] = dec(c);
  rec["formula"] = dec(formula);
  rec["listed"] = std::to_string(games.size());
  rec["agree"] = formula == Integer(games.size());
  rec["games"] = game_list;
  RecordWriter writer(csv);
  writer.write(rec);
  return 0;
}

struct LorentzOptions {
  std::uint64_t k = 0;
  bool has_k = false;
  std::string map_text, unmap_text;
  bool csv = false;
};

int run_lorentz(const LorentzOptions& opt) {
  const int given =
      int(opt.has_k) + int(!opt.map_text.empty()) + int(!opt.unmap_text.empty());
  if (given != 1) {
    std::cerr << "error: exactly one of --count, --map, --unmap is "
                 "required\n";
    return 2;
  }
  RecordWriter writer(opt.csv);
  if (opt.has_k) {
    const std::uint64_t points = fairgame::count_lorentz(opt.k);
    const std::uint64_t s3 = fairgame::count_s3_ellipsoid(opt.k);
    const std::uint64_t f3 = fairgame::count_f3_ellipsoid(opt.k);
    Rational per_k(0);
    if (opt.k > 0) {
      per_k = Rational(Integer(points), Integer(opt.k));
      per_k.canonicalize();
    }
    json rec;
    rec["kind"] = "lorentz_count";
    rec["k"] = dec(opt.k);
    rec["points"] = dec(points);
    rec["solution_points"] = dec(s3);
    rec["fair_classes"] = dec(f3);
    rec["points_per_k"] = decimal6(per_k);
    writer.write(rec);
    return 0;
  }
  if (!opt.map_text.empty()) {
    auto t = parse_tuple(opt.map_text);
    if (t.size() != 3) {
      std::cerr << "error: --map needs exactly 3 coordinates\n";
      return 2;
    }
    const auto w = fairgame::to_lorentz({t[0], t[1], t[2]});
    json rec;
    rec["kind"] = "lorentz_image";
    rec["x"] = coords_json(t);
    rec["w"] = coords_json({w.w1, w.w2, w.w3});
    writer.write(rec);
    return 0;
  }
  auto t = parse_tuple(opt.unmap_text);
  if (t.size() != 3) {
    std::cerr << "error: --unmap needs exactly 3 coordinates\n";
    return 2;
  }
  const fairgame::LorentzPoint p(t[0], t[1], t[2]);
  const auto x = fairgame::from_lorentz(p);
  json rec;
  rec["kind"] = "lorentz_preimage";
  rec["w"] = coords_json(t);
  rec["x"] = coords_json({x[0], x[1], x[2]});
  writer.write(rec);
  return 0;
}

struct SimulateOptions {
  std::string bag_text;
  std::uint64_t trials = 1000000;
  std::uint64_t seed = 1;
  bool csv = false;
};

int run_simulate(const SimulateOptions& opt) {
  const auto bag = parse_tuple(opt.bag_text);
  const auto result = fairgame::simulate_game(bag, opt.trials, opt.seed);
  const Rational exact = fairgame::win_probability(bag);
  Rational error = result.rate - exact;
  error = abs(error);
  json rec;
  rec["kind"] = "simulation";
  rec["bag"] = coords_json(bag);
  rec["trials"] = dec(result.trials);
  rec["seed"] = dec(opt.seed);
  rec["wins"] = dec(result.wins);
  rec["rate"] = ratio(result.rate);
  rec["rate_decimal"] = decimal6(result.rate);
  rec["exact"] = ratio(exact);
  rec["exact_decimal"] = decimal6(exact);
  rec["abs_error_decimal"] = decimal6(error);
  RecordWriter writer(opt.csv);
  writer.write(rec);
  return 0;
}

const std::vector<std::string> kAllSuites = {"mod4", "mod3", "sum", "height",
                                             "height-norm"};

// One invariant check; on failure `detail` holds the witness values.
// mod3 is only ever called on vertices of the zero game's component.
bool suite_check(const std::string& suite, const SolutionVector& x,
                 std::string& detail) {
  if (suite == "mod4") {
    const unsigned long r = mpz_fdiv_ui(x.sum().get_mpz_t(), 4);
    if (r == 0 || r == 1) return true;
    detail = "coordinate sum is " + std::to_string(r) + " mod 4";
    return false;
  }
  if (suite == "height-norm") {
    const Integer lhs = fairgame::binom2(x.sum() + 1);
    if (lhs == x.norm_sq()) return true;
    detail =
        "binom(s+1,2) = " + dec(lhs) + " but ||x||^2 = " + dec(x.norm_sq());
    return false;
  }
  if (suite == "sum") {
    const auto& c = x.coords();
    const int expected = sgn(Integer(x.sum() + 1));
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        const Integer v = 2 * (x.sum() - c[i] - c[j]) + 1;
        if (sgn(v) != expected) {
          detail = "2*s_ij+1 = " + dec(v) + " for pair (" + std::to_string(i) +
                   "," + std::to_string(j) + ") opposes the sign of s+1";
          return false;
        }
      }
    }
    return true;
  }
  if (suite == "height") {
    std::set<Integer> heights;
    int smaller = 0;
    for (const auto& y : fairgame::neighbors_of(x)) {
      if (!heights.insert(y.height()).second) {
        detail = "two neighbors share height " + dec(y.height());
        return false;
      }
      if (y.height() < x.height()) ++smaller;
    }
    if (smaller <= 1) return true;
    detail = std::to_string(smaller) + " neighbors have smaller height";
    return false;
  }
  if (fairgame::mod3_class(x) != fairgame::Mod3Class::other) return true;
  detail = "zero-component vertex reduces mod 3 to neither 0 nor e_j";
  return false;
}

struct VerifyOptions {
  std::string suite;
  std::string height_text;
  std::vector<int> ns = {3, 4, 5};
  int max_abs = 3;
  int jobs = 1;
  bool csv = false;
};

int run_verify(const VerifyOptions& opt) {
  const std::vector<std::string> suites =
      opt.suite == "all" ? kAllSuites : std::vector<std::string>{opt.suite};
  for (int n : opt.ns) {
    if (n < 3) {
      std::cerr << "error: --n entries must be at least 3\n";
      return 2;
    }
  }
  fairgame::EnumerationBound bound;
  bound.kind = fairgame::BoundKind::max_height;
  bound.limit = Integer(opt.height_text);

  std::map<std::string, std::uint64_t> checked;
  for (const auto& s : suites) checked[s] = 0;
  std::uint64_t roots_total = 0;

  struct verification_stop {};
  json violation;

  const auto check_vertex = [&](const SolutionVector& x, bool zero_component) {
    for (const auto& suite : suites) {
      if (suite == "mod3" && !zero_component) continue;
      std::string detail;
      if (suite_check(suite, x, detail)) {
        ++checked[suite];
        continue;
      }
      violation["kind"] = "violation";
      violation["suite"] = suite;
      violation["coords"] = coords_json(x.coords());
      violation["detail"] = detail;
      throw verification_stop{};
    }
  };

  RecordWriter writer(opt.csv);
  try {
    for (int n : opt.ns) {
      const auto roots = scan_roots(n, opt.max_abs);
      for (const auto& rr : roots) {
        ++roots_total;
        const auto& rc = rr.root.coords();
        const bool zero_component = std::all_of(
            rc.begin(), rc.end(), [](const Integer& v) { return v == 0; });
        fairgame::enumerate_component(
            rr.root, bound,
            [&](const SolutionVector& x, long) {
              check_vertex(x, zero_component);
            },
            opt.jobs);
        log_line("verify: n=" + std::to_string(n) + " root done");
      }
    }
  } catch (const verification_stop&) {
    writer.write(violation);
    return 1;
  }

  json ns_json = json::array();
  for (int n : opt.ns) ns_json.push_back(std::to_string(n));
  for (const auto& suite : suites) {
    json rec;
    rec["kind"] = "verify";
    rec["suite"] = suite;
    rec["height"] = opt.height_text;
    rec["max_abs"] = std::to_string(opt.max_abs);
    rec["n"] = ns_json;
    rec["roots"] = dec(roots_total);
    rec["vertices_checked"] = dec(checked[suite]);
    rec["violations"] = "0";
    writer.write(rec);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Fair matching game toolkit: enumerate solution trees of the game "
      "equation, scan for component roots, parametrize ternary games by "
      "their maximum coordinate, count Lorentz quadric points, simulate "
      "bags, and verify structural invariants."};
  app.require_subcommand(1);

  std::string format = "jsonl";
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format,
                    "Output format: jsonl (default) or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
  };

  EnumerateOptions enum_opt;
  auto* cmd_enumerate = app.add_subcommand(
      "enumerate", "Breadth-first enumeration of one solution-tree component");
  cmd_enumerate->add_option("--n", enum_opt.n, "Number of coordinates")
      ->required();
  auto* opt_root = cmd_enumerate->add_option(
      "--root", enum_opt.root_text,
      "Comma-separated starting solution (default: the zero game)");
  auto* opt_depth = cmd_enumerate->add_option("--depth", enum_opt.depth_text,
                                              "Bound: maximum tree depth");
  auto* opt_height = cmd_enumerate->add_option(
      "--height", enum_opt.height_text, "Bound: maximum height |1+s|");
  auto* opt_norm = cmd_enumerate->add_option(
      "--norm", enum_opt.norm_text,
      "Bound: maximum Euclidean norm (compares ||x||^2 against bound^2)");
  cmd_enumerate
      ->add_option("--jobs", enum_opt.jobs, "Worker threads per level")
      ->check(CLI::Range(1, 64));
  add_format(cmd_enumerate);

  RootsOptions roots_opt;
  auto* cmd_roots = app.add_subcommand(
      "roots", "Scan factorizations for component roots extending a tuple");
  cmd_roots->add_option("--n", roots_opt.n, "Number of coordinates")
      ->required();
  auto* opt_a = cmd_roots->add_option(
      "--a", roots_opt.a_text,
      "Fixed (n-3)-tuple to extend; omit to scan all ascending tuples");
  cmd_roots->add_option("--max-abs", roots_opt.max_abs,
                        "Scan bound on |a_i| when --a is omitted");
  add_format(cmd_roots);

  C3Options c3_opt;
  auto* cmd_c3 = app.add_subcommand(
      "c3", "Membership, listing, and density of realizable max coordinates");
  cmd_c3->add_option("--check", c3_opt.check_text,
                     "Test one value for membership (both decision paths)");
  cmd_c3->add_option("--list", c3_opt.list_text,
                     "List all members up to this limit");
  cmd_c3->add_option("--density", c3_opt.density_text,
                     "Exact member density on [0, limit]");
  add_format(cmd_c3);

  std::string count_max_c;
  auto* cmd_count_max = app.add_subcommand(
      "count-max",
      "Count and list the fair triples with a given maximum coordinate");
  cmd_count_max->add_option("c", count_max_c, "Maximum coordinate, > 1")
      ->required();
  add_format(cmd_count_max);

  LorentzOptions lorentz_opt;
  auto* cmd_lorentz = app.add_subcommand(
      "lorentz", "Quadric point counts and the solution <-> point maps");
  auto* opt_count = cmd_lorentz->add_option(
      "--count", lorentz_opt.k, "Count quadric points with ||w|| <= k");
  cmd_lorentz->add_option("--map", lorentz_opt.map_text,
                          "Map an ascending solution triple to its w-point");
  cmd_lorentz->add_option("--unmap", lorentz_opt.unmap_text,
                          "Recover the ordered solution triple of a w-point");
  add_format(cmd_lorentz);

  SimulateOptions sim_opt;
  auto* cmd_simulate = app.add_subcommand(
      "simulate", "Monte-Carlo match rate of a bag versus the exact value");
  cmd_simulate->add_option("--bag", sim_opt.bag_text, "Ball counts per color")
      ->required();
  cmd_simulate->add_option("--trials", sim_opt.trials,
                           "Number of simulated draws");
  cmd_simulate->add_option("--seed", sim_opt.seed,
                           "Generator seed (fixed default for reproducibility)");
  add_format(cmd_simulate);

  VerifyOptions verify_opt;
  auto* cmd_verify = app.add_subcommand(
      "verify", "Check a structural invariant suite over enumerated vertices");
  cmd_verify
      ->add_option("suite", verify_opt.suite,
                   "One of: mod4, mod3, sum, height, height-norm, all")
      ->required()
      ->check(CLI::IsMember(
          {"mod4", "mod3", "sum", "height", "height-norm", "all"}));
  cmd_verify
      ->add_option("--height", verify_opt.height_text,
                   "Check all vertices of height up to this bound")
      ->required();
  cmd_verify
      ->add_option("--n", verify_opt.ns,
                   "Coordinate counts to cover (comma-separated)")
      ->delimiter(',');
  cmd_verify->add_option("--max-abs", verify_opt.max_abs,
                         "Root-scan bound on |a_i|");
  cmd_verify
      ->add_option("--jobs", verify_opt.jobs, "Worker threads per level")
      ->check(CLI::Range(1, 64));
  add_format(cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  enum_opt.has_root = opt_root->count() > 0;
  enum_opt.bound_flags = int(opt_depth->count() > 0) +
                         int(opt_height->count() > 0) +
                         int(opt_norm->count() > 0);
  roots_opt.has_a = opt_a->count() > 0;
  lorentz_opt.has_k = opt_count->count() > 0;

  const bool csv = format == "csv";
  enum_opt.csv = roots_opt.csv = c3_opt.csv = lorentz_opt.csv = sim_opt.csv =
      verify_opt.csv = csv;

  try {
    if (cmd_enumerate->parsed()) return run_enumerate(enum_opt);
    if (cmd_roots->parsed()) return run_roots(roots_opt);
    if (cmd_c3->parsed()) return run_c3(c3_opt);
    if (cmd_count_max->parsed()) return run_count_max(count_max_c, csv);
    if (cmd_lorentz->parsed()) return run_lorentz(lorentz_opt);
    if (cmd_simulate->parsed()) return run_simulate(sim_opt);
    if (cmd_verify->parsed()) return run_verify(verify_opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
