#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "berge5/berge.hpp"
#include "berge5/bound.hpp"
#include "berge5/decompose.hpp"
#include "berge5/extremal.hpp"
#include "berge5/h3_io.hpp"
#include "berge5/parallel.hpp"
#include "berge5/paths.hpp"
#include "berge5/structure.hpp"
#include "report.hpp"
#include "svg.hpp"

namespace berge5::cli {
namespace {

std::string claim_title(const std::string& id) {
  if (id == "8") return "link size";
  if (id == "nbhd") return "edges inside a neighbourhood";
  if (id == "9") return "good 2-paths from a vertex";
  if (id == "12") return "good 3-path lower bound";
  if (id == "13") return "good 3-paths from triangles";
  if (id == "14") return "good 3-paths from 2-paths";
  if (id == "15") return "good 3-paths from K4s";
  return id;
}

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

// Bad command line values and unusable input files.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string path;
  std::string bytes;
  H3File file;
};

Input load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  Input input{path, ss.str(), {}};
  try {
    input.file = parse_h3_string(input.bytes);
  } catch (const H3ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
  return input;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Tally of a batch of inequality reports.
struct Summary {
  std::size_t total = 0;
  std::size_t held = 0;
  double worst_ratio = 0.0;
  const InequalityReport* first_failure = nullptr;

  bool ok() const { return first_failure == nullptr; }
};

Summary summarize(const std::vector<InequalityReport>& reports) {
  Summary s;
  for (const auto& r : reports) {
    if (!r.asserted) continue;
    ++s.total;
    if (r.holds) {
      ++s.held;
    } else if (!s.first_failure) {
      s.first_failure = &r;
    }
    if (r.relation != ">=") s.worst_ratio = std::max(s.worst_ratio, r.ratio);
  }
  return s;
}

void print_summary(const std::string& label, const std::vector<InequalityReport>& reports) {
  const Summary s = summarize(reports);
  std::cout << label << ": " << s.held << "/" << s.total << " hold";
  if (s.total > 0) std::cout << " (max lhs/rhs " << s.worst_ratio << ")";
  if (s.first_failure) {
    std::cout << "; first failure " << s.first_failure->subject << ": "
              << to_string(s.first_failure->lhs) << " " << s.first_failure->relation << " "
              << s.first_failure->rhs;
    if (!s.first_failure->note.empty()) std::cout << " [" << s.first_failure->note << "]";
  }
  std::cout << '\n';
}

std::vector<std::string> split_claims(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "all") {
      for (const char* c : {"8", "nbhd", "9", "10", "12", "13", "14", "15"}) out.emplace_back(c);
    } else if (item == "8" || item == "nbhd" || item == "9" || item == "10" || item == "12" ||
               item == "13" || item == "14" || item == "15") {
      out.push_back(item);
    } else {
      throw InputError("unknown claim '" + item + "' (expected all, 8, nbhd, 9, 10, 12, 13, 14, 15)");
    }
  }
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// The verifier battery for a C5-free hypergraph, restricted to `claims`.
std::vector<InequalityReport> run_verifiers(const Hypergraph3& h, const std::vector<std::string>& claims) {
  std::vector<InequalityReport> out;
  auto append = [&](std::vector<InequalityReport> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  if (contains(claims, "8")) append(verify_claim8(h));
  if (contains(claims, "nbhd")) append(verify_neighborhood_lemma(h));
  if (contains(claims, "9")) append(verify_lemma9_all(h));
  if (contains(claims, "10")) out.push_back(claim10_report(h));
  if (contains(claims, "12")) {
    out.push_back(blakley_roy_check(shadow(h)));
    out.push_back(verify_claim12(h));
  }
  if (contains(claims, "13") || contains(claims, "14") || contains(claims, "15")) {
    const Decomposition d = decompose(h);
    for (auto& r : verify_claims13_14_15(h, d)) {
      if (contains(claims, r.claim)) out.push_back(std::move(r));
    }
  }
  return out;
}

Json reports_json(const std::vector<InequalityReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr;
}

Json blocks_json(const Hypergraph3& h, const std::vector<Block>& bs) {
  Json arr = Json::array();
  for (const Block& b : bs) {
    arr.push_back(Json{{"edges", b.edges}, {"core", core_json(classify_core(h, b))}});
  }
  return arr;
}

Json decomposition_json(const Hypergraph3& h, const Decomposition& d, bool& ok) {
  const AlphaStats alpha = alpha_stats(d, shadow(h));
  const Claim6Report c6 = verify_claim6(h, d);
  const Observation7Report o7 = verify_observation7(h, d);
  ok = c6.holds && o7.holds();
  Json elements = Json::array();
  for (const auto& e : d.elements) elements.push_back(element_json(e));
  return Json{{"elements", elements},
              {"alpha", alpha_json(alpha)},
              {"claim6", claim6_json(c6)},
              {"observation7", observation7_json(o7)}};
}

void print_decomposition(const Hypergraph3& h, const Decomposition& d) {
  const AlphaStats a = alpha_stats(d, shadow(h));
  const Claim6Report c6 = verify_claim6(h, d);
  const Observation7Report o7 = verify_observation7(h, d);
  std::cout << "decomposition: " << a.triangles << " triangles, " << a.paths << " 2-paths, " << a.k4s
            << " K4s over " << a.shadow_edges << " shadow edges\n";
  std::cout << "alpha1 = " << to_string(a.alpha1) << ", alpha2 = " << to_string(a.alpha2)
            << ", alpha_K4 = " << to_string(a.alpha_k4) << '\n';
  std::cout << "hyperedge count identity: |H| = " << to_string(c6.hyperedges) << ", predicted " << to_string(c6.predicted)
            << (c6.holds ? " (holds)" : " (FAILS)") << '\n';
  std::cout << "element shape checks: " << (o7.holds() ? "holds" : "FAILS");
  for (const auto& v : o7.violations) std::cout << "\n  element " << v.element << ": " << v.reason;
  std::cout << '\n';
}

void print_witness(const Hypergraph3& h, const BergeWitness& w) {
  std::cout << "witness vertices:";
  for (Vertex v : w.vmap) std::cout << ' ' << v;
  std::cout << "\nwitness hyperedges:";
  for (EdgeId id : w.emap) {
    const Triple& t = h.edge(id);
    std::cout << " {" << t[0] << ',' << t[1] << ',' << t[2] << '}';
  }
  std::cout << '\n';
}

int cmd_analyze(const std::string& path, bool json) {
  Stopwatch clock;
  const Input in = load(path);
  const Hypergraph3& h = in.file.hypergraph;
  const ShadowGraph g = shadow(h);
  const DegreeReport deg = degrees(h);
  const auto c5 = contains_berge_cycle(h, 5);
  bool ok = pair_index_consistent(h);
  const bool lower = std::all_of(deg.lower_holds.begin(), deg.lower_holds.end(), [](bool b) { return b; });
  const bool upper = std::all_of(deg.upper_holds.begin(), deg.upper_holds.end(), [](bool b) { return b; });
  ok = ok && lower;
  std::vector<InequalityReport> reports{blakley_roy_check(g)};

  Json j = envelope("analyze");
  add_input(j, in.path, in.bytes, in.file);
  j["shadow"] = Json{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
  j["degrees"] = Json{{"average_degree", rational_json(deg.average_degree)},
                      {"average_shadow_degree", rational_json(deg.average_shadow_degree)},
                      {"lower_sandwich_holds", lower},
                      {"upper_sandwich_holds", upper}};
  j["c5_free"] = !c5.has_value();
  if (c5) j["c5_witness"] = witness_json(h, *c5);

  std::optional<Decomposition> d;
  if (!c5) {
    ok = ok && upper;
    const auto bs = blocks(h);
    j["blocks"] = blocks_json(h, bs);
    d = decompose(h);
    bool dec_ok = false;
    j["decomposition"] = decomposition_json(h, *d, dec_ok);
    ok = ok && dec_ok;
    const auto more = run_verifiers(h, split_claims("all"));
    reports.erase(reports.begin());  // the battery repeats the Blakley-Roy check
    reports.insert(reports.end(), more.begin(), more.end());
  }
  ok = ok && summarize(reports).ok();
  j["checks"] = reports_json(reports);
  j["holds"] = ok;
  j["timing"] = Json{{"seconds", clock.seconds()}};

  if (json) {
    emit(j);
  } else {
    std::cout << in.path << ": n = " << h.vertex_count() << ", |H| = " << h.edge_count()
              << ", |G| = " << g.edge_count() << '\n';
    std::cout << "average degree " << to_string(deg.average_degree) << ", average shadow degree "
              << to_string(deg.average_shadow_degree) << '\n';
    std::cout << "Berge-C5-free: " << yes_no(!c5) << '\n';
    if (c5) print_witness(h, *c5);
    if (d) {
      std::cout << "blocks: " << j["blocks"].size() << '\n';
      print_decomposition(h, *d);
    }
    print_summary("checks", reports);
    std::cout << "result: " << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kPass : kCheckFailed;
}

int cmd_check(const std::string& path, const std::string& pattern, bool json) {
  Stopwatch clock;
  PatternGraph f;
  try {
    f = PatternGraph::parse(pattern);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const Input in = load(path);
  const Hypergraph3& h = in.file.hypergraph;
  const auto w = contains_berge(h, f);
  if (json) {
    Json j = envelope("check");
    add_input(j, in.path, in.bytes, in.file);
    j["pattern"] = f.name;
    j["contains"] = w.has_value();
    if (w) j["witness"] = witness_json(h, *w);
    j["timing"] = Json{{"seconds", clock.seconds()}};
    emit(j);
  } else {
    std::cout << in.path << ": " << (w ? "contains" : "is free of") << " Berge-" << f.name << '\n';
    if (w) print_witness(h, *w);
  }
  return w ? kCheckFailed : kPass;
}

int cmd_structure(const std::string& path, bool json) {
  Stopwatch clock;
  const Input in = load(path);
  const Hypergraph3& h = in.file.hypergraph;
  const PairClass pc = classify_pairs(h);
  const auto thin = thin_hyperedges(h);
  const auto bs = blocks(h);
  Json j = envelope("structure");
  add_input(j, in.path, in.bytes, in.file);
  j["pairs"] = Json{{"thin", pc.thin_count}, {"fat", pc.fat_count}};
  j["thin_hyperedges"] = thin;
  try {
    j["blocks"] = blocks_json(h, bs);
  } catch (const UnclassifiableCore& e) {
    j["error"] = e.what();
    j["block"] = e.block();
    if (e.c5_witness()) j["c5_witness"] = witness_json(h, *e.c5_witness());
    j["timing"] = Json{{"seconds", clock.seconds()}};
    if (json) {
      emit(j);
    } else {
      std::cout << "unclassifiable core: " << e.what() << '\n';
      if (e.c5_witness()) print_witness(h, *e.c5_witness());
    }
    return kCheckFailed;
  }
  j["timing"] = Json{{"seconds", clock.seconds()}};
  if (json) {
    emit(j);
  } else {
    std::cout << in.path << ": " << pc.thin_count << " thin pairs, " << pc.fat_count << " fat pairs, "
              << thin.size() << " thin hyperedges, " << bs.size() << " blocks\n";
    for (std::size_t i = 0; i < bs.size(); ++i) {
      const Json& core = j["blocks"][i]["core"];
      std::cout << "block " << i << ": " << bs[i].edges.size() << " hyperedges, core "
                << core["shape"].get<std::string>() << " (" << core["core_edges"].size()
                << " hyperedges)\n";
    }
  }
  return kPass;
}

int cmd_decompose(const std::string& path, bool json) {
  Stopwatch clock;
  const Input in = load(path);
  const Hypergraph3& h = in.file.hypergraph;
  Json j = envelope("decompose");
  add_input(j, in.path, in.bytes, in.file);
  try {
    const Decomposition d = decompose(h);
    bool ok = false;
    j["decomposition"] = decomposition_json(h, d, ok);
    j["holds"] = ok;
    j["timing"] = Json{{"seconds", clock.seconds()}};
    if (json) {
      emit(j);
    } else {
      for (const auto& e : d.elements) {
        std::cout << to_string(e.kind);
        for (Vertex v : e.vertices) std::cout << ' ' << v;
        std::cout << '\n';
      }
      print_decomposition(h, d);
    }
    return ok ? kPass : kCheckFailed;
  } catch (const DecompositionError& e) {
    j["error"] = e.what();
    if (e.c5_witness()) j["c5_witness"] = witness_json(h, *e.c5_witness());
    j["holds"] = false;
    j["timing"] = Json{{"seconds", clock.seconds()}};
    if (json) {
      emit(j);
    } else {
      std::cout << "decomposition failed: " << e.what() << '\n';
      if (e.c5_witness()) print_witness(h, *e.c5_witness());
    }
    return kCheckFailed;
  }
}

int cmd_verify(const std::string& path, const std::string& claims, bool json) {
  Stopwatch clock;
  const auto which = split_claims(claims);
  const Input in = load(path);
  const Hypergraph3& h = in.file.hypergraph;
  Json j = envelope("verify");
  add_input(j, in.path, in.bytes, in.file);
  if (const auto c5 = contains_berge_cycle(h, 5)) {
    j["error"] = "input contains a Berge-C5; the claims assume C5-free input";
    j["c5_witness"] = witness_json(h, *c5);
    if (json) {
      emit(j);
    } else {
      std::cerr << "error: " << path << " contains a Berge-C5; the claims assume C5-free input\n";
      print_witness(h, *c5);
    }
    return kInputError;
  }
  const auto reports = run_verifiers(h, which);
  const Summary s = summarize(reports);
  j["reports"] = reports_json(reports);
  j["holds"] = s.ok();
  j["timing"] = Json{{"seconds", clock.seconds()}};
  if (json) {
    emit(j);
  } else {
    for (const std::string& c : which) {
      std::vector<InequalityReport> mine;
      for (const auto& r : reports) {
        if (r.claim == c || (c == "12" && r.claim == "blakley-roy")) mine.push_back(r);
      }
      if (c == "10") {
        for (const auto& r : mine) {
          std::cout << "peeled max shadow degree (report only): " << to_string(r.lhs) << " vs "
                    << r.rhs << " = " << r.rhs_value << '\n';
        }
        continue;
      }
      print_summary(c + ": " + claim_title(c), mine);
    }
    std::cout << "result: " << (s.ok() ? "PASS" : "FAIL") << '\n';
  }
  return s.ok() ? kPass : kCheckFailed;
}

int cmd_bound(double step, const std::string& svg_path, bool json) {
  if (!(step > 0.0 && step <= 0.1)) throw InputError("--grid must lie in (0, 0.1]");
  Stopwatch clock;
  const BoundCurve c = maximize_bound(step);
  const double seconds = clock.seconds();
  if (!svg_path.empty()) {
    std::ofstream out(svg_path);
    if (!out) throw InputError("cannot write " + svg_path);
    out << bound_heatmap_svg(c);
  }
  const bool ok = c.error_bound <= 1e-6 && c.half_lower_bound_holds;
  if (json) {
    Json j = envelope("bound");
    j["curve"] = bound_json(c);
    if (!svg_path.empty()) j["svg"] = svg_path;
    j["holds"] = ok;
    j["timing"] = Json{{"seconds", seconds}};
    emit(j);
  } else {
    std::cout.precision(10);
    std::cout << "maximum " << c.maximum << " at (" << c.alpha1 << ", " << c.alpha2 << ")\n";
    std::cout << "certified upper bound " << c.upper_bound << " (error " << c.error_bound << ")\n";
    std::cout << "grid step " << c.step << ": " << c.grid_points << " points, best " << c.grid_maximum
              << " at (" << c.grid_alpha1 << ", " << c.grid_alpha2 << ")\n";
    std::cout << "(5a1 + 3a2 + 3)/6 >= 1/2 on the grid: " << yes_no(c.half_lower_bound_holds) << '\n';
  }
  return ok ? kPass : kCheckFailed;
}

void write_output(const std::string& path, const Hypergraph3& h, const std::vector<std::string>& comments) {
  if (path.empty() || path == "-") {
    write_h3(std::cout, h, comments);
  } else {
    write_h3_file(path, h, comments);
  }
}

int cmd_construct(unsigned q, const std::string& out, bool verify, bool json) {
  Stopwatch clock;
  BipartiteGraph g0;
  try {
    g0 = incidence_c4free_bipartite(q);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const Hypergraph3 h = bollobas_gyori(g0);
  std::optional<bool> c5_free;
  if (verify) c5_free = is_c5_free(h);
  const double n = static_cast<double>(h.vertex_count());
  const double normalized = static_cast<double>(h.edge_count()) / std::pow(n, 1.5);
  const std::vector<std::string> comments{
      " Bollobas-Gyori construction from the point-line incidence graph of PG(2," + std::to_string(q) + ")",
      " " + bollobas_gyori_layout(g0)};
  const bool to_stdout = out.empty() || out == "-";
  if (!to_stdout || !json) write_output(out, h, comments);
  const bool ok = !c5_free || *c5_free;
  if (json) {
    Json j = envelope("construct");
    j["q"] = q;
    j["n"] = h.vertex_count();
    j["m"] = h.edge_count();
    j["incidence_edges"] = g0.edge_count();
    j["layout"] = bollobas_gyori_layout(g0);
    if (c5_free) j["c5_free"] = *c5_free;
    j["m_over_n_three_halves"] = normalized;
    j["limit"] = 1.0 / (3.0 * std::sqrt(3.0));
    if (!to_stdout) j["output"] = out;
    j["timing"] = Json{{"seconds", clock.seconds()}};
    emit(j);
  } else if (!to_stdout) {
    std::cout << "wrote " << out << ": n = " << h.vertex_count() << ", |H| = " << h.edge_count()
              << ", |H|/n^(3/2) = " << normalized;
    if (c5_free) std::cout << ", Berge-C5-free: " << yes_no(*c5_free);
    std::cout << '\n';
  }
  return ok ? kPass : kCheckFailed;
}

int cmd_gen(std::size_t n, std::uint64_t seed, const std::string& out) {
  Hypergraph3 h;
  try {
    h = random_c5free(n, seed);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  write_output(out, h,
               {" greedy maximal Berge-C5-free hypergraph, n=" + std::to_string(n) + " seed=" +
                std::to_string(seed)});
  if (!out.empty() && out != "-") {
    std::cout << "wrote " << out << ": n = " << n << ", |H| = " << h.edge_count() << '\n';
  }
  return kPass;
}

std::chrono::milliseconds parse_budget(const std::string& text) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw InputError("bad budget '" + text + "'");
  }
  const std::string unit = text.substr(pos);
  double ms = 0.0;
  if (unit.empty() || unit == "s") {
    ms = value * 1e3;
  } else if (unit == "ms") {
    ms = value;
  } else if (unit == "m" || unit == "min") {
    ms = value * 6e4;
  } else if (unit == "h") {
    ms = value * 3.6e6;
  } else {
    throw InputError("bad budget unit '" + unit + "' (use ms, s, m or h)");
  }
  if (ms < 0) throw InputError("budget must be non-negative");
  return std::chrono::milliseconds(static_cast<long long>(ms));
}

int cmd_search(std::size_t n, const std::string& budget, const std::string& out, bool json) {
  if (n > 8) throw InputError("search supports n <= 8");
  SearchOptions opts;
  opts.budget = parse_budget(budget);
  const SearchResult r = search_extremal(n, opts);
  if (!out.empty()) {
    write_output(out, r.witness,
                 {" C5-free witness found by exhaustive search, n=" + std::to_string(n) + " m=" +
                  std::to_string(r.m) + (r.exact ? " (extremal)" : " (lower bound)")});
  }
  const double cap = std::sqrt(2.0) * std::pow(static_cast<double>(n), 1.5) + 4.5 * static_cast<double>(n);
  if (json) {
    Json j = envelope("search");
    j["result"] = search_json(r);
    j["upper_bound_check"] = Json{{"bound", cap}, {"holds", static_cast<double>(r.m) <= cap}};
    j["timing"] = Json{{"seconds", r.elapsed_seconds}};
    emit(j);
  } else {
    std::cout << "n = " << n << ": " << (r.exact ? "ex_3(n, C5) = " : "ex_3(n, C5) >= ") << r.m << '\n';
    std::cout << "greedy lower bound " << r.lower_bound << ", " << r.subproblems << " subproblems, "
              << r.nodes << " nodes, " << r.elapsed_seconds << " s\n";
    std::cout << "witness:";
    for (const Triple& t : r.witness.edges()) std::cout << " {" << t[0] << ',' << t[1] << ',' << t[2] << '}';
    std::cout << '\n';
  }
  return kPass;
}

}  // namespace
}  // namespace berge5::cli

int main(int argc, char** argv) {
  using namespace berge5::cli;
  CLI::App app{"Analysis tools for Berge-C5-free 3-uniform hypergraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  std::size_t threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: $BERGE_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  app.fallthrough();

  std::string file;
  bool json = false;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, ".h3 hypergraph file")->required();
    sub->add_flag("--json", json, "Emit a JSON report");
  };

  auto* analyze = app.add_subcommand("analyze", "Full report: shadow, structure, decomposition, claims");
  add_file(analyze);

  std::string pattern = "c5";
  auto* check = app.add_subcommand("check", "Test for a Berge copy of a pattern (exit 1 if found)");
  add_file(check);
  check->add_option("--pattern", pattern, "cN, kN or path:N")->capture_default_str();

  auto* structure = app.add_subcommand("structure", "Thin/fat pairs, blocks and core shapes");
  add_file(structure);

  auto* decomp = app.add_subcommand("decompose", "Shadow edge decomposition and its identities");
  add_file(decomp);

  std::string claims = "all";
  auto* verify = app.add_subcommand("verify", "Check the counting inequalities on a C5-free input");
  add_file(verify);
  verify->add_option("--claims", claims, "all or a comma list of 8, nbhd, 9, 10, 12, 13, 14, 15")
      ->capture_default_str();

  double step = 1e-3;
  std::string svg;
  auto* bound = app.add_subcommand("bound", "Maximize the final bound over the simplex");
  bound->add_option("--grid", step, "Grid step in (0, 0.1]")->capture_default_str();
  bound->add_option("--svg", svg, "Write a heatmap of the bound function");
  bound->add_flag("--json", json, "Emit a JSON report");

  unsigned q = 2;
  std::string out;
  bool no_verify = false;
  auto* construct = app.add_subcommand("construct", "Bollobas-Gyori hypergraph from PG(2, q)");
  construct->add_option("--q", q, "Prime q <= 13")->required();
  construct->add_option("-o,--output", out, "Output .h3 file (default stdout)");
  construct->add_flag("--no-verify", no_verify, "Skip the Berge-C5 check");
  construct->add_flag("--json", json, "Emit a JSON report");

  std::size_t n = 0;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Greedy random maximal Berge-C5-free hypergraph");
  gen->add_option("--n", n, "Number of vertices (<= 40)")->required();
  gen->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  gen->add_option("-o,--output", out, "Output .h3 file (default stdout)");

  std::string budget = "0";
  auto* search = app.add_subcommand("search", "Exact ex_3(n, C5) by branch and bound");
  search->add_option("--n", n, "Number of vertices (<= 8)")->required();
  search->add_option("--budget", budget, "Time limit such as 60s, 500ms, 10m (0: none)")
      ->capture_default_str();
  search->add_option("-o,--output", out, "Write the witness as .h3");
  search->add_flag("--json", json, "Emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  if (threads > 0) berge5::set_thread_count(threads);

  try {
    if (*analyze) return cmd_analyze(file, json);
    if (*check) return cmd_check(file, pattern, json);
    if (*structure) return cmd_structure(file, json);
    if (*decomp) return cmd_decompose(file, json);
    if (*verify) return cmd_verify(file, claims, json);
    if (*bound) return cmd_bound(step, svg, json);
    if (*construct) return cmd_construct(q, out, !no_verify, json);
    if (*gen) return cmd_gen(n, seed, out);
    if (*search) return cmd_search(n, budget, out, json);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
