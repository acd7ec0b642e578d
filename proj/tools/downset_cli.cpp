#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "downset/graphs.hpp"

using json = nlohmann::ordered_json;
using namespace downset;

namespace {

std::vector<int> parse_lengths(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  if (out.empty()) throw std::domain_error("empty length list");
  return out;
}

RankWeight load_weight(const std::string& spec, int max_rank) {
  if (spec == "standard") return RankWeight::standard(max_rank);
  std::ifstream in(spec);
  if (!in) throw std::domain_error("cannot open weight table: " + spec);
  std::vector<double> values;
  double v;
  while (in >> v) values.push_back(v);
  if (static_cast<int>(values.size()) != max_rank + 1)
    throw std::domain_error("weight table must list one value per rank (" +
                            std::to_string(max_rank + 1) + " values)");
  return RankWeight(values);  // the constructor enforces strict increase
}

bool use_color() {
  return std::getenv("NO_COLOR") == nullptr;
}

json box_json(const PackedBox& box) {
  return json{{"lo", box.lo()}, {"hi", box.hi()}};
}

json classification_json(const RectClassification& c) {
  json j{{"kind", to_string(c.kind)}};
  if (c.box) j["box"] = box_json(*c.box);
  if (c.coords) j["coords"] = {c.coords->first, c.coords->second};
  return j;
}

json point_set_json(const PointSet& s) {
  json arr = json::array();
  for (const GridPoint& p : s) arr.push_back(p);
  return arr;
}

// ---------------------------------------------------------------------------
// optimize

struct OptimizeArgs {
  std::string shape2, triangle_l, box3;
  long long size = -1;
  std::string weight = "standard";
};

int run_optimize(const OptimizeArgs& a) {
  json cert{{"schema", "downset-cert/1"}};
  if (!a.shape2.empty()) {
    std::vector<int> ls = parse_lengths(a.shape2);
    if (ls.size() != 2) throw std::domain_error("--shape takes two lengths");
    GridShape shape(ls);
    RankWeight w = load_weight(a.weight, shape.max_rank());
    SizeOptima opt = optimal_downsets(shape, weight_fn(w), a.size);
    cert["shape"] = {{"kind", "rect"}, {"lengths", ls}};
    cert["m"] = a.size;
    cert["max_weight"] = opt.max_weight;
    json sets = json::array(), classes = json::array();
    for (const PointSet& s : opt.argmax) {
      DownSet2D ds = DownSet2D::from_points(shape, s);
      sets.push_back(ds.heights());
      json per = json::array();
      for (const RectClassification& c : classify_rect_all(shape, ds))
        per.push_back(classification_json(c));
      if (per.empty()) per.push_back(classification_json({}));
      classes.push_back(per);
    }
    cert["optimal_sets"] = sets;
    cert["classifications"] = classes;
  } else if (!a.triangle_l.empty()) {
    TriangleShape shape(std::stoi(a.triangle_l));
    RankWeight w = load_weight(a.weight, 2 * (shape.ell() - 1));
    SizeOptima opt = optimal_downsets(shape, weight_fn(w), a.size);
    cert["shape"] = {{"kind", "triangle"}, {"side", shape.ell()}};
    cert["m"] = a.size;
    cert["max_weight"] = opt.max_weight;
    json sets = json::array(), classes = json::array();
    for (const PointSet& s : opt.argmax) {
      sets.push_back(TriangleDownSet::from_points(shape, s).tops());
      classes.push_back(json::array({classification_json(classify_triangle(shape, s))}));
    }
    cert["optimal_sets"] = sets;
    cert["classifications"] = classes;
  } else if (!a.box3.empty()) {
    std::vector<int> ls = parse_lengths(a.box3);
    if (ls.size() != 3) throw std::domain_error("--box takes three lengths");
    GridShape shape(ls);
    RankWeight w = load_weight(a.weight, shape.max_rank());
    SizeOptima opt = optimal_downsets(shape, weight_fn(w), a.size);
    cert["shape"] = {{"kind", "box"}, {"lengths", ls}};
    cert["m"] = a.size;
    cert["max_weight"] = opt.max_weight;
    json sets = json::array();
    for (const PointSet& s : opt.argmax) sets.push_back(point_set_json(s));
    cert["optimal_sets"] = sets;
    cert["classifications"] = json::array();
  } else {
    throw std::domain_error("one of --shape / --triangle / --box is required");
  }
  std::cout << cert.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct Cell {
  std::string label;
  std::function<bool()> run;
};

std::vector<char> run_cells(const std::vector<Cell>& cells, int jobs) {
  std::vector<char> results(cells.size(), 0);
  if (jobs < 1) jobs = 1;
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      results[i] = cells[i].run() ? 1 : 0;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return results;
}

bool rect_structure_cell(int l1, int l2) {
  GridShape shape({l1, l2});
  WeightFn w = weight_fn(RankWeight::standard(shape));
  for (const SizeOptima& opt : optimal_downsets_by_size(shape, w)) {
    for (const PointSet& s : opt.argmax) {
      DownSet2D ds = DownSet2D::from_points(shape, s);
      if (classify_rect(shape, ds).kind == SegmentKind::Unstructured) return false;
    }
  }
  return true;
}

bool exact_criteria_cell(int l1, int l2) {
  GridShape shape({l1, l2});
  WeightFn w = weight_fn(RankWeight::standard(shape));
  auto by_size = optimal_downsets_by_size(shape, w);
  for (long long m = 0; m <= shape.size(); ++m) {
    double max_w = by_size[static_cast<size_t>(m)].max_weight;
    DownSet2D colex = initial_segment_2d(shape, DominationOrder::colex(2), m);
    DownSet2D lex = initial_segment_2d(shape, DominationOrder::lex(2), m);
    RankWeight rw = RankWeight::standard(shape);
    if (colex_segment_is_optimal(l1, l2, m) != weight_eq(colex.weight(rw), max_w))
      return false;
    if (lex_segment_is_optimal(l1, l2, m) != weight_eq(lex.weight(rw), max_w))
      return false;
  }
  return true;
}

bool triangle_structure_cell(int ell) {
  TriangleShape shape(ell);
  RankWeight rw = RankWeight::standard(2 * (ell - 1));
  auto by_size = optimal_downsets_by_size(shape, weight_fn(rw));
  for (long long m = 0; m <= shape.size(); ++m) {
    const SizeOptima& opt = by_size[static_cast<size_t>(m)];
    if (!weight_eq(opt.max_weight, best_segment_weight(shape, rw, m).weight))
      return false;
    for (const PointSet& s : opt.argmax) {
      if (classify_triangle(shape, s).kind == SegmentKind::Unstructured) return false;
    }
  }
  return true;
}

bool nested_unique_cell(int l1, int l2) {
  GridShape shape({l1, l2});
  RankWeight rw = RankWeight::standard(shape);
  auto by_size = optimal_downsets_by_size(shape, weight_fn(rw));
  NestedChainResult res = nested_chain(by_size);
  if (l1 == l2 || l1 == 1 || l2 == 1) {
    // Both the lex and colex chains must consist of per-size optima.
    if (!res.exists) return false;
    for (long long m = 0; m <= shape.size(); ++m) {
      for (const DominationOrder& o :
           {DominationOrder::lex(2), DominationOrder::colex(2)}) {
        double w = initial_segment_2d(shape, o, m).weight(rw);
        if (!weight_eq(w, by_size[static_cast<size_t>(m)].max_weight)) return false;
      }
    }
    return true;
  }
  if (!res.exists || res.full_chain_count != 1) return false;
  const DominationOrder winner =
      l1 < l2 ? DominationOrder::lex(2) : DominationOrder::colex(2);
  for (long long m = 0; m <= shape.size(); ++m) {
    if (res.chain[static_cast<size_t>(m)] != initial_segment(shape, winner, m))
      return false;
  }
  return true;
}

int run_verify(const std::string& theorem, int lmax, int n, int jobs,
               const std::string& format) {
  std::vector<Cell> cells;
  if (theorem == "rect-structure") {
    for (int l1 = 1; l1 <= lmax; ++l1)
      for (int l2 = 1; l2 <= lmax; ++l2)
        cells.push_back({std::to_string(l1) + "x" + std::to_string(l2),
                         [l1, l2] { return rect_structure_cell(l1, l2); }});
  } else if (theorem == "exact-criteria") {
    for (int l1 = 1; l1 <= lmax; ++l1)
      for (int l2 = 1; l2 <= lmax; ++l2)
        cells.push_back({std::to_string(l1) + "x" + std::to_string(l2),
                         [l1, l2] { return exact_criteria_cell(l1, l2); }});
  } else if (theorem == "triangle-structure") {
    for (int l = 1; l <= lmax; ++l)
      cells.push_back({"triangle-" + std::to_string(l),
                       [l] { return triangle_structure_cell(l); }});
  } else if (theorem == "nested-unique") {
    for (int l1 = 1; l1 <= lmax; ++l1)
      for (int l2 = 1; l2 <= lmax; ++l2)
        cells.push_back({std::to_string(l1) + "x" + std::to_string(l2),
                         [l1, l2] { return nested_unique_cell(l1, l2); }});
  } else if (theorem == "ak") {
    long long top = static_cast<long long>(n) * (n - 1) / 2;
    for (long long m = 0; m <= top; ++m)
      cells.push_back({"m=" + std::to_string(m),
                       [n, m] { return ak_optimum(n, m) == ak_bruteforce(n, m); }});
  } else if (theorem == "lindsay") {
    for (std::vector<int> dims : {std::vector<int>{3, 4}, std::vector<int>{3, 5}}) {
      std::string label = "K" + std::to_string(dims[0]) + "xK" + std::to_string(dims[1]);
      cells.push_back({label, [dims] { return lindsay_check(dims).all_agree; }});
    }
  } else if (theorem == "local-global") {
    cells.push_back({"M(" + std::to_string(n) + ")^3",
                     [n] { return verify_local_global(n, 3).all_agree; }});
  } else {
    throw std::domain_error("unknown theorem: " + theorem);
  }

  std::vector<char> results = run_cells(cells, jobs);
  int failures = 0;
  if (format == "json") {
    json out{{"schema", "downset-cert/1"}, {"theorem", theorem}};
    json rows = json::array();
    for (size_t i = 0; i < cells.size(); ++i) {
      rows.push_back({{"cell", cells[i].label}, {"pass", results[i] != 0}});
      failures += results[i] ? 0 : 1;
    }
    out["cells"] = rows;
    out["all_pass"] = failures == 0;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "cell,result\r\n";
    for (size_t i = 0; i < cells.size(); ++i) {
      std::cout << cells[i].label << "," << (results[i] ? "PASS" : "FAIL") << "\r\n";
      failures += results[i] ? 0 : 1;
    }
  }
  if (failures == 0) {
    std::cerr << (use_color() ? "\033[32mall cells pass\033[0m" : "all cells pass")
              << "\n";
    return 0;
  }
  std::cerr << (use_color() ? "\033[31m" : "") << failures << " cell(s) failed"
            << (use_color() ? "\033[0m" : "") << "\n";
  return 1;
}

// ---------------------------------------------------------------------------
// table

int run_table(int ak_n, const std::string& delta_spec) {
  if (ak_n > 0) {
    long long top = static_cast<long long>(ak_n) * (ak_n - 1) / 2;
    TriangleShape tri(ak_n - 1);
    RankWeight rw = RankWeight::standard(2 * (ak_n - 2));
    std::cout << "m,P,argmax\r\n";
    for (long long m = 0; m <= top; ++m) {
      BestSegment best = best_segment_weight(tri, rw, m);
      const char* kinds = best.which == BestSegment::Which::Both ? "lex|colex"
                          : best.which == BestSegment::Which::Lex ? "lex"
                                                                  : "colex";
      std::cout << m << "," << ak_optimum(ak_n, m) << "," << kinds << "\r\n";
    }
    return 0;
  }
  if (!delta_spec.empty()) {
    if (delta_spec.size() < 2)
      throw std::domain_error("graph spec: K<n> or C<n>");
    int n = std::stoi(delta_spec.substr(1));
    SimpleGraph g;
    if (delta_spec[0] == 'K') g = complete_graph(n);
    else if (delta_spec[0] == 'C') g = cycle_graph(n);
    else throw std::domain_error("graph spec: K<n> or C<n>");
    std::vector<int> order(g.n);
    for (int v = 0; v < g.n; ++v) order[v] = v;
    DeltaSequence d = delta_sequence(g, order);
    std::cout << "i,delta\r\n";
    for (size_t i = 0; i < d.values.size(); ++i)
      std::cout << i + 1 << "," << d.values[i] << "\r\n";
    return 0;
  }
  throw std::domain_error("one of --ak / --delta is required");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximum-weight downsets: certificates, verification, tables"};
  app.require_subcommand(1);

  OptimizeArgs oa;
  CLI::App* optimize = app.add_subcommand("optimize", "emit a JSON optimality certificate");
  auto* g = optimize->add_option_group("shape");
  g->add_option("--shape", oa.shape2, "rectangle lengths l1,l2");
  g->add_option("--triangle", oa.triangle_l, "triangle side l");
  g->add_option("--box", oa.box3, "3D box lengths l1,l2,l3");
  g->require_option(1);
  optimize->add_option("--size", oa.size, "downset cardinality m")->required();
  optimize->add_option("--weight", oa.weight, "standard | path to a weight table file");

  std::string theorem, format = "csv";
  int lmax = 6, vn = 5, jobs = static_cast<int>(std::thread::hardware_concurrency());
  CLI::App* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->add_option("--theorem", theorem,
                     "rect-structure|exact-criteria|triangle-structure|nested-unique|"
                     "ak|lindsay|local-global")
      ->required();
  verify->add_option("--lmax", lmax, "largest side length in the campaign");
  verify->add_option("--n", vn, "parameter n for ak / local-global");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  int ak_n = 0;
  std::string delta_spec;
  CLI::App* table = app.add_subcommand("table", "emit CSV tables");
  table->add_option("--ak", ak_n, "P_n(m) table for the given n");
  table->add_option("--delta", delta_spec, "delta sequence of K<n> or C<n>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (optimize->parsed()) return run_optimize(oa);
    if (verify->parsed()) return run_verify(theorem, lmax, vn, jobs, format);
    return run_table(ak_n, delta_spec);
  } catch (const resource_error& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
