#include "l2poly/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace l2poly::cli {

using nlohmann::json;

namespace {

// --- instance files ------------------------------------------------------

int get_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
  return j.get<int>();
}

Integer get_integer(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ParseError(what + " must be an integer");
}

ExtInt get_bound(const json& j, const ExtInt& missing, const std::string& what) {
  if (j.is_null()) return missing;
  return get_integer(j, what);
}

int get_index(const json& j, int n, const std::string& what) {
  int v = get_int(j, what);
  if (v < 1 || v > n) throw ParseError(what + " = " + std::to_string(v) + " is outside 1.." + std::to_string(n));
  return v - 1;
}

ExtMatrix read_triples(const json& arr, int n, const std::string& what) {
  if (!arr.is_array()) throw ParseError(what + " must be a list of [i, j, gamma] triples");
  ExtMatrix m(n, ExtInt::plus_inf());
  for (int i = 0; i < n; ++i) m(i, i) = 0;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 3) throw ParseError(what + " entries must be [i, j, gamma]");
    const int i = get_index(t[0], n, what + " i");
    const int j = get_index(t[1], n, what + " j");
    if (i == j) throw ParseError(what + " has a loop at " + std::to_string(i + 1));
    m(i, j) = std::min(m(i, j), ExtInt(get_integer(t[2], what + " gamma")));
  }
  return m;
}

LnatSystem read_lnat(const json& j, int n, const std::string& what) {
  if (!j.is_object()) throw ParseError(what + " must be an object");
  auto vec = [&](const char* key, const ExtInt& missing) {
    std::vector<ExtInt> out(static_cast<std::size_t>(n), missing);
    if (!j.contains(key)) return out;
    const json& a = j.at(key);
    if (!a.is_array() || a.size() != static_cast<std::size_t>(n))
      throw ParseError(what + "." + key + " must list " + std::to_string(n) + " entries");
    for (int i = 0; i < n; ++i) out[i] = get_bound(a[i], missing, what + "." + key);
    return out;
  };
  ExtMatrix g = read_triples(j.value("gamma", json::array()), n, what + ".gamma");
  return LnatSystem(vec("alpha", ExtInt::minus_inf()), vec("beta", ExtInt::plus_inf()), std::move(g), true);
}

Point read_point(const json& j, int n, const std::string& what) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(n))
    throw ParseError(what + " must list " + std::to_string(n) + " integers");
  Point p;
  for (const auto& v : j) p.push_back(get_integer(v, what));
  return p;
}

std::vector<int> parse_index_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() && item.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": '" + item + "' is not an index");
    }
  }
  if (out.empty()) throw ParseError(std::string(what) + " is empty");
  return out;
}

IndexSet to_index_set(const std::string& text, int n, const char* what) {
  std::vector<int> raw = parse_index_list(text, what);
  for (int v : raw)
    if (v < 1 || v > n) throw ParseError(std::string(what) + ": " + std::to_string(v) + " is outside 1.." + std::to_string(n));
  std::vector<int> sorted = raw;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ParseError(std::string(what) + " repeats an index");
  return IndexSet::from_one_based(raw);
}

Window parse_window(const std::string& text, int n) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw ParseError("--window must look like 'lo1,...,lon;hi1,...,hin'");
  auto side = [&](const std::string& s) {
    Point p;
    for (int v : parse_index_list(s, "--window")) p.emplace_back(v);
    if (p.size() != static_cast<std::size_t>(n))
      throw ParseError("--window needs " + std::to_string(n) + " coordinates per side");
    return p;
  };
  return {side(text.substr(0, semi)), side(text.substr(semi + 1))};
}

// --- output --------------------------------------------------------------

json bound_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return json(static_cast<long long>(v));
  return json(v.str());
}

json ext_json(const ExtInt& v) {
  return v.is_finite() ? bound_json(v.value()) : json(v.str());
}

json one_based(const IndexSet& s) {
  json a = json::array();
  for (int i : s) a.push_back(i + 1);
  return a;
}

json trace_json(const EliminationTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"variable", s.variable.str()},
                     {"positive", s.positive},
                     {"negative", s.negative},
                     {"zero", s.zero},
                     {"generated", s.generated},
                     {"discarded", s.discarded},
                     {"max_scale", bound_json(s.max_scale)}});
  return {{"steps", steps}, {"lattice_overapprox", t.lattice_overapprox()}};
}

json matching_json(const Assignment& a) {
  json m = json::array();
  for (const auto& [i, j] : a.matching) m.push_back({i + 1, j + 1});
  return m;
}

// --- describe ------------------------------------------------------------

// Embedded support of a sliced row: the extra coordinate joins the smaller side.
RowSupport embedded_support(const RowSupport& s, int n) {
  std::vector<int> I = s.I.indices(), J = s.J.indices();
  if (I.size() < J.size()) I.push_back(n);
  if (J.size() < I.size()) J.push_back(n);
  return {IndexSet(std::move(I)), IndexSet(std::move(J))};
}

InequalitySystem sliced(const InequalitySystem& embedded, int n) {
  InequalitySystem out(make_variables("x", n), embedded.lattice_scoped());
  for (const auto& r : embedded.rows()) {
    LinearInequality s = r;
    s.set_coeff(Variable{"x", n + 1}, 0);
    out.add(std::move(s));
  }
  return out;
}

Listing label_rows(const InequalitySystem& rows, const Instance& inst, RowShape shape) {
  const int n = inst.n;
  GraphData g(inst.graph_instance());
  Listing l;
  for (const auto& r : rows.rows()) {
    ListedRow lr{r, support_of(r, n, shape)};
    const bool redundant = is_redundant(r, rows);
    lr.label = classify_redundancy(g, inst.is_lnat() ? embedded_support(lr.support, n) : lr.support, redundant);
    l.rows.push_back(std::move(lr));
  }
  return l;
}

// --- commands ------------------------------------------------------------

struct Options {
  std::string file;
  std::string route = "fm";
  bool keep_redundant = false;
  bool json_out = false;
  std::string sidecar;
  std::string I, J;
  std::string window;
  std::string description;
  std::string which = "g1";
};

Route to_route(const std::string& s) {
  if (s == "fm") return Route::Fm;
  if (s == "pairs") return Route::Pairs;
  return Route::Cycles;
}

void cmd_describe(const Options& o, CommandResult& r) {
  Instance inst = load_instance(o.file);
  Listing l = describe(inst, to_route(o.route), o.keep_redundant);
  std::string js = listing_json(l);
  if (!o.sidecar.empty()) {
    std::ofstream f(o.sidecar);
    if (!f) throw ParseError("cannot write " + o.sidecar);
    f << js;
  }
  if (o.json_out) {
    r.out = js;
    return;
  }
  for (const auto& row : l.rows) r.out += row.row.str() + "\n";
}

void cmd_gamma(const Options& o, CommandResult& r) {
  Instance inst = load_instance(o.file);
  L2Instance g = inst.graph_instance();
  IndexSet I = to_index_set(o.I, g.dim(), "--I");
  IndexSet J = to_index_set(o.J, g.dim(), "--J");
  if (I.size() != J.size()) throw ParseError("--I and --J must have the same size");
  if (!disjoint(I, J)) throw ParseError("--I and --J must be disjoint");
  GammaIJ v = gamma_IJ(g, I, J);
  if (o.json_out) {
    json out = {{"I", one_based(I)},
                {"J", one_based(J)},
                {"lambda1", ext_json(v.first.value)},
                {"lambda2", ext_json(v.second.value)},
                {"gamma", ext_json(v.gamma)},
                {"matching1", matching_json(v.first)},
                {"matching2", matching_json(v.second)}};
    r.out = out.dump(2) + "\n";
    return;
  }
  r.out = "lambda1=" + v.first.value.str() + " lambda2=" + v.second.value.str() + " gamma=" + v.gamma.str() + "\n";
}

void cmd_verify(const Options& o, CommandResult& r) {
  Instance inst = load_instance(o.file);
  Window w;
  if (!o.window.empty())
    w = parse_window(o.window, inst.n);
  else if (inst.window)
    w = *inst.window;
  else if (inst.is_lnat() && inst.lnat->first.bounded() && inst.lnat->second.bounded())
    w = Window::for_sum(inst.lnat->first, inst.lnat->second, 1);
  else
    throw ParseError("verify needs a window for an unbounded instance");

  PointSet oracle(inst.n);
  if (inst.is_lnat()) {
    const auto& [s1, s2] = *inst.lnat;
    if (s1.bounded() && s2.bounded()) {
      for (const auto& p : minkowski_sum(points_of(s1), points_of(s2)))
        if (w.contains(p)) oracle.insert(p);
    } else {
      for_each_point(w, [&](const Point& p) {
        if (lnat2_membership(s1, s2, p)) oracle.insert(p);
      });
    }
  } else {
    oracle = enumerate_l2(*inst.l2, w);
  }

  std::ostringstream os;
  os << "window " << point_str(w.lo) << " .. " << point_str(w.hi) << "\n";
  os << "oracle " << oracle.size() << " points\n";
  if (oracle.size() <= 50)
    for (const auto& p : oracle) os << "  " << point_str(p) << "\n";

  std::vector<std::pair<std::string, InequalitySystem>> routes;
  routes.emplace_back("fm", describe(inst, Route::Fm, false).system(inst.n));
  if (inst.graph_instance().dim() <= 10) routes.emplace_back("pairs", describe(inst, Route::Pairs, false).system(inst.n));
  routes.emplace_back("cycles", describe(inst, Route::Cycles, false).system(inst.n));
  if (!o.description.empty()) {
    std::ifstream f(o.description);
    if (!f) throw ParseError("cannot read " + o.description);
    std::stringstream ss;
    ss << f.rdbuf();
    routes.emplace_back("supplied", parse_description(ss.str(), inst.n));
  }

  bool all = true;
  for (const auto& [name, sys] : routes) {
    PointSet got = enumerate(sys, w);
    if (got == oracle) {
      os << name << " agrees (" << got.size() << " points)\n";
      continue;
    }
    all = false;
    os << name << " differs: ";
    auto only_oracle = std::find_if(oracle.begin(), oracle.end(), [&](const Point& p) { return !got.contains(p); });
    if (only_oracle != oracle.end()) {
      os << point_str(*only_oracle) << " is in the sum but violates";
      for (const auto& row : sys.rows())
        if (!evaluate(row, sys.variables(), *only_oracle)) {
          os << " " << row.str();
          break;
        }
      os << "\n";
    } else {
      auto extra = std::find_if(got.begin(), got.end(), [&](const Point& p) { return !oracle.contains(p); });
      os << point_str(*extra) << " satisfies the description but is not in the sum\n";
    }
  }
  os << (all ? "PASS" : "FAIL") << "\n";
  r.out = os.str();
  r.exit_code = all ? exit_code::ok : exit_code::verify_failed;
}

void cmd_graph(const Options& o, CommandResult& r) {
  Instance inst = load_instance(o.file);
  GraphView v = GraphView::G1;
  if (o.which == "g2") v = GraphView::G2;
  if (o.which == "closure1") v = GraphView::Closure1;
  if (o.which == "closure2") v = GraphView::Closure2;
  if (o.which == "union") v = GraphView::Union;
  r.out = to_dot(inst.graph_instance(), v);
}

}  // namespace

L2Instance Instance::graph_instance() const {
  if (l2) return *l2;
  return lnat2_embedding(lnat->first, lnat->second);
}

Instance parse_instance(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  if (!j.contains("n")) throw ParseError("instance lacks n");
  Instance inst;
  inst.n = get_int(j.at("n"), "n");
  if (inst.n < 1) throw ParseError("n must be positive");

  if (j.contains("lnat")) {
    const json& l = j.at("lnat");
    if (!l.is_array() || l.size() != 2) throw ParseError("lnat must hold two summands");
    inst.lnat.emplace(read_lnat(l[0], inst.n, "lnat[0]"), read_lnat(l[1], inst.n, "lnat[1]"));
  } else {
    if (!j.contains("e1") || !j.contains("e2")) throw ParseError("instance needs e1 and e2, or lnat");
    GammaSystem g1(read_triples(j.at("e1"), inst.n, "e1"), true);
    GammaSystem g2(read_triples(j.at("e2"), inst.n, "e2"), true);
    inst.l2.emplace(std::move(g1), std::move(g2));
  }
  if (j.contains("window")) {
    const json& w = j.at("window");
    if (!w.is_object() || !w.contains("lo") || !w.contains("hi")) throw ParseError("window needs lo and hi");
    inst.window = Window{read_point(w.at("lo"), inst.n, "window.lo"), read_point(w.at("hi"), inst.n, "window.hi")};
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot read " + path);
    ss << f.rdbuf();
  }
  return parse_instance(ss.str());
}

InequalitySystem parse_description(std::string_view text, int n) {
  InequalitySystem sys(make_variables("x", n), true);
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      sys.add(parse_inequality(line));
    } catch (const std::exception& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return sys;
}

InequalitySystem Listing::system(int n) const {
  InequalitySystem sys(make_variables("x", n), true);
  for (const auto& r : rows) sys.add(r.row);
  return sys;
}

Listing describe(const Instance& inst, Route route, bool keep_redundant) {
  const int n = inst.n;
  const RowShape shape = inst.is_lnat() ? RowShape::Lnat2 : RowShape::L2;

  if (route == Route::Fm) {
    Description d = inst.is_lnat() ? lnat2_describe(inst.lnat->first, inst.lnat->second) : l2_describe_fm(*inst.l2);
    Listing l = label_rows(d.system, inst, shape);
    l.trace = std::move(d.trace);
    return l;
  }

  const GraphMode mode = route == Route::Pairs ? GraphMode::Pairs : GraphMode::Cycles;
  const L2Instance g = inst.graph_instance();
  InequalitySystem rows;
  if (keep_redundant) {
    InequalitySystem cand = graph_candidates(g, mode);
    if (inst.is_lnat()) cand = sliced(cand, n);
    if (!feasible(cand)) throw Infeasible("the description is empty");
    rows = canonicalize(cand);
  } else if (inst.is_lnat()) {
    rows = slice_last_coordinate(l2_describe_graph(g, mode).system, n).system;
  } else {
    rows = l2_describe_graph(g, mode).system;
  }
  return label_rows(rows, inst, shape);
}

std::string listing_json(const Listing& l) {
  json rows = json::array();
  for (const auto& r : l.rows)
    rows.push_back({{"text", r.row.str()},
                    {"I", one_based(r.support.I)},
                    {"J", one_based(r.support.J)},
                    {"bound", bound_json(r.row.rhs())},
                    {"label", to_string(r.label)}});
  json out = {{"rows", rows}, {"trace", trace_json(l.trace)}};
  return out.dump(2) + "\n";
}

CommandResult run(const std::vector<std::string>& args) {
  CommandResult result;
  Options o;
  CLI::App app{"Descriptions of Minkowski sums of two L-convex or L-natural-convex sets", "l2poly"};
  app.require_subcommand(1);

  auto* describe_cmd = app.add_subcommand("describe", "Print the canonical inequality description");
  describe_cmd->add_option("file", o.file, "Instance JSON file ('-' for stdin)")->required();
  describe_cmd->add_option("--route", o.route, "fm, pairs or cycles")
      ->check(CLI::IsMember({"fm", "pairs", "cycles"}));
  describe_cmd->add_flag("--keep-redundant", o.keep_redundant, "List redundant candidate rows too");
  describe_cmd->add_flag("--json", o.json_out, "Emit JSON with labels and the elimination trace");
  describe_cmd->add_option("--sidecar", o.sidecar, "Also write the JSON document to this file");

  auto* gamma_cmd = app.add_subcommand("gamma", "Bound of x(J) - x(I) with both lambda summands");
  gamma_cmd->add_option("file", o.file, "Instance JSON file")->required();
  gamma_cmd->add_option("--I", o.I, "Comma-separated 1-based indices")->required();
  gamma_cmd->add_option("--J", o.J, "Comma-separated 1-based indices")->required();
  gamma_cmd->add_flag("--json", o.json_out, "Include the optimal matchings");

  auto* verify_cmd = app.add_subcommand("verify", "Compare every route against the brute-force sum");
  verify_cmd->add_option("file", o.file, "Instance JSON file")->required();
  verify_cmd->add_option("--window", o.window, "lo1,...,lon;hi1,...,hin");
  verify_cmd->add_option("--description", o.description, "Extra description to check, one row per line");

  auto* graph_cmd = app.add_subcommand("graph", "Graphviz export of the constraint graphs");
  graph_cmd->add_option("file", o.file, "Instance JSON file")->required();
  graph_cmd->add_option("--which", o.which, "g1, g2, closure1, closure2 or union")
      ->check(CLI::IsMember({"g1", "g2", "closure1", "closure2", "union"}));

  std::vector<std::string> storage = args.empty() ? std::vector<std::string>{"l2poly"} : args;
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());

  std::ostringstream out, err;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? exit_code::ok : exit_code::parse_error;
    return result;
  }

  try {
    if (*describe_cmd) cmd_describe(o, result);
    if (*gamma_cmd) cmd_gamma(o, result);
    if (*verify_cmd) cmd_verify(o, result);
    if (*graph_cmd) cmd_graph(o, result);
  } catch (const ParseError& e) {
    result = {exit_code::parse_error, "", std::string("error: ") + e.what() + "\n"};
  } catch (const NegativeCycleError& e) {
    result = {exit_code::negative_cycle, "", std::string("error: ") + e.what() + "\n"};
  } catch (const Infeasible& e) {
    result = {exit_code::infeasible, "", std::string("error: ") + e.what() + "\n"};
  } catch (const EmptySlice& e) {
    result = {exit_code::infeasible, "", std::string("error: ") + e.what() + "\n"};
  } catch (const VolumeCapExceeded& e) {
    result = {exit_code::infeasible, "", std::string("error: ") + e.what() + "\n"};
  } catch (const SizeMismatch& e) {
    result = {exit_code::parse_error, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    result = {exit_code::verify_failed, "", std::string("error: ") + e.what() + "\n"};
  }
  return result;
}

}  // namespace l2poly::cli
