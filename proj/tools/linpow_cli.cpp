// linpow: command line front end for the linpow library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linpow/linpow.hpp"

using namespace linpow;

namespace {

constexpr int kInputError = 3;

struct Options {
  std::vector<std::string> fields;
  unsigned kmax = 3;
  unsigned cap = 3;
  std::uint64_t budget = 1'000'000;
  std::string format = "text";
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::size_t nvars = 0;

  RunConfig config() const {
    RunConfig c;
    if (!fields.empty()) {
      c.fields.clear();
      for (const auto& f : fields) c.fields.push_back(FieldSpec::parse(f));
    }
    c.kmax = kmax;
    c.cap = cap;
    c.budget = budget;
    c.format = parse_format(format);
    c.jobs = jobs;
    c.seed = seed;
    c.validate();
    set_default_jobs(c.jobs);
    return c;
  }
};

std::string slurp(const std::string& path) {
  std::ostringstream os;
  if (path.empty() || path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    os << in.rdbuf();
  }
  return os.str();
}

MonomialIdeal read_ideal(const std::string& path, std::size_t nvars) { return parse_ideal(slurp(path), nvars); }
Graph read_graph(const std::string& path) { return parse_graph(slurp(path)); }

std::vector<std::size_t> parse_index_list(const std::string& s, std::size_t limit) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t v = detail::parse_uint(detail::trim(tok), "index");
    if (v == 0 || v > limit) throw std::invalid_argument("index " + tok + " out of range");
    out.push_back(v - 1);
  }
  return out;
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

void print_text(const Json& j) {
  for (auto& [k, v] : j.items()) std::cout << k << ' ' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

int cmd_betti(const Options& o, const std::string& file) {
  auto cfg = o.config();
  auto I = read_ideal(file, o.nvars);
  Json all = Json::array();
  for (auto K : cfg.fields) {
    auto t = graded_betti(I, K);
    if (cfg.format == OutputFormat::json) {
      all.push_back(betti_to_json(t));
    } else {
      write_betti_text(std::cout, t);
      std::cout << betti_diagram(t);
    }
  }
  if (cfg.format == OutputFormat::json) print_json(all);
  return 0;
}

int cmd_reg(const Options& o, const std::string& file, bool linres) {
  auto cfg = o.config();
  auto I = read_ideal(file, o.nvars);
  Json j = Json::object();
  for (auto K : cfg.fields) {
    if (linres) {
      bool v = has_linear_resolution(I, K);
      j[K.name()] = v;
      if (cfg.format != OutputFormat::json) std::cout << K.name() << ' ' << (v ? "true" : "false") << '\n';
    } else {
      int v = regularity(I, K);
      j[K.name()] = v;
      if (cfg.format != OutputFormat::json) std::cout << K.name() << ' ' << v << '\n';
    }
  }
  if (cfg.format == OutputFormat::json) print_json(j);
  return 0;
}

int cmd_lq_verify(const Options& o, const std::string& file, const std::string& order) {
  auto cfg = o.config();
  auto I = read_ideal(file, o.nvars);
  GeneratorOrder ord = order.empty() ? identity_order(I.size()) : parse_index_list(order, I.size());
  auto v = verify_lq_order(I, ord);
  if (cfg.format == OutputFormat::json) {
    Json j{{"ok", v.ok}, {"equigenerated", v.equigenerated}, {"order", format_order(ord)}};
    if (!v.ok) {
      j["position"] = v.failing_position;
      j["witness"] = to_string(*v.witness);
    }
    print_json(j);
  } else {
    if (!v.equigenerated) std::cerr << "warning: ideal is not equigenerated\n";
    if (v.ok)
      std::cout << "linear quotients: yes\norder " << format_order(ord) << '\n';
    else
      std::cout << "linear quotients: no\nposition " << v.failing_position << "\ncolon generator " << *v.witness << '\n';
  }
  return v.ok ? 0 : 1;
}

int cmd_lq_search(const Options& o, const std::string& file) {
  auto cfg = o.config();
  auto I = read_ideal(file, o.nvars);
  auto r = find_lq_order(I, cfg.budget);
  if (cfg.format == OutputFormat::json) {
    Json j{{"status", to_string(r.status)}, {"nodes", r.nodes}};
    if (r.order) j["order"] = format_order(*r.order);
    print_json(j);
  } else {
    std::cout << to_string(r.status) << " (" << r.nodes << " nodes)\n";
    if (r.order) {
      std::cout << "order " << format_order(*r.order) << '\n';
      for (auto i : *r.order) std::cout << I[i] << '\n';
    }
  }
  return r.status == SearchStatus::budget_exhausted ? 2 : 0;
}

void emit_ideal(const Options& o, const MonomialIdeal& I) {
  if (o.format == "json") {
    Json gens = Json::array();
    for (const auto& u : I.generators()) gens.push_back(to_string(u));
    print_json({{"variables", I.ambient()}, {"generators", gens}});
  } else {
    write_ideal(std::cout, I);
  }
}

int cmd_graph(const Options& o, const std::string& what, const std::string& file) {
  auto cfg = o.config();
  Graph G = read_graph(file);
  if (what == "edge") {
    emit_ideal(o, edge_ideal(G));
    return 0;
  }
  if (what == "comp") {
    emit_ideal(o, complementary_edge_ideal(G));
    return 0;
  }
  if (what == "label") {
    auto order = complementary_priority(G);
    bool ok = is_connected_elimination(G, order, G.all_vertices() & ~isolated_vertices(G));
    std::cout << "labeling " << format_order(order) << "\nconnected after each deletion: " << (ok ? "yes" : "no") << '\n';
    return ok ? 0 : 1;
  }
  if (what == "thmA") {
    auto r = theoremA_verify(G, cfg.kmax, cfg.budget);
    Json j{{"linres_Q", r.linres_q},
           {"linres_F2", r.linres_f2},
           {"chordal_complement", r.chordal_complement},
           {"lq_depth", r.lq_depth()},
           {"equivalence", r.equivalence_holds()}};
    if (cfg.format == OutputFormat::json)
      print_json(j);
    else
      print_text(j);
    if (!r.equivalence_holds()) return r.inconclusive() ? 2 : 1;
    return 0;
  }
  if (what == "thmB") {
    auto r = theoremB_verify(G, cfg.kmax);
    Json j{{"c", r.c},
           {"linres_Q", r.linres_q},
           {"linres_F2", r.linres_f2},
           {"lq_depth", r.lq_depth()},
           {"equivalence", r.equivalence_holds()}};
    if (!r.priority.empty()) j["labeling"] = format_order(r.priority);
    if (cfg.format == OutputFormat::json)
      print_json(j);
    else
      print_text(j);
    return r.equivalence_holds() ? 0 : 1;
  }
  throw std::invalid_argument("unknown graph command " + what);
}

struct ReesArgs {
  std::string file;
  std::string graph;
  std::string kind = "lex";
  std::string block = "x";
  std::string x_priority;
  std::string y_priority;
};

int cmd_rees(const Options& o, const std::string& what, const ReesArgs& a) {
  auto cfg = o.config();
  MonomialIdeal I = a.graph.empty() ? read_ideal(a.file, o.nvars) : complementary_edge_ideal(read_graph(a.graph));
  ReesPresentation P(I);
  OrderSpec spec;
  if (!a.graph.empty() && a.x_priority.empty() && a.kind == "lex" && a.block == "x") {
    spec = complementary_x_order(read_graph(a.graph));
  } else {
    spec = OrderSpec::make(parse_order_kind(a.kind), a.block == "y" ? BlockFirst::y : BlockFirst::x, P.n(), P.m());
    if (!a.x_priority.empty()) spec.x_priority = parse_index_list(a.x_priority, P.n());
    if (!a.y_priority.empty()) spec.y_priority = parse_index_list(a.y_priority, P.m());
  }
  std::cout << "# y-variables:";
  for (std::size_t j = 0; j < P.m(); ++j) std::cout << " y" << j + 1 << '=' << P.generators()[j];
  std::cout << '\n';
  try {
    auto gens = rees_generators_capped(P, cfg.cap, spec);
    if (what == "gens") {
      std::cout << "# order " << describe(spec) << "\n# cap " << cfg.cap << '\n';
      for (const auto& g : gens) std::cout << binomial_string(P, g) << '\n';
      return 0;
    }
    auto gb = buchberger_capped(P, gens, spec, cfg.cap);
    if (what == "gb") {
      write_gb(std::cout, P, spec, cfg.cap, gb);
      return 0;
    }
    if (what == "xcond") {
      auto r = x_condition_check(P, gb, cfg.cap);
      std::cout << "# order " << describe(spec) << "\n# cap " << cfg.cap << '\n';
      std::cout << "x-condition up to cap: " << (r.ok ? "yes" : "no") << '\n';
      if (r.witness) std::cout << "witness " << binomial_string(P, *r.witness) << '\n';
      return r.ok ? 0 : 1;
    }
  } catch (const CapExceeded& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  throw std::invalid_argument("unknown rees command " + what);
}

int cmd_family(const Options& o, const std::string& which, std::size_t n, unsigned d) {
  std::optional<GeneratorOrder> order;
  MonomialIdeal I(0);
  if (which == "terai") {
    I = terai_ideal();
  } else if (which == "sturmfels") {
    auto st = sturmfels_ideal();
    I = st.ideal;
    order = st.order;
  } else if (which == "thmC") {
    I = theoremC_ideal({n, d});
  } else if (which == "thmD") {
    auto D = theoremD_ideal({n, d});
    I = D.ideal;
    order = D.order;
  } else {
    throw std::invalid_argument("unknown family " + which);
  }
  if (o.format == "json") {
    Json gens = Json::array();
    for (const auto& u : I.generators()) gens.push_back(to_string(u));
    Json j{{"variables", I.ambient()}, {"generators", gens}};
    if (order) j["lq_order"] = format_order(*order);
    print_json(j);
    return 0;
  }
  write_ideal(std::cout, I);
  if (order) {
    std::cout << "# linear quotients order (1-based positions in the list above)\n# " << format_order(*order) << '\n';
    for (auto i : *order) std::cout << "#   " << I[i] << '\n';
  }
  return 0;
}

int cmd_split(const Options& o, const std::string& fi, const std::string& f1, const std::string& f2) {
  auto cfg = o.config();
  auto I = read_ideal(fi, o.nvars);
  auto I1 = read_ideal(f1, I.ambient());
  auto I2 = read_ideal(f2, I.ambient());
  std::size_t n = std::max({I.ambient(), I1.ambient(), I2.ambient()});
  I = parse_ideal(slurp(fi), n);
  I1 = parse_ideal(slurp(f1), n);
  I2 = parse_ideal(slurp(f2), n);
  bool all = true;
  Json out = Json::array();
  for (auto K : cfg.fields) {
    auto r = betti_splitting_check(I, I1, I2, K);
    all = all && r.holds;
    Json cells = Json::array();
    for (const auto& c : r.cells)
      cells.push_back({{"i", c.i}, {"j", c.j}, {"I", c.whole}, {"I1", c.first}, {"I2", c.second}, {"meet", c.meet},
                       {"residual", c.residual()}});
    out.push_back({{"field", K.name()}, {"holds", r.holds}, {"cells", cells}});
    if (cfg.format != OutputFormat::json) {
      std::cout << K.name() << ": " << (r.holds ? "splitting" : "not a splitting") << '\n';
      for (const auto& c : r.cells)
        if (c.residual() != 0) std::cout << "  residual at (" << c.i << ',' << c.j << ") = " << c.residual() << '\n';
    }
  }
  if (cfg.format == OutputFormat::json) print_json(out);
  return all ? 0 : 1;
}

int cmd_scan(const Options& o, std::size_t nmin, std::size_t nmax, const std::string& kind) {
  auto cfg = o.config();
  auto rows = scan_graphs(nmin, nmax, cfg.kmax, cfg.budget, kind == "comp" ? ScanKind::complementary : ScanKind::edge);
  bool ok = true, inconclusive = false;
  for (const auto& r : rows) {
    ok = ok && r.consistent;
    inconclusive = inconclusive || r.inconclusive;
  }
  if (cfg.format == OutputFormat::json) {
    Json arr = Json::array();
    for (const auto& r : rows)
      arr.push_back({{"graph", r.code},        {"c", r.c},
                     {"chordal_complement", r.chordal_complement},
                     {"linres_Q", r.linres_q}, {"linres_F2", r.linres_f2},
                     {"lq_depth", r.lq_depth}});
    print_json(arr);
  } else {
    write_scan_csv(std::cout, rows);
  }
  if (!ok) return inconclusive ? 2 : 1;
  return 0;
}

int cmd_probe(const Options& o, const std::string& file) {
  auto cfg = o.config();
  auto I = read_ideal(file, o.nvars);
  auto rows = conjecture_probe(I, cfg.kmax, cfg.fields, cfg.budget);
  bool budget = false;
  for (const auto& r : rows) budget = budget || r.lq == SearchStatus::budget_exhausted;
  if (cfg.format == OutputFormat::json) {
    print_json({{"seed", cfg.seed}, {"rows", to_json(rows)}});
  } else {
    std::cout << "k,generators";
    for (auto K : cfg.fields) std::cout << ",linres_" << K.name();
    std::cout << ",lq\n";
    for (const auto& r : rows) {
      std::cout << r.k << ',' << r.generators;
      for (auto [K, v] : r.linres) std::cout << ',' << (v ? "true" : "false");
      std::cout << ',' << to_string(r.lq) << '\n';
    }
  }
  return budget ? 2 : 0;
}

int cmd_suite(const Options& o, const std::string& name) {
  auto cfg = o.config();
  auto r = run_suite(name, cfg);
  if (cfg.format == OutputFormat::json)
    print_json(to_json(r));
  else
    write_report_text(std::cout, r);
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linpow: linear resolutions, linear quotients and linear powers of monomial ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--field", o.fields, "field: q, f2, f3 or a prime (repeatable; default q and f2)")
      ->allow_extra_args(false);
  app.add_option("--kmax", o.kmax, "largest power examined")->check(CLI::PositiveNumber);
  app.add_option("--cap", o.cap, "y-degree cap for Rees computations")->check(CLI::PositiveNumber);
  app.add_option("--budget", o.budget, "node budget for linear quotients search");
  app.add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
  app.add_option("--seed", o.seed, "seed for sampled modes");
  app.add_option("--nvars", o.nvars, "minimum number of variables of input ideals");

  std::string file, file2, file3, order;
  int code = 0;
  auto run = [&](auto fn) {
    return [&, fn] { code = fn(); };
  };

  auto* betti = app.add_subcommand("betti", "graded Betti table");
  betti->add_option("file", file, "ideal file (default stdin)");
  betti->callback(run([&] { return cmd_betti(o, file); }));

  auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
  reg->add_option("file", file);
  reg->callback(run([&] { return cmd_reg(o, file, false); }));

  auto* linres = app.add_subcommand("linres", "linear resolution test");
  linres->add_option("file", file);
  linres->callback(run([&] { return cmd_reg(o, file, true); }));

  auto* lq = app.add_subcommand("lq", "linear quotients");
  lq->require_subcommand(1);
  auto* lqv = lq->add_subcommand("verify", "check an order (1-based generator indices)");
  lqv->add_option("file", file);
  lqv->add_option("--order", order, "comma separated generator indices; default canonical order");
  lqv->callback(run([&] { return cmd_lq_verify(o, file, order); }));
  auto* lqs = lq->add_subcommand("search", "backtracking search for an order");
  lqs->add_option("file", file);
  lqs->callback(run([&] { return cmd_lq_search(o, file); }));

  unsigned k = 2;
  auto* power = app.add_subcommand("power", "minimal generators of I^k");
  power->add_option("file", file);
  power->add_option("--k", k, "exponent")->check(CLI::PositiveNumber);
  power->callback(run([&] {
    emit_ideal(o, power_ideal(read_ideal(file, o.nvars), k));
    return 0;
  }));

  auto* pol = app.add_subcommand("polarize", "polarization");
  pol->add_option("file", file);
  pol->callback(run([&] {
    auto p = polarize(read_ideal(file, o.nvars));
    std::cout << "# variable origins:";
    for (std::size_t v = 0; v < p.origin.size(); ++v)
      std::cout << " x" << v + 1 << "=x" << p.origin[v].first + 1 << '.' << p.origin[v].second;
    std::cout << '\n';
    emit_ideal(o, p.ideal);
    return 0;
  }));

  auto* dual = app.add_subcommand("dual", "Alexander dual of a squarefree ideal");
  dual->add_option("file", file);
  dual->callback(run([&] {
    emit_ideal(o, alexander_dual(read_ideal(file, o.nvars)));
    return 0;
  }));

  std::string what;
  auto* graph = app.add_subcommand("graph", "graph ideals and the graph characterizations");
  graph->add_option("what", what, "edge | comp | thmA | thmB | label")
      ->required()
      ->check(CLI::IsMember({"edge", "comp", "thmA", "thmB", "label"}));
  graph->add_option("file", file, "graph file (default stdin)");
  graph->callback(run([&] { return cmd_graph(o, what, file); }));

  ReesArgs ra;
  auto* rees = app.add_subcommand("rees", "Rees ideal generators, capped Groebner bases, x-condition");
  rees->add_option("what", what, "gens | gb | xcond")->required()->check(CLI::IsMember({"gens", "gb", "xcond"}));
  rees->add_option("file", ra.file, "ideal file (default stdin)");
  rees->add_option("--graph", ra.graph, "use I_c(G) of this graph file with its elimination labeling");
  rees->add_option("--order", ra.kind, "lex | pure-lex | revlex | product");
  rees->add_option("--block", ra.block, "x | y: which block is larger")->check(CLI::IsMember({"x", "y"}));
  rees->add_option("--x-priority", ra.x_priority, "x variables from largest, 1-based");
  rees->add_option("--y-priority", ra.y_priority, "y variables from largest, 1-based");
  rees->callback(run([&] { return cmd_rees(o, what, ra); }));

  std::size_t n = 7;
  unsigned d = 3;
  auto* fam = app.add_subcommand("family", "named ideals");
  fam->add_option("which", what, "terai | sturmfels | thmC | thmD")
      ->required()
      ->check(CLI::IsMember({"terai", "sturmfels", "thmC", "thmD"}));
  fam->add_option("--n", n, "number of variables");
  fam->add_option("--d", d, "generator degree");
  fam->callback(run([&] { return cmd_family(o, what, n, d); }));

  auto* split = app.add_subcommand("split", "Betti splittings");
  split->require_subcommand(1);
  auto* splitc = split->add_subcommand("check", "check I = I1 + I2 for a Betti splitting");
  splitc->add_option("I", file)->required();
  splitc->add_option("I1", file2)->required();
  splitc->add_option("I2", file3)->required();
  splitc->callback(run([&] { return cmd_split(o, file, file2, file3); }));

  std::size_t nmin = 2, nmax = 5;
  std::string kind = "edge";
  auto* scan = app.add_subcommand("scan", "exhaustive scans");
  scan->require_subcommand(1);
  auto* scang = scan->add_subcommand("graphs", "every labelled graph, CSV by default");
  scang->add_option("--nmin", nmin);
  scang->add_option("--nmax", nmax)->check(CLI::Range(2, 7));
  scang->add_option("--kind", kind, "edge | comp")->check(CLI::IsMember({"edge", "comp"}));
  scang->callback(run([&] { return cmd_scan(o, nmin, nmax, kind); }));

  auto* probe = app.add_subcommand("probe", "linear resolution and linear quotients of I^k, k <= kmax");
  probe->add_option("file", file);
  probe->callback(run([&] { return cmd_probe(o, file); }));

  auto* suite = app.add_subcommand("suite", "named check suites");
  suite->add_option("name", what, "suite name")->required()->check(CLI::IsMember(suite_names()));
  suite->callback(run([&] { return cmd_suite(o, what); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return code;
}
