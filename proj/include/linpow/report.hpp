#ifndef LINPOW_REPORT_HPP
#define LINPOW_REPORT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "betti.hpp"
#include "corpus.hpp"
#include "families.hpp"
#include "field.hpp"
#include "graph.hpp"
#include "linear_quotients.hpp"
#include "monomial.hpp"
#include "parallel.hpp"
#include "rees.hpp"

namespace linpow {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Betti tables as JSON: {"field": "Q", "entries": [[i, j, count], ...]}.

inline Json betti_to_json(const GradedBettiTable& t) {
  Json entries = Json::array();
  for (const auto& [k, v] : t.entries()) entries.push_back({k.first, k.second, v});
  Json j{{"field", t.field().name()}, {"entries", entries}};
  if (!t.subject().empty()) j["ideal"] = t.subject();
  return j;
}

inline GradedBettiTable betti_from_json(const Json& j) {
  GradedBettiTable t(FieldSpec::parse(j.at("field").get<std::string>()), j.value("ideal", std::string{}));
  for (const auto& e : j.at("entries")) t.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::uint64_t>());
  return t;
}

// ---------------------------------------------------------------------------

enum class OutputFormat { text, json, csv };

inline OutputFormat parse_format(std::string_view s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown output format '" + std::string(s) + "'");
}

inline const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return "text";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
  }
  return "?";
}

struct RunConfig {
  std::vector<FieldSpec> fields{kQ, F2()};
  unsigned kmax = 3;
  unsigned cap = 3;
  std::uint64_t budget = 1'000'000;
  OutputFormat format = OutputFormat::text;
  unsigned jobs = 1;
  std::uint64_t seed = 1;

  void validate() const {
    if (fields.empty()) throw std::invalid_argument("at least one field must be selected");
    if (kmax < 1) throw std::invalid_argument("kmax must be at least 1");
    if (cap < 1) throw std::invalid_argument("cap must be at least 1");
    if (budget < 1) throw std::invalid_argument("budget must be positive");
  }

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

inline Json to_json(const RunConfig& c) {
  Json fields = Json::array();
  for (auto f : c.fields) fields.push_back(f.name());
  return {{"fields", fields}, {"kmax", c.kmax}, {"cap", c.cap},   {"budget", c.budget},
          {"format", to_string(c.format)}, {"jobs", c.jobs}, {"seed", c.seed}};
}

inline RunConfig config_from_json(const Json& j) {
  RunConfig c;
  c.fields.clear();
  for (const auto& f : j.at("fields")) c.fields.push_back(FieldSpec::parse(f.get<std::string>()));
  c.kmax = j.at("kmax").get<unsigned>();
  c.cap = j.at("cap").get<unsigned>();
  c.budget = j.at("budget").get<std::uint64_t>();
  c.format = parse_format(j.at("format").get<std::string>());
  c.jobs = j.at("jobs").get<unsigned>();
  c.seed = j.at("seed").get<std::uint64_t>();
  return c;
}

enum class CheckStatus { pass, fail, inconclusive };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

inline CheckStatus parse_check_status(std::string_view s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "inconclusive") return CheckStatus::inconclusive;
  throw std::invalid_argument("unknown check status '" + std::string(s) + "'");
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct Report {
  std::string suite;
  RunConfig config;
  std::vector<CheckResult> checks;
  Json data = Json::object();

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
  }
  void add(std::string name, CheckStatus s, std::string detail = {}) {
    checks.push_back({std::move(name), s, std::move(detail)});
  }

  /// 0 all pass, 1 some mismatch, 2 inconclusive (budget or cap) without mismatch.
  int exit_code() const {
    bool inconclusive = false;
    for (const auto& c : checks) {
      if (c.status == CheckStatus::fail) return 1;
      if (c.status == CheckStatus::inconclusive) inconclusive = true;
    }
    return inconclusive ? 2 : 0;
  }

  friend bool operator==(const Report& a, const Report& b) {
    return a.suite == b.suite && a.config == b.config && a.checks == b.checks && a.data == b.data;
  }
};

inline Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return {{"suite", r.suite}, {"config", to_json(r.config)}, {"checks", checks}, {"data", r.data},
          {"exit_code", r.exit_code()}};
}

inline Report report_from_json(const Json& j) {
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.config = config_from_json(j.at("config"));
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), parse_check_status(c.at("status").get<std::string>()),
                        c.at("detail").get<std::string>()});
  r.data = j.at("data");
  return r;
}

inline void write_report_text(std::ostream& os, const Report& r) {
  os << "# suite " << r.suite << "  seed " << r.config.seed << "  fields";
  for (auto f : r.config.fields) os << ' ' << f.name();
  os << "  kmax " << r.config.kmax << "  cap " << r.config.cap << '\n';
  for (const auto& c : r.checks) {
    os << (c.status == CheckStatus::pass ? "ok    " : c.status == CheckStatus::fail ? "FAIL  " : "INCON ") << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ')';
    os << '\n';
  }
}

// ---------------------------------------------------------------------------
// Probe: linear resolution and linear quotients of successive powers.

struct ProbeRow {
  unsigned k = 0;
  std::size_t generators = 0;
  std::vector<std::pair<FieldSpec, bool>> linres;
  SearchStatus lq = SearchStatus::none_exists;
};

inline std::vector<ProbeRow> conjecture_probe(const MonomialIdeal& I, unsigned kmax, const std::vector<FieldSpec>& fields,
                                              std::uint64_t budget) {
  if (!I.is_equigenerated() || I.is_zero()) throw std::invalid_argument("probe needs a nonzero equigenerated ideal");
  std::vector<ProbeRow> rows;
  MonomialIdeal P = I;
  for (unsigned k = 1; k <= kmax; ++k) {
    if (k > 1) P = multiply_ideals(P, I);
    ProbeRow row;
    row.k = k;
    row.generators = P.size();
    for (auto K : fields) row.linres.emplace_back(K, has_linear_resolution(P, K));
    row.lq = find_lq_order(P, budget).status;
    rows.push_back(row);
  }
  return rows;
}

inline Json to_json(const std::vector<ProbeRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json lr = Json::object();
    for (auto [K, v] : r.linres) lr[K.name()] = v;
    out.push_back({{"k", r.k}, {"generators", r.generators}, {"linres", lr}, {"lq", to_string(r.lq)}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graph scans.

struct ScanRow {
  std::string code;
  std::size_t c = 0;
  bool chordal_complement = false;
  bool linres_q = false;
  bool linres_f2 = false;
  unsigned lq_depth = 0;
  bool consistent = true;
  bool inconclusive = false;
};

enum class ScanKind { edge, complementary };

/// Every labelled graph with at least one edge on nmin..nmax vertices, in
/// (n, edge mask) order.
inline std::vector<ScanRow> scan_graphs(std::size_t nmin, std::size_t nmax, unsigned kmax, std::uint64_t budget,
                                        ScanKind kind) {
  if (nmax > 7) throw std::invalid_argument("exhaustive scans stop at 7 vertices");
  if (kind == ScanKind::complementary) nmin = std::max<std::size_t>(nmin, 3);
  std::vector<Graph> graphs;
  for (std::size_t n = std::max<std::size_t>(nmin, 2); n <= nmax; ++n) {
    std::uint64_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mk = 1; mk < (std::uint64_t{1} << pairs); ++mk) graphs.push_back(graph_from_mask(n, mk));
  }
  std::vector<ScanRow> rows(graphs.size());
  parallel_for(graphs.size(), [&](std::size_t i) {
    const Graph& G = graphs[i];
    ScanRow& r = rows[i];
    r.code = graph_code(G);
    r.c = c_count(G);
    r.chordal_complement = is_chordal(complement_graph(G));
    if (kind == ScanKind::edge) {
      auto rep = theoremA_verify(G, kmax, budget);
      r.linres_q = rep.linres_q;
      r.linres_f2 = rep.linres_f2;
      r.lq_depth = rep.lq_depth();
      r.consistent = rep.equivalence_holds();
      r.inconclusive = rep.inconclusive();
    } else {
      auto rep = theoremB_verify(G, kmax);
      r.linres_q = rep.linres_q;
      r.linres_f2 = rep.linres_f2;
      r.lq_depth = rep.lq_depth();
      r.consistent = rep.equivalence_holds();
    }
  });
  return rows;
}

inline void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  os << "graph,c,chordal_complement,linres_Q,linres_F2,lq_depth_verified\n";
  for (const auto& r : rows)
    os << r.code << ',' << r.c << ',' << r.chordal_complement << ',' << r.linres_q << ',' << r.linres_f2 << ','
       << r.lq_depth << '\n';
}

// ---------------------------------------------------------------------------
// Named check suites.

namespace detail {

inline std::string field_list(const std::vector<FieldSpec>& fs) {
  std::string s;
  for (auto f : fs) s += (s.empty() ? "" : ",") + f.name();
  return s;
}

inline void suite_terai(Report& r) {
  auto J = terai_ideal();
  for (auto K : r.config.fields) {
    int expected = K.characteristic() == 2 ? 4 : 3;
    int reg = regularity(J, K);
    r.data["reg"][K.name()] = reg;
    r.add("reg over " + K.name() + " = " + std::to_string(expected), reg == expected, "got " + std::to_string(reg));
  }
  auto lq = find_lq_order(J, r.config.budget);
  r.data["lq"] = to_string(lq.status);
  r.data["lq_nodes"] = lq.nodes;
  r.add("no linear quotients order",
        lq.status == SearchStatus::budget_exhausted ? CheckStatus::inconclusive
        : lq.status == SearchStatus::none_exists    ? CheckStatus::pass
                                                    : CheckStatus::fail,
        std::string(to_string(lq.status)) + " after " + std::to_string(lq.nodes) + " nodes");
}

inline void suite_sturmfels(Report& r) {
  auto st = sturmfels_ideal();
  r.add("stored order has linear quotients", verify_lq_order(st.ideal, st.order).ok, format_order(st.order));
  for (auto K : r.config.fields) {
    int reg = regularity(st.ideal, K);
    r.add("reg J over " + K.name() + " = 3", reg == 3, "got " + std::to_string(reg));
  }
  auto J2 = power_ideal(st.ideal, 2);
  r.data["square_generators"] = J2.size();
  for (auto K : r.config.fields) {
    int reg = regularity(J2, K);
    r.data["reg_square"][K.name()] = reg;
    r.add("reg J^2 over " + K.name() + " = 7", reg == 7, "got " + std::to_string(reg));
  }
}

inline void suite_thmA(Report& r) {
  auto rows = scan_graphs(2, 6, r.config.kmax, r.config.budget, ScanKind::edge);
  std::size_t bad = 0, inconclusive = 0;
  std::string first;
  for (const auto& row : rows) {
    bool three_way = row.linres_q == row.linres_f2 && row.linres_q == row.chordal_complement;
    if (!three_way || (!row.consistent && !row.inconclusive)) {
      ++bad;
      if (first.empty()) first = row.code;
    }
    if (row.inconclusive) ++inconclusive;
  }
  r.data["graphs"] = rows.size();
  r.data["exceptions"] = bad;
  r.add("linres(Q) = linres(F2) = chordal complement, n <= 6", bad == 0,
        std::to_string(rows.size()) + " graphs" + (first.empty() ? "" : ", first exception " + first));
  if (inconclusive) r.add("power searches within budget", CheckStatus::inconclusive, std::to_string(inconclusive));
}

inline void suite_thmB(Report& r) {
  auto rows = scan_graphs(3, 5, r.config.kmax, r.config.budget, ScanKind::complementary);
  std::size_t bad = 0;
  for (const auto& row : rows)
    if (!row.consistent) ++bad;
  std::mt19937_64 rng(r.config.seed);
  std::vector<Graph> sample;
  for (int s = 0; s < 200; ++s) sample.push_back(random_connected_graph(rng, 6));
  std::vector<char> ok(sample.size(), 0);
  parallel_for(sample.size(), [&](std::size_t i) { ok[i] = theoremB_verify(sample[i], r.config.kmax).equivalence_holds(); });
  std::size_t bad6 = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 0));
  r.data["graphs"] = rows.size();
  r.data["sampled_n6"] = sample.size();
  r.add("linres(I_c) iff c(G) = 1, lex order LQ for k <= kmax, 3 <= n <= 5", bad == 0,
        std::to_string(rows.size()) + " graphs, " + std::to_string(bad) + " exceptions");
  r.add("200 seeded connected graphs at n = 6", bad6 == 0, std::to_string(bad6) + " exceptions");
}

inline void suite_thmC(Report& r) {
  for (auto [n, d] : std::vector<std::pair<std::size_t, unsigned>>{{6, 3}, {7, 3}, {7, 4}}) {
    auto I = theoremC_ideal({n, d});
    auto prof = ideal_profile(I);
    std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
    r.add(tag + " squarefree, fully supported, degree " + std::to_string(d),
          I.is_squarefree() && prof.fully_supported && prof.equigenerated && prof.alpha == d);
    for (auto K : r.config.fields) {
      int expected = static_cast<int>(d) + (K.characteristic() == 2 ? 1 : 0);
      int reg = regularity(I, K);
      r.add(tag + " reg over " + K.name() + " = " + std::to_string(expected), reg == expected, "got " + std::to_string(reg));
    }
  }
}

inline void suite_thmD(Report& r) {
  for (auto [n, d] : std::vector<std::pair<std::size_t, unsigned>>{{6, 3}, {7, 3}}) {
    auto D = theoremD_ideal({n, d});
    std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
    r.add(tag + " concatenated order has linear quotients", verify_lq_order(D.ideal, D.order).ok);
    auto P = power_ideal(D.ideal, 2);
    for (auto K : r.config.fields) {
      int reg = regularity(P, K);
      r.add(tag + " reg I^2 over " + K.name() + " = " + std::to_string(2 * d + 1), reg == static_cast<int>(2 * d + 1),
            "got " + std::to_string(reg));
    }
  }
}

inline void suite_splitting(Report& r) {
  FamilyParams p{7, 3};
  auto I = theoremC_ideal(p);
  auto J = embed_ideal(terai_ideal(), {0, 1, 2, 3, 4, 5}, 7);
  auto yL = multiply_ideals(minimalize({Monomial::variable(7, 6)}, 7), embed_ideal(veronese2_ideal(), {0, 1, 2, 3, 4, 5}, 7));
  for (auto K : r.config.fields) {
    auto rep = betti_splitting_check(I, J, yL, K);
    r.add("Betti splitting over " + K.name(), rep.holds, std::to_string(rep.cells.size()) + " cells");
  }
  auto W = intersect_ideals(J, yL);
  auto first = tor_vanishing_lcm_check(W, J, lex_least_divisor_map(W, J));
  auto second = tor_vanishing_lcm_check(W, yL, lex_least_divisor_map(W, yL));
  r.add("W -> J lcm criterion (exhaustive)", first.ok && first.mode == LcmMode::exhaustive,
        std::to_string(first.subsets_checked) + " subsets");
  r.add("W -> (y1)L lcm criterion (exhaustive)", second.ok && second.mode == LcmMode::exhaustive,
        std::to_string(second.subsets_checked) + " subsets");
}

inline void suite_xcond(Report& r) {
  std::vector<Graph> graphs;
  for (std::size_t n = 3; n <= 5; ++n) {
    std::uint64_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mk = 1; mk < (std::uint64_t{1} << pairs); ++mk) {
      Graph G = graph_from_mask(n, mk);
      if (G.is_connected()) graphs.push_back(G);
    }
  }
  std::vector<char> xc(graphs.size(), 0), walk(graphs.size(), 0), guard(graphs.size(), 0);
  parallel_for(graphs.size(), [&](std::size_t i) {
    try {
      xc[i] = complementary_x_condition(graphs[i], r.config.cap).xcond.ok;
      walk[i] = walk_oracle_agreement(graphs[i], r.config.cap, 8, complementary_x_order(graphs[i])).ok();
    } catch (const CapExceeded&) {
      guard[i] = 1;
    }
  });
  std::size_t bad_x = 0, bad_w = 0, hit = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (guard[i]) {
      ++hit;
      continue;
    }
    bad_x += !xc[i];
    bad_w += !walk[i];
  }
  r.data["graphs"] = graphs.size();
  r.add("x-condition up to y-degree " + std::to_string(r.config.cap), bad_x == 0,
        std::to_string(graphs.size()) + " connected graphs, " + std::to_string(bad_x) + " failures");
  r.add("walk oracle agrees with capped generators", bad_w == 0, std::to_string(bad_w) + " disagreements");
  if (hit) r.add("x-degree guard", CheckStatus::inconclusive, std::to_string(hit) + " graphs hit the guard");
}

inline void suite_oracle(Report& r) {
  std::mt19937_64 rng(r.config.seed);
  std::vector<MonomialIdeal> corpus;
  std::uniform_int_distribution<std::size_t> nvars(1, 5);
  for (int s = 0; s < 30; ++s) corpus.push_back(random_monomial_ideal(rng, nvars(rng), 6, 2));
  for (auto K : r.config.fields) {
    std::size_t bad = 0;
    for (const auto& I : corpus) {
      auto a = graded_betti(I, K);
      auto b = betti_via_koszul(I, K, polarize(I).ideal.ambient());
      if (!a.same_numbers(b)) ++bad;
    }
    r.add("Hochster = Koszul over " + K.name(), bad == 0,
          std::to_string(corpus.size()) + " ideals, " + std::to_string(bad) + " mismatches");
  }
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"terai", "sturmfels", "thmA",  "thmB",  "thmC",
                                              "thmD",  "splitting", "xcond", "oracle"};
  return names;
}

inline Report run_suite(std::string_view name, const RunConfig& config) {
  config.validate();
  static const std::map<std::string, std::function<void(Report&)>, std::less<>> table{
      {"terai", detail::suite_terai},   {"sturmfels", detail::suite_sturmfels}, {"thmA", detail::suite_thmA},
      {"thmB", detail::suite_thmB},     {"thmC", detail::suite_thmC},           {"thmD", detail::suite_thmD},
      {"splitting", detail::suite_splitting}, {"xcond", detail::suite_xcond},   {"oracle", detail::suite_oracle}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  Report r;
  r.suite = std::string(name);
  r.config = config;
  it->second(r);
  return r;
}

}  // namespace linpow

#endif  // LINPOW_REPORT_HPP
