// prunedres: cellular free resolutions of monomial ideals by Morse pruning.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pruned/betti.hpp"
#include "pruned/classes.hpp"
#include "pruned/morse.hpp"
#include "pruned/power.hpp"
#include "pruned/splitting.hpp"

namespace {

using namespace pruned;
using nlohmann::json;

constexpr int kSchemaVersion = 1;

struct Common {
  std::string path;    // ideal file, "-" = stdin
  std::string inline_ideal;
  std::int64_t characteristic = 0;
  std::string format = "text";
  int jobs = 1;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("input", c.path, "ideal file (text or JSON), '-' for stdin");
  cmd->add_option("--ideal", c.inline_ideal, "inline ideal, e.g. 'x1*x2, x2*x3'");
  cmd->add_option("--char", c.characteristic, "field characteristic (0 or a prime)");
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--jobs", c.jobs, "parallelism bound")->check(CLI::PositiveNumber);
}

bool prime_or_zero(std::int64_t p) {
  if (p == 0) return true;
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

MonomialIdeal load_ideal(const Common& c) {
  std::string text;
  if (!c.inline_ideal.empty()) {
    text = c.inline_ideal;
  } else if (c.path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else if (!c.path.empty()) {
    std::ifstream in(c.path);
    if (!in) throw InvalidInputError("cannot open " + c.path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    throw InvalidInputError("no ideal given (positional file or --ideal)");
  }
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw InvalidInputError("empty ideal input");
  if (text[first] == '{') return ideal_from_json(text);
  return parse_ideal(text);
}

void check_common(const Common& c) {
  if (!prime_or_zero(c.characteristic))
    throw InvalidInputError("--char must be 0 or a prime");
}

json table_json(const BettiTable& t) { return json::parse(t.to_json()); }

void emit(const Common& c, const json& j, const std::string& text) {
  if (c.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::vector<int> parse_order(const std::string& s, int q) {
  std::vector<int> order;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) order.push_back(std::stoi(tok) - 1);
  std::vector<bool> seen(static_cast<std::size_t>(q), false);
  if (static_cast<int>(order.size()) != q) throw InvalidInputError("--order: need q entries");
  for (int i : order) {
    if (i < 0 || i >= q || seen[static_cast<std::size_t>(i)])
      throw InvalidInputError("--order: not a permutation of 1..q");
    seen[static_cast<std::size_t>(i)] = true;
  }
  return order;
}

std::string order_str(const std::vector<int>& order) {
  std::string s;
  for (std::size_t k = 0; k < order.size(); ++k)
    s += (k ? "," : "") + std::to_string(order[k] + 1);
  return s;
}

int run_betti(const Common& c) {
  auto ideal = load_ideal(c);
  auto table = betti_numbers(ideal, c.characteristic);
  json j{{"schema_version", kSchemaVersion}, {"command", "betti"},
         {"characteristic", c.characteristic}, {"table", table_json(table)}};
  emit(c, j, render_diagram(table));
  return 0;
}

struct PruneRun {
  MonomialIdeal ideal;
  Matching matching;
  MorseComplex morse;
  BettiTable table;
  bool minimal;
};

PruneRun do_prune(const MonomialIdeal& ideal, std::int64_t p) {
  PruneRun r;
  r.ideal = ideal;
  auto complex = CellComplex::taylor(ideal);
  r.matching = prune(complex);
  r.morse = morse_complex(complex, r.matching);
  if (auto err = verify_complex(r.morse)) throw Error("internal: " + *err);
  r.table = table_from_critical(r.morse.strata, p);
  r.table.characteristic = p;
  r.minimal = is_minimal(r.morse, p);
  return r;
}

int run_prune(const Common& c, const std::string& order_opt, bool expect_minimal) {
  auto ideal = load_ideal(c);
  if (!order_opt.empty()) ideal = ideal.reordered(parse_order(order_opt, ideal.num_generators()));
  auto r = do_prune(ideal, c.characteristic);
  std::ostringstream text;
  text << render_diagram(r.table);
  text << "minimal: " << (r.minimal ? "true" : "false") << "\n";
  json j{{"schema_version", kSchemaVersion}, {"command", "prune"},
         {"characteristic", c.characteristic}, {"table", table_json(r.table)},
         {"matching", json::parse(r.matching.to_json())}, {"minimal", r.minimal}};
  emit(c, j, text.str());
  return (expect_minimal && !r.minimal) ? 1 : 0;
}

int run_power(const Common& c, std::int64_t r, const std::string& vorder, bool unpruned) {
  auto ideal = load_ideal(c);
  auto order = vorder == "corners" ? PowerVertexOrder::corners_first : PowerVertexOrder::lex;
  auto res = prune_power(ideal, r, order);
  res.table.characteristic = c.characteristic;
  std::ostringstream text;
  json j{{"schema_version", kSchemaVersion}, {"command", "power"}, {"r", r},
         {"vertex_order", vorder}, {"generators_minimal", res.complex.generators_minimal}};
  if (unpruned) {
    // graded ranks of the full L^r_q complex (quotient convention)
    CriticalCells all;
    for (Cell cell : res.complex.complex.cells())
      if (cell != 0)
        all[cell_size(cell)].push_back({cell, res.complex.complex.grade(cell)});
    auto full = quotient_table(table_from_critical(all, c.characteristic), ideal.ambient());
    full.characteristic = c.characteristic;
    text << "unpruned:\n" << render_diagram(full);
    j["unpruned_table"] = table_json(full);
  }
  text << render_diagram(res.table);
  text << "generators minimal: " << (res.complex.generators_minimal ? "true" : "false") << "\n";
  j["table"] = table_json(res.table);
  emit(c, j, text.str());
  return 0;
}

int run_split(const Common& c, const std::string& plan_path, const std::string& auto_mode,
              bool expect_minimal) {
  auto ideal = load_ideal(c);
  SplitPlan plan;
  BettiTable table;
  bool minimal = false;
  bool have_matching = false;
  Matching matching;

  if (auto_mode == "edge") {
    if (!ideal.is_squarefree()) throw InvalidInputError("split --auto edge: ideal not squarefree");
    std::vector<std::pair<int, int>> edges;
    for (const auto& m : ideal.generators()) {
      if (m.degree() != 2 || m.min_var() == m.max_var())
        throw InvalidInputError("split --auto edge: not an edge ideal");
      edges.push_back({m.min_var(), m.max_var()});
    }
    table = edge_recursion_table(Graph{ideal.ambient(), edges}, c.characteristic);
    auto oracle = betti_numbers(ideal, c.characteristic);
    minimal = table == oracle;
  } else {
    if (!plan_path.empty()) {
      std::ifstream in(plan_path);
      if (!in) throw InvalidInputError("cannot open " + plan_path);
      std::ostringstream ss;
      ss << in.rdbuf();
      plan = SplitPlan::from_json(ss.str());
    } else if (auto_mode == "cert") {
      auto cert = vertex_split(ideal);
      if (!cert) {
        std::cerr << "not vertex splittable\n";
        return 1;
      }
      plan = plan_from_certificate(ideal, *cert);
    } else if (auto_mode == "maxvar") {
      plan = plan_maxvar(ideal);
    } else {
      throw InvalidInputError("split: need --plan or --auto cert|maxvar|edge");
    }
    auto res = split_prune(ideal, plan, c.characteristic);
    table = res.table;
    minimal = res.minimal;
    matching = res.matching;
    have_matching = true;
  }

  std::ostringstream text;
  text << render_diagram(table);
  text << "minimal: " << (minimal ? "true" : "false") << "\n";
  json j{{"schema_version", kSchemaVersion}, {"command", "split"},
         {"characteristic", c.characteristic}, {"table", table_json(table)},
         {"minimal", minimal}};
  if (have_matching) {
    j["plan"] = json::parse(plan.to_json());
    j["matching"] = json::parse(matching.to_json());
  }
  emit(c, j, text.str());
  return (expect_minimal && !minimal) ? 1 : 0;
}

int run_classify(const Common& c) {
  auto ideal = load_ideal(c);
  bool lex = is_lexsegment(ideal);
  bool sstable = is_strongly_stable(ideal);
  bool stable = is_stable(ideal);
  auto lq = linear_quotients_order(ideal);
  auto cert = vertex_split(ideal);
  auto cwl = is_componentwise_linear(ideal, c.characteristic);
  std::ostringstream text;
  text << "lexsegment: " << (lex ? "true" : "false") << "\n"
       << "strongly stable: " << (sstable ? "true" : "false") << "\n"
       << "stable: " << (stable ? "true" : "false") << "\n"
       << "linear quotients: " << (lq ? "true (order " + order_str(*lq) + ")" : std::string("false"))
       << "\n"
       << "vertex splittable: " << (cert ? "true" : "false") << "\n"
       << "componentwise linear: " << (cwl.linear ? "true" : "false") << "\n";
  json j{{"schema_version", kSchemaVersion}, {"command", "classify"},
         {"lexsegment", lex}, {"strongly_stable", sstable}, {"stable", stable},
         {"linear_quotients", bool(lq)}, {"vertex_splittable", bool(cert)},
         {"componentwise_linear", cwl.linear}};
  if (lq) j["linear_quotients_order"] = order_str(*lq);
  if (cert) j["certificate"] = json::parse(cert->to_json());
  emit(c, j, text.str());
  return 0;
}

int run_minimal_order(const Common& c, std::size_t budget, std::uint64_t seed,
                      bool expect_minimal) {
  auto ideal = load_ideal(c);
  auto res = search_minimal_order(ideal, c.characteristic, 8, budget, seed);
  std::ostringstream text;
  std::string status = res.status == OrderSearchResult::Status::found   ? "found"
                       : res.status == OrderSearchResult::Status::none ? "none"
                                                                       : "unknown";
  text << "status: " << status << "\n";
  if (res.status == OrderSearchResult::Status::found)
    text << "order: " << order_str(res.order) << "\n";
  text << "attempts: " << res.attempts << "\n";
  json j{{"schema_version", kSchemaVersion}, {"command", "minimal-order"},
         {"status", status}, {"attempts", res.attempts}};
  if (res.status == OrderSearchResult::Status::found) j["order"] = order_str(res.order);
  emit(c, j, text.str());
  return (expect_minimal && res.status != OrderSearchResult::Status::found) ? 1 : 0;
}

int run_verify(const Common& c) {
  auto ideal = load_ideal(c);
  auto complex = CellComplex::taylor(ideal);
  auto matching = prune(complex);
  auto report = verify_matching(complex, matching);
  auto morse = morse_complex(complex, matching);
  auto complex_err = verify_complex(morse);
  auto pruned_table = table_from_critical(morse.strata, c.characteristic);
  auto oracle = betti_numbers(ideal, c.characteristic);

  bool bounds = true;  // pruned counts dominate the oracle entrywise
  for (const auto& [i, row] : oracle.entries)
    for (const auto& [alpha, count] : row)
      if (pruned_table.at(i, alpha) < count) bounds = false;

  // per-multidegree Euler characteristic is preserved by the matching
  std::map<Monomial, std::int64_t> full_chi, crit_chi;
  for (Cell cell : complex.cells())
    if (cell != 0) full_chi[complex.grade(cell)] += (cell_size(cell) % 2 ? 1 : -1);
  for (const auto& [size, cells] : morse.strata) {
    if (size == 0) continue;
    for (const auto& gc : cells) crit_chi[gc.degree] += (size % 2 ? 1 : -1);
  }
  std::erase_if(full_chi, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(crit_chi, [](const auto& kv) { return kv.second == 0; });
  bool euler = full_chi == crit_chi;

  bool ok = report.ok() && !complex_err && bounds && euler;
  std::ostringstream text;
  text << "matching: " << (report.ok() ? "ok" : "FAIL " + report.detail) << "\n"
       << "complex: " << (complex_err ? "FAIL " + *complex_err : std::string("ok")) << "\n"
       << "betti bounds: " << (bounds ? "ok" : "FAIL") << "\n"
       << "euler characteristic: " << (euler ? "ok" : "FAIL") << "\n";
  json j{{"schema_version", kSchemaVersion}, {"command", "verify"},
         {"matching", report.ok()}, {"complex", !complex_err},
         {"betti_bounds", bounds}, {"euler", euler}, {"ok", ok}};
  emit(c, j, text.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cellular free resolutions of monomial ideals by Morse pruning"};
  app.require_subcommand(1);

  Common c_betti, c_prune, c_power, c_split, c_classify, c_order, c_verify;
  std::string order_opt, plan_path, auto_mode, vorder = "lex";
  bool expect_minimal = false, expect_minimal_split = false, expect_minimal_order = false;
  bool unpruned = false;
  std::int64_t r = 1;
  std::size_t budget = 2000;
  std::uint64_t seed = 0;

  auto* betti = app.add_subcommand("betti", "Betti table from the independent oracle");
  add_common(betti, c_betti);

  auto* prune_cmd = app.add_subcommand("prune", "pruned Morse resolution and minimality verdict");
  add_common(prune_cmd, c_prune);
  prune_cmd->add_option("--order", order_opt, "generator order override, e.g. 2,1,3");
  prune_cmd->add_flag("--expect-minimal", expect_minimal, "exit 1 when not minimal");

  auto* power = app.add_subcommand("power", "resolution of I^r through the power complex");
  add_common(power, c_power);
  power->add_option("--r", r, "power")->required()->check(CLI::PositiveNumber);
  power->add_option("--vertex-order", vorder, "vertex order")
      ->check(CLI::IsMember({"lex", "corners"}));
  power->add_flag("--unpruned", unpruned, "also print the unpruned graded ranks");

  auto* split = app.add_subcommand("split", "recursive Betti-splitting pruning");
  add_common(split, c_split);
  split->add_option("--plan", plan_path, "split plan JSON file");
  split->add_option("--auto", auto_mode, "automatic plan")
      ->check(CLI::IsMember({"cert", "maxvar", "edge"}));
  split->add_flag("--expect-minimal", expect_minimal_split, "exit 1 when not minimal");

  auto* classify = app.add_subcommand("classify", "ideal class membership");
  add_common(classify, c_classify);

  auto* morder = app.add_subcommand("minimal-order", "search for a minimal generator order");
  add_common(morder, c_order);
  morder->add_option("--budget", budget, "random trials when q > 8");
  morder->add_option("--seed", seed, "random seed");
  morder->add_flag("--expect-minimal", expect_minimal_order, "exit 1 when no order found");

  auto* verify = app.add_subcommand("verify", "self-check suite on the given ideal");
  add_common(verify, c_verify);

  try {
    app.parse(argc, argv);
    for (const Common* c : {&c_betti, &c_prune, &c_power, &c_split, &c_classify, &c_order, &c_verify})
      check_common(*c);
    if (betti->parsed()) return run_betti(c_betti);
    if (prune_cmd->parsed()) return run_prune(c_prune, order_opt, expect_minimal);
    if (power->parsed()) return run_power(c_power, r, vorder, unpruned);
    if (split->parsed()) return run_split(c_split, plan_path, auto_mode, expect_minimal_split);
    if (classify->parsed()) return run_classify(c_classify);
    if (morder->parsed()) return run_minimal_order(c_order, budget, seed, expect_minimal_order);
    if (verify->parsed()) return run_verify(c_verify);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
