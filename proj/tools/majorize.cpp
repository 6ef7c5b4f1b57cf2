// majorize: command-line front end for the majorization toolkit.
//
// Exit codes: 0 predicate holds, 1 predicate fails (a witness is reported),
// 2 usage, parse or precondition error.

#include "majorization/io.hpp"
#include "majorization/majorization.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace majorization;
using io::json;

struct GlobalOptions {
   std::uint64_t seed = 0;
   std::size_t trials = 100;
   std::size_t guard_n = default_guard_n;
   bool text = false;
};

struct Outcome {
   json report;
   int exit_code;
};

json canonical_inputs(std::initializer_list<json> inputs)
{
   json arr = json::array();
   for (const auto& i : inputs) {
      arr.push_back(i);
   }
   return arr;
}

json make_report(const std::string& command, const json& inputs, bool holds)
{
   json r;
   r["command"] = command;
   r["inputs_digest"] = io::digest(inputs.dump());
   r["verdict"] = holds ? "holds" : "fails";
   return r;
}

void finish(json& r, const GlobalOptions& g, std::chrono::steady_clock::time_point start)
{
   r["seed"] = g.seed;
   r["trials"] = g.trials;
   r["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
}

void emit_warnings(const std::vector<std::string>& warnings)
{
   for (const auto& w : warnings) {
      std::cerr << "warning: " << w << '\n';
   }
}

json prefix_table(const MajorizationCheck& c)
{
   json rows = json::array();
   for (std::size_t k = 0; k < c.x_prefix.size(); ++k) {
      rows.push_back({{"k", k + 1},
                      {"x", io::scalar_to_json(c.x_prefix[k])},
                      {"y", io::scalar_to_json(c.y_prefix[k])}});
   }
   return rows;
}

Outcome cmd_check(const std::string& x_path, const std::string& y_path)
{
   std::vector<std::string> warnings;
   const auto x = io::read_vector_file(x_path, warnings);
   const auto y = io::read_vector_file(y_path, warnings);
   emit_warnings(warnings);
   const auto check = check_majorization(x, y);

   auto r = make_report("check", canonical_inputs({io::to_json(x), io::to_json(y)}),
                        check.holds);
   r["n"] = x.size();
   r["prefix_sums"] = prefix_table(check);
   r["witness"] = check.holds
                     ? json(nullptr)
                     : json{{"kind", "prefix"}, {"index", *check.violated_prefix}};
   return {r, check.holds ? 0 : 1};
}

Outcome cmd_witness(const std::string& x_path, const std::string& y_path,
                    const std::string& out_path)
{
   std::vector<std::string> warnings;
   const auto x = io::read_vector_file(x_path, warnings);
   const auto y = io::read_vector_file(y_path, warnings);
   emit_warnings(warnings);
   const auto inputs = canonical_inputs({io::to_json(x), io::to_json(y)});
   try {
      const auto w = witness_ds(x, y);
      auto r = make_report("witness", inputs, true);
      r["t_transforms"] = w.chain.size();
      json chain = json::array();
      for (const auto& t : w.chain) {
         chain.push_back({{"i", t.i}, {"j", t.j}, {"t", io::scalar_to_json(t.t)}});
      }
      r["chain"] = chain;
      if (!out_path.empty()) {
         io::write_json_file(out_path, io::to_json(w.matrix.matrix()));
         r["out"] = out_path;
      }
      r["witness"] = nullptr;
      return {r, 0};
   } catch (const not_majorized& e) {
      auto r = make_report("witness", inputs, false);
      r["witness"] = {{"kind", "prefix"}, {"index", e.prefix_index()}};
      return {r, 1};
   }
}

Outcome cmd_extremizers(const std::string& x_path, const std::string& y_path,
                        const GlobalOptions& g)
{
   std::vector<std::string> warnings;
   const auto x = io::read_vector_file(x_path, warnings);
   const auto y = io::read_vector_file(y_path, warnings);
   emit_warnings(warnings);
   const auto rep = extremizer_sets(x, y, g.guard_n);
   const auto n = x.size();
   const auto bound = lemma24_bound(n, rep.distinct_count);
   const bool applies = distinct_count(y) == n;
   const bool respected = rep.maximizers.size() <= bound && rep.minimizers.size() <= bound;

   auto r = make_report("extremizers", canonical_inputs({io::to_json(x), io::to_json(y)}),
                        !applies || respected);
   if (!applies) {
      r["verdict"] = "not_applicable";
   }
   r["M"] = io::scalar_to_json(rep.max_value);
   r["m"] = io::scalar_to_json(rep.min_value);
   r["distinct_count"] = rep.distinct_count;
   r["bound"] = bound;
   r["bound_applies"] = applies;
   json maxs = json::array();
   for (const auto& p : rep.maximizers) {
      maxs.push_back(io::to_json(p));
   }
   json mins = json::array();
   for (const auto& p : rep.minimizers) {
      mins.push_back(io::to_json(p));
   }
   r["maximizers"] = maxs;
   r["minimizers"] = mins;
   r["witness"] = nullptr;
   r["counts"] = {{"I_M", rep.maximizers.size()},
                  {"I_m", rep.minimizers.size()},
                  {"multiplicity_product", multiplicity_factorial_product(x)}};
   return {r, (!applies || respected) ? 0 : 1};
}

json bits_string(const std::array<bool, 5>& bits)
{
   std::string s;
   for (bool b : bits) {
      s += b ? '1' : '0';
   }
   return s;
}

json theorem_json(const Theorem22Report& t)
{
   return {{"bits", bits_string(t.bits)},
           {"consistent", t.consistent},
           {"global_sample_agrees", t.global_sample_agrees},
           {"left", io::to_json(t.left)},
           {"right", io::to_json(t.right)},
           {"point", io::to_json(t.point)},
           {"equiv", io::to_json(t.equiv)},
           {"global_form", io::to_json(t.form)},
           {"global_sampled", io::to_json(t.global)}};
}

Outcome cmd_isotone(const std::string& a_path, const std::string& at_path, bool global,
                    const std::string& predicate, const GlobalOptions& g)
{
   if (global == !at_path.empty()) {
      throw precondition_violated("isotone: exactly one of --at or --global is required");
   }
   std::vector<std::string> warnings;
   const auto a = io::read_matrix_file(a_path, warnings);
   require_square(a);

   if (global) {
      emit_warnings(warnings);
      const auto form = classify_global(a);
      const auto sampled = is_global_isotone_sampled(a, g.trials, g.seed, g.guard_n);
      const bool holds = is_isotone_form(form);
      auto r = make_report("isotone", canonical_inputs({io::to_json(a), "global"}), holds);
      r["mode"] = "global";
      r["classification"] = io::to_json(form);
      r["sampled"] = io::to_json(sampled);
      r["witness"] = io::to_json(sampled.witness);
      return {r, holds ? 0 : 1};
   }

   const auto alpha = io::read_vector_file(at_path, warnings);
   emit_warnings(warnings);
   if (alpha.size() != a.rows()) {
      throw dimension_mismatch("isotone: anchor length differs from matrix size");
   }
   const AnchorPoint anchor(alpha);
   const auto inputs = canonical_inputs({io::to_json(a), io::to_json(alpha), predicate});

   if (predicate == "all") {
      const auto t = verify_theorem22(a, anchor, g.trials, g.seed, g.guard_n);
      const bool holds = t.bits[3];
      auto r = make_report("isotone", inputs, holds);
      r["mode"] = "at";
      r["predicate"] = predicate;
      r["theorem"] = theorem_json(t);
      r["witness"] = io::to_json(t.equiv.witness);
      return {r, holds && t.consistent ? 0 : 1};
   }

   IsotoneVerdict v;
   if (predicate == "left") {
      v = is_left_isotone_at(a, anchor, g.guard_n);
   } else if (predicate == "right") {
      v = is_right_isotone_at(a, anchor, g.trials, g.seed, g.guard_n);
   } else if (predicate == "point") {
      v = is_isotone_at(a, anchor, g.trials, g.seed, g.guard_n);
   } else if (predicate == "equiv") {
      v = is_equiv_preserving_at(a, anchor, g.guard_n);
   } else {
      throw precondition_violated("isotone: unknown predicate '" + predicate + "'");
   }
   auto r = make_report("isotone", inputs, v.holds);
   r["mode"] = "at";
   r["predicate"] = predicate;
   r["sampled"] = v.sampled;
   if (v.sampled && v.holds) {
      r["note"] = "no violation found (" + std::to_string(v.trials) + " trials)";
   }
   r["witness"] = io::to_json(v.witness);
   return {r, v.holds ? 0 : 1};
}

Outcome cmd_verify(std::optional<std::size_t> n_opt, const std::string& alpha_path,
                   std::size_t matrices, const std::vector<std::string>& planted,
                   const GlobalOptions& g)
{
   std::vector<std::string> warnings;
   Vec alpha;
   if (!alpha_path.empty()) {
      alpha = io::read_vector_file(alpha_path, warnings);
      if (n_opt && *n_opt != alpha.size()) {
         throw dimension_mismatch("verify: --n differs from the length of --alpha");
      }
   } else {
      if (!n_opt || *n_opt == 0) {
         throw precondition_violated("verify: --n or --alpha is required");
      }
      std::vector<Rational> entries;
      for (std::size_t k = *n_opt; k > 0; --k) {
         entries.emplace_back(static_cast<long>(k));
      }
      alpha = Vec(std::move(entries));
   }
   const AnchorPoint anchor(alpha);
   if (!anchor.strictly_decreasing()) {
      throw precondition_violated("verify: anchor must be strictly decreasing");
   }
   check_guard(anchor.size(), g.guard_n);

   std::vector<CampaignMatrix> ms;
   json planted_json = json::array();
   for (const auto& path : planted) {
      auto a = io::read_matrix_file(path, warnings);
      if (!a.is_square() || a.rows() != anchor.size()) {
         throw dimension_mismatch("verify: planted matrix '" + path + "' has the wrong size");
      }
      planted_json.push_back(io::to_json(a));
      ms.push_back({MatrixKind::user, std::move(a)});
   }
   emit_warnings(warnings);
   for (auto& m : campaign_matrices(anchor.size(), matrices, g.seed)) {
      ms.push_back(std::move(m));
   }

   const auto report = run_campaign(anchor, ms, g.trials, g.seed, g.guard_n);
   auto r = make_report("verify",
                        canonical_inputs({io::to_json(alpha), matrices, planted_json}),
                        report.clean());
   r["alpha"] = io::to_json(alpha);
   json entries = json::array();
   json failures = json::array();
   for (std::size_t i = 0; i < report.entries.size(); ++i) {
      const auto& e = report.entries[i];
      entries.push_back({{"index", i},
                         {"kind", to_string(e.kind)},
                         {"bits", bits_string(e.theorem->bits)},
                         {"consistent", e.theorem->consistent}});
      if (!e.theorem->consistent || e.violation) {
         failures.push_back({{"index", i},
                             {"matrix", io::to_json(e.matrix)},
                             {"violation", e.violation},
                             {"theorem", theorem_json(*e.theorem)}});
      }
   }
   r["entries"] = entries;
   r["witness"] = failures.empty() ? json(nullptr) : failures;
   r["counts"] = {{"matrices", report.entries.size()},
                  {"consistent", report.consistent},
                  {"inconsistent", report.inconsistent},
                  {"equiv_preserving", report.equiv_preserving},
                  {"non_form_preservers", report.violations},
                  {"global_sample_misses", report.global_sample_misses}};
   return {r, report.clean() ? 0 : 1};
}

void print_text(const json& r)
{
   for (const auto& [key, value] : r.items()) {
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                << '\n';
   }
}

} // namespace

int main(int argc, char** argv)
{
   CLI::App app{"Majorization order, doubly stochastic witnesses and isotone linear maps"};
   app.require_subcommand(1);
   app.fallthrough();

   GlobalOptions g;
   bool json_flag = false;
   app.add_option("--seed", g.seed, "Random seed for sampled predicates and campaigns");
   app.add_option("--trials", g.trials, "Number of random samples per sampled predicate");
   app.add_option("--guard-n", g.guard_n, "Largest n allowed for permutation enumeration");
   app.add_flag("--json", json_flag, "Emit the JSON report (default)");
   app.add_flag("--text", g.text, "Emit a plain key: value report");

   std::string x_path, y_path, out_path, a_path, at_path, alpha_path;
   std::string predicate = "equiv";
   bool global = false;
   std::optional<std::size_t> n_opt;
   std::size_t matrices = 100;
   std::vector<std::string> planted;

   auto* check = app.add_subcommand("check", "Decide x ≺ y by partial sums");
   check->add_option("x", x_path, "Vector file for x")->required();
   check->add_option("y", y_path, "Vector file for y")->required();

   auto* witness = app.add_subcommand("witness", "Construct doubly stochastic D with D y = x");
   witness->add_option("x", x_path, "Vector file for x")->required();
   witness->add_option("y", y_path, "Vector file for y")->required();
   witness->add_option("--out", out_path, "Where to write the witness matrix");

   auto* extremizers = app.add_subcommand("extremizers", "Rearrangement extremes and extremizers");
   extremizers->add_option("x", x_path, "Vector file for x")->required();
   extremizers->add_option("y", y_path, "Vector file for y")->required();

   auto* isotone = app.add_subcommand("isotone", "Isotonicity of a linear map");
   isotone->add_option("A", a_path, "Matrix file")->required();
   isotone->add_option("--at", at_path, "Anchor point vector file");
   isotone->add_flag("--global", global, "Classify global preservation");
   isotone->add_option("--predicate", predicate, "left, right, point, equiv or all")
      ->check(CLI::IsMember({"left", "right", "point", "equiv", "all"}));

   auto* verify = app.add_subcommand("verify", "Point-to-global implication campaign");
   verify->add_option("--n", n_opt, "Dimension; anchor defaults to (n, n-1, ..., 1)");
   verify->add_option("--alpha", alpha_path, "Anchor point vector file");
   verify->add_option("--matrices", matrices, "Number of generated matrices");
   verify->add_option("--planted", planted, "Extra matrix files to include");

   try {
      app.parse(argc, argv);
   } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
   } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e);
   } catch (const CLI::ParseError& e) {
      app.exit(e);
      return 2;
   }

   const auto start = std::chrono::steady_clock::now();
   try {
      Outcome outcome;
      if (check->parsed()) {
         outcome = cmd_check(x_path, y_path);
      } else if (witness->parsed()) {
         outcome = cmd_witness(x_path, y_path, out_path);
      } else if (extremizers->parsed()) {
         outcome = cmd_extremizers(x_path, y_path, g);
      } else if (isotone->parsed()) {
         outcome = cmd_isotone(a_path, at_path, global, predicate, g);
      } else {
         outcome = cmd_verify(n_opt, alpha_path, matrices, planted, g);
      }
      finish(outcome.report, g, start);
      if (g.text) {
         print_text(outcome.report);
      } else {
         std::cout << outcome.report.dump(2) << '\n';
      }
      return outcome.exit_code;
   } catch (const majorization::error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
   } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
   }
}
