// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
// criterion fails. Counts, seeds and time budgets are fixed here.

#include "majorization/io.hpp"
#include "majorization/majorization.hpp"

#include "cli_support.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

namespace {

using namespace majorization;
using testing_support::random_strictly_decreasing;
using testing_support::random_vec;

constexpr double crit1_budget_s = 10.0;
constexpr double crit4_budget_s = 120.0;
constexpr std::size_t campaign_trials = 100;

struct Outcome {
   bool pass = true;
   std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body)
{
   const auto start = std::chrono::steady_clock::now();
   Outcome o;
   try {
      o = body();
   } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
   }
   const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
   std::printf("criterion %d %s %s: %s [%.2f s]\n", id, o.pass ? "PASS" : "FAIL", title.c_str(),
               o.detail.c_str(), secs);
   std::fflush(stdout);
   failures += o.pass ? 0 : 1;
}

double seconds_since(std::chrono::steady_clock::time_point t)
{
   return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

// Random pairs mixing majorized, same-total and unrelated x.
std::pair<Vec, Vec> random_pair(std::size_t n, Rng& rng, int k)
{
   const auto y = random_vec(n, rng);
   if (k % 3 == 0) {
      return {mat_vec(random_ds(n, rng.next(), 1 + rng.below(2 * n)).matrix(), y), y};
   }
   auto x = random_vec(n, rng);
   if (k % 3 == 1) {
      std::vector<Rational> e(x.begin(), x.end());
      e.back() += trace(y) - trace(x);
      x = Vec(std::move(e));
   }
   return {x, y};
}

Outcome criterion1()
{
   const auto start = std::chrono::steady_clock::now();
   std::size_t disagreements = 0;
   std::size_t holds = 0;
   std::size_t total = 0;
   for (std::size_t n = 2; n <= 5; ++n) {
      Rng rng(mix_seed(1, n));
      for (int k = 0; k < 500; ++k) {
         const auto [x, y] = random_pair(n, rng, k);
         const bool order = majorizes(x, y);
         bool constructed = false;
         try {
            const auto w = witness_ds(x, y);
            constructed = check_ds(w.matrix.matrix()) && mat_vec(w.matrix.matrix(), y) == x;
         } catch (const not_majorized&) {
         }
         disagreements += order != constructed ? 1 : 0;
         holds += order ? 1 : 0;
         ++total;
      }
   }
   const double secs = seconds_since(start);
   return {disagreements == 0 && secs < crit1_budget_s && holds > 0 && holds < total,
           std::to_string(total) + " pairs, " + std::to_string(holds) + " majorized, " +
              std::to_string(disagreements) + " disagreements"};
}

// Small value pools so that ties occur regularly.
Vec tie_prone_vec(std::size_t n, Rng& rng)
{
   std::vector<Rational> e;
   const long width = 1 + static_cast<long>(rng.below(n + 1));
   for (std::size_t i = 0; i < n; ++i) {
      e.push_back(make_rational(rng.uniform_int(-width, width), 1 + static_cast<long>(rng.below(2))));
   }
   return Vec(std::move(e));
}

Outcome criterion2()
{
   std::size_t exceptions = 0;
   std::size_t pairs = 0;
   std::size_t set_checks = 0;
   for (std::size_t n = 2; n <= 5; ++n) {
      Rng rng(mix_seed(2, n));
      for (int k = 0; k < 200; ++k) {
         const auto x = k % 2 ? tie_prone_vec(n, rng) : random_vec(n, rng);
         const auto y = k % 4 < 2 ? random_strictly_decreasing(n, rng) : tie_prone_vec(n, rng);
         const auto xs = oracle::sorted_desc(x);
         const auto ys = oracle::sorted_desc(y);
         Rational big = 0;
         Rational small = 0;
         for (std::size_t j = 0; j < n; ++j) {
            big += xs[j] * ys[j];
            small += xs[n - 1 - j] * ys[j];
         }
         const auto ext = extremes(x, y);
         exceptions += ext.max_value != big || ext.min_value != small ? 1 : 0;
         for (const auto& p : enumerate_perms(n)) {
            const auto v = permuted_dot(x, p, y);
            exceptions += v < small || v > big ? 1 : 0;
         }
         if (distinct_count(y) == n) {
            const auto rep = extremizer_sets(x, y);
            std::set<Perm> want_max, want_min;
            for (const auto& p : enumerate_perms(n)) {
               bool is_desc = true;
               bool is_asc = true;
               for (std::size_t j = 0; j < n; ++j) {
                  is_desc &= x[p.image()[j]] == xs[j];
                  is_asc &= x[p.image()[j]] == xs[n - 1 - j];
               }
               if (is_desc) {
                  want_max.insert(p);
               }
               if (is_asc) {
                  want_min.insert(p);
               }
            }
            const std::set<Perm> got_max(rep.maximizers.begin(), rep.maximizers.end());
            const std::set<Perm> got_min(rep.minimizers.begin(), rep.minimizers.end());
            exceptions += got_max != want_max || got_min != want_min ? 1 : 0;
            ++set_checks;
         }
         ++pairs;
      }
   }
   return {exceptions == 0, std::to_string(pairs) + " pairs (" + std::to_string(set_checks) +
                               " with strictly decreasing y), " + std::to_string(exceptions) +
                               " exceptions"};
}

Outcome criterion3()
{
   std::size_t exceptions = 0;
   std::size_t cases = 0;
   std::size_t tied = 0;
   for (std::size_t n = 3; n <= 6; ++n) {
      Rng rng(mix_seed(3, n));
      for (int k = 0; k < 300; ++k) {
         const auto x = tie_prone_vec(n, rng);
         const auto y = random_strictly_decreasing(n, rng);
         const auto rep = extremizer_sets(x, y);
         const auto kx = distinct_count(x);
         const auto bound = lemma24_bound(n, kx);
         const auto exact = multiplicity_factorial_product(x);
         exceptions += rep.maximizers.size() > bound || rep.minimizers.size() > bound ? 1 : 0;
         exceptions += rep.maximizers.size() != exact || rep.minimizers.size() != exact ? 1 : 0;
         tied += kx < n ? 1 : 0;
         ++cases;
      }
   }
   return {exceptions == 0, std::to_string(cases) + " cases (" + std::to_string(tied) +
                               " with ties), " + std::to_string(exceptions) + " exceptions"};
}

struct CampaignOutcome {
   std::size_t planted = 0;
   std::size_t planted_failures = 0;
   std::size_t others = 0;
   std::size_t inconsistent = 0;
   std::size_t violations = 0;
   std::size_t equiv_true = 0;
   std::size_t claim1_exceptions = 0;
   double n4_seconds = 0;
};

CampaignOutcome campaign;

Outcome criterion4()
{
   for (std::size_t n = 2; n <= 4; ++n) {
      const auto start = std::chrono::steady_clock::now();
      std::vector<Rational> a;
      for (std::size_t k = n; k > 0; --k) {
         a.emplace_back(static_cast<long>(k));
      }
      const AnchorPoint anchor{Vec(std::move(a))};
      Rng rng(mix_seed(4, n));
      std::vector<CampaignMatrix> ms;
      for (int k = 0; k < 50; ++k) {
         ms.push_back({MatrixKind::planted_trace, planted_trace_map(n, rng)});
         ms.push_back({MatrixKind::planted_perm_scaled, planted_perm_scaled(n, rng)});
      }
      for (int k = 0; k < 200; ++k) {
         ms.push_back({MatrixKind::uniform, uniform_integer_matrix(n, rng)});
         ms.push_back({MatrixKind::near_ando, near_ando_matrix(n, rng)});
      }
      const auto r = run_campaign(anchor, ms, campaign_trials, mix_seed(40, n));
      for (const auto& e : r.entries) {
         const auto& t = *e.theorem;
         const bool planted = e.kind == MatrixKind::planted_trace ||
                              e.kind == MatrixKind::planted_perm_scaled;
         if (planted) {
            ++campaign.planted;
            bool all = t.consistent;
            for (bool b : t.bits) {
               all &= b;
            }
            campaign.planted_failures += all ? 0 : 1;
         } else {
            ++campaign.others;
            campaign.inconsistent += t.consistent ? 0 : 1;
         }
         campaign.violations += e.violation ? 1 : 0;
         if (t.equiv.holds) {
            ++campaign.equiv_true;
            campaign.claim1_exceptions += column_sums_equal(e.matrix).holds ? 0 : 1;
         }
      }
      if (n == 4) {
         campaign.n4_seconds = seconds_since(start);
      }
   }
   char buf[64];
   std::snprintf(buf, sizeof buf, "%.2f", campaign.n4_seconds);
   return {campaign.planted_failures == 0 && campaign.inconsistent == 0 &&
              campaign.violations == 0 && campaign.n4_seconds < crit4_budget_s,
           std::to_string(campaign.planted) + " planted (" +
              std::to_string(campaign.planted_failures) + " failing), " +
              std::to_string(campaign.others) + " random/near (" +
              std::to_string(campaign.inconsistent) + " inconsistent), " +
              std::to_string(campaign.violations) + " equiv-preserving NotIsotone, n=4 in " + buf +
              " s"};
}

Outcome criterion5()
{
   return {campaign.equiv_true > 0 && campaign.claim1_exceptions == 0,
           std::to_string(campaign.equiv_true) + " exact statement-4 passes, " +
              std::to_string(campaign.claim1_exceptions) + " with unequal column sums"};
}

Outcome criterion6()
{
   Rng rng(6);
   std::size_t exceptions = 0;
   std::size_t preserving = 0;
   for (int k = 0; k < 500; ++k) {
      const std::size_t n = 2 + rng.below(3);
      Mat a;
      switch (k % 4) {
      case 0: a = planted_perm_scaled(n, rng); break;
      case 1: a = planted_trace_map(n, rng); break;
      case 2: a = near_ando_matrix(n, rng); break;
      default: a = uniform_integer_matrix(n, rng); break;
      }
      const AnchorPoint anchor(random_strictly_decreasing(n, rng));
      const auto lambda = rng.rational(-10, 10, 7);
      const bool before = is_equiv_preserving_at(a, anchor).holds;
      const bool after = is_equiv_preserving_at(shift_by_J(a, lambda), anchor).holds;
      exceptions += before != after ? 1 : 0;
      preserving += before ? 1 : 0;
   }
   return {exceptions == 0, "500 cases (" + std::to_string(preserving) + " preserving), " +
                               std::to_string(exceptions) + " exceptions"};
}

Outcome criterion7()
{
   std::size_t exceptions = 0;
   std::size_t max_terms = 0;
   for (std::uint64_t s = 0; s < 200; ++s) {
      const std::size_t n = 2 + s % 4;
      Rng rng(mix_seed(7, s));
      const auto d = random_ds(n, rng.next(), 1 + rng.below(3 * n));
      const auto dec = birkhoff(d);
      exceptions += dec.recompose(n) != d.matrix() ? 1 : 0;
      exceptions += dec.terms.size() > (n - 1) * (n - 1) + 1 ? 1 : 0;
      max_terms = std::max(max_terms, dec.terms.size());
      const auto y = random_vec(n, rng);
      const auto x = mat_vec(d.matrix(), y);
      const auto w = witness_ds(x, y);
      exceptions += w.chain.size() > n - 1 ? 1 : 0;
      exceptions += mat_vec(w.matrix.matrix(), y) != x ? 1 : 0;
   }
   return {exceptions == 0, "200 matrices, largest decomposition " + std::to_string(max_terms) +
                               " terms, " + std::to_string(exceptions) + " exceptions"};
}

Outcome criterion8()
{
   using namespace cli_support;
   std::size_t drift = 0;
   std::size_t bad_codes = 0;
   std::size_t unverified = 0;
   std::size_t witnesses = 0;
   const auto cases = golden_cases();
   for (const auto& c : cases) {
      drift += golden_matches(c) ? 0 : 1;
   }
   const auto table = exit_code_table();
   for (const auto& [args, code] : table) {
      bad_codes += run_cli(args).code == code ? 0 : 1;
   }

   std::vector<std::string> warnings;
   const auto a = io::read_matrix_file((root / "samples/A_diag12.json").string(), warnings);
   const auto alpha = io::read_vector_file((root / "samples/alpha_21.json").string(), warnings);
   for (const auto& c : cases) {
      if (c.code != 1 || c.args.find("A_diag12") == std::string::npos) {
         continue;
      }
      const auto j = json::parse(run_cli(c.args).out);
      const bool global = c.args.find("--global") != std::string::npos;
      ++witnesses;
      unverified += reverify(a, global ? Vec{} : alpha, io::witness_from_json(j.at("witness")))
                       ? 0
                       : 1;
   }
   const auto prefix = json::parse(run_cli("check tests/data/x_300.json tests/data/y_210.json").out);
   const auto c = check_majorization(Vec::from_integers(std::vector<long>{3, 0, 0}),
                                     Vec::from_integers(std::vector<long>{2, 1, 0}));
   ++witnesses;
   unverified += !c.holds && *c.violated_prefix == prefix.at("witness").at("index").get<std::size_t>()
                    ? 0
                    : 1;

   return {drift == 0 && bad_codes == 0 && unverified == 0,
           std::to_string(cases.size()) + " golden reports (" + std::to_string(drift) +
              " drifted), " + std::to_string(table.size()) + " exit codes (" +
              std::to_string(bad_codes) + " wrong), " + std::to_string(witnesses) +
              " witnesses (" + std::to_string(unverified) + " not re-verified)"};
}

} // namespace

int main()
{
   report(1, "majorization cross-definition", criterion1);
   report(2, "rearrangement sandwich and extremizer sets", criterion2);
   report(3, "extremizer count bound", criterion3);
   report(4, "point-to-global campaign", criterion4);
   report(5, "equal column sums", criterion5);
   report(6, "shift invariance", criterion6);
   report(7, "Birkhoff round-trip", criterion7);
   report(8, "CLI contract", criterion8);
   std::printf("%s: %d of 8 criteria failed\n", failures == 0 ? "PASS" : "FAIL", failures);
   return failures == 0 ? 0 : 1;
}
