#ifndef MAJORIZATION_REARRANGEMENT_HPP_INCLUDED
#define MAJORIZATION_REARRANGEMENT_HPP_INCLUDED

// Hardy–Littlewood–Pólya rearrangement extremes and their extremizer sets.
//
// Permutations are stored in the x^T P y^· convention: P attains M(x, y)
// iff x^T P y^· == M(x, y), which is the same as (P^T x)^T y^· == M(x, y).

#include "majorization/numerics.hpp"
#include "majorization/order.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace majorization {

struct Extremes {
   Rational max_value; // M(x, y) = (x^·)^T y^·
   Rational min_value; // m(x, y) = (x_·)^T y^·
};

inline Extremes extremes(const Vec& x, const Vec& y)
{
   if (x.size() != y.size()) {
      throw dimension_mismatch("extremes: lengths differ");
   }
   const auto sx = sort_desc(x);
   const auto ys = sort_desc(y).descending;
   return {dot(sx.descending, ys), dot(sx.ascending, ys)};
}

/// x^T P y^·, with y sorted descending before pairing.
inline Rational permuted_dot(const Vec& x, const Perm& p, const Vec& y)
{
   if (x.size() != y.size() || p.size() != x.size()) {
      throw dimension_mismatch("permuted_dot: lengths differ");
   }
   const auto ys = sort_desc(y).descending;
   Rational acc = 0;
   for (std::size_t j = 0; j < x.size(); ++j) {
      acc += x[p(j)] * ys[j];
   }
   return acc;
}

inline std::size_t distinct_count(const Vec& x)
{
   return std::set<Rational>(x.begin(), x.end()).size();
}

/// (n - k + 1)!, the bound on |I_M| when x has at least k distinct values.
inline std::uint64_t lemma24_bound(std::size_t n, std::size_t k)
{
   if (k < 1 || k > n) {
      throw precondition_violated("lemma24_bound: k must satisfy 1 <= k <= n");
   }
   return factorial(n - k + 1);
}

/// Product of multiplicity! over the distinct values of x; equals |I_M|
/// and |I_m| whenever y has pairwise distinct entries.
inline std::uint64_t multiplicity_factorial_product(const Vec& x)
{
   std::map<Rational, std::size_t> counts;
   for (const auto& v : x) {
      ++counts[v];
   }
   std::uint64_t out = 1;
   for (const auto& [value, count] : counts) {
      out *= factorial(count);
   }
   return out;
}

struct ExtremizerReport {
   Rational max_value;
   Rational min_value;
   std::vector<Perm> maximizers; // I_M
   std::vector<Perm> minimizers; // I_m
   std::size_t distinct_count = 0;
};

/// Exhaustive scan of P_n; extremizers are listed in lexicographic order.
inline ExtremizerReport extremizer_sets(const Vec& x, const Vec& y,
                                        std::size_t guard_n = default_guard_n)
{
   if (x.size() != y.size()) {
      throw dimension_mismatch("extremizer_sets: lengths differ");
   }
   const auto [max_value, min_value] = extremes(x, y);
   const auto ys = sort_desc(y).descending;

   ExtremizerReport out{max_value, min_value, {}, {}, distinct_count(x)};
   for (auto& p : enumerate_perms(x.size(), guard_n)) {
      Rational value = 0;
      for (std::size_t j = 0; j < x.size(); ++j) {
         value += x[p(j)] * ys[j];
      }
      if (value == max_value) {
         out.maximizers.push_back(p);
      }
      if (value == min_value) {
         out.minimizers.push_back(std::move(p));
      }
   }
   return out;
}

} // namespace majorization

#endif
