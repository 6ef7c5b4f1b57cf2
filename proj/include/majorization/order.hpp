#ifndef MAJORIZATION_ORDER_HPP_INCLUDED
#define MAJORIZATION_ORDER_HPP_INCLUDED

// The majorization preorder on R^n, decided exactly by the partial-sum
// criterion on decreasing rearrangements.

#include "majorization/numerics.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace majorization {

struct SortedView {
   Vec descending;
   Vec ascending;
   /// perm_apply(sort_perm, x) == descending.
   Perm sort_perm;
};

/// Decreasing and increasing rearrangements. Ties keep the lower original
/// index first, so sort_perm is deterministic.
inline SortedView sort_desc(const Vec& x)
{
   const std::size_t n = x.size();
   std::vector<std::size_t> order(n);
   std::iota(order.begin(), order.end(), std::size_t{0});
   std::stable_sort(order.begin(), order.end(),
                    [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });

   std::vector<std::size_t> image(n);
   std::vector<Rational> desc(n);
   for (std::size_t k = 0; k < n; ++k) {
      image[order[k]] = k;
      desc[k] = x[order[k]];
   }
   std::vector<Rational> asc(desc.rbegin(), desc.rend());
   return {Vec(std::move(desc)), Vec(std::move(asc)), Perm(std::move(image))};
}

inline Rational trace(const Vec& x)
{
   Rational acc = 0;
   for (const auto& v : x) {
      acc += v;
   }
   return acc;
}

struct MajorizationCheck {
   bool holds = false;
   /// Prefix sums of the decreasing rearrangements, k = 1..n.
   std::vector<Rational> x_prefix;
   std::vector<Rational> y_prefix;
   /// First violated prefix length (1-based); n when only totals differ.
   std::optional<std::size_t> violated_prefix;
};

/// Full prefix-sum table for the question "x ≺ y".
inline MajorizationCheck check_majorization(const Vec& x, const Vec& y)
{
   if (x.size() != y.size()) {
      throw dimension_mismatch("majorization: lengths differ");
   }
   const std::size_t n = x.size();
   const auto xs = sort_desc(x).descending;
   const auto ys = sort_desc(y).descending;

   MajorizationCheck out;
   out.x_prefix.reserve(n);
   out.y_prefix.reserve(n);
   Rational sx = 0;
   Rational sy = 0;
   for (std::size_t k = 0; k < n; ++k) {
      sx += xs[k];
      sy += ys[k];
      out.x_prefix.push_back(sx);
      out.y_prefix.push_back(sy);
      if (!out.violated_prefix && k + 1 < n && sx > sy) {
         out.violated_prefix = k + 1;
      }
   }
   if (!out.violated_prefix && n > 0 && sx != sy) {
      out.violated_prefix = n;
   }
   out.holds = !out.violated_prefix.has_value();
   return out;
}

/// True iff x ≺ y (x is majorized by y). Note the argument order.
inline bool majorizes(const Vec& x, const Vec& y)
{
   if (x.size() != y.size()) {
      throw dimension_mismatch("majorization: lengths differ");
   }
   const auto xs = sort_desc(x).descending;
   const auto ys = sort_desc(y).descending;
   Rational sx = 0;
   Rational sy = 0;
   for (std::size_t k = 0; k < xs.size(); ++k) {
      sx += xs[k];
      sy += ys[k];
      if (sx > sy) {
         return false;
      }
   }
   return sx == sy;
}

/// x ∼ y: mutual majorization.
inline bool equivalent(const Vec& x, const Vec& y)
{
   return majorizes(x, y) && majorizes(y, x);
}

/// Distinct vectors of the orbit {Pα : P ∈ P_n}, in first-seen order of the
/// lexicographic permutation enumeration.
inline std::vector<Vec> permutohedron_vertices(const Vec& alpha,
                                               std::size_t guard_n = default_guard_n)
{
   std::vector<Vec> out;
   std::set<std::vector<Rational>> seen;
   for (const auto& p : enumerate_perms(alpha.size(), guard_n)) {
      auto v = perm_apply(p, alpha);
      std::vector<Rational> key(v.begin(), v.end());
      if (seen.insert(std::move(key)).second) {
         out.push_back(std::move(v));
      }
   }
   return out;
}

} // namespace majorization

#endif
