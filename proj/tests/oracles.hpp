#ifndef MAJORIZATION_TESTS_ORACLES_HPP_INCLUDED
#define MAJORIZATION_TESTS_ORACLES_HPP_INCLUDED

// Reference computations used only by the tests. They deliberately avoid the
// library's sorting/prefix-sum machinery so they can check it independently.

#include "majorization/numerics.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using majorization::Rational;
using majorization::Vec;

inline std::vector<Rational> mat_vec(const std::vector<std::vector<Rational>>& a,
                                     const std::vector<Rational>& x)
{
   std::vector<Rational> out;
   for (const auto& row : a) {
      Rational s = 0;
      for (std::size_t j = 0; j < row.size(); ++j) {
         s += row[j] * x[j];
      }
      out.push_back(s);
   }
   return out;
}

inline Rational positive_part_sum(const Vec& v, const Rational& t)
{
   Rational s = 0;
   for (const auto& e : v) {
      if (e > t) {
         s += e - t;
      }
   }
   return s;
}

/// x ≺ y via the convex-function characterization: equal totals and
/// Σ(x_i - t)_+ <= Σ(y_i - t)_+ for every t. Both sides are piecewise linear
/// with breakpoints at the entries, so checking those t is enough.
inline bool majorizes(const Vec& x, const Vec& y)
{
   Rational tx = 0;
   Rational ty = 0;
   for (std::size_t i = 0; i < x.size(); ++i) {
      tx += x[i];
      ty += y[i];
   }
   if (tx != ty) {
      return false;
   }
   std::vector<Rational> ts(x.begin(), x.end());
   ts.insert(ts.end(), y.begin(), y.end());
   for (const auto& t : ts) {
      if (positive_part_sum(x, t) > positive_part_sum(y, t)) {
         return false;
      }
   }
   return true;
}

inline bool is_permutation_of(const Vec& x, const Vec& y)
{
   return x.size() == y.size() && std::is_permutation(x.begin(), x.end(), y.begin());
}

inline std::vector<Rational> sorted_desc(const Vec& v)
{
   std::vector<Rational> s(v.begin(), v.end());
   std::sort(s.begin(), s.end(), std::greater<>());
   return s;
}

/// Calls f(sigma) for every index permutation sigma of {0..n-1}.
template <class F>
void for_each_index_perm(std::size_t n, F&& f)
{
   std::vector<std::size_t> sigma(n);
   std::iota(sigma.begin(), sigma.end(), std::size_t{0});
   do {
      f(sigma);
   } while (std::next_permutation(sigma.begin(), sigma.end()));
}

struct BruteExtremes {
   Rational max_value;
   Rational min_value;
   std::size_t max_count = 0;
   std::size_t min_count = 0;
};

/// max/min of Σ_j x[σ(j)]·y^·_j over all σ, and how many σ attain each.
inline BruteExtremes extremes(const Vec& x, const Vec& y)
{
   const auto ys = sorted_desc(y);
   std::vector<Rational> values;
   for_each_index_perm(x.size(), [&](const std::vector<std::size_t>& sigma) {
      Rational s = 0;
      for (std::size_t j = 0; j < x.size(); ++j) {
         s += x[sigma[j]] * ys[j];
      }
      values.push_back(s);
   });
   BruteExtremes out;
   out.max_value = *std::max_element(values.begin(), values.end());
   out.min_value = *std::min_element(values.begin(), values.end());
   out.max_count = static_cast<std::size_t>(std::count(values.begin(), values.end(), out.max_value));
   out.min_count = static_cast<std::size_t>(std::count(values.begin(), values.end(), out.min_value));
   return out;
}

inline std::uint64_t factorial(std::size_t n)
{
   return n <= 1 ? 1 : n * factorial(n - 1);
}

} // namespace oracle

#endif
