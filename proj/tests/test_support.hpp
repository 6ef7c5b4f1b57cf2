#ifndef MAJORIZATION_TESTS_TEST_SUPPORT_HPP_INCLUDED
#define MAJORIZATION_TESTS_TEST_SUPPORT_HPP_INCLUDED

#include "majorization/majorization.hpp"

#include <vector>

namespace testing_support {

using namespace majorization;

inline Vec ints(std::initializer_list<long> values)
{
   std::vector<Rational> entries;
   for (long v : values) {
      entries.emplace_back(v);
   }
   return Vec(std::move(entries));
}

/// Random rational vector with entries p/q, |p/q| <= bound, q <= max_den.
inline Vec random_vec(std::size_t n, Rng& rng, long bound = 5, long max_den = 4)
{
   std::vector<Rational> entries;
   for (std::size_t i = 0; i < n; ++i) {
      entries.push_back(rng.rational(-bound, bound, max_den));
   }
   return Vec(std::move(entries));
}

/// Small-support vector so ties and majorization coincidences are common.
inline Vec random_small_int_vec(std::size_t n, Rng& rng, long lo = 0, long hi = 3)
{
   std::vector<Rational> entries;
   for (std::size_t i = 0; i < n; ++i) {
      entries.emplace_back(rng.uniform_int(lo, hi));
   }
   return Vec(std::move(entries));
}

/// Strictly decreasing random rational vector.
inline Vec random_strictly_decreasing(std::size_t n, Rng& rng)
{
   std::vector<Rational> entries;
   Rational current = rng.rational(-3, 3, 4);
   for (std::size_t i = 0; i < n; ++i) {
      entries.push_back(current);
      current -= make_rational(rng.uniform_int(1, 12), rng.uniform_int(1, 4));
   }
   return Vec(std::move(entries));
}

inline Mat random_int_matrix(std::size_t n, Rng& rng, long lo, long hi)
{
   std::vector<Rational> data(n * n);
   for (auto& v : data) {
      v = rng.uniform_int(lo, hi);
   }
   return Mat(n, n, std::move(data));
}

} // namespace testing_support

#endif
