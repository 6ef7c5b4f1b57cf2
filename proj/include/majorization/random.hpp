#ifndef MAJORIZATION_RANDOM_HPP_INCLUDED
#define MAJORIZATION_RANDOM_HPP_INCLUDED

#include "majorization/numerics.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace majorization {

/// splitmix64 finalizer; used to derive independent per-cell seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index)
{
   std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
   z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
   return z ^ (z >> 31);
}

/// Value-passed random handle. Draws are implemented directly on the raw
/// engine output so sequences do not depend on the standard library's
/// distribution implementations.
class Rng {
public:
   explicit Rng(std::uint64_t seed)
      : engine_(seed)
      {
      }

   std::uint64_t next() { return engine_(); }

   /// Uniform in [0, bound), bound > 0.
   std::uint64_t below(std::uint64_t bound)
      {
         const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
         std::uint64_t v;
         do {
            v = engine_();
         } while (v >= limit);
         return v % bound;
      }

   /// Uniform in [lo, hi].
   long uniform_int(long lo, long hi)
      {
         const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
         return lo + static_cast<long>(below(span));
      }

   /// Uniform rational p/q with q in [1, max_den] and p/q in [lo, hi].
   Rational rational(long lo, long hi, long max_den)
      {
         const long den = uniform_int(1, max_den);
         const long num = uniform_int(lo * den, hi * den);
         return make_rational(num, den);
      }

   Perm permutation(std::size_t n)
      {
         std::vector<std::size_t> image(n);
         for (std::size_t i = 0; i < n; ++i) {
            image[i] = i;
         }
         for (std::size_t i = n; i > 1; --i) {
            std::swap(image[i - 1], image[below(i)]);
         }
         return Perm(std::move(image));
      }

private:
   std::mt19937_64 engine_;
};

} // namespace majorization

#endif
