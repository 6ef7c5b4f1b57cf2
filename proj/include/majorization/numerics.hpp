#ifndef MAJORIZATION_NUMERICS_HPP_INCLUDED
#define MAJORIZATION_NUMERICS_HPP_INCLUDED

// Exact rational scalars, vectors, square/rectangular matrices and
// permutations. Every value type here is immutable after construction.

#include "majorization/errors.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace majorization {

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

/// Default upper bound on n for anything that enumerates P_n.
inline constexpr std::size_t default_guard_n = 8;

inline Rational make_rational(long num, long den = 1)
{
   if (den == 0) {
      throw precondition_violated("zero denominator");
   }
   Rational r{mpz_class(num), mpz_class(den)};
   r.canonicalize();
   return r;
}

/// Parses "p", "-p" or "p/q" exactly. Rejects anything else.
inline Rational parse_rational(std::string_view text)
{
   const auto valid_integer = [](std::string_view s, bool allow_sign) {
      if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
         s.remove_prefix(1);
      }
      return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
         return c >= '0' && c <= '9';
      });
   };

   const auto slash = text.find('/');
   const auto num = text.substr(0, slash);
   if (!valid_integer(num, true)) {
      throw parse_error("malformed rational '" + std::string(text) + "'");
   }
   std::string canonical(num.front() == '+' ? num.substr(1) : num);
   if (slash != std::string_view::npos) {
      const auto den = text.substr(slash + 1);
      if (!valid_integer(den, false)) {
         throw parse_error("malformed rational '" + std::string(text) + "'");
      }
      if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; })) {
         throw parse_error("zero denominator in '" + std::string(text) + "'");
      }
      canonical += '/';
      canonical += den;
   }
   Rational r;
   if (r.set_str(canonical, 10) != 0) {
      throw parse_error("malformed rational '" + std::string(text) + "'");
   }
   r.canonicalize();
   return r;
}

/// Exact conversion of a binary64 value (every finite double is rational).
inline Rational rational_from_double(double value)
{
   Rational r(value);
   r.canonicalize();
   return r;
}

inline std::string to_string(const Rational& r)
{
   return r.get_str(10);
}

inline bool is_integer(const Rational& r)
{
   return r.get_den() == 1;
}

class Vec {
public:
   using value_type = Rational;
   using const_iterator = std::vector<Rational>::const_iterator;

   Vec() = default;
   explicit Vec(std::vector<Rational> entries)
      : entries_(std::move(entries))
      {
      }
   Vec(std::initializer_list<Rational> entries)
      : entries_(entries)
      {
      }

   static Vec from_integers(std::span<const long> values)
      {
         std::vector<Rational> entries;
         entries.reserve(values.size());
         for (long v : values) {
            entries.emplace_back(v);
         }
         return Vec(std::move(entries));
      }

   static Vec constant(std::size_t n, const Rational& value)
      {
         return Vec(std::vector<Rational>(n, value));
      }

   std::size_t size() const noexcept { return entries_.size(); }
   const Rational& operator[](std::size_t i) const { return entries_[i]; }
   const_iterator begin() const noexcept { return entries_.begin(); }
   const_iterator end() const noexcept { return entries_.end(); }
   std::span<const Rational> entries() const noexcept { return entries_; }

   friend bool operator==(const Vec&, const Vec&) = default;

private:
   std::vector<Rational> entries_;
};

/// Row-major rectangular matrix.
class Mat {
public:
   Mat() = default;

   Mat(std::size_t rows, std::size_t cols, std::vector<Rational> data)
      : rows_(rows)
      , cols_(cols)
      , data_(std::move(data))
      {
         if (data_.size() != rows_ * cols_) {
            throw dimension_mismatch("matrix data does not match shape");
         }
      }

   Mat(std::size_t rows, std::size_t cols)
      : Mat(rows, cols, std::vector<Rational>(rows * cols))
      {
      }

   /// Builds a matrix from nested rows; all rows must have equal length.
   static Mat from_rows(const std::vector<std::vector<Rational>>& rows)
      {
         if (rows.empty()) {
            return Mat();
         }
         const std::size_t cols = rows.front().size();
         std::vector<Rational> data;
         data.reserve(rows.size() * cols);
         for (const auto& row : rows) {
            if (row.size() != cols) {
               throw dimension_mismatch("ragged matrix rows");
            }
            data.insert(data.end(), row.begin(), row.end());
         }
         return Mat(rows.size(), cols, std::move(data));
      }

   static Mat from_integers(
      std::initializer_list<std::initializer_list<long>> rows)
      {
         std::vector<std::vector<Rational>> converted;
         for (const auto& row : rows) {
            std::vector<Rational> r;
            for (long v : row) {
               r.emplace_back(v);
            }
            converted.push_back(std::move(r));
         }
         return from_rows(converted);
      }

   static Mat identity(std::size_t n)
      {
         Mat m(n, n);
         for (std::size_t i = 0; i < n; ++i) {
            m.data_[i * n + i] = 1;
         }
         return m;
      }

   /// The all-ones matrix J.
   static Mat ones(std::size_t n)
      {
         return Mat(n, n, std::vector<Rational>(n * n, Rational(1)));
      }

   std::size_t rows() const noexcept { return rows_; }
   std::size_t cols() const noexcept { return cols_; }
   bool is_square() const noexcept { return rows_ == cols_; }

   const Rational& operator()(std::size_t i, std::size_t j) const
      {
         return data_[i * cols_ + j];
      }

   Vec row(std::size_t i) const
      {
         return Vec(std::vector<Rational>(data_.begin() + i * cols_,
                                          data_.begin() + (i + 1) * cols_));
      }

   Vec column(std::size_t j) const
      {
         std::vector<Rational> c;
         c.reserve(rows_);
         for (std::size_t i = 0; i < rows_; ++i) {
            c.push_back((*this)(i, j));
         }
         return Vec(std::move(c));
      }

   std::span<const Rational> data() const noexcept { return data_; }

   friend bool operator==(const Mat&, const Mat&) = default;

private:
   std::size_t rows_ = 0;
   std::size_t cols_ = 0;
   std::vector<Rational> data_;
};

inline void require_square(const Mat& a)
{
   if (!a.is_square()) {
      throw dimension_mismatch("matrix must be square");
   }
}

inline Vec mat_vec(const Mat& a, const Vec& x)
{
   if (a.cols() != x.size()) {
      throw dimension_mismatch("mat_vec: column count differs from vector length");
   }
   std::vector<Rational> out(a.rows());
   for (std::size_t i = 0; i < a.rows(); ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < a.cols(); ++j) {
         acc += a(i, j) * x[j];
      }
      out[i] = acc;
   }
   return Vec(std::move(out));
}

inline Mat mat_mul(const Mat& a, const Mat& b)
{
   if (a.cols() != b.rows()) {
      throw dimension_mismatch("mat_mul: inner dimensions differ");
   }
   std::vector<Rational> out(a.rows() * b.cols());
   for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
         Rational acc = 0;
         for (std::size_t k = 0; k < a.cols(); ++k) {
            acc += a(i, k) * b(k, j);
         }
         out[i * b.cols() + j] = acc;
      }
   }
   return Mat(a.rows(), b.cols(), std::move(out));
}

inline Mat mat_add(const Mat& a, const Mat& b)
{
   if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw dimension_mismatch("mat_add: shapes differ");
   }
   std::vector<Rational> out(a.data().begin(), a.data().end());
   for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] += b.data()[k];
   }
   return Mat(a.rows(), a.cols(), std::move(out));
}

inline Mat mat_scale(const Rational& s, const Mat& a)
{
   std::vector<Rational> out(a.data().begin(), a.data().end());
   for (auto& v : out) {
      v *= s;
   }
   return Mat(a.rows(), a.cols(), std::move(out));
}

inline Mat transpose(const Mat& a)
{
   std::vector<Rational> out(a.rows() * a.cols());
   for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
         out[j * a.rows() + i] = a(i, j);
      }
   }
   return Mat(a.cols(), a.rows(), std::move(out));
}

inline Rational dot(const Vec& x, const Vec& y)
{
   if (x.size() != y.size()) {
      throw dimension_mismatch("dot: lengths differ");
   }
   Rational acc = 0;
   for (std::size_t i = 0; i < x.size(); ++i) {
      acc += x[i] * y[i];
   }
   return acc;
}

inline Vec vec_add(const Vec& x, const Vec& y)
{
   if (x.size() != y.size()) {
      throw dimension_mismatch("vec_add: lengths differ");
   }
   std::vector<Rational> out(x.begin(), x.end());
   for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] += y[i];
   }
   return Vec(std::move(out));
}

inline Vec vec_scale(const Rational& s, const Vec& x)
{
   std::vector<Rational> out(x.begin(), x.end());
   for (auto& v : out) {
      v *= s;
   }
   return Vec(std::move(out));
}

/// A bijection of {0..n-1}. `image()[j]` is where j is sent.
///
/// Conventions: the permutation matrix has a 1 at (P(j), j), so
/// `apply(x)[P(j)] == x[j]` and `to_matrix(P) * x == apply(x)`;
/// composition `compose(p, q)` is p after q.
class Perm {
public:
   Perm() = default;

   explicit Perm(std::vector<std::size_t> image)
      : image_(std::move(image))
      {
         std::vector<bool> seen(image_.size(), false);
         for (std::size_t v : image_) {
            if (v >= image_.size() || seen[v]) {
               throw precondition_violated("perm image is not a bijection");
            }
            seen[v] = true;
         }
      }

   static Perm identity(std::size_t n)
      {
         std::vector<std::size_t> image(n);
         std::iota(image.begin(), image.end(), std::size_t{0});
         return Perm(std::move(image), unchecked{});
      }

   static Perm transposition(std::size_t n, std::size_t i, std::size_t j)
      {
         auto p = identity(n);
         std::swap(p.image_.at(i), p.image_.at(j));
         return p;
      }

   std::size_t size() const noexcept { return image_.size(); }
   std::size_t operator()(std::size_t j) const { return image_[j]; }
   std::span<const std::size_t> image() const noexcept { return image_; }

   bool is_identity() const noexcept
      {
         for (std::size_t j = 0; j < image_.size(); ++j) {
            if (image_[j] != j) {
               return false;
            }
         }
         return true;
      }

   Perm inverse() const
      {
         std::vector<std::size_t> inv(image_.size());
         for (std::size_t j = 0; j < image_.size(); ++j) {
            inv[image_[j]] = j;
         }
         return Perm(std::move(inv), unchecked{});
      }

   Mat to_matrix() const
      {
         const std::size_t n = image_.size();
         std::vector<Rational> data(n * n);
         for (std::size_t j = 0; j < n; ++j) {
            data[image_[j] * n + j] = 1;
         }
         return Mat(n, n, std::move(data));
      }

   friend Perm compose(const Perm& p, const Perm& q)
      {
         if (p.size() != q.size()) {
            throw dimension_mismatch("compose: permutation sizes differ");
         }
         std::vector<std::size_t> image(q.size());
         for (std::size_t j = 0; j < q.size(); ++j) {
            image[j] = p.image_[q.image_[j]];
         }
         return Perm(std::move(image), unchecked{});
      }

   friend bool operator==(const Perm&, const Perm&) = default;
   friend auto operator<=>(const Perm&, const Perm&) = default;

private:
   struct unchecked {};
   Perm(std::vector<std::size_t> image, unchecked)
      : image_(std::move(image))
      {
      }

   std::vector<std::size_t> image_;
};

/// Entry i of the result is x[P^{-1}(i)].
inline Vec perm_apply(const Perm& p, const Vec& x)
{
   if (p.size() != x.size()) {
      throw dimension_mismatch("perm_apply: lengths differ");
   }
   std::vector<Rational> out(x.size());
   for (std::size_t j = 0; j < x.size(); ++j) {
      out[p(j)] = x[j];
   }
   return Vec(std::move(out));
}

inline void check_guard(std::size_t n, std::size_t guard_n)
{
   if (n > guard_n) {
      throw guard_exceeded(n, guard_n);
   }
}

/// All n! permutations in lexicographic order of their image lists.
inline std::vector<Perm> enumerate_perms(std::size_t n,
                                         std::size_t guard_n = default_guard_n)
{
   if (n == 0) {
      throw precondition_violated("enumerate_perms: n must be positive");
   }
   check_guard(n, guard_n);
   std::vector<std::size_t> image(n);
   std::iota(image.begin(), image.end(), std::size_t{0});
   std::vector<Perm> out;
   do {
      out.emplace_back(image);
   } while (std::next_permutation(image.begin(), image.end()));
   return out;
}

inline std::uint64_t factorial(std::size_t n)
{
   std::uint64_t f = 1;
   for (std::size_t k = 2; k <= n; ++k) {
      f *= k;
   }
   return f;
}

} // namespace majorization

#endif
