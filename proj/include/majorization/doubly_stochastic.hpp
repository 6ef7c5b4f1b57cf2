#ifndef MAJORIZATION_DOUBLY_STOCHASTIC_HPP_INCLUDED
#define MAJORIZATION_DOUBLY_STOCHASTIC_HPP_INCLUDED

#include "majorization/numerics.hpp"
#include "majorization/order.hpp"
#include "majorization/random.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace majorization {

/// Nonnegative square matrix; throws dimension_mismatch if A is not square.
inline bool check_ds(const Mat& a)
{
   require_square(a);
   const std::size_t n = a.rows();
   for (std::size_t i = 0; i < n; ++i) {
      Rational row = 0;
      Rational col = 0;
      for (std::size_t j = 0; j < n; ++j) {
         if (sgn(a(i, j)) < 0) {
            return false;
         }
         row += a(i, j);
         col += a(j, i);
      }
      if (row != 1 || col != 1) {
         return false;
      }
   }
   return true;
}

class DoublyStochastic {
public:
   explicit DoublyStochastic(Mat m)
      : matrix_(std::move(m))
      {
         if (!check_ds(matrix_)) {
            throw precondition_violated("matrix is not doubly stochastic");
         }
      }

   const Mat& matrix() const noexcept { return matrix_; }
   std::size_t size() const noexcept { return matrix_.rows(); }

private:
   Mat matrix_;
};

/// (1-t)I + tQ where Q swaps coordinates i and j.
struct TTransform {
   std::size_t i;
   std::size_t j;
   Rational t;

   Mat to_matrix(std::size_t n) const
      {
         std::vector<Rational> data(n * n);
         for (std::size_t k = 0; k < n; ++k) {
            data[k * n + k] = 1;
         }
         const Rational keep = 1 - t;
         data[i * n + i] = keep;
         data[j * n + j] = keep;
         data[i * n + j] = t;
         data[j * n + i] = t;
         return Mat(n, n, std::move(data));
      }
};

struct MajorizationWitness {
   DoublyStochastic matrix;
   /// T-transforms acting on the decreasing rearrangement of y, in the order
   /// applied; the witness is  S_x^T * T_m ... T_1 * S_y.
   std::vector<TTransform> chain;
};

/// Builds D doubly stochastic with D y = x, given x ≺ y.
///
/// Works on the sorted vectors: while z = y^· differs from x^·, take j the
/// last index with z_j > x_j and k the first index after j with z_k < x_k,
/// and move min(z_j - x_j, x_k - z_k) from j to k. Each step fixes at least
/// one coordinate for good, so the chain has at most n-1 transforms.
inline MajorizationWitness witness_ds(const Vec& x, const Vec& y)
{
   const auto check = check_majorization(x, y);
   if (!check.holds) {
      throw not_majorized(*check.violated_prefix);
   }
   const std::size_t n = x.size();
   const auto sx = sort_desc(x);
   const auto sy = sort_desc(y);
   const Vec& target = sx.descending;
   std::vector<Rational> z(sy.descending.begin(), sy.descending.end());

   std::vector<TTransform> chain;
   Mat sorted_witness = Mat::identity(n);
   for (;;) {
      std::optional<std::size_t> j;
      for (std::size_t i = n; i-- > 0;) {
         if (z[i] > target[i]) {
            j = i;
            break;
         }
      }
      if (!j) {
         break;
      }
      std::size_t k = *j + 1;
      while (k < n && !(z[k] < target[k])) {
         ++k;
      }
      if (k == n) {
         throw error("witness_ds: internal inconsistency in T-transform chain");
      }
      const Rational delta = std::min(Rational(z[*j] - target[*j]),
                                      Rational(target[k] - z[k]));
      const Rational t = delta / (z[*j] - z[k]);
      z[*j] -= delta;
      z[k] += delta;
      TTransform step{*j, k, t};
      sorted_witness = mat_mul(step.to_matrix(n), sorted_witness);
      chain.push_back(std::move(step));
   }

   const Mat d = mat_mul(mat_mul(transpose(sx.sort_perm.to_matrix()), sorted_witness),
                         sy.sort_perm.to_matrix());
   return {DoublyStochastic(d), std::move(chain)};
}

struct BirkhoffTerm {
   Rational weight;
   Perm perm;
};

struct BirkhoffDecomposition {
   std::vector<BirkhoffTerm> terms;

   Mat recompose(std::size_t n) const
      {
         Mat acc(n, n);
         for (const auto& term : terms) {
            acc = mat_add(acc, mat_scale(term.weight, term.perm.to_matrix()));
         }
         return acc;
      }
};

namespace detail {

// Kuhn's augmenting-path matching on the positive pattern of `entries`,
// rows scanned in order, columns tried lowest index first.
inline bool augment(const std::vector<Rational>& entries, std::size_t n,
                    std::size_t row, std::vector<bool>& visited,
                    std::vector<std::size_t>& row_of_col)
{
   for (std::size_t col = 0; col < n; ++col) {
      if (sgn(entries[row * n + col]) <= 0 || visited[col]) {
         continue;
      }
      visited[col] = true;
      if (row_of_col[col] == n ||
          augment(entries, n, row_of_col[col], visited, row_of_col)) {
         row_of_col[col] = row;
         return true;
      }
   }
   return false;
}

inline std::optional<Perm> perfect_matching(const std::vector<Rational>& entries,
                                            std::size_t n)
{
   std::vector<std::size_t> row_of_col(n, n);
   for (std::size_t row = 0; row < n; ++row) {
      std::vector<bool> visited(n, false);
      if (!augment(entries, n, row, visited, row_of_col)) {
         return std::nullopt;
      }
   }
   return Perm(std::move(row_of_col));
}

// One nonzero vector c with sum_k c_k vec(P_k) = 0 and sum_k c_k = 0, or
// nullopt when the permutation matrices are affinely independent.
inline std::optional<std::vector<Rational>>
affine_dependency(const std::vector<BirkhoffTerm>& terms, std::size_t n)
{
   const std::size_t m = terms.size();
   const std::size_t rows = n * n + 1;
   std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(m));
   for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
         a[terms[k].perm(j) * n + j][k] = 1;
      }
      a[n * n][k] = 1;
   }

   std::vector<std::size_t> pivot_col;
   std::size_t r = 0;
   for (std::size_t c = 0; c < m && r < rows; ++c) {
      std::size_t p = r;
      while (p < rows && sgn(a[p][c]) == 0) {
         ++p;
      }
      if (p == rows) {
         continue;
      }
      std::swap(a[p], a[r]);
      const Rational lead = a[r][c];
      for (auto& v : a[r]) {
         v /= lead;
      }
      for (std::size_t q = 0; q < rows; ++q) {
         if (q != r && sgn(a[q][c]) != 0) {
            const Rational f = a[q][c];
            for (std::size_t cc = 0; cc < m; ++cc) {
               a[q][cc] -= f * a[r][cc];
            }
         }
      }
      pivot_col.push_back(c);
      ++r;
   }

   std::vector<bool> is_pivot(m, false);
   for (std::size_t c : pivot_col) {
      is_pivot[c] = true;
   }
   const auto free = std::find(is_pivot.begin(), is_pivot.end(), false);
   if (free == is_pivot.end()) {
      return std::nullopt;
   }
   const auto f = static_cast<std::size_t>(free - is_pivot.begin());
   std::vector<Rational> c(m);
   c[f] = 1;
   for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      c[pivot_col[i]] = -a[i][f];
   }
   return c;
}

} // namespace detail

/// Carathéodory reduction: drops terms until at most (n-1)^2 + 1 remain,
/// keeping the represented matrix unchanged.
inline void reduce_terms(std::vector<BirkhoffTerm>& terms, std::size_t n)
{
   const std::size_t bound = (n - 1) * (n - 1) + 1;
   while (terms.size() > bound) {
      const auto c = detail::affine_dependency(terms, n);
      if (!c) {
         throw error("reduce_terms: expected an affine dependency");
      }
      std::optional<Rational> theta;
      for (std::size_t k = 0; k < terms.size(); ++k) {
         if (sgn((*c)[k]) > 0) {
            Rational ratio = terms[k].weight / (*c)[k];
            if (!theta || ratio < *theta) {
               theta = ratio;
            }
         }
      }
      for (std::size_t k = 0; k < terms.size(); ++k) {
         terms[k].weight -= *theta * (*c)[k];
      }
      std::erase_if(terms, [](const BirkhoffTerm& t) { return sgn(t.weight) == 0; });
   }
}

/// Greedy Birkhoff–von Neumann decomposition: repeatedly peel off the
/// smallest entry along a perfect matching of the positive pattern.
inline BirkhoffDecomposition birkhoff(const DoublyStochastic& ds)
{
   const std::size_t n = ds.size();
   std::vector<Rational> rest(ds.matrix().data().begin(), ds.matrix().data().end());
   BirkhoffDecomposition out;
   while (std::any_of(rest.begin(), rest.end(),
                      [](const Rational& v) { return sgn(v) != 0; })) {
      auto perm = detail::perfect_matching(rest, n);
      if (!perm) {
         throw error("birkhoff: positive pattern has no perfect matching");
      }
      Rational w = rest[(*perm)(0) * n];
      for (std::size_t j = 1; j < n; ++j) {
         w = std::min(w, rest[(*perm)(j) * n + j]);
      }
      for (std::size_t j = 0; j < n; ++j) {
         rest[(*perm)(j) * n + j] -= w;
      }
      out.terms.push_back({w, std::move(*perm)});
   }
   reduce_terms(out.terms, n);
   return out;
}

/// Convex combination of `steps` uniformly drawn permutation matrices with
/// weights on the grid 1/D, D = max(max_den, steps).
inline DoublyStochastic random_ds(std::size_t n, std::uint64_t seed,
                                  std::size_t steps, long max_den = 1000)
{
   if (n == 0 || steps == 0) {
      throw precondition_violated("random_ds: n and steps must be positive");
   }
   Rng rng(seed);
   const long den = std::max<long>(max_den, static_cast<long>(steps));
   std::set<long> cuts;
   while (cuts.size() + 1 < steps) {
      cuts.insert(rng.uniform_int(1, den - 1));
   }
   std::vector<long> bounds{0};
   bounds.insert(bounds.end(), cuts.begin(), cuts.end());
   bounds.push_back(den);

   Mat acc(n, n);
   for (std::size_t s = 0; s < steps; ++s) {
      const auto p = rng.permutation(n);
      const Rational w = make_rational(bounds[s + 1] - bounds[s], den);
      acc = mat_add(acc, mat_scale(w, p.to_matrix()));
   }
   return DoublyStochastic(std::move(acc));
}

} // namespace majorization

#endif
