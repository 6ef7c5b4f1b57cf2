#ifndef MAJORIZATION_ISOTONE_HPP_INCLUDED
#define MAJORIZATION_ISOTONE_HPP_INCLUDED

// Isotonicity of linear maps x -> A x with respect to majorization, both
// globally and localized at an anchor point α.
//
// Finite reductions used throughout:
//  * {y : y ≺ c} is convex and (Rado) {y : y ≺ α} = conv{Qα : Q ∈ P_n},
//    so "A y ≺ c for all y ≺ α" holds iff it holds at every vertex Qα.
//  * y ∼ α iff y is a permutation of α.
// {y : α ≺ y} is unbounded, so every predicate with a right half is
// sampled: a failure is definitive, a pass only means no violation was found.

#include "majorization/numerics.hpp"
#include "majorization/order.hpp"
#include "majorization/random.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace majorization {

class AnchorPoint {
public:
   explicit AnchorPoint(Vec alpha)
      : alpha_(std::move(alpha))
      {
         if (alpha_.size() == 0) {
            throw precondition_violated("anchor point must be non-empty");
         }
         strictly_decreasing_ = true;
         for (std::size_t i = 1; i < alpha_.size(); ++i) {
            if (!(alpha_[i - 1] > alpha_[i])) {
               strictly_decreasing_ = false;
            }
         }
      }

   const Vec& alpha() const noexcept { return alpha_; }
   std::size_t size() const noexcept { return alpha_.size(); }
   bool strictly_decreasing() const noexcept { return strictly_decreasing_; }

private:
   Vec alpha_;
   bool strictly_decreasing_ = false;
};

/// A·Pα ≁ A·α.
struct PermWitness {
   Perm p;
};
/// A·Qα ⊀ A·Pα.
struct PairWitness {
   Perm p;
   Perm q;
};
/// α ≺ y, but A·Pα ⊀ A·y.
struct SampleWitness {
   Perm p;
   Vec y;
};
/// A·Qα ⊀ A·α.
struct LeftHalfWitness {
   Perm q;
};
/// α ≺ y, but A·α ⊀ A·y.
struct RightHalfWitness {
   Vec y;
};
/// A·Qy ⊀ A·y (and Qy ≺ y trivially).
struct GlobalWitness {
   Vec y;
   Perm q;
};
/// Column sums s and t differ.
struct ColumnPairWitness {
   std::size_t s;
   std::size_t t;
};

using Witness = std::variant<std::monostate, PermWitness, PairWitness, SampleWitness,
                             LeftHalfWitness, RightHalfWitness, GlobalWitness,
                             ColumnPairWitness>;

struct IsotoneVerdict {
   bool holds = true;
   /// True when part of the verdict rests on random samples.
   bool sampled = false;
   std::size_t trials = 0;
   Witness witness;
};

/// True iff `w` is a genuine counterexample for A at α (α is ignored for
/// global and column witnesses).
inline bool reverify(const Mat& a, const Vec& alpha, const Witness& w)
{
   const auto image = [&](const Vec& v) { return mat_vec(a, v); };
   const auto orbit = [&](const Perm& p) { return image(perm_apply(p, alpha)); };
   struct visitor {
      const Mat& a;
      const Vec& alpha;
      decltype(image)& img;
      decltype(orbit)& orb;

      bool operator()(std::monostate) const { return false; }
      bool operator()(const PermWitness& w) const
         {
            return !equivalent(orb(w.p), img(alpha));
         }
      bool operator()(const PairWitness& w) const
         {
            return !majorizes(orb(w.q), orb(w.p));
         }
      bool operator()(const SampleWitness& w) const
         {
            return majorizes(alpha, w.y) && !majorizes(orb(w.p), img(w.y));
         }
      bool operator()(const LeftHalfWitness& w) const
         {
            return !majorizes(orb(w.q), img(alpha));
         }
      bool operator()(const RightHalfWitness& w) const
         {
            return majorizes(alpha, w.y) && !majorizes(img(alpha), img(w.y));
         }
      bool operator()(const GlobalWitness& w) const
         {
            return !majorizes(img(perm_apply(w.q, w.y)), img(w.y));
         }
      bool operator()(const ColumnPairWitness& w) const
         {
            return trace(a.column(w.s)) != trace(a.column(w.t));
         }
   };
   return std::visit(visitor{a, alpha, image, orbit}, w);
}

namespace detail {

struct OrbitImage {
   Perm perm;
   Vec point; // Pα
   Vec image; // A·Pα
};

// One entry per distinct Pα (first permutation in lexicographic order).
inline std::vector<OrbitImage> orbit_images(const Mat& a, const Vec& alpha,
                                            std::size_t guard_n)
{
   require_square(a);
   if (a.rows() != alpha.size()) {
      throw dimension_mismatch("matrix and anchor sizes differ");
   }
   std::vector<OrbitImage> out;
   std::set<std::vector<Rational>> seen;
   for (auto& p : enumerate_perms(alpha.size(), guard_n)) {
      auto point = perm_apply(p, alpha);
      if (!seen.insert(std::vector<Rational>(point.begin(), point.end())).second) {
         continue;
      }
      auto image = mat_vec(a, point);
      out.push_back({std::move(p), std::move(point), std::move(image)});
   }
   return out;
}

} // namespace detail

/// Random y with α ≺ y: 1..3n reverse T-transforms (mass moved from a
/// smaller entry to a larger one), then a random permutation.
inline Vec sample_majorizing(const Vec& alpha, Rng& rng)
{
   const std::size_t n = alpha.size();
   std::vector<Rational> z(alpha.begin(), alpha.end());
   if (n < 2) {
      return alpha;
   }
   const auto sorted = sort_desc(alpha).descending;
   Rational scale = sorted[0] - sorted[n - 1];
   if (scale < 1) {
      scale = 1;
   }
   const long steps = rng.uniform_int(1, 3 * static_cast<long>(n));
   for (long s = 0; s < steps; ++s) {
      auto i = static_cast<std::size_t>(rng.below(n));
      auto j = static_cast<std::size_t>(rng.below(n - 1));
      if (j >= i) {
         ++j;
      }
      if (z[i] < z[j]) {
         std::swap(i, j);
      }
      const long den = rng.uniform_int(1, 8);
      const Rational t = scale * make_rational(rng.uniform_int(1, 2 * den), den);
      z[i] += t;
      z[j] -= t;
   }
   return perm_apply(rng.permutation(n), Vec(std::move(z)));
}

/// Random vector with pairwise distinct rational entries.
inline Vec sample_distinct(std::size_t n, Rng& rng)
{
   const long den = rng.uniform_int(1, 6);
   const long range = 5 * static_cast<long>(n);
   std::set<long> used;
   std::vector<Rational> entries;
   while (entries.size() < n) {
      const long v = rng.uniform_int(-range, range);
      if (used.insert(v).second) {
         entries.push_back(make_rational(v, den));
      }
   }
   return Vec(std::move(entries));
}

/// Φ(y) ∼ Φ(α) for every y ∼ α; decided exactly over the orbit of α.
inline IsotoneVerdict is_equiv_preserving_at(const Mat& a, const AnchorPoint& anchor,
                                             std::size_t guard_n = default_guard_n)
{
   const auto base = mat_vec(a, anchor.alpha());
   for (const auto& o : detail::orbit_images(a, anchor.alpha(), guard_n)) {
      if (!equivalent(o.image, base)) {
         return {false, false, 0, PermWitness{o.perm}};
      }
   }
   return {};
}

/// Φ(y) ≺ Φ(Pα) for every P and every y ≺ α; exact via the vertex reduction.
inline IsotoneVerdict is_left_isotone_at(const Mat& a, const AnchorPoint& anchor,
                                         std::size_t guard_n = default_guard_n)
{
   const auto orbit = detail::orbit_images(a, anchor.alpha(), guard_n);
   for (const auto& target : orbit) {
      for (const auto& source : orbit) {
         if (!majorizes(source.image, target.image)) {
            return {false, false, 0, PairWitness{target.perm, source.perm}};
         }
      }
   }
   return {};
}

/// Φ(Pα) ≺ Φ(y) for every P and every y with α ≺ y. Sampled: the orbit
/// points Qα (which satisfy α ≺ Qα) are checked first, then `trials`
/// random y from sample_majorizing.
inline IsotoneVerdict is_right_isotone_at(const Mat& a, const AnchorPoint& anchor,
                                          std::size_t trials, std::uint64_t seed,
                                          std::size_t guard_n = default_guard_n)
{
   const auto orbit = detail::orbit_images(a, anchor.alpha(), guard_n);
   const auto check_all = [&](const Vec& y, const Vec& ay) -> std::optional<Witness> {
      for (const auto& o : orbit) {
         if (!majorizes(o.image, ay)) {
            return SampleWitness{o.perm, y};
         }
      }
      return std::nullopt;
   };

   for (const auto& vertex : orbit) {
      if (auto w = check_all(vertex.point, vertex.image)) {
         return {false, true, trials, std::move(*w)};
      }
   }
   for (std::size_t t = 0; t < trials; ++t) {
      Rng rng(mix_seed(seed, t));
      const auto y = sample_majorizing(anchor.alpha(), rng);
      if (auto w = check_all(y, mat_vec(a, y))) {
         return {false, true, trials, std::move(*w)};
      }
   }
   return {true, true, trials, {}};
}

/// Φ(y) ≺ Φ(α) for y ≺ α (exact, vertex reduction) and Φ(α) ≺ Φ(y) for
/// α ≺ y (sampled as in is_right_isotone_at, against the single point α).
inline IsotoneVerdict is_isotone_at(const Mat& a, const AnchorPoint& anchor,
                                    std::size_t trials, std::uint64_t seed,
                                    std::size_t guard_n = default_guard_n)
{
   const auto orbit = detail::orbit_images(a, anchor.alpha(), guard_n);
   const auto base = mat_vec(a, anchor.alpha());
   for (const auto& o : orbit) {
      if (!majorizes(o.image, base)) {
         return {false, false, 0, LeftHalfWitness{o.perm}};
      }
   }
   for (const auto& o : orbit) {
      if (!majorizes(base, o.image)) {
         return {false, true, trials, RightHalfWitness{o.point}};
      }
   }
   for (std::size_t t = 0; t < trials; ++t) {
      Rng rng(mix_seed(seed, t));
      auto y = sample_majorizing(anchor.alpha(), rng);
      if (!majorizes(base, mat_vec(a, y))) {
         return {false, true, trials, RightHalfWitness{std::move(y)}};
      }
   }
   return {true, true, trials, {}};
}

/// Φ(x) ≺ Φ(y) whenever x ≺ y, refuted by sampling: for each random y with
/// distinct entries, all vertices Qy of {x : x ≺ y} are checked.
inline IsotoneVerdict is_global_isotone_sampled(const Mat& a, std::size_t trials,
                                                std::uint64_t seed,
                                                std::size_t guard_n = default_guard_n)
{
   require_square(a);
   const auto perms = enumerate_perms(a.rows(), guard_n);
   for (std::size_t t = 0; t < trials; ++t) {
      Rng rng(mix_seed(seed, t));
      auto y = sample_distinct(a.rows(), rng);
      const auto ay = mat_vec(a, y);
      for (const auto& q : perms) {
         if (!majorizes(mat_vec(a, perm_apply(q, y)), ay)) {
            return {false, true, trials, GlobalWitness{std::move(y), q}};
         }
      }
   }
   return {true, true, trials, {}};
}

inline IsotoneVerdict column_sums_equal(const Mat& a)
{
   require_square(a);
   const auto first = trace(a.column(0));
   for (std::size_t t = 1; t < a.cols(); ++t) {
      if (trace(a.column(t)) != first) {
         return {false, false, 0, ColumnPairWitness{0, t}};
      }
   }
   return {};
}

/// A + λJ.
inline Mat shift_by_J(const Mat& a, const Rational& lambda)
{
   require_square(a);
   return mat_add(a, mat_scale(lambda, Mat::ones(a.rows())));
}

/// Smallest integer λ with every entry of A + λJ strictly positive.
inline Rational choose_positive_shift(const Mat& a)
{
   require_square(a);
   Rational lowest = a(0, 0);
   for (const auto& v : a.data()) {
      if (v < lowest) {
         lowest = v;
      }
   }
   const Rational neg = -lowest;
   mpz_class fl;
   mpz_fdiv_q(fl.get_mpz_t(), neg.get_num_mpz_t(), neg.get_den_mpz_t());
   return Rational(fl + 1);
}

// ---------------------------------------------------------------------------
// Global classification of majorization preservers.

/// Φ(x) = (tr x)·a: every column of A equals a.
struct TraceMap {
   Vec a;
};
/// A = alpha·P + beta·J, alpha != 0.
struct PermScaled {
   Rational alpha;
   Rational beta;
   Perm perm;
};
struct NotIsotone {};

using AndoForm = std::variant<TraceMap, PermScaled, NotIsotone>;

inline bool is_isotone_form(const AndoForm& f)
{
   return !std::holds_alternative<NotIsotone>(f);
}

inline Mat recompose(const AndoForm& form, std::size_t n)
{
   if (const auto* tm = std::get_if<TraceMap>(&form)) {
      std::vector<Rational> data(n * n);
      for (std::size_t i = 0; i < n; ++i) {
         for (std::size_t j = 0; j < n; ++j) {
            data[i * n + j] = tm->a[i];
         }
      }
      return Mat(n, n, std::move(data));
   }
   if (const auto* ps = std::get_if<PermScaled>(&form)) {
      return mat_add(mat_scale(ps->alpha, ps->perm.to_matrix()),
                     mat_scale(ps->beta, Mat::ones(n)));
   }
   throw precondition_violated("recompose: NotIsotone has no matrix");
}

namespace detail {

// A - βJ == α·P with α != 0, or nullopt.
inline std::optional<PermScaled> as_perm_scaled(const Mat& a, const Rational& beta)
{
   const std::size_t n = a.rows();
   std::optional<Rational> alpha;
   std::vector<std::size_t> image(n, n);
   std::vector<bool> row_used(n, false);
   for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
         const Rational d = a(i, j) - beta;
         if (sgn(d) == 0) {
            continue;
         }
         if (image[j] != n || row_used[i] || (alpha && d != *alpha)) {
            return std::nullopt;
         }
         alpha = d;
         image[j] = i;
         row_used[i] = true;
      }
      if (image[j] == n) {
         return std::nullopt;
      }
   }
   return PermScaled{*alpha, beta, Perm(std::move(image))};
}

} // namespace detail

/// Matches A against the two preserver forms. When both fit (multiples of
/// J) TraceMap is reported; when two PermScaled parametrizations exist
/// (n = 2) the one with alpha > 0 is reported.
inline AndoForm classify_global(const Mat& a)
{
   require_square(a);
   const std::size_t n = a.rows();
   const auto first = a.column(0);
   bool columns_equal = true;
   for (std::size_t j = 1; j < n && columns_equal; ++j) {
      columns_equal = a.column(j) == first;
   }
   if (columns_equal) {
      return TraceMap{first};
   }

   std::optional<PermScaled> fallback;
   std::set<Rational> tried;
   for (std::size_t j = 0; j < n; ++j) {
      if (!tried.insert(a(0, j)).second) {
         continue;
      }
      if (auto ps = detail::as_perm_scaled(a, a(0, j))) {
         if (sgn(ps->alpha) > 0) {
            return *ps;
         }
         if (!fallback) {
            fallback = std::move(ps);
         }
      }
   }
   if (fallback) {
      return *fallback;
   }
   return NotIsotone{};
}

// ---------------------------------------------------------------------------
// Structure of equivalence preservers at a strictly decreasing point.

/// Every row of A is constant: A = (λ_i) rows, i.e. Φ(x) = (tr x)·λ.
struct RowConstant {
   Vec lambdas;
};
/// A·R = λJ + (γ - λ)I, λ != γ.
struct PermutedShift {
   Rational lambda;
   Rational gamma;
   Perm r;
};
/// Neither structural form fits; for an equivalence preserver at a strictly
/// decreasing point this contradicts the characterization.
struct Unresolved {
   std::string reason;
};

using ClaimForm = std::variant<RowConstant, PermutedShift, Unresolved>;

struct PointClassification {
   /// The integer shift making A + shift·J entrywise positive. The
   /// parameters below describe A itself; those of A + shift·J are λ+shift
   /// and γ+shift (resp. λ_i + shift).
   Rational shift;
   ClaimForm form;
};

/// Analyzes the row structure of an equivalence preserver at α: either all
/// rows are constant, or every row is λ except a single γ, with the γ
/// positions forming a permutation R.
inline PointClassification classify_at_point(const Mat& a, const AnchorPoint& anchor,
                                             std::size_t guard_n = default_guard_n)
{
   if (!anchor.strictly_decreasing()) {
      throw precondition_violated("classify_at_point: anchor must be strictly decreasing");
   }
   if (!is_equiv_preserving_at(a, anchor, guard_n).holds) {
      throw precondition_violated(
         "classify_at_point: matrix does not preserve equivalence at the anchor");
   }
   const std::size_t n = a.rows();
   PointClassification out{choose_positive_shift(a), Unresolved{}};

   std::size_t constant_rows = 0;
   for (std::size_t i = 0; i < n; ++i) {
      const auto row = a.row(i);
      constant_rows += row == Vec::constant(n, row[0]) ? 1 : 0;
   }
   if (constant_rows == n) {
      out.form = RowConstant{a.column(0)};
      return out;
   }
   if (constant_rows > 0) {
      out.form = Unresolved{"some but not all rows are constant"};
      return out;
   }

   std::optional<PermutedShift> candidate;
   if (n == 2) {
      if (a(0, 0) == a(1, 1) && a(0, 1) == a(1, 0)) {
         candidate = PermutedShift{a(0, 1), a(0, 0), Perm::identity(2)};
      }
   } else {
      std::vector<std::size_t> image(n);
      std::optional<Rational> lambda;
      std::optional<Rational> gamma;
      for (std::size_t i = 0; i < n && !candidate; ++i) {
         // The off value is the one occurring exactly once.
         std::optional<std::size_t> odd;
         for (std::size_t j = 0; j < n; ++j) {
            std::size_t matches = 0;
            for (std::size_t k = 0; k < n; ++k) {
               matches += a(i, k) == a(i, j) ? 1 : 0;
            }
            if (matches == 1) {
               if (odd) {
                  odd.reset();
                  break;
               }
               odd = j;
            }
         }
         if (!odd) {
            out.form = Unresolved{"row " + std::to_string(i) +
                                  " is not constant except for a single entry"};
            return out;
         }
         const Rational l = a(i, (*odd + 1) % n);
         const Rational g = a(i, *odd);
         if ((lambda && l != *lambda) || (gamma && g != *gamma)) {
            out.form = Unresolved{"row parameters differ between rows"};
            return out;
         }
         lambda = l;
         gamma = g;
         image[i] = *odd;
      }
      try {
         candidate = PermutedShift{*lambda, *gamma, Perm(std::move(image))};
      } catch (const precondition_violated&) {
         out.form = Unresolved{"off-value positions do not form a permutation"};
         return out;
      }
   }

   if (!candidate) {
      out.form = Unresolved{"2x2 matrix is not of the form [[g,l],[l,g]]"};
      return out;
   }
   const Mat expected = mat_add(mat_scale(candidate->lambda, Mat::ones(n)),
                                mat_scale(candidate->gamma - candidate->lambda,
                                          Mat::identity(n)));
   if (mat_mul(a, candidate->r.to_matrix()) != expected) {
      out.form = Unresolved{"recomposition mismatch"};
      return out;
   }
   out.form = std::move(*candidate);
   return out;
}

// ---------------------------------------------------------------------------
// Five-statement consistency check.

struct Theorem22Report {
   IsotoneVerdict left;
   IsotoneVerdict right;
   IsotoneVerdict point;
   IsotoneVerdict equiv;
   AndoForm form;
   IsotoneVerdict global;
   /// left, right, point, equiv, global (the last from classify_global).
   std::array<bool, 5> bits{};
   /// All five bits agree and no sampled failure contradicts the exact parts.
   bool consistent = false;
   /// The global sampler agrees with classify_global.
   bool global_sample_agrees = false;
};

inline Theorem22Report verify_theorem22(const Mat& a, const AnchorPoint& anchor,
                                        std::size_t trials, std::uint64_t seed,
                                        std::size_t guard_n = default_guard_n)
{
   if (!anchor.strictly_decreasing()) {
      throw precondition_violated("anchor must be strictly decreasing");
   }
   check_guard(anchor.size(), guard_n);
   Theorem22Report r;
   r.left = is_left_isotone_at(a, anchor, guard_n);
   r.right = is_right_isotone_at(a, anchor, trials, mix_seed(seed, 1), guard_n);
   r.point = is_isotone_at(a, anchor, trials, mix_seed(seed, 2), guard_n);
   r.equiv = is_equiv_preserving_at(a, anchor, guard_n);
   r.form = classify_global(a);
   r.global = is_global_isotone_sampled(a, trials, mix_seed(seed, 3), guard_n);
   r.bits = {r.left.holds, r.right.holds, r.point.holds, r.equiv.holds,
             is_isotone_form(r.form)};

   bool all_equal = true;
   for (bool b : r.bits) {
      all_equal = all_equal && b == r.bits[0];
   }
   const bool ando_sound = !(r.bits[4] && !r.global.holds);
   r.consistent = all_equal && ando_sound;
   r.global_sample_agrees = r.global.holds == r.bits[4];
   return r;
}

// ---------------------------------------------------------------------------
// Campaigns.

enum class MatrixKind { planted_trace, planted_perm_scaled, uniform, near_ando, user };

inline std::string to_string(MatrixKind k)
{
   switch (k) {
   case MatrixKind::planted_trace: return "planted_trace";
   case MatrixKind::planted_perm_scaled: return "planted_perm_scaled";
   case MatrixKind::uniform: return "uniform";
   case MatrixKind::near_ando: return "near_ando";
   case MatrixKind::user: return "user";
   }
   return "unknown";
}

struct CampaignMatrix {
   MatrixKind kind;
   Mat matrix;
};

/// Φ(x) = (tr x)·a with random rational a.
inline Mat planted_trace_map(std::size_t n, Rng& rng)
{
   std::vector<Rational> a;
   for (std::size_t i = 0; i < n; ++i) {
      a.push_back(rng.rational(-5, 5, 6));
   }
   return recompose(TraceMap{Vec(std::move(a))}, n);
}

/// alpha·P + beta·J with random rational alpha != 0, beta.
inline Mat planted_perm_scaled(std::size_t n, Rng& rng)
{
   Rational alpha;
   do {
      alpha = rng.rational(-5, 5, 6);
   } while (sgn(alpha) == 0);
   const Rational beta = rng.rational(-5, 5, 6);
   return recompose(PermScaled{alpha, beta, rng.permutation(n)}, n);
}

/// Independent uniform integers in [-5, 5].
inline Mat uniform_integer_matrix(std::size_t n, Rng& rng)
{
   std::vector<Rational> data(n * n);
   for (auto& v : data) {
      v = rng.uniform_int(-5, 5);
   }
   return Mat(n, n, std::move(data));
}

/// An integer preserver form with one entry bumped by a nonzero integer.
inline Mat near_ando_matrix(std::size_t n, Rng& rng)
{
   Mat base;
   if (rng.below(2) == 0) {
      std::vector<Rational> a;
      for (std::size_t i = 0; i < n; ++i) {
         a.emplace_back(rng.uniform_int(-5, 5));
      }
      base = recompose(TraceMap{Vec(std::move(a))}, n);
   } else {
      long alpha = 0;
      while (alpha == 0) {
         alpha = rng.uniform_int(-5, 5);
      }
      base = recompose(PermScaled{alpha, rng.uniform_int(-5, 5), rng.permutation(n)}, n);
   }
   long bump = 0;
   while (bump == 0) {
      bump = rng.uniform_int(-3, 3);
   }
   const auto cell = static_cast<std::size_t>(rng.below(n * n));
   std::vector<Rational> data(base.data().begin(), base.data().end());
   data[cell] += bump;
   return Mat(n, n, std::move(data));
}

/// `count` matrices; index i draws kind by i mod 5: planted trace, planted
/// scaled permutation, uniform, uniform, near-preserver. Each matrix uses
/// its own generator seeded from (seed, i).
inline std::vector<CampaignMatrix> campaign_matrices(std::size_t n, std::size_t count,
                                                     std::uint64_t seed)
{
   std::vector<CampaignMatrix> out;
   out.reserve(count);
   for (std::size_t i = 0; i < count; ++i) {
      Rng rng(mix_seed(seed, i));
      switch (i % 5) {
      case 0: out.push_back({MatrixKind::planted_trace, planted_trace_map(n, rng)}); break;
      case 1: out.push_back({MatrixKind::planted_perm_scaled, planted_perm_scaled(n, rng)}); break;
      case 4: out.push_back({MatrixKind::near_ando, near_ando_matrix(n, rng)}); break;
      default: out.push_back({MatrixKind::uniform, uniform_integer_matrix(n, rng)}); break;
      }
   }
   return out;
}

struct CampaignEntry {
   MatrixKind kind;
   Mat matrix;
   bool equiv_preserving = false;
   AndoForm form;
   /// Present when the anchor is strictly decreasing.
   std::optional<Theorem22Report> theorem;
   /// Equivalence-preserving at α yet not a global preserver.
   bool violation = false;
};

struct CampaignReport {
   std::vector<CampaignEntry> entries;
   std::size_t consistent = 0;
   std::size_t inconsistent = 0;
   std::size_t violations = 0;
   std::size_t equiv_preserving = 0;
   std::size_t global_sample_misses = 0;

   bool clean() const noexcept { return inconsistent == 0 && violations == 0; }
};

/// Runs the point-to-global implication over the given matrices. For a
/// strictly decreasing anchor the full five-statement check runs per
/// matrix; otherwise only equivalence preservation and the global form are
/// recorded (exploratory mode).
inline CampaignReport run_campaign(const AnchorPoint& anchor,
                                   std::span<const CampaignMatrix> matrices,
                                   std::size_t trials, std::uint64_t seed,
                                   std::size_t guard_n = default_guard_n)
{
   CampaignReport report;
   for (std::size_t i = 0; i < matrices.size(); ++i) {
      const auto& m = matrices[i];
      CampaignEntry e{m.kind, m.matrix, false, NotIsotone{}, std::nullopt, false};
      if (anchor.strictly_decreasing()) {
         e.theorem = verify_theorem22(m.matrix, anchor, trials, mix_seed(seed, i), guard_n);
         e.equiv_preserving = e.theorem->equiv.holds;
         e.form = e.theorem->form;
         if (e.theorem->consistent) {
            ++report.consistent;
         } else {
            ++report.inconsistent;
         }
         if (!e.theorem->global_sample_agrees) {
            ++report.global_sample_misses;
         }
      } else {
         e.equiv_preserving = is_equiv_preserving_at(m.matrix, anchor, guard_n).holds;
         e.form = classify_global(m.matrix);
      }
      e.violation = e.equiv_preserving && !is_isotone_form(e.form);
      report.equiv_preserving += e.equiv_preserving ? 1 : 0;
      report.violations += e.violation ? 1 : 0;
      report.entries.push_back(std::move(e));
   }
   return report;
}

inline CampaignReport all_isotone_point_campaign(const AnchorPoint& anchor,
                                                 std::size_t matrices, std::size_t trials,
                                                 std::uint64_t seed,
                                                 std::size_t guard_n = default_guard_n)
{
   check_guard(anchor.size(), guard_n);
   const auto ms = campaign_matrices(anchor.size(), matrices, seed);
   return run_campaign(anchor, ms, trials, seed, guard_n);
}

} // namespace majorization

#endif
