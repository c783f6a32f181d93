#pragma once

#include <span>
#include <vector>

#include "crankstat/series.hpp"

namespace crankstat {

/// Integer Laurent polynomial in z with exponents stored over [-bound, bound].
class LaurentPoly {
 public:
  explicit LaurentPoly(int bound = 0);

  int bound() const { return bound_; }
  /// Coefficient of z^m; zero when |m| > bound.
  Integer coeff(int m) const;
  /// Mutable access; throws std::out_of_range when |m| > bound.
  Integer& at(int m);

  /// Storage view: index i holds the coefficient of z^(i - bound).
  std::span<const Integer> coeffs() const { return coeffs_; }
  std::span<Integer> coeffs() { return coeffs_; }

  /// Largest |m| with a nonzero coefficient, or -1 for the zero polynomial.
  int degree() const;
  /// Value at z = 1.
  Integer sum() const;
  bool is_symmetric() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  int bound_;
  std::vector<Integer> coeffs_;
};

/// Two-variable generating function truncated in q: rows[n] is the Laurent
/// coefficient of q^n.
class BivariateSeries {
 public:
  BivariateSeries(int order, int bound);

  int order() const { return static_cast<int>(rows_.size()) - 1; }
  int bound() const { return bound_; }
  const LaurentPoly& row(int n) const { return rows_.at(static_cast<std::size_t>(n)); }
  LaurentPoly& row(int n) { return rows_.at(static_cast<std::size_t>(n)); }
  Integer coeff(int m, int n) const { return row(n).coeff(m); }

 private:
  int bound_;
  std::vector<LaurentPoly> rows_;
};

/// (q;q)_inf / ((zq;q)_inf (q/z;q)_inf) to the given order. M(m,n) lives at [z^m q^n].
BivariateSeries crank_gf(int order);

/// First residual crank GF: crank_gf rows convolved with (-q;q)_inf.
BivariateSeries overline_crank_gf(int order);

/// Second residual crank GF: crank_gf with q -> q^2, times (-q;q)_inf / (q;q^2)_inf.
BivariateSeries m2_crank_gf(int order);

/// k-crank GF of k-colored partitions: crank_gf times (q;q)_inf^(1-k). Requires k >= 2.
BivariateSeries kcrank_gf(int k, int order);

/// Multiplies every z-coefficient by a z-free series (a convolution over q).
BivariateSeries scale_rows(const BivariateSeries& g, const TruncSeries& s);

/// Substitutes q -> q^factor, producing a series of the requested order.
BivariateSeries dilate_rows(const BivariateSeries& g, int factor, int order);

/// n -> [z^m] rows[n]; zero wherever |m| exceeds the stored bound.
TruncSeries column(const BivariateSeries& g, int m);

}  // namespace crankstat
