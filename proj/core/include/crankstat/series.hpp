#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace crankstat {

using Integer = mpz_class;

/// A power series in q known exactly modulo q^(order+1).
///
/// Coefficients are arbitrary-precision integers. Binary operations require
/// both operands to carry the same order; mixing orders throws
/// std::invalid_argument instead of silently truncating.
class TruncSeries {
 public:
  /// The zero series of the given order.
  explicit TruncSeries(int order = 0);

  static TruncSeries constant(int order, const Integer& c);
  static TruncSeries monomial(int order, const Integer& c, int exponent);
  /// Sum of c*q^e over the given (e, c) terms; terms with e > order are dropped.
  static TruncSeries polynomial(int order, std::initializer_list<std::pair<int, long>> terms);
  static TruncSeries from_coeffs(std::vector<Integer> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Integer& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  /// Coefficient of q^i, zero outside [0, order].
  Integer coeff(int i) const;
  std::span<const Integer> coeffs() const { return coeffs_; }
  bool is_zero() const;

  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);
  TruncSeries& operator*=(const TruncSeries& rhs);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(TruncSeries a);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

 private:
  std::vector<Integer> coeffs_;
};

/// c * q^shift * a, truncated at a's order.
TruncSeries mul_monomial(const TruncSeries& a, const Integer& c, int shift);

/// a / (1 - q^e), via r[i] = a[i] + r[i-e]. Requires e >= 1.
TruncSeries div_one_minus(const TruncSeries& a, int e);

/// a * (1 - q^e). Requires e >= 1.
TruncSeries mul_one_minus(const TruncSeries& a, int e);

/// Substitutes q -> q^factor. The result has the requested order, which must
/// not exceed a.order() * factor.
TruncSeries dilate(const TruncSeries& a, int factor, int order);

/// Drops coefficients above the requested order (explicit, never implicit).
TruncSeries truncate(const TruncSeries& a, int order);

/// 1/a for a series whose constant term is +1 or -1.
TruncSeries reciprocal(const TruncSeries& a);

/// a^e for e >= 0.
TruncSeries power(const TruncSeries& a, int e);

/// Sign of the q-Pochhammer argument: plus builds (q^a; q^d), minus builds (-q^a; q^d).
enum class Sign { plus, minus };

/// (±q^a; q^d)_inf = prod_{k>=0} (1 ∓ q^(a+kd)) modulo q^(order+1).
TruncSeries poch_inf(int a, int d, Sign sign, int order);

/// The reciprocal 1/(±q^a; q^d)_inf, built factor by factor as geometric series.
TruncSeries poch_inf_inverse(int a, int d, Sign sign, int order);

/// (±q^a; q^d)_terms = prod_{k=0}^{terms-1} (1 ∓ q^(a+kd)); the empty product is 1.
TruncSeries poch_fin(int a, int d, Sign sign, int terms, int order);

/// (q;q)_inf from Euler's pentagonal number theorem.
TruncSeries euler_function(int order);

/// 1/(q;q)_inf, i.e. p(n), from the pentagonal recurrence.
TruncSeries partition_series(int order);

std::string to_string(const TruncSeries& a);

}  // namespace crankstat
