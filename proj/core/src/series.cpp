#include "crankstat/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace crankstat {

namespace {

void require_order(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
}

void require_same_order(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
  }
}

// In place: r <- r * (1 - s q^e), s = +1 for Sign::plus.
void apply_factor(std::vector<Integer>& r, int e, Sign sign) {
  const auto n = static_cast<int>(r.size());
  for (int i = n - 1; i >= e; --i) {
    if (sign == Sign::plus) {
      r[i] -= r[i - e];
    } else {
      r[i] += r[i - e];
    }
  }
}

// In place: r <- r / (1 - s q^e).
void apply_inverse_factor(std::vector<Integer>& r, int e, Sign sign) {
  const auto n = static_cast<int>(r.size());
  for (int i = e; i < n; ++i) {
    if (sign == Sign::plus) {
      r[i] += r[i - e];
    } else {
      r[i] -= r[i - e];
    }
  }
}

void require_poch_args(int a, int d) {
  if (a < 1) throw std::invalid_argument("q-Pochhammer base exponent must be >= 1");
  if (d < 1) throw std::invalid_argument("q-Pochhammer step must be >= 1");
}

}  // namespace

TruncSeries::TruncSeries(int order) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries TruncSeries::constant(int order, const Integer& c) {
  TruncSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncSeries TruncSeries::monomial(int order, const Integer& c, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent in monomial");
  TruncSeries s(order);
  if (exponent <= order) s.coeffs_[static_cast<std::size_t>(exponent)] = c;
  return s;
}

TruncSeries TruncSeries::polynomial(int order, std::initializer_list<std::pair<int, long>> terms) {
  TruncSeries s(order);
  for (const auto& [e, c] : terms) {
    if (e < 0) throw std::invalid_argument("negative exponent in polynomial");
    if (e <= order) s.coeffs_[static_cast<std::size_t>(e)] += c;
  }
  return s;
}

TruncSeries TruncSeries::from_coeffs(std::vector<Integer> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("a series needs at least one coefficient");
  TruncSeries s;
  s.coeffs_ = std::move(coeffs);
  return s;
}

Integer TruncSeries::coeff(int i) const {
  if (i < 0 || i > order()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

bool TruncSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) == 0; });
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& rhs) {
  *this = *this * rhs;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b);
  const int n = a.order();
  TruncSeries r(n);
  for (int i = 0; i <= n; ++i) {
    const Integer& ai = a.coeffs_[i];
    if (sgn(ai) == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      const Integer& bj = b.coeffs_[j];
      if (sgn(bj) != 0) r.coeffs_[i + j] += ai * bj;
    }
  }
  return r;
}

TruncSeries operator-(TruncSeries a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  }
  return true;
}

TruncSeries mul_monomial(const TruncSeries& a, const Integer& c, int shift) {
  if (shift < 0) throw std::invalid_argument("negative shift");
  const int n = a.order();
  std::vector<Integer> r(static_cast<std::size_t>(n) + 1);
  if (sgn(c) != 0) {
    for (int i = shift; i <= n; ++i) r[i] = c * a[i - shift];
  }
  return TruncSeries::from_coeffs(std::move(r));
}

TruncSeries div_one_minus(const TruncSeries& a, int e) {
  if (e < 1) throw std::invalid_argument("div_one_minus needs e >= 1");
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  apply_inverse_factor(r, e, Sign::plus);
  return TruncSeries::from_coeffs(std::move(r));
}

TruncSeries mul_one_minus(const TruncSeries& a, int e) {
  if (e < 1) throw std::invalid_argument("mul_one_minus needs e >= 1");
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  apply_factor(r, e, Sign::plus);
  return TruncSeries::from_coeffs(std::move(r));
}

TruncSeries dilate(const TruncSeries& a, int factor, int order) {
  if (factor < 1) throw std::invalid_argument("dilation factor must be >= 1");
  require_order(order);
  if (order / factor > a.order()) {
    throw std::invalid_argument("dilated series would need coefficients beyond the source order");
  }
  std::vector<Integer> out(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i * factor <= order; ++i) out[i * factor] = a[i];
  return TruncSeries::from_coeffs(std::move(out));
}

TruncSeries truncate(const TruncSeries& a, int order) {
  require_order(order);
  if (order > a.order()) throw std::invalid_argument("cannot truncate to a higher order");
  auto c = a.coeffs().first(static_cast<std::size_t>(order) + 1);
  return TruncSeries::from_coeffs(std::vector<Integer>(c.begin(), c.end()));
}

TruncSeries reciprocal(const TruncSeries& a) {
  const Integer& a0 = a[0];
  if (a0 != 1 && a0 != -1) throw std::invalid_argument("reciprocal needs constant term +-1");
  const int n = a.order();
  std::vector<Integer> r(static_cast<std::size_t>(n) + 1);
  r[0] = a0;  // 1/a0 == a0 for a0 = +-1
  for (int i = 1; i <= n; ++i) {
    Integer acc = 0;
    for (int j = 1; j <= i; ++j) {
      if (sgn(a[j]) != 0) acc += a[j] * r[i - j];
    }
    r[i] = -acc * a0;
  }
  return TruncSeries::from_coeffs(std::move(r));
}

TruncSeries power(const TruncSeries& a, int e) {
  if (e < 0) throw std::invalid_argument("negative power; use reciprocal first");
  TruncSeries result = TruncSeries::constant(a.order(), 1);
  TruncSeries base = a;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

TruncSeries poch_inf(int a, int d, Sign sign, int order) {
  require_poch_args(a, d);
  TruncSeries one = TruncSeries::constant(order, 1);
  std::vector<Integer> r(one.coeffs().begin(), one.coeffs().end());
  for (int e = a; e <= order; e += d) apply_factor(r, e, sign);
  return TruncSeries::from_coeffs(std::move(r));
}

TruncSeries poch_inf_inverse(int a, int d, Sign sign, int order) {
  require_poch_args(a, d);
  TruncSeries one = TruncSeries::constant(order, 1);
  std::vector<Integer> r(one.coeffs().begin(), one.coeffs().end());
  for (int e = a; e <= order; e += d) apply_inverse_factor(r, e, sign);
  return TruncSeries::from_coeffs(std::move(r));
}

TruncSeries poch_fin(int a, int d, Sign sign, int terms, int order) {
  require_poch_args(a, d);
  if (terms < 0) throw std::invalid_argument("negative number of q-Pochhammer terms");
  TruncSeries one = TruncSeries::constant(order, 1);
  std::vector<Integer> r(one.coeffs().begin(), one.coeffs().end());
  for (int k = 0; k < terms; ++k) {
    const long e = static_cast<long>(a) + static_cast<long>(k) * d;
    if (e > order) break;
    apply_factor(r, static_cast<int>(e), sign);
  }
  return TruncSeries::from_coeffs(std::move(r));
}

TruncSeries euler_function(int order) {
  require_order(order);
  std::vector<Integer> r(static_cast<std::size_t>(order) + 1);
  r[0] = 1;
  // Generalized pentagonal numbers j(3j-1)/2 and j(3j+1)/2 carry sign (-1)^j.
  for (long j = 1;; ++j) {
    const long p1 = j * (3 * j - 1) / 2;
    if (p1 > order) break;
    const int s = (j % 2 == 0) ? 1 : -1;
    r[p1] += s;
    const long p2 = j * (3 * j + 1) / 2;
    if (p2 <= order) r[p2] += s;
  }
  return TruncSeries::from_coeffs(std::move(r));
}

TruncSeries partition_series(int order) {
  require_order(order);
  std::vector<Integer> p(static_cast<std::size_t>(order) + 1);
  p[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Integer acc = 0;
    for (long j = 1;; ++j) {
      const long p1 = j * (3 * j - 1) / 2;
      if (p1 > n) break;
      const bool add = (j % 2 == 1);
      if (add) {
        acc += p[n - p1];
      } else {
        acc -= p[n - p1];
      }
      const long p2 = j * (3 * j + 1) / 2;
      if (p2 <= n) {
        if (add) {
          acc += p[n - p2];
        } else {
          acc -= p[n - p2];
        }
      }
    }
    p[n] = acc;
  }
  return TruncSeries::from_coeffs(std::move(p));
}

std::string to_string(const TruncSeries& a) {
  std::string out;
  for (int i = 0; i <= a.order(); ++i) {
    const Integer& c = a[i];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += "q";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  if (out.empty()) out = "0";
  out += " + O(q^" + std::to_string(a.order() + 1) + ")";
  return out;
}

}  // namespace crankstat
