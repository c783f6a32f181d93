#include "crankstat/bivariate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace crankstat {

LaurentPoly::LaurentPoly(int bound) : bound_(bound) {
  if (bound < 0) throw std::invalid_argument("Laurent bound must be nonnegative");
  coeffs_.resize(2 * static_cast<std::size_t>(bound) + 1);
}

Integer LaurentPoly::coeff(int m) const {
  if (m < -bound_ || m > bound_) return 0;
  return coeffs_[static_cast<std::size_t>(m + bound_)];
}

Integer& LaurentPoly::at(int m) {
  if (m < -bound_ || m > bound_) {
    throw std::out_of_range("z-exponent " + std::to_string(m) + " outside bound " +
                            std::to_string(bound_));
  }
  return coeffs_[static_cast<std::size_t>(m + bound_)];
}

int LaurentPoly::degree() const {
  for (int d = bound_; d >= 0; --d) {
    if (sgn(coeffs_[bound_ + d]) != 0 || sgn(coeffs_[bound_ - d]) != 0) return d;
  }
  return -1;
}

Integer LaurentPoly::sum() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool LaurentPoly::is_symmetric() const {
  for (int m = 1; m <= bound_; ++m) {
    if (coeffs_[bound_ + m] != coeffs_[bound_ - m]) return false;
  }
  return true;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  const int bound = std::max(a.bound_, b.bound_);
  for (int m = -bound; m <= bound; ++m) {
    if (a.coeff(m) != b.coeff(m)) return false;
  }
  return true;
}

BivariateSeries::BivariateSeries(int order, int bound) : bound_(bound) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  rows_.assign(static_cast<std::size_t>(order) + 1, LaurentPoly(bound));
}

BivariateSeries crank_gf(int order) {
  BivariateSeries g(order, order);
  const int b = order;
  g.row(0).at(0) = 1;

  // Before the numerator is applied, row n is supported on |m| <= n: every
  // power of z arrives together with at least one power of q.
  for (int k = 1; k <= order; ++k) {
    // times 1/(1 - z q^k)
    for (int n = k; n <= order; ++n) {
      auto dst = g.row(n).coeffs();
      auto src = g.row(n - k).coeffs();
      const int reach = n - k;
      for (int m = -reach + 1; m <= reach + 1; ++m) dst[b + m] += src[b + m - 1];
    }
    // times 1/(1 - q^k / z)
    for (int n = k; n <= order; ++n) {
      auto dst = g.row(n).coeffs();
      auto src = g.row(n - k).coeffs();
      const int reach = n - k;
      for (int m = -reach - 1; m <= reach - 1; ++m) dst[b + m] += src[b + m + 1];
    }
  }
  return scale_rows(g, poch_inf(1, 1, Sign::plus, order));
}

BivariateSeries overline_crank_gf(int order) {
  return scale_rows(crank_gf(order), poch_inf(1, 1, Sign::minus, order));
}

BivariateSeries m2_crank_gf(int order) {
  const BivariateSeries halved = dilate_rows(crank_gf(order / 2), 2, order);
  const TruncSeries factor =
      poch_inf(1, 1, Sign::minus, order) * poch_inf_inverse(1, 2, Sign::plus, order);
  return scale_rows(halved, factor);
}

BivariateSeries kcrank_gf(int k, int order) {
  if (k < 2) throw std::invalid_argument("k-crank needs k >= 2");
  const TruncSeries colors = power(poch_inf_inverse(1, 1, Sign::plus, order), k - 1);
  return scale_rows(crank_gf(order), colors);
}

BivariateSeries scale_rows(const BivariateSeries& g, const TruncSeries& s) {
  if (s.order() != g.order()) {
    throw std::invalid_argument("scale_rows: series order " + std::to_string(s.order()) +
                                " does not match bivariate order " + std::to_string(g.order()));
  }
  const int order = g.order();
  const int b = g.bound();
  std::vector<int> degree(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) degree[n] = g.row(n).degree();

  BivariateSeries out(order, b);
  for (int n = 0; n <= order; ++n) {
    auto dst = out.row(n).coeffs();
    for (int j = 0; j <= n; ++j) {
      const Integer& sj = s[j];
      const int d = degree[n - j];
      if (sgn(sj) == 0 || d < 0) continue;
      auto src = g.row(n - j).coeffs();
      for (int m = -d; m <= d; ++m) dst[b + m] += sj * src[b + m];
    }
  }
  return out;
}

BivariateSeries dilate_rows(const BivariateSeries& g, int factor, int order) {
  if (factor < 1) throw std::invalid_argument("dilation factor must be >= 1");
  if (order / factor > g.order()) {
    throw std::invalid_argument("dilated series would need rows beyond the source order");
  }
  const int b = std::max(order, g.bound());
  BivariateSeries out(order, b);
  for (int n = 0; n * factor <= order; ++n) {
    const auto& src = g.row(n);
    auto& dst = out.row(n * factor);
    for (int m = -src.bound(); m <= src.bound(); ++m) dst.at(m) = src.coeff(m);
  }
  return out;
}

TruncSeries column(const BivariateSeries& g, int m) {
  std::vector<Integer> c(static_cast<std::size_t>(g.order()) + 1);
  for (int n = 0; n <= g.order(); ++n) c[n] = g.coeff(m, n);
  return TruncSeries::from_coeffs(std::move(c));
}

}  // namespace crankstat
