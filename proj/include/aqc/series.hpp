#pragma once

// Truncated formal power series over the rationals, and the generating
// functions of the AqC-free counts b_n.

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace aqc {

using Rational = mpq_class;

/// c_0 + c_1 z + ... + c_N z^N, exact. Coefficients past N are unknown,
/// not zero; operations on series of different orders keep the smaller one.
/// A series with no known coefficients has order() == -1.
class RatSeries {
 public:
  RatSeries() = default;
  explicit RatSeries(std::vector<Rational> coeffs);

  // Polynomial sum c_i z^e_i known exactly through `order`.
  static RatSeries monomial(const Rational& c, std::size_t exponent, long order);
  static RatSeries zero(long order);

  long order() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }

  RatSeries truncated(long order) const;

  // Index of the first nonzero coefficient, or -1 when all are zero.
  long first_nonzero() const;
  bool is_zero_through(long order) const;

  std::string str() const;

  friend bool operator==(const RatSeries&, const RatSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

RatSeries series_add(const RatSeries& a, const RatSeries& b);
RatSeries series_sub(const RatSeries& a, const RatSeries& b);
RatSeries series_mul(const RatSeries& a, const RatSeries& b);
RatSeries series_scale(const RatSeries& a, const Rational& c);
// Termwise derivative; the order drops by one.
RatSeries series_derive(const RatSeries& a, unsigned times = 1);

inline std::ostream& operator<<(std::ostream& os, const RatSeries& s) { return os << s.str(); }

inline RatSeries operator+(const RatSeries& a, const RatSeries& b) { return series_add(a, b); }
inline RatSeries operator-(const RatSeries& a, const RatSeries& b) { return series_sub(a, b); }
inline RatSeries operator*(const RatSeries& a, const RatSeries& b) { return series_mul(a, b); }

/// g(z) = sum b_n z^n through z^N.
RatSeries ogf_series(unsigned q, unsigned order);
/// G(z) = sum b_n z^n / n! through z^N, including the constant term b_0 = 1.
RatSeries egf_series(unsigned q, unsigned order);
/// w(z) = sum_{i>=1} (-1)^i z^{qi} / (qi)! through z^N.
RatSeries w_series(unsigned q, unsigned order);

/// Left side of
///   z^2 (1+z^q) g' - (1+z^q)(1 - z - (q-1) z^q) g + 1 - (q-1) z^q = 0
/// for a given g. The result has order g.order() - 1.
RatSeries ogf_residual(const RatSeries& g, unsigned q);
/// ogf_residual(ogf_series(q, N), q). Requires N >= 2q + 2.
RatSeries verify_ogf_ode(unsigned q, unsigned order);

/// (1-z) G^(q) - q G^(q-1) - (q-1) G - q w^(q) for a given G, of order
/// G.order() - q.
RatSeries egf_residual(const RatSeries& G, unsigned q);
/// egf_residual(egf_series(q, N), q) after checking G^(i)(0) = i! for i < q
/// (ConsistencyError otherwise). Requires N >= 3q + 2.
RatSeries verify_egf_ode(unsigned q, unsigned order);

}  // namespace aqc
