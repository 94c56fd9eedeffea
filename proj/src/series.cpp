#include "aqc/series.hpp"

#include <algorithm>

#include "aqc/counts.hpp"
#include "aqc/errors.hpp"

namespace aqc {

namespace {

Rational factorial_q(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

void require_q(unsigned q) {
  if (q == 0) throw InvalidArgument("cycle length q must be at least 1");
}

}  // namespace

RatSeries::RatSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
}

RatSeries RatSeries::zero(long order) {
  return RatSeries(std::vector<Rational>(static_cast<std::size_t>(std::max(order + 1, 0L))));
}

RatSeries RatSeries::monomial(const Rational& c, std::size_t exponent, long order) {
  RatSeries s = zero(order);
  if (static_cast<long>(exponent) <= order) s.coeffs_[exponent] = c;
  return s;
}

RatSeries RatSeries::truncated(long order) const {
  const auto keep = static_cast<std::size_t>(std::clamp(order + 1, 0L, this->order() + 1));
  return RatSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(keep)));
}

long RatSeries::first_nonzero() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return static_cast<long>(i);
  }
  return -1;
}

bool RatSeries::is_zero_through(long order) const {
  if (order > this->order()) return false;
  for (long i = 0; i <= order; ++i) {
    if (sgn(coeffs_[static_cast<std::size_t>(i)]) != 0) return false;
  }
  return true;
}

std::string RatSeries::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    Rational c = coeffs_[i];
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    c = abs(c);
    const bool unit = (c == 1);
    if (!unit || i == 0) out += c.get_str();
    if (i >= 1) out += (unit ? "z" : "*z");
    if (i >= 2) out += "^" + std::to_string(i);
  }
  if (out.empty()) out = "0";
  return out + " + O(z^" + std::to_string(coeffs_.size()) + ")";
}

RatSeries series_add(const RatSeries& a, const RatSeries& b) {
  const long order = std::min(a.order(), b.order());
  RatSeries r = RatSeries::zero(order);
  for (long i = 0; i <= order; ++i) {
    const auto k = static_cast<std::size_t>(i);
    r[k] = a[k] + b[k];
  }
  return r;
}

RatSeries series_sub(const RatSeries& a, const RatSeries& b) {
  return series_add(a, series_scale(b, Rational(-1)));
}

RatSeries series_scale(const RatSeries& a, const Rational& c) {
  RatSeries r = a;
  for (long i = 0; i <= r.order(); ++i) r[static_cast<std::size_t>(i)] *= c;
  return r;
}

RatSeries series_mul(const RatSeries& a, const RatSeries& b) {
  const long order = std::min(a.order(), b.order());
  RatSeries r = RatSeries::zero(order);
  for (long i = 0; i <= order; ++i) {
    const auto ai = a[static_cast<std::size_t>(i)];
    if (sgn(ai) == 0) continue;
    for (long j = 0; i + j <= order; ++j) {
      r[static_cast<std::size_t>(i + j)] += ai * b[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

RatSeries series_derive(const RatSeries& a, unsigned times) {
  RatSeries r = a;
  for (unsigned t = 0; t < times; ++t) {
    RatSeries d = RatSeries::zero(r.order() - 1);
    for (long i = 1; i <= r.order(); ++i) {
      d[static_cast<std::size_t>(i - 1)] = r[static_cast<std::size_t>(i)] * i;
    }
    r = std::move(d);
  }
  return r;
}

RatSeries ogf_series(unsigned q, unsigned order) {
  require_q(q);
  std::vector<Rational> c;
  c.reserve(order + 1);
  for (unsigned n = 0; n <= order; ++n) c.emplace_back(count_free(n, q).value());
  return RatSeries(std::move(c));
}

RatSeries egf_series(unsigned q, unsigned order) {
  require_q(q);
  std::vector<Rational> c;
  c.reserve(order + 1);
  for (unsigned n = 0; n <= order; ++n) c.emplace_back(Rational(count_free(n, q).value()) / factorial_q(n));
  return RatSeries(std::move(c));
}

RatSeries w_series(unsigned q, unsigned order) {
  require_q(q);
  RatSeries w = RatSeries::zero(order);
  for (unsigned i = 1; q * i <= order; ++i) {
    w[q * i] = Rational(i % 2 == 0 ? 1 : -1) / factorial_q(q * i);
  }
  return w;
}

RatSeries ogf_residual(const RatSeries& g, unsigned q) {
  require_q(q);
  // Polynomial factors are exact, so they are materialized at g's order and
  // the result inherits the order of g' (one less).
  const long n = g.order();
  const Rational qm1(q - 1);
  const RatSeries one_plus_zq = RatSeries::monomial(1, 0, n) + RatSeries::monomial(1, q, n);
  const RatSeries z2 = RatSeries::monomial(1, 2, n);
  const RatSeries linear = RatSeries::monomial(1, 0, n) - RatSeries::monomial(1, 1, n) -
                           RatSeries::monomial(qm1, q, n);
  const RatSeries constant = RatSeries::monomial(1, 0, n) - RatSeries::monomial(qm1, q, n);

  return z2 * one_plus_zq * series_derive(g) - one_plus_zq * linear * g + constant;
}

RatSeries verify_ogf_ode(unsigned q, unsigned order) {
  require_q(q);
  if (order < 2 * q + 2) throw InvalidArgument("OGF check needs order >= 2q + 2");
  return ogf_residual(ogf_series(q, order), q);
}

RatSeries egf_residual(const RatSeries& G, unsigned q) {
  require_q(q);
  const long n = G.order();
  const RatSeries one_minus_z = RatSeries::monomial(1, 0, n) - RatSeries::monomial(1, 1, n);
  const RatSeries w = w_series(q, static_cast<unsigned>(std::max(n, 0L)));

  return one_minus_z * series_derive(G, q) - series_scale(series_derive(G, q - 1), q) -
         series_scale(G, q - 1) - series_scale(series_derive(w, q), q);
}

RatSeries verify_egf_ode(unsigned q, unsigned order) {
  require_q(q);
  if (order < 3 * q + 2) throw InvalidArgument("EGF check needs order >= 3q + 2");
  const RatSeries G = egf_series(q, order);
  // G^(i)(0) = i! * [z^i]G must equal i! for i < q.
  for (unsigned i = 0; i < q; ++i) {
    if (G[i] * factorial_q(i) != factorial_q(i)) {
      throw ConsistencyError("EGF initial condition G^(" + std::to_string(i) + ")(0) != " +
                             std::to_string(i) + "!");
    }
  }
  return egf_residual(G, q);
}

}  // namespace aqc
