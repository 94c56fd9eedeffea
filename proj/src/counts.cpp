#include "aqc/counts.hpp"

#include <algorithm>
#include <string>

#include "aqc/errors.hpp"

namespace aqc {

namespace {

void require_q(unsigned q) {
  if (q == 0) throw InvalidArgument("cycle length q must be at least 1");
}

Int fact(unsigned n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binom(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int exact_div(const Int& num, const Int& den) {
  Int r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

// (-1)^e
int sign_of(unsigned long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

MultiSpec::MultiSpec(std::vector<unsigned> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty()) throw InvalidArgument("length set must be nonempty");
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (lengths_[i] == 0) throw InvalidArgument("cycle lengths must be at least 1");
    if (i > 0 && lengths_[i] <= lengths_[i - 1]) {
      throw InvalidArgument("cycle lengths must be strictly increasing");
    }
  }
}

MultiSpec MultiSpec::first(unsigned m) {
  std::vector<unsigned> ls(m);
  for (unsigned i = 0; i < m; ++i) ls[i] = i + 1;
  return MultiSpec(std::move(ls));
}

Nat CountTable::at(unsigned n, unsigned k) const {
  if (n >= rows.size() || k >= rows[n].size()) return Nat{};
  return rows[n][k];
}

Nat binomial(unsigned n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return Nat{};
  return Nat(binom(n, static_cast<unsigned>(k)));
}

Nat factorial(unsigned n) { return Nat(fact(n)); }

Nat count_aqc(unsigned n, unsigned k, unsigned q) {
  require_q(q);
  const unsigned r = n / q;
  if (k > r) return Nat{};
  Int sum = 0;
  for (unsigned j = k; j <= r; ++j) {
    Int term = binom(j, k) * exact_div(fact(n - (q - 1) * j), fact(j));
    if (sign_of(k + j) > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return Nat(std::move(sum));
}

Nat count_free(unsigned n, unsigned q) { return count_aqc(n, 0, q); }

Nat count_aqc_rencontres(unsigned n, unsigned k) {
  if (k > n) throw InvalidArgument("fixed-point count exceeds n");
  return binomial(n, k) * count_free(n - k, 1);
}

Nat column_step(unsigned n, unsigned k, unsigned q) {
  require_q(q);
  if (k == 0) throw InvalidArgument("column_step needs k >= 1");
  Int numer = count_aqc(n, k - 1, q).value();
  if (n % q == 0) {
    const unsigned r = n / q;
    const Nat correction = binomial(r, static_cast<long>(k) - 1);
    if (sign_of(k + r) > 0) {
      numer += correction.value();
    } else {
      numer -= correction.value();
    }
  }
  if (!mpz_divisible_ui_p(numer.get_mpz_t(), k)) {
    throw ConsistencyError("column relation not divisible by k=" + std::to_string(k) + " at n=" +
                           std::to_string(n) + ", q=" + std::to_string(q));
  }
  return Nat(Int(numer / k));
}

Nat count_one_aqc_relation(unsigned n, unsigned q) {
  require_q(q);
  if (n < q) throw InvalidArgument("count_one_aqc_relation needs n >= q");
  Int v = count_free(n - q, q).value();
  if (n % q == 0) v += sign_of(n / q);
  return Nat(std::move(v));
}

std::vector<Nat> free_sequence_recurrence(unsigned n, unsigned q) {
  require_q(q);
  std::vector<Int> b(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    if (m < q) {
      b[m] = fact(m);
      continue;
    }
    b[m] = m * b[m - 1] + (q - 1) * b[m - q];
    if (m % q == 0) b[m] += static_cast<long>(q) * sign_of(m / q);
  }
  std::vector<Nat> out;
  out.reserve(b.size());
  for (auto& v : b) out.emplace_back(std::move(v));
  return out;
}

Nat free_recurrence(unsigned n, unsigned q) { return free_sequence_recurrence(n, q).back(); }

CountTable count_table(unsigned q, unsigned n_max) {
  require_q(q);
  CountTable t{q, {}};
  t.rows.resize(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned k = 0; k <= n / q; ++k) t.rows[n].push_back(count_aqc(n, k, q));
  }
  return t;
}

CountTable count_table_recurrence(unsigned q, unsigned n_max) {
  require_q(q);
  const std::vector<Nat> free = free_sequence_recurrence(n_max, q);

  std::vector<std::vector<Int>> rows(n_max + 1);
  auto a = [&](long m, long j) -> Int {
    if (m < 0 || j < 0) return 0;
    const auto& row = rows[static_cast<std::size_t>(m)];
    if (static_cast<std::size_t>(j) >= row.size()) return 0;
    return row[static_cast<std::size_t>(j)];
  };

  for (unsigned m = 0; m <= n_max; ++m) {
    rows[m].assign(m / q + 1, Int(0));
    rows[m][0] = free[m].value();
    if (m < q) continue;  // no AqC fits; the row is just [m!]
    const long n = static_cast<long>(m) - 1;  // build row n+1 from rows n and n-q+1
    const long lq = q;
    for (long k = static_cast<long>(m / q); k >= 1; --k) {
      rows[m][static_cast<std::size_t>(k)] = a(n - lq + 1, k - 1) + (n - lq * k + 1) * a(n, k) -
                                             a(n - lq + 1, k) + lq * (k + 1) * a(n, k + 1);
    }
  }

  CountTable t{q, {}};
  t.rows.resize(n_max + 1);
  for (unsigned m = 0; m <= n_max; ++m) {
    for (auto& v : rows[m]) t.rows[m].emplace_back(std::move(v));
  }
  return t;
}

Nat count_aqc_recurrence(unsigned n, unsigned k, unsigned q) {
  require_q(q);
  if (k == 0) throw InvalidArgument("the recurrence covers k >= 1; use free_recurrence for k = 0");
  return count_table_recurrence(q, n).at(n, k);
}

namespace {

struct MultiSum {
  unsigned n;
  const std::vector<unsigned>& qs;
  const KVector& ks;
  Int total = 0;

  // Walks the simplex sum q_j t_j <= n one coordinate at a time.
  void run(std::size_t j, unsigned budget, unsigned long sign_exp, const Int& binoms,
           unsigned shrink, const Int& denom) {
    if (j == qs.size()) {
      Int term = binoms * exact_div(fact(n - shrink), denom);
      if (sign_of(sign_exp) > 0) {
        total += term;
      } else {
        total -= term;
      }
      return;
    }
    const unsigned q = qs[j];
    for (unsigned t = ks[j]; q * t <= budget; ++t) {
      run(j + 1, budget - q * t, sign_exp + ks[j] + t, binoms * binom(t, ks[j]),
          shrink + (q - 1) * t, denom * fact(t));
    }
  }
};

void collect_keys(const std::vector<unsigned>& qs, std::size_t j, unsigned budget, KVector& cur,
                  std::vector<KVector>& out) {
  if (j == qs.size()) {
    out.push_back(cur);
    return;
  }
  for (unsigned k = 0; qs[j] * k <= budget; ++k) {
    cur[j] = k;
    collect_keys(qs, j + 1, budget - qs[j] * k, cur, out);
  }
}

}  // namespace

Nat count_multi(unsigned n, const MultiSpec& lengths, const KVector& ks) {
  if (ks.size() != lengths.size()) {
    throw InvalidArgument("multiplicity vector has " + std::to_string(ks.size()) +
                          " entries for " + std::to_string(lengths.size()) + " lengths");
  }
  unsigned long used = 0;
  for (std::size_t j = 0; j < ks.size(); ++j) used += static_cast<unsigned long>(lengths[j]) * ks[j];
  if (used > n) return Nat{};

  MultiSum sum{n, lengths.lengths(), ks};
  sum.run(0, n, 0, Int(1), 0, Int(1));
  return Nat(std::move(sum.total));
}

std::vector<KVector> multi_keys(unsigned n, const MultiSpec& lengths) {
  std::vector<KVector> out;
  KVector cur(lengths.size(), 0);
  collect_keys(lengths.lengths(), 0, n, cur, out);
  return out;
}

std::vector<std::pair<KVector, Nat>> multi_distribution(unsigned n, const MultiSpec& lengths) {
  std::vector<std::pair<KVector, Nat>> out;
  for (auto& ks : multi_keys(n, lengths)) {
    Nat v = count_multi(n, lengths, ks);
    if (!v.is_zero()) out.emplace_back(std::move(ks), std::move(v));
  }
  return out;
}

Nat restricted_derangements(unsigned n, unsigned m) {
  if (m == 0) throw InvalidArgument("restricted_derangements needs m >= 1");
  return count_multi(n, MultiSpec::first(m), KVector(m, 0));
}

std::pair<Nat, Nat> free_bounds(unsigned n, unsigned q) {
  if (q < 2) throw InvalidArgument("the AqC-free bound needs q >= 2");
  if (n < q) throw InvalidArgument("the AqC-free bound needs n >= q");
  Int upper = fact(n);
  Int lower = upper - fact(n + 1 - q);
  return {Nat(std::move(lower)), Nat(std::move(upper))};
}

}  // namespace aqc
