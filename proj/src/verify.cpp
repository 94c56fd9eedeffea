#include "aqc/verify.hpp"

#include <sstream>

#include "aqc/counts.hpp"
#include "aqc/errors.hpp"
#include "aqc/oracle.hpp"
#include "aqc/permanent.hpp"
#include "aqc/series.hpp"

namespace aqc {

namespace {

std::string at(unsigned n, unsigned q, unsigned k) {
  std::ostringstream os;
  os << "n=" << n << " q=" << q << " k=" << k;
  return os.str();
}

// Runs body(fail) and turns the first fail(...) or exception into a result.
template <typename Body>
CheckResult check(std::string name, Body body) {
  CheckResult r{std::move(name), true, {}};
  try {
    body([&](const std::string& detail) {
      if (r.passed) {
        r.passed = false;
        r.detail = detail;
      }
    });
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

template <typename Fail>
void expect_eq(const Nat& got, const Nat& want, const std::string& where, Fail& fail) {
  if (got != want) fail(where + ": got " + got.str() + ", expected " + want.str());
}

void oracle_checks(unsigned n_max, const VerifyLimits& lim, std::vector<CheckResult>& out) {
  const EnumerationOptions opts{std::max(10u, n_max), lim.threads};
  for (unsigned n = 0; n <= n_max; ++n) {
    out.push_back(check("oracle: closed form vs enumeration, n=" + std::to_string(n), [&](auto fail) {
      for (unsigned q = 1; q <= std::max(n, 1u); ++q) {
        const auto dist = oracle_distribution(n, q, opts);
        Nat total;
        Nat weighted;
        for (unsigned k = 0; k < dist.size(); ++k) {
          expect_eq(count_aqc(n, k, q), dist[k], at(n, q, k), fail);
          total += dist[k];
          weighted += Nat(static_cast<std::uint64_t>(k)) * dist[k];
        }
        expect_eq(total, factorial(n), "row sum " + at(n, q, 0), fail);
        if (n >= q) {
          expect_eq(weighted, factorial(n + 1 - q), "total AqC count n=" + std::to_string(n) +
                                                         " q=" + std::to_string(q), fail);
        }
      }
    }));
  }
}

void recurrence_checks(unsigned n_max, const VerifyLimits& lim, std::vector<CheckResult>& out) {
  out.push_back(check("b_n recurrence vs closed form", [&](auto fail) {
    for (unsigned q = 1; q <= lim.q_max; ++q) {
      const auto seq = free_sequence_recurrence(std::max(n_max, 60u), q);
      for (unsigned n = 0; n < seq.size(); ++n) expect_eq(seq[n], count_free(n, q), at(n, q, 0), fail);
    }
  }));
  out.push_back(check("a(n,k) recurrence vs closed form", [&](auto fail) {
    for (unsigned q = 1; q <= lim.q_max; ++q) {
      const CountTable rec = count_table_recurrence(q, n_max);
      const CountTable closed = count_table(q, n_max);
      for (unsigned n = 0; n <= n_max; ++n) {
        if (rec.rows[n].size() != closed.rows[n].size()) fail("row length n=" + std::to_string(n));
        for (unsigned k = 0; k < closed.rows[n].size(); ++k) {
          expect_eq(rec.at(n, k), closed.at(n, k), at(n, q, k), fail);
        }
      }
    }
  }));
  out.push_back(check("column relation vs closed form", [&](auto fail) {
    for (unsigned q = 1; q <= lim.q_max; ++q) {
      for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned k = 1; k <= (n + q - 1) / q + 1; ++k) {
          expect_eq(column_step(n, k, q), count_aqc(n + q - 1, k, q), at(n, q, k), fail);
        }
      }
    }
  }));
  out.push_back(check("one-AqC column vs closed form", [&](auto fail) {
    for (unsigned q = 1; q <= lim.q_max; ++q) {
      for (unsigned n = std::max(q, 1u); n <= n_max; ++n) {
        expect_eq(count_one_aqc_relation(n, q), count_aqc(n - 1, 1, q), at(n, q, 1), fail);
      }
    }
  }));
  out.push_back(check("rencontres identity", [&](auto fail) {
    for (unsigned n = 0; n <= std::max(n_max, 12u); ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        expect_eq(count_aqc(n, k, 1), count_aqc_rencontres(n, k), at(n, 1, k), fail);
      }
    }
  }));
  out.push_back(check("AqC-free bounds", [&](auto fail) {
    for (unsigned q = 2; q <= 40; ++q) {
      for (unsigned n = q; n <= 40; ++n) {
        const auto [lo, hi] = free_bounds(n, q);
        const Nat b = count_free(n, q);
        if (b < lo || b > hi) fail("b_n outside bounds at " + at(n, q, 0));
      }
    }
  }));
}

void gf_checks(const VerifyLimits& lim, std::vector<CheckResult>& out) {
  for (unsigned q = 1; q <= lim.q_max; ++q) {
    out.push_back(check("OGF equation q=" + std::to_string(q), [&](auto fail) {
      const RatSeries r = verify_ogf_ode(q, lim.order);
      if (!r.is_zero_through(static_cast<long>(lim.order) - 1)) {
        fail("nonzero coefficient at z^" + std::to_string(r.first_nonzero()));
      }
    }));
    out.push_back(check("EGF equation q=" + std::to_string(q), [&](auto fail) {
      const RatSeries r = verify_egf_ode(q, lim.order);
      if (!r.is_zero_through(static_cast<long>(lim.order) - q - 1)) {
        fail("nonzero coefficient at z^" + std::to_string(r.first_nonzero()));
      }
    }));
  }
}

void permanent_checks(unsigned n_max, std::vector<CheckResult>& out) {
  const PermanentOptions opts{std::max(10u, n_max), PermanentMethod::kRyser};
  out.push_back(check("permanent generating polynomials vs closed form", [&](auto fail) {
    for (unsigned n = 1; n <= n_max; ++n) {
      for (unsigned q = 1; q <= n; ++q) {
        const auto coeffs = univariate_coefficients(generating_polynomial(n, q, opts), collective(0));
        if (coeffs.size() != n / q + 1) fail("degree mismatch at " + at(n, q, 0));
        for (unsigned k = 0; k < coeffs.size(); ++k) {
          expect_eq(Nat(coeffs[k]), count_aqc(n, k, q), at(n, q, k), fail);
        }
      }
    }
  }));
  out.push_back(check("rencontres permanent", [&](auto fail) {
    for (unsigned n = 0; n <= n_max; ++n) {
      auto coeffs = univariate_coefficients(rencontres_polynomial(n, opts), collective(0));
      coeffs.resize(n + 1, Int(0));
      for (unsigned k = 0; k <= n; ++k) expect_eq(Nat(coeffs[k]), count_aqc(n, k, 1), at(n, 1, k), fail);
    }
  }));
  out.push_back(check("Ryser vs naive expansion", [&](auto fail) {
    const PermanentOptions naive{opts.cap, PermanentMethod::kNaive};
    for (unsigned n = 1; n <= std::min(n_max, 6u); ++n) {
      for (unsigned q = 1; q <= n; ++q) {
        const MarkedMatrix m = build_marked_matrix(n, q);
        if (permanent(m, opts) != permanent(m, naive)) fail("disagreement at " + at(n, q, 0));
      }
    }
  }));
  if (n_max >= 5) {
    out.push_back(check("multi-length permanent n=5, Q={1..5}", [&](auto fail) {
      const MultiSpec all = MultiSpec::first(5);
      const MPoly f = generating_polynomial_multi(5, all, opts);
      std::size_t nonzero = 0;
      for (const auto& [ks, value] : multi_distribution(5, all)) {
        std::vector<Monomial::Power> powers;
        for (std::size_t j = 0; j < ks.size(); ++j) powers.emplace_back(collective(static_cast<std::uint16_t>(j)), ks[j]);
        expect_eq(Nat(f.coefficient(Monomial(powers))), value, "term " + std::to_string(nonzero), fail);
        ++nonzero;
      }
      if (f.size() != nonzero) fail("term count " + std::to_string(f.size()));
    }));
  }
}

void multi_checks(unsigned n_max, const VerifyLimits& lim, std::vector<CheckResult>& out) {
  const EnumerationOptions opts{std::max(10u, n_max), lim.threads};
  out.push_back(check("multi-length formula vs enumeration", [&](auto fail) {
    for (unsigned mask = 1; mask < 16; ++mask) {
      std::vector<unsigned> ls;
      for (unsigned b = 0; b < 4; ++b) {
        if (mask & (1u << b)) ls.push_back(b + 1);
      }
      const MultiSpec spec(ls);
      for (unsigned n = 0; n <= n_max; ++n) {
        const auto oracle = oracle_multi(n, spec, opts);
        Nat total;
        for (const auto& ks : multi_keys(n, spec)) {
          const Nat v = count_multi(n, spec, ks);
          auto it = oracle.find(ks);
          expect_eq(v, it == oracle.end() ? Nat{} : it->second, "n=" + std::to_string(n) + " mask=" + std::to_string(mask), fail);
          total += v;
        }
        expect_eq(total, factorial(n), "multi total n=" + std::to_string(n), fail);
        if (ls.size() == 1) {
          for (unsigned k = 0; k <= n / ls[0]; ++k) {
            expect_eq(count_multi(n, spec, {k}), count_aqc(n, k, ls[0]), at(n, ls[0], k), fail);
          }
        }
      }
    }
  }));
}

}  // namespace

std::optional<VerifyScope> parse_scope(const std::string& name) {
  if (name == "oracle") return VerifyScope::kOracle;
  if (name == "recurrences") return VerifyScope::kRecurrences;
  if (name == "gf") return VerifyScope::kGf;
  if (name == "permanent") return VerifyScope::kPermanent;
  if (name == "multi") return VerifyScope::kMulti;
  if (name == "all") return VerifyScope::kAll;
  return std::nullopt;
}

unsigned default_n_max(VerifyScope scope) {
  switch (scope) {
    case VerifyScope::kOracle: return 8;
    case VerifyScope::kRecurrences: return 30;
    case VerifyScope::kPermanent: return 7;
    case VerifyScope::kMulti: return 7;
    default: return 0;
  }
}

std::vector<CheckResult> run_verification(VerifyScope scope, const VerifyLimits& limits) {
  std::vector<CheckResult> out;
  auto n_for = [&](VerifyScope s) { return limits.n_max.value_or(default_n_max(s)); };
  const bool all = scope == VerifyScope::kAll;
  if (all || scope == VerifyScope::kOracle) oracle_checks(n_for(VerifyScope::kOracle), limits, out);
  if (all || scope == VerifyScope::kRecurrences) recurrence_checks(n_for(VerifyScope::kRecurrences), limits, out);
  if (all || scope == VerifyScope::kGf) gf_checks(limits, out);
  if (all || scope == VerifyScope::kPermanent) permanent_checks(n_for(VerifyScope::kPermanent), out);
  if (all || scope == VerifyScope::kMulti) multi_checks(n_for(VerifyScope::kMulti), limits, out);
  return out;
}

}  // namespace aqc
