#include "aqc/counts.hpp"

#include <gtest/gtest.h>

#include "aqc/errors.hpp"
#include "aqc/oracle.hpp"

namespace aqc {
namespace {

// Values marked "enumeration" below were produced by an independent
// brute-force count over S_n and frozen here.

TEST(Binomial, Basics) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(7, 0), 1);
  EXPECT_EQ(binomial(4, 7), 0);
  EXPECT_EQ(binomial(4, -1), 0);
}

TEST(Factorial, Basics) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(13), Nat(6227020800ULL));
  EXPECT_EQ(factorial(25).str(), "15511210043330985984000000");
}

TEST(CountAqc, PublishedValues) {
  EXPECT_EQ(count_aqc(3, 1, 2), 2);
  EXPECT_EQ(count_aqc(3, 0, 2), 4);
  EXPECT_EQ(count_aqc(13, 2, 5), 60);
  EXPECT_EQ(count_aqc(10, 0, 5), 3628081);
  EXPECT_EQ(count_aqc(0, 0, 4), 1);
}

TEST(CountAqc, FrozenEnumerationValues) {
  // S_7, q = 3 (enumeration): [4923, 114, 3]
  EXPECT_EQ(count_aqc(7, 0, 3), 4923);
  EXPECT_EQ(count_aqc(7, 1, 3), 114);
  EXPECT_EQ(count_aqc(7, 2, 3), 3);
  // S_9, q = 2 (enumeration): [324965, 35620, 2190, 100, 5]
  const std::uint64_t s9q2[] = {324965, 35620, 2190, 100, 5};
  for (unsigned k = 0; k < 5; ++k) EXPECT_EQ(count_aqc(9, k, 2), s9q2[k]) << k;
}

TEST(CountAqc, ZeroBeyondFloor) {
  EXPECT_EQ(count_aqc(7, 3, 3), 0);
  EXPECT_EQ(count_aqc(4, 1, 5), 0);
}

TEST(CountAqc, RejectsZeroQ) {
  EXPECT_THROW(count_aqc(3, 0, 0), InvalidArgument);
  EXPECT_THROW(count_free(3, 0), InvalidArgument);
}

TEST(CountFree, Values) {
  EXPECT_EQ(count_free(5, 5), 119);
  EXPECT_EQ(count_free(4, 1), 9);  // enumeration: derangements of S_4
  EXPECT_EQ(count_free(0, 3), 1);
  EXPECT_EQ(count_free(8, 3), 39612);  // enumeration
}

TEST(Rencontres, Values) {
  for (unsigned n = 0; n <= 12; ++n) {
    EXPECT_EQ(count_aqc_rencontres(n, n), 1);
    if (n >= 1) EXPECT_EQ(count_aqc_rencontres(n, n - 1), 0);
  }
  EXPECT_EQ(count_aqc_rencontres(6, 2), count_aqc(6, 2, 1));
  EXPECT_EQ(count_aqc_rencontres(6, 2), 135);  // enumeration
  EXPECT_THROW(count_aqc_rencontres(3, 4), InvalidArgument);
}

TEST(ColumnStep, PublishedValues) {
  EXPECT_EQ(column_step(5, 1, 5), 120);
  EXPECT_EQ(column_step(6, 1, 5), 718);
  EXPECT_EQ(column_step(8, 2, 2), count_aqc(9, 2, 2));
  EXPECT_EQ(column_step(8, 2, 2), 2190);  // enumeration
  EXPECT_THROW(column_step(5, 0, 5), InvalidArgument);
}

TEST(ColumnStep, ExactForAllSmallInputs) {
  for (unsigned q = 1; q <= 6; ++q) {
    for (unsigned n = 0; n <= 30; ++n) {
      for (unsigned k = 1; k <= (n + q - 1) / q + 1; ++k) {
        ASSERT_NO_THROW(EXPECT_EQ(column_step(n, k, q), count_aqc(n + q - 1, k, q)))
            << n << ' ' << k << ' ' << q;
      }
    }
  }
}

TEST(OneAqcRelation, Values) {
  EXPECT_EQ(count_one_aqc_relation(10, 5), 120);
  EXPECT_EQ(count_one_aqc_relation(12, 5), 5034);
  EXPECT_EQ(count_one_aqc_relation(9, 3), count_aqc(8, 1, 3));
  EXPECT_EQ(count_one_aqc_relation(9, 3), 696);  // enumeration
  EXPECT_THROW(count_one_aqc_relation(4, 5), InvalidArgument);
}

TEST(FreeRecurrence, Values) {
  EXPECT_EQ(free_recurrence(5, 5), 119);
  EXPECT_EQ(free_recurrence(8, 3), count_free(8, 3));
  // d_n - n d_{n-1} = (-1)^n
  const auto d = free_sequence_recurrence(20, 1);
  for (unsigned n = 1; n <= 20; ++n) {
    Int lhs = d[n].value() - n * d[n - 1].value();
    EXPECT_EQ(lhs, n % 2 == 0 ? 1 : -1) << n;
  }
}

TEST(FreeRecurrence, SeedsMatchClosedForm) {
  for (unsigned q = 1; q <= 6; ++q) {
    const auto seq = free_sequence_recurrence(q, q);
    for (unsigned m = 0; m < q; ++m) EXPECT_EQ(seq[m], count_free(m, q));
  }
}

TEST(FreeRecurrence, AgreesThroughSixty) {
  for (unsigned q = 1; q <= 6; ++q) {
    const auto seq = free_sequence_recurrence(60, q);
    for (unsigned n = 0; n <= 60; ++n) ASSERT_EQ(seq[n], count_free(n, q)) << n << ' ' << q;
  }
}

TEST(AqcRecurrence, Values) {
  EXPECT_EQ(count_aqc_recurrence(6, 2, 3), 1);
  EXPECT_EQ(count_aqc_recurrence(6, 1, 3), 22);
  EXPECT_EQ(count_aqc_recurrence(9, 1, 2), count_aqc(9, 1, 2));
  EXPECT_EQ(count_aqc_recurrence(9, 1, 2), 35620);  // enumeration
  EXPECT_THROW(count_aqc_recurrence(5, 0, 2), InvalidArgument);
}

TEST(AqcRecurrence, TableMatchesClosedForm) {
  for (unsigned q = 1; q <= 6; ++q) {
    const CountTable rec = count_table_recurrence(q, 30);
    const CountTable closed = count_table(q, 30);
    ASSERT_EQ(rec.rows.size(), closed.rows.size());
    for (unsigned n = 0; n <= 30; ++n) ASSERT_EQ(rec.rows[n], closed.rows[n]) << n << ' ' << q;
  }
}

TEST(CountTable, RowsSumToFactorial) {
  for (unsigned n = 1; n <= 10; ++n) {
    for (unsigned q = 1; q <= n; ++q) {
      const CountTable t = count_table(q, n);
      Nat sum;
      for (const auto& v : t.rows[n]) sum += v;
      EXPECT_EQ(sum, factorial(n)) << n << ' ' << q;
      EXPECT_EQ(t.rows[n].size(), n / q + 1);
      EXPECT_EQ(t.at(n, n / q + 1), 0);
    }
  }
}

TEST(CountAqc, TotalAqcCount) {
  // Each of the n+1-q adjacent q-cycles extends to (n-q)! permutations.
  for (unsigned q = 1; q <= 6; ++q) {
    for (unsigned n = q; n <= 25; ++n) {
      Nat weighted;
      for (unsigned k = 1; k <= n / q; ++k) weighted += Nat(std::uint64_t{k}) * count_aqc(n, k, q);
      EXPECT_EQ(weighted, Nat(std::uint64_t{n + 1 - q}) * factorial(n - q)) << n << ' ' << q;
    }
  }
}

TEST(MultiSpec, Validation) {
  EXPECT_THROW(MultiSpec({}), InvalidArgument);
  EXPECT_THROW(MultiSpec({0, 1}), InvalidArgument);
  EXPECT_THROW(MultiSpec({2, 2}), InvalidArgument);
  EXPECT_THROW(MultiSpec({3, 1}), InvalidArgument);
  EXPECT_EQ(MultiSpec::first(3).lengths(), (std::vector<unsigned>{1, 2, 3}));
}

TEST(CountMulti, FiveVariatePolynomialOfS5) {
  const MultiSpec all = MultiSpec::first(5);
  EXPECT_EQ(count_multi(5, all, {0, 2, 0, 0, 0}), 0);
  EXPECT_EQ(count_multi(5, all, {1, 2, 0, 0, 0}), 3);
  EXPECT_EQ(count_multi(5, all, {0, 0, 1, 0, 0}), 1);
  EXPECT_EQ(count_multi(5, all, {0, 0, 0, 0, 1}), 1);
  EXPECT_EQ(count_multi(5, all, {0, 0, 0, 0, 0}), 34);
  EXPECT_EQ(count_multi(5, all, {3, 1, 0, 0, 0}), 4);
  EXPECT_EQ(multi_distribution(5, all).size(), 14u);
}

TEST(CountMulti, OutOfReachIsZero) {
  EXPECT_EQ(count_multi(5, MultiSpec({2, 3}), {1, 2}), 0);
  EXPECT_THROW(count_multi(5, MultiSpec({2, 3}), {1}), InvalidArgument);
}

TEST(CountMulti, SingleLengthDegeneratesToCountAqc) {
  for (unsigned q = 1; q <= 5; ++q) {
    for (unsigned n = 0; n <= 14; ++n) {
      for (unsigned k = 0; k <= n / q + 1; ++k) {
        EXPECT_EQ(count_multi(n, MultiSpec({q}), {k}), count_aqc(n, k, q)) << n << ' ' << k << ' ' << q;
      }
    }
  }
}

TEST(CountMulti, TotalsAreFactorial) {
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<unsigned> ls;
    for (unsigned b = 0; b < 4; ++b) {
      if (mask & (1u << b)) ls.push_back(b + 1);
    }
    const MultiSpec spec(ls);
    for (unsigned n = 0; n <= 8; ++n) {
      Nat total;
      for (const auto& ks : multi_keys(n, spec)) total += count_multi(n, spec, ks);
      EXPECT_EQ(total, factorial(n)) << mask << ' ' << n;
    }
  }
}

TEST(RestrictedDerangements, Values) {
  for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(restricted_derangements(n, 1), count_free(n, 1));
  EXPECT_EQ(restricted_derangements(5, 2), 36);   // enumeration
  EXPECT_EQ(restricted_derangements(6, 2), 225);  // enumeration
  EXPECT_EQ(restricted_derangements(0, 3), 1);
  EXPECT_EQ(restricted_derangements(5, 5), 34);
  EXPECT_EQ(count_multi(6, MultiSpec({1, 2}), {0, 0}), 225);
  EXPECT_THROW(restricted_derangements(3, 0), InvalidArgument);
}

TEST(FreeBounds, Values) {
  EXPECT_EQ(free_bounds(5, 5), std::make_pair(Nat(119), Nat(120)));
  const auto [lo, hi] = free_bounds(6, 2);
  EXPECT_EQ(lo, 600);
  EXPECT_EQ(hi, 720);
  EXPECT_LE(lo, count_free(6, 2));
  EXPECT_LE(count_free(6, 2), hi);
  for (unsigned q = 2; q <= 8; ++q) {
    EXPECT_EQ(free_bounds(q, q), std::make_pair(Nat(factorial(q).value() - 1), factorial(q)));
  }
  EXPECT_THROW(free_bounds(5, 1), InvalidArgument);
  EXPECT_THROW(free_bounds(3, 4), InvalidArgument);
}

TEST(FreeBounds, HoldThroughForty) {
  for (unsigned q = 2; q <= 40; ++q) {
    for (unsigned n = q; n <= 40; ++n) {
      const auto [lo, hi] = free_bounds(n, q);
      const Nat b = count_free(n, q);
      EXPECT_LE(lo, b);
      EXPECT_LE(b, hi);
    }
  }
}

TEST(CountAqc, MatchesEnumerationThroughNine) {
  for (unsigned n = 0; n <= 9; ++n) {
    for (unsigned q = 1; q <= std::max(n, 1u); ++q) {
      const auto dist = oracle_distribution(n, q);
      ASSERT_EQ(dist.size(), n / q + 1);
      for (unsigned k = 0; k < dist.size(); ++k) EXPECT_EQ(count_aqc(n, k, q), dist[k]) << n << ' ' << k << ' ' << q;
    }
  }
}

}  // namespace
}  // namespace aqc
