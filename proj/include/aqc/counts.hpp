#pragma once

// Exact counts of permutations by number of adjacent q-cycles.
//
// An adjacent q-cycle (AqC) is a cycle (a, a+1, ..., a+q-1). Throughout,
// a(n,k) is the number of permutations of {1..n} with exactly k AqC's for a
// fixed q, and b_n = a(n,0). Several independent routes are provided so they
// can be checked against each other: the inclusion-exclusion closed form,
// the column relation, the two recurrences, and the multi-length formula.

#include <cstddef>
#include <utility>
#include <vector>

#include "aqc/nat.hpp"

namespace aqc {

/// Strictly increasing, nonempty set of cycle lengths q_1 < ... < q_m.
class MultiSpec {
 public:
  explicit MultiSpec(std::vector<unsigned> lengths);

  const std::vector<unsigned>& lengths() const { return lengths_; }
  std::size_t size() const { return lengths_.size(); }
  unsigned operator[](std::size_t i) const { return lengths_[i]; }

  // {1, 2, ..., m}
  static MultiSpec first(unsigned m);

  friend bool operator==(const MultiSpec&, const MultiSpec&) = default;

 private:
  std::vector<unsigned> lengths_;
};

/// Multiplicities (k_1, ..., k_m) aligned with a MultiSpec.
using KVector = std::vector<unsigned>;

/// The triangle a(n,k) for one q. rows[n] has floor(n/q)+1 entries.
struct CountTable {
  unsigned q = 1;
  std::vector<std::vector<Nat>> rows;

  // a(n,k), zero outside the stored triangle.
  Nat at(unsigned n, unsigned k) const;
};

Nat binomial(unsigned n, long k);
Nat factorial(unsigned n);

/// a(n,k) by the alternating inclusion-exclusion sum
///   sum_{j=k}^{n/q} (-1)^{k+j} C(j,k) (n-(q-1)j)! / j!.
/// Zero when k > floor(n/q). Throws InvalidArgument for q = 0.
Nat count_aqc(unsigned n, unsigned k, unsigned q);

/// b_n = a(n,0): permutations with no AqC. For q = 1, the derangement number.
Nat count_free(unsigned n, unsigned q);

/// q = 1 only: C(n,k) d_{n-k}. Requires k <= n.
Nat count_aqc_rencontres(unsigned n, unsigned k);

/// a(n+q-1, k) from a(n, k-1) by the column relation
///   k a(n+q-1,k) = a(n,k-1) + [q|n] (-1)^{k+n/q} C(n/q, k-1).
/// Throws ConsistencyError if the right side is not divisible by k.
Nat column_step(unsigned n, unsigned k, unsigned q);

/// a(n-1, 1) = b_{n-q} + [q|n] (-1)^{n/q}. Requires n >= q.
Nat count_one_aqc_relation(unsigned n, unsigned q);

/// b_0..b_n from b_n - n b_{n-1} = (q-1) b_{n-q} + [q|n] q (-1)^{n/q}, seeded
/// with b_m = m! for m < q (b_0 = 1 when q = 1).
std::vector<Nat> free_sequence_recurrence(unsigned n, unsigned q);
Nat free_recurrence(unsigned n, unsigned q);

/// Rows 0..n_max of the triangle, each entry from the closed form.
CountTable count_table(unsigned q, unsigned n_max);

/// Rows 0..n_max built only from earlier rows:
///   a(n+1,k) = a(n-q+1,k-1) + (n-qk+1) a(n,k) - a(n-q+1,k) + q(k+1) a(n,k+1)
/// for k >= 1, with the k = 0 column from free_sequence_recurrence and rows
/// n < q seeded directly.
CountTable count_table_recurrence(unsigned q, unsigned n_max);

/// a(n,k) read off count_table_recurrence. Requires k >= 1.
Nat count_aqc_recurrence(unsigned n, unsigned k, unsigned q);

/// a(n; k_1..k_m): permutations with exactly k_j adjacent q_j-cycles for
/// every j. Throws InvalidArgument if ks.size() != lengths.size().
Nat count_multi(unsigned n, const MultiSpec& lengths, const KVector& ks);

/// All KVectors with sum q_j k_j <= n, in lexicographic order.
std::vector<KVector> multi_keys(unsigned n, const MultiSpec& lengths);

/// Nonzero entries of the joint distribution, from count_multi.
std::vector<std::pair<KVector, Nat>> multi_distribution(unsigned n, const MultiSpec& lengths);

/// Permutations avoiding adjacent cycles of every length 1..m.
Nat restricted_derangements(unsigned n, unsigned m);

/// (n! - (n+1-q)!, n!), which bracket b_n. Requires q >= 2 and n >= q.
std::pair<Nat, Nat> free_bounds(unsigned n, unsigned q);

}  // namespace aqc
