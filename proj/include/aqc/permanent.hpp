#pragma once

// Permanents of matrices over MPoly, and the marked matrices whose
// permanents generate AqC counts.
//
// In a marked matrix each tracked adjacent cycle (a, a+1, ..., a+q-1) gets
// its own variable, placed on every entry (i, j) the cycle maps i -> j.
// A permutation's term in the permanent then carries that variable to the
// power q exactly when the permutation contains the whole cycle, and to a
// lower power when it only shares some of the cycle's arrows. collapse()
// turns full powers into the family's collective variable and drops the
// rest, leaving the generating polynomial of AqC counts.

#include <vector>

#include "aqc/counts.hpp"
#include "aqc/polynomial.hpp"

namespace aqc {

struct MarkedMatrix {
  unsigned n = 0;
  std::vector<MPoly> entries;  // row-major, n * n
  FamilyTable families;

  // 1-based, as in the cycle notation.
  const MPoly& at(unsigned i, unsigned j) const { return entries[(i - 1) * n + (j - 1)]; }
  MPoly& at(unsigned i, unsigned j) { return entries[(i - 1) * n + (j - 1)]; }
};

/// Every entry 1, except that each adjacent q-cycle starting at a gets the
/// variable x_a (family 0, named "x") on its q arrows. Requires 1 <= q <= n.
MarkedMatrix build_marked_matrix(unsigned n, unsigned q);

/// One family per length in Q, named x, y, z, u, v for lengths 1..5 and
/// "c<q>" beyond. Fixed points are marked by the collective x directly.
/// Requires every length <= n.
MarkedMatrix build_marked_matrix_multi(unsigned n, const MultiSpec& lengths);

/// x on the diagonal, 1 elsewhere.
MarkedMatrix rencontres_matrix(unsigned n);

enum class PermanentMethod { kRyser, kNaive };

struct PermanentOptions {
  unsigned cap = 10;
  PermanentMethod method = PermanentMethod::kRyser;
};

/// Sum over sigma in S_n of prod_i m(i, sigma(i)). Ryser's inclusion-exclusion
/// over column subsets visited in Gray-code order by default; the naive n!
/// expansion is available as a cross-check. Throws ResourceLimitError when
/// m.n > options.cap.
MPoly permanent(const MarkedMatrix& m, const PermanentOptions& options = {});

/// Replaces, in every monomial, v^len by the collective variable of v's
/// family when len is the family's length and by 1 when it is smaller.
/// An exponent above the length throws ConsistencyError; a family missing
/// from `families` throws InvalidArgument. Collective variables pass through.
MPoly collapse(const MPoly& p, const FamilyTable& families);

/// sum_k a(n,k) x^k via the permanent of build_marked_matrix(n, q).
MPoly generating_polynomial(unsigned n, unsigned q, const PermanentOptions& options = {});

/// Collapsed permanent of build_marked_matrix_multi(n, lengths).
MPoly generating_polynomial_multi(unsigned n, const MultiSpec& lengths,
                                  const PermanentOptions& options = {});

/// per(xI + (J - I)) = sum_k r(n,k) x^k, r(n,k) permutations with k fixed points.
MPoly rencontres_polynomial(unsigned n, const PermanentOptions& options = {});

/// The collective variable of family `family`.
inline Variable collective(std::uint16_t family) { return Variable{family, 0}; }

}  // namespace aqc
