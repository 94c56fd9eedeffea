#include "aqc/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "aqc/errors.hpp"

namespace aqc {

namespace {

std::string family_name(unsigned length) {
  static constexpr const char* kNames[] = {"x", "y", "z", "u", "v"};
  return length >= 1 && length <= 5 ? kNames[length - 1] : "c" + std::to_string(length);
}

MarkedMatrix ones(unsigned n) {
  MarkedMatrix m;
  m.n = n;
  m.entries.assign(static_cast<std::size_t>(n) * n, MPoly(1));
  return m;
}

// Multiplies `mark` onto the arrows of the adjacent cycle (a, ..., a+q-1).
void mark_cycle(MarkedMatrix& m, unsigned a, unsigned q, const MPoly& mark) {
  for (unsigned i = a; i < a + q; ++i) {
    const unsigned j = (i + 1 < a + q) ? i + 1 : a;
    m.at(i, j) *= mark;
  }
}

MPoly ryser(const MarkedMatrix& m) {
  const unsigned n = m.n;
  std::vector<MPoly> row_sums(n);
  MPoly total;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t step = 1; step < subsets; ++step) {
    const auto col = static_cast<unsigned>(std::countr_zero(step));
    gray ^= std::uint64_t{1} << col;
    const bool added = (gray >> col) & 1;
    for (unsigned i = 0; i < n; ++i) {
      if (added) {
        row_sums[i] += m.entries[i * n + col];
      } else {
        row_sums[i] -= m.entries[i * n + col];
      }
    }
    MPoly prod = row_sums[0];
    for (unsigned i = 1; i < n && !prod.is_zero(); ++i) prod *= row_sums[i];
    // (-1)^(n - |S|)
    if ((n - static_cast<unsigned>(std::popcount(gray))) % 2 == 0) {
      total += prod;
    } else {
      total -= prod;
    }
  }
  return total;
}

MPoly naive(const MarkedMatrix& m) {
  const unsigned n = m.n;
  std::vector<unsigned> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0u);
  MPoly total;
  do {
    MPoly prod(1);
    for (unsigned i = 0; i < n; ++i) prod *= m.entries[i * n + sigma[i]];
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

}  // namespace

MarkedMatrix build_marked_matrix(unsigned n, unsigned q) {
  if (q < 1 || q > n) throw InvalidArgument("marked matrix needs 1 <= q <= n");
  MarkedMatrix m = ones(n);
  m.families = {{"x", q}};
  for (unsigned a = 1; a + q - 1 <= n; ++a) {
    mark_cycle(m, a, q, MPoly::variable({0, static_cast<std::uint16_t>(a)}));
  }
  return m;
}

MarkedMatrix build_marked_matrix_multi(unsigned n, const MultiSpec& lengths) {
  if (lengths.lengths().back() > n) throw InvalidArgument("every tracked length must be <= n");
  MarkedMatrix m = ones(n);
  for (std::size_t f = 0; f < lengths.size(); ++f) {
    const unsigned q = lengths[f];
    const auto family = static_cast<std::uint16_t>(f);
    m.families.push_back({family_name(q), q});
    for (unsigned a = 1; a + q - 1 <= n; ++a) {
      // A fixed point is a whole cycle on its own, so its mark is already collapsed.
      const Variable v{family, q == 1 ? std::uint16_t{0} : static_cast<std::uint16_t>(a)};
      mark_cycle(m, a, q, MPoly::variable(v));
    }
  }
  return m;
}

MarkedMatrix rencontres_matrix(unsigned n) {
  MarkedMatrix m = ones(n);
  m.families = {{"x", 1}};
  for (unsigned a = 1; a <= n; ++a) m.at(a, a) = MPoly::variable(collective(0));
  return m;
}

MPoly permanent(const MarkedMatrix& m, const PermanentOptions& options) {
  if (m.n > options.cap) {
    throw ResourceLimitError("permanent of order " + std::to_string(m.n) + " exceeds the cap " +
                             std::to_string(options.cap));
  }
  if (m.n > 62) throw ResourceLimitError("permanent order must be <= 62");
  if (m.entries.size() != static_cast<std::size_t>(m.n) * m.n) {
    throw InvalidArgument("matrix entry count does not match its order");
  }
  if (m.n == 0) return MPoly(1);
  return options.method == PermanentMethod::kRyser ? ryser(m) : naive(m);
}

MPoly collapse(const MPoly& p, const FamilyTable& families) {
  MPoly out;
  for (const auto& [mono, coeff] : p.terms()) {
    std::vector<Monomial::Power> kept;
    for (const auto& [v, e] : mono.powers()) {
      if (v.family >= families.size()) {
        throw InvalidArgument("variable family " + std::to_string(v.family) + " has no declared length");
      }
      if (v.index == 0) {
        kept.emplace_back(v, e);
        continue;
      }
      const unsigned len = families[v.family].length;
      if (e > len) {
        throw ConsistencyError(variable_name(v, families) + " has exponent " + std::to_string(e) +
                               " above its cycle length " + std::to_string(len));
      }
      if (e == len) kept.emplace_back(collective(v.family), 1);
    }
    out.add_term(Monomial(std::move(kept)), coeff);
  }
  return out;
}

MPoly generating_polynomial(unsigned n, unsigned q, const PermanentOptions& options) {
  if (q == 0) throw InvalidArgument("cycle length q must be at least 1");
  if (q > n) return MPoly(Int(factorial(n).value()));  // no AqC fits: n! x^0
  const MarkedMatrix m = build_marked_matrix(n, q);
  return collapse(permanent(m, options), m.families);
}

MPoly generating_polynomial_multi(unsigned n, const MultiSpec& lengths,
                                  const PermanentOptions& options) {
  const MarkedMatrix m = build_marked_matrix_multi(n, lengths);
  return collapse(permanent(m, options), m.families);
}

MPoly rencontres_polynomial(unsigned n, const PermanentOptions& options) {
  return permanent(rencontres_matrix(n), options);
}

}  // namespace aqc
