#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace aqc {

// Signed arbitrary-precision integer used for alternating sums and
// polynomial coefficients.
using Int = mpz_class;

/// Arbitrary-precision nonnegative integer.
///
/// Every count in the library (a(n,k), b_n, factorials, binomials) is a
/// Nat. Construction from a negative Int throws ConsistencyError, so a
/// sign error in an alternating sum can never leak out as a count.
class Nat {
 public:
  Nat() = default;
  Nat(std::uint64_t v);  // NOLINT(google-explicit-constructor)
  explicit Nat(Int v);

  // Parses a decimal string of digits; throws InvalidArgument otherwise.
  static Nat parse(std::string_view digits);

  const Int& value() const { return value_; }
  std::string str() const { return value_.get_str(); }
  bool is_zero() const { return sgn(value_) == 0; }

  bool fits_u64() const;
  std::uint64_t to_u64() const;  // throws if !fits_u64()

  Nat& operator+=(const Nat& rhs);
  Nat& operator*=(const Nat& rhs);

  friend Nat operator+(Nat a, const Nat& b) { return a += b; }
  friend Nat operator*(Nat a, const Nat& b) { return a *= b; }

  friend bool operator==(const Nat& a, const Nat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Int value_{0};
};

std::ostream& operator<<(std::ostream& os, const Nat& n);

}  // namespace aqc
