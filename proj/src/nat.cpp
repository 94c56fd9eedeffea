#include "aqc/nat.hpp"

#include <limits>
#include <ostream>

#include "aqc/errors.hpp"

namespace aqc {

Nat::Nat(std::uint64_t v) {
  // mpz_class has no portable uint64_t constructor; go through two halves.
  value_ = static_cast<unsigned long>(v >> 32);
  value_ <<= 32;
  value_ += static_cast<unsigned long>(v & 0xffffffffu);
}

Nat::Nat(Int v) : value_(std::move(v)) {
  if (sgn(value_) < 0) {
    throw ConsistencyError("negative value " + value_.get_str() + " where a count was expected");
  }
}

Nat Nat::parse(std::string_view digits) {
  if (digits.empty()) throw InvalidArgument("empty natural number");
  for (char c : digits) {
    if (c < '0' || c > '9') throw InvalidArgument("not a natural number: " + std::string(digits));
  }
  return Nat(Int(std::string(digits), 10));
}

bool Nat::fits_u64() const {
  return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64;
}

std::uint64_t Nat::to_u64() const {
  if (!fits_u64()) throw InvalidArgument("value does not fit in 64 bits: " + str());
  Int hi = value_ >> 32;
  Int lo = value_ - (hi << 32);
  return (static_cast<std::uint64_t>(hi.get_ui()) << 32) | lo.get_ui();
}

Nat& Nat::operator+=(const Nat& rhs) {
  value_ += rhs.value_;
  return *this;
}

Nat& Nat::operator*=(const Nat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.str(); }

}  // namespace aqc
