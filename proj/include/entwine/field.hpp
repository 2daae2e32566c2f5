#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace entwine {

/// Every coefficient is an exact rational. Over GF(p) the stored value is the
/// canonical integer representative in [0, p).
using Scalar = mpq_class;

/// Coefficient that does not denote an element of the field ("1/0", "3/7"
/// over GF(7), garbage text).
class FieldParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The ground field k: either Q or GF(p). Arithmetic goes through the field
/// so that prime-field values stay reduced.
class Field {
 public:
  enum class Kind { rational, prime };

  Field() = default;

  static Field rational() { return Field{}; }
  /// Throws std::invalid_argument unless p is prime.
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::prime; }
  std::uint64_t modulus() const { return p_; }

  /// "Q" or "GF(p)".
  std::string name() const;

  Scalar normalize(const Scalar& x) const;
  Scalar from_int(std::int64_t v) const { return normalize(Scalar(static_cast<long>(v))); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws std::domain_error on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// Accepts "n", "-n", "n/d". Throws FieldParseError.
  Scalar parse(std::string_view text) const;
  /// Lowest terms with positive denominator; integers print without "/1".
  std::string format(const Scalar& x) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::rational;
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace entwine
