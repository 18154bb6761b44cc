#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace eqgb {

class DomainMismatch : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Coefficient field of a ring: exact rationals or F_p for a prime p < 2^32.
class Field {
public:
  enum class Kind { rational, prime };

  static Field rational() { return Field(Kind::rational, 0); }
  /// Throws std::invalid_argument unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_rational() const { return kind_ == Kind::rational; }

  std::string to_string() const;

  bool operator==(const Field&) const = default;

private:
  Field(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}
  Kind kind_;
  std::uint64_t modulus_;
};

/// Element of F_p. The modulus travels with the value so that mixing fields is
/// detected rather than silently reduced.
struct PrimeElement {
  std::uint64_t value;
  std::uint64_t modulus;
  bool operator==(const PrimeElement&) const = default;
};

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (mpq_class canonicalizes after every operation).
class Coefficient {
public:
  Coefficient() : value_(mpq_class(0)) {}
  explicit Coefficient(mpq_class q);
  Coefficient(PrimeElement e);

  static Coefficient zero(const Field& field);
  static Coefficient one(const Field& field);
  static Coefficient from_integer(const Field& field, long value);
  /// Parses "n" or "n/d"; throws std::invalid_argument on malformed input or
  /// zero denominator.
  static Coefficient parse(const Field& field, std::string_view text);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Coefficient operator+(const Coefficient& o) const;
  Coefficient operator-(const Coefficient& o) const;
  Coefficient operator*(const Coefficient& o) const;
  Coefficient operator/(const Coefficient& o) const;
  Coefficient operator-() const;
  Coefficient inverse() const;

  /// Negative rationals and nothing else (F_p has no sign).
  bool is_negative() const;

  std::string to_string() const;

  bool operator==(const Coefficient& o) const;

  const mpq_class* rational() const { return std::get_if<mpq_class>(&value_); }
  const PrimeElement* prime() const { return std::get_if<PrimeElement>(&value_); }

private:
  std::variant<mpq_class, PrimeElement> value_;
};

}  // namespace eqgb
