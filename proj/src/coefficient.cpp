#include "eqgb/coefficient.hpp"

namespace eqgb {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce_signed(long value, std::uint64_t m) {
  long r = value % static_cast<long>(m);
  if (r < 0) r += static_cast<long>(m);
  return static_cast<std::uint64_t>(r);
}

[[noreturn]] void mismatch() { throw DomainMismatch("coefficient domains differ"); }

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
    throw std::invalid_argument("field modulus must be a prime below 2^32, got " +
                                std::to_string(p));
  return Field(Kind::prime, p);
}

std::string Field::to_string() const {
  return is_rational() ? "rational" : "prime(" + std::to_string(modulus_) + ")";
}

Coefficient::Coefficient(mpq_class q) : value_(std::move(q)) {
  std::get<mpq_class>(value_).canonicalize();
}

Coefficient::Coefficient(PrimeElement e) : value_(e) {
  std::get<PrimeElement>(value_).value %= e.modulus;
}

Coefficient Coefficient::zero(const Field& field) { return from_integer(field, 0); }
Coefficient Coefficient::one(const Field& field) { return from_integer(field, 1); }

Coefficient Coefficient::from_integer(const Field& field, long value) {
  if (field.is_rational()) return Coefficient(mpq_class(value));
  return Coefficient(PrimeElement{reduce_signed(value, field.modulus()), field.modulus()});
}

Coefficient Coefficient::parse(const Field& field, std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer in coefficient '" +
                                               std::string(text) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad coefficient '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("bad coefficient '" + std::string(text) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
  };
  auto slash = text.find('/');
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = slash == std::string_view::npos ? mpz_class(1) : parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in coefficient '" + std::string(text) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  if (field.is_rational()) return Coefficient(std::move(q));
  const std::uint64_t m = field.modulus();
  mpz_class mz(static_cast<unsigned long>(m));
  mpz_class n = q.get_num() % mz;
  if (n < 0) n += mz;
  mpz_class d = q.get_den() % mz;
  if (d == 0) throw std::invalid_argument("denominator of '" + std::string(text) +
                                          "' vanishes modulo " + std::to_string(m));
  Coefficient cn(PrimeElement{n.get_ui(), m});
  Coefficient cd(PrimeElement{d.get_ui(), m});
  return cn / cd;
}

Field Coefficient::field() const {
  if (auto* e = prime()) return Field::prime(e->modulus);
  return Field::rational();
}

bool Coefficient::is_zero() const {
  if (auto* q = rational()) return sgn(*q) == 0;
  return prime()->value == 0;
}

bool Coefficient::is_one() const {
  if (auto* q = rational()) return *q == 1;
  return prime()->value == 1;
}

bool Coefficient::is_negative() const {
  auto* q = rational();
  return q && sgn(*q) < 0;
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
  if (auto* a = rational()) {
    auto* b = o.rational();
    if (!b) mismatch();
    return Coefficient(mpq_class(*a + *b));
  }
  auto* a = prime();
  auto* b = o.prime();
  if (!b || b->modulus != a->modulus) mismatch();
  return Coefficient(PrimeElement{(a->value + b->value) % a->modulus, a->modulus});
}

Coefficient Coefficient::operator-() const {
  if (auto* a = rational()) return Coefficient(mpq_class(-*a));
  auto* a = prime();
  return Coefficient(PrimeElement{(a->modulus - a->value) % a->modulus, a->modulus});
}

Coefficient Coefficient::operator-(const Coefficient& o) const { return *this + (-o); }

Coefficient Coefficient::operator*(const Coefficient& o) const {
  if (auto* a = rational()) {
    auto* b = o.rational();
    if (!b) mismatch();
    return Coefficient(mpq_class(*a * *b));
  }
  auto* a = prime();
  auto* b = o.prime();
  if (!b || b->modulus != a->modulus) mismatch();
  return Coefficient(PrimeElement{a->value * b->value % a->modulus, a->modulus});
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero coefficient");
  if (auto* a = rational()) return Coefficient(mpq_class(1 / *a));
  auto* a = prime();
  return Coefficient(PrimeElement{pow_mod(a->value, a->modulus - 2, a->modulus), a->modulus});
}

Coefficient Coefficient::operator/(const Coefficient& o) const { return *this * o.inverse(); }

bool Coefficient::operator==(const Coefficient& o) const {
  if (auto* a = rational()) {
    auto* b = o.rational();
    return b && *a == *b;
  }
  auto* b = o.prime();
  return b && *b == *prime();
}

std::string Coefficient::to_string() const {
  if (auto* q = rational()) return q->get_str();
  return std::to_string(prime()->value);
}

}  // namespace eqgb
