#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mixedbody::exactgeom {

/**
 * Exact rational number backed by GMP.
 *
 * Always in lowest terms with a positive denominator; zero is 0/1.
 * Division by zero throws ValidityError instead of aborting.
 */
class Rat {
 public:
  Rat() = default;
  Rat(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(mpq_class q);

  // Accepts "p", "-p", "p/q" with optional leading sign; rejects
  // anything else (whitespace, decimals, zero denominators).
  static Rat parse(std::string_view text);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }
  double to_double() const { return q_.get_d(); }

  // "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

Rat abs(const Rat& x);
Rat pow(const Rat& base, unsigned exponent);
Rat factorial(unsigned n);
mpz_class floor(const Rat& x);
mpz_class ceil(const Rat& x);

std::ostream& operator<<(std::ostream& os, const Rat& x);

}  // namespace mixedbody::exactgeom
