#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace polyvol {

// Exact arbitrary-precision rational scalar. Values are always canonical:
// positive denominator, numerator and denominator coprime. Every operation
// is exact; there is no rounding anywhere in the library.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}  // implicit on purpose: integer literals in math code
  Rat(long num, long den);
  Rat(const mpz_class& num, const mpz_class& den);

  // Accepts "p", "-p" or "p/q" with q a positive integer. Anything else
  // (including a zero denominator) yields nullopt.
  static std::optional<Rat> parse(std::string_view text);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  Rat abs() const { return Rat(mpq_class(::abs(q_))); }

  // "p/q" in lowest terms, or a bare integer when q == 1.
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

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) != 0; }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) >= 0; }

 private:
  explicit Rat(mpq_class q) : q_(std::move(q)) {}  // must already be canonical
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace polyvol
