#include "polyvol/rat.hpp"

#include <cctype>
#include <ostream>

#include "polyvol/errors.hpp"

namespace polyvol {

Rat::Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::optional<Rat> Rat::parse(std::string_view text) {
  // [-]digits[/digits], denominator unsigned and nonzero
  size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) return std::nullopt;
  std::string num(text.substr(num_begin, i - num_begin));

  std::string den = "1";
  if (i < text.size()) {
    if (text[i] != '/') return std::nullopt;
    ++i;
    size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) return std::nullopt;
    den = std::string(text.substr(den_begin));
  }

  mpz_class d(den, 10);
  if (d == 0) return std::nullopt;
  mpz_class n(num, 10);
  if (neg) n = -n;
  return Rat(n, d);
}

std::string Rat::str() const {
  if (den() == 1) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace polyvol
