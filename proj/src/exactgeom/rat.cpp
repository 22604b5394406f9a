#include "mixedbody/exactgeom/rat.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "mixedbody/error.hpp"

namespace mixedbody::exactgeom {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw ValidityError("rational with zero denominator");
  q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rat(num, den);
}

std::string Rat::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw ValidityError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

Rat pow(const Rat& base, unsigned exponent) {
  Rat result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

Rat factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f, 1);
}

mpz_class floor(const Rat& x) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return r;
}

mpz_class ceil(const Rat& x) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

}  // namespace mixedbody::exactgeom
