#include "tricover/rat.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace tricover {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.v_ == 0) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

std::optional<Rat> Rat::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  if (text[pos] == '-') ++pos;
  std::size_t digits_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits_start) return std::nullopt;
  mpz_class num(std::string(text.substr(0, pos)), 10);
  if (pos == text.size()) return Rat(num, mpz_class(1));
  if (text[pos] != '/') return std::nullopt;
  ++pos;
  std::size_t den_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == den_start || pos != text.size()) return std::nullopt;
  mpz_class den(std::string(text.substr(den_start)), 10);
  if (den == 0) return std::nullopt;
  return Rat(num, den);
}

mpz_class Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rat Rat::frac() const { return *this - Rat(floor()); }

Rat Rat::abs() const {
  Rat r = *this;
  if (r.sign() < 0) r = -r;
  return r;
}

std::string Rat::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) {
    s += '/';
    s += v_.get_den().get_str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace tricover
