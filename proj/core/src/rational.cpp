#include "rbss/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rbss {

Rat::Rat(long n, long d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return Rat(mpq_class(a.v_ / b.v_));
}

Rat Rat::abs() const { return sign() < 0 ? neg() : *this; }

Rat Rat::inv() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return Rat(mpq_class(1 / v_));
}

Rat Rat::pow(unsigned long e) const {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), den().get_mpz_t(), e);
  // num/den already coprime, so powers are coprime too
  return Rat(r);
}

Rat Rat::pow10(long k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
  mpq_class q;
  if (k >= 0) {
    q = mpq_class(p);
  } else {
    q = mpq_class(1);
    q /= mpq_class(p);
  }
  return Rat(q);
}

mpz_class Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

mpz_class Rat::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

mpz_class Rat::trunc() const {
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

std::optional<long> Rat::as_long() const {
  if (!is_integer() || !num().fits_slong_p()) return std::nullopt;
  return num().get_si();
}

std::string Rat::str() const {
  std::ostringstream os;
  os << v_.get_num();
  if (v_.get_den() != 1) os << '/' << v_.get_den();
  return os.str();
}

std::string Rat::decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  mpz_class scaled;  // |v| * 10^digits, truncated
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class n = num() * p10;
  mpz_tdiv_q(scaled.get_mpz_t(), n.get_mpz_t(), den().get_mpz_t());
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out;
  if (negative) out.push_back('-');
  out += s.substr(0, s.size() - digits);
  if (digits > 0) {
    out.push_back('.');
    out += s.substr(s.size() - digits);
  }
  return out;
}

std::optional<Rat> Rat::try_parse(const std::string& text) {
  size_t i = 0, n = text.size();
  auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  bool negative = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  size_t digit_start = i;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == digit_start) return std::nullopt;
  std::string intpart = text.substr(digit_start, i - digit_start);

  mpq_class val;
  if (i < n && text[i] == '.') {
    ++i;
    size_t frac_start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == frac_start) return std::nullopt;
    std::string frac = text.substr(frac_start, i - frac_start);
    mpz_class whole(intpart + frac);
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, frac.size());
    val = mpq_class(whole) / mpq_class(p10);
  } else if (i < n && text[i] == '/') {
    ++i;
    skip_ws();
    size_t den_start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start) return std::nullopt;
    mpz_class d(text.substr(den_start, i - den_start));
    if (d == 0) return std::nullopt;
    val = mpq_class(mpz_class(intpart)) / mpq_class(d);
  } else {
    val = mpq_class(mpz_class(intpart));
  }
  skip_ws();
  if (i != n) return std::nullopt;
  if (negative) val = -val;
  val.canonicalize();
  return Rat(val);
}

Rat Rat::parse(const std::string& text) {
  auto r = try_parse(text);
  if (!r) throw std::invalid_argument("malformed rational literal: '" + text + "'");
  return *r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

size_t Rat::hash() const {
  // Cheap limb-mix; collisions only cost a compare.
  auto mix = [](size_t h, const mpz_class& z) {
    size_t x = mpz_get_ui(z.get_mpz_t());
    x ^= static_cast<size_t>(mpz_sgn(z.get_mpz_t()) < 0) << 63;
    x ^= static_cast<size_t>(mpz_sizeinbase(z.get_mpz_t(), 2)) << 32;
    return h * 1000003u ^ x;
  };
  return mix(mix(static_cast<size_t>(0x9e3779b97f4a7c15ULL), num()), den());
}

}  // namespace rbss
