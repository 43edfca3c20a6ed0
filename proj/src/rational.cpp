#include "liegrowth/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace liegrowth {

Rat parse_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  // fraction form p/q
  if (text.find('/') != std::string::npos) {
    Rat q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    return q;
  }
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') neg = text[i++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.'); ++i) {
    if (text[i] == '.') {
      if (seen_dot) throw std::invalid_argument("bad number: " + text);
      seen_dot = true;
    } else {
      digits += text[i];
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad number: " + text);
  long exp10 = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) eneg = text[i++] == '-';
    if (i >= text.size()) throw std::invalid_argument("bad exponent: " + text);
    long e = 0;
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw std::invalid_argument("bad exponent: " + text);
      e = e * 10 + (text[i] - '0');
      if (e > 100000) throw std::invalid_argument("exponent out of range: " + text);
    }
    exp10 = eneg ? -e : e;
  }
  if (i != text.size()) throw std::invalid_argument("bad number: " + text);
  Int mant(digits, 10);
  if (neg) mant = -mant;
  long net = exp10 - frac_digits;
  Rat result(mant);
  if (net > 0) {
    result *= Rat(int_pow(Int(10), static_cast<unsigned long>(net)));
  } else if (net < 0) {
    result /= Rat(int_pow(Int(10), static_cast<unsigned long>(-net)));
  }
  result.canonicalize();
  return result;
}

Rat rat_pow(const Rat& q, long e) {
  if (e == 0) return Rat(1);
  bool inv = e < 0;
  unsigned long n = static_cast<unsigned long>(inv ? -e : e);
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), n);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), n);
  if (inv) {
    if (q == 0) throw std::invalid_argument("0^negative");
    r = Rat(1) / r;
  }
  r.canonicalize();
  return r;
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string rat_to_string(const Rat& q) {
  return q.get_str();
}

double to_double(const Rat& q) { return q.get_d(); }

}  // namespace liegrowth
