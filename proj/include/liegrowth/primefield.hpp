#ifndef LIEGROWTH_PRIMEFIELD_HPP
#define LIEGROWTH_PRIMEFIELD_HPP

#include <cstdint>

#include "liegrowth/rational.hpp"

namespace liegrowth {

// Arithmetic mod the Mersenne prime 2^61 - 1.
struct Fp61 {
  using Elem = std::uint64_t;
  static constexpr Elem P = (1ull << 61) - 1;

  static Elem reduce(unsigned __int128 t) {
    Elem r = static_cast<Elem>(t & P) + static_cast<Elem>(t >> 61);
    r = (r & P) + (r >> 61);
    return r >= P ? r - P : r;
  }
  static Elem add(Elem a, Elem b) {
    Elem s = a + b;
    return s >= P ? s - P : s;
  }
  static Elem sub(Elem a, Elem b) { return a >= b ? a - b : a + P - b; }
  static Elem neg(Elem a) { return a == 0 ? 0 : P - a; }
  static Elem mul(Elem a, Elem b) { return reduce(static_cast<unsigned __int128>(a) * b); }
  static Elem pow(Elem a, Elem e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  static Elem inv(Elem a) { return pow(a, P - 2); }

  static Elem zero() { return 0; }
  static Elem one() { return 1; }
  static bool is_zero(Elem a) { return a == 0; }

  static Elem from_int(long v) {
    long m = v % static_cast<long>(P);
    if (m < 0) m += static_cast<long>(P);
    return static_cast<Elem>(m);
  }
  static Elem from_rat(const Rat& q) {
    Elem num = mpz_fdiv_ui(q.get_num_mpz_t(), P);
    Elem den = mpz_fdiv_ui(q.get_den_mpz_t(), P);
    return mul(num, inv(den));
  }

  // v[i] -= c * row[i] for i in [0, n)
  static void axpy_sub(Elem* v, Elem c, const Elem* row, std::size_t n) {
    Elem nc = neg(c);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = reduce(static_cast<unsigned __int128>(nc) * row[i] + v[i]);
  }
};

// Exact rationals presented through the same field interface.
struct QField {
  using Elem = Rat;
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem neg(const Elem& a) { return -a; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem inv(const Elem& a) { return Rat(1) / a; }
  static Elem zero() { return Rat(0); }
  static Elem one() { return Rat(1); }
  static bool is_zero(const Elem& a) { return a == 0; }
  static Elem from_int(long v) { return Rat(v); }
  static Elem from_rat(const Rat& q) { return q; }

  static void axpy_sub(Elem* v, const Elem& c, const Elem* row, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
      if (row[i] != 0) v[i] -= c * row[i];
  }
};

}  // namespace liegrowth

#endif
