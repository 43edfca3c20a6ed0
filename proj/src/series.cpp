#include "liegrowth/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace liegrowth {

SeriesSpec SeriesSpec::finite(std::vector<long> histogram, Rat z) {
  if (histogram.empty()) histogram.assign(1, 0);
  SeriesSpec s;
  s.head = std::move(histogram);
  s.tail = 0;
  s.z = std::move(z);
  return s;
}

SeriesSpec SeriesSpec::constant_tail(std::vector<long> head, long tail, Rat z) {
  if (head.empty()) head.assign(1, 0);
  if (tail < 0) throw std::invalid_argument("negative tail");
  SeriesSpec s;
  s.head = std::move(head);
  s.tail = tail;
  s.z = std::move(z);
  return s;
}

long SeriesSpec::k(long i) const {
  if (i < 1) throw std::invalid_argument("histogram index must be >= 1");
  if (i <= max_head_index()) return head[static_cast<std::size_t>(i)];
  return tail;
}

Rat eval_F(const SeriesSpec& spec, const Rat& zeta) {
  Rat w = spec.z - zeta;
  if (w == 0) throw std::domain_error("F has a pole at zeta = z");
  if (spec.tail > 0 && w <= 1) throw std::domain_error("series diverges: z - zeta <= 1 with an infinite tail");
  Rat sum = 0;
  Rat inv_w = Rat(1) / w;
  Rat pw = 1;
  long h = spec.max_head_index();
  for (long i = 1; i <= h; ++i) {
    pw *= inv_w;
    if (spec.head[static_cast<std::size_t>(i)] != 0)
      sum += Rat(spec.head[static_cast<std::size_t>(i)]) * pw;
  }
  if (spec.tail > 0) {
    // sum_{i >= h+1} tail / w^i = tail / (w^h (w - 1))
    sum += Rat(spec.tail) * pw / (w - 1);
  }
  return sum;
}

Conditions check_conditions(const SeriesSpec& spec) {
  Conditions c{false, false};
  long h = spec.max_head_index();
  bool branch1 = spec.tail == 0;
  for (long i = 2; i <= h && branch1; ++i)
    if (spec.head[static_cast<std::size_t>(i)] > 0) branch1 = false;
  bool branch2 = true;
  for (long i = 1; i <= h && branch2; ++i)
    if (spec.k(i) > 0 && spec.k(i + 1) == 0) branch2 = false;
  c.G = branch1 || branch2;

  bool defined_near_0 = spec.tail > 0 ? spec.z > 1 : spec.z != 0;
  if (defined_near_0) c.Wz = eval_F(spec, Rat(0)) <= 1;
  return c;
}

namespace {

// G(z) = z^d - k_1 z^(d-1) - ... - k_d; sign of G decides the bracket
// (F(0) > 1 iff G < 0 for z > 0).
Rat eval_base_poly(const std::vector<Int>& poly, const Rat& z) {
  Rat acc = 0;
  for (const Int& c : poly) acc = acc * z + Rat(c);
  return acc;
}

}  // namespace

BaseResult exponential_base(const std::vector<long>& histogram, const Rat& tolerance) {
  if (tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
  long d = 0;
  for (std::size_t i = 1; i < histogram.size(); ++i) {
    if (histogram[i] < 0) throw std::invalid_argument("negative histogram entry");
    if (histogram[i] > 0) d = static_cast<long>(i);
  }
  if (d == 0) throw std::invalid_argument("all-zero histogram has no exponential base");

  BaseResult res;
  res.poly.push_back(1);
  Int total = 0;
  for (long i = 1; i <= d; ++i) {
    long ki = i < static_cast<long>(histogram.size()) ? histogram[static_cast<std::size_t>(i)] : 0;
    res.poly.push_back(Int(-ki));
    total += ki;
  }

  Rat lo = 1, hi = std::max(Rat(1), Rat(total));
  Rat glo = eval_base_poly(res.poly, lo);
  Rat ghi = eval_base_poly(res.poly, hi);
  res.exact = false;
  if (glo == 0) {  // z0 = 1 exactly (one letter in degree d)
    hi = lo;
    res.exact = true;
  } else if (ghi == 0) {  // z0 = sum k_i exactly (degree-1 histogram)
    lo = hi;
    res.exact = true;
  } else {
    while (hi - lo > tolerance) {
      Rat mid = (lo + hi) / 2;
      Rat g = eval_base_poly(res.poly, mid);
      if (g < 0)
        lo = mid;
      else if (g > 0)
        hi = mid;
      else {
        hi = mid;
        res.exact = true;
        break;
      }
    }
  }
  if (res.exact) {
    // keep the certificate shape: any lo below the root has F(0) > 1 there
    lo = hi - tolerance;
    if (eval_base_poly(res.poly, lo) >= 0) throw std::logic_error("base certificate failed below an exact root");
  }
  // certificate: F(0) > 1 at lo, F(0) <= 1 at hi
  if (!(eval_base_poly(res.poly, lo) < 0 && eval_base_poly(res.poly, hi) >= 0))
    throw std::logic_error("base bisection lost its sign certificate");
  res.lo = lo;
  res.hi = hi;
  double mid = res.exact ? to_double(hi) : to_double((lo + hi) / 2);
  res.z0 = std::strtod(format_real(mid).c_str(), nullptr);
  return res;
}

GreedyResult greedy_base_sequence(const Rat& m0, int N) {
  if (!(m0 > 1 && m0 <= 2)) throw std::invalid_argument("greedy sequence requires m0 in (1, 2]");
  if (N < 1) throw std::invalid_argument("sequence length must be >= 1");
  GreedyResult res;
  Rat a = 1;
  Rat inv = Rat(1) / m0;
  Rat pw = 1;  // m0^-j
  res.remainders.push_back(a);
  for (int j = 0; j < N; ++j) {
    pw *= inv;  // m0^-(j+1)
    int bit = a < pw ? 0 : 1;
    if (bit) a -= pw;
    res.bits.push_back(bit);
    res.remainders.push_back(a);
  }
  return res;
}

namespace {

std::uint32_t minimal_letter(const GradedAlphabet& alpha) {
  std::uint32_t x = 0;
  for (std::uint32_t i = 1; i < alpha.size(); ++i)
    if (alpha.degree_of(i) < alpha.degree_of(x)) x = i;
  return x;  // ties keep the first listed
}

}  // namespace

GradedAlphabet lazard_transform(const GradedAlphabet& alpha, long max_degree) {
  if (alpha.size() < 2) throw std::invalid_argument("Lazard elimination needs >= 2 letters");
  std::uint32_t x = minimal_letter(alpha);
  long s = alpha.degree_of(x);
  std::string xname = alpha.name_of(x);
  bool glue = alpha.single_char_names();

  struct Entry {
    long degree;
    std::uint32_t y;
    std::string name;
  };
  std::vector<Entry> entries;
  for (std::uint32_t y = 0; y < alpha.size(); ++y) {
    if (y == x) continue;
    std::string name = alpha.name_of(y);
    for (long t = 0;; ++t) {
      long deg = alpha.degree_of(y) + t * s;
      if (deg > max_degree) break;
      std::string full = name;
      for (long i = 0; i < t; ++i) full += glue ? xname : "_" + xname;
      entries.push_back({deg, y, full});
    }
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.y < b.y;
  });
  std::vector<GradedAlphabet::Letter> letters;
  for (auto& e : entries) letters.push_back({std::move(e.name), e.degree});
  return GradedAlphabet(std::move(letters));
}

SeriesSpec lazard_series(const GradedAlphabet& alpha, const Rat& z) {
  if (alpha.size() < 2) throw std::invalid_argument("Lazard elimination needs >= 2 letters");
  std::uint32_t x = minimal_letter(alpha);
  if (alpha.degree_of(x) != 1)
    throw std::invalid_argument("constant-tail descriptor requires a degree-1 minimal letter");
  long D = alpha.max_letter_degree();
  std::vector<long> k0(static_cast<std::size_t>(D) + 1, 0);
  for (std::uint32_t y = 0; y < alpha.size(); ++y)
    if (y != x) ++k0[static_cast<std::size_t>(alpha.degree_of(y))];
  // new histogram: k'_j = sum_{i <= j} k0_i, constant from degree D on
  std::vector<long> head(static_cast<std::size_t>(D), 0);  // entries 1..D-1
  long run = 0, tail = 0;
  for (long i = 1; i <= D; ++i) {
    run += k0[static_cast<std::size_t>(i)];
    if (i < D)
      head[static_cast<std::size_t>(i)] = run;
    else
      tail = run;
  }
  return SeriesSpec::constant_tail(std::move(head), tail, z);
}

}  // namespace liegrowth
