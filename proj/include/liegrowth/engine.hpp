#ifndef LIEGROWTH_ENGINE_HPP
#define LIEGROWTH_ENGINE_HPP

#include <algorithm>
#include <memory>
#include <utility>
#include <vector>

#include "liegrowth/ncpoly.hpp"
#include "liegrowth/primefield.hpp"
#include "liegrowth/wordtable.hpp"

namespace liegrowth {

// Degree-homogeneous element in the dense word frame of one degree.
template <class F>
struct DensePoly {
  long degree = 0;
  std::vector<typename F::Elem> coeff;  // indexed by WordTable word id

  bool is_zero() const {
    for (const auto& c : coeff)
      if (!F::is_zero(c)) return false;
    return true;
  }
};

// Row-echelon space with normalized pivots (first nonzero = 1). Rows are kept
// in insertion order; every row is fully reduced against the rows before it,
// which keeps reduce() sound when applied in the same order.
template <class F>
class RowSpace {
 public:
  using Elem = typename F::Elem;

  explicit RowSpace(std::size_t cols = 0) : cols_(cols), pivot_col_(cols, false) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == cols_; }
  bool is_pivot(std::size_t col) const { return pivot_col_[col]; }

  void reduce(std::vector<Elem>& v) const {
    for (const auto& [p, row] : rows_) {
      if (F::is_zero(v[p])) continue;
      Elem c = v[p];
      F::axpy_sub(v.data() + p, c, row.data() + p, cols_ - p);
    }
  }

  static bool all_zero(const std::vector<Elem>& v) {
    for (const auto& c : v)
      if (!F::is_zero(c)) return false;
    return true;
  }

  bool contains(std::vector<Elem> v) const {
    reduce(v);
    return all_zero(v);
  }

  // Reduces v and keeps it when independent. Returns true if the rank grew.
  bool insert(std::vector<Elem> v) {
    reduce(v);
    std::size_t p = 0;
    while (p < cols_ && F::is_zero(v[p])) ++p;
    if (p == cols_) return false;
    Elem inv = F::inv(v[p]);
    v[p] = F::one();
    for (std::size_t k = p + 1; k < cols_; ++k)
      if (!F::is_zero(v[k])) v[k] = F::mul(v[k], inv);
    pivot_col_[p] = true;
    rows_.emplace_back(p, std::move(v));
    return true;
  }

  // Full reduced row-echelon form, rows ordered by pivot column.
  std::vector<std::vector<Elem>> reduced_rows() const {
    std::vector<std::vector<Elem>> out;
    std::vector<std::size_t> pivots;
    for (const auto& [p, row] : rows_) {
      out.push_back(row);
      pivots.push_back(p);
    }
    // order by pivot, then clear above-pivot entries
    std::vector<std::size_t> order(out.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
    std::vector<std::vector<Elem>> sorted;
    std::vector<std::size_t> piv_sorted;
    for (auto i : order) {
      sorted.push_back(std::move(out[i]));
      piv_sorted.push_back(pivots[i]);
    }
    for (std::size_t i = sorted.size(); i-- > 0;) {
      for (std::size_t j = 0; j < i; ++j) {
        Elem c = sorted[j][piv_sorted[i]];
        if (!F::is_zero(c)) F::axpy_sub(sorted[j].data(), c, sorted[i].data(), cols_);
      }
    }
    return sorted;
  }

 private:
  std::size_t cols_;
  std::vector<bool> pivot_col_;
  std::vector<std::pair<std::size_t, std::vector<Elem>>> rows_;
};

// Per-degree row spaces (in the LS-column frame) plus the independent
// spanning polynomials that realized each rank increment.
template <class F>
struct Components {
  std::vector<RowSpace<F>> space;               // index = degree, [0] unused
  std::vector<std::vector<DensePoly<F>>> basis;  // same indexing

  long rank(long degree) const { return static_cast<long>(space[static_cast<std::size_t>(degree)].rank()); }
};

template <class F>
DensePoly<F> to_dense(const WordTable& table, const NcPoly& p, long degree) {
  DensePoly<F> out;
  out.degree = degree;
  out.coeff.assign(table.count(degree), F::zero());
  for (const auto& [w, c] : p.terms())
    if (w.degree() == degree) out.coeff[table.id_of(w)] = F::from_rat(c);
  return out;
}

// Projection onto the LS-word columns; injective on Lie elements because LS
// expansions are triangular with unit leading coefficient.
template <class F>
std::vector<typename F::Elem> project_ls(const WordTable& table, const DensePoly<F>& p) {
  std::vector<typename F::Elem> v(table.ls_count(p.degree), F::zero());
  const auto n = p.degree;
  for (std::size_t c = 0; c < v.size(); ++c) v[c] = p.coeff[table.ls_word_id(n, c)];
  return v;
}

template <class F>
DensePoly<F> bracket_dense(const WordTable& table, const DensePoly<F>& a, const DensePoly<F>& b) {
  DensePoly<F> out;
  out.degree = a.degree + b.degree;
  out.coeff.assign(table.count(out.degree), F::zero());
  std::vector<std::pair<std::uint32_t, typename F::Elem>> nza, nzb;
  for (std::uint32_t i = 0; i < a.coeff.size(); ++i)
    if (!F::is_zero(a.coeff[i])) nza.emplace_back(i, a.coeff[i]);
  for (std::uint32_t i = 0; i < b.coeff.size(); ++i)
    if (!F::is_zero(b.coeff[i])) nzb.emplace_back(i, b.coeff[i]);
  for (const auto& [ia, ca] : nza) {
    for (const auto& [ib, cb] : nzb) {
      typename F::Elem prod = F::mul(ca, cb);
      std::uint32_t uv = table.concat(a.degree, ia, b.degree, ib);
      std::uint32_t vu = table.concat(b.degree, ib, a.degree, ia);
      out.coeff[uv] = F::add(out.coeff[uv], prod);
      out.coeff[vu] = F::sub(out.coeff[vu], prod);
    }
  }
  return out;
}

// Span of everything reachable from the seeds by repeated bracketing on the
// right with the given generators, degree by degree. With seeds == gens this
// is the subalgebra generated (left-normed monomials span it); with gens a
// generating set of an ambient subalgebra containing the seeds it is the
// ideal closure of the seeds in that ambient (Jacobi pushes any bracket onto
// the generators). A degree component is closed early once its rank hits the
// full LS dimension.
template <class F>
Components<F> closure_components(const WordTable& table, const std::vector<DensePoly<F>>& seeds,
                                 const std::vector<DensePoly<F>>& gens, long max_degree) {
  Components<F> comp;
  comp.space.reserve(static_cast<std::size_t>(max_degree) + 1);
  comp.basis.resize(static_cast<std::size_t>(max_degree) + 1);
  for (long n = 0; n <= max_degree; ++n) comp.space.emplace_back(n >= 1 ? table.ls_count(n) : 0);

  for (long n = 1; n <= max_degree; ++n) {
    auto& space = comp.space[static_cast<std::size_t>(n)];
    auto& basis = comp.basis[static_cast<std::size_t>(n)];
    auto offer = [&](DensePoly<F>&& cand) {
      if (space.full()) return;
      if (space.insert(project_ls(table, cand))) basis.push_back(std::move(cand));
    };
    for (const auto& s : seeds)
      if (s.degree == n) offer(DensePoly<F>(s));
    for (long d = 1; d < n && !space.full(); ++d) {
      for (const auto& g : gens) {
        if (g.degree != d) continue;
        const auto& lower = comp.basis[static_cast<std::size_t>(n - d)];
        for (const auto& b : lower) {
          if (space.full()) break;
          offer(bracket_dense(table, b, g));
        }
      }
    }
  }
  return comp;
}

// Minimal homogeneous generating set of the span described by `ideal`, viewed
// as a subalgebra: a basis element becomes a generator exactly when it is
// independent of the subalgebra generated by the generators found so far.
template <class F>
std::vector<DensePoly<F>> minimal_generators(const WordTable& table, const Components<F>& ideal,
                                             long up_to_degree) {
  std::vector<DensePoly<F>> gens;
  Components<F> sub;
  sub.space.reserve(static_cast<std::size_t>(up_to_degree) + 1);
  sub.basis.resize(static_cast<std::size_t>(up_to_degree) + 1);
  for (long n = 0; n <= up_to_degree; ++n) sub.space.emplace_back(n >= 1 ? table.ls_count(n) : 0);

  for (long n = 1; n <= up_to_degree && n < static_cast<long>(ideal.basis.size()); ++n) {
    auto& space = sub.space[static_cast<std::size_t>(n)];
    auto& basis = sub.basis[static_cast<std::size_t>(n)];
    for (long d = 1; d < n && !space.full(); ++d) {
      for (const auto& g : gens) {
        if (g.degree != d) continue;
        for (const auto& b : sub.basis[static_cast<std::size_t>(n - d)]) {
          if (space.full()) break;
          DensePoly<F> cand = bracket_dense(table, b, g);
          if (space.insert(project_ls(table, cand))) basis.push_back(std::move(cand));
        }
      }
    }
    for (const auto& p : ideal.basis[static_cast<std::size_t>(n)]) {
      if (space.insert(project_ls(table, p))) {
        basis.push_back(p);
        gens.push_back(p);
      }
    }
  }
  return gens;
}

}  // namespace liegrowth

#endif
