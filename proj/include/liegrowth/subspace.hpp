#ifndef LIEGROWTH_SUBSPACE_HPP
#define LIEGROWTH_SUBSPACE_HPP

#include <memory>
#include <stdexcept>

#include "liegrowth/engine.hpp"

namespace liegrowth {

// Degree-truncated graded subspace of the free Lie algebra, held as
// per-degree row spaces over the LS-word columns together with the spanning
// polynomials. Membership tests assume Lie-element inputs (the LS projection
// is injective on those).
template <class F>
class GradedSubspaceT {
 public:
  GradedSubspaceT(std::shared_ptr<const WordTable> table, Components<F> comp, long max_degree)
      : table_(std::move(table)), comp_(std::move(comp)), max_degree_(max_degree) {}

  const WordTable& table() const { return *table_; }
  std::shared_ptr<const WordTable> table_ptr() const { return table_; }
  long max_degree() const { return max_degree_; }
  const Components<F>& components() const { return comp_; }

  long rank(long degree) const {
    check(degree);
    return comp_.rank(degree);
  }

  bool contains(const NcPoly& e) const {
    if (e.is_zero()) return true;
    for (long n = 1; n <= e.degree(); ++n) {
      NcPoly c = e.homogeneous_component(n);
      if (c.is_zero()) continue;
      check(n);
      std::vector<typename F::Elem> v(table_->ls_count(n), F::zero());
      for (const auto& [w, coeff] : c.terms()) {
        long col = table_->ls_column(n, table_->id_of(w));
        if (col >= 0) v[static_cast<std::size_t>(col)] = F::from_rat(coeff);
      }
      if (!comp_.space[static_cast<std::size_t>(n)].contains(std::move(v))) return false;
    }
    return true;
  }

  std::vector<std::vector<typename F::Elem>> reduced_rows(long degree) const {
    check(degree);
    return comp_.space[static_cast<std::size_t>(degree)].reduced_rows();
  }

 private:
  void check(long degree) const {
    if (degree < 1 || degree > max_degree_)
      throw std::out_of_range("degree " + std::to_string(degree) + " outside the computed truncation");
  }

  std::shared_ptr<const WordTable> table_;
  Components<F> comp_;
  long max_degree_;
};

using GradedSubspace = GradedSubspaceT<QField>;

}  // namespace liegrowth

#endif
