#include "liegrowth/subalgebra.hpp"

#include <algorithm>
#include <optional>

#include "liegrowth/lyndon.hpp"

namespace liegrowth {

bool GeneratorSet::homogeneous() const {
  for (const auto& e : elements)
    if (!e.is_zero() && !e.poly().is_homogeneous()) return false;
  return true;
}

long GeneratorSet::max_degree() const {
  long d = 0;
  for (const auto& e : elements)
    if (!e.is_zero()) d = std::max(d, e.degree());
  return d;
}

GeneratorSet GeneratorSet::parse_lines(const std::vector<std::string>& lines, const Alphabet& alpha) {
  GeneratorSet out;
  for (const auto& raw : lines) {
    std::string line = raw.substr(0, raw.find('#'));
    std::size_t a = line.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r\n");
    out.elements.push_back(parse_expression(line.substr(a, b - a + 1), alpha));
  }
  return out;
}

long effective_degree_cap(const EngineOptions& opts) {
  if (opts.degree_cap > 0) return opts.degree_cap;
  return opts.mode == FieldMode::Exact ? 12 : 20;
}

void enforce_degree_cap(long max_degree, const EngineOptions& opts) {
  long cap = effective_degree_cap(opts);
  if (max_degree > cap) {
    std::string advice = opts.mode == FieldMode::Exact
                             ? "; use --field-mode prime or raise --degree-cap"
                             : "; raise --degree-cap if you really mean it";
    throw std::domain_error("max degree " + std::to_string(max_degree) + " exceeds the cap " +
                            std::to_string(cap) + advice);
  }
}

GeneratorSet leading_parts(const GeneratorSet& s) {
  GeneratorSet out;
  for (const auto& e : s.elements) {
    if (e.is_zero()) throw std::invalid_argument("zero element has no leading part");
    out.elements.push_back(e.leading_part());
  }
  return out;
}

namespace {

// Row space over the LS columns of one degree with two synchronized payloads:
// the homogeneous polynomial realizing the row and the certificate built from
// full (possibly nonhomogeneous) elements, kept equal to the row polynomial
// plus lower-degree terms.
struct CertSpace {
  std::size_t cols = 0;
  struct Row {
    std::size_t pivot;
    std::vector<Rat> v;
    NcPoly lp;
    NcPoly cert;
  };
  std::vector<Row> rows;

  void reduce(std::vector<Rat>& v, NcPoly* lp, NcPoly* cert) const {
    for (const auto& r : rows) {
      if (v[r.pivot] == 0) continue;
      Rat c = v[r.pivot];
      QField::axpy_sub(v.data(), c, r.v.data(), cols);
      if (lp) *lp -= r.lp * c;
      if (cert) *cert -= r.cert * c;
    }
  }

  bool insert(std::vector<Rat> v, NcPoly lp, NcPoly cert) {
    reduce(v, &lp, &cert);
    std::size_t p = 0;
    while (p < cols && v[p] == 0) ++p;
    if (p == cols) return false;
    Rat inv = Rat(1) / v[p];
    for (auto& x : v) x *= inv;
    rows.push_back({p, std::move(v), lp * inv, cert * inv});
    return true;
  }

  // Expresses the target as a combination of rows; returns the matching
  // combination of certificates, or nothing when the target is outside.
  std::optional<NcPoly> express(std::vector<Rat> v, const Alphabet* alpha) const {
    NcPoly acc(alpha);
    for (const auto& r : rows) {
      if (v[r.pivot] == 0) continue;
      Rat c = v[r.pivot];
      QField::axpy_sub(v.data(), c, r.v.data(), cols);
      acc += r.cert * c;
    }
    for (const auto& x : v)
      if (x != 0) return std::nullopt;
    return acc;
  }
};

std::vector<Rat> project_poly(const WordTable& table, const NcPoly& p, long degree) {
  std::vector<Rat> v(table.ls_count(degree), Rat(0));
  for (const auto& [w, c] : p.terms())
    if (w.degree() == degree) {
      long col = table.ls_column(degree, table.id_of(w));
      if (col >= 0) v[static_cast<std::size_t>(col)] = c;
    }
  return v;
}

// Components of the subalgebra generated by the items' leading parts, with
// certificates over the full elements, up to the given degree.
std::vector<CertSpace> cert_closure(const WordTable& table, const std::vector<LieElement>& items,
                                    long max_degree) {
  const Alphabet* alpha = &table.alphabet();
  std::vector<CertSpace> spaces(static_cast<std::size_t>(max_degree) + 1);
  for (long n = 1; n <= max_degree; ++n) spaces[static_cast<std::size_t>(n)].cols = table.ls_count(n);
  struct Item {
    NcPoly lp;
    NcPoly full;
    long degree;
  };
  std::vector<Item> gens;
  for (const auto& e : items) {
    NcPoly lp = e.poly().leading_part();
    gens.push_back({lp, e.poly(), lp.degree()});
  }
  for (long n = 1; n <= max_degree; ++n) {
    auto& space = spaces[static_cast<std::size_t>(n)];
    for (const auto& g : gens)
      if (g.degree == n) space.insert(project_poly(table, g.lp, n), g.lp, g.full);
    for (long d = 1; d < n; ++d) {
      for (const auto& g : gens) {
        if (g.degree != d) continue;
        const auto& lower = spaces[static_cast<std::size_t>(n - d)];
        for (const auto& row : lower.rows) {
          NcPoly lp = bracket(row.lp, g.lp);
          NcPoly cert = bracket(row.cert, g.full);
          auto v = project_poly(table, lp, n);
          space.insert(std::move(v), std::move(lp), std::move(cert));
        }
      }
    }
  }
  return spaces;
}

}  // namespace

GeneratorSet irreducible_reduce(const GeneratorSet& s, long max_degree) {
  std::vector<LieElement> elems;
  for (const auto& e : s.elements) {
    if (e.is_zero()) throw std::invalid_argument("zero generator");
    if (e.degree() > max_degree)
      throw std::invalid_argument("generator degree exceeds the requested truncation");
    elems.push_back(e);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      std::vector<LieElement> others;
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (j != i) others.push_back(elems[j]);
      if (others.empty()) break;
      long d = elems[i].degree();
      const auto* ga = dynamic_cast<const GradedAlphabet*>(elems[i].poly().alphabet());
      if (!ga) throw std::invalid_argument("subalgebra operations need a finite graded alphabet");
      WordTable table(*ga, d);
      auto spaces = cert_closure(table, others, d);
      NcPoly target = elems[i].poly().leading_part();
      auto witness = spaces[static_cast<std::size_t>(d)].express(project_poly(table, target, d),
                                                                 target.alphabet());
      if (witness) {
        NcPoly rest = elems[i].poly() - *witness;
        if (rest.is_zero()) {
          elems.erase(elems.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
          elems[i] = LieElement(std::move(rest));
        }
        changed = true;
        break;
      }
    }
  }
  GeneratorSet out;
  out.elements = std::move(elems);
  return out;
}

bool is_irreducible(const GeneratorSet& s) {
  if (s.elements.size() <= 1) return true;
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    std::vector<LieElement> others;
    for (std::size_t j = 0; j < s.elements.size(); ++j)
      if (j != i) others.push_back(s.elements[j]);
    long d = s.elements[i].degree();
    const auto* ga = dynamic_cast<const GradedAlphabet*>(s.elements[i].poly().alphabet());
    if (!ga) throw std::invalid_argument("subalgebra operations need a finite graded alphabet");
    WordTable table(*ga, d);
    auto spaces = cert_closure(table, others, d);
    NcPoly target = s.elements[i].poly().leading_part();
    if (spaces[static_cast<std::size_t>(d)].express(project_poly(table, target, d), target.alphabet()))
      return false;
  }
  return true;
}

namespace {

template <class F>
GrowthTable growth_core(const GradedAlphabet& alpha, const GeneratorSet& reduced, long max_degree) {
  WordTable table(alpha, max_degree);
  std::vector<DensePoly<F>> gens;
  for (const auto& e : reduced.elements) {
    NcPoly lp = e.poly().leading_part();
    if (lp.degree() <= max_degree) gens.push_back(to_dense<F>(table, lp, lp.degree()));
  }
  Components<F> comp = closure_components(table, gens, gens, max_degree);
  std::vector<Int> d;
  for (long n = 1; n <= max_degree; ++n) d.push_back(Int(comp.rank(n)));
  return GrowthTable::cumulative(1, std::move(d), Int(0));
}

}  // namespace

GrowthTable subalgebra_growth(const GradedAlphabet& alpha, const GeneratorSet& s, long max_degree,
                              const EngineOptions& opts) {
  enforce_degree_cap(max_degree, opts);
  GeneratorSet reduced = irreducible_reduce(s, max_degree);
  if (opts.mode == FieldMode::Prime) return growth_core<Fp61>(alpha, reduced, max_degree);
  return growth_core<QField>(alpha, reduced, max_degree);
}

GradedSubspace subalgebra_subspace(const GradedAlphabet& alpha, const GeneratorSet& s, long max_degree) {
  GeneratorSet reduced = irreducible_reduce(s, max_degree);
  auto table = std::make_shared<WordTable>(alpha, max_degree);
  std::vector<DensePoly<QField>> gens;
  for (const auto& e : reduced.elements) {
    NcPoly lp = e.poly().leading_part();
    if (lp.degree() <= max_degree) gens.push_back(to_dense<QField>(*table, lp, lp.degree()));
  }
  Components<QField> comp = closure_components(*table, gens, gens, max_degree);
  return GradedSubspace(table, std::move(comp), max_degree);
}

ComplementResult free_complement(const GradedAlphabet& alpha, const GeneratorSet& b0, long max_degree) {
  if (b0.elements.empty()) throw std::invalid_argument("empty generating set");
  for (const auto& e : b0.elements)
    if (e.is_zero()) throw std::invalid_argument("zero generator");
  if (!b0.homogeneous()) throw std::invalid_argument("free complement needs homogeneous generators");
  if (!is_irreducible(b0)) throw std::invalid_argument("generating set is reducible");
  long t = b0.max_degree();
  if (t > max_degree) throw std::invalid_argument("generator degree exceeds the requested truncation");

  WordTable table(alpha, max_degree);
  struct Gen {
    long degree;
    DensePoly<QField> poly;
  };
  std::vector<Gen> gens;
  for (const auto& e : b0.elements)
    gens.push_back({e.degree(), to_dense<QField>(table, e.poly(), e.degree())});

  ComplementResult result;
  std::vector<RowSpace<QField>> space;
  std::vector<std::vector<DensePoly<QField>>> basis(static_cast<std::size_t>(max_degree) + 1);
  for (long n = 0; n <= max_degree; ++n) space.emplace_back(n >= 1 ? table.ls_count(n) : 0);

  std::vector<Int> codim;
  for (long n = 1; n <= max_degree; ++n) {
    auto& sp = space[static_cast<std::size_t>(n)];
    auto offer = [&](DensePoly<QField>&& cand) {
      if (sp.full()) return false;
      if (sp.insert(project_ls(table, cand))) {
        basis[static_cast<std::size_t>(n)].push_back(std::move(cand));
        return true;
      }
      return false;
    };
    for (const auto& g : gens)
      if (g.degree == n) offer(DensePoly<QField>(g.poly));
    for (long d = 1; d < n && !sp.full(); ++d)
      for (const auto& g : gens) {
        if (g.degree != d) continue;
        for (const auto& b : basis[static_cast<std::size_t>(n - d)]) {
          if (sp.full()) break;
          offer(bracket_dense(table, b, g.poly));
        }
      }
    if (n >= t) {
      // adjoin the LS commutators at the non-pivot columns
      for (std::size_t col = 0; col < table.ls_count(n); ++col) {
        if (sp.is_pivot(col)) continue;
        Word w = table.ls_word(n, col);
        BracketTree tree = standard_bracketing(w);
        NcPoly exp = expand(tree);
        DensePoly<QField> dense = to_dense<QField>(table, exp, n);
        if (!offer(std::move(dense))) throw std::logic_error("complement candidate was dependent");
        gens.push_back({n, to_dense<QField>(table, exp, n)});
        result.added.emplace_back(n, LieElement::from_tree(tree));
      }
    }
    codim.push_back(Int(static_cast<long>(table.ls_count(n)) - static_cast<long>(sp.rank())));
  }
  result.codim = GrowthTable::cumulative(1, std::move(codim), Int(0));
  return result;
}

}  // namespace liegrowth
