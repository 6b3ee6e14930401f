#pragma once

// Buchberger's algorithm with the normal selection strategy and
// Gebauer-Moeller pair pruning, followed by full inter-reduction.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace tanvar {

struct Budget {
  std::size_t max_pairs = 200000;
  std::size_t max_monomials = 10000000;
};

template <CoefficientField F>
struct Ideal {
  F field{};
  std::size_t num_vars = 1;
  std::vector<Polynomial<F>> generators;

  Ideal() = default;
  Ideal(F k, std::size_t n, std::vector<Polynomial<F>> gens) : field(std::move(k)), num_vars(n) {
    for (auto& g : gens) {
      require(g.num_vars() == num_vars, "ideal generator has " + std::to_string(g.num_vars()) + " variables, expected " + std::to_string(num_vars));
      require(g.field() == field, "ideal generator over a different field");
      if (!g.is_zero()) generators.push_back(std::move(g));
    }
  }

  static Ideal from(std::vector<Polynomial<F>> gens) {
    require(!gens.empty(), "cannot infer ring of an empty generator list");
    F k = gens.front().field();
    std::size_t n = gens.front().num_vars();
    return Ideal(std::move(k), n, std::move(gens));
  }

  Ideal with(std::vector<Polynomial<F>> extra) const {
    auto g = generators;
    for (auto& e : extra) g.push_back(std::move(e));
    return Ideal(field, num_vars, std::move(g));
  }
};

template <CoefficientField F>
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial<F>> basis;  // reduced, monic, sorted by increasing leading monomial
  Ideal<F> source;
  std::size_t pairs_processed = 0;

  bool is_unit() const { return basis.size() == 1 && basis.front().is_constant(); }
  bool is_zero_ideal() const { return basis.empty(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : basis) out.push_back(leading_term(g).mono);
    return out;
  }

  const Term<F>& leading_term(const Polynomial<F>& p) const {
    const auto& ts = p.terms();
    if (order.kind == OrderKind::DegRevLex) return ts.front();
    std::size_t best = 0;
    for (std::size_t i = 1; i < ts.size(); ++i)
      if (order.greater(ts[i].mono, ts[best].mono)) best = i;
    return ts[best];
  }
};

namespace detail {

/// Terms sorted by decreasing order; the working representation.
template <CoefficientField F>
using Sorted = std::vector<Term<F>>;

template <CoefficientField F>
class GbEngine {
 public:
  GbEngine(const F& k, std::size_t nvars, MonomialOrder order, Budget budget)
      : k_(k), nvars_(nvars), order_(order), budget_(budget) {}

  /// h - c * m * g, skipping the leading terms of both (they cancel).
  Sorted<F> sub_multiple(const Sorted<F>& h, std::size_t hstart, const Sorted<F>& g, const Monomial& m,
                         const typename F::Element& c) const {
    Sorted<F> out;
    out.reserve(h.size() - hstart + g.size());
    std::size_t i = hstart + 1, j = 1;
    while (i < h.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(h[i++]);
        continue;
      }
      Monomial gm = g[j].mono * m;
      int cmp = i == h.size() ? -1 : order_.compare(h[i].mono, gm);
      if (cmp > 0) {
        out.push_back(h[i++]);
      } else if (cmp < 0) {
        out.push_back({gm, k_.neg(k_.mul(c, g[j].coeff))});
        ++j;
      } else {
        auto v = k_.sub(h[i].coeff, k_.mul(c, g[j].coeff));
        if (!k_.is_zero(v)) out.push_back({gm, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  /// Full reduction of h modulo the active basis elements.
  Sorted<F> reduce(Sorted<F> h, const std::vector<std::size_t>& active) {
    Sorted<F> rem;
    std::size_t start = 0;
    while (start < h.size()) {
      const auto& lt = h[start];
      const Sorted<F>* div = nullptr;
      for (auto idx : active) {
        if (lead(idx).divides(lt.mono)) {
          div = &polys_[idx];
          break;
        }
      }
      if (!div) {
        rem.push_back(lt);
        ++start;
        continue;
      }
      Monomial m = lt.mono / div->front().mono;
      auto c = k_.div(lt.coeff, div->front().coeff);
      h = sub_multiple(h, start, *div, m, c);
      start = 0;
      if (h.size() + rem.size() + term_count_ > budget_.max_monomials)
        fail(ErrorKind::Budget, "Groebner budget exceeded: more than " + std::to_string(budget_.max_monomials) + " monomials");
    }
    return rem;
  }

  Sorted<F> spoly(std::size_t a, std::size_t b) const {
    const auto& pa = polys_[a];
    const auto& pb = polys_[b];
    Monomial l = Monomial::lcm(pa.front().mono, pb.front().mono);
    // (l/la) pa / lc(a) - (l/lb) pb / lc(b)
    Sorted<F> left;
    Monomial ma = l / pa.front().mono;
    auto ia = k_.inv(pa.front().coeff);
    left.reserve(pa.size());
    for (const auto& t : pa) left.push_back({t.mono * ma, k_.mul(t.coeff, ia)});
    return sub_multiple(left, 0, pb, l / pb.front().mono, k_.inv(pb.front().coeff));
  }

  const Monomial& lead(std::size_t i) const { return polys_[i].front().mono; }

  GroebnerBasis<F> run(const Ideal<F>& ideal) {
    GroebnerBasis<F> out{order_, {}, ideal, 0};
    std::vector<std::size_t> active;
    for (const auto& g : ideal.generators) {
      Sorted<F> s = g.sorted_terms(order_);
      s = reduce(std::move(s), active);
      if (s.empty()) continue;
      if (add(std::move(s), active)) return unit(ideal);
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& x, const Pair& y) {
        int c = order_.compare(x.lcm, y.lcm);
        if (c != 0) return c < 0;
        return std::pair(x.i, x.j) < std::pair(y.i, y.j);
      });
      Pair p = *it;
      pairs_.erase(it);
      if (++processed > budget_.max_pairs)
        fail(ErrorKind::Budget, "Groebner budget exceeded: more than " + std::to_string(budget_.max_pairs) + " pair reductions");
      Sorted<F> h = reduce(spoly(p.i, p.j), active);
      if (h.empty()) continue;
      if (add(std::move(h), active)) return unit(ideal);
    }
    out.pairs_processed = processed;
    out.basis = interreduce(active);
    return out;
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  GroebnerBasis<F> unit(const Ideal<F>& ideal) const {
    return {order_, {Polynomial<F>::constant(k_, nvars_, k_.one())}, ideal, 0};
  }

  /// Adds a nonzero reduced element; returns true when it is a constant.
  bool add(Sorted<F> h, std::vector<std::size_t>& active) {
    if (h.front().mono.is_one()) return true;
    const auto inv = k_.inv(h.front().coeff);
    for (auto& t : h) t.coeff = k_.mul(t.coeff, inv);
    term_count_ += h.size();
    polys_.push_back(std::move(h));
    const std::size_t hi = polys_.size() - 1;
    const Monomial& lh = lead(hi);

    // Gebauer-Moeller update. Criterion M drops new pairs whose lcm is a
    // proper multiple of another new lcm; among equal lcms one survives,
    // none if any of them has coprime leading monomials (criterion F and
    // the product criterion).
    std::vector<Pair> candidates;
    for (auto g : active) candidates.push_back({g, hi, Monomial::lcm(lead(g), lh)});
    std::vector<bool> alive(candidates.size(), true);
    for (std::size_t a = 0; a < candidates.size(); ++a)
      for (std::size_t b = 0; b < candidates.size(); ++b)
        if (a != b && candidates[b].lcm.divides(candidates[a].lcm) && !(candidates[b].lcm == candidates[a].lcm)) {
          alive[a] = false;
          break;
        }
    std::vector<Pair> kept;
    std::vector<bool> seen(candidates.size(), false);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (!alive[a] || seen[a]) continue;
      bool any_coprime = false;
      for (std::size_t b = a; b < candidates.size(); ++b) {
        if (!alive[b] || !(candidates[b].lcm == candidates[a].lcm)) continue;
        seen[b] = true;
        any_coprime = any_coprime || Monomial::coprime(lead(candidates[b].i), lh);
      }
      if (!any_coprime) kept.push_back(candidates[a]);
    }
    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(Monomial::lcm(lead(p.i), lh) == p.lcm) && !(Monomial::lcm(lead(p.j), lh) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (const auto& c : kept) next.push_back(c);
    pairs_ = std::move(next);

    std::erase_if(active, [&](std::size_t g) { return lh.divides(lead(g)); });
    active.push_back(hi);
    return false;
  }

  std::vector<Polynomial<F>> interreduce(std::vector<std::size_t> active) {
    std::sort(active.begin(), active.end(), [&](std::size_t a, std::size_t b) { return order_.compare(lead(a), lead(b)) < 0; });
    std::vector<Polynomial<F>> out;
    for (auto idx : active) {
      std::vector<std::size_t> others;
      for (auto o : active)
        if (o != idx) others.push_back(o);
      // leading term is irreducible in a minimal basis; reduce the tail only
      Sorted<F> tail(polys_[idx].begin() + 1, polys_[idx].end());
      Sorted<F> red = reduce(std::move(tail), others);
      std::vector<Term<F>> terms;
      terms.push_back(polys_[idx].front());
      for (auto& t : red) terms.push_back(std::move(t));
      out.push_back(Polynomial<F>::from_terms(k_, nvars_, std::move(terms)));
    }
    return out;
  }

  const F& k_;
  std::size_t nvars_;
  MonomialOrder order_;
  Budget budget_;
  std::vector<Sorted<F>> polys_;
  std::vector<Pair> pairs_;
  std::size_t term_count_ = 0;
};

}  // namespace detail

template <CoefficientField F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal, MonomialOrder order, const Budget& budget = {}) {
  return detail::GbEngine<F>(ideal.field, ideal.num_vars, order, budget).run(ideal);
}

namespace detail {

template <CoefficientField F>
Polynomial<F> normal_form_with(const Polynomial<F>& p, const std::vector<Polynomial<F>>& basis,
                               const MonomialOrder& order) {
  const F& k = p.field();
  std::vector<Sorted<F>> gs;
  for (const auto& g : basis) gs.push_back(g.sorted_terms(order));
  Sorted<F> h = p.sorted_terms(order);
  std::vector<Term<F>> rem;
  std::size_t start = 0;
  GbEngine<F> eng(k, p.num_vars(), order, Budget{});
  while (start < h.size()) {
    const auto& lt = h[start];
    const Sorted<F>* div = nullptr;
    for (const auto& g : gs)
      if (g.front().mono.divides(lt.mono)) {
        div = &g;
        break;
      }
    if (!div) {
      rem.push_back(lt);
      ++start;
      continue;
    }
    Monomial m = lt.mono / div->front().mono;
    auto c = k.div(lt.coeff, div->front().coeff);
    h = eng.sub_multiple(h, start, *div, m, c);
    start = 0;
  }
  return Polynomial<F>::from_terms(k, p.num_vars(), std::move(rem));
}

}  // namespace detail

template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& p, const GroebnerBasis<F>& gb) {
  require(p.num_vars() == gb.source.num_vars, "normal_form: arity mismatch");
  require(p.field() == gb.source.field, "normal_form: field mismatch");
  return detail::normal_form_with(p, gb.basis, gb.order);
}

template <CoefficientField F>
bool ideal_membership(const Polynomial<F>& p, const Ideal<F>& ideal, const Budget& budget = {}) {
  require(p.num_vars() == ideal.num_vars && p.field() == ideal.field, "ideal_membership: ring mismatch");
  if (p.is_zero()) return true;
  if (ideal.generators.empty()) return false;
  return normal_form(p, buchberger(ideal, MonomialOrder::degrevlex(), budget)).is_zero();
}

/// Buchberger criterion check: every S-polynomial of basis pairs reduces to zero.
template <CoefficientField F>
bool satisfies_buchberger_criterion(const GroebnerBasis<F>& gb) {
  const auto& B = gb.basis;
  const F& k = gb.source.field;
  const std::size_t n = gb.source.num_vars;
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i + 1; j < B.size(); ++j) {
      const auto& ti = gb.leading_term(B[i]);
      const auto& tj = gb.leading_term(B[j]);
      Monomial l = Monomial::lcm(ti.mono, tj.mono);
      auto s = B[i].mul_term(l / ti.mono, k.inv(ti.coeff)) - B[j].mul_term(l / tj.mono, k.inv(tj.coeff));
      if (!normal_form(s, gb).is_zero()) return false;
      (void)n;
    }
  return true;
}

/// Reducedness: monic, no leading monomial divides any other term of the basis.
template <CoefficientField F>
bool is_reduced(const GroebnerBasis<F>& gb) {
  const F& k = gb.source.field;
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    const auto& lt = gb.leading_term(gb.basis[i]);
    if (!k.is_one(lt.coeff)) return false;
    for (std::size_t j = 0; j < gb.basis.size(); ++j) {
      if (i == j) continue;
      const auto& lj = gb.leading_term(gb.basis[j]).mono;
      for (const auto& t : gb.basis[i].terms())
        if (lj.divides(t.mono)) return false;
    }
  }
  return true;
}

/// Generators of I ∩ K[x_{k+1}, ..., x_n], re-indexed into n - k variables.
template <CoefficientField F>
Ideal<F> elimination_ideal(const Ideal<F>& ideal, std::size_t eliminate_first_k, const Budget& budget = {}) {
  require(eliminate_first_k > 0 && eliminate_first_k < ideal.num_vars,
          "elimination: need 0 < k < num_vars (k = " + std::to_string(eliminate_first_k) + ")");
  const std::size_t rest = ideal.num_vars - eliminate_first_k;
  if (ideal.generators.empty()) return Ideal<F>(ideal.field, rest, {});
  auto gb = buchberger(ideal, MonomialOrder::block(eliminate_first_k), budget);
  std::vector<std::size_t> map(ideal.num_vars, 0);
  for (std::size_t i = eliminate_first_k; i < ideal.num_vars; ++i) map[i] = i - eliminate_first_k;
  std::vector<Polynomial<F>> kept;
  for (const auto& g : gb.basis) {
    bool free = true;
    for (std::size_t v = 0; v < eliminate_first_k && free; ++v) free = g.degree_in(v) <= 0;
    if (free) kept.push_back(g.embed(rest, map));
  }
  return Ideal<F>(ideal.field, rest, std::move(kept));
}

}  // namespace tanvar
