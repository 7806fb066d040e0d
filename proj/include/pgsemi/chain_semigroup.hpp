#pragma once

// The free projection-generated regular *-semigroup PG(P).
//
// An element (reduced chain) is stored as its component, its endpoints and
// a word in the fundamental group of that component of K_P', based at the
// least vertex. A path from d to c corresponds to the loop
// tree(base->d) . path . tree(c->base), whose word is the product of the
// letters of the non-tree edges the path crosses.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "chains.hpp"
#include "complex.hpp"
#include "error.hpp"
#include "group.hpp"
#include "projection_algebra.hpp"
#include "star_semigroup.hpp"

namespace pgsemi {

  struct ReducedChain {
    std::size_t component = 0;
    proj_t      dom       = 0;
    proj_t      cod       = 0;
    GroupWord   word;

    bool operator==(ReducedChain const& o) const noexcept {
      return component == o.component && dom == o.dom && cod == o.cod
             && word == o.word;
    }
    bool operator!=(ReducedChain const& o) const noexcept {
      return !(*this == o);
    }
    bool operator<(ReducedChain const& o) const noexcept {
      return std::tie(component, dom, cod, word)
             < std::tie(o.component, o.dom, o.cod, o.word);
    }
  };

  struct ReducedChainHash {
    std::size_t operator()(ReducedChain const& c) const noexcept {
      std::size_t h = c.component * 1000003u + c.dom * 10007u + c.cod;
      for (int x : c.word) {
        h = h * 31 + static_cast<std::size_t>(x + 1000);
      }
      return h;
    }
  };

  enum class SizeKind { finite, infinite, unknown };

  struct SizeResult {
    SizeKind    kind  = SizeKind::unknown;
    std::size_t value = 0;  // when finite
    bool        cross_checked = false;
    std::string evidence;

    std::string to_string() const {
      switch (kind) {
        case SizeKind::finite:
          return std::to_string(value);
        case SizeKind::infinite:
          return "Infinite";
        case SizeKind::unknown:
          return "Unknown";
      }
      return "?";
    }
  };

  struct ChainSemigroupOptions {
    SimplifyOptions simplify;
    // closure cross-check of the size formula is skipped above this size
    std::size_t cross_check_cap = 200000;
  };

  class ChainSemigroup {
   public:
    struct Component {
      std::vector<proj_t> vertices;
      proj_t              base = 0;
      SpanningTree        tree;
      GroupPresentation   raw;
      SimplifiedGroup     group;
      WordSolver          solver;
    };

    explicit ChainSemigroup(ProjectionAlgebra P, ChainSemigroupOptions opts = {})
        : _P(std::move(P)), _opts(opts), _K(complex_KP_prime(_P)) {
      _comp_of.assign(_P.size(), 0);
      for (auto& vs : components(_K)) {
        Component c;
        c.vertices = vs;
        c.base     = vs.front();
        auto pd    = pi1_presentation(_K, vs, c.base);
        c.tree     = std::move(pd.tree);
        c.raw      = std::move(pd.presentation);
        c.group    = tietze_simplify(c.raw, _opts.simplify);
        c.solver   = WordSolver(c.group);
        for (proj_t v : vs) {
          _comp_of[v] = _components.size();
        }
        _components.push_back(std::move(c));
      }
    }

    // Non-copyable: paths refer to the algebra stored here.
    ChainSemigroup(ChainSemigroup const&)            = delete;
    ChainSemigroup& operator=(ChainSemigroup const&) = delete;

    ProjectionAlgebra const& algebra() const noexcept {
      return _P;
    }
    Complex2 const& complex() const noexcept {
      return _K;
    }
    std::vector<Component> const& component_data() const noexcept {
      return _components;
    }
    std::size_t component_of(proj_t p) const {
      return _comp_of.at(p);
    }
    bool decisive() const noexcept {
      for (auto const& c : _components) {
        if (!c.solver.decisive()) {
          return false;
        }
      }
      return true;
    }

    Path path(std::vector<proj_t> v) const {
      return Path(_P, std::move(v));
    }

    ReducedChain normalize(Path const& p) const {
      auto const r = reduce_path(p);
      auto const k = _comp_of[r.dom()];
      auto const& c = _components[k];
      auto raw = c.tree.walk_word(r.vertices());
      return make_chain(k, r.dom(), r.cod(),
                        detail::substitute(raw, c.group.substitution));
    }

    ReducedChain normalize(std::vector<proj_t> const& v) const {
      return normalize(path(v));
    }

    ReducedChain projection(proj_t p) const {
      check_projection(_P, p);
      return {_comp_of[p], p, p, {}};
    }

    // A representative path, reduced.
    Path expand(ReducedChain const& x) const {
      auto const&         c = _components.at(x.component);
      std::vector<proj_t> v;
      auto append = [&v](std::vector<proj_t> const& walk) {
        for (proj_t u : walk) {
          if (v.empty() || v.back() != u) {
            v.push_back(u);
          }
        }
      };
      append(c.tree.path_to_base(x.dom));
      for (int l : x.word) {
        auto const orig = c.group.survivors.at(letter_gen(l));
        auto [a, b]     = c.tree.generator_edges().at(orig);
        if (l < 0) {
          std::swap(a, b);
        }
        append(c.tree.path_from_base(a));
        append(c.tree.path_to_base(b));
      }
      append(c.tree.path_from_base(x.cod));
      return Path::trusted(_P, reduce_vertices(v));
    }

    ReducedChain product(ReducedChain const& x, ReducedChain const& y) const {
      proj_t const p = x.cod, q = y.dom;
      if (p == q) {
        // composition in the groupoid
        return make_chain(x.component, x.dom, y.cod,
                          concat(x.word, y.word));
      }
      proj_t const p1 = _P.act(q, p);
      proj_t const q1 = _P.act(p, q);
      auto const   a  = restrict_right(expand(x), p1);
      auto const   b  = restrict_left(expand(y), q1);
      return normalize(a.concat(b));
    }

    ReducedChain product(std::vector<ReducedChain> const& xs) const {
      if (xs.empty()) {
        throw Error("product of no chains");
      }
      ReducedChain acc = xs.front();
      for (std::size_t i = 1; i < xs.size(); ++i) {
        acc = product(acc, xs[i]);
      }
      return acc;
    }

    ReducedChain star(ReducedChain const& x) const {
      return make_chain(x.component, x.cod, x.dom, invert(x.word));
    }

    bool is_idempotent(ReducedChain const& x) const {
      return product(x, x) == x;
    }

    // q Theta_x: the codomain of the left restriction of x at q theta_dom.
    proj_t theta_of(ReducedChain const& x, proj_t q) const {
      return restrict_left(expand(x), _P.act(q, x.dom)).cod();
    }

    SizeResult size() const {
      SizeResult  r;
      std::size_t total      = 0;
      bool        all_finite = true;
      for (auto const& c : _components) {
        auto const& g = c.group;
        if (g.infinite()) {
          r.kind     = SizeKind::infinite;
          r.evidence = "component at " + _P.label(c.base) + " has group "
                       + g.classification.to_string() + " with abelianization "
                       + g.abelian.to_string();
          return r;
        }
        if (g.classification.kind == GroupKind::unknown) {
          all_finite = false;
        } else {
          total += c.vertices.size() * c.vertices.size()
                   * g.classification.order;
        }
      }
      if (!all_finite) {
        r.kind     = SizeKind::unknown;
        r.evidence = "some component group could not be classified";
        return r;
      }
      r.kind  = SizeKind::finite;
      r.value = total;
      if (total <= _opts.cross_check_cap) {
        auto const n = enumerate(total).size();
        if (n != total) {
          throw InconsistentClassification(
              "size formula gives " + std::to_string(total)
              + " but closure enumeration finds " + std::to_string(n));
        }
        r.cross_checked = true;
      }
      r.evidence = "sum over components of |V|^2 times the group order";
      return r;
    }

    // Closure of the projections under right multiplication by
    // projections (enough, since PG(P) is generated by P), sorted.
    std::vector<ReducedChain> enumerate(std::size_t cap) const {
      if (cap < _P.size()) {
        throw CapExceeded("cap is smaller than the number of projections");
      }
      std::vector<ReducedChain> out;
      std::unordered_set<ReducedChain, ReducedChainHash> seen;
      for (proj_t p = 0; p < _P.size(); ++p) {
        out.push_back(projection(p));
        seen.insert(out.back());
      }
      for (std::size_t i = 0; i < out.size(); ++i) {
        for (proj_t p = 0; p < _P.size(); ++p) {
          auto y = product(out[i], projection(p));
          if (seen.insert(y).second) {
            out.push_back(std::move(y));
            if (out.size() > cap) {
              throw CapExceeded("PG(P) has more than " + std::to_string(cap)
                                + " elements");
            }
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    // Simplified presentation of the fundamental group of p's component,
    // based at p.
    SimplifiedGroup maximal_subgroup(proj_t p) const {
      check_projection(_P, p);
      auto const& c  = _components[_comp_of[p]];
      auto        pd = pi1_presentation(_K, c.vertices, p);
      return tietze_simplify(pd.presentation, _opts.simplify);
    }

    std::string to_string(ReducedChain const& x) const {
      std::string s = "[" + _P.label(x.dom) + " -> " + _P.label(x.cod);
      if (!x.word.empty()) {
        s += " : " + word_to_string(x.word);
      }
      return s + "]";
    }

   private:
    ReducedChain make_chain(std::size_t k, proj_t d, proj_t c,
                            GroupWord w) const {
      auto n = _components[k].solver.normalize(w);
      if (!n) {
        throw UndecidedEquality("word problem undecided in the component of "
                                + _P.label(d));
      }
      return {k, d, c, std::move(*n)};
    }

    ProjectionAlgebra           _P;
    ChainSemigroupOptions       _opts;
    Complex2                    _K;
    std::vector<Component>      _components;
    std::vector<std::size_t>    _comp_of;
  };

  // A finite PG(P) as a table, with the projections first: element p is
  // the projection p, the rest follow in chain order.
  struct ChainTable {
    std::vector<ReducedChain> elements;
    StarSemigroup             semigroup;
    std::unordered_map<ReducedChain, elem_t, ReducedChainHash> index;
  };

  inline ChainTable cayley_table(ChainSemigroup const& S, std::size_t cap) {
    ChainTable T;
    auto const all = S.enumerate(cap);
    for (proj_t p = 0; p < S.algebra().size(); ++p) {
      T.elements.push_back(S.projection(p));
    }
    for (auto const& x : all) {
      if (x.dom != x.cod || !x.word.empty()) {
        T.elements.push_back(x);
      }
    }
    std::size_t const N = T.elements.size();
    for (elem_t i = 0; i < N; ++i) {
      T.index.emplace(T.elements[i], i);
    }
    std::vector<elem_t>      mult(N * N), st(N);
    std::vector<std::string> labels(N);
    for (elem_t i = 0; i < N; ++i) {
      labels[i] = S.to_string(T.elements[i]);
      st[i]     = T.index.at(S.star(T.elements[i]));
      for (elem_t j = 0; j < N; ++j) {
        mult[i * N + j]
            = T.index.at(S.product(T.elements[i], T.elements[j]));
      }
    }
    T.semigroup = StarSemigroup::from_flat(N, std::move(mult), std::move(st),
                                           std::move(labels));
    return T;
  }

  // The *-homomorphism PG(P) -> S extending a projection algebra morphism
  // P -> P(S), given as element ids of projections of S.
  class ChainMorphism {
   public:
    ChainMorphism(ChainSemigroup const&      PG,
                  StarSemigroup const&       S,
                  std::vector<elem_t> const& phi)
        : _PG(&PG), _S(&S), _phi(phi) {
      auto const& P = PG.algebra();
      if (phi.size() != P.size()) {
        throw NotAMorphism("map must have one image per projection");
      }
      auto emb = projection_algebra_of(S, {false});
      std::vector<proj_t> as_proj(P.size());
      for (proj_t p = 0; p < P.size(); ++p) {
        if (phi[p] >= S.size() || !S.is_projection(phi[p])) {
          throw NotAMorphism("image of " + P.label(p)
                             + " is not a projection");
        }
        as_proj[p] = emb.projection_of[phi[p]];
      }
      if (!is_morphism(P, emb.algebra, as_proj)) {
        throw NotAMorphism("map does not preserve the theta operations");
      }
    }

    elem_t operator()(Path const& p) const {
      elem_t x = _phi[p[0]];
      for (std::size_t i = 1; i < p.size(); ++i) {
        x = _S->mul(x, _phi[p[i]]);
      }
      return x;
    }

    elem_t operator()(ReducedChain const& c) const {
      return (*this)(_PG->expand(c));
    }

   private:
    ChainSemigroup const* _PG;
    StarSemigroup const*  _S;
    std::vector<elem_t>   _phi;
  };

  inline ChainMorphism extend_morphism(ChainSemigroup const&      PG,
                                       StarSemigroup const&       S,
                                       std::vector<elem_t> const& phi) {
    return ChainMorphism(PG, S, phi);
  }

}  // namespace pgsemi
