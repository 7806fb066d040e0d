#pragma once

// The regular *-biordered set E(P) of PG(P): friendly pairs with their
// arrows, basic products and involution.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chain_semigroup.hpp"
#include "error.hpp"
#include "projection_algebra.hpp"
#include "star_semigroup.hpp"

namespace pgsemi {

  class Boset {
   public:
    using pair_t = std::pair<proj_t, proj_t>;
    static constexpr std::size_t NONE = static_cast<std::size_t>(-1);

    explicit Boset(ProjectionAlgebra const& P)
        : _theta(P.theta_rows()), _n(P.size()), _index(_n * _n, NONE) {
      for (proj_t p = 0; p < _n; ++p) {
        for (proj_t q = 0; q < _n; ++q) {
          if (P.friendly(p, q)) {
            _index[p * _n + q] = _elements.size();
            _elements.emplace_back(p, q);
          }
        }
      }
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }
    std::size_t projections() const noexcept {
      return _n;
    }
    pair_t const& element(std::size_t e) const {
      return _elements.at(e);
    }
    std::vector<pair_t> const& elements() const noexcept {
      return _elements;
    }
    std::size_t index(proj_t p, proj_t q) const {
      auto i = _index.at(p * _n + q);
      if (i == NONE) {
        throw Error("(" + std::to_string(p) + ", " + std::to_string(q)
                    + ") is not a friendly pair");
      }
      return i;
    }
    std::size_t diagonal(proj_t p) const {
      return index(p, p);
    }
    bool is_projection(std::size_t e) const {
      return _elements[e].first == _elements[e].second;
    }

    std::size_t star(std::size_t e) const {
      return index(_elements[e].second, _elements[e].first);
    }

    // e <- f (e = ef) iff q <= s, for e = (p,q), f = (r,s).
    bool left_arrow(std::size_t e, std::size_t f) const {
      return leq(_elements[e].second, _elements[f].second);
    }
    // e -> f (e = fe) iff p <= r.
    bool right_arrow(std::size_t e, std::size_t f) const {
      return leq(_elements[e].first, _elements[f].first);
    }

    bool basic(std::size_t e, std::size_t f) const {
      return left_arrow(e, f) || right_arrow(e, f) || left_arrow(f, e)
             || right_arrow(f, e);
    }

    // The basic product ef = (r th_q th_p, q th_r th_s); nullopt for
    // non-basic pairs.
    std::optional<std::size_t> product(std::size_t e, std::size_t f) const {
      if (!basic(e, f)) {
        return std::nullopt;
      }
      auto [p, q] = _elements[e];
      auto [r, s] = _elements[f];
      return index(act(act(r, q), p), act(act(q, r), s));
    }

    std::size_t basic_product(std::size_t e, std::size_t f) const {
      auto x = product(e, f);
      if (!x) {
        throw Error("product of a non-basic pair");
      }
      return *x;
    }

    // M(e,f) = {g : ge = g = fg}.
    std::vector<std::size_t> m_set(std::size_t e, std::size_t f) const {
      std::vector<std::size_t> out;
      for (std::size_t g = 0; g < size(); ++g) {
        if (left_arrow(g, e) && right_arrow(g, f)) {
          out.push_back(g);
        }
      }
      return out;
    }

    // Sandwich set from the biorder alone: the greatest elements of M(e,f)
    // under h <= g iff eh -> eg and hf <- gf.
    std::vector<std::size_t> abstract_sandwich(std::size_t e,
                                               std::size_t f) const {
      auto const m = m_set(e, f);
      auto below   = [&](std::size_t h, std::size_t g) {
        return right_arrow(basic_product(e, h), basic_product(e, g))
               && left_arrow(basic_product(h, f), basic_product(g, f));
      };
      std::vector<std::size_t> out;
      for (std::size_t g : m) {
        if (std::all_of(m.begin(), m.end(),
                        [&](std::size_t h) { return below(h, g); })) {
          out.push_back(g);
        }
      }
      return out;
    }

    std::string label(std::size_t e, ProjectionAlgebra const& P) const {
      auto [p, q] = _elements[e];
      return p == q ? P.label(p) : "[" + P.label(p) + "," + P.label(q) + "]";
    }

   private:
    proj_t act(proj_t q, proj_t p) const {
      return _theta[p][q];
    }
    bool leq(proj_t p, proj_t q) const {
      return act(p, q) == p;
    }

    std::vector<std::vector<proj_t>> _theta;
    std::size_t                      _n;
    std::vector<pair_t>              _elements;
    std::vector<std::size_t>         _index;
  };

  inline Boset boset_of(ProjectionAlgebra const& P) {
    return Boset(P);
  }

  // The chain [p,q] for a friendly pair.
  inline ReducedChain boset_chain(ChainSemigroup const& S, Boset const& B,
                                  std::size_t e) {
    auto [p, q] = B.element(e);
    return p == q ? S.projection(p) : S.normalize(std::vector<proj_t>{p, q});
  }

  // S(e,f) = {g : e g f = e f and f g e = g}, products in PG(P).
  inline std::vector<std::size_t> sandwich_set(ChainSemigroup const& S,
                                               Boset const&          B,
                                               std::size_t           e,
                                               std::size_t           f) {
    auto const ce = boset_chain(S, B, e), cf = boset_chain(S, B, f);
    auto const ef = S.product(ce, cf);
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < B.size(); ++g) {
      auto const cg = boset_chain(S, B, g);
      if (S.product({ce, cg, cf}) == ef && S.product({cf, cg, ce}) == cg) {
        out.push_back(g);
      }
    }
    return out;
  }

  // e(p,q) = [p th_q, q th_p], which is q p in PG(P).
  inline std::size_t e_of(ProjectionAlgebra const& P, Boset const& B,
                          proj_t p, proj_t q) {
    return B.index(P.act(p, q), P.act(q, p));
  }

  // Projection algebra read back from the boset: carrier the
  // involution-fixed elements, q theta_p = p e(p,q), where e(p,q) is the
  // unique member of the abstract sandwich set S(p,q) whose products with
  // p and q are projections.
  inline ProjectionAlgebra projection_algebra_of_boset(Boset const& B) {
    std::vector<std::size_t> proj;
    for (std::size_t e = 0; e < B.size(); ++e) {
      if (B.star(e) == e) {
        proj.push_back(e);
      }
    }
    std::vector<std::size_t> id_of(B.size(), B.size());
    for (std::size_t i = 0; i < proj.size(); ++i) {
      id_of[proj[i]] = i;
    }
    std::size_t const                k = proj.size();
    std::vector<std::vector<proj_t>> theta(k, std::vector<proj_t>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        std::size_t const p = proj[i], q = proj[j];
        std::optional<std::size_t> chosen;
        for (std::size_t g : B.abstract_sandwich(p, q)) {
          auto const pg = B.basic_product(p, g);
          auto const gq = B.basic_product(g, q);
          if (B.star(pg) == pg && B.star(gq) == gq) {
            if (chosen) {
              throw InconsistentClassification("e(p,q) is not unique");
            }
            chosen = g;
          }
        }
        if (!chosen) {
          throw InconsistentClassification("no e(p,q) in the sandwich set");
        }
        theta[i][j] = id_of[B.basic_product(p, *chosen)];
      }
    }
    return ProjectionAlgebra(std::move(theta));
  }

  // Checks that (p,q) -> pq is an isomorphism E(P) -> E(S) of *-bosets and
  // returns the element map. P must be the projection algebra of S.
  inline std::vector<elem_t> compare_with_semigroup_boset(ProjectionAlgebra const& P,
                                                          StarSemigroup const& S) {
    auto const emb = projection_algebra_of(S, {false});
    if (emb.algebra.theta_rows() != P.theta_rows()) {
      throw MismatchReport("projection algebra of S differs from P");
    }
    Boset const         B(P);
    std::vector<elem_t> phi(B.size());
    auto pair_str = [&](std::size_t e) {
      return "(" + P.label(B.element(e).first) + ","
             + P.label(B.element(e).second) + ")";
    };
    for (std::size_t e = 0; e < B.size(); ++e) {
      auto [p, q] = B.element(e);
      phi[e]      = S.mul(emb.element_of[p], emb.element_of[q]);
    }
    auto idem = idempotents(S);
    auto img  = phi;
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) {
      throw MismatchReport("the map on friendly pairs is not injective");
    }
    if (img != idem) {
      throw MismatchReport("the image is not the set of idempotents of S");
    }
    for (std::size_t e = 0; e < B.size(); ++e) {
      if (phi[B.star(e)] != S.star(phi[e])) {
        throw MismatchReport("star is not preserved at " + pair_str(e));
      }
      for (std::size_t f = 0; f < B.size(); ++f) {
        elem_t const a = phi[e], b = phi[f];
        if (B.left_arrow(e, f) != (S.mul(a, b) == a)) {
          throw MismatchReport("left arrow differs at " + pair_str(e) + ", "
                               + pair_str(f));
        }
        if (B.right_arrow(e, f) != (S.mul(b, a) == a)) {
          throw MismatchReport("right arrow differs at " + pair_str(e) + ", "
                               + pair_str(f));
        }
        if (auto ef = B.product(e, f); ef && phi[*ef] != S.mul(a, b)) {
          throw MismatchReport("basic product differs at " + pair_str(e)
                               + ", " + pair_str(f));
        }
      }
    }
    return phi;
  }

}  // namespace pgsemi
