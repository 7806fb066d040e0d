#pragma once

// Finite regular *-semigroups given by multiplication and involution tables.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "projection_algebra.hpp"

namespace pgsemi {

  using elem_t = std::size_t;

  class StarSemigroup {
   public:
    StarSemigroup() = default;

    StarSemigroup(std::vector<std::vector<elem_t>> mult,
                  std::vector<elem_t>              star,
                  std::vector<std::string>         labels = {})
        : _size(mult.size()), _star(std::move(star)), _labels(std::move(labels)) {
      if (_size == 0) {
        throw MalformedTable("semigroup must be nonempty");
      }
      if (_star.size() != _size) {
        throw MalformedTable("star table has wrong length");
      }
      _mult.reserve(_size * _size);
      for (std::size_t a = 0; a < _size; ++a) {
        if (mult[a].size() != _size) {
          throw MalformedTable("mult row " + std::to_string(a)
                               + " has wrong length");
        }
        for (elem_t v : mult[a]) {
          if (v >= _size) {
            throw MalformedTable("mult entry out of range in row "
                                 + std::to_string(a));
          }
          _mult.push_back(v);
        }
        if (_star[a] >= _size) {
          throw MalformedTable("star entry out of range at "
                               + std::to_string(a));
        }
      }
      if (!_labels.empty() && _labels.size() != _size) {
        throw MalformedTable("labels must be empty or have one per element");
      }
    }

    // Flat constructor used by generators that already hold a row-major table.
    static StarSemigroup from_flat(std::size_t              size,
                                   std::vector<elem_t>      mult,
                                   std::vector<elem_t>      star,
                                   std::vector<std::string> labels = {}) {
      StarSemigroup S;
      S._size   = size;
      S._mult   = std::move(mult);
      S._star   = std::move(star);
      S._labels = std::move(labels);
      if (S._mult.size() != size * size || S._star.size() != size) {
        throw MalformedTable("flat tables have wrong dimensions");
      }
      return S;
    }

    std::size_t size() const noexcept {
      return _size;
    }
    elem_t mul(elem_t a, elem_t b) const noexcept {
      return _mult[a * _size + b];
    }
    elem_t star(elem_t a) const noexcept {
      return _star[a];
    }

    template <typename Range>
    elem_t product(Range const& word) const {
      auto it = std::begin(word);
      if (it == std::end(word)) {
        throw Error("product of an empty word");
      }
      elem_t x = *it;
      for (++it; it != std::end(word); ++it) {
        x = mul(x, *it);
      }
      return x;
    }

    bool is_idempotent(elem_t a) const noexcept {
      return mul(a, a) == a;
    }
    bool is_projection(elem_t a) const noexcept {
      return is_idempotent(a) && star(a) == a;
    }

    std::vector<std::vector<elem_t>> mult_rows() const {
      std::vector<std::vector<elem_t>> rows(_size);
      for (std::size_t a = 0; a < _size; ++a) {
        rows[a].assign(_mult.begin() + a * _size,
                       _mult.begin() + (a + 1) * _size);
      }
      return rows;
    }
    std::vector<elem_t> const& star_table() const noexcept {
      return _star;
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::string label(elem_t a) const {
      return _labels.empty() ? std::to_string(a) : _labels[a];
    }

   private:
    std::size_t              _size = 0;
    std::vector<elem_t>      _mult;
    std::vector<elem_t>      _star;
    std::vector<std::string> _labels;
  };

  inline std::vector<elem_t> idempotents(StarSemigroup const& S) {
    std::vector<elem_t> out;
    for (elem_t a = 0; a < S.size(); ++a) {
      if (S.is_idempotent(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  inline std::vector<elem_t> projections(StarSemigroup const& S) {
    std::vector<elem_t> out;
    for (elem_t a = 0; a < S.size(); ++a) {
      if (S.is_projection(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  struct StarValidationOptions {
    // The O(n^3) associativity scan can be skipped for semigroups whose
    // multiplication is associative by construction (diagram monoids).
    bool check_associativity = true;
  };

  inline ValidationReport
  validate_star_semigroup(StarSemigroup const&  S,
                          StarValidationOptions opts = {}) {
    ValidationReport  report;
    std::size_t const n = S.size();

    if (opts.check_associativity) {
      for (elem_t a = 0; a < n; ++a) {
        for (elem_t b = 0; b < n; ++b) {
          elem_t const ab = S.mul(a, b);
          for (elem_t c = 0; c < n; ++c) {
            if (S.mul(ab, c) != S.mul(a, S.mul(b, c))) {
              report.add("associativity", {a, b, c});
            }
          }
        }
      }
    }
    for (elem_t a = 0; a < n; ++a) {
      if (S.star(S.star(a)) != a) {
        report.add("involution", {a});
      }
      if (S.mul(S.mul(a, S.star(a)), a) != a) {
        report.add("regularity", {a});
      }
      for (elem_t b = 0; b < n; ++b) {
        if (S.star(S.mul(a, b)) != S.mul(S.star(b), S.star(a))) {
          report.add("anti-homomorphism", {a, b});
        }
      }
    }

    auto const       P = projections(S);
    std::set<elem_t> of_form_aa;
    for (elem_t a = 0; a < n; ++a) {
      of_form_aa.insert(S.mul(a, S.star(a)));
    }
    // RS1
    if (std::set<elem_t>(P.begin(), P.end()) != of_form_aa) {
      for (elem_t x : of_form_aa) {
        if (!S.is_projection(x)) {
          report.add("RS1", {x});
        }
      }
      for (elem_t p : P) {
        if (of_form_aa.count(p) == 0) {
          report.add("RS1", {p});
        }
      }
    }
    for (elem_t e : idempotents(S)) {
      // RS3
      if (S.mul(S.mul(e, S.star(e)), S.mul(S.star(e), e)) != e) {
        report.add("RS3", {e});
      }
    }
    for (elem_t p : P) {
      for (elem_t q : P) {
        // RS2
        if (!S.is_idempotent(S.mul(p, q))) {
          report.add("RS2", {p, q});
        }
        // RS5
        if (!S.is_projection(S.mul(S.mul(p, q), p))) {
          report.add("RS5", {p, q});
        }
      }
      // RS6
      for (elem_t a = 0; a < n; ++a) {
        if (!S.is_projection(S.mul(S.mul(a, p), S.star(a)))) {
          report.add("RS6", {a, p});
        }
      }
    }
    // RS7: products of friendly pairs determine the pair.
    std::vector<std::pair<elem_t, elem_t>> friendly;
    for (elem_t p : P) {
      for (elem_t q : P) {
        if (S.mul(S.mul(p, q), p) == p && S.mul(S.mul(q, p), q) == q) {
          friendly.emplace_back(p, q);
        }
      }
    }
    std::vector<std::pair<elem_t, elem_t>> seen(n, {n, n});
    for (auto [p, q] : friendly) {
      elem_t const pq = S.mul(p, q);
      if (seen[pq].first == n) {
        seen[pq] = {p, q};
      } else {
        report.add("RS7", {p, q, seen[pq].first, seen[pq].second});
      }
    }
    return report;
  }

  // The projection algebra of S together with the element id of each
  // projection. Projections are numbered in increasing element order.
  struct ProjectionEmbedding {
    ProjectionAlgebra   algebra;
    std::vector<elem_t> element_of;
    // element id -> projection id, or S.size() for non-projections
    std::vector<proj_t> projection_of;
  };

  inline ProjectionEmbedding
  projection_algebra_of(StarSemigroup const&  S,
                        StarValidationOptions opts = {}) {
    auto report = validate_star_semigroup(S, opts);
    if (!report.ok()) {
      throw InvalidSemigroup("not a regular *-semigroup: "
                             + report.to_string());
    }
    ProjectionEmbedding out;
    out.element_of = projections(S);
    out.projection_of.assign(S.size(), S.size());
    for (proj_t i = 0; i < out.element_of.size(); ++i) {
      out.projection_of[out.element_of[i]] = i;
    }
    std::size_t const                k = out.element_of.size();
    std::vector<std::vector<proj_t>> theta(k, std::vector<proj_t>(k));
    std::vector<std::string>         labels;
    for (proj_t p = 0; p < k; ++p) {
      elem_t const pe = out.element_of[p];
      labels.push_back(S.label(pe));
      for (proj_t q = 0; q < k; ++q) {
        elem_t const pqp = S.mul(S.mul(pe, out.element_of[q]), pe);
        theta[p][q]      = out.projection_of[pqp];
      }
    }
    out.algebra = ProjectionAlgebra(std::move(theta), std::move(labels));
    return out;
  }

  // Subsemigroup of S generated by gens (closure under right multiplication
  // by the generators), returned sorted.
  inline std::vector<elem_t>
  generated_subsemigroup(StarSemigroup const&       S,
                         std::vector<elem_t> const& gens) {
    std::vector<bool>   in(S.size(), false);
    std::vector<elem_t> out;
    for (elem_t g : gens) {
      if (!in[g]) {
        in[g] = true;
        out.push_back(g);
      }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (elem_t g : gens) {
        elem_t const x = S.mul(out[i], g);
        if (!in[x]) {
          in[x] = true;
          out.push_back(x);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Adjacency semigroups
  ////////////////////////////////////////////////////////////////////////

  // A symmetric reflexive graph on {0, ..., n-1}.
  class AdjacencyGraph {
   public:
    AdjacencyGraph() = default;

    // Loops are added and every edge is stored in both directions.
    AdjacencyGraph(std::size_t                                      vertices,
                   std::vector<std::pair<std::size_t, std::size_t>> edges)
        : _n(vertices), _adj(vertices * vertices, false) {
      for (std::size_t v = 0; v < _n; ++v) {
        _adj[v * _n + v] = true;
      }
      for (auto [u, v] : edges) {
        if (u >= _n || v >= _n) {
          throw MalformedTable("edge endpoint out of range");
        }
        _adj[u * _n + v] = true;
        _adj[v * _n + u] = true;
      }
    }

    // Strict constructor from a full adjacency matrix.
    static AdjacencyGraph
    from_matrix(std::vector<std::vector<bool>> const& matrix) {
      std::size_t const n = matrix.size();
      AdjacencyGraph    g;
      g._n = n;
      g._adj.assign(n * n, false);
      for (std::size_t u = 0; u < n; ++u) {
        if (matrix[u].size() != n) {
          throw MalformedTable("adjacency matrix is not square");
        }
        for (std::size_t v = 0; v < n; ++v) {
          g._adj[u * n + v] = matrix[u][v];
        }
      }
      for (std::size_t u = 0; u < n; ++u) {
        if (!g.adjacent(u, u)) {
          throw NotReflexive("vertex " + std::to_string(u) + " has no loop");
        }
        for (std::size_t v = 0; v < n; ++v) {
          if (g.adjacent(u, v) != g.adjacent(v, u)) {
            throw NotSymmetric("edge (" + std::to_string(u) + ", "
                               + std::to_string(v)
                               + ") has no reverse");
          }
        }
      }
      return g;
    }

    std::size_t vertices() const noexcept {
      return _n;
    }
    bool adjacent(std::size_t u, std::size_t v) const noexcept {
      return _adj[u * _n + v];
    }

    // Unordered non-loop edges {u, v} with u < v.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
      std::vector<std::pair<std::size_t, std::size_t>> out;
      for (std::size_t u = 0; u < _n; ++u) {
        for (std::size_t v = u + 1; v < _n; ++v) {
          if (adjacent(u, v)) {
            out.emplace_back(u, v);
          }
        }
      }
      return out;
    }

   private:
    std::size_t       _n = 0;
    std::vector<bool> _adj;
  };

  // Element 0 is the zero; (p, q) has id 1 + p * n + q.
  inline elem_t adjacency_element(std::size_t n, std::size_t p, std::size_t q) {
    return 1 + p * n + q;
  }

  inline StarSemigroup adjacency_semigroup(AdjacencyGraph const& G) {
    std::size_t const        n    = G.vertices();
    std::size_t const        size = n * n + 1;
    std::vector<elem_t>      mult(size * size, 0);
    std::vector<elem_t>      star(size, 0);
    std::vector<std::string> labels(size);
    labels[0] = "0";
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        elem_t const a = adjacency_element(n, p, q);
        star[a]        = adjacency_element(n, q, p);
        labels[a] = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t s = 0; s < n; ++s) {
            elem_t const b = adjacency_element(n, r, s);
            mult[a * size + b]
                = G.adjacent(q, r) ? adjacency_element(n, p, s) : 0;
          }
        }
      }
    }
    return StarSemigroup::from_flat(
        size, std::move(mult), std::move(star), std::move(labels));
  }

}  // namespace pgsemi
