#pragma once

// The friendliness graph G_P, the 2-complexes K_P and K_P', their
// components, and fundamental-group presentations read off spanning trees.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chains.hpp"
#include "error.hpp"
#include "group.hpp"
#include "projection_algebra.hpp"

namespace pgsemi {

  // A 2-cell: a closed walk (first vertex repeated at the end) together
  // with every linked pair whose boundary it is.
  struct Cell {
    std::vector<proj_t>     boundary;
    std::vector<LinkedPair> sources;
  };

  class Complex2 {
   public:
    Complex2() = default;

    Complex2(std::size_t vertices, std::string name = "")
        : _n(vertices), _adj(vertices), _name(std::move(name)) {}

    std::string const& name() const noexcept {
      return _name;
    }
    std::size_t vertices() const noexcept {
      return _n;
    }
    std::vector<std::pair<proj_t, proj_t>> const& edges() const noexcept {
      return _edges;
    }
    std::vector<Cell> const& cells() const noexcept {
      return _cells;
    }
    // Sorted neighbours.
    std::vector<proj_t> const& neighbours(proj_t v) const noexcept {
      return _adj[v];
    }
    bool has_edge(proj_t u, proj_t v) const {
      return std::binary_search(_adj[u].begin(), _adj[u].end(), v);
    }

    void add_edge(proj_t u, proj_t v) {
      if (u == v || has_edge(u, v)) {
        return;
      }
      if (u > v) {
        std::swap(u, v);
      }
      _edges.insert(std::upper_bound(_edges.begin(), _edges.end(),
                                     std::make_pair(u, v)),
                    std::make_pair(u, v));
      _adj[u].insert(std::upper_bound(_adj[u].begin(), _adj[u].end(), v), v);
      _adj[v].insert(std::upper_bound(_adj[v].begin(), _adj[v].end(), u), u);
    }

    // Adds a cell with the given closed boundary. Repeated vertices and
    // backtracks are cancelled (cyclically) first, and boundaries that
    // collapse below three steps are dropped. Cells equal up to rotation and
    // reversal are stored once.
    void add_cell(std::vector<proj_t> const& boundary, LinkedPair source) {
      auto b = reduce_vertices(boundary);
      while (b.size() >= 3 && b[1] == b[b.size() - 2]) {
        b = std::vector<proj_t>(b.begin() + 1, b.end() - 1);
      }
      b.pop_back();
      // b is now the cyclic vertex sequence
      if (b.size() < 3) {
        return;
      }
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (!has_edge(b[i], b[(i + 1) % b.size()])) {
          throw Error("cell boundary leaves the 1-skeleton");
        }
      }
      auto key = canonical_cycle(b);
      auto it  = _cell_index.find(key);
      if (it != _cell_index.end()) {
        _cells[it->second].sources.push_back(source);
        return;
      }
      _cell_index.emplace(std::move(key), _cells.size());
      b.push_back(b.front());
      _cells.push_back({std::move(b), {source}});
    }

   private:
    static std::vector<proj_t> canonical_cycle(std::vector<proj_t> const& c) {
      std::vector<proj_t> best;
      std::vector<proj_t> const rev(c.rbegin(), c.rend());
      for (auto const* u : {&c, &rev}) {
        for (std::size_t s = 0; s < u->size(); ++s) {
          std::vector<proj_t> rot(u->begin() + s, u->end());
          rot.insert(rot.end(), u->begin(), u->begin() + s);
          if (best.empty() || rot < best) {
            best = std::move(rot);
          }
        }
      }
      return best;
    }

    std::size_t                                 _n = 0;
    std::vector<std::pair<proj_t, proj_t>>      _edges;
    std::vector<std::vector<proj_t>>            _adj;
    std::vector<Cell>                           _cells;
    std::map<std::vector<proj_t>, std::size_t>  _cell_index;
    std::string                                 _name;
  };

  inline Complex2 friendliness_graph(ProjectionAlgebra const& P) {
    Complex2 G(P.size(), "G_P");
    for (proj_t p = 0; p < P.size(); ++p) {
      for (proj_t q = p + 1; q < P.size(); ++q) {
        if (P.friendly(p, q)) {
          G.add_edge(p, q);
        }
      }
    }
    return G;
  }

  inline Complex2 complex_KP(ProjectionAlgebra const& P) {
    Complex2 K(P.size(), "K_P");
    auto const G = friendliness_graph(P);
    for (auto [u, v] : G.edges()) {
      K.add_edge(u, v);
    }
    for (auto const& lp : enumerate_linked_pairs(P)) {
      proj_t const e1 = lp.e_prime(P), f1 = lp.f_prime(P);
      K.add_cell({lp.e, e1, lp.f, f1, lp.e}, lp);
    }
    return K;
  }

  inline Complex2 complex_KP_prime(ProjectionAlgebra const& P) {
    Complex2 K(P.size(), "K_P'");
    auto const G = friendliness_graph(P);
    for (auto [u, v] : G.edges()) {
      K.add_edge(u, v);
    }
    for (auto const& lp : enumerate_linked_pairs(P)) {
      auto const c = classify_linked_pair(P, lp);
      if (c.type == 2) {
        K.add_cell({lp.e, lp.f, lp.f_prime(P), lp.e}, lp);
      } else if (c.type == 3) {
        K.add_cell({lp.e, lp.e_prime(P), lp.f, lp.e}, lp);
      }
    }
    return K;
  }

  // Connected components of the 1-skeleton, each sorted, ordered by least
  // vertex.
  inline std::vector<std::vector<proj_t>> components(Complex2 const& c) {
    std::vector<std::size_t> comp(c.vertices(), c.vertices());
    std::vector<std::vector<proj_t>> out;
    for (proj_t s = 0; s < c.vertices(); ++s) {
      if (comp[s] != c.vertices()) {
        continue;
      }
      std::vector<proj_t> vs{s};
      comp[s] = out.size();
      for (std::size_t i = 0; i < vs.size(); ++i) {
        for (proj_t w : c.neighbours(vs[i])) {
          if (comp[w] == c.vertices()) {
            comp[w] = out.size();
            vs.push_back(w);
          }
        }
      }
      std::sort(vs.begin(), vs.end());
      out.push_back(std::move(vs));
    }
    for (auto const& cell : c.cells()) {
      for (proj_t v : cell.boundary) {
        if (comp[v] != comp[cell.boundary.front()]) {
          throw Error("a cell spans two components");
        }
      }
    }
    return out;
  }

  // Breadth-first spanning tree of one component, and the generator
  // assigned to each non-tree edge.
  class SpanningTree {
   public:
    SpanningTree() = default;

    SpanningTree(Complex2 const& c, std::vector<proj_t> const& component,
                 proj_t base)
        : _base(base),
          _parent(c.vertices(), NONE),
          _depth(c.vertices(), 0),
          _in(c.vertices(), false) {
      for (proj_t v : component) {
        _in[v] = true;
      }
      if (base >= c.vertices() || !_in[base]) {
        throw Error("basepoint is not in the component");
      }
      std::deque<proj_t> q{base};
      std::vector<bool>  seen(c.vertices(), false);
      seen[base] = true;
      while (!q.empty()) {
        proj_t u = q.front();
        q.pop_front();
        for (proj_t w : c.neighbours(u)) {
          if (!seen[w]) {
            seen[w]    = true;
            _parent[w] = u;
            _depth[w]  = _depth[u] + 1;
            q.push_back(w);
          }
        }
      }
      for (auto [u, v] : c.edges()) {
        if (!_in[u]) {
          continue;
        }
        if (_parent[v] == u || _parent[u] == v) {
          _tree_edges.emplace_back(u, v);
        } else {
          _gen_of.emplace(std::make_pair(u, v), _gen_edges.size());
          _gen_edges.emplace_back(u, v);
        }
      }
    }

    static constexpr proj_t NONE = static_cast<proj_t>(-1);

    proj_t base() const noexcept {
      return _base;
    }
    bool contains(proj_t v) const noexcept {
      return v < _in.size() && _in[v];
    }
    std::size_t generators() const noexcept {
      return _gen_edges.size();
    }
    std::vector<std::pair<proj_t, proj_t>> const& generator_edges() const {
      return _gen_edges;
    }
    std::vector<std::pair<proj_t, proj_t>> const& tree_edges() const {
      return _tree_edges;
    }

    // Letter of the directed edge u -> v; empty for tree edges.
    GroupWord edge_word(proj_t u, proj_t v) const {
      if (u == v) {
        return {};
      }
      bool const fwd = u < v;
      auto it = _gen_of.find(fwd ? std::make_pair(u, v) : std::make_pair(v, u));
      if (it == _gen_of.end()) {
        return {};
      }
      return {gen_letter(it->second, !fwd)};
    }

    // Product of edge letters along a walk.
    GroupWord walk_word(std::vector<proj_t> const& walk) const {
      GroupWord w;
      for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        auto x = edge_word(walk[i], walk[i + 1]);
        w.insert(w.end(), x.begin(), x.end());
      }
      return w;
    }

    // Tree path from v up to the base: (v, parent(v), ..., base).
    std::vector<proj_t> path_to_base(proj_t v) const {
      std::vector<proj_t> out{v};
      while (v != _base) {
        v = _parent[v];
        out.push_back(v);
      }
      return out;
    }
    std::vector<proj_t> path_from_base(proj_t v) const {
      auto p = path_to_base(v);
      std::reverse(p.begin(), p.end());
      return p;
    }

   private:
    proj_t                                               _base = 0;
    std::vector<proj_t>                                  _parent;
    std::vector<std::size_t>                             _depth;
    std::vector<bool>                                    _in;
    std::vector<std::pair<proj_t, proj_t>>               _tree_edges;
    std::vector<std::pair<proj_t, proj_t>>               _gen_edges;
    std::map<std::pair<proj_t, proj_t>, std::size_t>     _gen_of;
  };

  struct Pi1Data {
    SpanningTree      tree;
    GroupPresentation presentation;
  };

  // One generator per non-tree edge and one relator per cell of the
  // component (its boundary word).
  inline Pi1Data pi1_presentation(Complex2 const&            c,
                                  std::vector<proj_t> const& component,
                                  proj_t                     basepoint) {
    Pi1Data out;
    out.tree = SpanningTree(c, component, basepoint);
    auto& g  = out.presentation;
    g.generators      = out.tree.generators();
    g.basepoint       = basepoint;
    g.generator_edges = out.tree.generator_edges();
    g.tree_edges      = out.tree.tree_edges();
    for (auto const& cell : c.cells()) {
      if (!out.tree.contains(cell.boundary.front())) {
        continue;
      }
      auto w = free_reduce(out.tree.walk_word(cell.boundary));
      if (!w.empty()) {
        g.relators.push_back(std::move(w));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // DOT export
  ////////////////////////////////////////////////////////////////////////

  inline std::string to_dot(Complex2 const& c, ProjectionAlgebra const& P) {
    std::ostringstream os;
    auto               esc = [](std::string s) {
      std::string o;
      for (char ch : s) {
        if (ch == '"' || ch == '\\') {
          o += '\\';
        }
        o += ch;
      }
      return o;
    };
    os << "graph \"" << esc(c.name()) << "\" {\n";
    auto const comps = components(c);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      os << "  subgraph cluster_" << i << " {\n";
      for (proj_t v : comps[i]) {
        os << "    v" << v << " [label=\"" << esc(P.label(v)) << "\"];\n";
      }
      os << "  }\n";
    }
    for (auto [u, v] : c.edges()) {
      os << "  v" << u << " -- v" << v << ";\n";
    }
    for (std::size_t i = 0; i < c.cells().size(); ++i) {
      os << "  // cell " << i << ":";
      for (proj_t v : c.cells()[i].boundary) {
        os << " v" << v;
      }
      os << "\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace pgsemi
