#pragma once

// Shared fixtures for the unit and acceptance tests: named test algebras,
// random graphs and chains, and a few independent oracles.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <pgsemi/pgsemi.hpp>

namespace testsupport {

  using namespace pgsemi;

  struct NamedAlgebra {
    std::string       name;
    ProjectionAlgebra algebra;
  };

  inline ProjectionAlgebra diagram_algebra(DiagramFamily f, std::size_t n) {
    auto M = diagram_monoid(f, n);
    return projection_algebra_of(M.semigroup, {false}).algebra;
  }

  inline ProjectionAlgebra adjacency_algebra(AdjacencyGraph const& G) {
    return projection_algebra_of(adjacency_semigroup(G)).algebra;
  }

  // Loops are implied; each other edge is present with probability prob.
  inline AdjacencyGraph random_graph(std::size_t n, double prob,
                                     std::mt19937_64& rng) {
    std::bernoulli_distribution                      coin(prob);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (coin(rng)) {
          edges.emplace_back(u, v);
        }
      }
    }
    return AdjacencyGraph(n, edges);
  }

  // The algebras every property suite runs over. All have decisive word
  // problems.
  inline std::vector<NamedAlgebra> const& test_algebras() {
    static std::vector<NamedAlgebra> const all = [] {
      std::vector<NamedAlgebra> v;
      v.push_back({"kinyon", kinyon_algebra()});
      for (std::size_t k = 1; k <= 3; ++k) {
        v.push_back({"band:" + std::to_string(k), square_band_algebra(k)});
      }
      for (std::size_t n = 2; n <= 5; ++n) {
        v.push_back({"tl:" + std::to_string(n),
                     diagram_algebra(DiagramFamily::temperley_lieb, n)});
      }
      for (std::size_t n = 2; n <= 4; ++n) {
        v.push_back({"motzkin:" + std::to_string(n),
                     diagram_algebra(DiagramFamily::motzkin, n)});
      }
      for (std::size_t n = 2; n <= 3; ++n) {
        v.push_back({"brauer:" + std::to_string(n),
                     diagram_algebra(DiagramFamily::brauer, n)});
      }
      std::mt19937_64 rng(7);
      for (std::size_t i = 0; i < 3; ++i) {
        v.push_back({"adjacency:random" + std::to_string(i),
                     adjacency_algebra(random_graph(4 + i, 0.5, rng))});
      }
      return v;
    }();
    return all;
  }

  // A random walk in G_P, normalized.
  inline ReducedChain random_chain(ChainSemigroup const& S,
                                   std::mt19937_64&      rng,
                                   std::size_t           max_steps = 8) {
    auto const&         P = S.algebra();
    std::vector<proj_t> walk{static_cast<proj_t>(rng() % P.size())};
    std::size_t const   steps = rng() % (max_steps + 1);
    for (std::size_t i = 0; i < steps; ++i) {
      auto const& nb = S.complex().neighbours(walk.back());
      if (nb.empty()) {
        break;
      }
      walk.push_back(nb[rng() % nb.size()]);
    }
    return S.normalize(walk);
  }

  // Naive diagram product: connected components of the 3n-point graph,
  // found by depth-first search. Used as an oracle for multiply().
  inline PartitionDiagram naive_multiply(PartitionDiagram const& a,
                                         PartitionDiagram const& b) {
    std::size_t const n = a.degree();
    // points: top of a = 0..n-1, middle = n..2n-1, bottom of b = 2n..3n-1
    std::vector<std::vector<std::size_t>> adj(3 * n);
    auto link = [&](std::size_t x, std::size_t y) {
      adj[x].push_back(y);
      adj[y].push_back(x);
    };
    auto const& la = a.block_labels();
    auto const& lb = b.block_labels();
    for (std::size_t i = 0; i < 2 * n; ++i) {
      for (std::size_t j = i + 1; j < 2 * n; ++j) {
        if (la[i] == la[j]) {
          link(i, j);  // a's bottom row lands on the middle
        }
        if (lb[i] == lb[j]) {
          link(i + n, j + n);  // b's top row is the middle
        }
      }
    }
    std::vector<std::size_t> comp(3 * n, 3 * n);
    std::size_t              c = 0;
    for (std::size_t s = 0; s < 3 * n; ++s) {
      if (comp[s] != 3 * n) {
        continue;
      }
      std::vector<std::size_t> stack{s};
      comp[s] = c;
      while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto y : adj[x]) {
          if (comp[y] == 3 * n) {
            comp[y] = c;
            stack.push_back(y);
          }
        }
      }
      ++c;
    }
    std::vector<std::size_t> lab(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      lab[i]     = comp[i];
      lab[n + i] = comp[2 * n + i];
    }
    return PartitionDiagram::from_labels(n, lab);
  }

  inline std::size_t catalan(std::size_t n) {
    std::size_t c = 1;
    for (std::size_t k = 0; k < n; ++k) {
      c = c * 2 * (2 * k + 1) / (k + 2);
    }
    return c;
  }

  // Words in the free group on the directed edges of a graph: the edge
  // {u,v} with u < v is one letter, traversed backwards it is its inverse.
  class EdgeWords {
   public:
    explicit EdgeWords(Complex2 const& c) {
      for (auto [u, v] : c.edges()) {
        _id.emplace(std::make_pair(u, v), static_cast<int>(_id.size()) + 1);
      }
    }
    GroupWord walk(std::vector<proj_t> const& w) const {
      GroupWord out;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        proj_t u = w[i], v = w[i + 1];
        if (u == v) {
          continue;
        }
        int const x = _id.at({std::min(u, v), std::max(u, v)});
        out.push_back(u < v ? x : -x);
      }
      return free_reduce(out);
    }

   private:
    std::map<std::pair<proj_t, proj_t>, int> _id;
  };

  // Checks the quad relator of a type-1 linked pair against the two
  // triangles it decomposes into; returns an empty string on success.
  inline std::string check_quad_from_triangles(ProjectionAlgebra const& P,
                                               LinkedPair const&        lp) {
    proj_t const e = lp.e, f = lp.f, e1 = lp.e_prime(P), f1 = lp.f_prime(P);
    if (!is_linked(P, lp.p, e, f1) || !is_linked(P, lp.p, e1, f)) {
      return "(e,f') or (e',f) is not linked";
    }
    auto const Kp = complex_KP_prime(P);
    std::set<std::vector<proj_t>> cells;
    for (auto const& c : Kp.cells()) {
      std::vector<proj_t> b(c.boundary.begin(), c.boundary.end() - 1);
      std::sort(b.begin(), b.end());
      cells.insert(b);
    }
    std::vector<proj_t> t1{e, e1, f1}, t2{e1, f, f1};
    std::sort(t1.begin(), t1.end());
    std::sort(t2.begin(), t2.end());
    if (!cells.count(t1) || !cells.count(t2)) {
      return "a triangle is missing from K_P'";
    }
    EdgeWords const W(Kp);
    auto const quad = W.walk({e, e1, f, f1, e});
    auto const tri1 = W.walk({e, e1, f1, e});
    auto const tri2 = W.walk({e1, f, f1, e1});
    auto const conj = W.walk({e, e1});
    auto const rhs  = free_reduce(
        concat(concat(concat(conj, tri2), invert(conj)), tri1));
    if (rhs != quad) {
      return "quad word differs from the product of the triangle words";
    }
    return "";
  }

}  // namespace testsupport
