#pragma once

// Partition diagrams and the diagram monoids P_n, B_n, PB_n, TL_n, M_n.
//
// A diagram of degree n is a set partition of 2n points: points 0..n-1 are
// the top row 1..n and points n..2n-1 are the bottom row 1'..n'. The
// canonical encoding labels each point with its block number, blocks being
// numbered in order of their least point (a restricted growth string), so
// equal partitions have identical encodings.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "star_semigroup.hpp"

namespace pgsemi {

  class PartitionDiagram {
   public:
    PartitionDiagram() = default;

    std::size_t degree() const noexcept {
      return _n;
    }

    std::vector<std::uint8_t> const& block_labels() const noexcept {
      return _lab;
    }

    std::size_t number_of_blocks() const noexcept {
      std::size_t m = 0;
      for (auto l : _lab) {
        m = std::max<std::size_t>(m, l + 1);
      }
      return m;
    }

    static PartitionDiagram identity(std::size_t n) {
      PartitionDiagram d;
      d._n = n;
      d._lab.resize(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        d._lab[i]     = static_cast<std::uint8_t>(i);
        d._lab[n + i] = static_cast<std::uint8_t>(i);
      }
      return d;
    }

    // From any labelling of the 2n points (equal label = same block).
    static PartitionDiagram from_labels(std::size_t                     n,
                                        std::vector<std::size_t> const& lab) {
      if (lab.size() != 2 * n) {
        throw MalformedTable("diagram labelling must have 2n entries");
      }
      PartitionDiagram d;
      d._n = n;
      d._lab.resize(2 * n);
      std::unordered_map<std::size_t, std::uint8_t> rename;
      for (std::size_t i = 0; i < 2 * n; ++i) {
        auto [it, fresh] = rename.try_emplace(
            lab[i], static_cast<std::uint8_t>(rename.size()));
        d._lab[i] = it->second;
      }
      return d;
    }

    // Blocks over points 0..2n-1.
    static PartitionDiagram
    from_blocks(std::size_t n, std::vector<std::vector<std::size_t>> const& blocks) {
      std::vector<std::size_t> lab(2 * n, 2 * n);
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) {
          throw MalformedTable("empty block in diagram");
        }
        for (auto x : blocks[b]) {
          if (x >= 2 * n || lab[x] != 2 * n) {
            throw MalformedTable("diagram blocks are not a partition of 2n "
                                 "points");
          }
          lab[x] = b;
        }
      }
      for (auto l : lab) {
        if (l == 2 * n) {
          throw MalformedTable("diagram blocks do not cover all points");
        }
      }
      return from_labels(n, lab);
    }

    // Blocks of signed labels: i for the top point i, -i for i' (1-based).
    static PartitionDiagram
    from_signed_blocks(std::size_t n, std::vector<std::vector<int>> const& blocks) {
      std::vector<std::vector<std::size_t>> pts;
      for (auto const& blk : blocks) {
        std::vector<std::size_t> b;
        for (int x : blk) {
          if (x == 0 || static_cast<std::size_t>(std::abs(x)) > n) {
            throw MalformedTable("signed point label out of range");
          }
          b.push_back(x > 0 ? static_cast<std::size_t>(x - 1)
                            : n + static_cast<std::size_t>(-x - 1));
        }
        pts.push_back(std::move(b));
      }
      return from_blocks(n, pts);
    }

    // Blocks sorted by least point, each block sorted.
    std::vector<std::vector<std::size_t>> blocks() const {
      std::vector<std::vector<std::size_t>> out(number_of_blocks());
      for (std::size_t i = 0; i < _lab.size(); ++i) {
        out[_lab[i]].push_back(i);
      }
      return out;
    }

    std::vector<std::vector<int>> signed_blocks() const {
      std::vector<std::vector<int>> out;
      for (auto const& b : blocks()) {
        std::vector<int> sb;
        for (auto x : b) {
          sb.push_back(x < _n ? static_cast<int>(x + 1)
                              : -static_cast<int>(x - _n + 1));
        }
        out.push_back(std::move(sb));
      }
      return out;
    }

    std::string to_string() const {
      std::string s;
      for (auto const& b : blocks()) {
        s += "{";
        for (std::size_t i = 0; i < b.size(); ++i) {
          if (i > 0) {
            s += ",";
          }
          s += b[i] < _n ? std::to_string(b[i] + 1)
                         : std::to_string(b[i] - _n + 1) + "'";
        }
        s += "}";
      }
      return s;
    }

    bool operator==(PartitionDiagram const& that) const noexcept {
      return _n == that._n && _lab == that._lab;
    }
    bool operator!=(PartitionDiagram const& that) const noexcept {
      return !(*this == that);
    }
    bool operator<(PartitionDiagram const& that) const noexcept {
      return _n != that._n ? _n < that._n : _lab < that._lab;
    }

    std::size_t hash() const noexcept {
      std::size_t h = _n;
      for (auto l : _lab) {
        h = h * 31 + l;
      }
      return h;
    }

   private:
    friend PartitionDiagram multiply(PartitionDiagram const&,
                                     PartitionDiagram const&);
    friend PartitionDiagram star(PartitionDiagram const&);

    std::size_t               _n = 0;
    std::vector<std::uint8_t> _lab;
  };

  struct PartitionDiagramHash {
    std::size_t operator()(PartitionDiagram const& d) const noexcept {
      return d.hash();
    }
  };

  // Stack a on top of b, identify a's bottom row with b's top row, and keep
  // the blocks induced on the outer rows.
  inline PartitionDiagram multiply(PartitionDiagram const& a,
                                   PartitionDiagram const& b) {
    if (a._n != b._n) {
      throw DegreeMismatch("cannot multiply diagrams of degree "
                           + std::to_string(a._n) + " and "
                           + std::to_string(b._n));
    }
    std::size_t const n = a._n;
    // Union-find over 3n points: a's top 0..n-1, middle n..2n-1, b's bottom
    // 2n..3n-1.
    std::array<std::uint8_t, 64> parent{};
    for (std::size_t i = 0; i < 3 * n; ++i) {
      parent[i] = static_cast<std::uint8_t>(i);
    }
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    auto unite = [&](std::size_t x, std::size_t y) {
      x = find(x);
      y = find(y);
      if (x != y) {
        parent[std::max(x, y)] = static_cast<std::uint8_t>(std::min(x, y));
      }
    };
    std::array<std::size_t, 32> first;
    first.fill(SIZE_MAX);
    for (std::size_t i = 0; i < 2 * n; ++i) {
      auto l = a._lab[i];
      if (first[l] == SIZE_MAX) {
        first[l] = i;
      } else {
        unite(first[l], i);
      }
    }
    first.fill(SIZE_MAX);
    for (std::size_t i = 0; i < 2 * n; ++i) {
      auto const l = b._lab[i];
      auto const x = n + i;  // b's point i lives at n + i
      if (first[l] == SIZE_MAX) {
        first[l] = x;
      } else {
        unite(first[l], x);
      }
    }
    PartitionDiagram out;
    out._n = n;
    out._lab.resize(2 * n);
    std::array<std::uint8_t, 64> rename;
    rename.fill(0xff);
    std::uint8_t next = 0;
    for (std::size_t i = 0; i < 2 * n; ++i) {
      std::size_t const r = find(i < n ? i : i + n);
      if (rename[r] == 0xff) {
        rename[r] = next++;
      }
      out._lab[i] = rename[r];
    }
    return out;
  }

  inline PartitionDiagram star(PartitionDiagram const& a) {
    std::size_t const        n = a._n;
    std::vector<std::size_t> lab(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      lab[i]     = a._lab[n + i];
      lab[n + i] = a._lab[i];
    }
    return PartitionDiagram::from_labels(n, lab);
  }

  inline std::size_t max_block_size(PartitionDiagram const& a) {
    std::vector<std::size_t> count(a.number_of_blocks(), 0);
    for (auto l : a.block_labels()) {
      ++count[l];
    }
    return *std::max_element(count.begin(), count.end());
  }

  inline std::size_t min_block_size(PartitionDiagram const& a) {
    std::vector<std::size_t> count(a.number_of_blocks(), 0);
    for (auto l : a.block_labels()) {
      ++count[l];
    }
    return *std::min_element(count.begin(), count.end());
  }

  // No two blocks interleave along the boundary 1, ..., n, n', ..., 1'.
  inline bool is_planar(PartitionDiagram const& a) {
    std::size_t const         n = a.degree();
    std::vector<std::uint8_t> around(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      around[i]             = a.block_labels()[i];
      around[2 * n - 1 - i] = a.block_labels()[n + i];
    }
    std::size_t const m = around.size();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (around[j] == around[i]) {
          continue;
        }
        for (std::size_t k = j + 1; k < m; ++k) {
          if (around[k] != around[i]) {
            continue;
          }
          for (std::size_t l = k + 1; l < m; ++l) {
            if (around[l] == around[j]) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  // The Temperley-Lieb generator tau_i, 1 <= i < n.
  inline PartitionDiagram tl_generator(std::size_t n, std::size_t i) {
    if (i == 0 || i >= n) {
      throw MalformedTable("tau_i needs 1 <= i < n");
    }
    std::vector<std::size_t> lab(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      lab[j]     = j;
      lab[n + j] = j;
    }
    // top i, i+1 joined; bottom i', (i+1)' joined (0-based i-1, i)
    lab[i]         = i - 1;
    lab[n + i - 1] = n + i - 1;
    lab[n + i]     = n + i - 1;
    return PartitionDiagram::from_labels(n, lab);
  }

  ////////////////////////////////////////////////////////////////////////
  // Monoids
  ////////////////////////////////////////////////////////////////////////

  // A diagram monoid exported as a StarSemigroup, with the element list.
  struct DiagramMonoid {
    StarSemigroup                 semigroup;
    std::vector<PartitionDiagram> elements;
    std::unordered_map<PartitionDiagram, elem_t, PartitionDiagramHash> index;

    elem_t element(PartitionDiagram const& d) const {
      auto it = index.find(d);
      if (it == index.end()) {
        throw Error("diagram " + d.to_string() + " is not in the monoid");
      }
      return it->second;
    }
  };

  namespace detail {
    inline DiagramMonoid
    tabulate_diagrams(std::vector<PartitionDiagram> elements) {
      DiagramMonoid M;
      M.elements = std::move(elements);
      for (elem_t i = 0; i < M.elements.size(); ++i) {
        M.index.emplace(M.elements[i], i);
      }
      std::size_t const        N = M.elements.size();
      std::vector<elem_t>      mult(N * N);
      std::vector<elem_t>      st(N);
      std::vector<std::string> labels(N);
      for (elem_t a = 0; a < N; ++a) {
        labels[a] = M.elements[a].to_string();
        auto it   = M.index.find(star(M.elements[a]));
        if (it == M.index.end()) {
          throw InvalidSemigroup("diagram set is not closed under the "
                                 "involution");
        }
        st[a] = it->second;
        for (elem_t b = 0; b < N; ++b) {
          auto jt = M.index.find(multiply(M.elements[a], M.elements[b]));
          if (jt == M.index.end()) {
            throw InvalidSemigroup("diagram set is not closed under "
                                   "multiplication");
          }
          mult[a * N + b] = jt->second;
        }
      }
      M.semigroup = StarSemigroup::from_flat(
          N, std::move(mult), std::move(st), std::move(labels));
      return M;
    }

    // Restricted growth strings on 2n points whose blocks have at most
    // max_block points; f is called with each complete labelling.
    template <typename F>
    void for_each_partition(std::size_t n, std::size_t max_block, F&& f) {
      std::size_t const        m = 2 * n;
      std::vector<std::size_t> lab(m, 0), count(m + 1, 0);
      std::function<void(std::size_t, std::size_t)> rec
          = [&](std::size_t i, std::size_t blocks) {
              if (i == m) {
                f(lab);
                return;
              }
              for (std::size_t b = 0; b <= blocks && b < m; ++b) {
                if (count[b] >= max_block) {
                  continue;
                }
                lab[i] = b;
                ++count[b];
                rec(i + 1, b == blocks ? blocks + 1 : blocks);
                --count[b];
              }
            };
      rec(0, 0);
    }
  }  // namespace detail

  // Closure of gens and the identity under multiplication. Throws
  // CapExceeded if more than cap elements are found.
  inline DiagramMonoid
  generate_monoid(std::vector<PartitionDiagram> const& gens,
                  std::size_t                          degree,
                  std::size_t                          cap) {
    if (cap == 0) {
      throw CapExceeded("cap must be positive");
    }
    for (auto const& g : gens) {
      if (g.degree() != degree) {
        throw DegreeMismatch("generator has degree "
                             + std::to_string(g.degree()) + ", expected "
                             + std::to_string(degree));
      }
    }
    std::vector<PartitionDiagram> elements{PartitionDiagram::identity(degree)};
    std::unordered_map<PartitionDiagram, elem_t, PartitionDiagramHash> seen;
    seen.emplace(elements[0], 0);
    auto add = [&](PartitionDiagram const& d) {
      if (seen.emplace(d, elements.size()).second) {
        elements.push_back(d);
        if (elements.size() > cap) {
          throw CapExceeded("monoid closure exceeds " + std::to_string(cap)
                            + " elements");
        }
      }
    };
    for (auto const& g : gens) {
      add(g);
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& g : gens) {
        add(multiply(elements[i], g));
      }
    }
    return detail::tabulate_diagrams(std::move(elements));
  }

  enum class DiagramFamily {
    partition,
    brauer,
    partial_brauer,
    temperley_lieb,
    motzkin
  };

  inline std::string family_name(DiagramFamily f) {
    switch (f) {
      case DiagramFamily::partition:
        return "partition";
      case DiagramFamily::brauer:
        return "brauer";
      case DiagramFamily::partial_brauer:
        return "partial_brauer";
      case DiagramFamily::temperley_lieb:
        return "tl";
      case DiagramFamily::motzkin:
        return "motzkin";
    }
    return "?";
  }

  // Largest degree built by default; beyond it the multiplication table
  // is too large to hold.
  inline std::size_t max_feasible_degree(DiagramFamily f) {
    switch (f) {
      case DiagramFamily::partition:
      case DiagramFamily::motzkin:
      case DiagramFamily::partial_brauer:
        return 4;
      case DiagramFamily::brauer:
        return 5;
      case DiagramFamily::temperley_lieb:
        return 6;
    }
    return 0;
  }

  inline bool in_family(PartitionDiagram const& d, DiagramFamily f) {
    switch (f) {
      case DiagramFamily::partition:
        return true;
      case DiagramFamily::brauer:
        return min_block_size(d) == 2 && max_block_size(d) == 2;
      case DiagramFamily::partial_brauer:
        return max_block_size(d) <= 2;
      case DiagramFamily::temperley_lieb:
        return min_block_size(d) == 2 && max_block_size(d) == 2
               && is_planar(d);
      case DiagramFamily::motzkin:
        return max_block_size(d) <= 2 && is_planar(d);
    }
    return false;
  }

  // All diagrams of the family, in restricted-growth-string order.
  inline std::vector<PartitionDiagram> enumerate_family(std::size_t   n,
                                                        DiagramFamily f) {
    std::size_t const max_block = f == DiagramFamily::partition ? 2 * n : 2;
    std::vector<PartitionDiagram> out;
    detail::for_each_partition(
        n, max_block, [&](std::vector<std::size_t> const& lab) {
          auto d = PartitionDiagram::from_labels(n, lab);
          if (in_family(d, f)) {
            out.push_back(std::move(d));
          }
        });
    return out;
  }

  inline DiagramMonoid diagram_monoid(DiagramFamily f,
                                      std::size_t   n,
                                      std::size_t   max_degree = 0) {
    if (max_degree == 0) {
      max_degree = max_feasible_degree(f);
    }
    if (n == 0 || n > max_degree) {
      throw InfeasibleDegree(family_name(f) + " monoid of degree "
                             + std::to_string(n)
                             + " is outside the supported range 1.."
                             + std::to_string(max_degree));
    }
    auto M = detail::tabulate_diagrams(enumerate_family(n, f));
    if (f == DiagramFamily::temperley_lieb) {
      std::vector<PartitionDiagram> gens;
      for (std::size_t i = 1; i < n; ++i) {
        gens.push_back(tl_generator(n, i));
      }
      auto const G = generate_monoid(gens, n, M.elements.size());
      if (G.elements.size() != M.elements.size()) {
        throw InconsistentClassification(
            "Temperley-Lieb generators and planar filter disagree");
      }
      for (auto const& d : G.elements) {
        if (M.index.count(d) == 0) {
          throw InconsistentClassification(
              "Temperley-Lieb generators produce a non-filtered diagram");
        }
      }
    }
    return M;
  }

  inline DiagramMonoid tl_monoid(std::size_t n) {
    return diagram_monoid(DiagramFamily::temperley_lieb, n);
  }
  inline DiagramMonoid motzkin_monoid(std::size_t n) {
    return diagram_monoid(DiagramFamily::motzkin, n);
  }
  inline DiagramMonoid brauer_monoid(std::size_t n) {
    return diagram_monoid(DiagramFamily::brauer, n);
  }
  inline DiagramMonoid partial_brauer_monoid(std::size_t n) {
    return diagram_monoid(DiagramFamily::partial_brauer, n);
  }
  inline DiagramMonoid partition_monoid(std::size_t n) {
    return diagram_monoid(DiagramFamily::partition, n);
  }

}  // namespace pgsemi
