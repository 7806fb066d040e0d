#pragma once

// Finitely presented groups: words, Tietze simplification, coset
// enumeration, abelianization and word solvers.
//
// A letter is a nonzero int: +(g+1) is generator g and -(g+1) its inverse.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace pgsemi {

  using GroupWord = std::vector<int>;

  inline int gen_letter(std::size_t g, bool inverse = false) {
    int const x = static_cast<int>(g) + 1;
    return inverse ? -x : x;
  }
  inline std::size_t letter_gen(int x) {
    return static_cast<std::size_t>(std::abs(x)) - 1;
  }

  inline GroupWord free_reduce(GroupWord const& w) {
    GroupWord out;
    out.reserve(w.size());
    for (int x : w) {
      if (!out.empty() && out.back() == -x) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return out;
  }

  inline GroupWord invert(GroupWord const& w) {
    GroupWord out(w.rbegin(), w.rend());
    for (int& x : out) {
      x = -x;
    }
    return out;
  }

  inline GroupWord concat(GroupWord a, GroupWord const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  // Free and cyclic reduction.
  inline GroupWord cyclic_reduce(GroupWord const& w) {
    GroupWord   r = free_reduce(w);
    std::size_t i = 0, j = r.size();
    while (j - i >= 2 && r[i] == -r[j - 1]) {
      ++i;
      --j;
    }
    return GroupWord(r.begin() + i, r.begin() + j);
  }

  // Least cyclic rotation of w or of its inverse; equal for relators that
  // generate the same normal closure by rotation and inversion.
  inline GroupWord canonical_relator(GroupWord const& w) {
    GroupWord best;
    bool      have = false;
    for (auto const& u : {w, invert(w)}) {
      for (std::size_t s = 0; s < u.size(); ++s) {
        GroupWord rot(u.begin() + s, u.end());
        rot.insert(rot.end(), u.begin(), u.begin() + s);
        if (!have || rot < best) {
          best = std::move(rot);
          have = true;
        }
      }
    }
    return best;
  }

  inline std::string word_to_string(GroupWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        s += " ";
      }
      s += "g" + std::to_string(letter_gen(w[i]));
      if (w[i] < 0) {
        s += "^-1";
      }
    }
    return s;
  }

  struct GroupPresentation {
    std::size_t            generators = 0;
    std::vector<GroupWord> relators;

    // Traceability for presentations read off a complex.
    std::size_t                                      basepoint = 0;
    std::vector<std::pair<std::size_t, std::size_t>> generator_edges;
    std::vector<std::pair<std::size_t, std::size_t>> tree_edges;

    void check() const {
      for (auto const& r : relators) {
        for (int x : r) {
          if (x == 0 || letter_gen(x) >= generators) {
            throw MalformedTable("relator letter out of range");
          }
        }
      }
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Abelianization
  ////////////////////////////////////////////////////////////////////////

  struct Abelianization {
    std::size_t               free_rank = 0;
    std::vector<std::int64_t> torsion;  // invariant factors > 1

    std::string to_string() const {
      std::string s;
      for (std::size_t i = 0; i < free_rank; ++i) {
        s += (s.empty() ? "" : " x ") + std::string("Z");
      }
      for (auto d : torsion) {
        s += (s.empty() ? "" : " x ") + ("Z/" + std::to_string(d));
      }
      return s.empty() ? "1" : s;
    }
    bool operator==(Abelianization const& o) const {
      return free_rank == o.free_rank && torsion == o.torsion;
    }
  };

  // Diagonal of the Smith normal form of an integer matrix.
  inline std::vector<std::int64_t>
  smith_diagonal(std::vector<std::vector<std::int64_t>> A) {
    std::size_t const m = A.size();
    std::size_t const n = m == 0 ? 0 : A[0].size();
    std::vector<std::int64_t> diag;
    std::size_t               t = 0;
    while (t < m && t < n) {
      // pivot: nonzero entry of least absolute value
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (A[i][j] != 0
              && (pi == m || std::llabs(A[i][j]) < std::llabs(A[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == m) {
        break;
      }
      std::swap(A[t], A[pi]);
      for (auto& row : A) {
        std::swap(row[t], row[pj]);
      }
      bool clean = false;
      while (!clean) {
        clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          std::int64_t const q = A[i][t] / A[t][t];
          if (q != 0) {
            for (std::size_t j = t; j < n; ++j) {
              A[i][j] -= q * A[t][j];
            }
          }
          if (A[i][t] != 0) {
            std::swap(A[t], A[i]);
            clean = false;
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          std::int64_t const q = A[t][j] / A[t][t];
          if (q != 0) {
            for (std::size_t i = t; i < m; ++i) {
              A[i][j] -= q * A[i][t];
            }
          }
          if (A[t][j] != 0) {
            for (auto& row : A) {
              std::swap(row[t], row[j]);
            }
            clean = false;
          }
        }
        if (clean) {
          // the pivot must divide the rest of the submatrix
          for (std::size_t i = t + 1; i < m && clean; ++i) {
            for (std::size_t j = t + 1; j < n; ++j) {
              if (A[i][j] % A[t][t] != 0) {
                for (std::size_t k = t; k < n; ++k) {
                  A[t][k] += A[i][k];
                }
                clean = false;
                break;
              }
            }
          }
        }
      }
      diag.push_back(std::llabs(A[t][t]));
      ++t;
    }
    return diag;
  }

  inline Abelianization abelianization(GroupPresentation const& g) {
    std::vector<std::vector<std::int64_t>> A;
    for (auto const& r : g.relators) {
      std::vector<std::int64_t> row(g.generators, 0);
      for (int x : r) {
        row[letter_gen(x)] += x > 0 ? 1 : -1;
      }
      A.push_back(std::move(row));
    }
    Abelianization out;
    auto const     d       = smith_diagonal(std::move(A));
    std::size_t    nonzero = 0;
    for (auto v : d) {
      if (v != 0) {
        ++nonzero;
        if (v > 1) {
          out.torsion.push_back(v);
        }
      }
    }
    out.free_rank = g.generators - nonzero;
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Coset enumeration over the trivial subgroup
  ////////////////////////////////////////////////////////////////////////

  // A complete coset table: table[c][2g] is c*g, table[c][2g+1] is c*g^-1.
  struct CosetTable {
    std::size_t                           generators = 0;
    std::vector<std::vector<std::size_t>> table;

    std::size_t size() const noexcept {
      return table.size();
    }
    static std::size_t column(int x) {
      return 2 * letter_gen(x) + (x < 0 ? 1 : 0);
    }
    std::size_t act(std::size_t c, GroupWord const& w) const {
      for (int x : w) {
        c = table[c][column(x)];
      }
      return c;
    }
  };

  // HLT enumeration with coincidence processing. Returns nullopt when more
  // than `budget` cosets would be defined.
  inline std::optional<CosetTable>
  todd_coxeter(GroupPresentation const& g, std::size_t budget = 50000) {
    std::size_t const ncols = 2 * g.generators;
    constexpr auto    UNDEF = static_cast<std::size_t>(-1);
    std::vector<std::vector<std::size_t>> T;
    std::vector<std::size_t>              parent;
    std::deque<std::size_t>               queue;
    std::size_t                           defined = 0;

    auto inv_col = [](std::size_t c) { return c ^ 1U; };
    auto rep     = [&](std::size_t c) {
      std::size_t r = c;
      while (parent[r] != r) {
        r = parent[r];
      }
      while (parent[c] != r) {
        std::size_t n = parent[c];
        parent[c]     = r;
        c             = n;
      }
      return r;
    };
    auto alive  = [&](std::size_t c) { return parent[c] == c; };
    auto define = [&](std::size_t c, std::size_t x) -> bool {
      if (++defined > budget) {
        return false;
      }
      std::size_t d = T.size();
      T.emplace_back(ncols, UNDEF);
      parent.push_back(d);
      T[c][x]          = d;
      T[d][inv_col(x)] = c;
      return true;
    };
    auto merge = [&](std::size_t a, std::size_t b) {
      a = rep(a);
      b = rep(b);
      if (a != b) {
        std::size_t lo = std::min(a, b), hi = std::max(a, b);
        parent[hi] = lo;
        queue.push_back(hi);
      }
    };
    auto coincidence = [&](std::size_t a, std::size_t b) {
      merge(a, b);
      while (!queue.empty()) {
        std::size_t e = queue.front();
        queue.pop_front();
        for (std::size_t x = 0; x < ncols; ++x) {
          std::size_t f = T[e][x];
          if (f == UNDEF) {
            continue;
          }
          if (T[f][inv_col(x)] == e) {
            T[f][inv_col(x)] = UNDEF;
          }
          std::size_t e1 = rep(e), f1 = rep(f);
          if (T[e1][x] != UNDEF) {
            merge(f1, T[e1][x]);
          } else if (T[f1][inv_col(x)] != UNDEF) {
            merge(e1, T[f1][inv_col(x)]);
          } else {
            T[e1][x]          = f1;
            T[f1][inv_col(x)] = e1;
          }
        }
      }
    };
    // Trace r from c forwards and backwards, defining cosets as needed.
    auto scan_and_fill = [&](std::size_t c, GroupWord const& r) -> bool {
      std::size_t f = c, b = c;
      std::size_t i = 0, j = r.size();
      while (true) {
        while (i < j && T[f][CosetTable::column(r[i])] != UNDEF) {
          f = T[f][CosetTable::column(r[i])];
          ++i;
        }
        if (i == j) {
          if (f != b) {
            coincidence(f, b);
          }
          return true;
        }
        while (j > i && T[b][inv_col(CosetTable::column(r[j - 1]))] != UNDEF) {
          b = T[b][inv_col(CosetTable::column(r[j - 1]))];
          --j;
        }
        if (j == i) {
          coincidence(f, b);
          return true;
        }
        if (j == i + 1) {
          std::size_t x = CosetTable::column(r[i]);
          T[f][x]       = b;
          T[b][inv_col(x)] = f;
          return true;
        }
        if (!define(f, CosetTable::column(r[i]))) {
          return false;
        }
      }
    };

    T.emplace_back(ncols, UNDEF);
    parent.push_back(0);
    defined = 1;
    for (std::size_t c = 0; c < T.size(); ++c) {
      for (auto const& r : g.relators) {
        if (!alive(c)) {
          break;
        }
        if (!scan_and_fill(c, r)) {
          return std::nullopt;
        }
      }
      for (std::size_t x = 0; x < ncols && alive(c); ++x) {
        if (T[c][x] == UNDEF && !define(c, x)) {
          return std::nullopt;
        }
      }
    }
    CosetTable out;
    out.generators = g.generators;
    std::vector<std::size_t> index(T.size(), UNDEF);
    for (std::size_t c = 0; c < T.size(); ++c) {
      if (alive(c)) {
        index[c] = out.table.size();
        out.table.emplace_back();
      }
    }
    for (std::size_t c = 0; c < T.size(); ++c) {
      if (!alive(c)) {
        continue;
      }
      auto& row = out.table[index[c]];
      row.resize(ncols);
      for (std::size_t x = 0; x < ncols; ++x) {
        row[x] = index[rep(T[c][x])];
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tietze simplification and classification
  ////////////////////////////////////////////////////////////////////////

  enum class GroupKind { trivial, free, finite, unknown };

  inline std::string kind_name(GroupKind k) {
    switch (k) {
      case GroupKind::trivial:
        return "trivial";
      case GroupKind::free:
        return "free";
      case GroupKind::finite:
        return "finite";
      case GroupKind::unknown:
        return "unknown";
    }
    return "?";
  }

  struct GroupClassification {
    GroupKind   kind  = GroupKind::unknown;
    std::size_t rank  = 0;  // free rank, for kind == free
    std::size_t order = 0;  // group order, for trivial and finite

    std::string to_string() const {
      switch (kind) {
        case GroupKind::trivial:
          return "trivial";
        case GroupKind::free:
          return "free(rank " + std::to_string(rank) + ")";
        case GroupKind::finite:
          return "finite(order " + std::to_string(order) + ")";
        case GroupKind::unknown:
          return "unknown";
      }
      return "?";
    }
  };

  struct SimplifiedGroup {
    GroupPresentation presentation;
    // original generator g -> word over the surviving generators
    std::vector<GroupWord>    substitution;
    // surviving generator -> original generator
    std::vector<std::size_t>  survivors;
    GroupClassification       classification;
    Abelianization            abelian;
    std::optional<CosetTable> coset_table;  // for finite groups

    bool infinite() const noexcept {
      return (classification.kind == GroupKind::free
              && classification.rank > 0)
             || abelian.free_rank > 0;
    }
    bool decisive() const noexcept {
      return classification.kind != GroupKind::unknown;
    }
  };

  struct SimplifyOptions {
    std::size_t max_rounds       = 10000;
    std::size_t max_total_length = 1000000;
    std::size_t coset_budget     = 50000;
  };

  namespace detail {
    inline GroupWord substitute(GroupWord const&              w,
                                std::vector<GroupWord> const& sub) {
      GroupWord out;
      for (int x : w) {
        auto const& s = sub[letter_gen(x)];
        if (x > 0) {
          out.insert(out.end(), s.begin(), s.end());
        } else {
          auto const inv = invert(s);
          out.insert(out.end(), inv.begin(), inv.end());
        }
      }
      return free_reduce(out);
    }

    inline void tidy_relators(std::vector<GroupWord>& rels) {
      std::set<GroupWord>    seen;
      std::vector<GroupWord> out;
      for (auto const& r : rels) {
        auto c = cyclic_reduce(r);
        if (c.empty()) {
          continue;
        }
        if (seen.insert(canonical_relator(c)).second) {
          out.push_back(std::move(c));
        }
      }
      rels = std::move(out);
    }
  }  // namespace detail

  inline SimplifiedGroup tietze_simplify(GroupPresentation const& g,
                                         SimplifyOptions          opts = {}) {
    g.check();
    std::size_t const      n = g.generators;
    std::vector<GroupWord> sub(n);
    for (std::size_t i = 0; i < n; ++i) {
      sub[i] = {gen_letter(i)};
    }
    std::vector<bool>      alive(n, true);
    std::vector<GroupWord> rels = g.relators;

    for (std::size_t round = 0; round < opts.max_rounds; ++round) {
      detail::tidy_relators(rels);
      std::size_t total = 0;
      for (auto const& r : rels) {
        total += r.size();
      }
      if (total > opts.max_total_length) {
        break;
      }
      // shortest relator containing some generator exactly once
      std::size_t best_r = rels.size(), best_pos = 0;
      for (std::size_t ri = 0; ri < rels.size(); ++ri) {
        if (best_r != rels.size() && rels[ri].size() >= rels[best_r].size()) {
          continue;
        }
        std::map<std::size_t, std::size_t> count;
        for (int x : rels[ri]) {
          ++count[letter_gen(x)];
        }
        for (std::size_t pos = 0; pos < rels[ri].size(); ++pos) {
          if (count[letter_gen(rels[ri][pos])] == 1) {
            best_r   = ri;
            best_pos = pos;
            break;
          }
        }
      }
      if (best_r == rels.size()) {
        break;
      }
      GroupWord const& r = rels[best_r];
      // rotate so the lone occurrence comes first: r ~ x v
      GroupWord v(r.begin() + best_pos + 1, r.end());
      v.insert(v.end(), r.begin(), r.begin() + best_pos);
      int const         x = r[best_pos];
      std::size_t const k = letter_gen(x);
      // x v = 1, so g_k = v^-1 if x = g_k, and g_k = v if x = g_k^-1
      GroupWord const value = x > 0 ? invert(v) : v;
      std::vector<GroupWord> elim(n);
      for (std::size_t i = 0; i < n; ++i) {
        elim[i] = {gen_letter(i)};
      }
      elim[k] = value;
      rels.erase(rels.begin() + best_r);
      for (auto& rr : rels) {
        rr = detail::substitute(rr, elim);
      }
      for (auto& s : sub) {
        s = detail::substitute(s, elim);
      }
      alive[k] = false;
    }
    detail::tidy_relators(rels);

    SimplifiedGroup out;
    std::vector<std::size_t> renumber(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (alive[i]) {
        renumber[i] = out.survivors.size();
        out.survivors.push_back(i);
      }
    }
    auto rename = [&](GroupWord const& w) {
      GroupWord o;
      for (int x : w) {
        o.push_back(gen_letter(renumber[letter_gen(x)], x < 0));
      }
      return o;
    };
    out.presentation.generators = out.survivors.size();
    out.presentation.basepoint  = g.basepoint;
    out.presentation.tree_edges = g.tree_edges;
    for (auto s : out.survivors) {
      if (s < g.generator_edges.size()) {
        out.presentation.generator_edges.push_back(g.generator_edges[s]);
      }
    }
    for (auto const& r : rels) {
      out.presentation.relators.push_back(rename(r));
    }
    for (auto const& s : sub) {
      out.substitution.push_back(rename(s));
    }
    out.abelian = abelianization(out.presentation);

    auto& c = out.classification;
    if (out.presentation.generators == 0) {
      c.kind  = GroupKind::trivial;
      c.order = 1;
    } else if (out.presentation.relators.empty()) {
      c.kind = GroupKind::free;
      c.rank = out.presentation.generators;
    } else if (out.abelian.free_rank > 0) {
      // infinite, and not free on the surviving generators
      c.kind = GroupKind::unknown;
    } else if (auto t = todd_coxeter(out.presentation, opts.coset_budget)) {
      c.order = t->size();
      c.kind  = c.order == 1 ? GroupKind::trivial : GroupKind::finite;
      out.coset_table = std::move(t);
    } else {
      c.kind = GroupKind::unknown;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word solvers
  ////////////////////////////////////////////////////////////////////////

  // Canonical forms for words over the generators of a simplified group.
  // normalize returns nullopt when equality cannot be decided.
  class WordSolver {
   public:
    WordSolver() = default;

    explicit WordSolver(SimplifiedGroup const& g)
        : _kind(g.classification.kind), _gens(g.presentation.generators) {
      if (_kind == GroupKind::finite) {
        _table = *g.coset_table;
        // shortlex-least word reaching each coset, by breadth-first search
        _canon.assign(_table.size(), {});
        std::vector<bool>       seen(_table.size(), false);
        std::deque<std::size_t> q{0};
        seen[0] = true;
        while (!q.empty()) {
          std::size_t c = q.front();
          q.pop_front();
          for (std::size_t gi = 0; gi < _gens; ++gi) {
            for (bool inv : {false, true}) {
              int const   x = gen_letter(gi, inv);
              std::size_t d = _table.table[c][CosetTable::column(x)];
              if (!seen[d]) {
                seen[d]  = true;
                _canon[d] = _canon[c];
                _canon[d].push_back(x);
                q.push_back(d);
              }
            }
          }
        }
      }
    }

    GroupKind kind() const noexcept {
      return _kind;
    }
    bool decisive() const noexcept {
      return _kind != GroupKind::unknown;
    }

    std::optional<GroupWord> normalize(GroupWord const& w) const {
      switch (_kind) {
        case GroupKind::trivial:
          return GroupWord{};
        case GroupKind::free:
          return free_reduce(w);
        case GroupKind::finite:
          return _canon[_table.act(0, w)];
        case GroupKind::unknown:
          return std::nullopt;
      }
      return std::nullopt;
    }

   private:
    GroupKind              _kind = GroupKind::trivial;
    std::size_t            _gens = 0;
    CosetTable             _table;
    std::vector<GroupWord> _canon;
  };

}  // namespace pgsemi
