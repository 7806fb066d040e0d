#pragma once

// Finite projection algebras: a carrier {0, ..., n-1} with one unary
// operation theta_p per element, stored as a table with theta[p][q] = q theta_p.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace pgsemi {

  using proj_t = std::size_t;

  class ProjectionAlgebra {
   public:
    ProjectionAlgebra() = default;

    // Throws MalformedTable if the table is not size x size with entries in
    // [0, size). Axioms are not checked here; see validate_axioms.
    ProjectionAlgebra(std::vector<std::vector<proj_t>> theta,
                      std::vector<std::string>         labels = {})
        : _size(theta.size()), _labels(std::move(labels)) {
      if (_size == 0) {
        throw MalformedTable("projection algebra must be nonempty");
      }
      _theta.reserve(_size * _size);
      for (std::size_t p = 0; p < _size; ++p) {
        if (theta[p].size() != _size) {
          throw MalformedTable("theta row " + std::to_string(p)
                               + " has length "
                               + std::to_string(theta[p].size()) + ", expected "
                               + std::to_string(_size));
        }
        for (std::size_t q = 0; q < _size; ++q) {
          if (theta[p][q] >= _size) {
            throw MalformedTable("theta[" + std::to_string(p) + "]["
                                 + std::to_string(q) + "] = "
                                 + std::to_string(theta[p][q])
                                 + " is out of range");
          }
          _theta.push_back(theta[p][q]);
        }
      }
      if (!_labels.empty() && _labels.size() != _size) {
        throw MalformedTable("labels must be empty or have one entry per "
                             "projection");
      }
    }

    std::size_t size() const noexcept {
      return _size;
    }

    // q theta_p
    proj_t act(proj_t q, proj_t p) const noexcept {
      return _theta[p * _size + q];
    }

    // q theta_{ops[0]} theta_{ops[1]} ...
    template <typename Range>
    proj_t act_all(proj_t q, Range const& ops) const noexcept {
      for (proj_t p : ops) {
        q = act(q, p);
      }
      return q;
    }

    bool leq(proj_t p, proj_t q) const noexcept {
      return act(p, q) == p;
    }
    bool leq_f(proj_t p, proj_t q) const noexcept {
      return act(q, p) == p;
    }
    bool friendly(proj_t p, proj_t q) const noexcept {
      return leq_f(p, q) && leq_f(q, p);
    }

    std::vector<std::vector<proj_t>> theta_rows() const {
      std::vector<std::vector<proj_t>> rows(_size);
      for (std::size_t p = 0; p < _size; ++p) {
        rows[p].assign(_theta.begin() + p * _size,
                       _theta.begin() + (p + 1) * _size);
      }
      return rows;
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    std::string label(proj_t p) const {
      return _labels.empty() ? std::to_string(p) : _labels[p];
    }

    void set_labels(std::vector<std::string> labels) {
      if (!labels.empty() && labels.size() != _size) {
        throw MalformedTable("labels must have one entry per projection");
      }
      _labels = std::move(labels);
    }

    // FNV-1a over the size and theta table; labels are not included.
    std::uint64_t digest() const noexcept {
      std::uint64_t h   = 1469598103934665603ULL;
      auto          mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
          h ^= (v >> (8 * i)) & 0xff;
          h *= 1099511628211ULL;
        }
      };
      mix(_size);
      for (auto v : _theta) {
        mix(v);
      }
      return h;
    }

    bool operator==(ProjectionAlgebra const& that) const noexcept {
      return _size == that._size && _theta == that._theta;
    }
    bool operator!=(ProjectionAlgebra const& that) const noexcept {
      return !(*this == that);
    }

   private:
    std::size_t              _size = 0;
    std::vector<proj_t>      _theta;
    std::vector<std::string> _labels;
  };

  inline void check_projection(ProjectionAlgebra const& P, proj_t p) {
    if (p >= P.size()) {
      throw MalformedTable("projection " + std::to_string(p)
                           + " out of range for algebra of size "
                           + std::to_string(P.size()));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Axioms
  ////////////////////////////////////////////////////////////////////////

  inline ValidationReport validate_axioms(ProjectionAlgebra const& P) {
    ValidationReport report;
    std::size_t const n = P.size();
    for (proj_t p = 0; p < n; ++p) {
      if (P.act(p, p) != p) {
        report.add("P1", {p});
      }
      for (proj_t q = 0; q < n; ++q) {
        proj_t const qp = P.act(q, p);
        if (P.act(qp, p) != qp) {
          report.add("P2", {p, q});
        }
        if (P.act(P.act(p, q), p) != qp) {
          report.add("P3", {p, q});
        }
        for (proj_t r = 0; r < n; ++r) {
          proj_t const rpq = P.act(P.act(r, p), q);
          if (P.act(rpq, p) != P.act(r, qp)) {
            report.add("P4", {p, q, r});
          }
          if (P.act(P.act(rpq, p), q) != rpq) {
            report.add("P5", {p, q, r});
          }
        }
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Relations
  ////////////////////////////////////////////////////////////////////////

  class ProjectionRelations {
   public:
    explicit ProjectionRelations(ProjectionAlgebra const& P)
        : _n(P.size()),
          _leq(_n * _n),
          _leq_f(_n * _n),
          _friendly(_n * _n) {
      for (proj_t p = 0; p < _n; ++p) {
        for (proj_t q = 0; q < _n; ++q) {
          _leq[p * _n + q]   = P.leq(p, q);
          _leq_f[p * _n + q] = P.leq_f(p, q);
        }
      }
      for (proj_t p = 0; p < _n; ++p) {
        for (proj_t q = 0; q < _n; ++q) {
          _friendly[p * _n + q] = _leq_f[p * _n + q] && _leq_f[q * _n + p];
        }
      }
    }

    std::size_t size() const noexcept {
      return _n;
    }
    bool leq(proj_t p, proj_t q) const noexcept {
      return _leq[p * _n + q];
    }
    bool leq_f(proj_t p, proj_t q) const noexcept {
      return _leq_f[p * _n + q];
    }
    bool friendly(proj_t p, proj_t q) const noexcept {
      return _friendly[p * _n + q];
    }

    // Projections friendly to p, in increasing order (p itself included).
    std::vector<proj_t> friends(proj_t p) const {
      std::vector<proj_t> out;
      for (proj_t q = 0; q < _n; ++q) {
        if (friendly(p, q)) {
          out.push_back(q);
        }
      }
      return out;
    }

   private:
    std::size_t       _n;
    std::vector<bool> _leq;
    std::vector<bool> _leq_f;
    std::vector<bool> _friendly;
  };

  // Throws NotPartialOrder if <= is not reflexive, antisymmetric and
  // transitive, which can only happen for an invalid algebra.
  inline ProjectionRelations relations(ProjectionAlgebra const& P) {
    ProjectionRelations rel(P);
    std::size_t const   n = P.size();
    for (proj_t p = 0; p < n; ++p) {
      if (!rel.leq(p, p)) {
        throw NotPartialOrder("<= is not reflexive at " + std::to_string(p));
      }
      for (proj_t q = 0; q < n; ++q) {
        if (p != q && rel.leq(p, q) && rel.leq(q, p)) {
          throw NotPartialOrder("<= is not antisymmetric at ("
                                + std::to_string(p) + ", " + std::to_string(q)
                                + ")");
        }
        if (!rel.leq(p, q)) {
          continue;
        }
        for (proj_t r = 0; r < n; ++r) {
          if (rel.leq(q, r) && !rel.leq(p, r)) {
            throw NotPartialOrder("<= is not transitive at ("
                                  + std::to_string(p) + ", "
                                  + std::to_string(q) + ", "
                                  + std::to_string(r) + ")");
          }
        }
      }
    }
    return rel;
  }

  ////////////////////////////////////////////////////////////////////////
  // Composites of theta maps
  ////////////////////////////////////////////////////////////////////////

  // start theta_{ops[0]} ... theta_{ops[k-1]}, applied left to right.
  inline proj_t theta_chain(ProjectionAlgebra const&   P,
                            proj_t                     start,
                            std::vector<proj_t> const& ops) {
    check_projection(P, start);
    for (proj_t p : ops) {
      check_projection(P, p);
    }
    return P.act_all(start, ops);
  }

  namespace detail {
    // Calls f(tuple) for every tuple in {0..n-1}^k.
    template <typename F>
    void for_each_tuple(std::size_t n, std::size_t k, F&& f) {
      std::vector<proj_t> t(k, 0);
      while (true) {
        f(t);
        std::size_t i = k;
        while (i > 0) {
          --i;
          if (++t[i] < n) {
            break;
          }
          t[i] = 0;
          if (i == 0) {
            return;
          }
        }
        if (k == 0) {
          return;
        }
      }
    }
  }  // namespace detail

  // Exhaustive check of the consequences PA1-PA5 and of both composite
  // identities for tuples p_1, ..., p_k with 1 <= k <= max_tuple.
  inline ValidationReport check_derived_laws(ProjectionAlgebra const& P,
                                             std::size_t max_tuple = 3) {
    ValidationReport          report;
    std::size_t const         n = P.size();
    ProjectionRelations const rel(P);

    for (proj_t p = 0; p < n; ++p) {
      for (proj_t q = 0; q < n; ++q) {
        // PA1
        if (!rel.friendly(P.act(p, q), P.act(q, p))) {
          report.add("PA1", {p, q});
        }
        // PA3
        if (rel.leq(p, q) && !rel.leq_f(p, q)) {
          report.add("PA3", {p, q});
        }
        for (proj_t r = 0; r < n; ++r) {
          // PA2
          if (((rel.leq(p, q) && rel.leq_f(q, r))
               || (rel.leq_f(p, q) && rel.leq(q, r)))
              && !rel.leq_f(p, r)) {
            report.add("PA2", {p, q, r});
          }
          // PA4: evaluated pointwise at r
          if (rel.leq(p, q)) {
            proj_t const a = P.act(r, p);
            if (a != P.act(P.act(r, p), q) || a != P.act(P.act(r, q), p)) {
              report.add("PA4", {p, q, r});
            }
          }
          // PA5
          if (rel.leq_f(p, q)
              && P.act(r, p) != P.act(P.act(P.act(r, p), q), p)) {
            report.add("PA5", {p, q, r});
          }
        }
      }
    }

    // The two composite identities. For each tuple we precompute the maps
    // forward = theta_{p1} ... theta_{pk} and backward = theta_{pk} ...
    // theta_{p1} as arrays.
    std::vector<proj_t> forward(n), backward(n);
    for (std::size_t k = 1; k <= max_tuple; ++k) {
      detail::for_each_tuple(n, k, [&](std::vector<proj_t> const& ps) {
        for (proj_t t = 0; t < n; ++t) {
          proj_t f = t, b = t;
          for (std::size_t i = 0; i < k; ++i) {
            f = P.act(f, ps[i]);
            b = P.act(b, ps[k - 1 - i]);
          }
          forward[t]  = f;
          backward[t] = b;
        }
        for (proj_t q = 0; q < n; ++q) {
          proj_t const x = forward[q];
          for (proj_t t = 0; t < n; ++t) {
            proj_t const lhs = P.act(t, x);
            proj_t const rhs = forward[P.act(backward[t], q)];
            if (lhs != rhs) {
              std::vector<proj_t> w(ps);
              w.push_back(q);
              w.push_back(t);
              report.add("composite-theta", std::move(w));
            }
            // Second identity with r = t.
            if (P.act(rhs, t) != P.act(x, t)) {
              std::vector<proj_t> w(ps);
              w.push_back(q);
              w.push_back(t);
              report.add("composite-friendly", std::move(w));
            }
          }
        }
      });
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  // True iff (p theta_q) phi = (p phi) theta_{q phi} for all p, q.
  inline bool is_morphism(ProjectionAlgebra const&   P,
                          ProjectionAlgebra const&   Q,
                          std::vector<proj_t> const& phi) {
    if (phi.size() != P.size()) {
      return false;
    }
    for (proj_t v : phi) {
      if (v >= Q.size()) {
        return false;
      }
    }
    for (proj_t p = 0; p < P.size(); ++p) {
      for (proj_t q = 0; q < P.size(); ++q) {
        if (phi[P.act(p, q)] != Q.act(phi[p], phi[q])) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Named algebras
  ////////////////////////////////////////////////////////////////////////

  // Projection algebra of the k x k square band: every theta_p is the
  // constant map with value p.
  inline ProjectionAlgebra square_band_algebra(std::size_t k) {
    std::vector<std::vector<proj_t>> theta(k, std::vector<proj_t>(k));
    std::vector<std::string>         labels;
    for (proj_t p = 0; p < k; ++p) {
      std::fill(theta[p].begin(), theta[p].end(), p);
      labels.push_back(k <= 26 ? std::string(1, char('a' + p))
                               : std::to_string(p));
    }
    return ProjectionAlgebra(std::move(theta), std::move(labels));
  }

  // Kinyon's four-element algebra {p, q, r, e}: p, q, r act as constant
  // maps and theta_e fixes p, q, e and sends r to q.
  inline ProjectionAlgebra kinyon_algebra() {
    constexpr proj_t p = 0, q = 1, r = 2, e = 3;
    std::vector<std::vector<proj_t>> theta = {
        {p, p, p, p}, {q, q, q, q}, {r, r, r, r}, {p, q, q, e}};
    return ProjectionAlgebra(std::move(theta), {"p", "q", "r", "e"});
  }

}  // namespace pgsemi
