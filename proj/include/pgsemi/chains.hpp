#pragma once

// Paths in the friendliness graph, the basic reduction rules, restrictions,
// and linked pairs of projections.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "projection_algebra.hpp"

namespace pgsemi {

  // A nonempty walk (p_1, ..., p_k) with p_i F p_{i+1}. Holds a pointer to
  // its algebra, which must outlive the path.
  class Path {
   public:
    Path() = default;

    Path(ProjectionAlgebra const& P, std::vector<proj_t> vertices)
        : _P(&P), _v(std::move(vertices)) {
      if (_v.empty()) {
        throw NotAPath("a path must have at least one vertex");
      }
      for (std::size_t i = 0; i < _v.size(); ++i) {
        if (_v[i] >= P.size()) {
          throw NotAPath("vertex " + std::to_string(_v[i])
                         + " is not a projection");
        }
        if (i > 0 && !P.friendly(_v[i - 1], _v[i])) {
          throw NotAPath("consecutive vertices " + std::to_string(_v[i - 1])
                         + " and " + std::to_string(_v[i])
                         + " are not friendly");
        }
      }
    }

    // Skips the friendliness check; for sequences known to be valid.
    static Path trusted(ProjectionAlgebra const& P, std::vector<proj_t> v) {
      Path p;
      p._P = &P;
      p._v = std::move(v);
      return p;
    }

    ProjectionAlgebra const& algebra() const noexcept {
      return *_P;
    }
    std::vector<proj_t> const& vertices() const noexcept {
      return _v;
    }
    std::size_t size() const noexcept {
      return _v.size();
    }
    proj_t operator[](std::size_t i) const noexcept {
      return _v[i];
    }
    proj_t dom() const noexcept {
      return _v.front();
    }
    proj_t cod() const noexcept {
      return _v.back();
    }

    Path reversed() const {
      return trusted(*_P, std::vector<proj_t>(_v.rbegin(), _v.rend()));
    }

    // Composition in the path category: cod(this) == dom(other), the shared
    // vertex appears once.
    Path compose(Path const& other) const {
      if (cod() != other.dom()) {
        throw NotAPath("cannot compose: codomain " + std::to_string(cod())
                       + " differs from domain " + std::to_string(other.dom()));
      }
      auto v = _v;
      v.insert(v.end(), other._v.begin() + 1, other._v.end());
      return trusted(*_P, std::move(v));
    }

    // Juxtaposition, valid when cod(this) F dom(other).
    Path concat(Path const& other) const {
      if (!_P->friendly(cod(), other.dom())) {
        throw NotAPath("cannot concatenate: " + std::to_string(cod())
                       + " and " + std::to_string(other.dom())
                       + " are not friendly");
      }
      auto v = _v;
      v.insert(v.end(), other._v.begin(), other._v.end());
      return trusted(*_P, std::move(v));
    }

    bool operator==(Path const& that) const noexcept {
      return _v == that._v;
    }
    bool operator!=(Path const& that) const noexcept {
      return _v != that._v;
    }

    std::string to_string() const {
      std::string s = "(";
      for (std::size_t i = 0; i < _v.size(); ++i) {
        s += (i == 0 ? "" : ",") + _P->label(_v[i]);
      }
      return s + ")";
    }

   private:
    ProjectionAlgebra const* _P = nullptr;
    std::vector<proj_t>      _v;
  };

  // Reduced form of a vertex sequence under (p,p) -> (p) and (p,q,p) -> (p).
  // The rewriting system is confluent, so the stack strategy used here gives
  // the same result as any other order.
  inline std::vector<proj_t> reduce_vertices(std::vector<proj_t> const& v) {
    std::vector<proj_t> st;
    st.reserve(v.size());
    for (proj_t x : v) {
      st.push_back(x);
      for (bool changed = true; changed;) {
        changed        = false;
        std::size_t k  = st.size();
        if (k >= 2 && st[k - 1] == st[k - 2]) {
          st.pop_back();
          changed = true;
        } else if (k >= 3 && st[k - 1] == st[k - 3]) {
          st.pop_back();
          st.pop_back();
          changed = true;
        }
      }
    }
    return st;
  }

  inline Path reduce_path(Path const& p) {
    return Path::trusted(p.algebra(), reduce_vertices(p.vertices()));
  }

  inline bool is_reduced(Path const& p) {
    auto const& v = p.vertices();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == v[i + 1] || (i + 2 < v.size() && v[i] == v[i + 2])) {
        return false;
      }
    }
    return true;
  }

  // (q_1, ..., q_k) with q_1 = q and q_i = q_{i-1} theta_{p_i}.
  inline Path restrict_left(Path const& p, proj_t q) {
    auto const& P = p.algebra();
    if (q >= P.size() || !P.leq(q, p.dom())) {
      throw NotBelow("restriction point " + std::to_string(q)
                     + " is not below the domain " + std::to_string(p.dom()));
    }
    std::vector<proj_t> out(p.size());
    out[0] = q;
    for (std::size_t i = 1; i < p.size(); ++i) {
      out[i] = P.act(out[i - 1], p[i]);
    }
    return Path(P, std::move(out));
  }

  // (r_1, ..., r_k) with r_k = r and r_i = r_{i+1} theta_{p_i}.
  inline Path restrict_right(Path const& p, proj_t r) {
    auto const& P = p.algebra();
    if (r >= P.size() || !P.leq(r, p.cod())) {
      throw NotBelow("restriction point " + std::to_string(r)
                     + " is not below the codomain " + std::to_string(p.cod()));
    }
    std::vector<proj_t> out(p.size());
    out.back() = r;
    for (std::size_t i = p.size() - 1; i-- > 0;) {
      out[i] = P.act(out[i + 1], p[i]);
    }
    return Path(P, std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Linked pairs
  ////////////////////////////////////////////////////////////////////////

  // (e, f) is p-linked when f = e theta_p theta_f and e = f theta_p theta_e.
  struct LinkedPair {
    proj_t p = 0;
    proj_t e = 0;
    proj_t f = 0;

    proj_t e_prime(ProjectionAlgebra const& P) const {
      return P.act(e, p);
    }
    proj_t f_prime(ProjectionAlgebra const& P) const {
      return P.act(f, p);
    }

    bool operator==(LinkedPair const& o) const noexcept {
      return p == o.p && e == o.e && f == o.f;
    }
    bool operator<(LinkedPair const& o) const noexcept {
      return std::tie(p, e, f) < std::tie(o.p, o.e, o.f);
    }
  };

  inline bool is_linked(ProjectionAlgebra const& P, proj_t p, proj_t e, proj_t f) {
    return f == P.act(P.act(e, p), f) && e == P.act(P.act(f, p), e);
  }

  // Ordered by pivot, then e, then f.
  inline std::vector<LinkedPair> enumerate_linked_pairs(ProjectionAlgebra const& P) {
    std::vector<LinkedPair> out;
    for (proj_t p = 0; p < P.size(); ++p) {
      for (proj_t e = 0; e < P.size(); ++e) {
        for (proj_t f = 0; f < P.size(); ++f) {
          if (is_linked(P, p, e, f)) {
            out.push_back({p, e, f});
          }
        }
      }
    }
    return out;
  }

  inline void check_linked(ProjectionAlgebra const& P, LinkedPair const& lp) {
    if (lp.p >= P.size() || lp.e >= P.size() || lp.f >= P.size()
        || !is_linked(P, lp.p, lp.e, lp.f)) {
      throw Error("(" + std::to_string(lp.e) + ", " + std::to_string(lp.f)
                  + ") is not " + std::to_string(lp.p) + "-linked");
    }
  }

  struct LambdaRho {
    Path lambda;
    Path rho;
  };

  // lambda = (e, e theta_p, f) and rho = (e, f theta_p, f).
  inline LambdaRho lambda_rho(ProjectionAlgebra const& P, LinkedPair const& lp) {
    check_linked(P, lp);
    return {Path(P, {lp.e, lp.e_prime(P), lp.f}),
            Path(P, {lp.e, lp.f_prime(P), lp.f})};
  }

  struct LinkedPairClass {
    bool special    = false;
    bool degenerate = false;
    // 1, 2 or 3 for non-degenerate pairs, 0 for degenerate ones
    int type = 0;
  };

  inline LinkedPairClass classify_linked_pair(ProjectionAlgebra const& P,
                                              LinkedPair const&        lp) {
    auto const lr = lambda_rho(P, lp);
    proj_t const e = lp.e, f = lp.f, e1 = lp.e_prime(P), f1 = lp.f_prime(P);
    bool const e_below = P.leq(e, lp.p);
    bool const f_below = P.leq(f, lp.p);

    LinkedPairClass c;
    c.special    = e_below || f_below;
    c.degenerate = e1 == f1 || (e_below && f_below);
    bool const equal_mod_basic
        = reduce_path(lr.lambda) == reduce_path(lr.rho);
    if (c.degenerate != equal_mod_basic) {
      throw InconsistentClassification(
          "degeneracy test disagrees with path reduction for the "
          + std::to_string(lp.p) + "-linked pair (" + std::to_string(e) + ", "
          + std::to_string(f) + ")");
    }
    if (!c.degenerate) {
      auto const k = std::set<proj_t>{e, f, e1, f1}.size();
      if (k == 4) {
        c.type = 1;
      } else if (k == 3 && e == e1) {
        c.type = 2;
      } else if (k == 3 && f == f1) {
        c.type = 3;
      } else {
        throw InconsistentClassification("non-degenerate linked pair fits "
                                         "no type");
      }
      if ((c.type == 1) == c.special) {
        throw InconsistentClassification("type and specialness disagree");
      }
    }
    return c;
  }

  // The p-linked pair (e_low, e_low theta_p theta_f) below lp.
  inline LinkedPair restrict_linked_pair(ProjectionAlgebra const& P,
                                         LinkedPair const&        lp,
                                         proj_t                   e_low) {
    check_linked(P, lp);
    if (e_low >= P.size() || !P.leq(e_low, lp.e)) {
      throw NotBelow(std::to_string(e_low) + " is not below "
                     + std::to_string(lp.e));
    }
    LinkedPair out{lp.p, e_low, P.act(P.act(e_low, lp.p), lp.f)};
    check_linked(P, out);
    return out;
  }

}  // namespace pgsemi
