#pragma once

// Semigroup presentations of PG(P) (over projections, over friendly pairs,
// and the sandwich-set variant), the Temperley-Lieb presentation, the
// friendly-path rewriting of words over projections, and verification.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "boset.hpp"
#include "chain_semigroup.hpp"
#include "chains.hpp"
#include "diagram.hpp"
#include "error.hpp"
#include "projection_algebra.hpp"

namespace pgsemi {

  using SemigroupWord = std::vector<std::size_t>;

  struct Relation {
    SemigroupWord lhs;
    SemigroupWord rhs;
    std::string   tag;
  };

  struct SemigroupPresentation {
    std::vector<std::string> alphabet;
    std::vector<Relation>    relations;

    void check() const {
      for (auto const& r : relations) {
        if (r.lhs.empty() || r.rhs.empty()) {
          throw MalformedTable("relation with an empty side");
        }
        for (auto const* w : {&r.lhs, &r.rhs}) {
          for (auto x : *w) {
            if (x >= alphabet.size()) {
              throw MalformedTable("relation letter out of range");
            }
          }
        }
      }
    }

    std::size_t count(std::string const& tag) const {
      return std::count_if(relations.begin(), relations.end(),
                           [&](Relation const& r) { return r.tag == tag; });
    }

    std::string word_string(SemigroupWord const& w) const {
      std::string s;
      for (std::size_t i = 0; i < w.size(); ++i) {
        s += (i == 0 ? "" : " ") + alphabet[w[i]];
      }
      return s;
    }

    // One relation per line: "tag: lhs = rhs".
    std::string to_text() const {
      std::ostringstream os;
      os << "alphabet:";
      for (auto const& a : alphabet) {
        os << " " << a;
      }
      os << "\n";
      for (auto const& r : relations) {
        os << r.tag << ": " << word_string(r.lhs) << " = "
           << word_string(r.rhs) << "\n";
      }
      return os.str();
    }
  };

  namespace detail {
    inline std::string letter_name(std::string const& label) {
      return "x[" + label + "]";
    }
  }  // namespace detail

  // Generators x_p; R1 x_p x_p = x_p, R2 (x_p x_q)^2 = x_p x_q,
  // R3 x_p x_q x_p = x_{q theta_p}.
  inline SemigroupPresentation presentation_RP(ProjectionAlgebra const& P) {
    SemigroupPresentation out;
    for (proj_t p = 0; p < P.size(); ++p) {
      out.alphabet.push_back(detail::letter_name(P.label(p)));
    }
    for (proj_t p = 0; p < P.size(); ++p) {
      out.relations.push_back({{p, p}, {p}, "R1"});
    }
    for (proj_t p = 0; p < P.size(); ++p) {
      for (proj_t q = 0; q < P.size(); ++q) {
        out.relations.push_back({{p, q, p, q}, {p, q}, "R2"});
      }
    }
    for (proj_t p = 0; p < P.size(); ++p) {
      for (proj_t q = 0; q < P.size(); ++q) {
        out.relations.push_back({{p, q, p}, {P.act(q, p)}, "R3"});
      }
    }
    return out;
  }

  namespace detail {
    inline SemigroupPresentation pair_alphabet(ProjectionAlgebra const& P,
                                               Boset const&             B) {
      SemigroupPresentation out;
      for (std::size_t e = 0; e < B.size(); ++e) {
        out.alphabet.push_back(letter_name(B.label(e, P)));
      }
      return out;
    }

    inline void add_basic_products(SemigroupPresentation& out, Boset const& B,
                                   std::string const& tag) {
      for (std::size_t e = 0; e < B.size(); ++e) {
        for (std::size_t f = 0; f < B.size(); ++f) {
          if (auto ef = B.product(e, f)) {
            out.relations.push_back({{e, f}, {*ef}, tag});
          }
        }
      }
    }

    // pq = [q th_p, p th_q] for projections p, q.
    inline std::size_t projection_product(ProjectionAlgebra const& P,
                                          Boset const& B, proj_t p, proj_t q) {
      return B.index(P.act(q, p), P.act(p, q));
    }
  }  // namespace detail

  // Generators x_e for friendly pairs e; R1' basic products and
  // R2' x_p x_q = x_{pq} for all projections.
  inline SemigroupPresentation presentation_RE(ProjectionAlgebra const& P) {
    Boset const B(P);
    auto        out = detail::pair_alphabet(P, B);
    detail::add_basic_products(out, B, "R1'");
    for (proj_t p = 0; p < P.size(); ++p) {
      for (proj_t q = 0; q < P.size(); ++q) {
        out.relations.push_back(
            {{B.diagonal(p), B.diagonal(q)},
             {detail::projection_product(P, B, p, q)},
             "R2'"});
      }
    }
    return out;
  }

  // R1'' basic products, R2'' x_e x_f = x_e x_g x_f for g in S(e,f), and
  // R3'' x_p x_q = x_{pq} for friendly p, q.
  inline SemigroupPresentation presentation_RE2(ChainSemigroup const& S) {
    auto const& P   = S.algebra();
    Boset const B(P);
    auto        out = detail::pair_alphabet(P, B);
    detail::add_basic_products(out, B, "R1''");
    for (std::size_t e = 0; e < B.size(); ++e) {
      for (std::size_t f = 0; f < B.size(); ++f) {
        for (std::size_t g : sandwich_set(S, B, e, f)) {
          out.relations.push_back({{e, f}, {e, g, f}, "R2''"});
        }
      }
    }
    for (proj_t p = 0; p < P.size(); ++p) {
      for (proj_t q = 0; q < P.size(); ++q) {
        if (P.friendly(p, q)) {
          out.relations.push_back(
              {{B.diagonal(p), B.diagonal(q)},
               {detail::projection_product(P, B, p, q)},
               "R3''"});
        }
      }
    }
    return out;
  }

  // Letter 0 is the identity e, letter i is t_i (1 <= i < n).
  inline SemigroupPresentation tl_presentation(std::size_t n) {
    if (n < 2) {
      throw InfeasibleDegree("the Temperley-Lieb presentation needs n >= 2");
    }
    SemigroupPresentation out;
    out.alphabet.push_back("e");
    for (std::size_t i = 1; i < n; ++i) {
      out.alphabet.push_back("t" + std::to_string(i));
    }
    for (std::size_t i = 1; i < n; ++i) {
      out.relations.push_back({{i, i}, {i}, "T1"});
    }
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = i + 2; j < n; ++j) {
        out.relations.push_back({{i, j}, {j, i}, "T2"});
      }
    }
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 1; j < n; ++j) {
        if (i + 1 == j || j + 1 == i) {
          out.relations.push_back({{i, j, i}, {i}, "T3"});
        }
      }
    }
    out.relations.push_back({{0, 0}, {0}, "T4"});
    for (std::size_t i = 1; i < n; ++i) {
      out.relations.push_back({{0, i}, {i}, "T5"});
      out.relations.push_back({{i, 0}, {i}, "T5"});
    }
    return out;
  }

  // Rewrites x_{p_1} ... x_{p_k} to an equivalent x_{p_1'} ... x_{p_k'}
  // with p_1' F ... F p_k' and p_i' <= p_i.
  inline Path word_to_friendly_path(ProjectionAlgebra const&   P,
                                    std::vector<proj_t> const& word) {
    if (word.empty()) {
      throw Error("empty word");
    }
    std::vector<proj_t> out(word.size());
    // Iterative form of the recursion: first compute the chain of
    // second-letter replacements left to right, then repair right to left.
    std::vector<proj_t> first(word.size());  // p_i'' for each level
    proj_t              carry = word[0];
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      first[i] = P.act(word[i + 1], carry);
      carry    = P.act(carry, word[i + 1]);
    }
    out.back() = carry;
    for (std::size_t i = word.size() - 1; i-- > 0;) {
      out[i] = P.act(out[i + 1], first[i]);
    }
    return Path(P, std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Coset enumeration for semigroup presentations
  ////////////////////////////////////////////////////////////////////////

  // Right Cayley graph of the monoid <X | R>^1, node 0 the empty word.
  struct SemigroupCayleyGraph {
    std::size_t                           letters = 0;
    std::vector<std::vector<std::size_t>> table;  // table[node][letter]
    std::vector<SemigroupWord>            words;  // a representative per node

    // number of classes of the semigroup (the empty word excluded)
    std::size_t classes() const noexcept {
      return table.size() - 1;
    }
  };

  inline std::optional<SemigroupCayleyGraph>
  semigroup_todd_coxeter(SemigroupPresentation const& pres,
                         std::size_t                  budget = 200000) {
    pres.check();
    constexpr auto    UNDEF = static_cast<std::size_t>(-1);
    std::size_t const A     = pres.alphabet.size();
    std::vector<std::vector<std::size_t>> T(1, std::vector<std::size_t>(A, UNDEF));
    std::vector<std::size_t>              parent{0};
    std::vector<std::pair<std::size_t, std::size_t>> pending;

    auto find = [&](std::size_t c) {
      while (parent[c] != c) {
        parent[c] = parent[parent[c]];
        c         = parent[c];
      }
      return c;
    };
    bool over = false;
    auto define = [&](std::size_t c, std::size_t x) {
      if (T.size() >= budget) {
        over = true;
        return c;
      }
      std::size_t d = T.size();
      T.emplace_back(A, UNDEF);
      parent.push_back(d);
      T[c][x] = d;
      return d;
    };
    auto process = [&] {
      while (!pending.empty()) {
        auto [a, b] = pending.back();
        pending.pop_back();
        a = find(a);
        b = find(b);
        if (a == b) {
          continue;
        }
        if (a > b) {
          std::swap(a, b);
        }
        parent[b] = a;
        for (std::size_t x = 0; x < A; ++x) {
          if (T[b][x] == UNDEF) {
            continue;
          }
          if (T[a][x] == UNDEF) {
            T[a][x] = T[b][x];
          } else {
            pending.emplace_back(T[a][x], T[b][x]);
          }
        }
      }
    };
    // Follow w from c, defining nodes as needed.
    auto trace = [&](std::size_t c, SemigroupWord const& w) {
      for (auto x : w) {
        c = find(c);
        if (T[c][x] == UNDEF) {
          c = define(c, x);
          if (over) {
            return c;
          }
        } else {
          c = T[c][x];
        }
      }
      return find(c);
    };

    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t c = 0; c < T.size(); ++c) {
        for (auto const& r : pres.relations) {
          if (find(c) != c) {
            break;
          }
          std::size_t const before = T.size();
          std::size_t const u      = trace(c, r.lhs);
          std::size_t const v      = over ? u : trace(c, r.rhs);
          if (over) {
            return std::nullopt;
          }
          if (T.size() != before) {
            changed = true;
          }
          if (find(u) != find(v)) {
            pending.emplace_back(u, v);
            process();
            changed = true;
          }
        }
        if (find(c) != c) {
          continue;
        }
        for (std::size_t x = 0; x < A; ++x) {
          if (T[c][x] == UNDEF) {
            define(c, x);
            if (over) {
              return std::nullopt;
            }
            changed = true;
          }
        }
      }
    }

    SemigroupCayleyGraph out;
    out.letters = A;
    std::vector<std::size_t> index(T.size(), UNDEF);
    // number the live nodes breadth-first from node 0, recording words
    std::vector<std::size_t> order{0};
    index[0] = 0;
    out.words.push_back({});
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t x = 0; x < A; ++x) {
        std::size_t d = find(T[order[i]][x]);
        if (index[d] == UNDEF) {
          index[d] = order.size();
          order.push_back(d);
          auto w = out.words[i];
          w.push_back(x);
          out.words.push_back(std::move(w));
        }
      }
    }
    out.table.assign(order.size(), std::vector<std::size_t>(A));
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t x = 0; x < A; ++x) {
        out.table[i][x] = index[find(T[order[i]][x])];
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  enum class VerifyMode { soundness, size, normal_form };

  struct VerifyReport {
    bool                     ok           = true;
    bool                     inconclusive = false;
    std::size_t              classes      = 0;
    std::size_t              checked      = 0;
    std::vector<std::string> failures;

    void fail(std::string msg) {
      ok = false;
      if (failures.size() < 20) {
        failures.push_back(std::move(msg));
      }
    }
    std::string to_string() const {
      std::string s = inconclusive ? "inconclusive" : ok ? "ok" : "FAILED";
      s += " (" + std::to_string(checked) + " checks";
      if (classes > 0) {
        s += ", " + std::to_string(classes) + " classes";
      }
      s += ")";
      for (auto const& f : failures) {
        s += "\n  " + f;
      }
      return s;
    }
  };

  // Evaluates letters of a presentation as chains of PG(P).
  using LetterMap = std::function<ReducedChain(std::size_t)>;

  inline LetterMap projection_letters(ChainSemigroup const& S) {
    return [&S](std::size_t x) { return S.projection(x); };
  }

  inline LetterMap pair_letters(ChainSemigroup const& S) {
    auto B = std::make_shared<Boset>(S.algebra());
    return [&S, B](std::size_t e) { return boset_chain(S, *B, e); };
  }

  struct VerifyOptions {
    std::size_t   node_budget  = 200000;
    std::size_t   random_words = 200;
    std::size_t   rewrites     = 6;
    std::uint64_t seed         = 20240601;
  };

  inline ReducedChain evaluate(ChainSemigroup const& S, LetterMap const& f,
                               SemigroupWord const& w) {
    std::vector<ReducedChain> xs;
    for (auto x : w) {
      xs.push_back(f(x));
    }
    return S.product(xs);
  }

  inline VerifyReport verify_presentation(ChainSemigroup const&        S,
                                          SemigroupPresentation const& pres,
                                          LetterMap const&             letters,
                                          VerifyMode                   mode,
                                          VerifyOptions                opts = {}) {
    VerifyReport rep;
    try {
      switch (mode) {
        case VerifyMode::soundness: {
          for (auto const& r : pres.relations) {
            ++rep.checked;
            if (evaluate(S, letters, r.lhs) != evaluate(S, letters, r.rhs)) {
              rep.fail(r.tag + ": " + pres.word_string(r.lhs) + " = "
                       + pres.word_string(r.rhs) + " fails in PG(P)");
            }
          }
          break;
        }
        case VerifyMode::size: {
          auto const sz = S.size();
          if (sz.kind != SizeKind::finite) {
            rep.inconclusive = true;
            rep.fail("PG(P) is not known to be finite");
            break;
          }
          auto g = semigroup_todd_coxeter(pres, opts.node_budget);
          if (!g) {
            rep.inconclusive = true;
            rep.fail("coset enumeration exceeded its budget");
            break;
          }
          rep.classes = g->classes();
          auto const all = S.enumerate(sz.value);
          std::set<ReducedChain> image;
          for (std::size_t i = 1; i < g->words.size(); ++i) {
            ++rep.checked;
            image.insert(evaluate(S, letters, g->words[i]));
          }
          if (rep.classes != sz.value) {
            rep.fail("presentation has " + std::to_string(rep.classes)
                     + " classes but |PG(P)| = " + std::to_string(sz.value));
          }
          if (image != std::set<ReducedChain>(all.begin(), all.end())) {
            rep.fail("classes do not biject with the elements of PG(P)");
          }
          break;
        }
        case VerifyMode::normal_form: {
          // Rewriting by a relation must not change
          // normalize(word_to_friendly_path(w)). Letters are projections.
          auto const&  P = S.algebra();
          if (pres.alphabet.size() != P.size()) {
            throw Error("normal-form mode needs a presentation over the "
                        "projections");
          }
          std::mt19937_64 rng(opts.seed);
          auto nf = [&](SemigroupWord const& w) {
            return S.normalize(word_to_friendly_path(
                P, std::vector<proj_t>(w.begin(), w.end())));
          };
          for (std::size_t t = 0; t < opts.random_words; ++t) {
            SemigroupWord w(1 + rng() % 6);
            for (auto& x : w) {
              x = rng() % P.size();
            }
            auto const target = nf(w);
            for (std::size_t k = 0; k < opts.rewrites; ++k) {
              auto const& r = pres.relations[rng() % pres.relations.size()];
              bool const  fwd = rng() % 2 == 0;
              auto const& from = fwd ? r.lhs : r.rhs;
              auto const& to   = fwd ? r.rhs : r.lhs;
              auto        it   = std::search(w.begin(), w.end(), from.begin(),
                                      from.end());
              if (it == w.end()) {
                continue;
              }
              std::size_t pos = it - w.begin();
              w.erase(w.begin() + pos, w.begin() + pos + from.size());
              w.insert(w.begin() + pos, to.begin(), to.end());
              ++rep.checked;
              if (nf(w) != target) {
                rep.fail("normal form changed after applying " + r.tag);
                break;
              }
            }
          }
          break;
        }
      }
    } catch (UndecidedEquality const& e) {
      rep.inconclusive = true;
      rep.fail(e.what());
    }
    return rep;
  }

  // Soundness of the Temperley-Lieb presentation in TL_n, and the size of
  // the monoid it presents.
  inline VerifyReport verify_tl_presentation(std::size_t n,
                                             VerifyOptions opts = {}) {
    VerifyReport rep;
    auto const   pres = tl_presentation(n);
    auto const   M    = tl_monoid(n);
    auto eval = [&](SemigroupWord const& w) {
      PartitionDiagram d = PartitionDiagram::identity(n);
      for (auto x : w) {
        if (x > 0) {
          d = multiply(d, tl_generator(n, x));
        }
      }
      return d;
    };
    for (auto const& r : pres.relations) {
      ++rep.checked;
      if (eval(r.lhs) != eval(r.rhs)) {
        rep.fail(r.tag + " fails in TL_" + std::to_string(n));
      }
    }
    auto g = semigroup_todd_coxeter(pres, opts.node_budget);
    if (!g) {
      rep.inconclusive = true;
      rep.fail("coset enumeration exceeded its budget");
      return rep;
    }
    rep.classes = g->classes();
    std::set<PartitionDiagram> image;
    for (std::size_t i = 1; i < g->words.size(); ++i) {
      image.insert(eval(g->words[i]));
    }
    if (rep.classes != M.elements.size() || image.size() != rep.classes) {
      rep.fail("presentation has " + std::to_string(rep.classes)
               + " classes, TL_" + std::to_string(n) + " has "
               + std::to_string(M.elements.size()));
    }
    return rep;
  }

}  // namespace pgsemi
