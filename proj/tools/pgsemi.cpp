// pgsemi: build projection algebras, analyse their chain semigroups and
// export the results.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error,
// 3 inconclusive (undecided word problem or exhausted budget).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <pgsemi/pgsemi.hpp>

using namespace pgsemi;
using json = nlohmann::json;

namespace {

  constexpr int EXIT_FAIL         = 1;
  constexpr int EXIT_USAGE        = 2;
  constexpr int EXIT_INCONCLUSIVE = 3;

  struct Options {
    std::string   source;
    std::string   format = "text";
    std::string   output;
    std::string   which  = "KP'";
    std::string   projection;
    std::string   family = "RP";
    std::string   what   = "algebra";
    std::string   suite;
    std::size_t   budget = 50000;
    std::size_t   cap    = 100000;
    std::size_t   n      = 3;
    std::uint64_t seed   = 20240601;
  };

  void emit(Options const& o, std::string const& text) {
    if (o.output.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(o.output);
    if (!out) {
      throw Error("cannot write " + o.output);
    }
    out << text;
  }

  std::string dump(json const& j) {
    return j.dump(2) + "\n";
  }

  ChainSemigroupOptions chain_options(Options const& o) {
    ChainSemigroupOptions c;
    c.simplify.coset_budget = o.budget;
    return c;
  }

  proj_t parse_projection(ProjectionAlgebra const& P, std::string const& s) {
    for (proj_t p = 0; p < P.size(); ++p) {
      if (P.label(p) == s) {
        return p;
      }
    }
    try {
      std::size_t pos = 0;
      auto const  v   = std::stoul(s, &pos);
      if (pos == s.size() && v < P.size()) {
        return v;
      }
    } catch (std::exception const&) {
    }
    throw Error("no projection named '" + s + "'");
  }

  ////////////////////////////////////////////////////////////////////////
  // Verbs
  ////////////////////////////////////////////////////////////////////////

  int cmd_validate(Options const& o) {
    auto const src  = load_source(o.source);
    auto const ax   = validate_axioms(src.algebra);
    auto const laws = check_derived_laws(src.algebra);
    std::optional<ValidationReport> star;
    if (src.semigroup) {
      star = validate_star_semigroup(*src.semigroup, {false});
    }
    bool const ok = ax.ok() && laws.ok() && (!star || star->ok());
    if (o.format == "json") {
      json j{{"source", src.name},
             {"projections", src.algebra.size()},
             {"axioms", ax.to_string()},
             {"derived_laws", laws.to_string()},
             {"ok", ok}};
      if (star) {
        j["star_semigroup"] = star->to_string();
      }
      emit(o, dump(j));
    } else {
      std::ostringstream os;
      os << "source: " << src.name << " (" << src.algebra.size()
         << " projections)\n";
      os << "axioms P1-P5: " << ax.to_string() << "\n";
      os << "derived laws: " << laws.to_string() << "\n";
      if (star) {
        os << "regular *-semigroup laws: " << star->to_string() << "\n";
      }
      emit(o, os.str());
    }
    return ok ? 0 : EXIT_FAIL;
  }

  int cmd_build(Options const& o) {
    auto const src = load_source(o.source);
    if (o.format == "json") {
      emit(o, dump(io::to_json(src.algebra)));
      return 0;
    }
    auto const&        P = src.algebra;
    std::ostringstream os;
    os << "theta table (row p lists q theta_p):\n";
    for (proj_t p = 0; p < P.size(); ++p) {
      os << P.label(p) << ":";
      for (proj_t q = 0; q < P.size(); ++q) {
        os << " " << P.label(P.act(q, p));
      }
      os << "\n";
    }
    emit(o, os.str());
    return 0;
  }

  int cmd_relations(Options const& o) {
    auto const  src = load_source(o.source);
    auto const& P   = src.algebra;
    auto const  rel = relations(P);
    json leq = json::array(), leq_f = json::array(), fr = json::array();
    std::ostringstream os;
    for (proj_t p = 0; p < P.size(); ++p) {
      for (proj_t q = 0; q < P.size(); ++q) {
        if (p == q) {
          continue;
        }
        if (rel.leq(p, q)) {
          leq.push_back({p, q});
          os << P.label(p) << " <= " << P.label(q) << "\n";
        }
        if (rel.leq_f(p, q)) {
          leq_f.push_back({p, q});
        }
        if (p < q && rel.friendly(p, q)) {
          fr.push_back({p, q});
          os << P.label(p) << " F " << P.label(q) << "\n";
        }
      }
    }
    if (o.format == "json") {
      emit(o, dump({{"leq", leq}, {"leq_F", leq_f}, {"friendly", fr}}));
    } else {
      emit(o, os.str());
    }
    return 0;
  }

  Complex2 pick_complex(ProjectionAlgebra const& P, std::string const& which) {
    if (which == "GP") {
      return friendliness_graph(P);
    }
    if (which == "KP") {
      return complex_KP(P);
    }
    if (which == "KP'") {
      return complex_KP_prime(P);
    }
    throw Error("--which must be GP, KP or KP'");
  }

  int cmd_complex(Options const& o) {
    auto const src = load_source(o.source);
    auto const K   = pick_complex(src.algebra, o.which);
    if (o.format == "json") {
      emit(o, dump(io::to_json(K)));
    } else if (o.format == "dot") {
      emit(o, to_dot(K, src.algebra));
    } else {
      std::ostringstream os;
      os << K.name() << ": " << K.vertices() << " vertices, "
         << K.edges().size() << " edges, " << K.cells().size() << " cells, "
         << components(K).size() << " components\n";
      for (auto const& c : K.cells()) {
        os << "cell:";
        for (proj_t v : c.boundary) {
          os << " " << src.algebra.label(v);
        }
        os << "\n";
      }
      emit(o, os.str());
    }
    return 0;
  }

  int cmd_pi1(Options const& o) {
    auto const     src = load_source(o.source);
    ChainSemigroup S(src.algebra, chain_options(o));
    json           arr = json::array();
    std::ostringstream os;
    for (auto const& c : S.component_data()) {
      json j;
      j["vertices"]   = c.vertices;
      j["raw"]        = io::to_json(c.raw);
      j["simplified"] = io::to_json(c.group);
      arr.push_back(j);
      os << "component at " << src.algebra.label(c.base) << " ("
         << c.vertices.size() << " vertices): " << c.raw.generators
         << " generators, " << c.raw.relators.size() << " relators -> "
         << c.group.classification.to_string() << ", abelianization "
         << c.group.abelian.to_string() << "\n";
    }
    emit(o, o.format == "json" ? dump(arr) : os.str());
    return S.decisive() ? 0 : EXIT_INCONCLUSIVE;
  }

  int cmd_enumerate(Options const& o) {
    auto const     src = load_source(o.source);
    ChainSemigroup S(src.algebra, chain_options(o));
    auto const     all = S.enumerate(o.cap);
    if (o.format == "json") {
      json arr = json::array();
      for (auto const& x : all) {
        arr.push_back(io::to_json(x));
      }
      emit(o, dump(arr));
    } else {
      std::ostringstream os;
      for (auto const& x : all) {
        os << S.to_string(x) << "\n";
      }
      os << all.size() << " elements\n";
      emit(o, os.str());
    }
    return 0;
  }

  int cmd_size(Options const& o) {
    auto const     src = load_source(o.source);
    ChainSemigroup S(src.algebra, chain_options(o));
    auto const     sz = S.size();
    if (o.format == "json") {
      emit(o, dump({{"size", sz.to_string()},
                    {"cross_checked", sz.cross_checked},
                    {"evidence", sz.evidence}}));
    } else {
      emit(o, sz.to_string() + ": " + sz.evidence + "\n");
    }
    return sz.kind == SizeKind::unknown ? EXIT_INCONCLUSIVE : 0;
  }

  int cmd_subgroup(Options const& o) {
    auto const     src = load_source(o.source);
    ChainSemigroup S(src.algebra, chain_options(o));
    proj_t const   p = parse_projection(src.algebra, o.projection);
    auto const     g = S.maximal_subgroup(p);
    if (o.format == "json") {
      emit(o, dump(io::to_json(g)));
    } else {
      std::ostringstream os;
      os << "maximal subgroup at " << src.algebra.label(p) << ": "
         << g.classification.to_string() << ", abelianization "
         << g.abelian.to_string() << "\n";
      os << "generators: " << g.presentation.generators << "\n";
      for (auto const& r : g.presentation.relators) {
        os << "relator: " << word_to_string(r) << "\n";
      }
      emit(o, os.str());
    }
    return g.decisive() ? 0 : EXIT_INCONCLUSIVE;
  }

  int cmd_presentations(Options const& o) {
    SemigroupPresentation pres;
    if (o.family == "TL") {
      pres = tl_presentation(o.n);
    } else {
      auto const src = load_source(o.source);
      if (o.family == "RP") {
        pres = presentation_RP(src.algebra);
      } else if (o.family == "RE") {
        pres = presentation_RE(src.algebra);
      } else if (o.family == "RE2") {
        ChainSemigroup S(src.algebra, chain_options(o));
        pres = presentation_RE2(S);
      } else {
        throw Error("--family must be RP, RE, RE2 or TL");
      }
    }
    emit(o, o.format == "json" ? dump(io::to_json(pres)) : pres.to_text());
    return 0;
  }

  // Verification suites: each check prints one line; any failure gives
  // exit 1, otherwise any inconclusive check gives exit 3.
  class Suite {
   public:
    void check(bool ok, std::string const& what) {
      std::cout << (ok ? "ok      " : "FAIL    ") << what << "\n";
      _failed = _failed || !ok;
    }
    void inconclusive(std::string const& what) {
      std::cout << "UNKNOWN " << what << "\n";
      _inconclusive = true;
    }
    template <typename F>
    void guarded(std::string const& what, F&& f) {
      try {
        f();
      } catch (UndecidedEquality const& e) {
        inconclusive(what + ": " + e.what());
      } catch (BudgetExceeded const& e) {
        inconclusive(what + ": " + e.what());
      } catch (CapExceeded const& e) {
        inconclusive(what + ": " + e.what());
      }
    }
    int status() const {
      return _failed ? EXIT_FAIL : _inconclusive ? EXIT_INCONCLUSIVE : 0;
    }

   private:
    bool _failed       = false;
    bool _inconclusive = false;
  };

  void check_all_trivial(Suite& s, ChainSemigroup const& S) {
    bool ok = true;
    for (auto const& c : S.component_data()) {
      ok = ok && c.group.classification.kind == GroupKind::trivial;
    }
    s.check(ok, "every component of K_P' has trivial fundamental group");
  }

  void check_extension(Suite& s, ChainSemigroup const& S,
                       StarSemigroup const& T, std::vector<elem_t> const& phi,
                       std::size_t cap, bool expect_onto) {
    auto const       f   = extend_morphism(S, T, phi);
    auto const       all = S.enumerate(cap);
    std::set<elem_t> image;
    bool             hom = true;
    std::vector<elem_t> img;
    for (auto const& x : all) {
      img.push_back(f(x));
      image.insert(img.back());
      hom = hom && f(S.star(x)) == T.star(img.back());
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        hom = hom && f(S.product(all[i], all[j])) == T.mul(img[i], img[j]);
      }
    }
    s.check(hom, "extension of the identity preserves products and star");
    s.check(image.size() == all.size(), "extension is injective");
    if (expect_onto) {
      s.check(image.size() == T.size(), "extension is onto");
    } else {
      auto const E = generated_subsemigroup(T, idempotents(T));
      s.check(image == std::set<elem_t>(E.begin(), E.end()),
              "image is the idempotent-generated subsemigroup");
    }
  }

  int cmd_verify(Options const& o) {
    Suite s;
    if (o.suite == "kinyon") {
      auto const     P = kinyon_algebra();
      ChainSemigroup S(P, chain_options(o));
      s.check(validate_axioms(P).ok(), "axioms hold");
      s.guarded("size", [&] {
        auto const sz = S.size();
        s.check(sz.kind == SizeKind::finite && sz.value == 10,
                "|PG(P)| = 10 (got " + sz.to_string() + ")");
        std::size_t idem = 0;
        for (auto const& x : S.enumerate(100)) {
          idem += S.is_idempotent(x) && !(x.dom == x.cod && x.word.empty())
                      ? 1
                      : 0;
        }
        s.check(idem == 6, "six non-projection idempotents");
        s.check(S.product(S.projection(2), S.projection(3))
                    == S.normalize({2, 1}),
                "r * e = [r,q]");
      });
      s.check(S.complex().cells().size() == 1, "K_P' has a single cell");
    } else if (o.suite == "band") {
      auto const     k = o.n;
      ChainSemigroup S(square_band_algebra(k), chain_options(o));
      std::size_t const rank = k * (k - 1) / 2 + 1 - k;
      s.guarded("size", [&] {
        auto const sz = S.size();
        if (rank == 0) {
          s.check(sz.kind == SizeKind::finite && sz.value == k * k,
                  "|PG(P)| = " + std::to_string(k * k) + " (got "
                      + sz.to_string() + ")");
        } else {
          s.check(sz.kind == SizeKind::infinite,
                  "PG(P) is infinite (got " + sz.to_string() + ")");
        }
      });
      auto const g = S.maximal_subgroup(0);
      s.check(g.abelian.free_rank == rank && g.abelian.torsion.empty(),
              "abelianization is free of rank " + std::to_string(rank)
                  + " (got " + g.abelian.to_string() + ")");
      s.check(rank == 0 ? g.classification.kind == GroupKind::trivial
                        : g.classification.kind == GroupKind::free
                              && g.classification.rank == rank,
              "maximal subgroup is free of rank " + std::to_string(rank)
                  + " (got " + g.classification.to_string() + ")");
    } else if (o.suite == "tl") {
      auto const     M   = tl_monoid(o.n);
      auto const     emb = projection_algebra_of(M.semigroup, {false});
      ChainSemigroup S(emb.algebra, chain_options(o));
      check_all_trivial(s, S);
      s.guarded("size", [&] {
        auto const sz = S.size();
        s.check(sz.kind == SizeKind::finite && sz.value == M.elements.size(),
                "|PG(P)| = |TL_n| = " + std::to_string(M.elements.size())
                    + " (got " + sz.to_string() + ")");
        check_extension(s, S, M.semigroup, emb.element_of, o.cap, true);
      });
      if (o.n >= 2) {
        auto const r = verify_tl_presentation(o.n);
        s.check(r.ok, "Temperley-Lieb presentation: " + r.to_string());
      }
    } else if (o.suite == "motzkin") {
      auto const     M   = motzkin_monoid(o.n);
      auto const     emb = projection_algebra_of(M.semigroup, {false});
      ChainSemigroup S(emb.algebra, chain_options(o));
      auto const     comps = components(S.complex());
      std::cout << "K_P': " << S.complex().vertices() << " vertices, "
                << comps.size() << " components\n";
      s.guarded("size", [&] {
        auto const sz = S.size();
        if (sz.kind == SizeKind::finite) {
          check_all_trivial(s, S);
          check_extension(s, S, M.semigroup, emb.element_of, o.cap, false);
        } else if (sz.kind == SizeKind::infinite) {
          std::cout << "PG(P) is infinite: " << sz.evidence << "\n";
          if (o.n == 4) {
            s.check(S.complex().vertices() == 35 && comps.size() == 11,
                    "35 vertices and 11 components");
            bool found = false;
            for (auto const& c : S.component_data()) {
              found = found
                      || (c.vertices.size() == 12
                          && c.group.abelian.free_rank == 1
                          && c.group.classification.kind == GroupKind::free
                          && c.group.classification.rank == 1);
            }
            s.check(found, "a 12-vertex component has group free of rank 1");
          }
        } else {
          s.inconclusive("size: " + sz.evidence);
        }
      });
    } else {
      throw Error("unknown suite '" + o.suite
                  + "' (expected kinyon, band, tl or motzkin)");
    }
    return s.status();
  }

  int cmd_export(Options const& o) {
    auto const src = load_source(o.source);
    json       j;
    if (o.what == "algebra") {
      j = io::to_json(src.algebra);
    } else if (o.what == "semigroup") {
      if (!src.semigroup) {
        throw Error("source " + src.name + " has no semigroup table");
      }
      j = io::to_json(*src.semigroup);
    } else if (o.what == "boset") {
      j = io::to_json(Boset(src.algebra));
    } else if (o.what == "cayley") {
      ChainSemigroup S(src.algebra, chain_options(o));
      j = io::to_json(cayley_table(S, o.cap).semigroup);
    } else if (o.what == "complex") {
      auto const K = pick_complex(src.algebra, o.which);
      if (o.format == "dot") {
        emit(o, to_dot(K, src.algebra));
        return 0;
      }
      j = io::to_json(K);
    } else {
      throw Error("--what must be algebra, semigroup, boset, cayley or "
                  "complex");
    }
    emit(o, dump(j));
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  Options o;
  if (char const* env = std::getenv("PGSEMI_BUDGET")) {
    try {
      o.budget = std::stoul(env);
    } catch (std::exception const&) {
      std::cerr << "ignoring malformed PGSEMI_BUDGET\n";
    }
  }

  CLI::App app{"Projection algebras and their chain semigroups"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool needs_source) {
    auto* s = sub->add_option("--source,-s", o.source,
                              "kinyon | band:k | tl:n | motzkin:n | brauer:n "
                              "| partial_brauer:n | partition:n | "
                              "adjacency:graph.json | algebra.json");
    if (needs_source) {
      s->required();
    }
    sub->add_option("--format,-f", o.format, "text | json | dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--output,-o", o.output, "write to a file");
    sub->add_option("--budget", o.budget,
                    "coset budget (default 50000 or $PGSEMI_BUDGET)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap", o.cap, "element cap for enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "seed for randomized checks");
  };

  std::map<std::string, std::function<int(Options const&)>> verbs;
  auto verb = [&](std::string const& name, std::string const& help,
                  std::function<int(Options const&)> f, bool needs_source = true) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, needs_source);
    verbs[name] = std::move(f);
    return sub;
  };

  verb("validate", "check the axioms and derived laws", cmd_validate);
  verb("build", "print the theta table", cmd_build);
  verb("relations", "list the order and friendliness relations", cmd_relations);
  verb("complex", "the graph G_P or the complexes K_P, K_P'", cmd_complex)
      ->add_option("--which", o.which, "GP | KP | KP'")
      ->check(CLI::IsMember({"GP", "KP", "KP'"}));
  verb("pi1", "fundamental groups of the components of K_P'", cmd_pi1);
  verb("enumerate", "list the elements of a finite PG(P)", cmd_enumerate);
  verb("size", "size of PG(P) with evidence", cmd_size);
  verb("subgroup", "maximal subgroup at a projection", cmd_subgroup)
      ->add_option("--projection,-p", o.projection, "label or index")
      ->required();
  {
    auto* sub = verb("presentations", "presentations of PG(P) or TL_n",
                     cmd_presentations, false);
    sub->add_option("--family", o.family, "RP | RE | RE2 | TL")
        ->check(CLI::IsMember({"RP", "RE", "RE2", "TL"}));
    sub->add_option("--n", o.n, "degree for the TL family");
  }
  {
    auto* sub = verb("verify", "run a named example suite", cmd_verify, false);
    sub->add_option("suite", o.suite, "kinyon | band | tl | motzkin")
        ->required()
        ->check(CLI::IsMember({"kinyon", "band", "tl", "motzkin"}));
    sub->add_option("--n", o.n, "degree or band size")
        ->check(CLI::PositiveNumber);
  }
  {
    auto* sub = verb("export", "write an artifact as JSON or DOT", cmd_export);
    sub->add_option("--what", o.what,
                    "algebra | semigroup | boset | cayley | complex");
    sub->add_option("--which", o.which, "GP | KP | KP' (for complex)");
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return EXIT_USAGE;
  }

  std::string const name = app.get_subcommands().front()->get_name();
  try {
    return verbs.at(name)(o);
  } catch (UndecidedEquality const& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return EXIT_INCONCLUSIVE;
  } catch (BudgetExceeded const& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return EXIT_INCONCLUSIVE;
  } catch (CapExceeded const& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return EXIT_INCONCLUSIVE;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_USAGE;
  }
}
