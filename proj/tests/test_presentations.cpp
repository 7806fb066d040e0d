#include <random>

#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace pgsemi;
using namespace testsupport;

namespace {
  bool same_relation(Relation const& a, Relation const& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
}  // namespace

TEST_CASE("shape of the presentations", "[presentations]") {
  auto const K  = kinyon_algebra();
  auto const RP = presentation_RP(K);
  CHECK(RP.alphabet.size() == 4);
  CHECK(RP.count("R1") == 4);
  CHECK(RP.count("R2") == 16);
  CHECK(RP.count("R3") == 16);
  CHECK_NOTHROW(RP.check());

  auto const B2 = square_band_algebra(2);
  auto const RE = presentation_RE(B2);
  CHECK(RE.alphabet.size() == 4);
  CHECK(RE.count("R2'") == 4);

  auto const T3 = tl_presentation(3);
  CHECK(T3.alphabet.size() == 3);
  CHECK(T3.count("T2") == 0);
  CHECK(T3.count("T3") == 2);
  auto const T4 = tl_presentation(4);
  REQUIRE(T4.count("T2") == 1);
  for (auto const& r : T4.relations) {
    if (r.tag == "T2") {
      CHECK(r.lhs == SemigroupWord{1, 3});
      CHECK(r.rhs == SemigroupWord{3, 1});
    }
  }
  CHECK_THROWS_AS(tl_presentation(1), InfeasibleDegree);
  CHECK(RP.to_text().find("R3: x[p] x[r] x[p] = x[p]") != std::string::npos);
}

TEST_CASE("R3'' relations are among the R2' relations", "[presentations]") {
  for (auto const& [name, P] : test_algebras()) {
    if (P.size() > 12) {
      continue;
    }
    INFO(name);
    ChainSemigroup const S(P);
    auto const RE  = presentation_RE(P);
    auto const RE2 = presentation_RE2(S);
    std::size_t r3 = 0;
    for (auto const& r : RE2.relations) {
      if (r.tag != "R3''") {
        continue;
      }
      ++r3;
      CHECK(std::any_of(RE.relations.begin(), RE.relations.end(),
                        [&](Relation const& x) {
                          return x.tag == "R2'" && same_relation(x, r);
                        }));
    }
    CHECK(r3 <= RE.count("R2'"));
  }
}

TEST_CASE("soundness of all three families", "[presentations]") {
  for (auto const& [name, P] : test_algebras()) {
    if (P.size() > 12) {
      continue;
    }
    INFO(name);
    ChainSemigroup const S(P);
    auto const a = verify_presentation(S, presentation_RP(P),
                                       projection_letters(S),
                                       VerifyMode::soundness);
    CHECK(a.ok);
    auto const b = verify_presentation(S, presentation_RE(P), pair_letters(S),
                                       VerifyMode::soundness);
    CHECK(b.ok);
    auto const c = verify_presentation(S, presentation_RE2(S), pair_letters(S),
                                       VerifyMode::soundness);
    CHECK(c.ok);
  }
}

TEST_CASE("size mode", "[presentations]") {
  {
    ChainSemigroup const S(kinyon_algebra());
    auto const r = verify_presentation(S, presentation_RP(S.algebra()),
                                       projection_letters(S), VerifyMode::size);
    CHECK(r.ok);
    CHECK(r.classes == 10);
  }
  {
    ChainSemigroup const S(square_band_algebra(2));
    auto const r = verify_presentation(S, presentation_RP(S.algebra()),
                                       projection_letters(S), VerifyMode::size);
    CHECK(r.ok);
    CHECK(r.classes == 4);
  }
  {
    ChainSemigroup const S(diagram_algebra(DiagramFamily::temperley_lieb, 3));
    auto const r = verify_presentation(S, presentation_RP(S.algebra()),
                                       projection_letters(S), VerifyMode::size);
    CHECK(r.classes == 5);
    auto const t = verify_tl_presentation(3);
    CHECK(t.ok);
    CHECK(t.classes == 5);
  }
  {
    // an infinite PG(P) is reported inconclusive, never as a pass
    ChainSemigroup const S(square_band_algebra(3));
    auto const r = verify_presentation(S, presentation_RP(S.algebra()),
                                       projection_letters(S), VerifyMode::size);
    CHECK_FALSE(r.ok);
    CHECK(r.inconclusive);
  }
  for (std::size_t n = 2; n <= 5; ++n) {
    auto const t = verify_tl_presentation(n);
    CHECK(t.ok);
    CHECK(t.classes == catalan(n));
  }
}

TEST_CASE("semigroup coset enumeration", "[presentations]") {
  // <a | a^3 = a> has two elements, a and a^2
  SemigroupPresentation p;
  p.alphabet  = {"a"};
  p.relations = {{{0, 0, 0}, {0}, "r"}};
  auto const g = semigroup_todd_coxeter(p);
  REQUIRE(g);
  CHECK(g->classes() == 2);
  // a free monogenic semigroup is infinite and exhausts any budget
  SemigroupPresentation f;
  f.alphabet = {"a"};
  CHECK_FALSE(semigroup_todd_coxeter(f, 50));
}

TEST_CASE("words to friendly paths", "[presentations]") {
  std::mt19937_64 rng(53);
  for (auto const& [name, P] : test_algebras()) {
    INFO(name);
    ChainSemigroup const S(P);
    for (proj_t p = 0; p < P.size(); ++p) {
      CHECK(word_to_friendly_path(P, {p}).vertices()
            == std::vector<proj_t>{p});
      for (proj_t q = 0; q < P.size(); ++q) {
        if (P.friendly(p, q)) {
          CHECK(word_to_friendly_path(P, {p, q}).vertices()
                == std::vector<proj_t>{p, q});
        }
      }
    }
    for (int t = 0; t < 300; ++t) {
      std::vector<proj_t> w(1 + rng() % 7);
      for (auto& x : w) {
        x = rng() % P.size();
      }
      auto const path = word_to_friendly_path(P, w);  // checked: friendly
      for (std::size_t i = 0; i < w.size(); ++i) {
        CHECK(P.leq(path[i], w[i]));
      }
      std::vector<ReducedChain> xs;
      for (auto x : w) {
        xs.push_back(S.projection(x));
      }
      CHECK(S.normalize(path) == S.product(xs));
    }
  }
  CHECK_THROWS(word_to_friendly_path(kinyon_algebra(), {}));
}

TEST_CASE("normal form mode", "[presentations]") {
  ChainSemigroup const S(kinyon_algebra());
  auto const r = verify_presentation(S, presentation_RP(S.algebra()),
                                     projection_letters(S),
                                     VerifyMode::normal_form);
  CHECK(r.ok);
  CHECK(r.checked > 0);
  CHECK_THROWS(verify_presentation(S, presentation_RE(S.algebra()),
                                   pair_letters(S), VerifyMode::normal_form));
}
