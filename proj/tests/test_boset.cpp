#include <random>

#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace pgsemi;
using namespace testsupport;

TEST_CASE("boset elements and involution", "[boset]") {
  for (auto const& [name, P] : test_algebras()) {
    INFO(name);
    Boset const B(P);
    std::size_t friendly = 0;
    for (proj_t p = 0; p < P.size(); ++p) {
      for (proj_t q = 0; q < P.size(); ++q) {
        friendly += P.friendly(p, q) ? 1 : 0;
      }
    }
    CHECK(B.size() == friendly);
    for (std::size_t e = 0; e < B.size(); ++e) {
      CHECK(B.star(B.star(e)) == e);
      CHECK(B.is_projection(e) == (B.star(e) == e));
      CHECK(B.left_arrow(e, e));
      CHECK(B.right_arrow(e, e));
    }
  }
}

TEST_CASE("arrows and basic products agree with PG(P)", "[boset]") {
  for (auto const& [name, P] : test_algebras()) {
    INFO(name);
    ChainSemigroup const S(P);
    Boset const          B(P);
    std::vector<ReducedChain> c;
    for (std::size_t e = 0; e < B.size(); ++e) {
      c.push_back(boset_chain(S, B, e));
    }
    for (std::size_t e = 0; e < B.size(); ++e) {
      for (std::size_t f = 0; f < B.size(); ++f) {
        auto const ef = S.product(c[e], c[f]);
        auto const fe = S.product(c[f], c[e]);
        CHECK(B.left_arrow(e, f) == (ef == c[e]));
        CHECK(B.right_arrow(e, f) == (fe == c[e]));
        if (auto x = B.product(e, f)) {
          CHECK(c[*x] == ef);
        }
      }
    }
    for (proj_t p = 0; p < P.size(); ++p) {
      for (proj_t q = 0; q < P.size(); ++q) {
        CHECK(c[e_of(P, B, p, q)]
              == S.product(S.projection(q), S.projection(p)));
      }
    }
  }
}

TEST_CASE("abstract sandwich sets match products in PG(P)", "[boset]") {
  for (auto const& [name, P] : test_algebras()) {
    if (P.size() > 12) {
      continue;  // cubic in |E|; the small algebras are enough here
    }
    INFO(name);
    ChainSemigroup const S(P);
    Boset const          B(P);
    for (std::size_t e = 0; e < B.size(); ++e) {
      for (std::size_t f = 0; f < B.size(); ++f) {
        CHECK(B.abstract_sandwich(e, f) == sandwich_set(S, B, e, f));
      }
    }
  }
}

TEST_CASE("projection algebra read back from the boset", "[boset]") {
  for (auto const& [name, P] : test_algebras()) {
    INFO(name);
    auto const Q = projection_algebra_of_boset(boset_of(P));
    CHECK(Q.theta_rows() == P.theta_rows());
  }
}

TEST_CASE("boset of PG(P) matches the idempotents of the semigroup", "[boset]") {
  auto const M   = tl_monoid(3);
  auto const emb = projection_algebra_of(M.semigroup);
  auto const phi = compare_with_semigroup_boset(emb.algebra, M.semigroup);
  CHECK(phi.size() == idempotents(M.semigroup).size());
  std::mt19937_64 rng(47);
  for (int t = 0; t < 5; ++t) {
    auto const S = adjacency_semigroup(random_graph(4, 0.5, rng));
    auto const P = projection_algebra_of(S).algebra;
    CHECK_NOTHROW(compare_with_semigroup_boset(P, S));
  }
  // a different algebra is rejected
  CHECK_THROWS_AS(compare_with_semigroup_boset(square_band_algebra(3),
                                               M.semigroup),
                  MismatchReport);
}
