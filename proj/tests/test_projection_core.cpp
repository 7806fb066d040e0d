#include <random>

#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace pgsemi;
using namespace testsupport;

namespace {
  // Theta table of A_Gamma from the definition: zero is projection 0,
  // vertex v is projection v + 1, and q theta_p = p q p.
  ProjectionAlgebra adjacency_oracle(AdjacencyGraph const& G) {
    std::size_t const n = G.vertices() + 1;
    std::vector<std::vector<proj_t>> theta(n, std::vector<proj_t>(n, 0));
    for (std::size_t p = 1; p < n; ++p) {
      for (std::size_t q = 1; q < n; ++q) {
        theta[p][q] = G.adjacent(p - 1, q - 1) ? p : 0;
      }
    }
    return ProjectionAlgebra(theta);
  }
}  // namespace

TEST_CASE("Kinyon algebra: axioms, order and friendliness", "[projection_core]") {
  auto const P = kinyon_algebra();
  REQUIRE(P.size() == 4);
  CHECK(validate_axioms(P).ok());
  CHECK(check_derived_laws(P).ok());
  proj_t const p = 0, q = 1, r = 2, e = 3;
  CHECK(P.act(r, e) == q);
  CHECK(P.leq(p, e));
  CHECK(P.leq(q, e));
  CHECK_FALSE(P.leq(r, e));
  CHECK(P.friendly(p, q));
  CHECK(P.friendly(q, r));
  CHECK(P.friendly(p, r));
  for (proj_t x : {p, q, r}) {
    CHECK_FALSE(P.friendly(x, e));
  }
  auto const rel = relations(P);
  CHECK(rel.friends(e) == std::vector<proj_t>{e});
  CHECK(rel.friends(p) == std::vector<proj_t>{p, q, r});
}

TEST_CASE("square bands: constant maps, everything friendly", "[projection_core]") {
  for (std::size_t k = 1; k <= 4; ++k) {
    auto const P = square_band_algebra(k);
    CHECK(validate_axioms(P).ok());
    CHECK(check_derived_laws(P).ok());
    for (proj_t a = 0; a < k; ++a) {
      for (proj_t b = 0; b < k; ++b) {
        CHECK(P.friendly(a, b));
        CHECK(P.leq(a, b) == (a == b));
      }
    }
  }
}

TEST_CASE("adjacency algebras match the definition", "[projection_core]") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    auto const G = random_graph(1 + rng() % 6, 0.5, rng);
    auto const P = adjacency_algebra(G);
    CHECK(P == adjacency_oracle(G));
    CHECK(validate_axioms(P).ok());
  }
}

TEST_CASE("composite identity on random tuples", "[projection_core]") {
  std::mt19937_64 rng(3);
  for (auto const& [name, P] : test_algebras()) {
    INFO(name);
    std::size_t const n = P.size();
    for (int t = 0; t < 300; ++t) {
      std::vector<proj_t> ps(1 + rng() % 4);
      for (auto& x : ps) {
        x = rng() % n;
      }
      std::vector<proj_t> const rev(ps.rbegin(), ps.rend());
      proj_t const q = rng() % n, s = rng() % n;
      proj_t const x = theta_chain(P, q, ps);
      // s theta_x = s theta_{pk} ... theta_{p1} theta_q theta_{p1} ... theta_{pk}
      proj_t const rhs = P.act_all(P.act(P.act_all(s, rev), q), ps);
      CHECK(P.act(s, x) == rhs);
    }
  }
}

TEST_CASE("validation rejects broken tables", "[projection_core]") {
  SECTION("identity maps break P3 and the order") {
    ProjectionAlgebra const P({{0, 1}, {0, 1}});
    auto const rep = validate_axioms(P);
    CHECK_FALSE(rep.ok());
    CHECK(rep.mentions("P3"));
    CHECK_THROWS_AS(relations(P), NotPartialOrder);
  }
  SECTION("theta_p not fixing p") {
    ProjectionAlgebra const P({{1, 1}, {1, 1}});
    CHECK(validate_axioms(P).mentions("P1"));
  }
  SECTION("malformed shapes") {
    CHECK_THROWS_AS(ProjectionAlgebra({{0, 1}, {0}}), MalformedTable);
    CHECK_THROWS_AS(ProjectionAlgebra({{0, 2}, {0, 1}}), MalformedTable);
    CHECK_THROWS_AS(ProjectionAlgebra(std::vector<std::vector<proj_t>>{}),
                    MalformedTable);
    CHECK_THROWS_AS(theta_chain(kinyon_algebra(), 9, {}), MalformedTable);
  }
}

TEST_CASE("morphisms of projection algebras", "[projection_core]") {
  auto const K = kinyon_algebra();
  CHECK(is_morphism(K, K, {0, 1, 2, 3}));
  CHECK_FALSE(is_morphism(K, K, {0, 1, 3, 2}));
  auto const B2 = square_band_algebra(2), B1 = square_band_algebra(1);
  CHECK(is_morphism(B2, B1, {0, 0}));
  CHECK(is_morphism(B2, B2, {1, 0}));
  CHECK_FALSE(is_morphism(B2, B1, {0}));
}

TEST_CASE("digest and equality ignore labels", "[projection_core]") {
  auto P = kinyon_algebra();
  auto Q = P;
  Q.set_labels({});
  CHECK(P == Q);
  CHECK(P.digest() == Q.digest());
  CHECK(P.digest() != square_band_algebra(4).digest());
}
