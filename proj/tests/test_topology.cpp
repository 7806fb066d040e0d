#include <cmath>
#include <random>

#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace pgsemi;
using namespace testsupport;

namespace {
  GroupWord W(std::initializer_list<int> xs) {
    return GroupWord(xs);
  }

  // Rank over the rationals by elimination with partial pivoting.
  std::size_t rational_rank(std::vector<std::vector<double>> A) {
    std::size_t rank = 0;
    std::size_t const cols = A.empty() ? 0 : A[0].size();
    for (std::size_t c = 0; c < cols && rank < A.size(); ++c) {
      std::size_t piv = rank;
      for (std::size_t i = rank; i < A.size(); ++i) {
        if (std::fabs(A[i][c]) > std::fabs(A[piv][c])) {
          piv = i;
        }
      }
      if (std::fabs(A[piv][c]) < 1e-9) {
        continue;
      }
      std::swap(A[rank], A[piv]);
      for (std::size_t i = 0; i < A.size(); ++i) {
        if (i != rank) {
          double const f = A[i][c] / A[rank][c];
          for (std::size_t j = c; j < cols; ++j) {
            A[i][j] -= f * A[rank][j];
          }
        }
      }
      ++rank;
    }
    return rank;
  }

  // First Betti number of one component of a 2-complex: cycles in the
  // graph minus the rank of the cellular boundary map.
  std::size_t betti1(Complex2 const& K, std::vector<proj_t> const& comp) {
    std::set<proj_t> in(comp.begin(), comp.end());
    std::map<std::pair<proj_t, proj_t>, std::size_t> col;
    for (auto [u, v] : K.edges()) {
      if (in.count(u)) {
        col.emplace(std::make_pair(u, v), col.size());
      }
    }
    std::vector<std::vector<double>> rows;
    for (auto const& c : K.cells()) {
      if (!in.count(c.boundary.front())) {
        continue;
      }
      std::vector<double> row(col.size(), 0.0);
      for (std::size_t i = 0; i + 1 < c.boundary.size(); ++i) {
        proj_t u = c.boundary[i], v = c.boundary[i + 1];
        row[col.at({std::min(u, v), std::max(u, v)})] += u < v ? 1 : -1;
      }
      rows.push_back(row);
    }
    return col.size() - comp.size() + 1 - rational_rank(rows);
  }

  // Order of the permutation group generated by gens, by closure.
  std::size_t perm_group_order(std::vector<std::vector<int>> const& gens) {
    std::set<std::vector<int>> seen;
    std::vector<int> id(gens[0].size());
    for (std::size_t i = 0; i < id.size(); ++i) {
      id[i] = static_cast<int>(i);
    }
    std::vector<std::vector<int>> todo{id};
    seen.insert(id);
    while (!todo.empty()) {
      auto x = todo.back();
      todo.pop_back();
      for (auto const& g : gens) {
        std::vector<int> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
          y[i] = g[x[i]];
        }
        if (seen.insert(y).second) {
          todo.push_back(y);
        }
      }
    }
    return seen.size();
  }
}  // namespace

TEST_CASE("free words", "[topology]") {
  CHECK(free_reduce(W({1, -1, 2})) == W({2}));
  CHECK(free_reduce(W({1, 2, -2, -1})).empty());
  CHECK(invert(W({1, -2})) == W({2, -1}));
  CHECK(cyclic_reduce(W({-1, 2, 1})) == W({2}));
  CHECK(canonical_relator(W({2, 1})) == canonical_relator(W({1, 2})));
  CHECK(canonical_relator(W({-1, -2})) == canonical_relator(W({1, 2})));
}

TEST_CASE("Smith normal form", "[topology]") {
  GroupPresentation g;
  g.generators = 2;
  g.relators   = {W({1, 1, 2, 2, 2, 2}), W({1, 1, 1, 1, 2, 2})};
  auto const a = abelianization(g);
  CHECK(a.free_rank == 0);
  CHECK(a.torsion == std::vector<std::int64_t>{2, 6});
  GroupPresentation z2;
  z2.generators = 2;
  z2.relators   = {W({1, 2, -1, -2})};
  CHECK(abelianization(z2).free_rank == 2);
  CHECK(abelianization(z2).torsion.empty());
}

TEST_CASE("coset enumeration against permutation groups", "[topology]") {
  struct Case {
    GroupPresentation             g;
    std::vector<std::vector<int>> perms;  // images of the generators
  };
  auto pres = [](std::size_t n, std::vector<GroupWord> r) {
    GroupPresentation g;
    g.generators = n;
    g.relators   = std::move(r);
    return g;
  };
  std::vector<Case> cases;
  // S3 = <a, b | a^2, b^3, (ab)^2>
  cases.push_back({pres(2, {W({1, 1}), W({2, 2, 2}), W({1, 2, 1, 2})}),
                   {{1, 0, 2}, {1, 2, 0}}});
  // Klein four
  cases.push_back({pres(2, {W({1, 1}), W({2, 2}), W({1, 2, 1, 2})}),
                   {{1, 0, 3, 2}, {2, 3, 0, 1}}});
  // cyclic of order 7
  cases.push_back({pres(1, {W({1, 1, 1, 1, 1, 1, 1})}),
                   {{1, 2, 3, 4, 5, 6, 0}}});
  // dihedral of order 10
  cases.push_back(
      {pres(2, {W({1, 1, 1, 1, 1}), W({2, 2}), W({2, 1, 2, 1})}),
       {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}}});
  // quaternion group <a,b | a^4, a^2 b^-2, b^-1 a b a>, as permutations of
  // the eight units
  cases.push_back(
      {pres(2, {W({1, 1, 1, 1}), W({1, 1, -2, -2}), W({-2, 1, 2, 1})}),
       {{2, 3, 1, 0, 7, 6, 4, 5}, {4, 5, 6, 7, 1, 0, 3, 2}}});
  for (auto const& c : cases) {
    auto const T = todd_coxeter(c.g);
    REQUIRE(T);
    CHECK(T->size() == perm_group_order(c.perms));
    auto const s = tietze_simplify(c.g);
    CHECK(s.classification.order == perm_group_order(c.perms));
    CHECK(s.classification.kind == GroupKind::finite);
    // the solver identifies words with the same action on cosets
    WordSolver const solver(s);
    CHECK(solver.normalize(s.presentation.relators.empty()
                               ? GroupWord{}
                               : s.presentation.relators.front())
          == GroupWord{});
  }
}

TEST_CASE("Tietze simplification", "[topology]") {
  GroupPresentation g;
  g.generators = 3;
  g.relators   = {W({1, 2}), W({2, 3, -1})};
  auto const s = tietze_simplify(g);
  CHECK(s.classification.kind == GroupKind::free);
  CHECK(s.classification.rank == 1);
  CHECK(s.infinite());
  // substituted words still satisfy the original relators
  for (auto const& r : g.relators) {
    CHECK(detail::substitute(r, s.substitution).empty());
  }
  GroupPresentation t;
  t.generators = 2;
  t.relators   = {W({1}), W({1, 2})};
  auto const ts = tietze_simplify(t);
  CHECK(ts.classification.kind == GroupKind::trivial);
  GroupPresentation zz;
  zz.generators = 2;
  zz.relators   = {W({1, 2, -1, -2})};
  CHECK(tietze_simplify(zz).classification.kind == GroupKind::unknown);
  CHECK_FALSE(WordSolver(tietze_simplify(zz)).normalize(W({1})));
}

TEST_CASE("small complexes", "[topology]") {
  auto const K = kinyon_algebra();
  auto const G = friendliness_graph(K);
  CHECK(G.vertices() == 4);
  CHECK(G.edges().size() == 3);
  auto const Kp = complex_KP_prime(K);
  REQUIRE(Kp.cells().size() == 1);
  std::vector<proj_t> b(Kp.cells()[0].boundary.begin(),
                        Kp.cells()[0].boundary.end() - 1);
  std::sort(b.begin(), b.end());
  CHECK(b == std::vector<proj_t>{0, 1, 2});
  CHECK(components(Kp).size() == 2);
  CHECK(complex_KP(K).cells().size() == 1);

  auto const B3 = complex_KP_prime(square_band_algebra(3));
  CHECK(B3.edges().size() == 3);
  CHECK(B3.cells().empty());
  auto const pd = pi1_presentation(B3, components(B3)[0], 0);
  CHECK(pd.presentation.generators == 1);
  CHECK(tietze_simplify(pd.presentation).classification.rank == 1);

  auto const dot = to_dot(Kp, K);
  CHECK(dot.find("subgraph cluster_0") != std::string::npos);
  CHECK(dot.find("v0 -- v1") != std::string::npos);
}

TEST_CASE("Euler characteristic and homology", "[topology]") {
  for (auto const& [name, P] : test_algebras()) {
    INFO(name);
    auto const Kp = complex_KP_prime(P);
    auto const K  = complex_KP(P);
    CHECK(K.edges() == Kp.edges());
    auto const comps = components(Kp);
    for (auto const& comp : comps) {
      std::size_t edges = 0;
      for (auto [u, v] : Kp.edges()) {
        edges += std::binary_search(comp.begin(), comp.end(), u) ? 1 : 0;
      }
      auto const pd  = pi1_presentation(Kp, comp, comp.front());
      auto const pdq = pi1_presentation(K, comp, comp.front());
      // one generator per edge outside a spanning tree
      CHECK(pd.presentation.generators == edges - comp.size() + 1);
      auto const a  = abelianization(pd.presentation);
      auto const aq = abelianization(pdq.presentation);
      CHECK(a.free_rank == betti1(Kp, comp));
      CHECK(aq.free_rank == betti1(K, comp));
      // both complexes have the same fundamental group
      CHECK(a == aq);
      auto const s = tietze_simplify(pd.presentation);
      CHECK(s.abelian == a);
    }
  }
}

TEST_CASE("quad cells follow from triangles", "[topology]") {
  for (auto const& [name, P] : test_algebras()) {
    INFO(name);
    for (auto const& lp : enumerate_linked_pairs(P)) {
      if (classify_linked_pair(P, lp).type == 1) {
        CHECK(check_quad_from_triangles(P, lp) == "");
      }
    }
  }
}
