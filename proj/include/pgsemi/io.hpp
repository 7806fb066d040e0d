#pragma once

// JSON interchange for algebras, semigroups, graphs, paths, chains,
// complexes, presentations and bosets.

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "boset.hpp"
#include "chain_semigroup.hpp"
#include "complex.hpp"
#include "diagram.hpp"
#include "error.hpp"
#include "group.hpp"
#include "presentations.hpp"
#include "projection_algebra.hpp"
#include "star_semigroup.hpp"

namespace pgsemi::io {

  using json = nlohmann::json;

  inline json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path);
    }
    try {
      return json::parse(in);
    } catch (json::exception const& e) {
      throw MalformedTable(path + ": " + e.what());
    }
  }

  inline json to_json(ProjectionAlgebra const& P) {
    json j;
    j["size"]  = P.size();
    j["theta"] = P.theta_rows();
    if (!P.labels().empty()) {
      j["labels"] = P.labels();
    }
    return j;
  }

  inline ProjectionAlgebra algebra_from_json(json const& j) {
    try {
      auto const n     = j.at("size").get<std::size_t>();
      auto       theta = j.at("theta").get<std::vector<std::vector<proj_t>>>();
      if (theta.size() != n) {
        throw MalformedTable("theta must have size rows");
      }
      std::vector<std::string> labels;
      if (j.contains("labels")) {
        labels = j["labels"].get<std::vector<std::string>>();
      }
      return ProjectionAlgebra(std::move(theta), std::move(labels));
    } catch (json::exception const& e) {
      throw MalformedTable(std::string("bad algebra JSON: ") + e.what());
    }
  }

  inline json to_json(StarSemigroup const& S) {
    json j;
    j["size"] = S.size();
    j["mult"] = S.mult_rows();
    j["star"] = S.star_table();
    if (!S.labels().empty()) {
      j["labels"] = S.labels();
    }
    return j;
  }

  inline StarSemigroup semigroup_from_json(json const& j) {
    try {
      auto const n    = j.at("size").get<std::size_t>();
      auto       mult = j.at("mult").get<std::vector<std::vector<elem_t>>>();
      auto       star = j.at("star").get<std::vector<elem_t>>();
      if (mult.size() != n) {
        throw MalformedTable("mult must have size rows");
      }
      std::vector<std::string> labels;
      if (j.contains("labels")) {
        labels = j["labels"].get<std::vector<std::string>>();
      }
      return StarSemigroup(std::move(mult), std::move(star), std::move(labels));
    } catch (json::exception const& e) {
      throw MalformedTable(std::string("bad semigroup JSON: ") + e.what());
    }
  }

  inline json to_json(AdjacencyGraph const& G) {
    json j;
    j["vertices"] = G.vertices();
    j["edges"]    = json::array();
    for (auto [u, v] : G.edges()) {
      j["edges"].push_back({u, v});
    }
    return j;
  }

  // Loops are implied. Listing a loop explicitly is allowed.
  inline AdjacencyGraph graph_from_json(json const& j) {
    try {
      auto const n = j.at("vertices").get<std::size_t>();
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (auto const& e : j.at("edges")) {
        if (e.size() != 2) {
          throw MalformedTable("an edge must have two endpoints");
        }
        edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
      }
      return AdjacencyGraph(n, std::move(edges));
    } catch (json::exception const& e) {
      throw MalformedTable(std::string("bad graph JSON: ") + e.what());
    }
  }

  inline std::string digest_string(ProjectionAlgebra const& P) {
    std::ostringstream os;
    os << std::hex << P.digest();
    return os.str();
  }

  inline json to_json(Path const& p) {
    return {{"algebra", digest_string(p.algebra())}, {"vertices", p.vertices()}};
  }

  inline Path path_from_json(ProjectionAlgebra const& P, json const& j) {
    if (j.at("algebra").get<std::string>() != digest_string(P)) {
      throw NotAPath("path belongs to a different algebra");
    }
    return Path(P, j.at("vertices").get<std::vector<proj_t>>());
  }

  inline json to_json(ReducedChain const& c) {
    return {{"component", c.component},
            {"dom", c.dom},
            {"cod", c.cod},
            {"word", c.word}};
  }

  inline ReducedChain chain_from_json(json const& j) {
    ReducedChain c;
    c.component = j.at("component").get<std::size_t>();
    c.dom       = j.at("dom").get<proj_t>();
    c.cod       = j.at("cod").get<proj_t>();
    c.word      = j.at("word").get<GroupWord>();
    return c;
  }

  inline json to_json(Complex2 const& c) {
    json j;
    j["name"]     = c.name();
    j["vertices"] = c.vertices();
    j["edges"]    = json::array();
    for (auto [u, v] : c.edges()) {
      j["edges"].push_back({u, v});
    }
    j["cells"] = json::array();
    for (auto const& cell : c.cells()) {
      json src = json::array();
      for (auto const& lp : cell.sources) {
        src.push_back({{"p", lp.p}, {"e", lp.e}, {"f", lp.f}});
      }
      j["cells"].push_back({{"boundary", cell.boundary}, {"sources", src}});
    }
    j["components"] = components(c);
    return j;
  }

  inline json to_json(Abelianization const& a) {
    return {{"free_rank", a.free_rank}, {"torsion", a.torsion}};
  }

  inline json to_json(GroupPresentation const& g) {
    json j;
    j["generators"] = g.generators;
    j["relators"]   = g.relators;
    j["basepoint"]  = g.basepoint;
    j["generator_edges"] = g.generator_edges;
    return j;
  }

  inline json to_json(SimplifiedGroup const& g) {
    json j              = to_json(g.presentation);
    j["classification"] = {{"kind", kind_name(g.classification.kind)},
                           {"rank", g.classification.rank},
                           {"order", g.classification.order}};
    j["abelianization"] = to_json(g.abelian);
    return j;
  }

  inline json to_json(SemigroupPresentation const& p) {
    json j;
    j["alphabet"]  = p.alphabet;
    j["relations"] = json::array();
    for (auto const& r : p.relations) {
      j["relations"].push_back(
          {{"tag", r.tag}, {"lhs", r.lhs}, {"rhs", r.rhs}});
    }
    return j;
  }

  inline json to_json(Boset const& B) {
    json j;
    j["elements"] = B.elements();
    json left = json::array(), right = json::array(), prod = json::array();
    json star = json::array();
    for (std::size_t e = 0; e < B.size(); ++e) {
      star.push_back(B.star(e));
      for (std::size_t f = 0; f < B.size(); ++f) {
        if (B.left_arrow(e, f)) {
          left.push_back({e, f});
        }
        if (B.right_arrow(e, f)) {
          right.push_back({e, f});
        }
        if (auto ef = B.product(e, f)) {
          prod.push_back({e, f, *ef});
        }
      }
    }
    j["left_arrow"]     = left;
    j["right_arrow"]    = right;
    j["basic_products"] = prod;
    j["star"]           = star;
    return j;
  }

  inline json to_json(PartitionDiagram const& d) {
    return {{"degree", d.degree()}, {"blocks", d.signed_blocks()}};
  }

}  // namespace pgsemi::io
