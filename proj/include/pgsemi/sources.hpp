#pragma once

// Named sources: kinyon, band:k, tl:n, motzkin:n, brauer:n, partition:n,
// adjacency:<graph.json>, or a path to an algebra JSON file.

#include <cstddef>
#include <optional>
#include <string>

#include "diagram.hpp"
#include "error.hpp"
#include "io.hpp"
#include "projection_algebra.hpp"
#include "star_semigroup.hpp"

namespace pgsemi {

  struct Source {
    std::string                  name;
    ProjectionAlgebra            algebra;
    std::optional<StarSemigroup> semigroup;  // when built from one
  };

  namespace detail {
    inline std::size_t parse_count(std::string const& s,
                                   std::string const& what) {
      std::size_t pos = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(s, &pos);
      } catch (std::exception const&) {
        pos = 0;
      }
      if (pos != s.size() || s.empty()) {
        throw Error("bad " + what + " '" + s + "'");
      }
      return v;
    }

    inline Source from_semigroup(std::string name, StarSemigroup S) {
      auto emb = projection_algebra_of(S, {false});
      return {std::move(name), std::move(emb.algebra), std::move(S)};
    }
  }  // namespace detail

  inline Source load_source(std::string const& spec) {
    auto const colon = spec.find(':');
    std::string const kind = spec.substr(0, colon);
    std::string const arg
        = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (spec == "kinyon") {
      return {spec, kinyon_algebra(), std::nullopt};
    }
    if (kind == "band" && colon != std::string::npos) {
      auto const k = detail::parse_count(arg, "band size");
      if (k == 0) {
        throw Error("band size must be positive");
      }
      return {spec, square_band_algebra(k), std::nullopt};
    }
    if (kind == "adjacency" && colon != std::string::npos) {
      auto G = io::graph_from_json(io::read_json_file(arg));
      return detail::from_semigroup(spec, adjacency_semigroup(G));
    }
    static std::pair<char const*, DiagramFamily> const families[]
        = {{"tl", DiagramFamily::temperley_lieb},
           {"motzkin", DiagramFamily::motzkin},
           {"brauer", DiagramFamily::brauer},
           {"partial_brauer", DiagramFamily::partial_brauer},
           {"partition", DiagramFamily::partition}};
    for (auto const& [prefix, fam] : families) {
      if (kind == prefix && colon != std::string::npos) {
        auto const n = detail::parse_count(arg, "degree");
        auto       M = diagram_monoid(fam, n);
        return detail::from_semigroup(spec, std::move(M.semigroup));
      }
    }
    // otherwise a JSON file: an algebra, or a semigroup table
    auto j = io::read_json_file(spec);
    if (j.contains("theta")) {
      return {spec, io::algebra_from_json(j), std::nullopt};
    }
    if (j.contains("mult")) {
      return detail::from_semigroup(spec, io::semigroup_from_json(j));
    }
    throw MalformedTable(spec + " is neither an algebra nor a semigroup");
  }

}  // namespace pgsemi
