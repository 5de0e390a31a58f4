#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pipcat/abstract_cubical.hpp"
#include "pipcat/coloring.hpp"
#include "pipcat/cubical.hpp"
#include "pipcat/pip.hpp"
#include "pipcat/simplicial.hpp"

namespace pipcat::io {

using nlohmann::json;

/// Text format, one record per line:
///
///   # comment
///   base 1          (optional; labels below are 1-based)
///   pip 7
///   order 1 3       (a cover a < b)
///   incons 3 7      (a minimal inconsistent pair)
///
/// `default_base` applies when the file has no `base` line. Errors are
/// ParseError carrying the line number; relation errors from closure keep
/// their own type.
Pip parse_pip_text(std::string_view text, int default_base = 0);
std::string write_pip_text(const Pip& p, int base = 0);

/// {"n": 7, "covers": [[a,b],...], "incons": [[a,b],...], "base": 1?}
Pip pip_from_json(const json& j, int default_base = 0);
json pip_to_json(const Pip& p, int base = 0);

/// Reads either format, choosing JSON when the first non-blank character is '{'.
Pip parse_pip(std::string_view text, int default_base = 0);

std::string read_file(const std::filesystem::path& path);
/// JSON parse with failures reported as ParseError.
json parse_json(std::string_view text);

/// {"n": count, "facets": [[...], ...]} with labels offset by `base`.
json simplicial_to_json(const SimplicialComplex& k, int base = 0);
SimplicialComplex simplicial_from_json(const json& j, int base = 0);

/// {"n": vertices, "faces": [[...], ...], "root": r}; vertex indices are 0-based.
json abstract_to_json(const AbstractCubicalComplex& a);
AbstractCubicalComplex abstract_from_json(const json& j);

/// {"r": r, "assignment": {"<label>": colour 1..r}}.
json coloring_to_json(const SimplicialColoring& c, int base = 0);
SimplicialColoring simplicial_coloring_from_json(const json& j, int base = 0);
/// {"r": r, "assignment": {"<vertex>": "0101"}}, character j = coordinate j+1.
json coloring_to_json(const CubicalColoring& c);
CubicalColoring cubical_coloring_from_json(const json& j);

std::string bitstring(std::uint64_t label, int r);
std::string coloring_lines(const SimplicialColoring& c, int base = 0);
std::string coloring_lines(const CubicalColoring& c);

/// Solid edges for covers, dashed for minimal inconsistent pairs.
std::string hasse_dot(const Pip& p, int base = 0);
/// Underlying graph of a simplicial complex.
std::string graph_dot(const SimplicialComplex& k, int base = 0);
/// 1-skeleton, edges coloured and labelled by hyperplane element.
std::string skeleton_dot(const CubicalComplex& x, int base = 0);

/// One face per line, lexicographic on sorted member lists.
std::string simplicial_faces_dump(const SimplicialComplex& k, int base = 0);
/// One "I M" line per face C(I, M), in face order.
std::string cubical_faces_dump(const CubicalComplex& x, int base = 0);

std::string fvector_string(const std::vector<std::size_t>& f);

}  // namespace pipcat::io
