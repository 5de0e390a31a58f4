#include "pipcat/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "pipcat/errors.hpp"

namespace pipcat::io {

namespace {

int parse_int(std::string_view token, int line) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("expected an integer, got '" + std::string(token) + "'", line);
    }
    return value;
}

int check_base(int base, int line) {
    if (base != 0 && base != 1) {
        throw ParseError("base must be 0 or 1, got " + std::to_string(base), line);
    }
    return base;
}

int to_label(int value, int base, int n, int line) {
    const int x = value - base;
    if (x < 0 || x >= n) {
        throw ParseError("label " + std::to_string(value) + " outside " + std::to_string(base) + ".." +
                             std::to_string(n - 1 + base),
                         line);
    }
    return x;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

std::vector<Pair> json_pairs(const json& j, const char* field, int base, int n) {
    std::vector<Pair> out;
    if (!j.contains(field)) {
        return out;
    }
    for (const auto& pair : j.at(field)) {
        if (!pair.is_array() || pair.size() != 2) {
            throw ParseError(std::string(field) + " entries must be [a, b] pairs", 0);
        }
        out.emplace_back(to_label(pair[0].get<int>(), base, n, 0), to_label(pair[1].get<int>(), base, n, 0));
    }
    return out;
}

std::string quoted(int x) { return "\"" + std::to_string(x) + "\""; }

constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

template <class F>
auto json_guard(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(e.what(), 0);
    }
}

}  // namespace

Pip parse_pip_text(std::string_view text, int default_base) {
    int base = check_base(default_base, 0);
    int n = -1;
    bool seen_relation = false;
    std::vector<Pair> covers;
    std::vector<Pair> incons;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto tok = tokens(line);
        if (tok.empty()) {
            continue;
        }
        const std::string_view kw = tok[0];
        if (kw == "base") {
            if (tok.size() != 2) {
                throw ParseError("expected 'base <0|1>'", line_no);
            }
            if (n >= 0 || seen_relation) {
                throw ParseError("'base' must come before 'pip'", line_no);
            }
            base = check_base(parse_int(tok[1], line_no), line_no);
        } else if (kw == "pip") {
            if (tok.size() != 2) {
                throw ParseError("expected 'pip <n>'", line_no);
            }
            if (n >= 0) {
                throw ParseError("duplicate 'pip' header", line_no);
            }
            n = parse_int(tok[1], line_no);
            if (n < 0) {
                throw ParseError("negative element count", line_no);
            }
        } else if (kw == "order" || kw == "incons") {
            if (tok.size() != 3) {
                throw ParseError("expected '" + std::string(kw) + " <a> <b>'", line_no);
            }
            if (n < 0) {
                throw ParseError("relation before the 'pip <n>' header", line_no);
            }
            const int a = to_label(parse_int(tok[1], line_no), base, n, line_no);
            const int b = to_label(parse_int(tok[2], line_no), base, n, line_no);
            (kw == "order" ? covers : incons).emplace_back(a, b);
            seen_relation = true;
        } else {
            throw ParseError("unknown record '" + std::string(kw) + "'", line_no);
        }
    }
    if (n < 0) {
        throw ParseError("missing 'pip <n>' header", 0);
    }
    return Pip::from_relations(n, covers, incons);
}

std::string write_pip_text(const Pip& p, int base) {
    std::ostringstream os;
    if (base != 0) {
        os << "base " << base << '\n';
    }
    os << "pip " << p.size() << '\n';
    for (auto [a, b] : p.cover_relations()) {
        os << "order " << a + base << ' ' << b + base << '\n';
    }
    for (auto [a, b] : p.minimal_inconsistencies()) {
        os << "incons " << a + base << ' ' << b + base << '\n';
    }
    return os.str();
}

Pip pip_from_json(const json& j, int default_base) {
    return json_guard([&] {
        const int base = check_base(j.value("base", default_base), 0);
        const int n = j.at("n").get<int>();
        if (n < 0) {
            throw ParseError("negative element count", 0);
        }
        return Pip::from_relations(n, json_pairs(j, "covers", base, n), json_pairs(j, "incons", base, n));
    });
}

json pip_to_json(const Pip& p, int base) {
    json j;
    j["n"] = p.size();
    if (base != 0) {
        j["base"] = base;
    }
    json covers = json::array();
    for (auto [a, b] : p.cover_relations()) {
        covers.push_back({a + base, b + base});
    }
    json incons = json::array();
    for (auto [a, b] : p.minimal_inconsistencies()) {
        incons.push_back({a + base, b + base});
    }
    j["covers"] = covers;
    j["incons"] = incons;
    return j;
}

Pip parse_pip(std::string_view text, int default_base) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        return pip_from_json(parse_json(text), default_base);
    }
    return parse_pip_text(text, default_base);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read " + path.string(), 0);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), 0);
    }
}

json simplicial_to_json(const SimplicialComplex& k, int base) {
    json j;
    const int n = k.vertices().empty() ? 0 : k.vertices().max() + 1;
    j["n"] = n;
    if (k.vertices() != ElementSet::range(n)) {
        json vs = json::array();
        for (int v : k.vertices()) {
            vs.push_back(v + base);
        }
        j["vertices"] = vs;
    }
    if (base != 0) {
        j["base"] = base;
    }
    json facets = json::array();
    for (ElementSet f : k.facets()) {
        json members = json::array();
        for (int v : f) {
            members.push_back(v + base);
        }
        facets.push_back(members);
    }
    j["facets"] = facets;
    return j;
}

SimplicialComplex simplicial_from_json(const json& j, int base) {
    return json_guard([&] {
        const int b = check_base(j.value("base", base), 0);
        const int n = j.at("n").get<int>();
        if (n < 0 || n > kMaxElements) {
            throw ParseError("vertex count out of range", 0);
        }
        ElementSet vertices = ElementSet::range(n);
        if (j.contains("vertices")) {
            vertices = ElementSet{};
            for (const auto& v : j.at("vertices")) {
                vertices.insert(to_label(v.get<int>(), b, n, 0));
            }
        }
        std::vector<ElementSet> facets;
        for (const auto& f : j.at("facets")) {
            ElementSet s;
            for (const auto& v : f) {
                s.insert(to_label(v.get<int>(), b, n, 0));
            }
            facets.push_back(s);
        }
        return SimplicialComplex::from_facets(vertices, facets);
    });
}

json abstract_to_json(const AbstractCubicalComplex& a) {
    json j;
    j["n"] = a.n_vertices();
    j["root"] = a.root();
    j["faces"] = a.faces();
    return j;
}

AbstractCubicalComplex abstract_from_json(const json& j) {
    return json_guard([&] {
        return AbstractCubicalComplex::create(j.at("n").get<int>(), j.at("faces").get<std::vector<std::vector<int>>>(),
                                              j.value("root", 0));
    });
}

json coloring_to_json(const SimplicialColoring& c, int base) {
    json j;
    j["r"] = c.r;
    json assignment = json::object();
    for (std::size_t v = 0; v < c.color.size(); ++v) {
        if (c.color[v] >= 0) {
            assignment[std::to_string(static_cast<int>(v) + base)] = c.color[v] + 1;
        }
    }
    j["assignment"] = assignment;
    return j;
}

SimplicialColoring simplicial_coloring_from_json(const json& j, int base) {
    return json_guard([&] {
        SimplicialColoring c;
        c.r = j.at("r").get<int>();
        for (const auto& [key, value] : j.at("assignment").items()) {
            const int v = parse_int(key, 0) - base;
            if (v < 0 || v >= kMaxElements) {
                throw ParseError("vertex label " + key + " out of range", 0);
            }
            if (c.color.size() <= static_cast<std::size_t>(v)) {
                c.color.resize(static_cast<std::size_t>(v) + 1, -1);
            }
            c.color[static_cast<std::size_t>(v)] = value.get<int>() - 1;
        }
        return c;
    });
}

std::string bitstring(std::uint64_t label, int r) {
    std::string s;
    for (int i = 0; i < r; ++i) {
        s += ((label >> i) & 1U) ? '1' : '0';
    }
    return s;
}

json coloring_to_json(const CubicalColoring& c) {
    json j;
    j["r"] = c.r;
    json assignment = json::object();
    for (std::size_t v = 0; v < c.label.size(); ++v) {
        assignment[std::to_string(v)] = bitstring(c.label[v], c.r);
    }
    j["assignment"] = assignment;
    return j;
}

CubicalColoring cubical_coloring_from_json(const json& j) {
    return json_guard([&] {
        CubicalColoring c;
        c.r = j.at("r").get<int>();
        if (c.r < 0 || c.r > kMaxColors) {
            throw ParseError("colour count out of range", 0);
        }
        for (const auto& [key, value] : j.at("assignment").items()) {
            const int v = parse_int(key, 0);
            const auto bits = value.get<std::string>();
            if (v < 0 || static_cast<int>(bits.size()) != c.r) {
                throw ParseError("bad label for vertex " + key, 0);
            }
            std::uint64_t label = 0;
            for (int i = 0; i < c.r; ++i) {
                if (bits[static_cast<std::size_t>(i)] == '1') {
                    label |= std::uint64_t{1} << i;
                } else if (bits[static_cast<std::size_t>(i)] != '0') {
                    throw ParseError("bad label for vertex " + key, 0);
                }
            }
            if (c.label.size() <= static_cast<std::size_t>(v)) {
                c.label.resize(static_cast<std::size_t>(v) + 1, 0);
            }
            c.label[static_cast<std::size_t>(v)] = label;
        }
        return c;
    });
}

std::string coloring_lines(const SimplicialColoring& c, int base) {
    std::ostringstream os;
    for (std::size_t v = 0; v < c.color.size(); ++v) {
        if (c.color[v] >= 0) {
            os << static_cast<int>(v) + base << ':' << c.color[v] + 1 << '\n';
        }
    }
    return os.str();
}

std::string coloring_lines(const CubicalColoring& c) {
    std::ostringstream os;
    for (std::size_t v = 0; v < c.label.size(); ++v) {
        os << v << ':' << bitstring(c.label[v], c.r) << '\n';
    }
    return os.str();
}

std::string hasse_dot(const Pip& p, int base) {
    std::ostringstream os;
    os << "graph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (int x = 0; x < p.size(); ++x) {
        os << "  " << quoted(x + base) << ";\n";
    }
    for (auto [a, b] : p.cover_relations()) {
        os << "  " << quoted(a + base) << " -- " << quoted(b + base) << ";\n";
    }
    for (auto [a, b] : p.minimal_inconsistencies()) {
        os << "  " << quoted(a + base) << " -- " << quoted(b + base) << " [style=dashed];\n";
    }
    os << "}\n";
    return os.str();
}

std::string graph_dot(const SimplicialComplex& k, int base) {
    std::ostringstream os;
    os << "graph crossing {\n  node [shape=circle];\n";
    for (int v : k.vertices()) {
        os << "  " << quoted(v + base) << ";\n";
    }
    for (auto [a, b] : k.edges()) {
        os << "  " << quoted(a + base) << " -- " << quoted(b + base) << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string skeleton_dot(const CubicalComplex& x, int base) {
    std::ostringstream os;
    os << "graph skeleton {\n  node [shape=point];\n";
    for (std::size_t v = 0; v < x.vertices().size(); ++v) {
        os << "  v" << v << " [xlabel=\"" << x.vertices()[v].to_string(base) << "\"];\n";
    }
    for (const auto& e : x.edges()) {
        os << "  v" << e.lower << " -- v" << e.upper << " [color=\"" << kPalette[static_cast<std::size_t>(e.element) % kPalette.size()]
           << "\", label=\"" << e.element + base << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string simplicial_faces_dump(const SimplicialComplex& k, int base) {
    std::vector<std::vector<int>> faces;
    for (ElementSet f : k.faces()) {
        faces.push_back(f.members());
    }
    std::sort(faces.begin(), faces.end());
    std::ostringstream os;
    for (const auto& f : faces) {
        os << ElementSet::from_members(f).to_string(base) << '\n';
    }
    return os.str();
}

std::string cubical_faces_dump(const CubicalComplex& x, int base) {
    std::ostringstream os;
    for (const auto& f : x.faces()) {
        os << f.downset.to_string(base) << ' ' << f.directions.to_string(base) << '\n';
    }
    return os.str();
}

std::string fvector_string(const std::vector<std::size_t>& f) {
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(f[i]);
    }
    return out;
}

}  // namespace pipcat::io
