#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include "pipcat/abstract_cubical.hpp"
#include "pipcat/checks.hpp"
#include "pipcat/coloring.hpp"
#include "pipcat/cubical.hpp"
#include "pipcat/errors.hpp"
#include "pipcat/io.hpp"
#include "pipcat/poly.hpp"
#include "pipcat/simplicial.hpp"

using namespace pipcat;
using nlohmann::json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

struct Common {
    std::string input;
    std::string format = "text";
    bool one_based = false;

    int base() const { return one_based ? 1 : 0; }
};

void add_common(CLI::App* cmd, Common& c, bool dot = false) {
    cmd->add_option("input", c.input, "PIP file (text or JSON)")->required();
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember(dot ? std::vector<std::string>{"json", "text", "dot"}
                                  : std::vector<std::string>{"json", "text"}));
    cmd->add_flag("--one-based", c.one_based, "Read and print element labels starting at 1");
}

Pip load_pip(const Common& c) { return io::parse_pip(io::read_file(c.input), c.base()); }

bool is_complex_json(const std::string& text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos || text[pos] != '{') {
        return false;
    }
    return io::parse_json(text).contains("faces");
}

json strings(const std::vector<ElementSet>& sets, int base) {
    json out = json::array();
    for (ElementSet s : sets) {
        out.push_back(s.to_string(base));
    }
    return out;
}

json bigints(const IntPolynomial& p) {
    json out = json::array();
    for (const auto& c : p.coefficients()) {
        out.push_back(c.str());
    }
    return out;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_validate(const Common& c) {
    const std::string text = io::read_file(c.input);
    if (is_complex_json(text)) {
        const auto a = io::abstract_from_json(io::parse_json(text));
        const auto f = a.f_vector();
        if (c.format == "json") {
            print({{"kind", "complex"}, {"vertices", a.n_vertices()}, {"dimension", a.dimension()}, {"f_vector", f}});
        } else {
            std::cout << "valid cubical complex: " << a.n_vertices() << " vertices, dimension " << a.dimension()
                      << ", f = " << io::fvector_string(f) << '\n';
        }
        return 0;
    }
    const Pip p = io::parse_pip(text, c.base());
    if (c.format == "json") {
        print({{"kind", "pip"},
               {"n", p.size()},
               {"covers", p.cover_relations().size()},
               {"minimal_inconsistencies", p.minimal_inconsistencies().size()}});
    } else {
        std::cout << "valid PIP: " << p.size() << " elements, " << p.cover_relations().size() << " covers, "
                  << p.minimal_inconsistencies().size() << " minimal inconsistent pairs\n";
    }
    return 0;
}

int cmd_build(const Common& c) {
    const Pip p = load_pip(c);
    const auto x = CubicalComplex::build(p);
    const auto delta = crossing_complex(p);
    if (c.format == "json") {
        json faces = json::array();
        for (const auto& f : x.faces()) {
            faces.push_back({f.downset.to_string(c.base()), f.directions.to_string(c.base())});
        }
        print({{"vertices", strings(x.vertices(), c.base())},
               {"faces", faces},
               {"f_vector", x.f_vector()},
               {"crossing_faces", strings(delta.faces(), c.base())},
               {"crossing_f_vector", delta.f_vector()},
               {"complex", io::abstract_to_json(to_abstract(x))}});
        return 0;
    }
    std::cout << "vertices " << x.vertices().size() << '\n';
    for (ElementSet v : x.vertices()) {
        std::cout << "  " << v.to_string(c.base()) << '\n';
    }
    std::cout << "faces " << x.faces().size() << " (I M)\n";
    std::istringstream dump(io::cubical_faces_dump(x, c.base()));
    for (std::string line; std::getline(dump, line);) {
        std::cout << "  " << line << '\n';
    }
    std::cout << "f-vector " << io::fvector_string(x.f_vector()) << '\n';
    std::cout << "crossing faces " << delta.faces().size() << '\n';
    std::istringstream cdump(io::simplicial_faces_dump(delta, c.base()));
    for (std::string line; std::getline(cdump, line);) {
        std::cout << "  " << line << '\n';
    }
    return 0;
}

int cmd_crossing(const Common& c) {
    const Pip p = load_pip(c);
    const auto delta = crossing_complex(p);
    if (c.format == "json") {
        json j = io::simplicial_to_json(delta, c.base());
        j["f_vector"] = delta.f_vector();
        j["flag"] = is_flag(delta);
        j["components"] = connected_components(delta).size();
        print(j);
        return 0;
    }
    std::cout << io::simplicial_faces_dump(delta, c.base());
    std::cout << "f-vector " << io::fvector_string(delta.f_vector()) << '\n';
    std::cout << "components " << connected_components(delta).size() << '\n';
    return 0;
}

int cmd_fvector(const Common& c) {
    const Pip p = load_pip(c);
    const auto x = CubicalComplex::build(p);
    const auto delta = crossing_complex(p);
    const auto fc = f_poly_cubical(x);
    const auto fd = f_poly_simplicial(delta);
    const bool identity = fc == fd.substitute_shift(1);
    if (c.format == "json") {
        print({{"cubical", x.f_vector()},
               {"simplicial", delta.f_vector()},
               {"cubical_poly", bigints(fc)},
               {"simplicial_poly", bigints(fd)},
               {"identity", identity},
               {"euler_characteristic", euler_characteristic(fc).str()},
               {"hyperplanes", hyperplane_count(fc).str()},
               {"elements", p.size()}});
    } else {
        std::cout << "f(C) = (" << io::fvector_string(x.f_vector()) << ")  f(C,t) = " << fc.to_string() << '\n';
        std::cout << "f(D) = (" << io::fvector_string(delta.f_vector()) << ")  f(D,t) = " << fd.to_string() << '\n';
        std::cout << "f(C,t) = f(D,1+t): " << (identity ? "yes" : "no") << '\n';
        std::cout << "euler characteristic " << euler_characteristic(fc) << '\n';
        std::cout << "hyperplanes " << hyperplane_count(fc) << " (|P| = " << p.size() << ")\n";
    }
    return identity ? 0 : kExitFailure;
}

int cmd_hyperplanes(const Common& c) {
    const Pip p = load_pip(c);
    const auto x = CubicalComplex::build(p);
    json out = json::array();
    for (int e = 0; e < p.size(); ++e) {
        const auto h = hyperplane_complex(x, e);
        ElementSet members;
        for (int l : h.sub.labels) {
            members = members.with(l);
        }
        out.push_back({{"element", e + c.base()},
                       {"sub_pip", members.to_string(c.base())},
                       {"f_vector", h.complex.f_vector()},
                       {"crossing_faces", h.carrier_faces.size()}});
    }
    if (c.format == "json") {
        print(out);
        return 0;
    }
    for (const auto& h : out) {
        std::cout << "H_" << h["element"].get<int>() << ": sub-PIP " << h["sub_pip"].get<std::string>() << ", f = ("
                  << io::fvector_string(h["f_vector"].get<std::vector<std::size_t>>()) << "), crosses "
                  << h["crossing_faces"].get<std::size_t>() << " faces\n";
    }
    return 0;
}

int cmd_derivative(const Common& c) {
    const Pip p = load_pip(c);
    const auto x = CubicalComplex::build(p);
    const auto d = derivative_complex(x, DerivativeMethod::direct);
    const auto mismatch = compare_derivative_methods(x);
    const auto fdc = f_poly_derivative(d);
    const bool derivative_ok = fdc == f_poly_cubical(x).derivative();
    if (c.format == "json") {
        json comps = json::array();
        for (const auto& comp : d) {
            comps.push_back({{"hyperplane", comp.hyperplane + c.base()}, {"size", comp.poset.size()}});
        }
        print({{"components", comps},
               {"f_poly", bigints(fdc)},
               {"matches_derivative", derivative_ok},
               {"matches_hyperplanes", !mismatch.has_value()}});
    } else {
        std::cout << d.size() << " components\n";
        for (const auto& comp : d) {
            std::cout << "  H_" << comp.hyperplane + c.base() << ": " << comp.poset.size() << " elements\n";
        }
        std::cout << "f(DC,t) = " << fdc.to_string() << (derivative_ok ? " = " : " != ") << "d/dt f(C,t)\n";
        std::cout << "components vs hyperplane complexes: " << (mismatch ? *mismatch : std::string("isomorphic")) << '\n';
    }
    return derivative_ok && !mismatch ? 0 : kExitFailure;
}

int cmd_color(const Common& c, int requested) {
    const Pip p = load_pip(c);
    const auto x = CubicalComplex::build(p);
    const auto delta = crossing_complex(p);
    const int chi = chromatic_number(delta);
    const int r = requested > 0 ? requested : chi;
    const auto ks = find_r_coloring(delta, r);
    const auto balanced = is_balanced_pair(p);
    if (c.format == "json") {
        json j = {{"chromatic_number", chi},
                  {"dimension", x.dimension()},
                  {"balanced", balanced.simplicial},
                  {"cubical_balanced", balanced.cubical},
                  {"r", r}};
        if (ks) {
            j["simplicial"] = io::coloring_to_json(*ks, c.base());
            j["cubical"] = io::coloring_to_json(lift_coloring(x, *ks));
        }
        print(j);
    } else {
        std::cout << "chromatic number " << chi << ", dimension " << x.dimension() << '\n';
        std::cout << "balanced: crossing complex " << (balanced.simplicial ? "yes" : "no") << ", cube complex "
                  << (balanced.cubical ? "yes" : "no") << '\n';
        if (ks) {
            std::cout << "colouring (" << r << " colours)\n" << io::coloring_lines(*ks, c.base());
            std::cout << "cube labels\n" << io::coloring_lines(lift_coloring(x, *ks));
        } else {
            std::cout << "no " << r << "-colouring\n";
        }
    }
    return ks ? 0 : kExitFailure;
}

int cmd_roundtrip(const Common& c, bool verify) {
    const std::string text = io::read_file(c.input);
    std::optional<Pip> original;
    AbstractCubicalComplex a = is_complex_json(text)
                                   ? io::abstract_from_json(io::parse_json(text))
                                   : (original = io::parse_pip(text, c.base()), to_abstract(CubicalComplex::build(*original)));
    const auto extracted = extract_pip(a);
    bool ok = true;
    std::string report;
    if (verify) {
        const auto rebuilt = to_abstract(CubicalComplex::build(extracted.pip));
        const auto again = extract_pip(rebuilt);
        ok = rebuilt.f_vector() == a.f_vector() && pip_isomorphic(again.pip, extracted.pip).has_value();
        if (original) {
            ok = ok && pip_isomorphic(extracted.pip, *original).has_value();
        }
        report = ok ? "isomorphic" : "not isomorphic";
    }
    if (c.format == "json") {
        json j = {{"pip", io::pip_to_json(extracted.pip, c.base())}};
        if (verify) {
            j["isomorphic"] = ok;
        }
        print(j);
    } else {
        std::cout << io::write_pip_text(extracted.pip, c.base());
        if (verify) {
            std::cout << "# round trip: " << report << '\n';
        }
    }
    return ok ? 0 : kExitFailure;
}

int cmd_export(const Common& c, const std::string& what) {
    const Pip p = load_pip(c);
    if (what == "hasse") {
        std::cout << io::hasse_dot(p, c.base());
    } else if (what == "crossing") {
        std::cout << io::graph_dot(crossing_complex(p), c.base());
    } else {
        std::cout << io::skeleton_dot(CubicalComplex::build(p), c.base());
    }
    return 0;
}

std::string default_fixtures() {
#ifdef PIPCAT_DATA_DIR
    if (std::filesystem::is_directory(PIPCAT_DATA_DIR)) {
        return PIPCAT_DATA_DIR;
    }
#endif
    return {};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Posets with inconsistent pairs and their CAT(0) cube complexes"};
    app.require_subcommand(1);

    Common common;
    auto* validate = app.add_subcommand("validate", "Parse a PIP or abstract complex and report its size");
    add_common(validate, common);
    auto* build = app.add_subcommand("build", "Vertices, faces and f-vectors of the cube complex");
    add_common(build, common);
    auto* crossing = app.add_subcommand("crossing", "Faces of the crossing complex");
    add_common(crossing, common);
    auto* fvector = app.add_subcommand("fvector", "f-vectors and f-polynomials");
    add_common(fvector, common);
    auto* hyperplanes = app.add_subcommand("hyperplanes", "Hyperplane complexes, one per element");
    add_common(hyperplanes, common);
    auto* derivative = app.add_subcommand("derivative", "Derivative complex and its components");
    add_common(derivative, common);

    auto* color = app.add_subcommand("color", "Colourings of the crossing and cube complexes");
    add_common(color, common);
    int colors = 0;
    color->add_option("-r,--colors", colors, "Number of colours (default: chromatic number)");

    auto* roundtrip = app.add_subcommand("roundtrip", "Extract the PIP of a rooted cube complex");
    add_common(roundtrip, common);
    bool verify = false;
    roundtrip->add_flag("--verify", verify, "Rebuild and compare");

    auto* exporter = app.add_subcommand("export", "Graphviz output");
    std::string what;
    exporter->add_option("what", what, "hasse, crossing or skeleton")
        ->required()
        ->check(CLI::IsMember({"hasse", "crossing", "skeleton"}));
    exporter->add_option("input", common.input, "PIP file")->required();
    exporter->add_option("--format", common.format)->check(CLI::IsMember({"dot"}));
    exporter->add_flag("--one-based", common.one_based);

    auto* check = app.add_subcommand("check", "Run the theorem suites on golden and random PIPs");
    CheckOptions opt;
    opt.fixtures = default_fixtures();
    std::string fixtures = opt.fixtures.string();
    bool serial = false;
    check->add_option("--seed", opt.seed);
    check->add_option("--count", opt.count)->check(CLI::NonNegativeNumber);
    check->add_option("--n-max", opt.n_max)->check(CLI::Range(0, 16));
    check->add_option("--fixtures", fixtures, "Fixture directory (empty to skip)");
    check->add_option("--format", common.format)->check(CLI::IsMember({"json", "text"}));
    check->add_flag("--serial", serial, "Run instances on one thread");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) return cmd_validate(common);
        if (*build) return cmd_build(common);
        if (*crossing) return cmd_crossing(common);
        if (*fvector) return cmd_fvector(common);
        if (*hyperplanes) return cmd_hyperplanes(common);
        if (*derivative) return cmd_derivative(common);
        if (*color) return cmd_color(common, colors);
        if (*roundtrip) return cmd_roundtrip(common, verify);
        if (*exporter) return cmd_export(common, what);
        if (*check) {
            opt.fixtures = fixtures;
            opt.exec = serial ? Execution::serial : Execution::parallel;
            const auto report = run_checks(opt);
            if (common.format == "json") {
                print(report.to_json());
            } else {
                std::cout << report.to_text();
            }
            return report.passed() ? 0 : kExitFailure;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return 0;
}
