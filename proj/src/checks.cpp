#include "pipcat/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "pipcat/abstract_cubical.hpp"
#include "pipcat/coloring.hpp"
#include "pipcat/cubical.hpp"
#include "pipcat/errors.hpp"
#include "pipcat/io.hpp"
#include "pipcat/poly.hpp"
#include "pipcat/simplicial.hpp"

namespace pipcat {

namespace {

using Failure = std::optional<std::string>;

struct Context {
    const CheckInstance& inst;
    const CheckOptions& opt;
    const Pip& p;
    CubicalComplex x;
    SimplicialComplex delta;
    IntPolynomial fc;
    IntPolynomial fd;
};

std::string show(const IntPolynomial& poly) { return poly.to_string(); }

template <class T>
std::string show_set(const T& s) {
    std::string out;
    for (ElementSet e : s) {
        out += e.to_string();
    }
    return out;
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

ElementSet shift(ElementSet s, int offset) { return ElementSet(s.bits() << offset); }

VertexBits bits_of(const std::vector<int>& vs, std::size_t n) {
    VertexBits b(n);
    for (int v : vs) {
        b.set(static_cast<std::size_t>(v));
    }
    return b;
}

std::set<std::vector<int>> face_vertex_sets(const CubicalComplex& x) {
    std::set<std::vector<int>> out;
    for (const auto& f : x.faces()) {
        out.insert(x.vertex_set(f));
    }
    return out;
}

// ---------------------------------------------------------------- suites

Failure suite_bijection(const Context& c) {
    if (!(normalize(c.p) == c.p)) {
        return "normalize changed the PIP";
    }
    const auto antichains = enumerate_consistent_antichains(c.p, Execution::serial);
    if (antichains.size() != c.x.vertices().size()) {
        return "downsets " + std::to_string(c.x.vertices().size()) + " vs antichains " + std::to_string(antichains.size());
    }
    std::unordered_set<ElementSet, ElementSetHash> maxima;
    for (ElementSet i : c.x.vertices()) {
        const ElementSet a = downset_to_antichain(c.p, i);
        if (antichain_to_downset(c.p, a) != i) {
            return "down(max I) != I for I = " + i.to_string();
        }
        maxima.insert(a);
    }
    for (ElementSet a : antichains) {
        if (!maxima.contains(a) || downset_to_antichain(c.p, antichain_to_downset(c.p, a)) != a) {
            return "max(down A) != A for A = " + a.to_string();
        }
    }
    return std::nullopt;
}

Failure suite_f_polynomial(const Context& c) {
    if (c.fc != c.fd.substitute_shift(1)) {
        return "f(C,t) = " + show(c.fc) + " but f(D,1+t) = " + show(c.fd.substitute_shift(1));
    }
    if (c.fc.degree() != c.fd.degree() || c.x.dimension() != c.delta.dimension() + 1) {
        return "dimension mismatch: dim C = " + std::to_string(c.x.dimension()) +
               ", dim D = " + std::to_string(c.delta.dimension());
    }
    if (euler_characteristic(c.fc) != 1) {
        return "Euler characteristic " + euler_characteristic(c.fc).str();
    }
    if (hyperplane_count(c.fc) != c.p.size()) {
        return "alternating sum gives " + hyperplane_count(c.fc).str() + " hyperplanes, |P| = " + std::to_string(c.p.size());
    }
    if (transform_T(c.fd.coefficients()) != c.fc.coefficients() || transform_T_inverse(c.fc.coefficients()) != c.fd.coefficients()) {
        return "matrix T does not map f(D) to f(C)";
    }
    return std::nullopt;
}

Failure suite_combinators(const Context& c) {
    const int n = c.p.size();
    const int m = std::min(3, std::max(0, 12 - n));
    const Pip q = random_pip(splitmix64(c.inst.seed ^ 0xC0FFEEULL), m, 0.4, 0.4);
    const CubicalComplex y = CubicalComplex::build(q, Execution::serial);
    const SimplicialComplex dq = crossing_complex(q, Execution::serial);

    if (!(crossing_complex(combine(c.p, q, CombineMode::consistent), Execution::serial) == join(c.delta, dq, n))) {
        return "crossing complex of the consistent union is not the join";
    }
    if (!(crossing_complex(combine(c.p, q, CombineMode::inconsistent), Execution::serial) ==
          disjoint_union(c.delta, dq, n))) {
        return "crossing complex of the inconsistent union is not the disjoint union";
    }

    const CubicalComplex prod = product(c.x, y);
    std::set<std::vector<int>> oracle;
    for (const auto& f : c.x.faces()) {
        const auto vf = c.x.vertex_set(f);
        for (const auto& g : y.faces()) {
            std::vector<int> cell;
            for (int i : vf) {
                for (int j : y.vertex_set(g)) {
                    const auto idx = prod.vertex_index(c.x.vertices()[static_cast<std::size_t>(i)] |
                                                       shift(y.vertices()[static_cast<std::size_t>(j)], n));
                    if (!idx) {
                        return "product vertex missing";
                    }
                    cell.push_back(*idx);
                }
            }
            std::sort(cell.begin(), cell.end());
            oracle.insert(std::move(cell));
        }
    }
    if (oracle != face_vertex_sets(prod)) {
        return "complex of the consistent union is not the cartesian product";
    }
    if (f_poly_cubical(prod) != c.fc * f_poly_cubical(y)) {
        return "f(product) != f(X) f(Y)";
    }

    const CubicalComplex w = wedge(c.x, y);
    oracle.clear();
    auto add_image = [&](const CubicalComplex& src, int offset) -> bool {
        for (const auto& f : src.faces()) {
            std::vector<int> cell;
            for (int i : src.vertex_set(f)) {
                const auto idx = w.vertex_index(shift(src.vertices()[static_cast<std::size_t>(i)], offset));
                if (!idx) {
                    return false;
                }
                cell.push_back(*idx);
            }
            std::sort(cell.begin(), cell.end());
            oracle.insert(std::move(cell));
        }
        return true;
    };
    if (!add_image(c.x, 0) || !add_image(y, n)) {
        return "wedge vertex missing";
    }
    if (oracle != face_vertex_sets(w) || w.vertices().size() + 1 != c.x.vertices().size() + y.vertices().size()) {
        return "complex of the inconsistent union is not the wedge at the root";
    }
    if (f_poly_cubical(w) != c.fc + f_poly_cubical(y) - IntPolynomial({BigInt(1)})) {
        return "f(wedge) != f(X) + f(Y) - 1";
    }
    return std::nullopt;
}

Failure suite_vertex_links(const Context& c) {
    const auto incidence = faces_by_vertex(c.x);
    for (std::size_t v = 0; v < c.x.vertices().size(); ++v) {
        const auto formula = vertex_link(c.x, static_cast<int>(v));
        const auto direct = direct_vertex_link(c.x, static_cast<int>(v), incidence);
        if (!(formula == direct)) {
            return "link at " + c.x.vertices()[v].to_string() + ": formula facets " + show_set(formula.facets()) +
                   ", direct facets " + show_set(direct.facets());
        }
        if (!is_flag(formula)) {
            return "link at " + c.x.vertices()[v].to_string() + " is not flag";
        }
    }
    return std::nullopt;
}

Failure suite_derivative(const Context& c) {
    if (auto err = compare_derivative_methods(c.x)) {
        return *err;
    }
    const auto fdc = f_poly_derivative(derivative_complex(c.x, DerivativeMethod::direct));
    if (fdc != c.fc.derivative()) {
        return "f(DC) = " + show(fdc) + ", f'(C) = " + show(c.fc.derivative());
    }
    for (int e = 0; e < c.p.size(); ++e) {
        const Hyperplane h = hyperplane_complex(c.x, e);
        const auto crossing = crossing_complex(h.sub.pip, Execution::serial).relabeled(h.sub.labels);
        if (!(crossing == link(c.delta, ElementSet::singleton(e)))) {
            return "crossing complex of H_" + std::to_string(e) + " is not the link of " + std::to_string(e);
        }
        to_abstract(h.complex);
        if (h.carrier_faces.size() != h.complex.faces().size()) {
            return "H_" + std::to_string(e) + " has " + std::to_string(h.complex.faces().size()) + " faces but crosses " +
                   std::to_string(h.carrier_faces.size());
        }
    }
    return std::nullopt;
}

Failure suite_facets(const Context& c) {
    const auto antichains = enumerate_consistent_antichains(c.p, Execution::serial);
    std::unordered_set<ElementSet, ElementSetHash> all(antichains.begin(), antichains.end());
    std::set<std::uint64_t> maximal;
    for (ElementSet a : antichains) {
        bool extendable = false;
        for (int e : c.p.ground() - a) {
            if (all.contains(a.with(e))) {
                extendable = true;
                break;
            }
        }
        if (!extendable) {
            maximal.insert(a.bits());
        }
    }
    const auto fs = facets(c.x);
    std::set<std::uint64_t> found;
    for (const auto& f : fs) {
        const auto& face = c.x.faces()[static_cast<std::size_t>(f.face)];
        if (face.downset != antichain_to_downset(c.p, f.antichain) || face.directions != f.antichain) {
            return "facet is not C(down A, A) for A = " + f.antichain.to_string();
        }
        found.insert(f.antichain.bits());
    }
    if (found != maximal) {
        return std::to_string(found.size()) + " facets vs " + std::to_string(maximal.size()) + " maximal antichains";
    }
    const std::size_t nv = c.x.vertices().size();
    std::vector<VertexBits> vs;
    for (const auto& f : fs) {
        vs.push_back(bits_of(c.x.vertex_set(c.x.faces()[static_cast<std::size_t>(f.face)]), nv));
    }
    for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            const auto meet = face_meet(c.x.faces()[static_cast<std::size_t>(fs[i].face)],
                                        c.x.faces()[static_cast<std::size_t>(fs[j].face)]);
            const VertexBits common = vs[i] & vs[j];
            if (common.any() != meet.has_value()) {
                return "facet meet existence disagrees with vertex intersection";
            }
            if (meet && (bits_of(c.x.vertex_set(*meet), nv) != common ||
                         meet->dimension() != (fs[i].antichain & fs[j].antichain).size())) {
                return "facets " + fs[i].antichain.to_string() + ", " + fs[j].antichain.to_string() +
                       " meet in the wrong face";
            }
        }
    }
    return std::nullopt;
}

Failure suite_face_lemmas(const Context& c) {
    const auto& faces = c.x.faces();
    const std::size_t nv = c.x.vertices().size();
    std::vector<VertexBits> vs;
    vs.reserve(faces.size());
    for (const auto& f : faces) {
        vs.push_back(bits_of(c.x.vertex_set(f), nv));
    }
    std::set<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = 0; j < faces.size(); ++j) {
            const bool inside = vs[i].is_subset_of(vs[j]);
            if (face_contains(faces[i], faces[j]) != inside) {
                return "containment formula disagrees on faces " + std::to_string(i) + ", " + std::to_string(j);
            }
            if (inside && faces[i].dimension() + 1 == faces[j].dimension()) {
                covers.emplace(static_cast<int>(i), static_cast<int>(j));
            }
            if (j > i) {
                const auto meet = face_meet(faces[i], faces[j]);
                const VertexBits common = vs[i] & vs[j];
                if (common.any() != meet.has_value() || (meet && bits_of(c.x.vertex_set(*meet), nv) != common)) {
                    return "meet formula disagrees on faces " + std::to_string(i) + ", " + std::to_string(j);
                }
            }
        }
    }
    const auto listed = covering_pairs(c.x);
    if (std::set<std::pair<int, int>>(listed.begin(), listed.end()) != covers || listed.size() != covers.size()) {
        return "covering pairs differ from rank-one containments";
    }
    return std::nullopt;
}

Failure suite_nerve(const Context& c) {
    const int n = c.p.size();
    const auto subsets = kernels::filter_subsets_serial(n, [](ElementSet s) { return s.size() <= 4; });
    for (ElementSet s : subsets) {
        const bool meet = hyperplanes_commonly_intersect(c.x, s);
        const bool face = is_consistent(c.p, s) && is_antichain(c.p, s);
        if (meet != face) {
            return "hyperplanes " + s.to_string() + (meet ? " meet" : " do not meet") + " but the set is" +
                   (face ? "" : " not") + " a consistent antichain";
        }
    }
    const auto delta_comps = connected_components(c.delta).size();
    const auto union_comps = hyperplane_union_components(c.x).size();
    const auto deleted = static_cast<std::size_t>(vertex_deleted_component_count(c.x));
    if (delta_comps != union_comps || delta_comps != deleted) {
        return "components: crossing complex " + std::to_string(delta_comps) + ", hyperplane union " +
               std::to_string(union_comps) + ", vertex-deleted complex " + std::to_string(deleted);
    }
    return std::nullopt;
}

Failure suite_cut_vertex(const Context& c) {
    const bool cut = !cut_vertices(c.x).empty();
    const bool disconnected = connected_components(c.delta).size() > 1;
    if (cut != disconnected) {
        return std::string(cut ? "cut vertex" : "no cut vertex") + " but crossing complex is " +
               (disconnected ? "disconnected" : "connected");
    }
    return std::nullopt;
}

Failure suite_round_trip(const Context& c) {
    const auto a = to_abstract(c.x);
    const auto extracted = extract_pip(a);
    if (!pip_isomorphic(extracted.pip, c.p)) {
        return "extracted PIP is not isomorphic: got " + io::pip_to_json(extracted.pip).dump();
    }
    return std::nullopt;
}

Failure suite_reroot(const Context& c) {
    const auto a = to_abstract(c.x);
    for (int r = 0; r < a.n_vertices(); ++r) {
        const auto rerooted = a.rerooted(r);
        const auto extracted = extract_pip(rerooted);
        const auto map = class_elements(c.x, rerooted, extracted.hyperplanes);
        if (!(crossing_complex(extracted.pip, Execution::serial).relabeled(map) == c.delta)) {
            return "crossing complex changes when rooted at " + c.x.vertices()[static_cast<std::size_t>(r)].to_string();
        }
    }
    return std::nullopt;
}

Failure suite_interval_star(const Context& c) {
    const auto witness = interval_witness(c.x);
    if (witness.has_value() == c.p.has_inconsistencies()) {
        return std::string("interval witness ") + (witness ? "found" : "missing") + " but P has" +
               (c.p.has_inconsistencies() ? "" : " no") + " inconsistent pairs";
    }
    if (witness) {
        if (c.x.vertices()[static_cast<std::size_t>(*witness)] != c.p.ground()) {
            return "interval witness is not the full downset";
        }
        const auto dist = skeleton_distances(c.x, c.x.root());
        for (std::size_t v = 0; v < dist.size(); ++v) {
            if (dist[v] != c.x.vertices()[v].size()) {
                return "d(root, I) != |I| for I = " + c.x.vertices()[v].to_string();
            }
        }
    }
    if (is_closed_star_of_root(c.x) == c.p.has_strict_order()) {
        return std::string("closed star of the root is ") + (c.p.has_strict_order() ? "everything" : "not everything") +
               " but P has" + (c.p.has_strict_order() ? "" : " no") + " strict order relations";
    }
    return std::nullopt;
}

Failure coloured_identity(const Context& c, const SimplicialColoring& ks, const std::string& what) {
    const int r = ks.r;
    const CubicalColoring kc = lift_coloring(c.x, ks);
    if (!validate_cubical_coloring(c.x, kc)) {
        return what + ": lifted colouring is invalid";
    }
    if (!(project_coloring(c.x, kc) == ks)) {
        return what + ": projection of the lift is not the original colouring";
    }
    const auto simplicial = coloured_f_simplicial(c.delta, ks);
    const auto cubical = coloured_f_cubical(c.x, kc);
    std::map<int, BigInt> ones;
    std::vector<int> xs;
    for (int i = 0; i < r; ++i) {
        ones.emplace(r + i, BigInt(1));
        xs.push_back(i);
    }
    const auto lhs = cubical.substitute(ones);
    const auto rhs = simplicial.shift_variables(xs, 1);
    if (!(lhs == rhs)) {
        const auto names = colour_variable_names(r, false);
        return what + ": f(C, x, 1) = " + lhs.to_string(names) + " but f(D, 1+x) = " + rhs.to_string(names);
    }
    if (simplicial.to_univariate() != c.fd || lhs.to_univariate() != c.fc) {
        return what + ": coloured polynomials do not specialize to f";
    }
    return std::nullopt;
}

Failure suite_coloring(const Context& c) {
    const int chi = chromatic_number(c.delta);
    const auto ks = find_r_coloring(c.delta, chi);
    if (!ks || !is_valid_coloring(c.delta, *ks)) {
        return "no valid colouring at the chromatic number";
    }
    if (auto err = coloured_identity(c, *ks, "chromatic colouring")) {
        return err;
    }
    const auto balanced = is_balanced_pair(c.p);
    if (balanced.simplicial != balanced.cubical) {
        return std::string("crossing complex ") + (balanced.simplicial ? "balanced" : "not balanced") +
               " but cube complex " + (balanced.cubical ? "balanced" : "not balanced");
    }
    if (!c.p.has_inconsistencies()) {
        const auto dc = dilworth_coloring(c.p);
        if (dc.r != c.delta.dimension() + 1 || !is_valid_coloring(c.delta, dc)) {
            return "Dilworth colouring uses " + std::to_string(dc.r) + " colours, width is " +
                   std::to_string(c.delta.dimension() + 1);
        }
        if (auto err = coloured_identity(c, dc, "Dilworth colouring")) {
            return err;
        }
        if (!balanced.simplicial) {
            return "poset PIP reported not balanced";
        }
    }
    if (c.p.size() <= c.opt.exhaustive_coloring_max_n) {
        for (int r = 0; r <= chi; ++r) {
            const auto search = exhaustive_cubical_coloring(c.x, r);
            if (search.result == SearchResult::budget_exhausted) {
                return "exhaustive cube colouring search ran out of budget at r = " + std::to_string(r);
            }
            const bool found = search.result == SearchResult::found;
            if (found != (r == chi)) {
                return "cube complex " + std::string(found ? "is" : "is not") + " " + std::to_string(r) +
                       "-colourable, chromatic number of the crossing complex is " + std::to_string(chi);
            }
            if (found) {
                const auto projected = project_coloring(c.x, *search.coloring);
                if (projected.r != r || !is_valid_coloring(c.delta, projected)) {
                    return "projection of a cube colouring is not a colouring";
                }
                if (auto err = coloured_identity(c, projected, "projected colouring")) {
                    return err;
                }
            }
        }
    }
    return std::nullopt;
}

struct Suite {
    const char* name;
    Failure (*run)(const Context&);
    bool (*applies)(const Context&);
};

bool always(const Context&) { return true; }

const std::vector<Suite>& suites() {
    static const std::vector<Suite> list = {
        {"bijection", suite_bijection, always},
        {"coloring", suite_coloring, always},
        {"combinators", suite_combinators, always},
        {"cut_vertex", suite_cut_vertex, always},
        {"derivative", suite_derivative, always},
        {"f_polynomial", suite_f_polynomial, always},
        {"face_lemmas", suite_face_lemmas,
         [](const Context& c) { return c.p.size() <= 8 && c.x.faces().size() <= c.opt.face_pair_limit; }},
        {"facets", suite_facets, always},
        {"interval_star", suite_interval_star, always},
        {"nerve", suite_nerve, always},
        {"reroot", suite_reroot, [](const Context& c) { return c.p.size() <= c.opt.all_roots_max_n; }},
        {"round_trip", suite_round_trip, [](const Context& c) { return c.p.size() <= c.opt.round_trip_max_n; }},
        {"vertex_links", suite_vertex_links, always},
    };
    return list;
}

std::string describe(const Pip& p) { return io::pip_to_json(p).dump(); }

}  // namespace

std::size_t CheckReport::failures() const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed; }));
}

nlohmann::json CheckReport::to_json() const {
    nlohmann::json j;
    j["seed"] = seed;
    j["count"] = count;
    j["n_max"] = n_max;
    j["checks"] = results.size();
    j["failures"] = failures();
    j["passed"] = passed();
    nlohmann::json rs = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json e;
        e["instance"] = r.instance;
        e["check"] = r.check;
        e["passed"] = r.passed;
        if (!r.passed) {
            e["counterexample"] = r.counterexample;
        }
        rs.push_back(e);
    }
    j["results"] = rs;
    return j;
}

std::string CheckReport::to_text() const {
    std::ostringstream os;
    for (const auto& r : results) {
        if (!r.passed) {
            os << "FAIL " << r.instance << " " << r.check << ": " << r.counterexample << '\n';
        }
    }
    os << results.size() - failures() << "/" << results.size() << " checks passed (seed " << seed << ", " << count
       << " random instances, n <= " << n_max << ")\n";
    return os.str();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : suites()) {
            out.emplace_back(s.name);
        }
        return out;
    }();
    return names;
}

std::vector<CheckInstance> random_instances(std::uint64_t seed, int count, int n_max) {
    std::vector<CheckInstance> out;
    for (int i = 0; i < count; ++i) {
        const std::uint64_t s = splitmix64(seed * 0x100000001B3ULL + static_cast<std::uint64_t>(i));
        std::mt19937_64 rng(s);
        const int n = static_cast<int>(rng() % static_cast<std::uint64_t>(n_max + 1));
        const int kind = static_cast<int>(rng() % 8);
        double order = 0.05 + 0.45 * unit(rng);
        double incons = 0.05 + 0.45 * unit(rng);
        if (kind < 2) {
            incons = 0.0;
        } else if (kind == 2) {
            order = 0.0;
            incons = 0.2 + 0.5 * unit(rng);
        }
        std::string name = std::to_string(i);
        name.insert(0, 5 - std::min<std::size_t>(5, name.size()), '0');
        out.push_back({"random/" + name + "/n=" + std::to_string(n), random_pip(s, n, order, incons), s});
    }
    return out;
}

std::vector<CheckInstance> golden_instances(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() == ".pip") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<CheckInstance> out;
    for (const auto& f : files) {
        const std::string stem = f.stem().string();
        out.push_back({"golden/" + stem, io::parse_pip(io::read_file(f)), std::hash<std::string>{}(stem)});
    }
    return out;
}

std::vector<CheckResult> check_instance(const CheckInstance& inst, const CheckOptions& opt) {
    std::vector<CheckResult> out;
    std::optional<Context> ctx;
    try {
        CubicalComplex x = CubicalComplex::build(inst.pip, Execution::serial);
        SimplicialComplex delta = crossing_complex(inst.pip, Execution::serial);
        IntPolynomial fc = f_poly_cubical(x);
        IntPolynomial fd = f_poly_simplicial(delta);
        ctx.emplace(Context{inst, opt, inst.pip, std::move(x), std::move(delta), std::move(fc), std::move(fd)});
    } catch (const std::exception& e) {
        out.push_back({inst.name, "build", false, std::string("exception: ") + e.what() + "; pip " + describe(inst.pip)});
        return out;
    }
    for (const auto& suite : suites()) {
        if (!suite.applies(*ctx)) {
            continue;
        }
        CheckResult r{inst.name, suite.name, true, {}};
        try {
            if (auto err = suite.run(*ctx)) {
                r.passed = false;
                r.counterexample = *err + "; pip " + describe(inst.pip);
            }
        } catch (const std::exception& e) {
            r.passed = false;
            r.counterexample = std::string("exception: ") + e.what() + "; pip " + describe(inst.pip);
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> check_golden_files(const std::filesystem::path& dir) {
    std::vector<CheckResult> out;
    auto run = [&](const std::string& instance, const std::string& check, const std::function<Failure()>& body) {
        CheckResult r{instance, check, true, {}};
        try {
            if (auto err = body()) {
                r.passed = false;
                r.counterexample = *err;
            }
        } catch (const std::exception& e) {
            r.passed = false;
            r.counterexample = std::string("exception: ") + e.what();
        }
        out.push_back(std::move(r));
    };

    if (std::filesystem::exists(dir / "p7.pip") && std::filesystem::exists(dir / "p7_complex.json")) {
        run("golden/p7", "complex_fixture", [&]() -> Failure {
            const Pip p = io::parse_pip(io::read_file(dir / "p7.pip"));
            const auto stored = io::abstract_from_json(io::parse_json(io::read_file(dir / "p7_complex.json")));
            const auto extracted = extract_pip(stored);
            if (!pip_isomorphic(extracted.pip, p)) {
                return "instance p7: PIP extracted from p7_complex.json is not isomorphic to p7.pip; extracted " +
                       describe(extracted.pip) + ", fixture " + describe(p);
            }
            if (to_abstract(CubicalComplex::build(p)).faces() != stored.faces()) {
                return "instance p7: complex built from p7.pip differs from p7_complex.json";
            }
            return std::nullopt;
        });
    }
    if (std::filesystem::exists(dir / "balanced_a.json") && std::filesystem::exists(dir / "balanced_a_coloring.json")) {
        run("golden/balanced_a", "printed_coloring", [&]() -> Failure {
            const auto a = io::abstract_from_json(io::parse_json(io::read_file(dir / "balanced_a.json")));
            const auto kc = io::cubical_coloring_from_json(io::parse_json(io::read_file(dir / "balanced_a_coloring.json")));
            if (!validate_cubical_coloring(a, kc)) {
                return "instance balanced_a: printed colouring is not valid";
            }
            if (kc.r != a.dimension()) {
                return "instance balanced_a: " + std::to_string(kc.r) + " colours on a " + std::to_string(a.dimension()) +
                       "-dimensional complex";
            }
            const auto extracted = extract_pip(a);
            const auto balanced = is_balanced_pair(extracted.pip);
            if (!balanced.simplicial || !balanced.cubical) {
                return "instance balanced_a: not reported balanced";
            }
            return std::nullopt;
        });
    }
    return out;
}

CheckReport run_checks(const CheckOptions& opt) {
    CheckReport report;
    report.seed = opt.seed;
    report.count = opt.count;
    report.n_max = opt.n_max;

    std::vector<CheckInstance> instances;
    if (!opt.fixtures.empty()) {
        instances = golden_instances(opt.fixtures);
    }
    auto randoms = random_instances(opt.seed, opt.count, opt.n_max);
    instances.insert(instances.end(), std::make_move_iterator(randoms.begin()), std::make_move_iterator(randoms.end()));

    std::vector<std::vector<CheckResult>> parts(instances.size());
    const auto total = static_cast<std::int64_t>(instances.size());
    if (opt.exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < total; ++i) {
            parts[static_cast<std::size_t>(i)] = check_instance(instances[static_cast<std::size_t>(i)], opt);
        }
    } else {
        for (std::int64_t i = 0; i < total; ++i) {
            parts[static_cast<std::size_t>(i)] = check_instance(instances[static_cast<std::size_t>(i)], opt);
        }
    }
    for (auto& part : parts) {
        report.results.insert(report.results.end(), part.begin(), part.end());
    }
    if (!opt.fixtures.empty()) {
        auto files = check_golden_files(opt.fixtures);
        report.results.insert(report.results.end(), files.begin(), files.end());
    }
    std::stable_sort(report.results.begin(), report.results.end(), [](const CheckResult& a, const CheckResult& b) {
        return std::tie(a.instance, a.check) < std::tie(b.instance, b.check);
    });
    return report;
}

}  // namespace pipcat
