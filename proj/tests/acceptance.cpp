// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "pipcat/checks.hpp"
#include "pipcat/coloring.hpp"
#include "pipcat/cubical.hpp"
#include "pipcat/io.hpp"
#include "pipcat/poly.hpp"
#include "pipcat/simplicial.hpp"

using namespace pipcat;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Pip fixture(const std::string& stem) {
    return io::parse_pip(io::read_file(std::filesystem::path(PIPCAT_DATA_DIR) / (stem + ".pip")));
}

ElementSet one_based(std::initializer_list<int> labels) {
    ElementSet s;
    for (int l : labels) s.insert(l - 1);
    return s;
}

IntPolynomial poly(std::initializer_list<int> c) {
    std::vector<BigInt> v;
    for (int x : c) v.emplace_back(x);
    return IntPolynomial(v);
}

Outcome criterion_running_example() {
    Outcome out;
    const auto start = Clock::now();
    const Pip p = fixture("p7");
    const auto delta = crossing_complex(p);
    const auto x = CubicalComplex::build(p);
    const std::set<ElementSet> caption = {
        {},
        one_based({1}), one_based({2}), one_based({3}), one_based({4}), one_based({5}), one_based({6}), one_based({7}),
        one_based({1, 2}), one_based({1, 5}), one_based({2, 3}), one_based({2, 6}), one_based({3, 4}),
        one_based({3, 5}), one_based({4, 5}), one_based({3, 4, 5}),
    };
    out.require(std::set<ElementSet>(delta.faces().begin(), delta.faces().end()) == caption &&
                    delta.faces().size() == 16,
                "crossing complex face set differs from the 16 listed faces");
    out.require(delta.f_vector() == std::vector<std::size_t>{1, 7, 7, 1}, "f(D) != (1,7,7,1)");
    out.require(x.f_vector() == std::vector<std::size_t>{16, 24, 10, 1}, "f(C) != (16,24,10,1)");
    const auto fc = f_poly_cubical(x);
    const auto fd = f_poly_simplicial(delta);
    out.require(fc == fd.substitute_shift(1) && fc == poly({16, 24, 10, 1}), "f(C,t) != f(D,1+t)");
    out.require(p.size() == 7 && hyperplane_count(fc) == 7, "hyperplane count != 7");
    out.require(euler_characteristic(fc) == 1, "Euler characteristic != 1");
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    out.require(secs < 1.0, "took " + std::to_string(secs) + " s");
    if (out.ok) out.detail = "16 crossing faces, f(D)=(1,7,7,1), f(C)=(16,24,10,1), 7 hyperplanes, chi=1";
    return out;
}

Outcome criterion_antichain() {
    Outcome out;
    const auto start = Clock::now();
    const Pip p = fixture("a3");
    const auto x = CubicalComplex::build(p);
    const auto delta = crossing_complex(p);
    const auto two_plus_t = poly({2, 1});
    out.require(x.f_vector() == std::vector<std::size_t>{8, 12, 6, 1}, "f(C) != (8,12,6,1)");
    out.require(f_poly_cubical(x) == two_plus_t * two_plus_t * two_plus_t, "f(C,t) != (2+t)^3");
    out.require(x.faces().back() == (CubicalFace{ElementSet::range(3), ElementSet::range(3)}), "no solid 3-cube");
    out.require(delta.facets() == std::vector<ElementSet>{ElementSet::range(3)} &&
                    delta.f_vector() == std::vector<std::size_t>{1, 3, 3, 1},
                "crossing complex is not the full triangle");
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    out.require(secs < 1.0, "took " + std::to_string(secs) + " s");
    if (out.ok) out.detail = "solid cube f=(8,12,6,1)=(2+t)^3, crossing complex = full triangle";
    return out;
}

Outcome criterion_theorem_suite() {
    Outcome out;
    CheckOptions opt;
    opt.seed = 1;
    opt.count = 500;
    opt.n_max = 10;
    opt.exec = Execution::serial;
    const auto start = Clock::now();
    const auto report = run_checks(opt);
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();

    std::set<std::string> instances;
    std::set<std::string> round_trips;
    std::map<std::string, std::size_t> runs;
    for (const auto& r : report.results) {
        instances.insert(r.instance);
        ++runs[r.check];
        if (r.check == "round_trip") round_trips.insert(r.instance);
    }
    for (const auto& r : report.results) {
        if (!r.passed) {
            out.require(false, r.instance + " " + r.check + ": " + r.counterexample);
        }
    }
    out.require(instances.size() >= 500, "only " + std::to_string(instances.size()) + " instances");
    out.require(round_trips.size() >= 200, "only " + std::to_string(round_trips.size()) + " round trips");
    for (const auto& name : suite_names()) {
        out.require(runs[name] > 0, "suite " + name + " never ran");
    }
    out.require(secs <= 60.0, "took " + std::to_string(secs) + " s");
    if (out.ok) {
        std::ostringstream os;
        os << report.results.size() << " checks over " << instances.size() << " PIPs (n <= 10), " << round_trips.size()
           << " round trips, " << suite_names().size() << " suites, " << std::fixed;
        os.precision(1);
        os << secs << " s on one thread";
        out.detail = os.str();
    }
    return out;
}

Outcome criterion_balancedness() {
    Outcome out;
    const auto start = Clock::now();
    const auto dir = std::filesystem::path(PIPCAT_DATA_DIR);
    const auto a = io::abstract_from_json(io::parse_json(io::read_file(dir / "balanced_a.json")));
    const auto kc = io::cubical_coloring_from_json(io::parse_json(io::read_file(dir / "balanced_a_coloring.json")));
    out.require(validate_cubical_coloring(a, kc) && kc.r == a.dimension(), "printed 3-bit colouring does not validate");
    const auto bal = is_balanced_pair(extract_pip(a).pip);
    out.require(bal.simplicial && bal.cubical, "balanced cube complex not reported balanced");

    const Pip star = fixture("five_star");
    const auto star_bal = is_balanced_pair(star);
    const int chi = chromatic_number(crossing_complex(star));
    const int dim = CubicalComplex::build(star).dimension();
    out.require(!star_bal.simplicial && !star_bal.cubical, "five-square star reported balanced");
    out.require(chi == 3 && dim == 2, "chromatic number " + std::to_string(chi) + " vs dimension " + std::to_string(dim));
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    out.require(secs < 1.0, "took " + std::to_string(secs) + " s");
    if (out.ok) out.detail = "printed labels validate, (true,true); five-square star (false,false), chi 3 vs dim 2";
    return out;
}

Outcome criterion_negative_path() {
    Outcome out;
    const auto dir = std::filesystem::temp_directory_path() / "pipcat_acceptance_mutated";
    std::filesystem::remove_all(dir);
    std::filesystem::copy(PIPCAT_DATA_DIR, dir);
    std::string text = io::read_file(dir / "p7.pip");
    const std::string victim = "incons 5 6\n";
    const auto pos = text.find(victim);
    out.require(pos != std::string::npos, "fixture has no inconsistency to drop");
    if (!out.ok) return out;
    text.erase(pos, victim.size());
    std::ofstream(dir / "p7.pip") << text;

    bool round_trip_failed = false;
    for (const auto& r : check_golden_files(dir)) {
        if (r.instance == "golden/p7" && !r.passed && r.counterexample.find("p7") != std::string::npos) {
            round_trip_failed = true;
        }
    }
    out.require(round_trip_failed, "mutated P7 still passes the round-trip check");

    const auto log = dir / "check.log";
    const std::string cmd = std::string("\"") + PIPCAT_CLI + "\" check --count 0 --fixtures \"" + dir.string() + "\" > \"" +
                            log.string() + "\" 2>&1";
    const int status = std::system(cmd.c_str());
    const std::string output = io::read_file(log);
    out.require(status != 0, "pipcat check exited 0");
    out.require(output.find("FAIL golden/p7") != std::string::npos, "report does not name the instance");
    std::filesystem::remove_all(dir);
    if (out.ok) out.detail = "round trip fails for p7, pipcat check exits nonzero naming golden/p7";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 running example", criterion_running_example},
        {"2 antichain cube", criterion_antichain},
        {"3 theorem suite", criterion_theorem_suite},
        {"4 balancedness fixtures", criterion_balancedness},
        {"5 negative path", criterion_negative_path},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << name << ": " << o.detail << std::endl;
        failures += o.ok ? 0 : 1;
    }
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
