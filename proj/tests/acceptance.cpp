// Acceptance checks, one PASS/FAIL line per criterion. Every comparison is
// exact; the only tolerances are the wall-clock budgets below.
//
// usage: acceptance [AC1 ... AC11]   (no argument: all criteria)

#include "dsf/dsf.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

using namespace dsf;

namespace {

constexpr double kTable4SmallBudgetSeconds = 10.0;   // m <= 8, cumulative
constexpr double kTable4LargeBudgetSeconds = 600.0;  // m = 10, single-threaded
constexpr double kOracleBudgetSeconds = 60.0;
constexpr int kTablesMaxM = 8;
constexpr int kSpectraMaxM = 8;
constexpr int kAppendixMaxM = 10;
constexpr int kStructureMaxM = 8;

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", v);
    return buf;
}

/// Runs one suite over [lo, hi]; detail lists the first failing labels.
Outcome suites(Suite s, int lo, int hi, const VerifyOptions& opt = {}) {
    Outcome o;
    std::size_t checks = 0, failures = 0;
    std::map<std::string, std::size_t> by_label;
    for (int m = lo; m <= hi; ++m) {
        const auto r = run_suite(s, m, opt);
        checks += r.checks();
        failures += r.failure_count();
        for (const auto& f : r.failures()) ++by_label[f.label + "@m=" + std::to_string(f.m)];
    }
    o.pass = failures == 0;
    o.detail = std::to_string(checks) + " checks, " + std::to_string(failures) + " failed";
    std::size_t shown = 0;
    for (const auto& [label, n] : by_label) {
        if (shown++ == 6) {
            o.detail += " ...";
            break;
        }
        o.detail += (shown == 1 ? ": " : ", ") + label + " x" + std::to_string(n);
    }
    return o;
}

Outcome ac1() {
    Outcome o;
    const auto t0 = Clock::now();
    for (int m = 2; m <= 8; ++m) {
        const auto row = table4_row(m);
        const auto want = *table4_expected(m);
        if (row.col1 != want[0] || row.col2 != want[1] || row.col3 != want[2] || !row.disjoint) {
            o.pass = false;
            o.detail += "mismatch at m=" + std::to_string(m) + "; ";
        }
    }
    const double small = seconds_since(t0);
    const auto r9 = table4_row(9);
    const auto t10 = Clock::now();
    const auto r10 = table4_row(10);  // single worker
    const double large = seconds_since(t10);
    for (const auto& row : {r9, r10}) {
        const auto want = *table4_expected(row.m);
        if (row.col1 != want[0] || row.col2 != want[1] || row.col3 != want[2] || !row.disjoint) {
            o.pass = false;
            o.detail += "mismatch at m=" + std::to_string(row.m) + "; ";
        }
    }
    if (small > kTable4SmallBudgetSeconds || large > kTable4LargeBudgetSeconds) o.pass = false;
    o.detail += "rows m=2..10; m<=8 in " + fixed(small) + ", m=10 in " + fixed(large) + "; m=10 row (" +
                std::to_string(r10.col1) + "," + std::to_string(r10.col2) + "," + std::to_string(r10.col3) + ")";
    return o;
}

Outcome ac2() {
    const auto to_set = [](const EngineResult& r) {
        std::set<IntVector> s;
        for (const auto& p : r.points) s.insert(to_int_vector(p));
        return s;
    };
    const auto qf = to_set(enumerate_eigen_lattice(2, default_bounds(2)));
    const std::set<IntVector> want_f = {{0, 0, 0}, {1, 0, 0}, {0, 1, 1}, {1, 1, 1}};
    // Q^h(2) lattice points: scan a box wide enough to hold every image, test membership.
    std::set<IntVector> qh;
    const auto handle = make_polytope(PolytopeLabel::Qh, 2);
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            for (int c = -3; c <= 3; ++c)
                if (contains(handle, IntVector{a, b, c})) qh.insert(IntVector{a, b, c});
    const std::set<IntVector> want_h = {{0, 0, 0}, {1, -2, 1}, {0, 1, 0}, {1, -1, 1}};
    return {qf == want_f && qh == want_h,
            "Qf(2) has " + std::to_string(qf.size()) + " points, Qh(2) has " + std::to_string(qh.size())};
}

Outcome ac3() {
    Outcome o;
    const auto t0 = Clock::now();
    for (int m = 2; m <= kOracleBoxMaxM; ++m) {
        const auto matching = ds_fvectors(m, ParityClass::matching).points;
        const auto opposite = ds_fvectors(m, ParityClass::opposite).points;
        const auto box = oracle_box(m);
        if (box.matching != matching || box.opposite != opposite) {
            o.pass = false;
            o.detail += "box mismatch at m=" + std::to_string(m) + "; ";
        }
        if (m <= kOraclePowersetMaxM) {
            const auto ps = oracle_powerset(m);
            if (ps.sets.matching != matching || ps.sets.opposite != opposite) {
                o.pass = false;
                o.detail += "powerset mismatch at m=" + std::to_string(m) + "; ";
            }
        }
    }
    const double t = seconds_since(t0);
    if (t > kOracleBudgetSeconds) o.pass = false;
    o.detail += "engine = box (m<=7) = powerset (m<=4) in " + fixed(t);
    return o;
}

Outcome ac4() {
    Outcome o = suites(Suite::tables, 2, kTablesMaxM);
    o.detail = "printed closed forms, m=2.." + std::to_string(kTablesMaxM) + ": " + o.detail;
    return o;
}

Outcome ac5() {
    Outcome o = suites(Suite::spectra, 2, kSpectraMaxM);
    o.detail = "m=2.." + std::to_string(kSpectraMaxM) + ": " + o.detail;
    return o;
}

Outcome ac6() { return suites(Suite::fixedness, 2, kStructureMaxM); }

Outcome ac7() {
    Outcome prism = suites(Suite::prism, 2, kStructureMaxM);
    Outcome genfun = suites(Suite::genfun, 2, 7);
    Outcome o{prism.pass && genfun.pass, "prism: " + prism.detail + "; genfun: " + genfun.detail};
    for (int m = 2; m <= kStructureMaxM; ++m) {
        const auto row = table4_row(m);
        if (!row.disjoint || row.col3 != row.col1 + row.col2 + 1) {
            o.pass = false;
            o.detail += "; additivity fails at m=" + std::to_string(m);
        }
    }
    return o;
}

Outcome ac8() { return suites(Suite::corollary, 2, kStructureMaxM); }

Outcome ac9() {
    Outcome o = suites(Suite::appendix, 2, kAppendixMaxM);
    o.detail = "printed rank-1 forms, m=2.." + std::to_string(kAppendixMaxM) + ": " + o.detail;
    return o;
}

Outcome ac10() {
    Outcome o = suites(Suite::integrality, 2, kStructureMaxM);
    std::string notes;
    for (int m = 5; m <= kStructureMaxM; ++m) {
        const auto r = run_suite(Suite::integrality, m);
        for (const auto& n : r.notes()) notes += "; " + n;
    }
    o.detail += notes;
    return o;
}

Outcome ac11() {
    auto render = [](unsigned workers) {
        VerifyOptions opt;
        opt.engine.workers = workers;
        std::ostringstream out;
        out << io::enumeration(ds_fvectors(9, ParityClass::all, opt.engine, true)).dump();
        for (int m = 2; m <= 6; ++m) out << io::report(run_suite(Suite::all, m, opt)).dump();
        out << io::enumeration(ds_fvectors(8, ParityClass::opposite, opt.engine)).dump();
        return out.str();
    };
    const std::string a = render(1), b = render(1), c = render(4), d = render(7);
    return {a == b && a == c && a == d, std::to_string(a.size()) + " bytes, workers 1,1,4,7"};
}

const std::map<std::string, std::pair<std::string, std::function<Outcome()>>>& criteria() {
    static const std::map<std::string, std::pair<std::string, std::function<Outcome()>>> table = {
        {"AC1", {"DS f-vector counts per class", ac1}},
        {"AC2", {"lattice points of Qf(2) and Qh(2)", ac2}},
        {"AC3", {"three-way oracle agreement", ac3}},
        {"AC4", {"table identity suites", ac4}},
        {"AC5", {"spectral suite", ac5}},
        {"AC6", {"eigen-fixedness of enumerated points", ac6}},
        {"AC7", {"prism, generating function, class additivity", ac7}},
        {"AC8", {"corollary on DS f-vectors", ac8}},
        {"AC9", {"norms, biorthogonality, projectors", ac9}},
        {"AC10", {"unimodular-basis integrality", ac10}},
        {"AC11", {"determinism across workers", ac11}},
    };
    return table;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> wanted;
    for (int i = 1; i < argc; ++i) wanted.emplace_back(argv[i]);
    if (wanted.empty())
        for (int i = 1; i <= 11; ++i) wanted.push_back("AC" + std::to_string(i));
    int failed = 0;
    for (const auto& id : wanted) {
        const auto it = criteria().find(id);
        if (it == criteria().end()) {
            std::printf("FAIL %s unknown criterion\n", id.c_str());
            ++failed;
            continue;
        }
        Outcome o;
        try {
            o = it->second.second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %s %s: %s\n", o.pass ? "PASS" : "FAIL", id.c_str(), it->second.first.c_str(),
                    o.detail.c_str());
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
