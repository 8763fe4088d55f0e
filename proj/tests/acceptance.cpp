// One line per acceptance criterion. argv[1] is the qvertex binary (criterion 11).
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qvertex/suites.hpp"

using namespace qvertex;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Filter = std::function<bool(const ReportEntry&)>;

// Criteria sharing a suite reuse one run.
VerificationReport run(const std::string& suite, SuiteParams p = {}) {
    static std::map<std::string, VerificationReport> cache;
    auto it = cache.find(suite);
    if (it == cache.end()) it = cache.emplace(suite, run_plan(plan_suite(suite, p), 1)).first;
    return it->second;
}

VerificationReport select(const VerificationReport& r, const Filter& keep) {
    VerificationReport out;
    out.suite = r.suite;
    for (const auto& e : r.entries)
        if (keep(e)) out.entries.push_back(e);
    return out;
}

// Counts plus the failing identities with how often they failed and a sample note.
Outcome summarize(const std::vector<VerificationReport>& reports) {
    std::size_t passed = 0, failed = 0, reported = 0;
    std::vector<std::string> order;
    std::map<std::string, std::pair<int, std::string>> fails;
    for (const auto& r : reports) {
        passed += r.passed();
        failed += r.failed();
        reported += r.reported();
        for (const auto& e : r.entries) {
            if (e.pass || e.informational) continue;
            auto [it, fresh] = fails.try_emplace(e.identity, 0, e.note);
            if (fresh) order.push_back(e.identity);
            ++it->second.first;
        }
    }
    std::ostringstream os;
    os << passed << " passed, " << failed << " failed";
    if (reported) os << ", " << reported << " reported";
    for (const auto& id : order) {
        os << "; fails: " << id << " x" << fails[id].first;
        if (!fails[id].second.empty()) os << " (" << fails[id].second << ")";
    }
    return {failed == 0, os.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool starts(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    struct Criterion {
        int id;
        std::string title;
        double budget;
        std::function<Outcome()> check;
    };
    double suite_seconds = 0;
    std::vector<Criterion> criteria = {
        {1, "partition calculus, hook sums, generating identity", 10,
         [] { return summarize({run("partitions")}); }},
        {2, "pair multiset normal form and prodred consistency (weight <= 8)", 30,
         [] { return summarize({run("prodred")}); }},
        {3, "Schur layer: tableau oracle, LR symmetries, principal and transposed skew rules", 120,
         [] {
             auto r = run("schur");
             return summarize({select(r, [](const ReportEntry& e) {
                 return e.identity != "skew_cauchy" && e.identity != "chain_sum";
             })});
         }},
        {4, "skew Cauchy and chained Cauchy sums", 60,
         [] {
             auto r = run("schur");
             return summarize({select(r, [](const ReportEntry& e) {
                 return e.identity == "skew_cauchy" || e.identity == "chain_sum";
             })});
         }},
        {5, "vertex forms, symmetries and degenerations", 300, [] { return summarize({run("vertex")}); }},
        {6, "f layer: forms, closed form, values at q = 1, transposed nonnegativity", 60,
         [] { return summarize({run("f")}); }},
        {7, "K: brute = exp form = product form, K00 at degree 5", 300,
         [] {
             auto r = run("k", {.max_weight = 4, .qdeg = 5});
             return summarize({select(r, [](const ReportEntry& e) {
                 return starts(e.identity, "K = ") || starts(e.identity, "K00");
             })});
         }},
        {8, "transposed K: series, multiset, sinh and squared forms (weight <= 5)", 300,
         [] {
             auto r = run("k", {.max_weight = 4, .qdeg = 5});
             return summarize({select(r, [](const ReportEntry& e) {
                 return !starts(e.identity, "K = ") && !starts(e.identity, "K00");
             })});
         }},
        {9, "Ktilde: N=2 reduction, closed forms, squared sinh identity (N = 3)", 600,
         [] { return summarize({run("kgen"), run("sun")}); }},
        {10, "SU(2) theorem for m = 0, 1, 2; SU(3) phi matching reported", 600,
         [] { return summarize({run("nekrasov-su2"), run("nekrasov-sun")}); }},
        {11, "verify all is byte-identical across thread counts", 0,
         [&] {
             if (cli.empty()) return Outcome{false, "qvertex binary path not given"};
             auto dir = std::filesystem::temp_directory_path();
             std::string a = (dir / "qvertex_det_1.json").string(), b = (dir / "qvertex_det_4.json").string();
             std::string base = "\"" + cli + "\" verify all --json ";
             int ra = std::system((base + a + " --threads 1 > /dev/null").c_str());
             int rb = std::system((base + b + " --threads 4 > /dev/null").c_str());
             std::string ja = slurp(a), jb = slurp(b);
             bool same = !ja.empty() && ja == jb && ra == rb;
             return Outcome{same, std::to_string(ja.size()) + " bytes, " + (same ? "identical" : "differ")};
         }},
    };

    bool all = true;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        double budget = c.id == 11 ? 2 * suite_seconds + 30 : c.budget;
        if (c.id != 11) suite_seconds += s;
        bool in_time = s <= budget;
        bool pass = o.pass && in_time;
        all = all && pass;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.1f s of %.0f s", s, budget);
        std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << o.detail
                  << "; " << timing << (in_time ? "" : ", over budget") << "]" << std::endl;
    }
    return all ? 0 : 1;
}
