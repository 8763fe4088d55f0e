// qvertex: verification suites and exact values for the topological vertex engine.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "qvertex/fcoeff.hpp"
#include "qvertex/ksum.hpp"
#include "qvertex/nekrasov.hpp"
#include "qvertex/pool.hpp"
#include "qvertex/prodred.hpp"
#include "qvertex/serialize.hpp"
#include "qvertex/suites.hpp"
#include "qvertex/vertex.hpp"

using namespace qvertex;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string target;
    SuiteParams params;
    std::string json_path;
    int threads = 1;
    bool timing = false;
    long inject = 0;
    std::optional<std::string> mu, nu, mu1, mu2, mu3;
    bool transpose2 = false, two_var = false;
    std::string expand;
    int order = 8;
};

Partition parse_partition(const std::optional<std::string>& text, const char* flag) {
    if (!text) throw UsageError(std::string("missing ") + flag);
    try {
        return Partition::parse(*text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad partition for ") + flag + ": " + e.what());
    }
}

std::string clip(const std::string& s, std::size_t n = 240) { return s.size() <= n ? s : s.substr(0, n) + " ..."; }

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << j.dump(2) << '\n';
}

void print_report(const VerificationReport& r, std::ostream& os) {
    os << "suite " << r.suite;
    for (const auto& [k, v] : r.params) os << "  " << k << "=" << v;
    os << '\n';
    // Per-identity tallies in first-seen order.
    std::vector<std::string> order;
    std::map<std::string, std::array<std::size_t, 3>> tally;
    for (const auto& e : r.entries) {
        auto [it, fresh] = tally.try_emplace(e.identity, std::array<std::size_t, 3>{0, 0, 0});
        if (fresh) order.push_back(e.identity);
        ++it->second[e.pass ? 0 : (e.informational ? 2 : 1)];
    }
    for (const auto& id : order) {
        const auto& t = tally[id];
        os << "  " << std::left << std::setw(72) << clip(id, 72) << std::right << std::setw(7) << t[0] << " pass"
           << std::setw(6) << t[1] << " fail";
        if (t[2]) os << std::setw(6) << t[2] << " reported";
        os << '\n';
    }
    for (const auto& e : r.entries) {
        if (e.pass) continue;
        os << "  " << (e.informational ? "REPORTED " : "FAIL ") << e.identity << " @ " << e.instance;
        if (!e.note.empty()) os << "  [" << clip(e.note) << "]";
        os << "\n      lhs: " << clip(e.lhs) << "\n      rhs: " << clip(e.rhs) << '\n';
    }
    os << "  passed " << r.passed() << "  failed " << r.failed() << "  reported " << r.reported() << '\n';
}

int run_verify(const Options& o) {
    std::vector<SuitePlan> plans;
    try {
        if (o.target == "all") {
            for (const auto& name : suite_names()) plans.push_back(plan_suite(name, o.params));
        } else {
            plans.push_back(plan_suite(o.target, o.params));
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    // One pool over every task of every requested suite; results come back in task order.
    std::vector<std::function<VerificationReport()>> tasks;
    for (const auto& p : plans) tasks.insert(tasks.end(), p.tasks.begin(), p.tasks.end());
    auto start = std::chrono::steady_clock::now();
    auto parts = run_indexed(tasks, o.threads);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::vector<VerificationReport> reports;
    std::size_t next = 0;
    for (const auto& p : plans) {
        VerificationReport r;
        r.suite = p.name;
        r.params = p.params;
        for (std::size_t i = 0; i < p.tasks.size(); ++i) r.append(parts[next++]);
        reports.push_back(std::move(r));
    }

    std::size_t failed = 0, passed = 0, reported = 0;
    for (const auto& r : reports) {
        print_report(r, std::cout);
        failed += r.failed();
        passed += r.passed();
        reported += r.reported();
    }
    std::cout << (failed ? "FAILED" : "OK") << "  passed " << passed << "  failed " << failed << "  reported "
              << reported << "  wall " << std::fixed << std::setprecision(2) << seconds << " s\n";

    if (!o.json_path.empty()) {
        json j = {{"engine", kEngineVersion}, {"units", units_json()}, {"suites", json::array()}};
        for (const auto& r : reports) j["suites"].push_back(to_json(r));
        j["summary"] = {{"passed", passed}, {"failed", failed}, {"reported", reported}};
        if (o.timing) j["wall_time_s"] = seconds;
        write_json(o.json_path, j);
    }
    return failed ? kExitFail : 0;
}

void print_value(const LaurentFraction& v, const Options& o, json& j) {
    std::cout << to_string(v) << '\n';
    j["value"] = to_json(v);
    if (o.expand.empty()) return;
    ExpandAt at;
    if (o.expand == "at_zero") {
        at = ExpandAt::zero;
    } else if (o.expand == "at_infinity") {
        at = ExpandAt::infinity;
    } else {
        throw UsageError("--expand must be at_zero or at_infinity");
    }
    if (v.num().used_vars() & ~1u || v.den().used_vars() & ~1u) throw UsageError("--expand needs a value in t only");
    LaurentPoly e = lf_expand(v, at, o.order);
    std::cout << (at == ExpandAt::zero ? "t -> 0: " : "u = 1/t -> 0: ") << to_string(e, false) << " + O("
              << (at == ExpandAt::zero ? "t" : "u") << "^" << o.order + 1 << ")\n";
    j["expansion"] = {{"at", o.expand}, {"order", o.order}, {"terms", to_json(e)}};
}

int run_compute(const Options& o) {
    json j = {{"engine", kEngineVersion}, {"units", units_json()}, {"kind", o.target}};
    const std::string& kind = o.target;
    if (kind == "w1") {
        Partition mu = parse_partition(o.mu ? o.mu : o.mu1, "--mu");
        print_value(w1(mu), o, j);
    } else if (kind == "w2") {
        Partition a = parse_partition(o.mu ? o.mu : o.mu1, "--mu");
        Partition b = parse_partition(o.nu ? o.nu : o.mu2, "--nu");
        print_value(w2(a, b), o, j);
    } else if (kind == "w3") {
        Partition a = parse_partition(o.mu1, "--mu1"), b = parse_partition(o.mu2, "--mu2"),
                  c = parse_partition(o.mu3, "--mu3");
        print_value(w3(a, b, c), o, j);
    } else if (kind == "f") {
        Partition a = parse_partition(o.mu1, "--mu1"), b = parse_partition(o.mu2, "--mu2");
        if (o.transpose2) b = b.conjugate();
        if (o.two_var) {
            LaurentFraction v = f_pair_2var(a, b);
            std::cout << "(t = q1^(1/2), s = q2^(1/2))\n";
            print_value(v, o, j);
        } else {
            LaurentPoly f = f_pair(a, b);
            std::cout << to_string(f) << '\n';
            j["value"] = to_json(f);
            json table = json::array();
            std::cout << "C_k:";
            for (auto [k, c] : c_coeffs(a, b)) {
                std::cout << ' ' << k << ':' << c;
                table.push_back({k, c});
            }
            std::cout << '\n';
            j["c_coeffs"] = table;
        }
    } else if (kind == "k") {
        Partition a = parse_partition(o.mu1, "--mu1"), b = parse_partition(o.mu2, "--mu2");
        int D = o.params.qdeg.value_or(4);
        QSeries k = k_brute(a, o.transpose2 ? b.conjugate() : b, D);
        std::cout << to_string(k) << '\n';
        j["value"] = to_json(k);
        if (o.transpose2) {
            LaurentFraction r = k_transposed_rational(a, b);
            std::cout << "K/K00 = " << to_string(r) << '\n';
            j["ratio"] = to_json(r);
        }
    } else if (kind == "z") {
        int m = o.params.m.value_or(0), B = o.params.bdeg.value_or(2), D = o.params.fdeg.value_or(4);
        if (m < 0 || m > 2) throw UsageError("--m must be 0, 1 or 2");
        QSeries2 z = z_su2(m, B, D);
        std::cout << "(outer P = Q_B, inner Q = Q_F)\n" << to_string(z) << '\n';
        j["value"] = to_json(z);
        j["params"] = {{"m", m}, {"bdeg", B}, {"fdeg", D}};
    } else if (kind == "multiset") {
        SignedExponentMultiset ms;
        if (o.mu) {
            ms = single_multiset(parse_partition(o.mu, "--mu"));
        } else {
            ms = pair_multiset(parse_partition(o.mu1, "--mu1"), parse_partition(o.mu2, "--mu2"));
        }
        std::cout << to_string(ms) << '\n';
        j["value"] = to_json(ms);
    } else {
        throw UsageError("unknown compute kind: " + kind);
    }
    if (!o.json_path.empty()) write_json(o.json_path, j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of topological vertex identities"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value file; flags override it");
    Options o;
    int max_weight = -1, qdeg = -1, bdeg = -1, fdeg = -1, m = -1, n = -1;
    app.add_option("--max-weight", max_weight, "partition weight bound")->check(CLI::NonNegativeNumber);
    app.add_option("--qdeg", qdeg, "Q truncation degree")->check(CLI::NonNegativeNumber);
    app.add_option("--bdeg", bdeg, "base degree bound")->check(CLI::NonNegativeNumber);
    app.add_option("--fdeg", fdeg, "fiber truncation degree")->check(CLI::NonNegativeNumber);
    app.add_option("--m", m, "framing, 0 1 or 2")->check(CLI::NonNegativeNumber);
    app.add_option("--n", n, "rank N, 2 or 3")->check(CLI::NonNegativeNumber);
    app.add_option("--json", o.json_path, "write the JSON report here");
    app.add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--timing", o.timing, "include wall time in JSON");
    app.add_option("--inject-failure", o.inject, "perturb the n-th comparison (exit-code tests)")->group("Debug");
    app.add_option("--mu", o.mu, "partition, comma separated");
    app.add_option("--nu", o.nu, "second partition");
    app.add_option("--mu1", o.mu1, "first slot partition");
    app.add_option("--mu2", o.mu2, "second slot partition");
    app.add_option("--mu3", o.mu3, "third slot partition");
    app.add_flag("--transpose2", o.transpose2, "use the conjugate of the second partition");
    app.add_flag("--two-var", o.two_var, "two-variable f");
    app.add_option("--expand", o.expand, "at_zero or at_infinity");
    app.add_option("--order", o.order, "expansion order")->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify", "run a verification suite")->fallthrough();
    verify->add_option("suite", o.target, "partitions schur prodred vertex f k kgen sun nekrasov-su2 nekrasov-sun all")
        ->required();
    auto* compute = app.add_subcommand("compute", "print one exact value")->fallthrough();
    compute->add_option("kind", o.target, "w1 w2 w3 f k z multiset")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    auto set = [](std::optional<int>& field, int v) {
        if (v >= 0) field = v;
    };
    set(o.params.max_weight, max_weight);
    set(o.params.qdeg, qdeg);
    set(o.params.bdeg, bdeg);
    set(o.params.fdeg, fdeg);
    set(o.params.m, m);
    set(o.params.n, n);
    if (o.inject > 0) set_injected_failure(o.inject);

    try {
        return verify->parsed() ? run_verify(o) : run_compute(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
}
