#include "qvertex/suites.hpp"

#include <algorithm>
#include <stdexcept>

#include "qvertex/fcoeff.hpp"
#include "qvertex/ksum.hpp"
#include "qvertex/nekrasov.hpp"
#include "qvertex/pool.hpp"
#include "qvertex/prodred.hpp"
#include "qvertex/schur.hpp"
#include "qvertex/vertex.hpp"

namespace qvertex {

namespace {

using Task = std::function<VerificationReport()>;

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

LaurentPoly tp(int e) { return LaurentPoly::var_power(var::t, e); }

// Hook lengths from arm and leg, without going through conjugate().
std::vector<int> hooks_by_walking(const Partition& mu) {
    std::vector<int> out;
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu.part(i); ++j) {
            int arm = mu.part(i) - j - 1, leg = 0;
            while (i + leg + 1 < mu.length() && mu.part(i + leg + 1) > j) ++leg;
            out.push_back(arm + leg + 1);
        }
    return out;
}

int partition_count(int n, int max_part) {
    if (n == 0) return 1;
    int c = 0;
    for (int p = 1; p <= std::min(n, max_part); ++p) c += partition_count(n - p, p);
    return c;
}

std::string pair_name(const Partition& a, const Partition& b) { return to_string(a) + " | " + to_string(b); }

void add(VerificationReport& r, std::string identity, std::string instance, bool pass) {
    r.entries.push_back(make_entry(std::move(identity), std::move(instance), pass));
}

// Partitions of exactly weight n.
VerificationReport partition_block(int n, bool summu) {
    VerificationReport r;
    const auto block = partitions_of(n);
    add(r, "block size = p(n)", std::to_string(n), static_cast<int>(block.size()) == partition_count(n, n));
    for (const auto& mu : block) {
        std::string inst = to_string(mu);
        add(r, "conjugate is an involution", inst, mu.conjugate().conjugate() == mu);
        add(r, "kappa(mu^t) = -kappa(mu)", inst, mu.conjugate().kappa() == -mu.kappa() && mu.kappa() % 2 == 0);
        int csum = 0, hsum = 0, sq = 0;
        for (int c : mu.contents()) csum += c;
        for (int h : mu.hooks()) hsum += h;
        for (int p : mu.parts()) sq += p * p;
        add(r, "sum of contents = kappa/2", inst, 2 * csum == mu.kappa());
        add(r, "hooks = arm + leg + 1", inst, sorted(mu.hooks()) == sorted(hooks_by_walking(mu)));
        add(r, "hooks(mu) = hooks(mu^t)", inst, sorted(mu.hooks()) == sorted(mu.conjugate().hooks()));
        add(r, "sum of hooks = sum mu_i^2 - kappa/2", inst, hsum == sq - mu.kappa() / 2);
        if (!summu) continue;
        int l = mu.length();
        for (int len = std::max(l, 1); len <= l + 3; ++len) {
            LaurentPoly lhs, rhs;
            for (int h : mu.hooks()) lhs += tp(h);
            for (int i = 1; i <= l; ++i)
                for (int j = i + 1; j <= len; ++j) lhs += tp(mu.part(i - 1) - mu.part(j - 1) + j - i);
            for (int i = 1; i <= l; ++i)
                for (int j = 1; j <= mu.part(i - 1) - i + len; ++j) rhs += tp(j);
            r.entries.push_back(check_equal("hook and pair-difference generating sum", inst + " n=" + std::to_string(len),
                                            lhs, rhs));
        }
    }
    return r;
}

std::vector<Task> partition_tasks(int max_weight, int summu_weight) {
    std::vector<Task> tasks;
    for (int n = 0; n <= max_weight; ++n)
        tasks.emplace_back([n, summu_weight] { return partition_block(n, n <= summu_weight); });
    return tasks;
}

VerificationReport schur_oracle_block(int n) {
    VerificationReport r;
    const int vars = 4;
    std::vector<int> exps{1, 3, 5, 7};
    for (const auto& mu : partitions_of(n)) {
        LaurentPoly oracle =
            schur_finite(mu, vars, std::max(n, 1)).specialize_t(exps).truncated(var::t, 2 * vars);
        r.entries.push_back(check_equal("s_mu(q^-rho) = tableau sum at x_i = t^(2i-1)", to_string(mu) + " order 8",
                                        lf_expand(principal_schur(mu), ExpandAt::zero, 2 * vars), oracle));
    }
    return r;
}

VerificationReport lr_block(int n) {
    VerificationReport r;
    for (const auto& lam : partitions_of(n))
        for (const auto& mu : subpartitions(lam)) {
            bool swap = true, transpose = true;
            for (const auto& [nu, c] : lr_skew_expand(lam, mu)) {
                swap = swap && lr_coefficient(lam, nu, mu) == c;
                transpose = transpose && lr_coefficient(lam.conjugate(), mu.conjugate(), nu.conjugate()) == c;
            }
            add(r, "c^lam_{mu nu} = c^lam_{nu mu}", pair_name(lam, mu), swap);
            add(r, "c^lam_{mu nu} = c^lam^t_{mu^t nu^t}", pair_name(lam, mu), transpose);
        }
    return r;
}

VerificationReport principal_symmetry_block(int n) {
    VerificationReport r;
    for (const auto& mu : partitions_of(n)) {
        LaurentFraction s = principal_schur(mu);
        LaurentFraction shifted = s.shifted(unit_exponent(var::t, mu.kappa()));
        LaurentFraction sign = mu.weight() % 2 ? LaurentFraction(-1) : LaurentFraction(1);
        r.entries.push_back(check_equal("s_mu^t(q^-rho) = q^(kappa/2) s_mu(q^-rho)", to_string(mu),
                                        principal_schur(mu.conjugate()), shifted));
        r.entries.push_back(check_equal("s_mu(q^rho) = (-1)^|mu| q^(kappa/2) s_mu(q^-rho)", to_string(mu),
                                        schur_at_mu_rho(mu, {}), sign * shifted));
    }
    return r;
}

VerificationReport transposed_skew_block(const Partition& lam, int skew_weight) {
    VerificationReport r;
    for (const auto& mu : subpartitions(lam))
        for (const auto& nu : enumerate(skew_weight)) {
            std::string inst = pair_name(lam, mu) + " at " + to_string(nu);
            LaurentFraction lhs = skew_at_mu_rho(lam, mu, nu);
            LaurentFraction sign = (lam.weight() - mu.weight()) % 2 ? LaurentFraction(-1) : LaurentFraction(1);
            r.entries.push_back(check_equal("s_{lam/mu}(q^(nu+rho)) = (-1)^|lam/mu| s_{lam^t/mu^t}(q^(-nu-rho))", inst, lhs,
                                            sign * skew_at_mu_rho(lam.conjugate(), mu.conjugate(), nu).negated_exponents()));
            r.entries.push_back(check_equal(
                "[corrected] s_{lam/mu}(q^(nu+rho)) = (-1)^|lam/mu| s_{lam^t/mu^t}(q^(-nu^t-rho))", inst, lhs,
                sign * skew_at_mu_rho(lam.conjugate(), mu.conjugate(), nu.conjugate()).negated_exponents()));
        }
    return r;
}

std::vector<Task> schur_tasks(int max_weight, int skew_weight, int T) {
    std::vector<Task> tasks;
    for (int n = 0; n <= max_weight; ++n) {
        tasks.emplace_back([n] { return schur_oracle_block(n); });
        tasks.emplace_back([n] { return lr_block(n); });
    }
    for (int n = 0; n <= max_weight + 2; ++n) tasks.emplace_back([n] { return principal_symmetry_block(n); });
    for (const auto& lam : enumerate(skew_weight))
        tasks.emplace_back([lam, skew_weight] { return transposed_skew_block(lam, skew_weight); });
    for (const auto& mu : enumerate(2))
        for (const auto& nu : enumerate(2))
            tasks.emplace_back([mu, nu, T] {
                VerificationReport r;
                r.entries.push_back(verify_skew_cauchy(mu, nu, 2, 2, T));
                return r;
            });
    for (int n : {2, 3})
        tasks.emplace_back([n, T] {
            VerificationReport r;
            r.entries.push_back(verify_chain_sum(n, 1, T));
            return r;
        });
    return tasks;
}

VerificationReport prodred_block(const Partition& a, int max_weight) {
    VerificationReport r;
    for (const auto& b : enumerate(max_weight - a.weight())) {
        std::string inst = pair_name(a, b);
        auto ms = pair_multiset(a, b);
        int count = 0;
        bool negative = true;
        for (auto [e, c] : ms) {
            count += std::abs(c);
            negative = negative && c < 0;
        }
        add(r, "pair multiset: all multiplicities negative", inst, negative);
        add(r, "pair multiset: total count |mu1| + |mu2|", inst, count == a.weight() + b.weight());
        r.entries.push_back(f_pair_transposed_identity(a, b));
        if (a.weight() <= 6 && b.weight() <= 6) {
            PairSums s = pair_sums(a, b);
            long total = 0;
            for (int m : s.plus) total += m;
            for (int m : s.minus) total -= m;
            add(r, "uncancelled exponent sum = (kappa2 - kappa1)/2", inst, 2 * total == b.kappa() - a.kappa());
        }
        if (a.weight() + b.weight() <= 4) {
            auto single = single_multiset(a);
            SignedExponentMultiset merged = ms;
            for (auto [e, c] : single)
                if ((merged[e] += c) == 0) merged.erase(e);
            for (const auto& f : {FactorKind::one_minus_Qq(), FactorKind::sinh(1)})
                r.entries.push_back(check_equal("product_over distributes over multiset union", inst,
                                                product_over(merged, f), product_over(ms, f) * product_over(single, f)));
        }
    }
    if (a.weight() <= max_weight) {
        std::string inst = to_string(a);
        SignedExponentMultiset contents, hooks;
        for (int c : a.contents()) --contents[c];
        for (int h : a.hooks()) {
            --hooks[h];
            --hooks[-h];
        }
        add(r, "pair_multiset(mu, 0) = contents", inst, pair_multiset(a, Partition{}) == contents);
        add(r, "pair_multiset(mu, mu) = +-hooks", inst, pair_multiset(a, a) == hooks);
        r.entries.push_back(check_equal("diag block = product over pair_multiset(mu, mu)", inst,
                                        diag_block_ratio(a, FactorKind::sinh(0)),
                                        product_over(pair_multiset(a, a), FactorKind::sinh(0))));
    }
    return r;
}

std::vector<Task> prodred_tasks(int max_weight) {
    std::vector<Task> tasks;
    for (const auto& a : enumerate(max_weight)) tasks.emplace_back([a, max_weight] { return prodred_block(a, max_weight); });
    return tasks;
}

VerificationReport concat(const std::vector<VerificationReport>& parts) {
    VerificationReport r;
    for (const auto& p : parts) r.append(p);
    return r;
}

VerificationReport run_serial(const std::vector<Task>& tasks) { return concat(run_indexed(tasks, 1)); }

std::string str(int v) { return std::to_string(v); }

}  // namespace

VerificationReport verify_partitions(int max_weight, int summu_weight) {
    auto r = run_serial(partition_tasks(max_weight, summu_weight));
    r.suite = "partitions";
    return r;
}

VerificationReport verify_schur(int max_weight, int skew_weight, int T) {
    auto r = run_serial(schur_tasks(max_weight, skew_weight, T));
    r.suite = "schur";
    return r;
}

VerificationReport verify_prodred(int max_weight) {
    auto r = run_serial(prodred_tasks(max_weight));
    r.suite = "prodred";
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"partitions", "schur", "prodred", "vertex",       "f",
                                                "k",          "kgen",  "sun",     "nekrasov-su2", "nekrasov-sun"};
    return names;
}

SuitePlan plan_suite(const std::string& name, const SuiteParams& p) {
    SuitePlan plan;
    plan.name = name;
    auto& ps = plan.params;
    auto& tasks = plan.tasks;
    if (name == "partitions") {
        int w = p.max_weight.value_or(10), s = std::min(w, 8);
        ps = {{"max_weight", str(w)}, {"summu_weight", str(s)}};
        tasks = partition_tasks(w, s);
    } else if (name == "schur") {
        int w = p.max_weight.value_or(6), T = p.qdeg.value_or(4), skew = std::min(w, 4);
        ps = {{"max_weight", str(w)}, {"skew_weight", str(skew)}, {"qdeg", str(T)}};
        tasks = schur_tasks(w, skew, T);
    } else if (name == "prodred") {
        int w = p.max_weight.value_or(8);
        ps = {{"max_weight", str(w)}};
        tasks = prodred_tasks(w);
    } else if (name == "vertex") {
        int w = p.max_weight.value_or(5), triple = std::max(w - 2, 0);
        ps = {{"pair_weight", str(w)}, {"triple_weight", str(triple)}};
        tasks.push_back(Task([w, triple] { return verify_vertex_symmetries(w, triple); }));
    } else if (name == "f") {
        int w = p.max_weight.value_or(8);
        ps = {{"max_weight", str(w)}};
        tasks.push_back(Task([w] { return verify_fcoeff(w); }));
    } else if (name == "k") {
        int w = p.max_weight.value_or(4), D = p.qdeg.value_or(5), wt = w + 1;
        ps = {{"max_weight", str(w)}, {"qdeg", str(D)}, {"transposed_max_weight", str(wt)}};
        tasks.push_back(Task([D] {
            VerificationReport r;
            r.entries.push_back(check_equal("K00 brute = closed", "D=" + str(D), k_brute({}, {}, D), k00_closed(D)));
            return r;
        }));
        for (const auto& a : enumerate(w))
            for (const auto& b : enumerate(w - a.weight()))
                tasks.push_back(Task([a, b, D] { return verify_k_forms(a, b, D); }));
        for (const auto& a : enumerate(wt))
            for (const auto& b : enumerate(wt - a.weight()))
                tasks.push_back(Task([a, b, D] {
                    auto r = verify_transposed_k(a, b, D);
                    r.append(verify_squared_k(a, b));
                    return r;
                }));
    } else if (name == "kgen" || name == "sun") {
        int w = p.max_weight.value_or(2), D = p.qdeg.value_or(3);
        ps = {{"part_weight", str(w)}, {"qdeg", str(D)}};
        const auto parts = enumerate(w);
        bool kgen = name == "kgen";
        for (const auto& a : parts)
            for (const auto& b : parts)
                tasks.push_back(Task([a, b, D, kgen] {
                    if (!kgen) return verify_sun_squares({a, b}, D);
                    VerificationReport r;
                    QSeries2 kt = ktilde_brute({a, b}, D);
                    QSeries outer(D, LaurentFraction{});
                    for (int d = 0; d <= D; ++d) outer[d] = kt[d][0];
                    r.entries.push_back(check_equal(
                        "Ktilde(N=2) = q^(kappa2/2) K(mu1,mu2^t)", pair_name(a, b), outer,
                        k_brute(a, b.conjugate(), D).scaled(LaurentFraction(LaurentPoly::var_power(var::t, b.kappa())))));
                    r.append(verify_kgen_forms({a, b}, D));
                    return r;
                }));
        for (const auto& a : parts)
            for (const auto& b : parts)
                for (const auto& c : parts)
                    tasks.push_back(Task([a, b, c, D, kgen] {
                        return kgen ? verify_kgen_forms({a, b, c}, D) : verify_sun_squares({a, b, c}, D);
                    }));
    } else if (name == "nekrasov-su2") {
        int B = p.bdeg.value_or(2), D = p.fdeg.value_or(4);
        ps = {{"bdeg", str(B)}, {"fdeg", str(D)}, {"m", p.m ? str(*p.m) : "0,1,2"}};
        for (int m = 0; m <= 2; ++m)
            if (!p.m || *p.m == m) tasks.push_back(Task([m, B, D] { return verify_su2(m, B, D); }));
        if (p.m && (*p.m < 0 || *p.m > 2)) throw std::invalid_argument("--m must be 0, 1 or 2");
    } else if (name == "nekrasov-sun") {
        int N = p.n.value_or(3), B = p.bdeg.value_or(1), D = p.fdeg.value_or(2);
        if (N != 2 && N != 3) throw std::invalid_argument("--n must be 2 or 3");
        ps = {{"n", str(N)}, {"bdeg", str(B)}, {"fdeg", str(D)}};
        tasks.push_back(Task([N, B, D] { return verify_sun_nekrasov(N, B, D); }));
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    return plan;
}

VerificationReport run_plan(const SuitePlan& plan, int threads) {
    VerificationReport r = concat(run_indexed(plan.tasks, threads));
    r.suite = plan.name;
    r.params = plan.params;
    return r;
}

}  // namespace qvertex
