#include "qvertex/schur.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "qvertex/memo.hpp"

namespace qvertex {

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<Partition, Partition>& p) const noexcept {
        PartitionHash h;
        return h(p.first) * 1000003u ^ h(p.second);
    }
};

using PairKey = std::pair<Partition, Partition>;

// Littlewood-Richardson tableaux of shape lambda/mu: rows filled top to
// bottom, each row right to left (the reverse reading order), with rows weakly
// increasing, columns strictly increasing and the reading word a lattice word.
class LrCounter {
public:
    LrCounter(const Partition& lambda, const Partition& mu) : lambda_(lambda), mu_(mu) {
        for (int r = 0; r < lambda.length(); ++r) {
            grid_.emplace_back(static_cast<std::size_t>(lambda.part(r)), 0);
            for (int c = lambda.part(r) - 1; c >= mu.part(r); --c) cells_.emplace_back(r, c);
        }
        counts_.assign(static_cast<std::size_t>(lambda.length()) + 1, 0);
    }

    SchurExpansion run() {
        fill(0);
        return std::move(result_);
    }

private:
    void fill(std::size_t k) {
        if (k == cells_.size()) {
            std::vector<int> content;
            for (int x : counts_)
                if (x > 0) content.push_back(x);
            ++result_[Partition(content)];
            return;
        }
        auto [r, c] = cells_[k];
        auto row = static_cast<std::size_t>(r);
        auto col = static_cast<std::size_t>(c);
        int hi = r + 1;
        if (c + 1 < lambda_.part(r)) hi = std::min(hi, grid_[row][col + 1]);
        int lo = 1;
        if (r > 0 && c >= mu_.part(r - 1)) lo = grid_[row - 1][col] + 1;
        for (int v = lo; v <= hi; ++v) {
            auto vi = static_cast<std::size_t>(v - 1);
            if (v > 1 && counts_[vi] + 1 > counts_[vi - 1]) continue;
            grid_[row][col] = v;
            ++counts_[vi];
            fill(k + 1);
            --counts_[vi];
        }
        grid_[row][col] = 0;
    }

    const Partition& lambda_;
    const Partition& mu_;
    std::vector<std::pair<int, int>> cells_;
    std::vector<std::vector<int>> grid_;
    std::vector<int> counts_;
    SchurExpansion result_;
};

MemoCache<PairKey, SchurExpansion, PairHash>& lr_cache() {
    static MemoCache<PairKey, SchurExpansion, PairHash> cache;
    return cache;
}

MemoCache<PairKey, LaurentFraction, PairHash>& mu_rho_cache() {
    static MemoCache<PairKey, LaurentFraction, PairHash> cache;
    return cache;
}

// Enumerates semistandard fillings of lambda/mu with entries <= n, calling
// visit(weight vector).
void for_each_ssyt(const Partition& lambda, const Partition& mu, int n,
                   const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<std::pair<int, int>> cells;
    std::vector<std::vector<int>> grid;
    for (int r = 0; r < lambda.length(); ++r) {
        grid.emplace_back(static_cast<std::size_t>(lambda.part(r)), 0);
        for (int c = mu.part(r); c < lambda.part(r); ++c) cells.emplace_back(r, c);
    }
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            visit(weight);
            return;
        }
        auto [r, c] = cells[k];
        auto row = static_cast<std::size_t>(r);
        auto col = static_cast<std::size_t>(c);
        int lo = 1;
        if (c > mu.part(r)) lo = grid[row][col - 1];
        if (r > 0 && c >= mu.part(r - 1)) lo = std::max(lo, grid[row - 1][col] + 1);
        for (int v = lo; v <= n; ++v) {
            grid[row][col] = v;
            ++weight[static_cast<std::size_t>(v - 1)];
            rec(k + 1);
            --weight[static_cast<std::size_t>(v - 1)];
        }
    };
    if (lambda.contains(mu)) rec(0);
}

}  // namespace

SchurExpansion lr_skew_expand(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) return {};
    return lr_cache().get_or_compute({lambda, mu}, [&] { return LrCounter(lambda, mu).run(); });
}

int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.weight() != mu.weight() + nu.weight()) return 0;
    auto e = lr_skew_expand(lambda, mu);
    auto it = e.find(nu);
    return it == e.end() ? 0 : it->second;
}

MultiPoly skew_schur_finite(const Partition& lambda, const Partition& mu, int total_vars, int first, int count,
                            int max_degree) {
    if (count < 1 || first < 0 || first + count > total_vars) throw std::invalid_argument("bad variable range");
    MultiPoly out(total_vars, max_degree);
    if (lambda.weight() - mu.weight() > max_degree) return out;
    MultiPoly::Monomial m(static_cast<std::size_t>(total_vars), 0);
    for_each_ssyt(lambda, mu, count, [&](const std::vector<int>& w) {
        for (int i = 0; i < count; ++i) m[static_cast<std::size_t>(first + i)] = w[static_cast<std::size_t>(i)];
        out.add_term(m, 1);
    });
    return out;
}

MultiPoly schur_finite(const Partition& mu, int nvars, int max_degree) {
    if (nvars < 1) throw std::invalid_argument("nvars must be positive");
    return skew_schur_finite(mu, Partition{}, nvars, 0, nvars, max_degree);
}

LaurentFraction principal_schur(const Partition& mu) {
    // (-1)^|mu| t^(-kappa/2) / prod (t^h - t^-h) = t^(sum h - kappa/2) / prod (1 - t^2h)
    int hook_sum = 0;
    LaurentFraction r(1);
    for (int h : mu.hooks()) {
        hook_sum += h;
        r *= LaurentFraction::over_binomial(1, unit_exponent(var::t, 2 * h));
    }
    return r.shifted(unit_exponent(var::t, hook_sum - mu.kappa() / 2));
}

LaurentFraction principal_skew(const Partition& lambda, const Partition& eta) {
    LaurentFraction sum;
    for (const auto& [nu, c] : lr_skew_expand(lambda, eta)) sum += principal_schur(nu) * Rat(c);
    return sum;
}

LaurentFraction schur_at_mu_rho(const Partition& nu, const Partition& mu) {
    return mu_rho_cache().get_or_compute({nu, mu}, [&] {
        LaurentFraction sum;
        for (const auto& eta : subpartitions(mu)) {
            if (!nu.contains(eta)) continue;
            sum += principal_skew(mu, eta) * principal_skew(nu, eta);
        }
        LaurentFraction r = (sum / principal_schur(mu)).shifted(unit_exponent(var::t, nu.kappa()));
        return nu.weight() % 2 == 0 ? r : -r;
    });
}

LaurentFraction skew_at_mu_rho(const Partition& lambda, const Partition& eta, const Partition& mu) {
    LaurentFraction sum;
    for (const auto& [nu, c] : lr_skew_expand(lambda, eta)) sum += schur_at_mu_rho(nu, mu) * Rat(c);
    return sum;
}

ReportEntry verify_skew_cauchy(const Partition& mu, const Partition& nu, int nx, int ny, int max_degree) {
    int n = nx + ny;
    MultiPoly lhs(n, max_degree);
    int eta_max = std::max(mu.weight(), nu.weight()) + max_degree;
    for (const auto& eta : enumerate(eta_max)) {
        if (!eta.contains(mu) || !eta.contains(nu)) continue;
        if (2 * eta.weight() - mu.weight() - nu.weight() > max_degree) continue;
        lhs += skew_schur_finite(eta, mu, n, 0, nx, max_degree) * skew_schur_finite(eta, nu, n, nx, ny, max_degree);
    }
    MultiPoly kernel = MultiPoly::constant(n, max_degree, 1);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            MultiPoly factor = MultiPoly::constant(n, max_degree, 1) -
                               MultiPoly::variable(n, max_degree, i) * MultiPoly::variable(n, max_degree, nx + j);
            kernel = kernel * factor.inverse();
        }
    MultiPoly tail(n, max_degree);
    for (const auto& tau : subpartitions(mu)) {
        if (!nu.contains(tau)) continue;
        tail += skew_schur_finite(mu, tau, n, nx, ny, max_degree) * skew_schur_finite(nu, tau, n, 0, nx, max_degree);
    }
    MultiPoly rhs = kernel * tail;
    std::string inst = "mu=" + to_string(mu) + " nu=" + to_string(nu) + " nx=" + std::to_string(nx) +
                       " ny=" + std::to_string(ny) + " T=" + std::to_string(max_degree);
    ReportEntry e = make_entry("skew_cauchy", inst, lhs == rhs);
    if (!e.pass) {
        e.lhs = to_string(lhs);
        e.rhs = to_string(rhs);
    }
    return e;
}

ReportEntry verify_chain_sum(int n, int nvars, int max_degree) {
    if (n < 2) throw std::invalid_argument("chain needs N >= 2");
    const int links = n - 1;
    // Variables: x^k (nvars each), y^k (nvars each), then Q_1..Q_links.
    const int total = 2 * links * nvars + links;
    auto x_first = [&](int k) { return 2 * k * nvars; };
    auto y_first = [&](int k) { return 2 * k * nvars + nvars; };
    auto q_var = [&](int k) { return 2 * links * nvars + k; };

    MultiPoly lhs(total, max_degree);
    // Every term has total degree >= sum |nu^k|, which bounds the enumeration.
    auto pool = enumerate(max_degree);
    std::vector<const Partition*> nus(static_cast<std::size_t>(links));
    std::vector<const Partition*> etas(static_cast<std::size_t>(links + 1));
    Partition empty;
    etas[0] = &empty;
    etas[static_cast<std::size_t>(links)] = &empty;

    std::function<void(int, int)> pick_nu;
    std::function<void(int)> pick_eta;
    pick_eta = [&](int k) {
        // etas[k] for k = 1..links-1 must sit inside nus[k-1] and nus[k].
        if (k == links) {
            MultiPoly term = MultiPoly::constant(total, max_degree, 1);
            for (int j = 0; j < links; ++j) {
                const Partition& nu = *nus[static_cast<std::size_t>(j)];
                term = term * skew_schur_finite(nu, *etas[static_cast<std::size_t>(j)], total, x_first(j), nvars,
                                                max_degree);
                if (term.is_zero()) return;
                for (int p = 0; p < nu.weight(); ++p) term = term * MultiPoly::variable(total, max_degree, q_var(j));
                term = term * skew_schur_finite(nu, *etas[static_cast<std::size_t>(j + 1)], total, y_first(j), nvars,
                                                max_degree);
                if (term.is_zero()) return;
            }
            lhs += term;
            return;
        }
        for (const auto& eta : subpartitions(*nus[static_cast<std::size_t>(k - 1)])) {
            if (!nus[static_cast<std::size_t>(k)]->contains(eta)) continue;
            etas[static_cast<std::size_t>(k)] = &eta;
            pick_eta(k + 1);
        }
    };
    pick_nu = [&](int k, int budget) {
        if (k == links) {
            pick_eta(1);
            return;
        }
        for (const auto& nu : pool) {
            if (nu.weight() > budget) break;
            nus[static_cast<std::size_t>(k)] = &nu;
            pick_nu(k + 1, budget - nu.weight());
        }
    };
    pick_nu(0, max_degree);

    MultiPoly rhs = MultiPoly::constant(total, max_degree, 1);
    for (int k = 0; k < links; ++k)
        for (int l = k + 1; l <= links; ++l) {
            // Pair (x^k, y^(l-1)) weighted by Q_k ... Q_(l-1).
            MultiPoly weight = MultiPoly::constant(total, max_degree, 1);
            for (int p = k; p < l; ++p) weight = weight * MultiPoly::variable(total, max_degree, q_var(p));
            for (int i = 0; i < nvars; ++i)
                for (int j = 0; j < nvars; ++j) {
                    MultiPoly mono = weight * MultiPoly::variable(total, max_degree, x_first(k) + i) *
                                     MultiPoly::variable(total, max_degree, y_first(l - 1) + j);
                    rhs = rhs * (MultiPoly::constant(total, max_degree, 1) - mono).inverse();
                }
        }
    std::string inst = "N=" + std::to_string(n) + " nvars=" + std::to_string(nvars) + " T=" + std::to_string(max_degree);
    ReportEntry e = make_entry("chain_sum", inst, lhs == rhs);
    if (!e.pass) {
        e.lhs = to_string(lhs);
        e.rhs = to_string(rhs);
    }
    return e;
}

}  // namespace qvertex
