#include "qvertex/laurent_fraction.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qvertex {

namespace {

std::mutex cyclo_mutex;

// Primitive direction of e with first nonzero component positive; returns
// (dir, g, flipped) with e = (flipped ? -g : g) * dir.
struct Direction {
    Exponent dir{};
    int multiple = 0;
    bool flipped = false;
};

Direction split_direction(const Exponent& e) {
    Direction d;
    int g = 0;
    for (int x : e) g = std::gcd(g, x < 0 ? -x : x);
    if (g == 0) throw std::domain_error("binomial 1 - x^0 vanishes");
    d.multiple = g;
    for (std::size_t i = 0; i < kNumVars; ++i) d.dir[i] = e[i] / g;
    for (int x : d.dir) {
        if (x == 0) continue;
        if (x < 0) {
            d.flipped = true;
            d.dir = (-1) * d.dir;
        }
        break;
    }
    return d;
}

// Lexicographically lowest term scaled to 1 with minimal degrees 0; the
// removed unit is returned as (shift, coefficient) so that
// poly = coefficient * x^shift * normalised.
LaurentPoly normalise_unit(const LaurentPoly& poly, Exponent* shift, Rat* coeff) {
    Exponent lo{};
    for (std::size_t i = 0; i < kNumVars; ++i) lo[i] = poly.min_degree(static_cast<int>(i));
    Rat c = poly.lowest().second;
    *shift = lo;
    *coeff = c;
    return poly.shifted((-1) * lo) * Rat(1 / c);
}

std::vector<int> divisors(int n) {
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

// Power-series inverse of F(w) (constant term 1) up to w^n, raised to mult.
std::vector<Rat> inverse_series(const CycloFactor& f, int n, int mult) {
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(0));
    if (f.order == 1) {
        c.assign(c.size(), Rat(1));
    } else {
        const auto& phi = cyclotomic(f.order);
        c[0] = 1;
        for (int k = 1; k <= n; ++k) {
            Rat acc = 0;
            for (int j = 1; j <= k && j < static_cast<int>(phi.size()); ++j)
                acc -= Rat(phi[static_cast<std::size_t>(j)]) * c[static_cast<std::size_t>(k - j)];
            c[static_cast<std::size_t>(k)] = acc;
        }
    }
    std::vector<Rat> out(c.size(), Rat(0));
    out[0] = 1;
    for (int r = 0; r < mult; ++r) {
        std::vector<Rat> next(c.size(), Rat(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (out[i] == 0) continue;
            for (std::size_t j = 0; i + j < c.size(); ++j) next[i + j] += out[i] * c[j];
        }
        out.swap(next);
    }
    return out;
}

// Multiplies two polynomials keeping only terms with v-exponent <= cap.
LaurentPoly mul_capped(const LaurentPoly& a, const LaurentPoly& b, int v, int cap) {
    std::vector<LaurentPoly::Term> terms;
    auto vi = static_cast<std::size_t>(v);
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            if (ea[vi] + eb[vi] <= cap) terms.emplace_back(ea + eb, ca * cb);
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly expand_factors(const LaurentFraction::FactorMap& fm) {
    LaurentPoly d(1);
    for (const auto& [f, m] : fm) d *= factor_poly(f).pow(m);
    return d;
}

// Candidate primitive directions for cyclotomic factors of p.
std::vector<Exponent> candidate_directions(const LaurentPoly& p) {
    std::set<Exponent> dirs;
    const auto& ts = p.terms();
    for (std::size_t i = 0; i < ts.size() && dirs.size() < 64; ++i)
        for (std::size_t j = i + 1; j < ts.size() && dirs.size() < 64; ++j)
            dirs.insert(split_direction(ts[j].first - ts[i].first).dir);
    return {dirs.begin(), dirs.end()};
}

}  // namespace

int euler_phi(int d) {
    int result = d, n = d;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

std::map<int, std::vector<mpz_class>> cyclo_cache;

// Caller holds cyclo_mutex. Map references stay valid across inserts.
const std::vector<mpz_class>& cyclotomic_locked(int d) {
    if (auto it = cyclo_cache.find(d); it != cyclo_cache.end()) return it->second;
    // u^d - 1 divided by Phi_k for every proper divisor k.
    std::vector<mpz_class> p(static_cast<std::size_t>(d) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(d)] = 1;
    for (int k : divisors(d)) {
        if (k == d) continue;
        const auto& phik = cyclotomic_locked(k);
        std::size_t dk = phik.size() - 1;
        std::vector<mpz_class> q(p.size() - dk, 0);
        for (std::size_t i = p.size(); i-- > dk;) {
            mpz_class c = p[i];
            q[i - dk] = c;
            for (std::size_t j = 0; j <= dk; ++j) p[i - dk + j] -= c * phik[j];
        }
        p = std::move(q);
    }
    return cyclo_cache.emplace(d, std::move(p)).first->second;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic order must be positive");
    std::lock_guard lock(cyclo_mutex);
    return cyclotomic_locked(d);
}

LaurentPoly factor_poly(const CycloFactor& f) {
    if (f.order == 1)
        return LaurentPoly(1) - LaurentPoly::monomial(f.dir);
    std::vector<LaurentPoly::Term> terms;
    const auto& c = cyclotomic(f.order);
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) terms.emplace_back(static_cast<int>(k) * f.dir, Rat(c[k]));
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentFraction::LaurentFraction(const LaurentPoly& num, const LaurentPoly& den) : num_(num) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) return;
    absorb_residual(den);
    reduce();
}

LaurentFraction LaurentFraction::over_factor(const LaurentPoly& num, Exponent dir, int order, int mult) {
    Direction d = split_direction(dir);
    if (d.multiple != 1) throw std::invalid_argument("factor direction must be primitive");
    LaurentFraction r;
    r.num_ = num;
    if (d.flipped) {
        // F(u^-1) = u^-phi(d) F(u) for d >= 2, and 1 - u^-1 = -u^-1 (1 - u).
        int shift = order == 1 ? 1 : euler_phi(order);
        r.num_ = r.num_.shifted((shift * mult) * d.dir);
        if (order == 1 && mult % 2 != 0) r.num_ = -r.num_;
    }
    if (mult != 0) r.factors_[CycloFactor{d.dir, order}] = mult;
    if (mult < 0) {
        r.num_ *= expand_factors({{CycloFactor{d.dir, order}, -mult}});
        r.factors_.clear();
    }
    r.reduce();
    return r;
}

LaurentFraction LaurentFraction::over_binomial(const LaurentPoly& num, const Exponent& e, int mult) {
    Direction d = split_direction(e);
    LaurentFraction r;
    r.num_ = num;
    if (d.flipped) {
        // 1 - u^-g = -u^-g (1 - u^g)
        r.num_ = r.num_.shifted((d.multiple * mult) * d.dir);
        if (mult % 2 != 0) r.num_ = -r.num_;
    }
    for (int k : divisors(d.multiple)) r.factors_[CycloFactor{d.dir, k}] += mult;
    if (mult < 0) {
        FactorMap inv;
        for (auto& [f, m] : r.factors_) inv[f] = -m;
        r.num_ *= expand_factors(inv);
        r.factors_.clear();
    }
    r.reduce();
    return r;
}

LaurentFraction LaurentFraction::from_parts(LaurentPoly num, FactorMap factors,
                                            std::optional<LaurentPoly> residual) {
    LaurentFraction r;
    r.num_ = std::move(num);
    r.factors_ = std::move(factors);
    for (auto it = r.factors_.begin(); it != r.factors_.end();)
        it = it->second == 0 ? r.factors_.erase(it) : std::next(it);
    if (residual && !residual->is_constant()) r.residual_ = std::move(residual);
    r.reduce();
    return r;
}

LaurentPoly LaurentFraction::den() const {
    LaurentPoly d = expand_factors(factors_);
    if (residual_) d *= *residual_;
    return d;
}

void LaurentFraction::absorb_residual(LaurentPoly poly) {
    Exponent shift{};
    Rat coeff;
    LaurentPoly p = normalise_unit(poly, &shift, &coeff);
    num_ = num_.shifted((-1) * shift) * Rat(1 / coeff);
    if (p.is_constant()) return;
    for (const Exponent& dir : candidate_directions(p)) {
        int extent = std::numeric_limits<int>::max();
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (dir[i] == 0) continue;
            int v = static_cast<int>(i);
            int span = (p.max_degree(v) - p.min_degree(v)) / std::abs(dir[i]);
            extent = std::min(extent, span);
        }
        for (int d = 1; extent > 0 && d <= 4 * extent * extent + 2; ++d) {
            if (euler_phi(d) > extent) continue;
            CycloFactor f{dir, d};
            LaurentPoly fp = factor_poly(f);
            LaurentPoly q;
            while (exact_divide(p, fp, &q)) {
                p = std::move(q);
                factors_[f] += 1;
                extent -= euler_phi(d);
            }
        }
    }
    // Division by normalised factors may leave a unit behind.
    p = normalise_unit(p, &shift, &coeff);
    num_ = num_.shifted((-1) * shift) * Rat(1 / coeff);
    if (p.is_constant()) return;
    residual_ = residual_ ? (*residual_ * p) : p;
}

void LaurentFraction::reduce() {
    if (num_.is_zero()) {
        factors_.clear();
        residual_.reset();
        return;
    }
    for (auto it = factors_.begin(); it != factors_.end();) {
        LaurentPoly fp = factor_poly(it->first);
        LaurentPoly q;
        while (it->second > 0 && exact_divide(num_, fp, &q)) {
            num_ = std::move(q);
            --it->second;
        }
        it = it->second == 0 ? factors_.erase(it) : std::next(it);
    }
    if (residual_) {
        LaurentPoly q;
        if (exact_divide(num_, *residual_, &q)) {
            num_ = std::move(q);
            residual_.reset();
        }
    }
}

LaurentFraction LaurentFraction::operator-() const {
    LaurentFraction r = *this;
    r.num_ = -r.num_;
    return r;
}

LaurentFraction& LaurentFraction::operator+=(const LaurentFraction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (factors_ == o.factors_ && residual_ == o.residual_) {
        num_ += o.num_;
        reduce();
        return *this;
    }
    FactorMap lcm = factors_, mine, theirs;
    for (const auto& [f, m] : o.factors_) lcm[f] = std::max(lcm[f], m);
    for (const auto& [f, m] : lcm) {
        auto a = factors_.find(f);
        auto b = o.factors_.find(f);
        int ma = a == factors_.end() ? 0 : a->second;
        int mb = b == o.factors_.end() ? 0 : b->second;
        if (m > ma) mine[f] = m - ma;
        if (m > mb) theirs[f] = m - mb;
    }
    LaurentPoly lhs = num_ * expand_factors(mine);
    LaurentPoly rhs = o.num_ * expand_factors(theirs);
    std::optional<LaurentPoly> res;
    if (residual_ == o.residual_) {
        res = residual_;
    } else {
        if (o.residual_) lhs *= *o.residual_;
        if (residual_) rhs *= *residual_;
        res = residual_ ? (o.residual_ ? *residual_ * *o.residual_ : *residual_) : *o.residual_;
    }
    num_ = lhs + rhs;
    factors_ = std::move(lcm);
    residual_ = std::move(res);
    reduce();
    return *this;
}

LaurentFraction& LaurentFraction::operator-=(const LaurentFraction& o) { return *this += -o; }

LaurentFraction& LaurentFraction::operator*=(const LaurentFraction& o) {
    if (is_zero() || o.is_zero()) return *this = LaurentFraction{};
    num_ *= o.num_;
    for (const auto& [f, m] : o.factors_) factors_[f] += m;
    if (o.residual_) residual_ = residual_ ? (*residual_ * *o.residual_) : *o.residual_;
    reduce();
    return *this;
}

LaurentFraction operator*(LaurentFraction a, const Rat& c) {
    if (c == 0) return {};
    a.num_ *= c;
    return a;
}

LaurentFraction LaurentFraction::inverse() const {
    if (is_zero()) throw std::domain_error("zero denominator");
    LaurentFraction r;
    r.num_ = den();
    r.absorb_residual(num_);
    r.reduce();
    return r;
}

LaurentFraction& LaurentFraction::operator/=(const LaurentFraction& o) { return *this *= o.inverse(); }

LaurentFraction LaurentFraction::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    LaurentFraction result(1), base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

LaurentFraction LaurentFraction::negated_exponents() const {
    LaurentFraction r;
    r.num_ = num_.negated_exponents();
    for (const auto& [f, m] : factors_) {
        if (f.order == 1) {
            r.num_ = r.num_.shifted(m * f.dir);
            if (m % 2 != 0) r.num_ = -r.num_;
        } else {
            r.num_ = r.num_.shifted((m * euler_phi(f.order)) * f.dir);
        }
        r.factors_[f] = m;
    }
    if (residual_) {
        Exponent shift{};
        Rat coeff;
        LaurentPoly p = normalise_unit(residual_->negated_exponents(), &shift, &coeff);
        r.num_ = r.num_.shifted((-1) * shift) * Rat(1 / coeff);
        r.residual_ = std::move(p);
    }
    return r;
}

LaurentFraction LaurentFraction::shifted(const Exponent& e) const {
    LaurentFraction r = *this;
    r.num_ = r.num_.shifted(e);
    return r;
}

bool lf_equal(const LaurentFraction& a, const LaurentFraction& b) {
    if (a.factors() == b.factors() && a.residual() == b.residual()) return a.num() == b.num();
    LaurentFraction::FactorMap mine, theirs;
    for (const auto& [f, m] : a.factors()) {
        auto it = b.factors().find(f);
        int mb = it == b.factors().end() ? 0 : it->second;
        if (m > mb) theirs[f] = m - mb;
    }
    for (const auto& [f, m] : b.factors()) {
        auto it = a.factors().find(f);
        int ma = it == a.factors().end() ? 0 : it->second;
        if (m > ma) mine[f] = m - ma;
    }
    LaurentPoly lhs = a.num() * expand_factors(mine);
    LaurentPoly rhs = b.num() * expand_factors(theirs);
    if (a.residual() != b.residual()) {
        if (b.residual()) lhs *= *b.residual();
        if (a.residual()) rhs *= *a.residual();
    }
    return lhs == rhs;
}

std::map<int, LaurentFraction> expand_in(const LaurentFraction& a, int v, int max_order) {
    std::map<int, LaurentFraction> out;
    if (a.is_zero()) return out;
    auto vi = static_cast<std::size_t>(v);
    LaurentPoly num = a.num();
    LaurentFraction::FactorMap coeff_den;
    std::vector<std::pair<CycloFactor, int>> series_factors;
    for (const auto& [f, m] : a.factors()) {
        if (f.dir[vi] == 0) {
            coeff_den[f] = m;
            continue;
        }
        if (f.dir[vi] > 0) {
            series_factors.emplace_back(f, m);
            continue;
        }
        // Reorient so the factor has constant term 1 in a positive power of v.
        Exponent w = (-1) * f.dir;
        if (f.order == 1) {
            num = num.shifted(m * w);
            if (m % 2 != 0) num = -num;
        } else {
            num = num.shifted((m * euler_phi(f.order)) * w);
        }
        series_factors.emplace_back(CycloFactor{w, f.order}, m);
    }

    int rmin = a.residual() ? a.residual()->min_degree(v) : 0;
    int cap = max_order + rmin;  // v-exponent cap before dividing by the residual
    if (num.min_degree(v) > cap) return out;
    int span = cap - num.min_degree(v);

    LaurentPoly prod(1);
    for (const auto& [f, m] : series_factors) {
        int step = f.dir[vi];
        std::vector<Rat> c = inverse_series(f, span / step, m);
        std::vector<LaurentPoly::Term> terms;
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c[k] != 0) terms.emplace_back(static_cast<int>(k) * f.dir, c[k]);
        prod = mul_capped(prod, LaurentPoly::from_terms(std::move(terms)), v, span);
    }
    prod = mul_capped(num, prod, v, cap);

    std::map<int, std::vector<LaurentPoly::Term>> graded;
    for (const auto& [e, c] : prod.terms()) {
        Exponent rest = e;
        rest[vi] = 0;
        graded[e[vi]].emplace_back(rest, c);
    }

    if (!a.residual()) {
        for (auto& [k, terms] : graded)
            out.emplace(k, LaurentFraction::from_parts(LaurentPoly::from_terms(std::move(terms)), coeff_den));
        return out;
    }

    // 1/residual = v^-rmin * sum_j g_j v^j with fraction coefficients.
    std::map<int, LaurentPoly> rparts;
    for (const auto& [e, c] : a.residual()->terms()) {
        Exponent rest = e;
        rest[vi] = 0;
        rparts[e[vi] - rmin] += LaurentPoly::monomial(rest, c);
    }
    int need = cap - prod.min_degree(v);
    std::vector<LaurentFraction> g(static_cast<std::size_t>(need) + 1);
    LaurentFraction r0inv = LaurentFraction(rparts[0]).inverse();
    g[0] = r0inv;
    for (int j = 1; j <= need; ++j) {
        LaurentFraction acc;
        for (const auto& [i, ri] : rparts)
            if (i >= 1 && i <= j) acc += LaurentFraction(ri) * g[static_cast<std::size_t>(j - i)];
        g[static_cast<std::size_t>(j)] = -(acc * r0inv);
    }
    LaurentFraction den_coeff = LaurentFraction::from_parts(LaurentPoly(1), coeff_den);
    for (auto& [k, terms] : graded) {
        LaurentFraction ck = LaurentFraction(LaurentPoly::from_terms(std::move(terms))) * den_coeff;
        for (int j = 0; k + j <= cap; ++j) {
            LaurentFraction term = ck * g[static_cast<std::size_t>(j)];
            if (term.is_zero()) continue;
            out[k + j - rmin] += term;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

LaurentPoly lf_expand(const LaurentFraction& a, ExpandAt at, int order) {
    const LaurentFraction src = at == ExpandAt::zero ? a : a.negated_exponents();
    std::vector<LaurentPoly::Term> terms;
    for (const auto& [k, c] : expand_in(src, var::t, order)) {
        if (!c.is_poly() || !c.num().is_constant())
            throw std::invalid_argument("lf_expand needs a fraction in t only");
        terms.emplace_back(unit_exponent(var::t, k), c.num().is_zero() ? Rat(0) : c.num().lowest().second);
    }
    return LaurentPoly::from_terms(std::move(terms));
}

std::string to_string(const LaurentFraction& f, bool q_units_if_even) {
    if (f.is_poly()) return to_string(f.num(), q_units_if_even);
    LaurentPoly den = f.den();
    std::array<bool, kNumVars> halve{};
    if (q_units_if_even) {
        auto a = even_vars(f.num());
        auto b = even_vars(den);
        for (std::size_t i = 0; i < kNumVars; ++i) halve[i] = a[i] && b[i];
    }
    std::ostringstream os;
    os << "(" << render(f.num(), halve) << ")/(" << render(den, halve) << ")";
    return os.str();
}

}  // namespace qvertex
