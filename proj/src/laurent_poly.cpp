#include "qvertex/laurent_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qvertex {

Exponent operator+(const Exponent& a, const Exponent& b) {
    Exponent r{};
    for (std::size_t i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
    return r;
}

Exponent operator-(const Exponent& a, const Exponent& b) {
    Exponent r{};
    for (std::size_t i = 0; i < kNumVars; ++i) r[i] = a[i] - b[i];
    return r;
}

Exponent operator*(int k, const Exponent& a) {
    Exponent r{};
    for (std::size_t i = 0; i < kNumVars; ++i) r[i] = k * a[i];
    return r;
}

bool is_zero_exponent(const Exponent& e) {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("bad rational: " + s);
    return r;
}

LaurentPoly::LaurentPoly(const Rat& c) {
    if (c != 0) terms_.emplace_back(Exponent{}, c);
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Rat& c) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace_back(e, c);
    return p;
}

LaurentPoly LaurentPoly::in_t(std::initializer_list<std::pair<int, Rat>> terms) {
    std::vector<Term> v;
    for (const auto& [e, c] : terms) v.emplace_back(unit_exponent(var::t, e), c);
    return from_terms(std::move(v));
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second == 0) p.terms_.pop_back();
        } else if (t.second != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && is_zero_exponent(terms_[0].first));
}

Rat LaurentPoly::coefficient(const Exponent& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponent& x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
}

int LaurentPoly::min_degree(int v) const {
    if (terms_.empty()) return 0;
    int m = terms_[0].first[static_cast<std::size_t>(v)];
    for (const auto& t : terms_) m = std::min(m, t.first[static_cast<std::size_t>(v)]);
    return m;
}

int LaurentPoly::max_degree(int v) const {
    if (terms_.empty()) return 0;
    int m = terms_[0].first[static_cast<std::size_t>(v)];
    for (const auto& t : terms_) m = std::max(m, t.first[static_cast<std::size_t>(v)]);
    return m;
}

unsigned LaurentPoly::used_vars() const {
    unsigned mask = 0;
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < kNumVars; ++i)
            if (t.first[i] != 0) mask |= 1u << i;
    return mask;
}

bool LaurentPoly::only_uses(unsigned var_mask) const { return (used_vars() & ~var_mask) == 0; }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

namespace {

// Merges two sorted term lists; sign = +1 or -1 applied to b.
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b, int sign) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, sign > 0 ? Rat(b[j].second) : Rat(-b[j].second));
            ++j;
        } else {
            Rat c = sign > 0 ? Rat(a[i].second + b[j].second) : Rat(a[i].second - b[j].second);
            if (c != 0) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    terms_ = merge_terms(terms_, o.terms_, +1);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    terms_ = merge_terms(terms_, o.terms_, -1);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.terms_.size() == 1) {
        LaurentPoly r;
        r.terms_.reserve(a.terms_.size());
        const auto& [eb, cb] = b.terms_[0];
        for (const auto& [e, c] : a.terms_) r.terms_.emplace_back(e + eb, c * cb);
        return r;
    }
    if (a.terms_.size() == 1) return b * a;
    std::map<Exponent, Rat> acc;
    Rat prod;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            prod = ca * cb;
            auto [it, inserted] = acc.try_emplace(ea + eb, prod);
            if (!inserted) it->second += prod;
        }
    }
    LaurentPoly r;
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) r.terms_.emplace_back(e, std::move(c));
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

LaurentPoly LaurentPoly::shifted(const Exponent& e) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.first = t.first + e;
    return r;
}

LaurentPoly LaurentPoly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power of a Laurent polynomial");
    LaurentPoly result(1), base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::negated_exponents() const {
    std::vector<Term> v;
    v.reserve(terms_.size());
    for (const auto& t : terms_) v.emplace_back((-1) * t.first, t.second);
    std::reverse(v.begin(), v.end());
    LaurentPoly r;
    r.terms_ = std::move(v);
    return r;
}

LaurentPoly LaurentPoly::scaled_exponents(int n) const {
    if (n <= 0) throw std::invalid_argument("substitute_power needs n >= 1");
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.first = n * t.first;
    return r;
}

LaurentPoly LaurentPoly::dropped_var(int v) const {
    std::vector<Term> v2 = terms_;
    for (auto& t : v2) t.first[static_cast<std::size_t>(v)] = 0;
    return from_terms(std::move(v2));
}

LaurentPoly LaurentPoly::truncated(int v, int max_exp) const {
    LaurentPoly r;
    for (const auto& t : terms_)
        if (t.first[static_cast<std::size_t>(v)] <= max_exp) r.terms_.push_back(t);
    return r;
}

Rat LaurentPoly::value_at_one() const {
    Rat s = 0;
    for (const auto& t : terms_) s += t.second;
    return s;
}

Rat LaurentPoly::derivative_at_one(int v, int units) const {
    Rat s = 0;
    for (const auto& t : terms_) s += t.second * t.first[static_cast<std::size_t>(v)];
    return s / units;
}

bool exact_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly* quotient) {
    if (b.is_zero()) throw std::domain_error("zero denominator");
    if (a.is_zero()) {
        if (quotient) *quotient = LaurentPoly{};
        return true;
    }
    if (b.is_monomial()) {
        const auto& [eb, cb] = b.lowest();
        if (quotient) *quotient = a.shifted((-1) * eb) * Rat(1 / cb);
        return true;
    }
    // Quotient exponents must lie in [min(a) - min(b), max(a) - max(b)] per variable.
    Exponent lo{}, hi{};
    for (std::size_t i = 0; i < kNumVars; ++i) {
        int v = static_cast<int>(i);
        lo[i] = a.min_degree(v) - b.min_degree(v);
        hi[i] = a.max_degree(v) - b.max_degree(v);
        if (lo[i] > hi[i]) return false;
    }
    std::map<Exponent, Rat> rem(a.terms().begin(), a.terms().end());
    const auto& [lead_e, lead_c] = b.highest();
    std::vector<LaurentPoly::Term> q;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        Exponent qe = top->first - lead_e;
        for (std::size_t i = 0; i < kNumVars; ++i)
            if (qe[i] < lo[i] || qe[i] > hi[i]) return false;
        Rat qc = top->second / lead_c;
        for (const auto& [e, c] : b.terms()) {
            auto [it, inserted] = rem.try_emplace(e + qe, -(c * qc));
            if (!inserted) {
                it->second -= c * qc;
                if (it->second == 0) rem.erase(it);
            }
        }
        q.emplace_back(qe, std::move(qc));
    }
    if (quotient) *quotient = LaurentPoly::from_terms(std::move(q));
    return true;
}

namespace {

const char* var_name(std::size_t v, bool halved) {
    static const char* full[] = {"t", "s", "s2", "s3"};
    static const char* half[] = {"q", "Q", "Q2", "Q3"};
    return halved ? half[v] : full[v];
}

}  // namespace

std::array<bool, kNumVars> even_vars(const LaurentPoly& p) {
    std::array<bool, kNumVars> even{};
    even.fill(true);
    for (const auto& t : p.terms())
        for (std::size_t v = 0; v < kNumVars; ++v)
            if (t.first[v] % 2 != 0) even[v] = false;
    return even;
}

std::string to_string(const LaurentPoly& p, bool q_units_if_even) {
    std::array<bool, kNumVars> halve{};
    if (q_units_if_even) halve = even_vars(p);
    return render(p, halve);
}

std::string render(const LaurentPoly& p, const std::array<bool, kNumVars>& halve) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rat mag = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool unit = is_zero_exponent(e);
        if (unit || mag != 1) {
            os << mag.get_str();
            if (!unit) os << "*";
        }
        bool need_star = false;
        for (std::size_t v = 0; v < kNumVars; ++v) {
            int x = e[v];
            if (x == 0) continue;
            if (halve[v]) x /= 2;
            if (need_star) os << "*";
            os << var_name(v, halve[v]);
            if (x != 1) os << "^" << x;
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace qvertex
