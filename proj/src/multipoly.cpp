#include "qvertex/multipoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qvertex {

namespace {

int total_degree(const MultiPoly::Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

}  // namespace

MultiPoly::MultiPoly(int nvars, int max_degree) : nvars_(nvars), max_degree_(max_degree) {
    if (nvars < 0 || max_degree < 0) throw std::invalid_argument("bad MultiPoly shape");
}

MultiPoly MultiPoly::constant(int nvars, int max_degree, const Rat& c) {
    MultiPoly p(nvars, max_degree);
    p.add_term(Monomial(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int max_degree, int index, const Rat& c) {
    MultiPoly p(nvars, max_degree);
    Monomial m(static_cast<std::size_t>(nvars), 0);
    m.at(static_cast<std::size_t>(index)) = 1;
    p.add_term(m, c);
    return p;
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
    if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("mismatched dimensions");
    if (c == 0 || total_degree(m) > max_degree_) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check_same(const MultiPoly& o) const {
    if (o.nvars_ != nvars_ || o.max_degree_ != max_degree_) throw std::invalid_argument("mismatched dimensions");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    MultiPoly r(a.nvars_, a.max_degree_);
    MultiPoly::Monomial m(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ma, ca] : a.terms_) {
        int da = total_degree(ma);
        for (const auto& [mb, cb] : b.terms_) {
            if (da + total_degree(mb) > a.max_degree_) continue;
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(MultiPoly a, const Rat& c) {
    if (c == 0) return MultiPoly(a.nvars_, a.max_degree_);
    for (auto& [m, x] : a.terms_) x *= c;
    return a;
}

MultiPoly MultiPoly::inverse() const {
    Monomial zero(static_cast<std::size_t>(nvars_), 0);
    auto it = terms_.find(zero);
    if (it == terms_.end() || it->second != 1) throw std::domain_error("inverse needs constant term 1");
    // 1/(1 - x) = sum x^k; x has no constant term so x^k vanishes past max_degree.
    MultiPoly x = constant(nvars_, max_degree_, 1) - *this;
    MultiPoly result = constant(nvars_, max_degree_, 1), power = result;
    for (int k = 1; k <= max_degree_; ++k) {
        power = power * x;
        result += power;
    }
    return result;
}

LaurentPoly MultiPoly::specialize_t(const std::vector<int>& t_exps) const {
    std::vector<LaurentPoly::Term> out;
    for (const auto& [m, c] : terms_) {
        int e = 0;
        bool vanishes = false;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (i >= t_exps.size()) {
                vanishes = true;
                break;
            }
            e += m[i] * t_exps[i];
        }
        if (!vanishes) out.emplace_back(unit_exponent(var::t, e), c);
    }
    return LaurentPoly::from_terms(std::move(out));
}

std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) os << "*x" << i + 1 << (m[i] != 1 ? "^" + std::to_string(m[i]) : "");
    }
    return os.str();
}

}  // namespace qvertex
