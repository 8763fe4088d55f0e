#include "qvertex/series.hpp"

#include <sstream>

namespace qvertex {

namespace {

// Maps s-exponent 2d -> degree d, rejecting odd or negative powers.
int q_degree(int s_exp) {
    if (s_exp < 0 || s_exp % 2 != 0)
        throw std::domain_error("fraction is not a power series in Q = s^2");
    return s_exp / 2;
}

}  // namespace

QSeries q_expand(const LaurentFraction& f, int trunc, int s_var) {
    QSeries out(trunc, LaurentFraction{});
    for (auto& [k, c] : expand_in(f, s_var, 2 * trunc + 1)) {
        if (c.is_zero()) continue;
        int d = q_degree(k);
        if (d <= trunc) out[d] = c;
    }
    return out;
}

QSeries2 q_expand2(const LaurentFraction& f, int s_outer, int s_inner, int trunc_outer, int trunc_inner) {
    QSeries zero(trunc_inner, LaurentFraction{});
    QSeries2 out(trunc_outer, zero);
    for (auto& [k, c] : expand_in(f, s_outer, 2 * trunc_outer + 1)) {
        if (c.is_zero()) continue;
        int d = q_degree(k);
        if (d <= trunc_outer) out[d] = q_expand(c, trunc_inner, s_inner);
    }
    return out;
}

QSeries2 embed_series2(const QSeries& a, int deg_outer, int deg_inner, int trunc_outer, int trunc_inner) {
    QSeries zero(trunc_inner, LaurentFraction{});
    QSeries2 out(trunc_outer, zero);
    for (int d = 0; d <= a.trunc(); ++d) {
        if (a[d].is_zero()) continue;
        int o = d * deg_outer, i = d * deg_inner;
        if (o > trunc_outer || i > trunc_inner) continue;
        if (deg_outer == 0 && deg_inner == 0 && d > 0)
            throw std::invalid_argument("embedding must raise degree");
        out[o][i] += a[d];
    }
    bool complete = (deg_outer > 0 && a.trunc() * deg_outer >= trunc_outer) ||
                    (deg_inner > 0 && a.trunc() * deg_inner >= trunc_inner);
    if (!complete) throw std::invalid_argument("source series truncated too early for embedding");
    return out;
}

std::string to_string(const QSeries& s) {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= s.trunc(); ++d) {
        if (s[d].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "[" << to_string(s[d]) << "]";
        if (d > 0) os << "*Q^" << d;
    }
    if (first) os << "0";
    os << " + O(Q^" << s.trunc() + 1 << ")";
    return os.str();
}

std::string to_string(const QSeries2& s) {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= s.trunc(); ++d) {
        if (s[d].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "{" << to_string(s[d]) << "}";
        if (d > 0) os << "*P^" << d;
    }
    if (first) os << "0";
    os << " + O(P^" << s.trunc() + 1 << ")";
    return os.str();
}

}  // namespace qvertex
