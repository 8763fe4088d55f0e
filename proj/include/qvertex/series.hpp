#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qvertex/laurent_fraction.hpp"

namespace qvertex {

template <class Coeff>
class TruncatedSeries;

/// Zero and one of the coefficient ring, shaped like a sample element (nested
/// series carry their own truncation).
inline LaurentFraction zero_like(const LaurentFraction&) { return {}; }
inline LaurentFraction one_like(const LaurentFraction&) { return LaurentFraction(1); }
inline bool coeff_is_zero(const LaurentFraction& c) { return c.is_zero(); }
inline bool coeff_equal(const LaurentFraction& a, const LaurentFraction& b) { return lf_equal(a, b); }

template <class C>
TruncatedSeries<C> zero_like(const TruncatedSeries<C>& s) { return TruncatedSeries<C>(s.trunc(), zero_like(s[0])); }
template <class C>
TruncatedSeries<C> one_like(const TruncatedSeries<C>& s) {
    TruncatedSeries<C> r = zero_like(s);
    r[0] = one_like(s[0]);
    return r;
}
template <class C>
bool coeff_is_zero(const TruncatedSeries<C>& s) { return s.is_zero(); }
template <class C>
bool coeff_equal(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) { return a.equals(b); }

/// Power series in one parameter cut at degree trunc(). Coefficients may
/// themselves be series, giving box-truncated multi-parameter series.
template <class Coeff>
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1) {}
    TruncatedSeries(int trunc, const Coeff& zero) {
        if (trunc < 0) throw std::invalid_argument("negative truncation");
        coeffs_.assign(static_cast<std::size_t>(trunc) + 1, zero);
    }
    /// Constant series.
    static TruncatedSeries constant(int trunc, const Coeff& c) {
        TruncatedSeries s(trunc, zero_like(c));
        s[0] = c;
        return s;
    }
    /// c * P^deg (zero if deg > trunc).
    static TruncatedSeries monomial(int trunc, int deg, const Coeff& c) {
        TruncatedSeries s(trunc, zero_like(c));
        if (deg <= trunc) s[deg] = c;
        return s;
    }

    int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
    Coeff& operator[](int d) { return coeffs_.at(static_cast<std::size_t>(d)); }
    const Coeff& operator[](int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!coeff_is_zero(c)) return false;
        return true;
    }
    bool equals(const TruncatedSeries& o) const {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeff_equal(coeffs_[i], o.coeffs_[i])) return false;
        return true;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    /// Cauchy product cut at trunc().
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_same(b);
        TruncatedSeries r(a.trunc(), zero_like(a.coeffs_[0]));
        int n = a.trunc();
        for (int i = 0; i <= n; ++i) {
            if (coeff_is_zero(a[i])) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (coeff_is_zero(b[j])) continue;
                r[i + j] += a[i] * b[j];
            }
        }
        return r;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rat& c) {
        for (auto& x : a.coeffs_) x = x * c;
        return a;
    }

    /// Multiplies every coefficient by a ring element.
    TruncatedSeries scaled(const Coeff& c) const {
        TruncatedSeries r = *this;
        for (auto& x : r.coeffs_) x = x * c;
        return r;
    }
    TruncatedSeries scaled(const Rat& c) const {
        TruncatedSeries r = *this;
        for (auto& x : r.coeffs_) x = x * c;
        return r;
    }

    /// Inverse; the constant coefficient must be invertible in Coeff.
    TruncatedSeries inverse() const {
        Coeff c0inv = invert(coeffs_[0]);
        TruncatedSeries r(trunc(), zero_like(coeffs_[0]));
        r[0] = c0inv;
        for (int n = 1; n <= trunc(); ++n) {
            Coeff acc = zero_like(coeffs_[0]);
            for (int k = 1; k <= n; ++k)
                if (!coeff_is_zero((*this)[k])) acc += (*this)[k] * r[n - k];
            r[n] = -(acc * c0inv);
        }
        return r;
    }

    /// Lower truncation (drops coefficients above d).
    TruncatedSeries truncated(int d) const {
        if (d > trunc()) throw std::invalid_argument("cannot raise truncation");
        TruncatedSeries r = *this;
        r.coeffs_.resize(static_cast<std::size_t>(d) + 1);
        return r;
    }

private:
    static LaurentFraction invert(const LaurentFraction& c) { return c.inverse(); }
    template <class C>
    static TruncatedSeries<C> invert(const TruncatedSeries<C>& c) { return c.inverse(); }

    void check_same(const TruncatedSeries& o) const {
        if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("mismatched truncations");
    }

    std::vector<Coeff> coeffs_;
};

/// Power series in Q with Laurent-fraction coefficients.
using QSeries = TruncatedSeries<LaurentFraction>;
/// Two-parameter series: outer parameter graded by the outer index.
using QSeries2 = TruncatedSeries<QSeries>;

/// exp(a) for a series with zero constant term, via n E_n = sum_k k a_k E_{n-k}.
template <class C>
TruncatedSeries<C> series_exp(const TruncatedSeries<C>& a) {
    if (!coeff_is_zero(a[0])) throw std::domain_error("exp needs zero constant term");
    TruncatedSeries<C> e = one_like(a);
    for (int n = 1; n <= a.trunc(); ++n) {
        C acc = zero_like(a[0]);
        for (int k = 1; k <= n; ++k) {
            if (coeff_is_zero(a[k])) continue;
            acc += (a[k] * e[n - k]) * Rat(k);
        }
        e[n] = acc * Rat(1, n);
    }
    return e;
}

/// Q-expansion of a fraction in (s, t) with Q = s^2: coefficient d is the
/// s^(2d) part. Odd or negative s-powers must not occur.
QSeries q_expand(const LaurentFraction& f, int trunc, int s_var = var::s);

/// Two-parameter expansion of a fraction in (s_outer, s_inner, t) with
/// Q_outer = s_outer^2 and Q_inner = s_inner^2, box-truncated.
QSeries2 q_expand2(const LaurentFraction& f, int s_outer, int s_inner, int trunc_outer, int trunc_inner);

/// Substitutes Q -> Q_outer^deg_outer * Q_inner^deg_inner into a
/// one-parameter series, giving a box-truncated nested series.
QSeries2 embed_series2(const QSeries& a, int deg_outer, int deg_inner, int trunc_outer, int trunc_inner);

std::string to_string(const QSeries& s);
std::string to_string(const QSeries2& s);

}  // namespace qvertex
