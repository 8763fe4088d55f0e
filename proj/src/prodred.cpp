#include "qvertex/prodred.hpp"

#include <sstream>
#include <stdexcept>

namespace qvertex {

LaurentFraction factor_power(const FactorKind& f, int m, int power) {
    if (power == 0) return 1;
    Exponent tm = unit_exponent(var::t, m);
    switch (f.tag) {
        case FactorKind::Tag::bracket: {
            if (m == 0) throw std::domain_error("factor vanishes at zero");
            // t^m - t^-m = -t^-m (1 - t^2m)
            LaurentPoly unit = LaurentPoly::monomial((-power) * tm, power % 2 ? Rat(-1) : Rat(1));
            return LaurentFraction::over_binomial(unit, 2 * tm, -power);
        }
        case FactorKind::Tag::one_minus_Qq:
            return LaurentFraction::over_binomial(1, 2 * f.shift + 2 * tm, -power);
        case FactorKind::Tag::sinh_shift: {
            // (x^-a t^-m)(1 - x^2a t^2m) / 2
            Exponent a = f.shift + tm;
            if (is_zero_exponent(a)) throw std::domain_error("factor vanishes at zero");
            Rat half = power > 0 ? Rat(1, 2) : Rat(2);
            Rat scale = 1;
            for (int k = 0; k < std::abs(power); ++k) scale *= half;
            return LaurentFraction::over_binomial(LaurentPoly::monomial((-power) * a, scale), 2 * a, -power);
        }
    }
    throw std::logic_error("unknown factor kind");
}

SignedExponentMultiset single_multiset(const Partition& mu) {
    SignedExponentMultiset ms;
    for (int h : mu.hooks()) --ms[h];
    return ms;
}

PairSums pair_sums(const Partition& mu1, const Partition& mu2) {
    PairSums s;
    int l1 = mu1.length(), l2 = mu2.length();
    for (int i = 1; i <= l1; ++i)
        for (int j = 1; j <= l2; ++j) {
            s.plus.push_back(mu1.part(i - 1) - mu2.part(j - 1) + j - i);
            s.minus.push_back(j - i);
        }
    for (int i = 1; i <= l1; ++i)
        for (int v = 1; v <= mu1.part(i - 1); ++v) s.minus.push_back(v - i + l2);
    for (int j = 1; j <= l2; ++j)
        for (int v = 1; v <= mu2.part(j - 1); ++v) s.minus.push_back(-(v - j + l1));
    return s;
}

SignedExponentMultiset pair_multiset(const Partition& mu1, const Partition& mu2) {
    PairSums s = pair_sums(mu1, mu2);
    SignedExponentMultiset ms;
    for (int m : s.plus) ++ms[m];
    for (int m : s.minus) --ms[m];
    for (auto it = ms.begin(); it != ms.end();) it = it->second == 0 ? ms.erase(it) : std::next(it);
    return ms;
}

LaurentFraction product_over(const SignedExponentMultiset& ms, const FactorKind& f) {
    LaurentFraction r(1);
    for (const auto& [m, mult] : ms) r *= factor_power(f, m, mult);
    return r;
}

LaurentFraction product_over(const PairSums& sums, const FactorKind& f) {
    LaurentFraction r(1);
    for (int m : sums.plus) r *= factor_power(f, m, 1);
    for (int m : sums.minus) r *= factor_power(f, m, -1);
    return r;
}

LaurentFraction diag_block_ratio(const Partition& mu, const FactorKind& f) {
    LaurentFraction r(1);
    for (int h : mu.hooks()) r *= factor_power(f, h, -1) * factor_power(f, -h, -1);
    return r;
}

std::string to_string(const SignedExponentMultiset& ms) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (auto it = ms.rbegin(); it != ms.rend(); ++it) {
        os << (first ? "" : ",") << "(" << it->first << "," << it->second << ")";
        first = false;
    }
    os << "]";
    return os.str();
}

LaurentPoly as_poly(const SignedExponentMultiset& ms, int units) {
    LaurentPoly p;
    for (const auto& [m, mult] : ms) p += LaurentPoly::var_power(var::t, units * m, mult);
    return p;
}

}  // namespace qvertex
