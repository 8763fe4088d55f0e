#pragma once

#include <map>
#include <string>
#include <vector>

#include "qvertex/laurent_fraction.hpp"
#include "qvertex/partition.hpp"

namespace qvertex {

/// Integer exponent -> nonzero signed multiplicity.
using SignedExponentMultiset = std::map<int, int>;

/// The factor f(m) applied to each exponent.
///  bracket:      t^m - t^-m                      ([m] = q^(m/2) - q^(-m/2))
///  one_minus_Qq: 1 - x^(2 shift) t^(2m)          (1 - P q^m with P = x^(2 shift))
///  sinh_shift:   (x^-shift t^-m - x^shift t^m)/2
/// `shift` is a monomial in the s-variables (s = Q^(1/2)); for the one-
/// parameter cases it is s^p.
struct FactorKind {
    enum class Tag { bracket, one_minus_Qq, sinh_shift };
    Tag tag = Tag::bracket;
    Exponent shift{};

    static FactorKind bracket() { return {Tag::bracket, {}}; }
    static FactorKind one_minus_Qq(const Exponent& shift = unit_exponent(var::s, 1)) {
        return {Tag::one_minus_Qq, shift};
    }
    static FactorKind sinh(const Exponent& shift) { return {Tag::sinh_shift, shift}; }
    static FactorKind sinh(int p) { return {Tag::sinh_shift, unit_exponent(var::s, p)}; }
};

/// f(m)^power as an exact fraction.
LaurentFraction factor_power(const FactorKind& f, int m, int power);

/// {h : -(number of hooks of length h)}.
SignedExponentMultiset single_multiset(const Partition& mu);

/// The three finite sums whose combination equals
/// sum_{i,j >= 1} (t^(mu1_i - mu2_j + j - i) - t^(j - i)), before cancellation.
struct PairSums {
    std::vector<int> plus;   // mu1_i - mu2_j + j - i over the finite box
    std::vector<int> minus;  // j - i over the box, v - i + l(mu2), -(v - j + l(mu1))
};
PairSums pair_sums(const Partition& mu1, const Partition& mu2);

/// Fully cancelled form of the two-partition sum.
SignedExponentMultiset pair_multiset(const Partition& mu1, const Partition& mu2);

/// prod_m f(m)^mult. Throws "factor vanishes at zero" for a bracket at m = 0.
LaurentFraction product_over(const SignedExponentMultiset& ms, const FactorKind& f);
/// prod f(plus) / prod f(minus) evaluated term by term, without cancelling.
LaurentFraction product_over(const PairSums& sums, const FactorKind& f);

/// prod_{i,j >= 1} f(mu_i - mu_j + j - i) / f(j - i) with the (i,i) factors
/// taken as 1: equals prod over hooks of 1/(f(h) f(-h)).
LaurentFraction diag_block_ratio(const Partition& mu, const FactorKind& f);

/// "[(3,-1),(1,-2)]", exponents descending.
std::string to_string(const SignedExponentMultiset& ms);
/// -sum mult * x^m... rebuilt as sum_m mult * t^(units * m).
LaurentPoly as_poly(const SignedExponentMultiset& ms, int units = 1);

}  // namespace qvertex
