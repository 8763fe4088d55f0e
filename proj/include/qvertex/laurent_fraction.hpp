#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qvertex/laurent_poly.hpp"

namespace qvertex {

/// Irreducible denominator factor F_d(x^dir): Phi_d(u) for d >= 2 and 1 - u
/// for d = 1, with u = x^dir. `dir` is primitive and its first nonzero
/// component is positive.
struct CycloFactor {
    Exponent dir{};
    int order = 1;

    friend auto operator<=>(const CycloFactor&, const CycloFactor&) = default;
};

/// Coefficients of the d-th cyclotomic polynomial, constant term first.
const std::vector<mpz_class>& cyclotomic(int d);
int euler_phi(int d);

/// The factor as an explicit Laurent polynomial.
LaurentPoly factor_poly(const CycloFactor& f);

/// Exact ratio num / den of Laurent polynomials.
///
/// The denominator is stored factored: a product of cyclotomic binomial
/// factors (with multiplicities) times an optional residual polynomial for
/// anything that did not split that way. Residuals are normalised to have
/// nonnegative minimal degrees and lexicographically lowest coefficient 1.
/// Common cyclotomic factors with the numerator are always cancelled.
class LaurentFraction {
public:
    using FactorMap = std::map<CycloFactor, int>;

    LaurentFraction() = default;
    LaurentFraction(const Rat& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    LaurentFraction(int c) : num_(Rat(c)) {}  // NOLINT(google-explicit-constructor)
    LaurentFraction(LaurentPoly p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
    /// General num / den; den is factored as far as cyclotomic trial division
    /// allows. Throws on a zero denominator.
    LaurentFraction(const LaurentPoly& num, const LaurentPoly& den);

    /// c / F_d(x^dir)^mult, dir not necessarily normalised.
    static LaurentFraction over_factor(const LaurentPoly& num, Exponent dir, int order, int mult = 1);
    /// num / (1 - x^e)^mult, split into its cyclotomic factors.
    static LaurentFraction over_binomial(const LaurentPoly& num, const Exponent& e, int mult = 1);
    /// num / (factors * residual) from already-normalised parts; cancels.
    static LaurentFraction from_parts(LaurentPoly num, FactorMap factors,
                                      std::optional<LaurentPoly> residual = std::nullopt);

    const LaurentPoly& num() const { return num_; }
    const FactorMap& factors() const { return factors_; }
    const std::optional<LaurentPoly>& residual() const { return residual_; }
    /// Fully expanded denominator polynomial.
    LaurentPoly den() const;

    bool is_zero() const { return num_.is_zero(); }
    /// True when the value is a Laurent polynomial (trivial denominator).
    bool is_poly() const { return factors_.empty() && !residual_; }

    LaurentFraction operator-() const;
    LaurentFraction& operator+=(const LaurentFraction& o);
    LaurentFraction& operator-=(const LaurentFraction& o);
    LaurentFraction& operator*=(const LaurentFraction& o);
    LaurentFraction& operator/=(const LaurentFraction& o);

    friend LaurentFraction operator+(LaurentFraction a, const LaurentFraction& b) { return a += b; }
    friend LaurentFraction operator-(LaurentFraction a, const LaurentFraction& b) { return a -= b; }
    friend LaurentFraction operator*(LaurentFraction a, const LaurentFraction& b) { return a *= b; }
    friend LaurentFraction operator/(LaurentFraction a, const LaurentFraction& b) { return a /= b; }
    friend LaurentFraction operator*(LaurentFraction a, const Rat& c);

    /// Structural equality of canonical forms; use lf_equal for values.
    friend bool operator==(const LaurentFraction& a, const LaurentFraction& b) = default;

    LaurentFraction inverse() const;
    LaurentFraction pow(int n) const;
    /// q -> q^-1 on every variable.
    LaurentFraction negated_exponents() const;
    /// Multiplies by the monomial x^e.
    LaurentFraction shifted(const Exponent& e) const;

private:
    void reduce();
    void absorb_residual(LaurentPoly poly);

    LaurentPoly num_;
    FactorMap factors_;
    std::optional<LaurentPoly> residual_;
};

/// Value equality by cross-multiplication.
bool lf_equal(const LaurentFraction& a, const LaurentFraction& b);

/// Expansion in ascending powers of variable v: returns (v-exponent ->
/// coefficient) for every exponent <= max_order. Coefficients are fractions in
/// the remaining variables.
std::map<int, LaurentFraction> expand_in(const LaurentFraction& a, int v, int max_order);

enum class ExpandAt { zero, infinity };

/// Univariate expansion in t (at_zero) or in u = t^-1 (at_infinity, returned
/// with exponents counted in u), exact through `order`.
LaurentPoly lf_expand(const LaurentFraction& a, ExpandAt at, int order);

std::string to_string(const LaurentFraction& f, bool q_units_if_even = true);

}  // namespace qvertex
