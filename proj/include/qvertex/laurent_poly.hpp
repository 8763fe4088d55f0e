#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qvertex {

using Rat = mpq_class;

/// Number of formal variables carried by every monomial.
///
/// Slot 0 is t = q^(1/2); slot 1 is s = Q^(1/2) (or t2 for two-variable
/// f-functions); slots 2 and 3 hold further Kahler parameters s_k = Q_k^(1/2).
inline constexpr std::size_t kNumVars = 4;

namespace var {
inline constexpr int t = 0;
inline constexpr int s = 1;
inline constexpr int s2 = 2;
inline constexpr int s3 = 3;
}  // namespace var

using Exponent = std::array<int, kNumVars>;

inline Exponent unit_exponent(int v, int power = 1) {
    Exponent e{};
    e[static_cast<std::size_t>(v)] = power;
    return e;
}

Exponent operator+(const Exponent& a, const Exponent& b);
Exponent operator-(const Exponent& a, const Exponent& b);
Exponent operator*(int k, const Exponent& a);
bool is_zero_exponent(const Exponent& e);

/// Rational number as "p/q" (or "p" when integral).
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

/// Finite Laurent polynomial with rational coefficients over kNumVars
/// variables. Terms are kept sorted by exponent (lexicographic) with no zero
/// coefficients, so structural equality is value equality.
class LaurentPoly {
public:
    using Term = std::pair<Exponent, Rat>;

    LaurentPoly() = default;
    LaurentPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(int c) : LaurentPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(const Exponent& e, const Rat& c = 1);
    static LaurentPoly var_power(int v, int power, const Rat& c = 1) {
        return monomial(unit_exponent(v, power), c);
    }
    /// Univariate polynomial in t from (exponent, coefficient) pairs.
    static LaurentPoly in_t(std::initializer_list<std::pair<int, Rat>> terms);
    /// Builds from unsorted terms, merging duplicates and dropping zeros.
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    Rat coefficient(const Exponent& e) const;
    const Term& lowest() const { return terms_.front(); }
    const Term& highest() const { return terms_.back(); }

    /// Smallest / largest exponent of variable v over the support.
    int min_degree(int v) const;
    int max_degree(int v) const;
    /// True when no term involves a variable other than those in the mask.
    bool only_uses(unsigned var_mask) const;
    unsigned used_vars() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rat& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rat& c) { return a *= c; }
    friend LaurentPoly operator*(LaurentPoly a, int c) { return a *= Rat(c); }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    LaurentPoly shifted(const Exponent& e) const;
    LaurentPoly pow(int n) const;
    /// q -> q^-1 on every variable.
    LaurentPoly negated_exponents() const;
    /// Multiplies every exponent by n (t -> t^n on all variables).
    LaurentPoly scaled_exponents(int n) const;
    /// Sets variable v's exponent to zero in every term (used to strip a
    /// variable that has been split off as a grading).
    LaurentPoly dropped_var(int v) const;
    /// Keeps only terms whose exponent of v is at most max_exp.
    LaurentPoly truncated(int v, int max_exp) const;
    /// Sum of coefficients (evaluation at all variables = 1).
    Rat value_at_one() const;
    /// d/dv evaluated at all variables = 1, treating the stored exponent
    /// divided by `units` as the exponent (units = 2 turns t into q).
    Rat derivative_at_one(int v, int units = 1) const;

private:
    std::vector<Term> terms_;
};

/// Exact quotient a / b when b divides a in the Laurent ring, nullopt-style
/// flag otherwise. Division proceeds by lexicographic leading terms, bounded by
/// the exponent box the quotient must live in.
bool exact_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly* quotient);

/// Human rendering over t (or q when every t-exponent is even) and s, s2, s3
/// (or Q, Q2, Q3 likewise).
std::string to_string(const LaurentPoly& p, bool q_units_if_even = true);
/// Per-variable flags: true when every exponent of that variable is even.
std::array<bool, kNumVars> even_vars(const LaurentPoly& p);
/// Rendering with explicit per-variable halving.
std::string render(const LaurentPoly& p, const std::array<bool, kNumVars>& halve);

}  // namespace qvertex
