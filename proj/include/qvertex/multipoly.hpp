#pragma once

#include <map>
#include <string>
#include <vector>

#include "qvertex/laurent_poly.hpp"

namespace qvertex {

/// Polynomial in a fixed number of variables, truncated at a total degree.
/// Only used by brute-force oracles, so the representation stays simple.
class MultiPoly {
public:
    using Monomial = std::vector<int>;

    MultiPoly(int nvars, int max_degree);
    static MultiPoly constant(int nvars, int max_degree, const Rat& c);
    static MultiPoly variable(int nvars, int max_degree, int index, const Rat& c = 1);

    int nvars() const { return nvars_; }
    int max_degree() const { return max_degree_; }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * x^m (dropped when above the truncation).
    void add_term(const Monomial& m, const Rat& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    /// Product with every term of total degree above the truncation discarded.
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rat& c);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

    /// Truncated inverse of a polynomial with constant term 1.
    MultiPoly inverse() const;

    /// Substitutes x_i -> t^(t_exps[i]), producing a Laurent polynomial in t
    /// (variables with no entry are sent to zero).
    LaurentPoly specialize_t(const std::vector<int>& t_exps) const;

private:
    void check_same(const MultiPoly& o) const;

    int nvars_;
    int max_degree_;
    std::map<Monomial, Rat> terms_;
};

std::string to_string(const MultiPoly& p);

}  // namespace qvertex
