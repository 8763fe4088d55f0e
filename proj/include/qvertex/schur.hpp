#pragma once

#include <map>

#include "qvertex/laurent_fraction.hpp"
#include "qvertex/multipoly.hpp"
#include "qvertex/partition.hpp"
#include "qvertex/report.hpp"

namespace qvertex {

/// nu -> c^lambda_{mu nu}, nonzero entries only.
using SchurExpansion = std::map<Partition, int>;

/// Skew expansion s_{lambda/mu} = sum_nu c^lambda_{mu nu} s_nu, by counting
/// Littlewood-Richardson tableaux of shape lambda/mu. Memoised.
SchurExpansion lr_skew_expand(const Partition& lambda, const Partition& mu);
int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Schur polynomial in nvars variables (semistandard tableaux), truncated at
/// total degree max_degree.
MultiPoly schur_finite(const Partition& mu, int nvars, int max_degree);
/// Skew Schur polynomial s_{lambda/mu} placed on variables
/// [first, first + count) of a ring with total_vars variables.
MultiPoly skew_schur_finite(const Partition& lambda, const Partition& mu, int total_vars, int first, int count,
                            int max_degree);

/// s_mu(q^-rho) = s_mu(t, t^3, t^5, ...) with t = q^(1/2).
LaurentFraction principal_schur(const Partition& mu);
/// s_{lambda/eta}(q^-rho).
LaurentFraction principal_skew(const Partition& lambda, const Partition& eta);
/// s_nu(q^(mu+rho)) through the finite eta-sum formula. Memoised.
LaurentFraction schur_at_mu_rho(const Partition& nu, const Partition& mu);
/// s_{lambda/eta}(q^(mu+rho)) = sum_nu c^lambda_{eta nu} s_nu(q^(mu+rho)).
LaurentFraction skew_at_mu_rho(const Partition& lambda, const Partition& eta, const Partition& mu);

/// Truncated check of sum_eta s_{eta/mu}(x) s_{eta/nu}(y)
///   = prod (1 - x_i y_j)^-1 sum_tau s_{mu/tau}(y) s_{nu/tau}(x).
ReportEntry verify_skew_cauchy(const Partition& mu, const Partition& nu, int nx, int ny, int max_degree);

/// Truncated check of the chained Cauchy sum with `links` = N - 1 pairs of
/// alphabets (x^k, y^k) and parameters Q_1..Q_links (degree-1 variables).
ReportEntry verify_chain_sum(int n, int nvars, int max_degree);

}  // namespace qvertex
