#pragma once

#include <vector>

#include "qvertex/fcoeff.hpp"
#include "qvertex/partition.hpp"
#include "qvertex/report.hpp"
#include "qvertex/series.hpp"

namespace qvertex {

/// sum_{|nu| <= D} Q^|nu| W_{mu1,nu} W_{nu,mu2}.
QSeries k_brute(const Partition& mu1, const Partition& mu2, int D);
/// exp(sum_n (Q/q)^n / (n (1 - q^-n)^2)).
QSeries k00_closed(int D);
/// exp(sum_n Q^n f_{mu1 mu2}(q^n) / n).
QSeries k_exp_form(const Partition& mu1, const Partition& mu2, int D);
/// prod_k (1 - q^k Q)^(-C_k), expanded directly.
QSeries k_product_form(const CoeffTable& c, int D);

/// prod_k (1 - q^k Q)^(-C_k(mu1, mu2^t)) as an exact fraction in (s, t), Q = s^2.
LaurentFraction kt_product(const Partition& mu1, const Partition& mu2);
/// K_{mu1 (mu2)^t} / K_00 = W_mu1 W_(mu2)^t prod over the pair multiset of (1 - Q q^m).
LaurentFraction k_transposed_rational(const Partition& mu1, const Partition& mu2);

/// Brute series against both closed forms.
VerificationReport verify_k_forms(const Partition& mu1, const Partition& mu2, int D);
/// Series check of the transposed product plus the exact sinh form.
VerificationReport verify_transposed_k(const Partition& mu1, const Partition& mu2, int D);
/// Squared identities: the two off-diagonal blocks alone, and all four blocks.
VerificationReport verify_squared_k(const Partition& mu1, const Partition& mu2);

/// Half-Kahler variable for Q_k (k = 1, 2): s and s2.
int kahler_var(int k);

/// N = 2 or 3 partitions. Outer grading Q_1, inner Q_2 (inner truncation 0
/// when N = 2). Box truncation: |nu^k| <= D for each k.
QSeries2 ktilde_brute(const std::vector<Partition>& mus, int D);
VerificationReport verify_kgen_forms(const std::vector<Partition>& mus, int D);
/// The squared N-partition sinh identity, exact in (s, s2, t); includes a
/// series check of the unsquared exact ratio against ktilde_brute.
VerificationReport verify_sun_squares(const std::vector<Partition>& mus, int D);

VerificationReport verify_k_suite(int max_weight, int D, int transposed_max_weight);
VerificationReport verify_kgen_suite(int part_weight, int D);
VerificationReport verify_sun_suite(int part_weight, int D);

}  // namespace qvertex
