#pragma once

#include <map>

#include "qvertex/laurent_fraction.hpp"
#include "qvertex/partition.hpp"
#include "qvertex/report.hpp"

namespace qvertex {

/// q-exponent k -> C_k.
using CoeffTable = std::map<int, int>;

/// All single-partition results live on the t-lattice (q = t^2). The
/// two-variable functions use t1 = var::t and t2 = var::s with q_i = t_i^2.
inline constexpr int kT1 = var::t;
inline constexpr int kT2 = var::s;

enum class FOneForm { contents, quotient, double_sum };

/// f_mu(q) = sum over boxes of q^content, or the equivalent quotient and
/// row-sum forms.
LaurentPoly f_one(const Partition& mu, FOneForm form = FOneForm::contents);
/// (q - 2 + 1/q) f_mu1 f_mu2 + f_mu1 + f_mu2.
LaurentPoly f_pair(const Partition& mu1, const Partition& mu2);
/// f_pair through amplitudes: (W_{mu1,(1)} W_{(1),mu2} - W_mu1 W_(1)^2 W_mu2) / (W_mu1 W_mu2).
LaurentFraction f_pair_from_vertex(const Partition& mu1, const Partition& mu2);
CoeffTable c_coeffs(const Partition& mu1, const Partition& mu2);

/// The pair-multiset form of f_{mu1,(mu2)^t}, rebuilt as a polynomial in t.
LaurentPoly f_transposed_from_multiset(const Partition& mu1, const Partition& mu2);
/// f_pair(mu1, mu2^t) against the multiset form, plus coefficient signs.
ReportEntry f_pair_transposed_identity(const Partition& mu1, const Partition& mu2);

enum class FTwoVarForm { definition, product, from_f_one, vertex };

/// f_{mu1 mu2}(q1, q2): a fraction in (t1, t2), not a polynomial in general
/// (denominators (q1 - 1)(q2 - 1) cancel only on the diagonal).
LaurentFraction f_pair_2var(const Partition& mu1, const Partition& mu2, FTwoVarForm form = FTwoVarForm::definition);
/// -sqrt(q1/q2) sum_{i,j} (q1^(mu1_i - i) q2^(-mu2_j + j) - q1^-i q2^j), summed in closed form.
LaurentFraction f_transposed_2var(const Partition& mu1, const Partition& mu2);
/// t2 -> t1.
LaurentFraction diagonal(const LaurentFraction& f);

VerificationReport verify_fcoeff(int max_weight);

}  // namespace qvertex
