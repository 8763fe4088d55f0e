#pragma once

#include "qvertex/laurent_fraction.hpp"
#include "qvertex/partition.hpp"
#include "qvertex/report.hpp"

namespace qvertex {

enum class VertexForm { bracket_form, hook_form, tv_def, skew_form };

struct VertexValue {
    LaurentFraction value;
    VertexForm form;
};

/// W_mu. bracket_form is the finite product over i < j and boxes;
/// hook_form is t^(kappa/2) / prod (t^h - t^-h). Memoised per form.
LaurentFraction w1(const Partition& mu, VertexForm form = VertexForm::hook_form);
/// W_{mu,nu} = W_mu s_nu(q^(mu+rho)). Memoised.
LaurentFraction w2(const Partition& mu, const Partition& nu);
/// W_{mu,nu} through (-1)^(|mu|+|nu|) q^((kappa_mu+kappa_nu)/2) sum_eta s_{mu/eta}(q^-rho) s_{nu/eta}(q^-rho).
LaurentFraction w2_skew_sum(const Partition& mu, const Partition& nu);
/// Three-partition vertex. tv_def contracts pair amplitudes with LR
/// coefficients; skew_form uses skew Schur functions at q^(mu+rho).
LaurentFraction w3(const Partition& mu1, const Partition& mu2, const Partition& mu3,
                   VertexForm form = VertexForm::skew_form);

/// q -> q^-1.
inline LaurentFraction q_inverse(const LaurentFraction& f) { return f.negated_exponents(); }

/// Form agreement, the W_mu / W_{mu,nu} symmetries, degenerations and the
/// three-partition symmetries. Singles and pairs run to pair_weight per
/// partition (singles to pair_weight + 3), triples to triple_weight and
/// degenerations to triple_weight + 1. Cyclic symmetry entries are tagged
/// "cyclic (empirical)".
VerificationReport verify_vertex_symmetries(int pair_weight, int triple_weight);

}  // namespace qvertex
