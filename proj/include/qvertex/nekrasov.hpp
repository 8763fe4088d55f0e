#pragma once

#include <vector>

#include "qvertex/partition.hpp"
#include "qvertex/report.hpp"
#include "qvertex/series.hpp"

namespace qvertex {

/// Z^(m)(Q_B, Q_F) for the Hirzebruch surface F_m, m in {0, 1, 2}: outer
/// grading Q_B (pairs with |mu1| + |mu2| <= B), inner Q_F through degree D.
QSeries2 z_su2(int m, int B, int D);

/// Framing factor [(-1)^(|mu1|+|mu2|) Q_F^|mu2| q^(-(kappa1+kappa2)/2)]^m, Q_F = s^2.
LaurentFraction su2_framing(int m, const Partition& mu1, const Partition& mu2);
/// The pair's term on the sinh side with Q_B stripped, exact in (s, t).
LaurentFraction z_su2_sinh_term(int m, const Partition& mu1, const Partition& mu2);
/// The same term on the K side: framing^m (K_{mu1 mu2^t} / K00)^2.
LaurentFraction z_su2_k_term(int m, const Partition& mu1, const Partition& mu2);

/// Termwise exact checks, the aggregate series check, and (m = 0) the
/// re-indexing mu2 -> mu2^t of the sum of squares.
VerificationReport verify_su2(int m, int B, int D);

/// M^(m)(q; mu^1..mu^N) = (-1)^((N+m) sum|mu|) q^(sum (N+m-2i) kappa_i / 2).
LaurentFraction framing_m(int m, const std::vector<Partition>& mus);
/// All 2N^2 sinh blocks (diagonal hook blocks plus shifted off-diagonal ones).
LaurentFraction sun_sinh_blocks(const std::vector<Partition>& mus);
/// M^(N-2) M^(0) (Ktilde / prod K00)^2 for one tuple, exact in (s, s2, t).
LaurentFraction ztilde_term(const std::vector<Partition>& mus);

/// N in {2, 3}. Per tuple with sum|mu| <= B: series check of the exact term
/// against ktilde_brute through degree D, then the phi-matching, reported as
/// informational entries: the ratio of the term to the sinh blocks against
/// phi^(sum|mu|) (phi from a single box in slot 1) and against
/// prod phi_k^|mu^k| (phi_k from a single box in slot k). N = 2 also compares
/// against the SU(2) m = 0 terms, again informational.
VerificationReport verify_sun_nekrasov(int N, int B, int D);

}  // namespace qvertex
