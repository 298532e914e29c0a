#pragma once

#include "ordercert/derivation.hpp"

namespace ordercert {

/// For non-identity a, b, c, d with a, b, c, d pairwise as in hypotheses
/// A1..A7 and |a| < |b|: |c^d c^(da) ... c^(da^5)| < |b^12|.
///
/// Both signs of b are expanded into explicit branches; within each, the
/// three-way comparison of c with 1 drives the conjugate bounds.
Derivation script_lemma_gen();

/// No left-order on H: a case split on the signs of alpha and beta and on the
/// comparison of |alpha| with |beta| closes every branch. The |alpha| < |beta|
/// branches replay the bounding lemma for (alpha, beta, gamma, delta), the
/// |beta| < |alpha| branches its eta-image, and equality is excluded by F8.
/// Check against h_fact_base().
Derivation script_theorem_main();

}  // namespace ordercert
