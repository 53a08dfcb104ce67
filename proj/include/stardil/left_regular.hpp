#pragma once

#include <vector>

#include "stardil/mat_kernel.hpp"
#include "stardil/psd_map.hpp"

namespace stardil {

// Aggregated left regular representation on the truncated coordinate spaces
// l2(Gamma; x): the basis of the x-space is the set of elements whose target
// aggregates to x; gamma acts by delta_beta -> delta_{gamma beta}.
struct LeftRegularSpace {
    AggregationMap tau;
    std::vector<std::vector<int>> basis;  // per x: elements with tau(c(.)) = x
    std::vector<int> index_in_basis;      // per element: its position in its basis
    std::vector<CMatrix> l;               // per element gamma: x_d-space -> x_c-space
    // Per element: domain basis positions whose true image overflowed the
    // truncation (column zeroed and flagged).
    std::vector<std::vector<int>> overflow_cols;
    bool has_overflow() const;
};

LeftRegularSpace left_regular(const SemigroupoidTable& t, const AggregationMap& tau);

struct MultiplicityProfile {
    int max_multiplicity = 0;  // N: max number of solutions of gamma.alpha = beta
    bool closable = false;     // all preimages finite (always true at finite scale)
    bool partial_isometry_expected = false;  // left-cancellative table or gamma invertible
};

MultiplicityProfile multiplicity_profile(const SemigroupoidTable& t, int gamma);

struct LeftRegularReport {
    double partial_isometry_residual = 0.0;  // where expected, on clean columns
    double projection_residual = 0.0;        // L(eps_s) idempotent Hermitian
    double multiplicativity_residual = 0.0;  // L(gamma beta) = L(gamma) L(beta)
    double orthogonality_residual = 0.0;     // ranges for distinct targets
    double max_norm_excess = 0.0;            // max over gamma of op_norm - N
    bool norm_bound_ok = false;
    bool multiplicativity_checked = false;   // skipped when overflow is present
};

LeftRegularReport check_lr_properties(const LeftRegularSpace& space,
                                      const SemigroupoidTable& t,
                                      double tolerance = tol::verify);

}  // namespace stardil
