#pragma once

#include <map>
#include <string>
#include <vector>

#include "stardil/mat_kernel.hpp"
#include "stardil/sg_core.hpp"

namespace stardil {

struct HilbertBundle {
    std::vector<int> dim;  // dimension of H_x per bundle point x
    int n_points() const { return static_cast<int>(dim.size()); }
};

struct AggregationMap {
    std::vector<int> tau;  // object -> bundle point
};

// Coherent operator-valued map T on a *-semigroupoid with unit:
// mats[a] acts from H_{tau(d(a))} to H_{tau(c(a))} and mats[a*] = mats[a]*.
struct CoherentMap {
    SemigroupoidTable table;
    HilbertBundle bundle;
    AggregationMap tau;
    std::vector<CMatrix> mats;

    int dim_d(int a) const { return bundle.dim[tau.tau[table.src[a]]]; }
    int dim_c(int a) const { return bundle.dim[tau.tau[table.tgt[a]]]; }
};

struct CoherenceViolation {
    int element;
    std::string kind;  // "shape" or "adjoint"
    double deviation;  // max-abs deviation for adjoint violations
};

struct CoherenceReport {
    std::vector<CoherenceViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks the shape rule and the adjoint symmetry for every element.
CoherenceReport check_coherent(const CoherentMap& t);

// Block Gram matrix of a target fiber: block (beta, alpha) = T(beta* alpha)
// over the canonical ordering of elements with target s.
struct FiberGram {
    int fiber = -1;
    std::vector<int> ordering;       // elements of the target fiber, canonical order
    std::vector<int> block_offsets;  // column offset per ordering entry
    CMatrix gram;
    double lambda_min = 0.0;
};

// Throws MissingProductError when a needed product beta*.alpha is undefined
// (a truncation artifact); the fiber is then not checkable at this scale.
FiberGram fiber_gram(const CoherentMap& t, int s);

enum class PsdVerdict { pass, fail, not_checkable };

struct PsdReport {
    PsdVerdict verdict = PsdVerdict::pass;
    std::map<int, double> fiber_lambda_min;  // per checkable fiber
    std::vector<int> not_checkable;          // fibers lost to truncation
    int witness_fiber = -1;                  // most negative fiber on FAIL
    double tolerance = 0.0;
    bool pass() const { return verdict == PsdVerdict::pass; }
};

// Partial positive semidefiniteness: every fiber Gram PSD.  Fibers are
// independent; a fiber passes when lambda_min >= -tolerance * max(1, scale).
PsdReport check_psd(const CoherentMap& t, double tolerance = tol::psd);

// Minimal admissible boundedness constant C(alpha) on this table, attained
// as the squared operator norm of the induced factor-space operator.
double bound_constant(const CoherentMap& t, int alpha);

struct UnitalReport {
    bool pass = false;
    double idempotent_residual = 0.0;
    double hermitian_residual = 0.0;
    double orthogonality_residual = 0.0;
    double sum_residual = 0.0;  // max over x of ||sum_s T(eps_s) - I||_max
};

// Checks that the unit images form complementary orthogonal projections
// summing to the identity on each aggregated space.
UnitalReport check_unital(const CoherentMap& t, double tolerance = tol::verify);

}  // namespace stardil
