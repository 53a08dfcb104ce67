#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stardil/dilation.hpp"
#include "stardil/psd_map.hpp"

namespace stardil {

// Finitely supported formal linear combination living in one fiber of the
// linearised algebroid: support consists of elements with d = s and c = t.
struct FormalElement {
    int s = 0;  // common source of the supporting elements
    int t = 0;  // common target
    std::map<int, std::complex<double>> coeffs;
};

// Checks the support constraint; throws ShapeError on a violation.
void check_fiber(const SemigroupoidTable& tab, const FormalElement& a);

FormalElement formal_star(const SemigroupoidTable& tab, const FormalElement& a);

// Formal product; throws MissingProductError when a supporting product is
// undefined (truncation artifact).
FormalElement formal_mul(const SemigroupoidTable& tab, const FormalElement& a,
                         const FormalElement& b);

// Linear extension of a coherent map to formal elements.
CMatrix linear_extend(const CoherentMap& t, const FormalElement& a);

// n x n matrix over the algebroid with tuple-indexed fibers: entry (i, j)
// lives in the fiber with source s_tuple[j] and target t_tuple[i].
struct AmplifiedElement {
    int n = 0;
    std::vector<int> s_tuple, t_tuple;
    std::vector<FormalElement> entries;  // row-major
    const FormalElement& at(int i, int j) const { return entries[i * n + j]; }
};

AmplifiedElement amplified_star(const SemigroupoidTable& tab,
                                const AmplifiedElement& a);
AmplifiedElement amplified_mul(const SemigroupoidTable& tab,
                               const AmplifiedElement& a,
                               const AmplifiedElement& b);

// Blockwise application of the linear extension: the (i, j) block of the
// result is T applied to entry (i, j).
CMatrix amplify_map(const CoherentMap& t, const AmplifiedElement& a);

struct CpWitness {
    int n = 0;
    int trial = -1;
    double lambda_min = 0.0;
};

struct CpReport {
    bool pass = false;
    double worst_lambda_min = 0.0;
    CpWitness worst;      // most negative sample
    CpWitness first_fail; // first failing sample in scan order (n outer)
    bool failed = false;
    std::uint64_t seed = 0;
    int n_max = 0;
    int trials = 0;
};

// Samples cone generators X*X at amplification orders n = 1..n_max and
// checks that the amplified map sends them to PSD matrices.  A PASS is
// sampling evidence, not a proof.
CpReport sample_cp_check(const CoherentMap& t, int n_max, int trials,
                         std::uint64_t seed, double tolerance = tol::verify);

// Hermitian b with b^2 = I - a*a via the binomial series for (1-x)^{1/2},
// truncated by a geometric tail bound.  Throws NotStrictContractionError
// when op_norm(a) >= 1.
CMatrix sqrt_one_minus(const CMatrix& a, double tolerance = tol::verify);

// Cyclic representation of a positive scalar form on the table: the dilation
// of the induced scalar coherent map (all dimensions 1, full aggregation)
// together with the cyclic vector bundle xi_s = V(s).1.
struct FormRep {
    CoherentMap scalar_map;
    Dilation dil;
    std::vector<CVector> xi;          // per object
    double pairing_residual = 0.0;    // |omega(a) - <rep(a) xi_d, xi_c>|
    double orthogonality_residual = 0.0;  // cross-target range Gram
    int minimality_defect = 0;
};

// Throws NotPsdError when the form is not positive semidefinite.
FormRep positive_form_rep(const std::vector<std::complex<double>>& omega,
                          const SemigroupoidTable& tab);

}  // namespace stardil
