#pragma once

#include <map>
#include <vector>

#include "stardil/graph_free.hpp"
#include "stardil/psd_map.hpp"

namespace stardil {

// A candidate Cuntz-Krieger-Toeplitz family on a single Hilbert space:
// projections P_v per vertex and operators S_f per edge.
struct CKTFamily {
    DirectedGraph graph;
    int dim_h = 0;
    std::vector<CMatrix> p;  // per vertex
    std::vector<CMatrix> s;  // per edge
};

struct CKTReport {
    double tolerance = 0.0;
    double projection_residual = 0.0;     // Hermitian + idempotent deviation
    double orthogonality_residual = 0.0;  // ||P_v P_w|| for v != w
    double condition_i_residual = 0.0;    // ||S_f* S_f - P_{s(f)}||
    // Per vertex: lambda_min(P_v - sum over received edges of S_f S_f*).
    // Each summand is PSD, so the full received set is the binding case of
    // the finite-subset quantifier.
    std::map<int, double> ckt_lambda_min;
    // Per vertex with 0 < |r^{-1}(v)| (finite here by construction):
    // equality residual ||P_v - sum S_f S_f*||.
    std::map<int, double> ck_residual;
    double nondegeneracy_residual = 0.0;  // ||sum_v P_v - I||
    bool pass_projections = false;
    bool pass_i = false;
    bool pass_ckt = false;
    bool pass_ck = false;
    bool nondegenerate = false;
    bool pass() const { return pass_projections && pass_i && pass_ckt; }
};

CKTReport validate_ckt(const CKTFamily& fam, double tolerance = tol::verify);

// The multiplicative extension of a validated family to the length-truncated
// free *-semigroupoid of the graph, packaged as a coherent map with full
// aggregation (a single bundle point of dimension dim_h).
struct InducedRep {
    TruncatedFreeTable tft;
    CoherentMap map;
};

// Throws ValidationFailedError when validate_ckt does not pass.
InducedRep induce_representation(const CKTFamily& fam, int l_max,
                                 double tolerance = tol::verify);

struct RestrictedOrthReport {
    double max_residual = 0.0;  // ||Phi(beta)* Phi(alpha)|| over checked pairs
    int pairs_checked = 0;
    int pairs_skipped = 0;  // starred words, or equal ranges (not required)
};

// Range orthogonality of the restriction to star-free words with distinct
// ranges.
RestrictedOrthReport check_restricted_orthogonality(const InducedRep& rep);

}  // namespace stardil
