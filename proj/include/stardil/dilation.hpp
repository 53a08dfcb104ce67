#pragma once

#include <vector>

#include "stardil/psd_map.hpp"

namespace stardil {

// Minimal orthogonal dilation of a coherent map in finite coordinates.
//
// Per object s the fiber Gram factorizes as G_s = Q_s* Q_s with Q_s of full
// row rank r_s; the factor space L_s is C^{r_s}.  The dilation space of a
// bundle point x is K_x = direct sum of the L_s over tau(s) = x, laid out in
// object order.  rep and V are stored zero-padded on the K spaces.
struct Dilation {
    AggregationMap tau;
    std::vector<CMatrix> factors;  // per object: Q_s (r_s x N_s)
    std::vector<std::vector<int>> layout;  // per x: objects s with tau(s)=x, in order
    std::vector<int> block_offset;  // per object: offset of L_s inside K_{tau(s)}
    std::vector<int> factor_rank;   // r_s per object
    std::vector<int> dim_k;         // per x
    std::vector<CMatrix> rep;       // per element: K_{tau(d)} -> K_{tau(c)}
    std::vector<CMatrix> v;         // per object: H_{tau(s)} -> K_{tau(s)}
};

// Left-translation structure matrix of alpha at fiber granularity:
// rows indexed by the target fiber of c(alpha), columns by the target fiber
// of d(alpha); entry (lambda, beta) counts solutions of alpha.beta = lambda.
Eigen::MatrixXd structure_matrix(const SemigroupoidTable& t, int alpha);

// Constructs the minimal orthogonal dilation.
// Throws NotPsdError, MissingProductError, or IllConditionedError when the
// least-squares system defining a representation matrix is inconsistent
// beyond budget.
Dilation dilate(const CoherentMap& t);

struct VerifyReport {
    double reconstruction = 0.0;   // ||T(a) - V* rep(a) V||
    double multiplicativity = 0.0; // ||rep(ab) - rep(a) rep(b)||
    double adjoint = 0.0;          // ||rep(a*) - rep(a)*||
    double block_support = 0.0;    // mass outside the designated blocks
    double orthogonality = 0.0;    // cross-target Gram of rep(a)V(d(a)) columns
    double range_products = 0.0;   // rep(b) rep(a) V(d(a)) for c(a) != d(b)
    double unit_sum = 0.0;         // ||sum_s rep(eps_s) - I_{K_x}||
    int minimality_defect = 0;     // sum over x of dim K_x - rank of the span
    double max_residual() const;
};

VerifyReport verify_dilation(const CoherentMap& t, const Dilation& d);

struct EquivalenceWitness {
    std::vector<CMatrix> u;  // per x: unitary K_x(d1) -> K_x(d2)
    double unitarity = 0.0;
    double intertwining = 0.0;
    double v_matching = 0.0;
    bool pass(double tolerance = tol::verify) const {
        return unitarity <= tolerance && intertwining <= tolerance &&
               v_matching <= tolerance;
    }
};

// Blockwise unitary matching two minimal orthogonal dilations of the same
// map.  Throws DimensionMismatchError when factor ranks differ.
EquivalenceWitness unitary_equivalence(const Dilation& d1, const Dilation& d2,
                                       const CoherentMap& t);

struct PartialIsometryReport {
    bool pass = false;
    double triple_product_residual = 0.0;  // max ||P P* P - P||
    double max_norm = 0.0;                 // max op_norm(rep(a))
};

// Requires the underlying table to classify as an inverse semigroupoid;
// throws NotInverseSemigroupoidError otherwise.
PartialIsometryReport check_partial_isometries(const Dilation& d,
                                               const SemigroupoidTable& t,
                                               double tolerance = tol::verify);

struct UnitalEmbedding {
    std::vector<CMatrix> w;  // per x: isometry H_x -> K_x
    double isometry_residual = 0.0;     // ||W* W - I||
    double compression_residual = 0.0;  // ||T(a) - W* rep(a) W||
};

// Throws NotUnitalError when check_unital fails.
UnitalEmbedding embed_unital(const CoherentMap& t, const Dilation& d);

// Compresses a (possibly non-minimal) orthogonal dilation onto the span of
// {rep(a) V(d(a))}; the output has minimality defect 0.
Dilation minimalize(const Dilation& d, const CoherentMap& t);

}  // namespace stardil
