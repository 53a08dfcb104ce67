#include "stardil/dilation.hpp"

#include <algorithm>

namespace stardil {

namespace {

constexpr double kIllConditionedBudget = 1e-6;

std::vector<int> target_fiber(const SemigroupoidTable& t, int s) {
    std::vector<int> out;
    for (int a = 0; a < t.n_elements; ++a)
        if (t.tgt[a] == s) out.push_back(a);
    return out;
}

// Block-level structure matrix of alpha: maps Gram coordinates of the
// d(alpha) fiber to Gram coordinates of the c(alpha) fiber; the block
// (lambda, beta) is the identity when alpha.beta = lambda.
CMatrix block_structure(const CoherentMap& t, int alpha, const FiberGram& fd,
                        const FiberGram& fc) {
    const auto& tab = t.table;
    const int nd = static_cast<int>(fd.gram.cols());
    const int nc = static_cast<int>(fc.gram.rows());
    std::vector<int> row_of(tab.n_elements, -1);
    for (size_t i = 0; i < fc.ordering.size(); ++i)
        row_of[fc.ordering[i]] = static_cast<int>(i);
    CMatrix m = CMatrix::Zero(nc, nd);
    for (size_t j = 0; j < fd.ordering.size(); ++j) {
        const int beta = fd.ordering[j];
        const int prod = tab.product(alpha, beta);
        if (prod < 0)
            throw MissingProductError(alpha, beta, tab.tgt[alpha],
                                      "dilate: product alpha.beta undefined at this "
                                      "truncation");
        const int i = row_of[prod];
        const int dim = t.dim_d(beta);
        m.block(fc.block_offsets[i], fd.block_offsets[j], dim, dim) +=
            CMatrix::Identity(dim, dim);
    }
    return m;
}

// Factor-space representation matrix of alpha: the least-squares solution of
// Phi . Q_d = Q_c . M_alpha.
CMatrix factor_rep(const CoherentMap& t, int alpha, const FiberGram& fd,
                   const CMatrix& qd, const FiberGram& fc, const CMatrix& qc) {
    const CMatrix b = qc * block_structure(t, alpha, fd, fc);
    LstsqResult sol = lstsq(qd.adjoint(), b.adjoint());
    const double scale = std::max(1.0, b.norm());
    if (sol.residual > kIllConditionedBudget * scale)
        throw IllConditionedError(
            sol.residual,
            "dilate: representation solve inconsistent; numerical rank suspect");
    return sol.x.adjoint();
}

}  // namespace

Eigen::MatrixXd structure_matrix(const SemigroupoidTable& t, int alpha) {
    const std::vector<int> fd = target_fiber(t, t.src[alpha]);
    const std::vector<int> fc = target_fiber(t, t.tgt[alpha]);
    std::vector<int> row_of(t.n_elements, -1);
    for (size_t i = 0; i < fc.size(); ++i) row_of[fc[i]] = static_cast<int>(i);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(fc.size(), fd.size());
    for (size_t j = 0; j < fd.size(); ++j) {
        const int prod = t.product(alpha, fd[j]);
        if (prod >= 0) m(row_of[prod], static_cast<Eigen::Index>(j)) += 1.0;
    }
    return m;
}

Dilation dilate(const CoherentMap& t) {
    const auto& tab = t.table;
    if (!tab.has_star() || !tab.has_units())
        throw ShapeError("dilate: table must carry an involution and units");
    Dilation d;
    d.tau = t.tau;

    std::vector<FiberGram> grams(tab.n_objects);
    d.factors.resize(tab.n_objects);
    d.factor_rank.resize(tab.n_objects);
    for (int s = 0; s < tab.n_objects; ++s) {
        grams[s] = fiber_gram(t, s);
        try {
            FactorResult fr = psd_factor(grams[s].gram);
            d.factors[s] = std::move(fr.q);
            d.factor_rank[s] = static_cast<int>(fr.rank);
        } catch (const NotPsdError& e) {
            throw NotPsdError(e.lambda_min, s, e.what());
        }
    }

    const int nx = t.bundle.n_points();
    d.layout.assign(nx, {});
    d.block_offset.assign(tab.n_objects, 0);
    d.dim_k.assign(nx, 0);
    for (int s = 0; s < tab.n_objects; ++s) {
        const int x = t.tau.tau[s];
        d.layout[x].push_back(s);
        d.block_offset[s] = d.dim_k[x];
        d.dim_k[x] += d.factor_rank[s];
    }

    d.v.resize(tab.n_objects);
    for (int s = 0; s < tab.n_objects; ++s) {
        const int x = t.tau.tau[s];
        const int h = t.bundle.dim[x];
        // V_s in factor coordinates: the columns of Q_s at the unit block.
        const int eps = tab.units[s];
        int col = -1;
        for (size_t i = 0; i < grams[s].ordering.size(); ++i)
            if (grams[s].ordering[i] == eps) col = grams[s].block_offsets[i];
        d.v[s] = CMatrix::Zero(d.dim_k[x], h);
        if (d.factor_rank[s] > 0 && col >= 0)
            d.v[s].middleRows(d.block_offset[s], d.factor_rank[s]) =
                d.factors[s].middleCols(col, h);
    }

    d.rep.resize(tab.n_elements);
    for (int a = 0; a < tab.n_elements; ++a) {
        const int sd = tab.src[a];
        const int sc = tab.tgt[a];
        const int xd = t.tau.tau[sd];
        const int xc = t.tau.tau[sc];
        CMatrix phi =
            factor_rep(t, a, grams[sd], d.factors[sd], grams[sc], d.factors[sc]);
        d.rep[a] = CMatrix::Zero(d.dim_k[xc], d.dim_k[xd]);
        if (phi.size() > 0)
            d.rep[a].block(d.block_offset[sc], d.block_offset[sd], phi.rows(),
                           phi.cols()) = phi;
    }
    return d;
}

double bound_constant(const CoherentMap& t, int alpha) {
    const int sd = t.table.src[alpha];
    const int sc = t.table.tgt[alpha];
    FiberGram fd = fiber_gram(t, sd);
    FiberGram fc = sc == sd ? fd : fiber_gram(t, sc);
    FactorResult qd = psd_factor(fd.gram);
    FactorResult qc = sc == sd ? qd : psd_factor(fc.gram);
    const double n = op_norm(factor_rep(t, alpha, fd, qd.q, fc, qc.q));
    return n * n;
}

double VerifyReport::max_residual() const {
    return std::max({reconstruction, multiplicativity, adjoint, block_support,
                     orthogonality, range_products, unit_sum});
}

VerifyReport verify_dilation(const CoherentMap& t, const Dilation& d) {
    const auto& tab = t.table;
    VerifyReport r;

    // Columns rep(a) V(d(a)) reused by several checks below.
    std::vector<CMatrix> w(tab.n_elements);
    for (int a = 0; a < tab.n_elements; ++a) w[a] = d.rep[a] * d.v[tab.src[a]];

    for (int a = 0; a < tab.n_elements; ++a) {
        const int sd = tab.src[a], sc = tab.tgt[a];
        r.reconstruction = std::max(
            r.reconstruction, max_abs(t.mats[a] - d.v[sc].adjoint() * w[a]));
        if (tab.has_star())
            r.adjoint =
                std::max(r.adjoint, max_abs(d.rep[tab.star[a]] - d.rep[a].adjoint()));
        // Block support: zero the designated block and measure what remains.
        CMatrix outside = d.rep[a];
        if (d.factor_rank[sc] > 0 && d.factor_rank[sd] > 0)
            outside
                .block(d.block_offset[sc], d.block_offset[sd], d.factor_rank[sc],
                       d.factor_rank[sd])
                .setZero();
        r.block_support = std::max(r.block_support, max_abs(outside));
    }

    for (int a = 0; a < tab.n_elements; ++a)
        for (int b = 0; b < tab.n_elements; ++b) {
            const int ab = tab.product(a, b);
            if (ab < 0) continue;
            r.multiplicativity =
                std::max(r.multiplicativity, max_abs(d.rep[ab] - d.rep[a] * d.rep[b]));
        }

    for (int a = 0; a < tab.n_elements; ++a)
        for (int b = 0; b < tab.n_elements; ++b) {
            if (tab.tgt[a] == tab.tgt[b]) continue;
            if (d.tau.tau[tab.tgt[a]] == d.tau.tau[tab.tgt[b]])
                r.orthogonality =
                    std::max(r.orthogonality, max_abs(w[b].adjoint() * w[a]));
            if (d.tau.tau[tab.tgt[a]] == d.tau.tau[tab.src[b]] &&
                tab.tgt[a] != tab.src[b])
                r.range_products = std::max(r.range_products, max_abs(d.rep[b] * w[a]));
        }

    if (tab.has_units()) {
        for (int x = 0; x < t.bundle.n_points(); ++x) {
            CMatrix sum = CMatrix::Zero(d.dim_k[x], d.dim_k[x]);
            for (int s : d.layout[x]) sum += d.rep[tab.units[s]];
            r.unit_sum =
                std::max(r.unit_sum, max_abs(sum - CMatrix::Identity(d.dim_k[x],
                                                                     d.dim_k[x])));
        }
    }

    for (int x = 0; x < t.bundle.n_points(); ++x) {
        Eigen::Index cols = 0;
        for (int a = 0; a < tab.n_elements; ++a)
            if (d.tau.tau[tab.tgt[a]] == x) cols += w[a].cols();
        CMatrix span(d.dim_k[x], cols);
        Eigen::Index at = 0;
        for (int a = 0; a < tab.n_elements; ++a)
            if (d.tau.tau[tab.tgt[a]] == x) {
                span.middleCols(at, w[a].cols()) = w[a];
                at += w[a].cols();
            }
        r.minimality_defect += static_cast<int>(d.dim_k[x] - col_rank(span));
    }
    return r;
}

EquivalenceWitness unitary_equivalence(const Dilation& d1, const Dilation& d2,
                                       const CoherentMap& t) {
    const auto& tab = t.table;
    const int nx = t.bundle.n_points();
    for (int s = 0; s < tab.n_objects; ++s)
        if (d1.factor_rank[s] != d2.factor_rank[s])
            throw DimensionMismatchError(
                s, "unitary_equivalence: factor ranks differ; an input is "
                   "non-minimal");

    // Per-object block of the matching unitary, from the spanning families.
    std::vector<CMatrix> u_block(tab.n_objects);
    for (int s = 0; s < tab.n_objects; ++s) {
        const int r1 = d1.factor_rank[s];
        std::vector<int> fam;
        Eigen::Index cols = 0;
        for (int a = 0; a < tab.n_elements; ++a)
            if (tab.tgt[a] == s) {
                fam.push_back(a);
                cols += t.dim_d(a);
            }
        CMatrix a1(r1, cols), a2(r1, cols);
        Eigen::Index at = 0;
        for (int a : fam) {
            const int h = t.dim_d(a);
            a1.middleCols(at, h) = (d1.rep[a] * d1.v[tab.src[a]])
                                       .middleRows(d1.block_offset[s], r1);
            a2.middleCols(at, h) = (d2.rep[a] * d2.v[tab.src[a]])
                                       .middleRows(d2.block_offset[s], r1);
            at += h;
        }
        u_block[s] = lstsq(a1.adjoint(), a2.adjoint()).x.adjoint();
    }

    EquivalenceWitness wit;
    wit.u.resize(nx);
    for (int x = 0; x < nx; ++x) {
        wit.u[x] = CMatrix::Zero(d2.dim_k[x], d1.dim_k[x]);
        for (int s : d1.layout[x]) {
            const int r = d1.factor_rank[s];
            if (r > 0)
                wit.u[x].block(d2.block_offset[s], d1.block_offset[s], r, r) =
                    u_block[s];
        }
        wit.unitarity = std::max(
            wit.unitarity, max_abs(wit.u[x].adjoint() * wit.u[x] -
                                   CMatrix::Identity(d1.dim_k[x], d1.dim_k[x])));
    }
    for (int a = 0; a < tab.n_elements; ++a) {
        const int xc = t.tau.tau[tab.tgt[a]];
        const int xd = t.tau.tau[tab.src[a]];
        wit.intertwining = std::max(
            wit.intertwining,
            max_abs(wit.u[xc] * d1.rep[a] - d2.rep[a] * wit.u[xd]));
    }
    for (int s = 0; s < tab.n_objects; ++s) {
        const int x = t.tau.tau[s];
        wit.v_matching =
            std::max(wit.v_matching, max_abs(wit.u[x] * d1.v[s] - d2.v[s]));
    }
    return wit;
}

PartialIsometryReport check_partial_isometries(const Dilation& d,
                                               const SemigroupoidTable& t,
                                               double tolerance) {
    if (!classify(t).inverse_semigroupoid)
        throw NotInverseSemigroupoidError(
            "check_partial_isometries: table is not an inverse semigroupoid");
    PartialIsometryReport r;
    for (const CMatrix& p : d.rep) {
        r.triple_product_residual =
            std::max(r.triple_product_residual, max_abs(p * p.adjoint() * p - p));
        r.max_norm = std::max(r.max_norm, op_norm(p));
    }
    r.pass = r.triple_product_residual <= tolerance &&
             r.max_norm <= 1.0 + tolerance;
    return r;
}

UnitalEmbedding embed_unital(const CoherentMap& t, const Dilation& d) {
    UnitalReport ur = check_unital(t);
    if (!ur.pass)
        throw NotUnitalError("embed_unital: unit images are not complementary "
                             "orthogonal projections");
    const auto& tab = t.table;
    UnitalEmbedding e;
    const int nx = t.bundle.n_points();
    e.w.resize(nx);
    for (int x = 0; x < nx; ++x) {
        e.w[x] = CMatrix::Zero(d.dim_k[x], t.bundle.dim[x]);
        for (int s : d.layout[x]) e.w[x] += d.v[s];
        e.isometry_residual = std::max(
            e.isometry_residual,
            max_abs(e.w[x].adjoint() * e.w[x] -
                    CMatrix::Identity(t.bundle.dim[x], t.bundle.dim[x])));
    }
    for (int a = 0; a < tab.n_elements; ++a) {
        const int xc = t.tau.tau[tab.tgt[a]];
        const int xd = t.tau.tau[tab.src[a]];
        e.compression_residual = std::max(
            e.compression_residual,
            max_abs(t.mats[a] - e.w[xc].adjoint() * d.rep[a] * e.w[xd]));
    }
    return e;
}

Dilation minimalize(const Dilation& d, const CoherentMap& t) {
    const auto& tab = t.table;
    const int nx = t.bundle.n_points();

    // Per-object orthonormal basis of the span of the dilation vectors
    // restricted to that block.
    std::vector<CMatrix> basis(tab.n_objects);
    for (int s = 0; s < tab.n_objects; ++s) {
        const int r_old = d.factor_rank[s];
        std::vector<int> fam;
        Eigen::Index cols = 0;
        for (int a = 0; a < tab.n_elements; ++a)
            if (tab.tgt[a] == s) {
                fam.push_back(a);
                cols += t.dim_d(a);
            }
        CMatrix m(r_old, cols);
        Eigen::Index at = 0;
        for (int a : fam) {
            const int h = t.dim_d(a);
            m.middleCols(at, h) =
                (d.rep[a] * d.v[tab.src[a]]).middleRows(d.block_offset[s], r_old);
            at += h;
        }
        if (m.size() == 0) {
            basis[s] = CMatrix(r_old, 0);
            continue;
        }
        Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU);
        const auto& sv = svd.singularValues();
        const double cutoff = tol::rank_cutoff * std::max(sv.size() > 0 ? sv(0) : 0.0, 1e-300);
        Eigen::Index rank = 0;
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            if (sv(i) > cutoff) ++rank;
        basis[s] = svd.matrixU().leftCols(rank);
    }

    Dilation out;
    out.tau = d.tau;
    out.layout.assign(nx, {});
    out.block_offset.assign(tab.n_objects, 0);
    out.factor_rank.assign(tab.n_objects, 0);
    out.dim_k.assign(nx, 0);
    out.factors.resize(tab.n_objects);
    for (int x = 0; x < nx; ++x) {
        for (int s : d.layout[x]) {
            out.layout[x].push_back(s);
            out.factor_rank[s] = static_cast<int>(basis[s].cols());
            out.block_offset[s] = out.dim_k[x];
            out.dim_k[x] += out.factor_rank[s];
        }
    }
    for (int s = 0; s < tab.n_objects; ++s) {
        if (d.factors[s].rows() == basis[s].rows())
            out.factors[s] = basis[s].adjoint() * d.factors[s];
        else
            out.factors[s] = CMatrix(out.factor_rank[s], 0);
    }

    // Full change-of-basis per bundle point.
    std::vector<CMatrix> bx(nx);
    for (int x = 0; x < nx; ++x) {
        bx[x] = CMatrix::Zero(d.dim_k[x], out.dim_k[x]);
        for (int s : d.layout[x])
            if (out.factor_rank[s] > 0)
                bx[x].block(d.block_offset[s], out.block_offset[s],
                            d.factor_rank[s], out.factor_rank[s]) = basis[s];
    }
    out.rep.resize(tab.n_elements);
    for (int a = 0; a < tab.n_elements; ++a) {
        const int xc = t.tau.tau[tab.tgt[a]];
        const int xd = t.tau.tau[tab.src[a]];
        out.rep[a] = bx[xc].adjoint() * d.rep[a] * bx[xd];
    }
    out.v.resize(tab.n_objects);
    for (int s = 0; s < tab.n_objects; ++s) {
        const int x = t.tau.tau[s];
        out.v[s] = bx[x].adjoint() * d.v[s];
    }
    return out;
}

}  // namespace stardil
