#include "stardil/psd_map.hpp"

#include <algorithm>

namespace stardil {

CoherenceReport check_coherent(const CoherentMap& t) {
    CoherenceReport rep;
    const auto& tab = t.table;
    for (int a = 0; a < tab.n_elements; ++a) {
        const CMatrix& m = t.mats[a];
        if (m.rows() != t.dim_c(a) || m.cols() != t.dim_d(a)) {
            rep.violations.push_back({a, "shape", 0.0});
            continue;
        }
        if (tab.has_star()) {
            const CMatrix& ms = t.mats[tab.star[a]];
            if (ms.rows() == m.cols() && ms.cols() == m.rows()) {
                const double dev = max_abs(ms - m.adjoint());
                const double scale = std::max(1.0, max_abs(m));
                if (dev > tol::hermitian * scale * 10)
                    rep.violations.push_back({a, "adjoint", dev});
            }
        }
    }
    return rep;
}

FiberGram fiber_gram(const CoherentMap& t, int s) {
    const auto& tab = t.table;
    FiberGram fg;
    fg.fiber = s;
    for (int a = 0; a < tab.n_elements; ++a)
        if (tab.tgt[a] == s) fg.ordering.push_back(a);
    int total = 0;
    for (int a : fg.ordering) {
        fg.block_offsets.push_back(total);
        total += t.dim_d(a);
    }
    fg.gram = CMatrix::Zero(total, total);
    for (size_t i = 0; i < fg.ordering.size(); ++i) {
        for (size_t j = 0; j < fg.ordering.size(); ++j) {
            const int beta = fg.ordering[i];
            const int alpha = fg.ordering[j];
            const int bs = tab.star[beta];
            const int prod = tab.product(bs, alpha);
            if (prod < 0)
                throw MissingProductError(
                    bs, alpha, s,
                    "fiber_gram: product beta*.alpha undefined at this truncation; "
                    "fiber not checkable");
            fg.gram.block(fg.block_offsets[i], fg.block_offsets[j], t.dim_d(beta),
                          t.dim_d(alpha)) = t.mats[prod];
        }
    }
    fg.lambda_min = total == 0 ? 0.0 : hermitian_eig_min(fg.gram);
    return fg;
}

PsdReport check_psd(const CoherentMap& t, double tolerance) {
    PsdReport rep;
    rep.tolerance = tolerance;
    if (!t.table.has_star())
        throw ShapeError("check_psd: table has no involution");
    double worst_margin = 0.0;
    for (int s = 0; s < t.table.n_objects; ++s) {
        try {
            FiberGram fg = fiber_gram(t, s);
            rep.fiber_lambda_min[s] = fg.lambda_min;
            const double scale = std::max(1.0, max_abs(fg.gram));
            const double margin = fg.lambda_min + tolerance * scale;
            if (margin < worst_margin) {
                worst_margin = margin;
                rep.witness_fiber = s;
            }
        } catch (const MissingProductError&) {
            rep.not_checkable.push_back(s);
        }
    }
    if (worst_margin < 0.0)
        rep.verdict = PsdVerdict::fail;
    else if (!rep.not_checkable.empty())
        rep.verdict = PsdVerdict::not_checkable;
    else
        rep.verdict = PsdVerdict::pass;
    return rep;
}

UnitalReport check_unital(const CoherentMap& t, double tolerance) {
    if (!t.table.has_units())
        throw NotUnitalError("check_unital: table has no units");
    UnitalReport rep;
    const int nx = t.bundle.n_points();
    for (int x = 0; x < nx; ++x) {
        const int h = t.bundle.dim[x];
        CMatrix sum = CMatrix::Zero(h, h);
        std::vector<int> members;
        for (int s = 0; s < t.table.n_objects; ++s)
            if (t.tau.tau[s] == x) members.push_back(s);
        for (size_t i = 0; i < members.size(); ++i) {
            const CMatrix& p = t.mats[t.table.units[members[i]]];
            rep.hermitian_residual =
                std::max(rep.hermitian_residual, max_abs(p - p.adjoint()));
            rep.idempotent_residual =
                std::max(rep.idempotent_residual, max_abs(p * p - p));
            sum += p;
            for (size_t j = i + 1; j < members.size(); ++j) {
                const CMatrix& q = t.mats[t.table.units[members[j]]];
                rep.orthogonality_residual =
                    std::max(rep.orthogonality_residual, max_abs(p * q));
            }
        }
        rep.sum_residual =
            std::max(rep.sum_residual, max_abs(sum - CMatrix::Identity(h, h)));
    }
    rep.pass = rep.idempotent_residual <= tolerance &&
               rep.hermitian_residual <= tolerance &&
               rep.orthogonality_residual <= tolerance &&
               rep.sum_residual <= tolerance;
    return rep;
}

}  // namespace stardil
