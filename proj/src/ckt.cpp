#include "stardil/ckt.hpp"

#include <algorithm>

namespace stardil {

CKTReport validate_ckt(const CKTFamily& fam, double tolerance) {
    const int nv = fam.graph.n_vertices;
    const int ne = static_cast<int>(fam.graph.edges.size());
    const int h = fam.dim_h;
    if (static_cast<int>(fam.p.size()) != nv || static_cast<int>(fam.s.size()) != ne)
        throw ShapeError("validate_ckt: family size mismatch with graph");
    for (const CMatrix& m : fam.p)
        if (m.rows() != h || m.cols() != h)
            throw ShapeError("validate_ckt: projection shape mismatch");
    for (const CMatrix& m : fam.s)
        if (m.rows() != h || m.cols() != h)
            throw ShapeError("validate_ckt: edge operator shape mismatch");

    CKTReport rep;
    rep.tolerance = tolerance;
    for (int v = 0; v < nv; ++v) {
        rep.projection_residual =
            std::max({rep.projection_residual, max_abs(fam.p[v] - fam.p[v].adjoint()),
                      max_abs(fam.p[v] * fam.p[v] - fam.p[v])});
        for (int w = v + 1; w < nv; ++w)
            rep.orthogonality_residual =
                std::max(rep.orthogonality_residual, max_abs(fam.p[v] * fam.p[w]));
    }
    for (int f = 0; f < ne; ++f)
        rep.condition_i_residual = std::max(
            rep.condition_i_residual,
            max_abs(fam.s[f].adjoint() * fam.s[f] - fam.p[fam.graph.edges[f].first]));

    CMatrix psum = CMatrix::Zero(h, h);
    for (int v = 0; v < nv; ++v) {
        psum += fam.p[v];
        CMatrix defect = fam.p[v];
        int received = 0;
        for (int f = 0; f < ne; ++f)
            if (fam.graph.edges[f].second == v) {
                defect -= fam.s[f] * fam.s[f].adjoint();
                ++received;
            }
        rep.ckt_lambda_min[v] = hermitian_eig_min(0.5 * (defect + defect.adjoint()));
        if (received > 0) rep.ck_residual[v] = max_abs(defect);
    }
    rep.nondegeneracy_residual = max_abs(psum - CMatrix::Identity(h, h));

    rep.pass_projections = rep.projection_residual <= tolerance &&
                           rep.orthogonality_residual <= tolerance;
    rep.pass_i = rep.condition_i_residual <= tolerance;
    rep.pass_ckt = true;
    for (auto [v, lm] : rep.ckt_lambda_min)
        if (lm < -tolerance) rep.pass_ckt = false;
    rep.pass_ck = true;
    for (auto [v, res] : rep.ck_residual)
        if (res > tolerance) rep.pass_ck = false;
    rep.nondegenerate = rep.nondegeneracy_residual <= tolerance;
    return rep;
}

InducedRep induce_representation(const CKTFamily& fam, int l_max,
                                 double tolerance) {
    CKTReport check = validate_ckt(fam, tolerance);
    if (!check.pass())
        throw ValidationFailedError(
            "induce_representation: family fails the CKT axioms");

    InducedRep out;
    out.tft = free_star_semigroupoid(fam.graph, l_max);
    const int ne = static_cast<int>(fam.graph.edges.size());
    const int h = fam.dim_h;

    CoherentMap& t = out.map;
    t.table = out.tft.table;
    t.bundle.dim = {h};
    t.tau.tau.assign(t.table.n_objects, 0);
    t.mats.resize(t.table.n_elements);
    for (int a = 0; a < t.table.n_elements; ++a) {
        const Word& w = out.tft.word_of[a];
        if (w.letters.empty()) {
            t.mats[a] = fam.p[w.source];
            continue;
        }
        CMatrix m = CMatrix::Identity(h, h);
        for (int l : w.letters)
            m *= l < ne ? fam.s[l] : CMatrix(fam.s[l - ne].adjoint());
        t.mats[a] = m;
    }
    return out;
}

RestrictedOrthReport check_restricted_orthogonality(const InducedRep& rep) {
    RestrictedOrthReport out;
    const int ne = static_cast<int>(rep.tft.letter_ends.size()) / 2;
    const auto& tab = rep.map.table;
    auto star_free = [&](int a) {
        for (int l : rep.tft.word_of[a].letters)
            if (l >= ne) return false;
        return true;
    };
    for (int a = 0; a < tab.n_elements; ++a) {
        for (int b = a + 1; b < tab.n_elements; ++b) {
            if (!star_free(a) || !star_free(b)) {
                ++out.pairs_skipped;
                continue;
            }
            if (tab.tgt[a] == tab.tgt[b]) {  // equal ranges: not required
                ++out.pairs_skipped;
                continue;
            }
            out.max_residual = std::max(
                out.max_residual,
                max_abs(rep.map.mats[b].adjoint() * rep.map.mats[a]));
            ++out.pairs_checked;
        }
    }
    return out;
}

}  // namespace stardil
