#include "stardil/left_regular.hpp"

#include <algorithm>

namespace stardil {

bool LeftRegularSpace::has_overflow() const {
    for (const auto& cols : overflow_cols)
        if (!cols.empty()) return true;
    return false;
}

LeftRegularSpace left_regular(const SemigroupoidTable& t, const AggregationMap& tau) {
    if (tau.tau.size() != static_cast<size_t>(t.n_objects))
        throw ShapeError("left_regular: aggregation map size mismatch");
    int nx = 0;
    for (int x : tau.tau) nx = std::max(nx, x + 1);

    LeftRegularSpace sp;
    sp.tau = tau;
    sp.basis.assign(nx, {});
    sp.index_in_basis.assign(t.n_elements, -1);
    for (int a = 0; a < t.n_elements; ++a) {
        const int x = tau.tau[t.tgt[a]];
        sp.index_in_basis[a] = static_cast<int>(sp.basis[x].size());
        sp.basis[x].push_back(a);
    }
    sp.l.resize(t.n_elements);
    sp.overflow_cols.resize(t.n_elements);
    for (int g = 0; g < t.n_elements; ++g) {
        const int xd = tau.tau[t.src[g]];
        const int xc = tau.tau[t.tgt[g]];
        CMatrix m = CMatrix::Zero(sp.basis[xc].size(), sp.basis[xd].size());
        for (size_t j = 0; j < sp.basis[xd].size(); ++j) {
            const int b = sp.basis[xd][j];
            if (t.tgt[b] != t.src[g]) continue;  // delta_b killed by L(g)
            const int gb = t.product(g, b);
            if (gb >= 0)
                m(sp.index_in_basis[gb], static_cast<Eigen::Index>(j)) += 1.0;
            else if (t.truncated)
                sp.overflow_cols[g].push_back(static_cast<int>(j));
        }
        sp.l[g] = std::move(m);
    }
    return sp;
}

MultiplicityProfile multiplicity_profile(const SemigroupoidTable& t, int gamma) {
    MultiplicityProfile p;
    p.closable = true;  // every preimage set is finite at this scale
    for (int b = 0; b < t.n_elements; ++b) {
        if (t.tgt[b] != t.tgt[gamma]) continue;
        int count = 0;
        for (int a = 0; a < t.n_elements; ++a)
            if (t.tgt[a] == t.src[gamma] && t.product(gamma, a) == b) ++count;
        p.max_multiplicity = std::max(p.max_multiplicity, count);
    }
    bool invertible = false;
    if (t.has_units()) {
        for (int a = 0; a < t.n_elements && !invertible; ++a)
            if (t.product(gamma, a) == t.units[t.tgt[gamma]] &&
                t.product(a, gamma) == t.units[t.src[gamma]])
                invertible = true;
    }
    p.partial_isometry_expected = classify(t).left_cancellative || invertible;
    return p;
}

namespace {

CMatrix drop_columns(const CMatrix& m, const std::vector<int>& flagged) {
    if (flagged.empty()) return m;
    CMatrix out(m.rows(), m.cols() - static_cast<Eigen::Index>(flagged.size()));
    Eigen::Index at = 0;
    size_t f = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (f < flagged.size() && flagged[f] == j) {
            ++f;
            continue;
        }
        out.col(at++) = m.col(j);
    }
    return out;
}

}  // namespace

LeftRegularReport check_lr_properties(const LeftRegularSpace& sp,
                                      const SemigroupoidTable& t,
                                      double tolerance) {
    LeftRegularReport r;
    for (int g = 0; g < t.n_elements; ++g) {
        MultiplicityProfile prof = multiplicity_profile(t, g);
        if (prof.partial_isometry_expected) {
            const CMatrix clean = drop_columns(sp.l[g], sp.overflow_cols[g]);
            r.partial_isometry_residual =
                std::max(r.partial_isometry_residual,
                         max_abs(clean * clean.adjoint() * clean - clean));
        }
        r.max_norm_excess = std::max(
            r.max_norm_excess, op_norm(sp.l[g]) - prof.max_multiplicity);
    }
    r.norm_bound_ok = r.max_norm_excess <= tolerance;

    if (t.has_units()) {
        for (int s = 0; s < t.n_objects; ++s) {
            const CMatrix& p = sp.l[t.units[s]];
            r.projection_residual = std::max(
                {r.projection_residual, max_abs(p * p - p), max_abs(p - p.adjoint())});
        }
    }

    if (!sp.has_overflow()) {
        r.multiplicativity_checked = true;
        for (int a = 0; a < t.n_elements; ++a)
            for (int b = 0; b < t.n_elements; ++b) {
                const int ab = t.product(a, b);
                if (ab < 0) continue;
                r.multiplicativity_residual =
                    std::max(r.multiplicativity_residual,
                             max_abs(sp.l[ab] - sp.l[a] * sp.l[b]));
            }
    }

    for (int a = 0; a < t.n_elements; ++a)
        for (int b = a + 1; b < t.n_elements; ++b) {
            if (t.tgt[a] == t.tgt[b]) continue;
            if (sp.tau.tau[t.tgt[a]] != sp.tau.tau[t.tgt[b]]) continue;
            r.orthogonality_residual = std::max(
                r.orthogonality_residual, max_abs(sp.l[b].adjoint() * sp.l[a]));
        }
    return r;
}

}  // namespace stardil
