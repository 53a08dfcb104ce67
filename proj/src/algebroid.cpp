#include "stardil/algebroid.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace stardil {

void check_fiber(const SemigroupoidTable& tab, const FormalElement& a) {
    for (const auto& [elem, coeff] : a.coeffs) {
        (void)coeff;
        if (elem < 0 || elem >= tab.n_elements)
            throw ShapeError("formal element: id out of range");
        if (tab.src[elem] != a.s || tab.tgt[elem] != a.t)
            throw ShapeError("formal element: support leaves the declared fiber");
    }
}

FormalElement formal_star(const SemigroupoidTable& tab, const FormalElement& a) {
    if (!tab.has_star()) throw ShapeError("formal_star: table has no involution");
    check_fiber(tab, a);
    FormalElement out;
    out.s = a.t;
    out.t = a.s;
    for (const auto& [elem, coeff] : a.coeffs)
        out.coeffs[tab.star[elem]] += std::conj(coeff);
    return out;
}

FormalElement formal_mul(const SemigroupoidTable& tab, const FormalElement& a,
                         const FormalElement& b) {
    check_fiber(tab, a);
    check_fiber(tab, b);
    if (a.s != b.t)
        throw ShapeError("formal_mul: fibers not composable");
    FormalElement out;
    out.s = b.s;
    out.t = a.t;
    for (const auto& [ea, ca] : a.coeffs)
        for (const auto& [eb, cb] : b.coeffs) {
            const int prod = tab.product(ea, eb);
            if (prod < 0)
                throw MissingProductError(ea, eb, -1,
                                          "formal_mul: supporting product undefined");
            out.coeffs[prod] += ca * cb;
        }
    return out;
}

CMatrix linear_extend(const CoherentMap& t, const FormalElement& a) {
    check_fiber(t.table, a);
    const int rows = t.bundle.dim[t.tau.tau[a.t]];
    const int cols = t.bundle.dim[t.tau.tau[a.s]];
    CMatrix m = CMatrix::Zero(rows, cols);
    for (const auto& [elem, coeff] : a.coeffs) m += coeff * t.mats[elem];
    return m;
}

AmplifiedElement amplified_star(const SemigroupoidTable& tab,
                                const AmplifiedElement& a) {
    AmplifiedElement out;
    out.n = a.n;
    out.s_tuple = a.t_tuple;
    out.t_tuple = a.s_tuple;
    out.entries.resize(a.n * a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            out.entries[i * a.n + j] = formal_star(tab, a.at(j, i));
    return out;
}

AmplifiedElement amplified_mul(const SemigroupoidTable& tab,
                               const AmplifiedElement& a,
                               const AmplifiedElement& b) {
    if (a.n != b.n || a.s_tuple != b.t_tuple)
        throw ShapeError("amplified_mul: tuples not composable");
    AmplifiedElement out;
    out.n = a.n;
    out.s_tuple = b.s_tuple;
    out.t_tuple = a.t_tuple;
    out.entries.resize(a.n * a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            FormalElement sum;
            sum.s = b.s_tuple[j];
            sum.t = a.t_tuple[i];
            for (int k = 0; k < a.n; ++k) {
                FormalElement term = formal_mul(tab, a.at(i, k), b.at(k, j));
                for (const auto& [elem, coeff] : term.coeffs)
                    sum.coeffs[elem] += coeff;
            }
            out.entries[i * a.n + j] = std::move(sum);
        }
    return out;
}

CMatrix amplify_map(const CoherentMap& t, const AmplifiedElement& a) {
    std::vector<int> row_off(a.n + 1, 0), col_off(a.n + 1, 0);
    for (int i = 0; i < a.n; ++i)
        row_off[i + 1] = row_off[i] + t.bundle.dim[t.tau.tau[a.t_tuple[i]]];
    for (int j = 0; j < a.n; ++j)
        col_off[j + 1] = col_off[j] + t.bundle.dim[t.tau.tau[a.s_tuple[j]]];
    CMatrix m = CMatrix::Zero(row_off[a.n], col_off[a.n]);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            const FormalElement& e = a.at(i, j);
            if (e.s != a.s_tuple[j] || e.t != a.t_tuple[i])
                throw ShapeError("amplify_map: entry fiber mismatch with tuples");
            m.block(row_off[i], col_off[j], row_off[i + 1] - row_off[i],
                    col_off[j + 1] - col_off[j]) = linear_extend(t, e);
        }
    return m;
}

CpReport sample_cp_check(const CoherentMap& t, int n_max, int trials,
                         std::uint64_t seed, double tolerance) {
    const auto& tab = t.table;
    CpReport rep;
    rep.seed = seed;
    rep.n_max = n_max;
    rep.trials = trials;
    rep.pass = true;

    // Fibers indexed by (source, target) for the sampler.
    std::vector<std::vector<std::vector<int>>> fiber(
        tab.n_objects, std::vector<std::vector<int>>(tab.n_objects));
    for (int a = 0; a < tab.n_elements; ++a)
        fiber[tab.src[a]][tab.tgt[a]].push_back(a);

    bool first_recorded = false;
    for (int n = 1; n <= n_max; ++n) {
        for (int trial = 0; trial < trials; ++trial) {
            std::mt19937_64 rng(seed + 1000003ULL * static_cast<std::uint64_t>(n) +
                                static_cast<std::uint64_t>(trial));
            std::uniform_int_distribution<int> pick_obj(0, tab.n_objects - 1);
            std::uniform_real_distribution<double> coeff(-1.0, 1.0);

            AmplifiedElement x;
            x.n = n;
            for (int i = 0; i < n; ++i) {
                x.s_tuple.push_back(pick_obj(rng));
                x.t_tuple.push_back(pick_obj(rng));
            }
            x.entries.resize(n * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    FormalElement e;
                    e.s = x.s_tuple[j];
                    e.t = x.t_tuple[i];
                    for (int elem : fiber[e.s][e.t])
                        e.coeffs[elem] = {coeff(rng), coeff(rng)};
                    x.entries[i * n + j] = std::move(e);
                }

            const AmplifiedElement gen = amplified_mul(tab, amplified_star(tab, x), x);
            const CMatrix m = amplify_map(t, gen);
            if (m.size() == 0) continue;
            const double lm = hermitian_eig_min(0.5 * (m + m.adjoint()));
            const double scale = std::max(1.0, max_abs(m));
            if (lm < rep.worst_lambda_min) {
                rep.worst_lambda_min = lm;
                rep.worst = {n, trial, lm};
            }
            if (lm < -tolerance * scale) {
                rep.pass = false;
                if (!first_recorded) {
                    rep.first_fail = {n, trial, lm};
                    rep.failed = true;
                    first_recorded = true;
                }
            }
        }
    }
    return rep;
}

CMatrix sqrt_one_minus(const CMatrix& a, double tolerance) {
    const double norm_a = op_norm(a);
    if (norm_a >= 1.0)
        throw NotStrictContractionError(
            norm_a, "sqrt_one_minus: operator norm must be < 1");
    const CMatrix aa = a.adjoint() * a;
    const Eigen::Index n = aa.rows();
    const double q = norm_a * norm_a;

    CMatrix b = CMatrix::Identity(n, n);
    CMatrix power = aa;  // (a*a)^k
    double c = 0.5;      // series coefficient c_k
    double qk = q;       // q^k
    for (int k = 1;; ++k) {
        b -= c * power;
        const double next_c = c * (2 * k - 1) / (2 * k + 2);
        const double next_qk = qk * q;
        // Geometric tail bound: the remaining terms sum below a safety
        // fraction of the tolerance, so that the squared output also stays
        // within tolerance of I - a*a (the truncation error roughly doubles
        // through b^2).
        if (q <= 0.0 || next_c * next_qk / (1.0 - q) < tolerance * 1e-3) break;
        if (k > 200000)
            throw IllConditionedError(next_c * next_qk,
                                      "sqrt_one_minus: series failed to converge");
        c = next_c;
        qk = next_qk;
        power *= aa;
    }
    return b;
}

FormRep positive_form_rep(const std::vector<std::complex<double>>& omega,
                          const SemigroupoidTable& tab) {
    if (omega.size() != static_cast<size_t>(tab.n_elements))
        throw ShapeError("positive_form_rep: form size mismatch");
    FormRep out;
    CoherentMap& t = out.scalar_map;
    t.table = tab;
    t.bundle.dim = {1};
    t.tau.tau.assign(tab.n_objects, 0);
    t.mats.resize(tab.n_elements);
    for (int a = 0; a < tab.n_elements; ++a) {
        t.mats[a] = CMatrix(1, 1);
        t.mats[a](0, 0) = omega[a];
    }
    PsdReport psd = check_psd(t);
    if (psd.verdict == PsdVerdict::fail)
        throw NotPsdError(psd.fiber_lambda_min.count(psd.witness_fiber)
                              ? psd.fiber_lambda_min.at(psd.witness_fiber)
                              : 0.0,
                          psd.witness_fiber,
                          "positive_form_rep: form is not positive semidefinite");

    out.dil = dilate(t);
    out.xi.resize(tab.n_objects);
    for (int s = 0; s < tab.n_objects; ++s) out.xi[s] = out.dil.v[s].col(0);
    for (int a = 0; a < tab.n_elements; ++a) {
        const std::complex<double> paired =
            (out.xi[tab.tgt[a]].adjoint() * out.dil.rep[a] * out.xi[tab.src[a]])
                .value();
        out.pairing_residual =
            std::max(out.pairing_residual, std::abs(paired - omega[a]));
    }
    VerifyReport ver = verify_dilation(t, out.dil);
    out.minimality_defect = ver.minimality_defect;
    out.orthogonality_residual = ver.orthogonality;
    return out;
}

}  // namespace stardil
