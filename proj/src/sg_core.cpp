#include "stardil/sg_core.hpp"

#include <algorithm>
#include <set>

namespace stardil {

namespace {

void add(ValidationReport& rep, std::string axiom, std::vector<int> witness,
         std::string detail) {
    rep.violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
}

bool structural_check(const SemigroupoidTable& t, ValidationReport& rep) {
    bool ok = true;
    auto bad = [&](const std::string& d) {
        add(rep, "structural", {}, d);
        ok = false;
    };
    const size_t n = static_cast<size_t>(t.n_elements);
    if (t.n_objects < 0 || t.n_elements < 0) bad("negative counts");
    if (t.src.size() != n) bad("src size mismatch");
    if (t.tgt.size() != n) bad("tgt size mismatch");
    if (t.mul.size() != n * n) bad("mul size mismatch");
    if (!t.star.empty() && t.star.size() != n) bad("star size mismatch");
    if (!t.units.empty() && t.units.size() != static_cast<size_t>(t.n_objects))
        bad("units size mismatch");
    if (!ok) return false;
    for (int a = 0; a < t.n_elements; ++a) {
        if (t.src[a] < 0 || t.src[a] >= t.n_objects) bad("src out of range");
        if (t.tgt[a] < 0 || t.tgt[a] >= t.n_objects) bad("tgt out of range");
        if (t.has_star() && (t.star[a] < 0 || t.star[a] >= t.n_elements))
            bad("star out of range");
    }
    for (int v : t.mul)
        if (v < -1 || v >= t.n_elements) bad("mul entry out of range");
    if (t.has_units()) {
        std::set<int> seen;
        for (int s = 0; s < t.n_objects; ++s) {
            int e = t.units[s];
            if (e < 0 || e >= t.n_elements)
                bad("unit out of range");
            else if (!seen.insert(e).second)
                bad("units map not injective");
        }
    }
    return ok;
}

}  // namespace

ValidationReport validate(const SemigroupoidTable& t) {
    ValidationReport rep;
    if (!structural_check(t, rep)) return rep;

    // SG3: product defined exactly on composable pairs, with the stated
    // source/target behavior.  On truncated tables only the "defined implies
    // composable and well-shaped" direction is enforced.
    for (int a = 0; a < t.n_elements; ++a) {
        for (int b = 0; b < t.n_elements; ++b) {
            const int ab = t.product(a, b);
            const bool composable = t.src[a] == t.tgt[b];
            if (ab >= 0) {
                if (!composable)
                    add(rep, "SG3", {a, b}, "product defined on a non-composable pair");
                else if (t.src[ab] != t.src[b] || t.tgt[ab] != t.tgt[a])
                    add(rep, "SG3", {a, b, ab}, "product has wrong source or target");
            } else if (composable && !t.truncated) {
                add(rep, "SG3", {a, b}, "composable pair with undefined product");
            }
        }
    }

    // SG4: associativity on composable triples, wherever all products exist.
    for (int a = 0; a < t.n_elements; ++a) {
        for (int b = 0; b < t.n_elements; ++b) {
            const int ab = t.product(a, b);
            if (ab < 0) continue;
            for (int c = 0; c < t.n_elements; ++c) {
                const int bc = t.product(b, c);
                if (bc < 0) continue;
                const int ab_c = t.product(ab, c);
                const int a_bc = t.product(a, bc);
                if (ab_c >= 0 && a_bc >= 0) {
                    if (ab_c != a_bc)
                        add(rep, "SG4", {a, b, c}, "(ab)c != a(bc)");
                } else if ((ab_c >= 0) != (a_bc >= 0) && !t.truncated) {
                    add(rep, "SG4", {a, b, c},
                        "exactly one of (ab)c, a(bc) is defined");
                }
            }
        }
    }

    if (t.has_units()) {
        for (int s = 0; s < t.n_objects; ++s) {
            const int e = t.units[s];
            if (t.src[e] != s || t.tgt[e] != s)
                add(rep, "U1", {s, e}, "unit not an endo-element at its object");
        }
        for (int a = 0; a < t.n_elements; ++a) {
            // U2: unit at c(a) is left-neutral; U3: unit at d(a) right-neutral.
            const int el = t.units[t.tgt[a]];
            const int er = t.units[t.src[a]];
            const int la = t.product(el, a);
            const int ar = t.product(a, er);
            if (la >= 0 && la != a) add(rep, "U2", {el, a}, "unit not left-neutral");
            if (la < 0 && !t.truncated) add(rep, "U2", {el, a}, "unit product undefined");
            if (ar >= 0 && ar != a) add(rep, "U3", {a, er}, "unit not right-neutral");
            if (ar < 0 && !t.truncated) add(rep, "U3", {a, er}, "unit product undefined");
        }
        if (t.has_star()) {
            for (int s = 0; s < t.n_objects; ++s)
                if (t.star[t.units[s]] != t.units[s])
                    add(rep, "U-star", {s}, "unit not self-adjoint");
        }
    }

    if (t.has_star()) {
        for (int a = 0; a < t.n_elements; ++a) {
            const int as = t.star[a];
            if (t.src[as] != t.tgt[a] || t.tgt[as] != t.src[a])
                add(rep, "I1", {a, as}, "involution does not swap source and target");
            if (t.star[as] != a)
                add(rep, "I3", {a, as}, "involution not involutive");
        }
        // I2: (ab)* = b* a*.  The involution preserves word length, so on our
        // truncations b* a* is defined whenever ab is.
        for (int a = 0; a < t.n_elements; ++a) {
            for (int b = 0; b < t.n_elements; ++b) {
                const int ab = t.product(a, b);
                if (ab < 0) continue;
                const int ba = t.product(t.star[b], t.star[a]);
                if (ba < 0)
                    add(rep, "I2", {a, b}, "b* a* undefined while ab is defined");
                else if (ba != t.star[ab])
                    add(rep, "I2", {a, b, ab}, "(ab)* != b* a*");
            }
        }
    }
    return rep;
}

Fibers fibers(const SemigroupoidTable& t, int s) {
    Fibers f;
    for (int a = 0; a < t.n_elements; ++a) {
        if (t.tgt[a] == s) f.target_fiber.push_back(a);
        if (t.src[a] == s) {
            f.source_fiber.push_back(a);
            f.by_source[t.tgt[a]].push_back(a);
        }
    }
    return f;
}

ClassificationFlags classify(const SemigroupoidTable& t) {
    ClassificationFlags f;
    f.has_unit = t.has_units();
    f.has_star = t.has_star();

    std::set<std::pair<int, int>> dc_pairs;
    bool principal = true;
    for (int a = 0; a < t.n_elements; ++a)
        if (!dc_pairs.insert({t.src[a], t.tgt[a]}).second) principal = false;
    f.principal = principal;
    f.transitive =
        dc_pairs.size() == static_cast<size_t>(t.n_objects) * t.n_objects;

    // Inverse semigroupoid: every element has exactly one generalized inverse.
    f.inverse_semigroupoid = t.n_elements > 0;
    for (int a = 0; a < t.n_elements && f.inverse_semigroupoid; ++a) {
        int count = 0;
        for (int b = 0; b < t.n_elements; ++b) {
            if (t.src[b] != t.tgt[a] || t.tgt[b] != t.src[a]) continue;
            const int ab = t.product(a, b);
            const int ba = t.product(b, a);
            if (ab < 0 || ba < 0) continue;
            if (t.product(ab, a) == a && t.product(ba, b) == b) ++count;
        }
        if (count != 1) f.inverse_semigroupoid = false;
    }

    f.groupoid = f.has_unit && f.has_star && t.n_elements > 0;
    for (int a = 0; a < t.n_elements && f.groupoid; ++a) {
        const int as = t.star[a];
        if (t.product(a, as) != t.units[t.tgt[a]] ||
            t.product(as, a) != t.units[t.src[a]])
            f.groupoid = false;
    }

    f.left_cancellative = true;
    for (int g = 0; g < t.n_elements && f.left_cancellative; ++g) {
        for (int b = 0; b < t.n_elements && f.left_cancellative; ++b) {
            if (t.tgt[b] != t.src[g]) continue;
            const int gb = t.product(g, b);
            if (gb < 0) continue;
            for (int b2 = b + 1; b2 < t.n_elements; ++b2) {
                if (t.tgt[b2] != t.src[g]) continue;
                if (t.product(g, b2) == gb) {
                    f.left_cancellative = false;
                    break;
                }
            }
        }
    }
    return f;
}

SemigroupoidTable from_relation(int n_points,
                                const std::vector<std::pair<int, int>>& pairs) {
    std::set<std::pair<int, int>> rel(pairs.begin(), pairs.end());
    for (auto [s, t] : rel) {
        if (s < 0 || s >= n_points || t < 0 || t >= n_points)
            throw ShapeError("from_relation: pair out of range");
    }
    for (auto [s, t] : rel)
        for (auto [t2, v] : rel)
            if (t2 == t && !rel.count({s, v}))
                throw NotTransitiveError(s, t, v,
                                         "from_relation: relation not transitive");

    SemigroupoidTable tab;
    tab.n_objects = n_points;
    std::map<std::pair<int, int>, int> id_of;
    for (auto [s, t] : rel) {
        id_of[{s, t}] = tab.n_elements++;
        tab.tgt.push_back(s);  // c(s,t) = s
        tab.src.push_back(t);  // d(s,t) = t
    }
    tab.init_mul();
    for (auto [s, t] : rel)
        for (auto [t2, v] : rel)
            if (t2 == t)
                tab.set_product(id_of[{s, t}], id_of[{t, v}], id_of[{s, v}]);

    bool reflexive = true, symmetric = true;
    for (int p = 0; p < n_points; ++p)
        if (!rel.count({p, p})) reflexive = false;
    for (auto [s, t] : rel)
        if (!rel.count({t, s})) symmetric = false;
    if (reflexive) {
        tab.units.resize(n_points);
        for (int p = 0; p < n_points; ++p) tab.units[p] = id_of[{p, p}];
    }
    if (symmetric) {
        tab.star.resize(tab.n_elements);
        for (auto [s, t] : rel) tab.star[id_of[{s, t}]] = id_of[{t, s}];
    }
    return tab;
}

SemigroupoidTable transformation_semigroupoid(
    const SemigroupoidTable& monoid, const std::vector<std::vector<int>>& action) {
    const int n_points = static_cast<int>(action.size());
    const int ng = monoid.n_elements;
    if (monoid.n_objects != 1)
        throw ShapeError("transformation_semigroupoid: expected a one-object table");
    for (const auto& row : action) {
        if (static_cast<int>(row.size()) != ng)
            throw ShapeError("transformation_semigroupoid: action row size mismatch");
        for (int y : row)
            if (y < 0 || y >= n_points)
                throw ShapeError("transformation_semigroupoid: action value out of range");
    }
    for (int x = 0; x < n_points; ++x)
        for (int g = 0; g < ng; ++g)
            for (int h = 0; h < ng; ++h) {
                const int gh = monoid.product(g, h);
                if (gh < 0)
                    throw ShapeError("transformation_semigroupoid: monoid table partial");
                if (action[action[x][g]][h] != action[x][gh])
                    throw ActionError(x, g, h,
                                      "transformation_semigroupoid: not a right action");
            }

    SemigroupoidTable tab;
    tab.n_objects = n_points;
    tab.n_elements = n_points * ng;
    auto id_of = [&](int x, int g) { return x * ng + g; };
    tab.src.resize(tab.n_elements);
    tab.tgt.resize(tab.n_elements);
    for (int x = 0; x < n_points; ++x)
        for (int g = 0; g < ng; ++g) {
            tab.tgt[id_of(x, g)] = x;
            tab.src[id_of(x, g)] = action[x][g];
        }
    tab.init_mul();
    for (int x = 0; x < n_points; ++x)
        for (int g = 0; g < ng; ++g)
            for (int h = 0; h < ng; ++h)
                tab.set_product(id_of(x, g), id_of(action[x][g], h),
                                id_of(x, monoid.product(g, h)));

    if (monoid.has_units()) {
        const int e = monoid.units[0];
        bool fixes = true;
        for (int x = 0; x < n_points; ++x)
            if (action[x][e] != x) fixes = false;
        if (fixes) {
            tab.units.resize(n_points);
            for (int x = 0; x < n_points; ++x) tab.units[x] = id_of(x, e);
        }
    }
    if (monoid.has_star()) {
        bool invertible = true;
        for (int x = 0; x < n_points && invertible; ++x)
            for (int g = 0; g < ng; ++g)
                if (action[action[x][g]][monoid.star[g]] != x) invertible = false;
        if (invertible) {
            tab.star.resize(tab.n_elements);
            for (int x = 0; x < n_points; ++x)
                for (int g = 0; g < ng; ++g)
                    tab.star[id_of(x, g)] = id_of(action[x][g], monoid.star[g]);
        }
    }
    return tab;
}

SemigroupoidTable pair_groupoid(int n_points) {
    std::vector<std::pair<int, int>> pairs;
    for (int s = 0; s < n_points; ++s)
        for (int t = 0; t < n_points; ++t) pairs.emplace_back(s, t);
    return from_relation(n_points, pairs);
}

SemigroupoidTable cyclic_group(int n) {
    SemigroupoidTable t;
    t.n_objects = 1;
    t.n_elements = n;
    t.src.assign(n, 0);
    t.tgt.assign(n, 0);
    t.init_mul();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.set_product(i, j, (i + j) % n);
    t.star.resize(n);
    for (int i = 0; i < n; ++i) t.star[i] = (n - i) % n;
    t.units = {0};
    return t;
}

}  // namespace stardil
