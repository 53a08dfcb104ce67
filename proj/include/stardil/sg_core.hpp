#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stardil/errors.hpp"

namespace stardil {

// Finite *-semigroupoid with optional unit bundle, stored as dense tables.
//
// Elements and objects are dense integer ids; the insertion order is the
// canonical ordering that every downstream matrix block layout derives from.
struct SemigroupoidTable {
    int n_objects = 0;
    int n_elements = 0;
    std::vector<int> src;   // d: element -> object
    std::vector<int> tgt;   // c: element -> object
    // Flat n_elements x n_elements partial composition table, -1 = undefined.
    std::vector<int> mul;
    std::vector<int> star;   // empty if the involution is absent
    std::vector<int> units;  // per object, empty if units are absent
    // True when the table is a length truncation of an infinite object:
    // composable pairs whose product overflowed the bound are stored as
    // undefined and this is not an axiom violation.
    bool truncated = false;

    bool has_star() const { return !star.empty(); }
    bool has_units() const { return !units.empty(); }
    int product(int a, int b) const { return mul[static_cast<size_t>(a) * n_elements + b]; }
    void set_product(int a, int b, int ab) { mul[static_cast<size_t>(a) * n_elements + b] = ab; }
    void init_mul() { mul.assign(static_cast<size_t>(n_elements) * n_elements, -1); }
};

struct Violation {
    std::string axiom;         // e.g. "SG3", "SG4", "U2", "I2", "structural"
    std::vector<int> witness;  // element/object ids involved
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks index consistency, SG1-SG4, U1-U3 and I1-I3 (where present).
// For truncated tables, a composable pair with an undefined product is
// accepted; axioms are only enforced where all involved products exist.
ValidationReport validate(const SemigroupoidTable& t);

struct Fibers {
    std::vector<int> target_fiber;               // Gamma^s: elements with c = s
    std::vector<int> source_fiber;               // Gamma_s: elements with d = s
    std::map<int, std::vector<int>> by_source;   // t -> Gamma_s^t (d = s, c = t)
};

Fibers fibers(const SemigroupoidTable& t, int s);

struct ClassificationFlags {
    bool has_unit = false;
    bool has_star = false;
    bool transitive = false;           // (d, c) surjective onto S x S
    bool principal = false;            // (d, c) injective
    bool inverse_semigroupoid = false; // unique generalized inverse per element
    bool groupoid = false;             // a a* = unit at c(a) and a* a = unit at d(a)
    bool left_cancellative = false;    // g b = g b' implies b = b' on target fibers
};

ClassificationFlags classify(const SemigroupoidTable& t);

// Relation semigroupoid of a binary relation R on n points:
// elements are the pairs (s, t) in R with d = t, c = s, and
// (s,t).(t,v) = (s,v).  Units attach iff R is reflexive, the involution
// iff R is symmetric.  Throws NotTransitiveError with a witness otherwise.
SemigroupoidTable from_relation(int n_points, const std::vector<std::pair<int, int>>& pairs);

// Transformation semigroupoid of a right action of a one-object semigroup
// (given by its table) on points {0..n_points-1}: elements are pairs (x, g)
// with d(x,g) = x.g, c(x,g) = x and (x,g)(x.g,h) = (x,gh).
// `action[x][g]` is x.g.  Throws ActionError on an action-axiom failure.
SemigroupoidTable transformation_semigroupoid(const SemigroupoidTable& monoid,
                                              const std::vector<std::vector<int>>& action);

// Convenience constructors used widely in tests and the CLI.
SemigroupoidTable pair_groupoid(int n_points);
SemigroupoidTable cyclic_group(int n);

}  // namespace stardil
