#pragma once

#include <stdexcept>
#include <string>

namespace stardil {

// Base class for all library errors so callers can catch everything at once.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed dimensions / incompatible operand shapes.
struct ShapeError : Error {
    explicit ShapeError(const std::string& what) : Error(what) {}
};

// A matrix required to be positive semidefinite has a genuinely negative
// eigenvalue (beyond tolerance).
struct NotPsdError : Error {
    double lambda_min;
    int fiber;  // object id of the offending fiber, or -1 if not applicable
    NotPsdError(double lm, int fib, const std::string& what)
        : Error(what), lambda_min(lm), fiber(fib) {}
};

// A product beta* . alpha needed for a Gram block is undefined in the table
// (typically lost to a length truncation).
struct MissingProductError : Error {
    int lhs, rhs;  // element ids of the undefined product lhs . rhs
    int fiber;     // fiber being assembled, or -1
    MissingProductError(int l, int r, int fib, const std::string& what)
        : Error(what), lhs(l), rhs(r), fiber(fib) {}
};

// The least-squares system defining a representation matrix has a residual
// far above the numerical budget; the numerical rank decision is suspect.
struct IllConditionedError : Error {
    double residual;
    IllConditionedError(double res, const std::string& what)
        : Error(what), residual(res) {}
};

// A binary relation fails transitivity; carries a witness pair of pairs.
struct NotTransitiveError : Error {
    int s, t, v;  // (s,t),(t,v) composable but (s,v) missing
    NotTransitiveError(int s_, int t_, int v_, const std::string& what)
        : Error(what), s(s_), t(t_), v(v_) {}
};

struct NotInverseSemigroupoidError : Error {
    explicit NotInverseSemigroupoidError(const std::string& what) : Error(what) {}
};

struct NotUnitalError : Error {
    explicit NotUnitalError(const std::string& what) : Error(what) {}
};

// Two dilations disagree on a factor dimension; at least one is non-minimal.
struct DimensionMismatchError : Error {
    int object;
    DimensionMismatchError(int obj, const std::string& what)
        : Error(what), object(obj) {}
};

// Input operator has norm >= 1 where a strict contraction is required.
struct NotStrictContractionError : Error {
    double norm;
    NotStrictContractionError(double n, const std::string& what)
        : Error(what), norm(n) {}
};

// A family failed its axioms; the inducing step refuses to proceed.
struct ValidationFailedError : Error {
    explicit ValidationFailedError(const std::string& what) : Error(what) {}
};

// Action axiom failure in the transformation-semigroupoid constructor.
struct ActionError : Error {
    int x, g, h;  // witness: (x.g).h != x.(g h)
    ActionError(int x_, int g_, int h_, const std::string& what)
        : Error(what), x(x_), g(g_), h(h_) {}
};

}  // namespace stardil
