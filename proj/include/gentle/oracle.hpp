#pragma once

#include <map>
#include <optional>

#include "gentle/homotopy.hpp"
#include "gentle/modp.hpp"

/* The linear-algebra ground truth.  Everything here works with explicit
 * matrices over a prime field: walk representations of string and band
 * modules, intertwiner spaces, matrix complexes of graded homotopy strings,
 * and Ext^1 dimensions computed from a projective resolution that is built
 * by plain kernel/cover linear algebra, independent of the combinatorial
 * resolution module.
 */

namespace gentle {

struct Representation {
    int64_t p = 101;
    std::vector<int> dims;        // per vertex
    std::vector<Matrix> action;   // per arrow: dims[target] x dims[source]

    int total_dim() const;
    // Action matrix of a path (product of arrow actions, applied first-to-last).
    Matrix path_action(const GentlePresentation& pres, const Path& q) const;
};

// The standard walk representation of M(w) (band = false) or B(w, lambda).
Representation module_rep(const GentlePresentation& pres, const Walk& w, bool band, int64_t p,
                          int64_t lambda = 1);

// P(x) with basis the nonzero paths q with s(q) = x, graded by e(q).
Representation projective_rep(const GentlePresentation& pres, VertexId x, int64_t p);

// dim of the space of intertwiners N(a) f_{s(a)} = f_{e(a)} M(a).
int hom_dim(const GentlePresentation& pres, const Representation& M, const Representation& N);

// dim_{F_p} Ext^1(M, N), via a two-step projective resolution of M computed
// by cover/kernel linear algebra.
int ext1_dim(const GentlePresentation& pres, const Representation& M, const Representation& N);

// Matrix complex of a (possibly truncated) graded homotopy string or band.
struct ComplexCohomology {
    bool d_squared_zero = true;
    std::map<int, std::vector<int>> h_dims;     // degree -> per-vertex dims of H^d
    std::map<int, std::vector<int>> term_dims;  // degree -> per-vertex dims of Q^d
};

ComplexCohomology complex_cohomology(const GentlePresentation& pres, const GradedHomotopyString& g,
                                     int64_t p, int64_t lambda = 1);

}  // namespace gentle
