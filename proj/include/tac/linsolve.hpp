#pragma once

#include <optional>
#include <vector>

#include "tac/freemap.hpp"

namespace tac {

// Linear systems in unknown matrices over the ring.  An equation is
//
//   sum_k  A_k * X_{u_k} * B_k  =  rhs
//
// where each term picks one unknown by index and optionally multiplies it
// by fixed matrices on the left and the right (a missing factor is the
// identity).  The system is flattened entrywise to a single column solve
// E * xi = c over the ring, so solvability is decided exactly.

struct MatrixUnknown {
    std::size_t rows;
    std::size_t cols;
};

struct MatrixTerm {
    std::size_t unknown;
    std::optional<FreeMap> left;
    std::optional<FreeMap> right;
    bool negated = false;
};

struct MatrixEquation {
    std::vector<MatrixTerm> terms;
    FreeMap rhs;
};

// One solution, as one matrix per unknown, or nullopt when the system has
// none.
std::optional<std::vector<FreeMap>> solve_matrix_system(
    const QuotientRing& ring, const std::vector<MatrixUnknown>& unknowns,
    const std::vector<MatrixEquation>& equations);

// Generating set for the solutions of the homogeneous system (all right
// hand sides ignored).  Each element of the result assigns a matrix to
// every unknown.
std::vector<std::vector<FreeMap>> matrix_system_kernel(
    const QuotientRing& ring, const std::vector<MatrixUnknown>& unknowns,
    const std::vector<MatrixEquation>& equations);

}  // namespace tac
