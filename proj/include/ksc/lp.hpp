#pragma once

#include "ksc/linalg.hpp"

#include <optional>

namespace ksc {

/// minimize c^T x subject to A x = b, x >= 0.
struct LinearProgram {
    Matrix a;
    Vector b;
    Vector c;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    Vector x;            ///< optimal point when status is optimal
    Rational objective;  ///< optimal value when status is optimal
    /// When infeasible: y with y^T A <= 0 componentwise and y^T b > 0.
    std::optional<Vector> farkas;
};

/// Exact two-phase tableau simplex with Bland's rule.
LpResult solve_lp(const LinearProgram& lp);

/// Checks y^T A <= 0 and y^T b > 0 independently of the solver.
bool is_farkas_certificate(const Matrix& a, const Vector& b, const Vector& y);

} // namespace ksc
