#pragma once

#include "ksc/rational.hpp"

#include <optional>
#include <vector>

namespace ksc {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>; ///< row-major

/// Row-reduced basis of a growing set of vectors; used to test linear
/// independence of columns one at a time.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

    /// Adds v if it is independent of the stored vectors. Returns whether it was added.
    bool try_add(Vector v);
    std::size_t rank() const { return rows_.size(); }

private:
    std::size_t dim_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank(Matrix a);

/// Solves A x = b for A with linearly independent columns.
/// Returns nullopt if the system is inconsistent.
std::optional<Vector> solve_full_column_rank(Matrix a, Vector b);

} // namespace ksc
