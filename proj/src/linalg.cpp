#include "ksc/linalg.hpp"

#include "ksc/errors.hpp"

namespace ksc {

bool EchelonBasis::try_add(Vector v)
{
    if (v.size() != dim_) throw InvalidArgument("vector dimension mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto p = pivots_[r];
        if (v[p] == 0) continue;
        Rational factor = v[p] / rows_[r][p];
        for (std::size_t k = p; k < dim_; ++k) v[k] -= factor * rows_[r][k];
    }
    std::size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;
    // Rows stay sorted by pivot, so the reduction above is a single sweep.
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    return true;
}

namespace {

// Reduces [a | b] in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t sel = row;
        while (sel < a.size() && a[sel][c] == 0) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[row], a[sel]);
        Rational inv = 1 / a[row][c];
        for (auto& x : a[row]) x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (std::size_t k = 0; k < a[r].size(); ++k) a[r][k] -= f * a[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(Matrix a)
{
    if (a.empty()) return 0;
    return rref(a, a.front().size()).size();
}

std::optional<Vector> solve_full_column_rank(Matrix a, Vector b)
{
    if (a.size() != b.size()) throw InvalidArgument("row count mismatch");
    const std::size_t n = a.empty() ? 0 : a.front().size();
    for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
    auto pivots = rref(a, n);
    if (pivots.size() != n) throw InvalidArgument("columns are not linearly independent");
    for (std::size_t r = n; r < a.size(); ++r)
        if (a[r][n] != 0) return std::nullopt;
    Vector x(n);
    for (std::size_t r = 0; r < n; ++r) x[pivots[r]] = a[r][n];
    return x;
}

} // namespace ksc
