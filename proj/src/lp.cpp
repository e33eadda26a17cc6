#include "ksc/lp.hpp"

#include "ksc/errors.hpp"

namespace ksc {

namespace {

class Tableau {
public:
    Tableau(const LinearProgram& lp) : m_(lp.a.size()), n_(lp.c.size())
    {
        if (lp.b.size() != m_) throw InvalidArgument("LP: b has wrong length");
        for (const auto& row : lp.a)
            if (row.size() != n_) throw InvalidArgument("LP: ragged constraint matrix");
        cols_ = n_ + m_;
        t_.assign(m_, Vector(cols_ + 1, Rational(0)));
        sign_.assign(m_, 1);
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            if (lp.b[i] < 0) sign_[i] = -1;
            for (std::size_t j = 0; j < n_; ++j) t_[i][j] = sign_[i] * lp.a[i][j];
            t_[i][n_ + i] = 1;
            t_[i][cols_] = sign_[i] * lp.b[i];
            basis_[i] = n_ + i;
        }
        allowed_ = cols_;
    }

    // Phase 1: minimise the sum of artificials.
    bool phase_one(Vector& farkas_out)
    {
        Vector cost(cols_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) cost[n_ + i] = 1;
        price(cost);
        run();
        if (-z_[cols_] > 0) {
            farkas_out.assign(m_, Rational(0));
            for (std::size_t i = 0; i < m_; ++i) farkas_out[i] = sign_[i] * (1 - z_[n_ + i]);
            return false;
        }
        drive_out_artificials();
        allowed_ = n_;
        return true;
    }

    bool phase_two(const Vector& c)
    {
        Vector cost(cols_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) cost[j] = c[j];
        price(cost);
        return run();
    }

    Vector solution() const
    {
        Vector x(n_, Rational(0));
        for (std::size_t i = 0; i < t_.size(); ++i)
            if (basis_[i] < n_) x[basis_[i]] = t_[i][cols_];
        return x;
    }

    Rational objective() const { return -z_[cols_]; }

private:
    void price(const Vector& cost)
    {
        z_.assign(cols_ + 1, Rational(0));
        for (std::size_t j = 0; j < cols_; ++j) z_[j] = cost[j];
        for (std::size_t i = 0; i < t_.size(); ++i) {
            const Rational& cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) z_[j] -= cb * t_[i][j];
        }
    }

    // Returns false when unbounded.
    bool run()
    {
        for (;;) {
            std::size_t enter = allowed_;
            for (std::size_t j = 0; j < allowed_; ++j)
                if (z_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == allowed_) return true;
            std::size_t leave = t_.size();
            Rational best;
            for (std::size_t i = 0; i < t_.size(); ++i) {
                if (t_[i][enter] <= 0) continue;
                Rational ratio = t_[i][cols_] / t_[i][enter];
                if (leave == t_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == t_.size()) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        Rational inv = 1 / t_[r][c];
        for (auto& x : t_[r]) x *= inv;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (i == r || t_[i][c] == 0) continue;
            Rational f = t_[i][c];
            for (std::size_t j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[r][j];
        }
        if (z_[c] != 0) {
            Rational f = z_[c];
            for (std::size_t j = 0; j <= cols_; ++j) z_[j] -= f * t_[r][j];
        }
        basis_[r] = c;
    }

    void drive_out_artificials()
    {
        for (std::size_t i = 0; i < t_.size();) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            std::size_t j = 0;
            while (j < n_ && t_[i][j] == 0) ++j;
            if (j < n_) {
                pivot(i, j);
                ++i;
            } else {
                // Redundant equality.
                t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    std::size_t m_, n_, cols_ = 0, allowed_ = 0;
    std::vector<Vector> t_;
    Vector z_;
    std::vector<int> sign_;
    std::vector<std::size_t> basis_;
};

} // namespace

LpResult solve_lp(const LinearProgram& lp)
{
    Tableau tab(lp);
    LpResult res;
    Vector y;
    if (!tab.phase_one(y)) {
        res.status = LpStatus::infeasible;
        res.farkas = std::move(y);
        return res;
    }
    if (!tab.phase_two(lp.c)) {
        res.status = LpStatus::unbounded;
        return res;
    }
    res.status = LpStatus::optimal;
    res.x = tab.solution();
    res.objective = tab.objective();
    return res;
}

bool is_farkas_certificate(const Matrix& a, const Vector& b, const Vector& y)
{
    if (y.size() != a.size() || b.size() != a.size()) return false;
    const std::size_t n = a.empty() ? 0 : a.front().size();
    for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += y[i] * a[i][j];
        if (s > 0) return false;
    }
    Rational yb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) yb += y[i] * b[i];
    return yb > 0;
}

} // namespace ksc
