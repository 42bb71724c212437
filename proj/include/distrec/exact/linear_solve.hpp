#pragma once

#include <cstddef>
#include <vector>

#include "distrec/errors.hpp"
#include "distrec/exact/bigint.hpp"
#include "distrec/exact/matrix.hpp"

namespace distrec::exact {

enum class SolutionKind { unique, space, inconsistent };

// Solution set of A x = b over Q. For `unique`, `particular` is the solution
// and `basis` is empty; for `space`, every solution is particular plus a
// combination of `basis` (a basis of the null space of A); for
// `inconsistent` both are empty.
struct LinearSolution {
    SolutionKind kind = SolutionKind::inconsistent;
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> basis;
    std::size_t rank = 0;

    std::size_t dimension() const noexcept { return basis.size(); }
};

// Reduced row echelon form in place; returns the pivot column of each pivot row.
inline std::vector<std::size_t> rref(RationalMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        m.swap_rows(row, sel);
        const Rational inv = Rational(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0)
                continue;
            const Rational factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(RationalMatrix m) { return rref(m).size(); }

inline LinearSolution solve_exact(const RationalMatrix& a, const std::vector<Rational>& b)
{
    if (b.size() != a.rows())
        throw DimensionError("right-hand side length does not match row count");
    const std::size_t unknowns = a.cols();

    RationalMatrix aug(a.rows(), unknowns + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < unknowns; ++j)
            aug(i, j) = a(i, j);
        aug(i, unknowns) = b[i];
    }
    const std::vector<std::size_t> pivots = rref(aug);

    LinearSolution out;
    if (!pivots.empty() && pivots.back() == unknowns)
        return out;

    out.rank = pivots.size();
    out.particular.assign(unknowns, Rational(0));
    std::vector<bool> is_pivot(unknowns, false);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        out.particular[pivots[r]] = aug(r, unknowns);
        is_pivot[pivots[r]] = true;
    }
    for (std::size_t free = 0; free < unknowns; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(unknowns, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -aug(r, free);
        out.basis.push_back(std::move(v));
    }
    out.kind = out.basis.empty() ? SolutionKind::unique : SolutionKind::space;
    return out;
}

// True when x solves A x = b exactly.
inline bool satisfies(const RationalMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& x)
{
    if (x.size() != a.cols() || b.size() != a.rows())
        throw DimensionError("shape mismatch in satisfies");
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational sum = 0;
        for (std::size_t j = 0; j < a.cols(); ++j)
            sum += a(i, j) * x[j];
        if (sum != b[i])
            return false;
    }
    return true;
}

} // namespace distrec::exact
