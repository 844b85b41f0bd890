#include "polardrg/matrix.hpp"

#include "polardrg/error.hpp"

#include <algorithm>

namespace polardrg {

MatrixGF MatrixGF::identity(int n)
{
    MatrixGF m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

MatrixGF dagger(const MatrixGF& m, const Field& f)
{
    MatrixGF r(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            r(j, i) = f.conj(m(i, j));
    return r;
}

MatrixGF multiply(const MatrixGF& a, const MatrixGF& b, const Field& f)
{
    if (a.cols != b.rows)
        throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    MatrixGF r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Elem x = a(i, k);
            if (x == 0)
                continue;
            for (int j = 0; j < b.cols; ++j)
                r(i, j) = f.add(r(i, j), f.mul(x, b(k, j)));
        }
    return r;
}

MatrixGF stack(const MatrixGF& top, const MatrixGF& bottom)
{
    if (top.cols != bottom.cols)
        throw Error(ErrorCode::DimensionMismatch, "stacking matrices of different widths");
    MatrixGF r;
    r.rows = top.rows + bottom.rows;
    r.cols = top.cols;
    r.entries.reserve(top.entries.size() + bottom.entries.size());
    r.entries.insert(r.entries.end(), top.entries.begin(), top.entries.end());
    r.entries.insert(r.entries.end(), bottom.entries.begin(), bottom.entries.end());
    return r;
}

int rref(MatrixGF& m, const Field& f)
{
    int pivot_row = 0;
    for (int col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        int sel = -1;
        for (int r = pivot_row; r < m.rows; ++r)
            if (m(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel < 0)
            continue;
        if (sel != pivot_row)
            std::swap_ranges(m.row(sel).begin(), m.row(sel).end(), m.row(pivot_row).begin());

        const Elem scale = f.inv(m(pivot_row, col));
        for (int c = col; c < m.cols; ++c)
            m(pivot_row, c) = f.mul(m(pivot_row, c), scale);

        for (int r = 0; r < m.rows; ++r) {
            if (r == pivot_row)
                continue;
            const Elem factor = m(r, col);
            if (factor == 0)
                continue;
            for (int c = col; c < m.cols; ++c)
                m(r, c) = f.sub(m(r, c), f.mul(factor, m(pivot_row, c)));
        }
        ++pivot_row;
    }
    m.rows = pivot_row;
    m.entries.resize(static_cast<std::size_t>(pivot_row) * m.cols);
    return pivot_row;
}

int rank(MatrixGF m, const Field& f)
{
    return rref(m, f);
}

MatrixGF null_space(const MatrixGF& a, const Field& f)
{
    MatrixGF r = a;
    const int rk = rref(r, f);
    std::vector<int> pivot_col(rk, -1);
    std::vector<bool> is_pivot(a.cols, false);
    for (int i = 0; i < rk; ++i)
        for (int c = 0; c < r.cols; ++c)
            if (r(i, c) != 0) {
                pivot_col[i] = c;
                is_pivot[c] = true;
                break;
            }

    MatrixGF basis(a.cols - rk, a.cols);
    int out = 0;
    for (int free = 0; free < a.cols; ++free) {
        if (is_pivot[free])
            continue;
        basis(out, free) = 1;
        for (int i = 0; i < rk; ++i)
            basis(out, pivot_col[i]) = f.neg(r(i, free));
        ++out;
    }
    rref(basis, f);
    return basis;
}

} // namespace polardrg
