#include "brokensym/intmatrix.hpp"

#include <algorithm>
#include <sstream>

#include "brokensym/error.hpp"

namespace bsym {

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.a[i][i] = 1;
    return m;
}

bool IntMatrix::is_zero() const
{
    for (const auto& row : a)
        for (const auto& x : row)
            if (x != 0)
                return false;
    return true;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            t.a[j][i] = a[i][j];
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const
{
    if (cols != o.rows)
        throw ComputationError("matrix product dimension mismatch");
    IntMatrix p(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const Int& x = a[i][k];
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < o.cols; ++j)
                if (o.a[k][j] != 0)
                    p.a[i][j] += x * o.a[k][j];
        }
    return p;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const
{
    if (v.size() != cols)
        throw ComputationError("matrix apply dimension mismatch");
    std::vector<Int> r(rows, Int(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (a[i][j] != 0 && v[j] != 0)
                r[i] += a[i][j] * v[j];
    return r;
}

IntMatrix IntMatrix::columns(const std::vector<std::size_t>& idx) const
{
    IntMatrix m(rows, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i)
            m.a[i][j] = a[i][idx[j]];
    return m;
}

void IntMatrix::append_column(const std::vector<Int>& col)
{
    if (rows == 0 && cols == 0)
        a.assign(col.size(), {});
    if (col.size() != a.size())
        throw ComputationError("append_column dimension mismatch");
    rows = a.size();
    for (std::size_t i = 0; i < rows; ++i)
        a[i].push_back(col[i]);
    ++cols;
}

std::vector<Int> IntMatrix::column(std::size_t j) const
{
    std::vector<Int> c(rows);
    for (std::size_t i = 0; i < rows; ++i)
        c[i] = a[i][j];
    return c;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            os << a[i][j] << (j + 1 == cols ? "" : " ");
        os << "\n";
    }
    return os.str();
}

namespace {

struct Ops {
    IntMatrix* U = nullptr;      // row ops applied
    IntMatrix* U_inv = nullptr;  // inverse accumulated by column ops
    IntMatrix* V = nullptr;      // col ops applied

    void row_swap(IntMatrix& m, std::size_t i, std::size_t j)
    {
        std::swap(m.a[i], m.a[j]);
        if (U)
            std::swap(U->a[i], U->a[j]);
        if (U_inv)
            for (std::size_t k = 0; k < U_inv->rows; ++k)
                std::swap(U_inv->a[k][i], U_inv->a[k][j]);
    }
    // row_i -= q * row_j
    void row_sub(IntMatrix& m, std::size_t i, std::size_t j, const Int& q)
    {
        if (q == 0)
            return;
        for (std::size_t k = 0; k < m.cols; ++k)
            if (m.a[j][k] != 0)
                m.a[i][k] -= q * m.a[j][k];
        if (U)
            for (std::size_t k = 0; k < U->cols; ++k)
                if (U->a[j][k] != 0)
                    U->a[i][k] -= q * U->a[j][k];
        if (U_inv)  // inverse op: col_j += q * col_i
            for (std::size_t k = 0; k < U_inv->rows; ++k)
                if (U_inv->a[k][i] != 0)
                    U_inv->a[k][j] += q * U_inv->a[k][i];
    }
    void row_negate(IntMatrix& m, std::size_t i)
    {
        for (auto& x : m.a[i])
            x = -x;
        if (U)
            for (auto& x : U->a[i])
                x = -x;
        if (U_inv)
            for (std::size_t k = 0; k < U_inv->rows; ++k)
                U_inv->a[k][i] = -U_inv->a[k][i];
    }
    void col_swap(IntMatrix& m, std::size_t i, std::size_t j)
    {
        for (std::size_t k = 0; k < m.rows; ++k)
            std::swap(m.a[k][i], m.a[k][j]);
        if (V)
            for (std::size_t k = 0; k < V->rows; ++k)
                std::swap(V->a[k][i], V->a[k][j]);
    }
    // col_i -= q * col_j
    void col_sub(IntMatrix& m, std::size_t i, std::size_t j, const Int& q)
    {
        if (q == 0)
            return;
        for (std::size_t k = 0; k < m.rows; ++k)
            if (m.a[k][j] != 0)
                m.a[k][i] -= q * m.a[k][j];
        if (V)
            for (std::size_t k = 0; k < V->rows; ++k)
                if (V->a[k][j] != 0)
                    V->a[k][i] -= q * V->a[k][j];
    }
    // col_i += col_j
    void col_add(IntMatrix& m, std::size_t i, std::size_t j)
    {
        for (std::size_t k = 0; k < m.rows; ++k)
            if (m.a[k][j] != 0)
                m.a[k][i] += m.a[k][j];
        if (V)
            for (std::size_t k = 0; k < V->rows; ++k)
                if (V->a[k][j] != 0)
                    V->a[k][i] += V->a[k][j];
    }
    void col_negate(IntMatrix& m, std::size_t i)
    {
        for (std::size_t k = 0; k < m.rows; ++k)
            m.a[k][i] = -m.a[k][i];
        if (V)
            for (std::size_t k = 0; k < V->rows; ++k)
                V->a[k][i] = -V->a[k][i];
    }
};

}  // namespace

SmithResult smith_normal_form(IntMatrix m, bool want_u, bool want_u_inv, bool want_v)
{
    SmithResult res;
    const std::size_t R = m.rows, C = m.cols;
    m.row_labels.clear();
    m.col_labels.clear();
    IntMatrix U, U_inv, V;
    Ops ops;
    if (want_u) {
        U = IntMatrix::identity(R);
        ops.U = &U;
    }
    if (want_u_inv) {
        U_inv = IntMatrix::identity(R);
        ops.U_inv = &U_inv;
    }
    if (want_v) {
        V = IntMatrix::identity(C);
        ops.V = &V;
    }

    std::size_t t = 0;
    const std::size_t T = std::min(R, C);
    while (t < T) {
        // Pivot: smallest nonzero absolute value in the trailing submatrix.
        std::size_t pi = R, pj = C;
        Int best;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j) {
                if (m.a[i][j] == 0)
                    continue;
                Int v = abs_int(m.a[i][j]);
                if (pi == R || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                    if (best == 1)
                        goto found;
                }
            }
        if (pi == R)
            break;  // submatrix is zero
    found:
        if (pi != t)
            ops.row_swap(m, t, pi);
        if (pj != t)
            ops.col_swap(m, t, pj);

        for (;;) {
            bool clean = true;
            // clear column t
            for (std::size_t i = t + 1; i < R; ++i) {
                if (m.a[i][t] == 0)
                    continue;
                Int q = rounded_div(m.a[i][t], m.a[t][t]);
                ops.row_sub(m, i, t, q);
                if (m.a[i][t] != 0) {
                    ops.row_swap(m, t, i);  // strictly smaller pivot
                    clean = false;
                }
            }
            // clear row t
            for (std::size_t j = t + 1; j < C; ++j) {
                if (m.a[t][j] == 0)
                    continue;
                Int q = rounded_div(m.a[t][j], m.a[t][t]);
                ops.col_sub(m, j, t, q);
                if (m.a[t][j] != 0) {
                    ops.col_swap(m, t, j);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            bool col_clean = true;
            for (std::size_t i = t + 1; i < R; ++i)
                if (m.a[i][t] != 0)
                    col_clean = false;
            if (!col_clean)
                continue;
            // divisibility sweep: pivot must divide the whole submatrix
            bool divides = true;
            for (std::size_t i = t + 1; i < R && divides; ++i)
                for (std::size_t j = t + 1; j < C && divides; ++j)
                    if (m.a[i][j] % m.a[t][t] != 0) {
                        ops.row_sub(m, t, i, Int(-1));  // row_t += row_i
                        divides = false;
                    }
            if (divides)
                break;
        }
        if (m.a[t][t] < 0)
            ops.row_negate(m, t);
        ++t;
    }

    res.rank = t;
    res.diag.reserve(t);
    for (std::size_t i = 0; i < t; ++i)
        res.diag.push_back(m.a[i][i]);
    res.S = std::move(m);
    if (want_u)
        res.U = std::move(U);
    if (want_u_inv)
        res.U_inv = std::move(U_inv);
    if (want_v)
        res.V = std::move(V);
    return res;
}

ColumnEchelon column_echelon(IntMatrix m, bool want_c)
{
    ColumnEchelon res;
    const std::size_t R = m.rows, C = m.cols;
    m.row_labels.clear();
    m.col_labels.clear();
    IntMatrix Cm;
    Ops ops;
    if (want_c) {
        Cm = IntMatrix::identity(C);
        ops.V = &Cm;
    }

    std::size_t c0 = 0;
    for (std::size_t r = 0; r < R && c0 < C; ++r) {
        for (;;) {
            std::size_t pj = C;
            Int best;
            for (std::size_t j = c0; j < C; ++j) {
                if (m.a[r][j] == 0)
                    continue;
                Int v = abs_int(m.a[r][j]);
                if (pj == C || v < best) {
                    best = v;
                    pj = j;
                }
            }
            if (pj == C)
                break;  // row r has no entry right of c0
            if (pj != c0)
                ops.col_swap(m, c0, pj);
            bool clean = true;
            for (std::size_t j = c0 + 1; j < C; ++j) {
                if (m.a[r][j] == 0)
                    continue;
                Int q = rounded_div(m.a[r][j], m.a[r][c0]);
                ops.col_sub(m, j, c0, q);
                if (m.a[r][j] != 0)
                    clean = false;
            }
            if (clean) {
                if (m.a[r][c0] < 0)
                    ops.col_negate(m, c0);
                res.pivot_rows.push_back(r);
                ++c0;
                break;
            }
        }
    }
    res.rank = c0;
    res.H = std::move(m);
    if (want_c)
        res.C = std::move(Cm);
    return res;
}

IntMatrix kernel_basis(const IntMatrix& m)
{
    ColumnEchelon e = column_echelon(m, true);
    std::vector<std::size_t> idx;
    for (std::size_t j = e.rank; j < m.cols; ++j)
        idx.push_back(j);
    return e.C->columns(idx);
}

LinearSolver::LinearSolver(IntMatrix m) : n_rows_(m.rows), n_cols_(m.cols)
{
    ech_ = column_echelon(std::move(m), true);
}

std::optional<std::vector<Int>> LinearSolver::solve(const std::vector<Int>& b) const
{
    if (b.size() != n_rows_)
        throw ComputationError("solve: rhs dimension mismatch");
    std::vector<Int> work = b;
    std::vector<Int> y(n_cols_, Int(0));
    // Pivot rows strictly increase; columns right of a pivot column are zero
    // at that pivot row, so plain forward substitution is exact.
    for (std::size_t c = 0; c < ech_.rank; ++c) {
        std::size_t r = ech_.pivot_rows[c];
        const Int& p = ech_.H.a[r][c];
        if (work[r] % p != 0)
            return std::nullopt;
        Int q = work[r] / p;
        if (q != 0) {
            for (std::size_t i = r; i < n_rows_; ++i)
                if (ech_.H.a[i][c] != 0)
                    work[i] -= q * ech_.H.a[i][c];
        }
        y[c] = q;
    }
    for (const auto& x : work)
        if (x != 0)
            return std::nullopt;
    return ech_.C->apply(y);
}

IntMatrix lattice_column_basis(const IntMatrix& generators)
{
    ColumnEchelon e = column_echelon(generators, false);
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < e.rank; ++j)
        idx.push_back(j);
    return e.H.columns(idx);
}

}  // namespace bsym
