#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "brokensym/ints.hpp"

namespace bsym {

// Dense integer matrix with optional row/column labels (basis elements).
// Arbitrary-precision entries; all operations exact.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<Int>> a;  // a[i][j]
    std::vector<std::string> row_labels;  // optional, empty or size == rows
    std::vector<std::string> col_labels;  // optional, empty or size == cols

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r, std::vector<Int>(c, Int(0))) {}

    static IntMatrix identity(std::size_t n);

    Int& at(std::size_t i, std::size_t j) { return a[i][j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i][j]; }

    bool is_zero() const;
    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<Int> apply(const std::vector<Int>& v) const;  // M * v
    bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    IntMatrix columns(const std::vector<std::size_t>& idx) const;
    void append_column(const std::vector<Int>& col);
    std::vector<Int> column(std::size_t j) const;

    std::string to_string() const;  // debug aid
};

// U * M * V = S with S diagonal, d_1 | d_2 | ... and U, V unimodular.
struct SmithResult {
    std::size_t rank = 0;
    std::vector<Int> diag;  // the nonzero invariant factors, ascending divisibility
    std::optional<IntMatrix> U, U_inv, V;
    IntMatrix S;
};

SmithResult smith_normal_form(IntMatrix m, bool want_u = true, bool want_u_inv = false,
                              bool want_v = true);

// Column echelon form H = M * C with C unimodular. Pivot rows are strictly
// increasing across pivot columns; columns past `rank` are zero in H.
struct ColumnEchelon {
    IntMatrix H;
    std::optional<IntMatrix> C;
    std::vector<std::size_t> pivot_rows;  // per pivot column
    std::size_t rank = 0;
};

ColumnEchelon column_echelon(IntMatrix m, bool want_c);

// Lattice basis of { x : M x = 0 }, one kernel vector per column.
IntMatrix kernel_basis(const IntMatrix& m);

// Exact solver for M x = b over the integers, reusing one factorization.
class LinearSolver {
public:
    LinearSolver() = default;
    explicit LinearSolver(IntMatrix m);
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;
    std::size_t input_dim() const { return n_cols_; }
    std::size_t output_dim() const { return n_rows_; }

private:
    std::size_t n_rows_ = 0, n_cols_ = 0;
    ColumnEchelon ech_;
};

// Reduce a lattice generating set (columns) to a basis (columns).
IntMatrix lattice_column_basis(const IntMatrix& generators);

}  // namespace bsym
