#pragma once

#include <vector>

#include "superjac/numeric.hpp"

namespace superjac {

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    IntMatrix(int rows, int cols, std::vector<BigInt> entries);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transposed() const;
    bool is_identity() const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    // row(i) += c * row(j), col(i) += c * col(j)
    void add_row(int i, int j, const BigInt& c);
    void add_col(int i, int j, const BigInt& c);
    void negate_row(int i);

    // Fraction-free (Bareiss) determinant; requires a square matrix.
    BigInt determinant() const;

private:
    int rows_, cols_;
    std::vector<BigInt> a_;
};

/// Invariant-factor description of a finitely generated abelian group:
/// factors d_1 | d_2 | ... | d_k, each > 1, plus a free rank.
struct AbelianGroupStructure {
    std::vector<BigInt> invariant_factors;
    int free_rank = 0;

    bool operator==(const AbelianGroupStructure&) const = default;
    bool is_trivial() const { return invariant_factors.empty() && free_rank == 0; }
    // Count of invariant factors divisible by p.
    int p_rank(const BigInt& p) const;
};

/// Smith normal form U*M*V = D with U, V unimodular and D diagonal with
/// d_1 | d_2 | ... The cokernel field describes Z^rows / im(M).
struct SmithResult {
    IntMatrix left;   // U, rows x rows
    IntMatrix right;  // V, cols x cols
    std::vector<BigInt> diagonal;  // min(rows, cols) entries, >= 0, chained
    int rank = 0;
    AbelianGroupStructure cokernel;
};

SmithResult smith_normal_form(const IntMatrix& m);

/// Membership of v (length = generators.cols()) in the lattice spanned by the
/// rows of `generators`, decided through a precomputed Smith form.
class RowLattice {
public:
    explicit RowLattice(const IntMatrix& generators);
    bool contains(const std::vector<BigInt>& v) const;
    int rank() const { return snf_.rank; }

private:
    int cols_;
    SmithResult snf_;
};

} // namespace superjac
