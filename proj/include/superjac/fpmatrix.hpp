#pragma once

#include <cstdint>
#include <vector>

#include "superjac/errors.hpp"

namespace superjac {

using FpVec = std::vector<long long>;

/// Dense matrix over F_p, entries reduced to [0, p). p must be prime and
/// small enough that p*p fits in a long long.
class FpMatrix {
public:
    FpMatrix() : p_(2), rows_(0), cols_(0) {}
    FpMatrix(long long p, int rows, int cols);

    static FpMatrix identity(long long p, int n);

    long long modulus() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    long long at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, long long v);

    FpMatrix operator*(const FpMatrix& o) const;
    FpMatrix operator+(const FpMatrix& o) const;
    FpMatrix scaled(long long c) const;
    bool operator==(const FpMatrix& o) const = default;

    FpVec apply(const FpVec& v) const;  // matrix * column vector
    FpMatrix transposed() const;
    bool is_zero() const;
    bool is_scalar() const;  // c * identity for some c

private:
    long long p_;
    int rows_, cols_;
    std::vector<long long> a_;
};

long long fp_inv(long long a, long long p);

/// Basis of {x : A x = 0}; vectors of length A.cols().
std::vector<FpVec> fp_nullspace(const FpMatrix& a);

int fp_rank(const FpMatrix& a);

/// Incrementally built reduced row echelon basis of a subspace of F_p^dim.
class EchelonBasis {
public:
    EchelonBasis(long long p, int dim) : p_(p), dim_(dim) {}

    // Returns true when v was independent of the current span.
    bool add(FpVec v);
    bool contains(FpVec v) const;
    int size() const { return static_cast<int>(rows_.size()); }
    int dim() const { return dim_; }
    const std::vector<FpVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Coordinates of v in this basis; throws InternalError if v is outside
    // the span.
    FpVec coordinates(const FpVec& v) const;

private:
    long long p_;
    int dim_;
    std::vector<FpVec> rows_;   // reduced: unit pivot, zeros above and below
    std::vector<int> pivots_;   // ascending
    void reduce(FpVec& v) const;
};

} // namespace superjac
