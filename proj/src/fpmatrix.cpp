#include "superjac/fpmatrix.hpp"

#include "superjac/numeric.hpp"

namespace superjac {

FpMatrix::FpMatrix(long long p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
    if (p < 2 || !is_prime_ll(p)) throw ValidationError("FpMatrix: modulus must be prime");
    if (p > (1LL << 31)) throw ValidationError("FpMatrix: modulus too large");
}

FpMatrix FpMatrix::identity(long long p, int n) {
    FpMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void FpMatrix::set(int i, int j, long long v) {
    v %= p_;
    if (v < 0) v += p_;
    at(i, j) = v;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    if (cols_ != o.rows_ || p_ != o.p_) throw ValidationError("FpMatrix: product mismatch");
    FpMatrix r(p_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            long long v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = (r.at(i, j) + v * o.at(k, j)) % p_;
        }
    return r;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
    if (cols_ != o.cols_ || rows_ != o.rows_ || p_ != o.p_)
        throw ValidationError("FpMatrix: sum mismatch");
    FpMatrix r(p_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = (a_[k] + o.a_[k]) % p_;
    return r;
}

FpMatrix FpMatrix::scaled(long long c) const {
    c %= p_;
    if (c < 0) c += p_;
    FpMatrix r(p_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = (a_[k] * c) % p_;
    return r;
}

FpVec FpMatrix::apply(const FpVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw ValidationError("FpMatrix: apply mismatch");
    FpVec r(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        long long acc = 0;
        for (int j = 0; j < cols_; ++j) acc = (acc + at(i, j) * v[static_cast<size_t>(j)]) % p_;
        r[static_cast<size_t>(i)] = acc;
    }
    return r;
}

FpMatrix FpMatrix::transposed() const {
    FpMatrix r(p_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool FpMatrix::is_zero() const {
    for (long long v : a_)
        if (v != 0) return false;
    return true;
}

bool FpMatrix::is_scalar() const {
    if (rows_ != cols_ || rows_ == 0) return false;
    long long c = at(0, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? c : 0)) return false;
    return true;
}

long long fp_inv(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw ValidationError("fp_inv: zero is not invertible");
    long long r0 = p, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    return ((t0 % p) + p) % p;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(FpMatrix& a) {
    const long long p = a.modulus();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int sel = -1;
        for (int i = row; i < a.rows(); ++i)
            if (a.at(i, col) != 0) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(row, j));
        long long inv = fp_inv(a.at(row, col), p);
        for (int j = 0; j < a.cols(); ++j) a.at(row, j) = (a.at(row, j) * inv) % p;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            long long f = a.at(i, col);
            for (int j = 0; j < a.cols(); ++j) {
                long long v = (a.at(i, j) - f * a.at(row, j)) % p;
                a.at(i, j) = v < 0 ? v + p : v;
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::vector<FpVec> fp_nullspace(const FpMatrix& a) {
    FpMatrix e = a;
    const long long p = a.modulus();
    std::vector<int> pivots = rref(e);
    std::vector<bool> is_pivot(static_cast<size_t>(a.cols()), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<FpVec> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        FpVec v(static_cast<size_t>(a.cols()), 0);
        v[static_cast<size_t>(free)] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            long long c = e.at(static_cast<int>(r), free);
            v[static_cast<size_t>(pivots[r])] = c == 0 ? 0 : p - c;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int fp_rank(const FpMatrix& a) {
    FpMatrix e = a;
    return static_cast<int>(rref(e).size());
}

void EchelonBasis::reduce(FpVec& v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        long long c = v[static_cast<size_t>(pivots_[k])];
        if (c == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            long long x = (v[static_cast<size_t>(j)] - c * rows_[k][static_cast<size_t>(j)]) % p_;
            v[static_cast<size_t>(j)] = x < 0 ? x + p_ : x;
        }
    }
}

bool EchelonBasis::add(FpVec v) {
    if (static_cast<int>(v.size()) != dim_) throw ValidationError("EchelonBasis: length mismatch");
    for (auto& x : v) { x %= p_; if (x < 0) x += p_; }
    reduce(v);
    int piv = -1;
    for (int j = 0; j < dim_; ++j)
        if (v[static_cast<size_t>(j)] != 0) { piv = j; break; }
    if (piv < 0) return false;
    long long inv = fp_inv(v[static_cast<size_t>(piv)], p_);
    for (auto& x : v) x = (x * inv) % p_;
    // clear the new pivot column in the existing rows
    for (size_t k = 0; k < rows_.size(); ++k) {
        long long c = rows_[k][static_cast<size_t>(piv)];
        if (c == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            long long x = (rows_[k][static_cast<size_t>(j)] - c * v[static_cast<size_t>(j)]) % p_;
            rows_[k][static_cast<size_t>(j)] = x < 0 ? x + p_ : x;
        }
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), piv);
    return true;
}

bool EchelonBasis::contains(FpVec v) const {
    for (auto& x : v) { x %= p_; if (x < 0) x += p_; }
    reduce(v);
    for (long long x : v)
        if (x != 0) return false;
    return true;
}

FpVec EchelonBasis::coordinates(const FpVec& v) const {
    FpVec w = v;
    for (auto& x : w) { x %= p_; if (x < 0) x += p_; }
    FpVec coords(rows_.size());
    for (size_t k = 0; k < rows_.size(); ++k) coords[k] = w[static_cast<size_t>(pivots_[k])];
    // verify reconstruction
    FpVec rec(static_cast<size_t>(dim_), 0);
    for (size_t k = 0; k < rows_.size(); ++k)
        for (int j = 0; j < dim_; ++j)
            rec[static_cast<size_t>(j)] =
                (rec[static_cast<size_t>(j)] + coords[k] * rows_[k][static_cast<size_t>(j)]) % p_;
    if (rec != w) throw InternalError("EchelonBasis: vector outside span");
    return coords;
}

} // namespace superjac
