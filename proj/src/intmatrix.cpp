#include "superjac/intmatrix.hpp"

#include <algorithm>

namespace superjac {

IntMatrix::IntMatrix(int rows, int cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != static_cast<size_t>(rows) * cols)
        throw ValidationError("IntMatrix: entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw ValidationError("IntMatrix: dimension mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const BigInt& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row(int i, int j, const BigInt& c) {
    if (c == 0) return;
    for (int k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col(int i, int j, const BigInt& c) {
    if (c == 0) return;
    for (int k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void IntMatrix::negate_row(int i) {
    for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

BigInt IntMatrix::determinant() const {
    if (rows_ != cols_) throw ValidationError("determinant requires a square matrix");
    int n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    IntMatrix m = *this;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { pivot = i; break; }
            if (pivot < 0) return 0;
            m.swap_rows(k, pivot);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : BigInt(-m.at(n - 1, n - 1));
}

int AbelianGroupStructure::p_rank(const BigInt& p) const {
    int c = 0;
    for (const BigInt& d : invariant_factors)
        if (d % p == 0) ++c;
    return c;
}

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Smallest nonzero |entry| in the submatrix starting at (t, t); returns false
// when that submatrix is zero.
bool find_pivot(const IntMatrix& a, int t, int& pi, int& pj) {
    bool found = false;
    BigInt best;
    for (int i = t; i < a.rows(); ++i)
        for (int j = t; j < a.cols(); ++j) {
            const BigInt& v = a.at(i, j);
            if (v == 0) continue;
            BigInt av = abs_big(v);
            if (!found || av < best) { found = true; best = av; pi = i; pj = j; }
        }
    return found;
}

} // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    SmithResult res;
    IntMatrix a = m;
    const int R = a.rows(), C = a.cols();
    IntMatrix u = IntMatrix::identity(R);
    IntMatrix v = IntMatrix::identity(C);
    const int nmin = std::min(R, C);

    // Row op a <- E a pairs with u <- E u; col op a <- a F pairs with v <- v F.
    // The minimal-absolute-value pivot is re-selected on every sweep and
    // quotients are rounded to nearest, which keeps intermediate entries from
    // blowing up.
    auto nearest_quot = [](const BigInt& x, const BigInt& d) {
        // floor remainder has the sign of d; bumping the quotient by one
        // moves it into [-|d|/2, |d|/2] either way
        BigInt q = floor_div(x, d);
        BigInt r = x - q * d;
        if (2 * abs_big(r) > abs_big(d)) q += 1;
        return q;
    };
    for (int t = 0; t < nmin; ++t) {
        while (true) {
            int pi, pj;
            if (!find_pivot(a, t, pi, pj)) { t = nmin; break; }
            a.swap_rows(t, pi); u.swap_rows(t, pi);
            a.swap_cols(t, pj); v.swap_cols(t, pj);
            bool clean = true;
            for (int i = t + 1; i < R; ++i) {
                if (a.at(i, t) == 0) continue;
                BigInt q = nearest_quot(a.at(i, t), a.at(t, t));
                a.add_row(i, t, -q); u.add_row(i, t, -q);
                if (a.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < C; ++j) {
                if (a.at(t, j) == 0) continue;
                BigInt q = nearest_quot(a.at(t, j), a.at(t, t));
                a.add_col(j, t, -q); v.add_col(j, t, -q);
                if (a.at(t, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (t >= nmin) break;
        if (a.at(t, t) < 0) { a.negate_row(t); u.negate_row(t); }
    }

    int rank = 0;
    while (rank < nmin && a.at(rank, rank) != 0) ++rank;

    // Enforce d_t | d_{t+1}. Rows t, t+1 and columns t, t+1 are zero off the
    // diagonal, so folding d_{t+1} into row t and re-eliminating stays inside
    // the 2x2 block; diag(a, b) becomes diag(gcd, lcm).
    for (int t = 0; t + 1 < rank;) {
        if (a.at(t + 1, t + 1) % a.at(t, t) == 0) { ++t; continue; }
        a.add_row(t, t + 1, 1); u.add_row(t, t + 1, 1);
        bool dirty = true;
        while (dirty) {
            dirty = false;
            if (abs_big(a.at(t + 1, t + 1)) != 0 &&
                (a.at(t, t) == 0 || abs_big(a.at(t + 1, t + 1)) < abs_big(a.at(t, t)))) {
                a.swap_rows(t, t + 1); u.swap_rows(t, t + 1);
                a.swap_cols(t, t + 1); v.swap_cols(t, t + 1);
            }
            if (a.at(t + 1, t) != 0) {
                BigInt q = floor_div(a.at(t + 1, t), a.at(t, t));
                a.add_row(t + 1, t, -q); u.add_row(t + 1, t, -q);
                if (a.at(t + 1, t) != 0) { a.swap_rows(t, t + 1); u.swap_rows(t, t + 1); dirty = true; }
            }
            if (a.at(t, t + 1) != 0) {
                BigInt q = floor_div(a.at(t, t + 1), a.at(t, t));
                a.add_col(t + 1, t, -q); v.add_col(t + 1, t, -q);
                if (a.at(t, t + 1) != 0) { a.swap_cols(t, t + 1); v.swap_cols(t, t + 1); dirty = true; }
            }
        }
        if (a.at(t, t) < 0) { a.negate_row(t); u.negate_row(t); }
        if (a.at(t + 1, t + 1) < 0) { a.negate_row(t + 1); u.negate_row(t + 1); }
        t = t > 0 ? t - 1 : 0;  // the new gcd can break the chain one step back
    }

    res.left = std::move(u);
    res.right = std::move(v);
    res.rank = rank;
    res.diagonal.reserve(static_cast<size_t>(nmin));
    for (int t = 0; t < nmin; ++t) res.diagonal.push_back(a.at(t, t));
    for (int t = 0; t < rank; ++t)
        if (a.at(t, t) > 1) res.cokernel.invariant_factors.push_back(a.at(t, t));
    res.cokernel.free_rank = R - rank;
    return res;
}

RowLattice::RowLattice(const IntMatrix& generators)
    : cols_(generators.cols()), snf_(smith_normal_form(generators)) {}

bool RowLattice::contains(const std::vector<BigInt>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw ValidationError("RowLattice: vector length mismatch");
    // x G = v  <=>  (x U^-1) D = v V, so v V must be divisible entrywise by
    // the diagonal (zero diagonal forcing zero coordinates).
    const IntMatrix& vm = snf_.right;
    for (int j = 0; j < cols_; ++j) {
        BigInt c = 0;
        for (int k = 0; k < cols_; ++k) c += v[static_cast<size_t>(k)] * vm.at(k, j);
        if (j >= static_cast<int>(snf_.diagonal.size()) || snf_.diagonal[static_cast<size_t>(j)] == 0) {
            if (c != 0) return false;
        } else if (c % snf_.diagonal[static_cast<size_t>(j)] != 0) {
            return false;
        }
    }
    return true;
}

} // namespace superjac
