#pragma once

#include <map>
#include <vector>

#include "superjac/curve.hpp"
#include "superjac/intmatrix.hpp"
#include "superjac/intpoly.hpp"
#include "superjac/fpmatrix.hpp"

namespace superjac {

/// A point of B (branch point over a root of f) or of the infinity fiber.
struct Point {
    enum class Kind { Branch, Infinity };
    Kind kind = Kind::Branch;
    int index = 1;  // 1..n for Branch, 1..p^s for Infinity

    static Point branch(int i) { return {Kind::Branch, i}; }
    static Point infinity(int j) { return {Kind::Infinity, j}; }
    bool operator==(const Point&) const = default;
    auto operator<=>(const Point&) const = default;
};

/// Integer formal sum over B and the infinity fiber; zero coefficients are
/// never stored.
class Divisor {
public:
    explicit Divisor(const CurveFamily& family) : family_(family) {}

    const CurveFamily& family() const { return family_; }
    const std::map<Point, BigInt>& coefficients() const { return coeffs_; }

    BigInt coeff(const Point& pt) const;
    void add(const Point& pt, const BigInt& c);
    BigInt degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    bool supported_on_branch() const;

    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    Divisor scaled(const BigInt& c) const;
    bool operator==(const Divisor& o) const = default;

    /// Coefficients at P_1..P_n as a dense vector (branch support only).
    std::vector<BigInt> branch_vector() const;

    std::string to_string() const;

private:
    CurveFamily family_;
    std::map<Point, BigInt> coeffs_;
    void check_point(const Point& pt) const;
};

/// div(x - alpha_i) = q (P_i) - p^{r-s} * sum_j (inf_j); principal by construction.
Divisor div_x_minus_alpha(const CurveFamily& f, int i);

/// div(y^a (x - alpha_i)^b) = a sum_k (P_k) + b q (P_i) - sum_j (inf_j) with
/// (a, b) the Bezout pair of (m, p^{r-s}).
Divisor div_unit_combo(const CurveFamily& f, int i);

/// Pushforward along the order-q automorphism: branch points fixed, the
/// infinity fiber shifted cyclically.
Divisor automorphism_pushforward(const CurveFamily& f, const Divisor& d);

/// sum_k coeff_k * (pushforward)^k applied to d.
Divisor apply_automorphism_poly(const CurveFamily& f, const IntPoly& poly, const Divisor& d);

/// Replace an automorphism-invariant infinity part (equal coefficient at
/// every infinity point) by the linearly equivalent branch expression coming
/// from div_unit_combo at the pivot index. Output is supported on B.
Divisor eliminate_infinity(const CurveFamily& f, const Divisor& d, int pivot);

/// Degree-0 divisor supported on B is principal iff all branch coefficients
/// (zeros included) are pairwise congruent mod q.
bool is_principal_on_branch(const CurveFamily& f, const Divisor& d);

/// Rows generate the lattice of divisors of the explicit functions
/// (x-alpha_i)/(x-alpha_j) and y^{p^{r-s}}/(x-alpha_i)^m, as vectors over
/// the branch coordinates. Independent route to the congruence criterion.
IntMatrix principal_function_lattice(const CurveFamily& f);

/// Structure of { degree-0 vectors on B } / { principal ones }, in the basis
/// e_i - e_n of the degree-0 lattice.
struct PicardStructure {
    AbelianGroupStructure group;
    int p_rank = 0;
    std::vector<BigInt> diagonal;  // full Smith diagonal, length n-1
    IntMatrix transform;           // U: degree-0 coordinates -> group coordinates

    /// Group coordinates (residues mod diagonal entries) of a degree-0
    /// branch vector of length n.
    std::vector<BigInt> coordinates(const std::vector<BigInt>& branch_vec) const;
};

PicardStructure picard_structure(const CurveFamily& f);

/// The canonical order-p classes: the geometric-series polynomial in the
/// automorphism applied to (P_i) - (inf_1), reduced to branch support.
/// Requires 0 < s < r.
std::vector<Divisor> p_torsion_classes(const CurveFamily& f);

/// F_p-linear map sending the i-th root indicator to the class of the i-th
/// order-p divisor, in p-torsion coordinates of the Picard group.
struct TorsionMap {
    FpMatrix matrix;                 // (n-1) x n over F_p once p_rank = n-1
    std::vector<FpVec> kernel;       // basis of the kernel
    int rank = 0;
};

TorsionMap torsion_map(const CurveFamily& f);

/// The three quantities 2 dim / (p^r - p^{r-1}), n - 1, and the Picard
/// p-rank, which must coincide for 0 < s < r.
struct TorsionRankReport {
    long long tate_rank = 0;
    long long n_minus_1 = 0;
    long long picard_p_rank = 0;
    bool consistent = false;
};

TorsionRankReport torsion_rank_report(const CurveFamily& f);

} // namespace superjac
