#include "superjac/divisor.hpp"

#include <algorithm>
#include <sstream>

namespace superjac {

void Divisor::check_point(const Point& pt) const {
    if (pt.kind == Point::Kind::Branch) {
        if (pt.index < 1 || pt.index > family_.n)
            throw ValidationError("branch index out of range");
    } else {
        if (pt.index < 1 || pt.index > family_.infinity_count())
            throw ValidationError("infinity index out of range");
    }
}

BigInt Divisor::coeff(const Point& pt) const {
    auto it = coeffs_.find(pt);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

void Divisor::add(const Point& pt, const BigInt& c) {
    check_point(pt);
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(pt, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

BigInt Divisor::degree() const {
    BigInt d = 0;
    for (const auto& [pt, c] : coeffs_) d += c;
    return d;
}

bool Divisor::supported_on_branch() const {
    for (const auto& [pt, c] : coeffs_)
        if (pt.kind == Point::Kind::Infinity) return false;
    return true;
}

Divisor Divisor::operator+(const Divisor& o) const {
    if (!(family_ == o.family_)) throw ValidationError("divisor families differ");
    Divisor r = *this;
    for (const auto& [pt, c] : o.coeffs_) r.add(pt, c);
    return r;
}

Divisor Divisor::operator-(const Divisor& o) const {
    if (!(family_ == o.family_)) throw ValidationError("divisor families differ");
    Divisor r = *this;
    for (const auto& [pt, c] : o.coeffs_) r.add(pt, -c);
    return r;
}

Divisor Divisor::scaled(const BigInt& c) const {
    Divisor r(family_);
    if (c == 0) return r;
    for (const auto& [pt, v] : coeffs_) r.coeffs_[pt] = c * v;
    return r;
}

std::vector<BigInt> Divisor::branch_vector() const {
    if (!supported_on_branch())
        throw ValidationError("divisor has infinity support");
    std::vector<BigInt> v(static_cast<size_t>(family_.n));
    for (const auto& [pt, c] : coeffs_) v[static_cast<size_t>(pt.index - 1)] = c;
    return v;
}

std::string Divisor::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [pt, c] : coeffs_) {
        BigInt abs = c < 0 ? BigInt(-c) : c;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        if (abs != 1) os << abs.str() << "*";
        os << (pt.kind == Point::Kind::Branch ? "(P" : "(inf") << pt.index << ")";
    }
    return os.str();
}

namespace {

void require_branch_index(const CurveFamily& f, int i) {
    if (i < 1 || i > f.n) throw ValidationError("branch index out of range");
}

void require_infinity_regime(const CurveFamily& f, const char* what) {
    if (f.s >= f.r) throw RegimeError(std::string(what) + " requires s < r");
}

} // namespace

Divisor div_x_minus_alpha(const CurveFamily& f, int i) {
    require_branch_index(f, i);
    require_infinity_regime(f, "div(x - alpha_i)");
    Divisor d(f);
    d.add(Point::branch(i), BigInt(f.q));
    BigInt pole = pow_ll(f.p, f.r - f.s);
    for (int j = 1; j <= f.infinity_count(); ++j) d.add(Point::infinity(j), -pole);
    return d;
}

Divisor div_unit_combo(const CurveFamily& f, int i) {
    require_branch_index(f, i);
    require_infinity_regime(f, "div(y^a (x-alpha_i)^b)");
    auto [a, b] = bezout_pair(BigInt(f.m), BigInt(pow_ll(f.p, f.r - f.s)));
    Divisor d(f);
    for (int k = 1; k <= f.n; ++k) d.add(Point::branch(k), a);
    d.add(Point::branch(i), b * f.q);
    for (int j = 1; j <= f.infinity_count(); ++j) d.add(Point::infinity(j), BigInt(-1));
    return d;
}

Divisor automorphism_pushforward(const CurveFamily& f, const Divisor& d) {
    long long t = f.infinity_count();
    Divisor r(f);
    for (const auto& [pt, c] : d.coefficients()) {
        if (pt.kind == Point::Kind::Branch) r.add(pt, c);
        else r.add(Point::infinity(static_cast<int>(pt.index % t) + 1), c);
    }
    return r;
}

Divisor apply_automorphism_poly(const CurveFamily& f, const IntPoly& poly, const Divisor& d) {
    Divisor acc(f);
    Divisor power = d;
    for (int k = 0; k <= poly.degree(); ++k) {
        BigInt c = poly.coeff(k);
        if (c != 0) acc = acc + power.scaled(c);
        if (k < poly.degree()) power = automorphism_pushforward(f, power);
    }
    return acc;
}

Divisor eliminate_infinity(const CurveFamily& f, const Divisor& d, int pivot) {
    require_branch_index(f, pivot);
    require_infinity_regime(f, "eliminate_infinity");
    BigInt w = d.coeff(Point::infinity(1));
    for (int j = 2; j <= f.infinity_count(); ++j)
        if (d.coeff(Point::infinity(j)) != w)
            throw ValidationError("infinity part is not automorphism-invariant");
    if (w == 0 && d.supported_on_branch()) return d;
    // sum_j (inf_j) ~ a sum_k (P_k) + b q (P_pivot)
    auto [a, b] = bezout_pair(BigInt(f.m), BigInt(pow_ll(f.p, f.r - f.s)));
    Divisor r(f);
    for (const auto& [pt, c] : d.coefficients())
        if (pt.kind == Point::Kind::Branch) r.add(pt, c);
    for (int k = 1; k <= f.n; ++k) r.add(Point::branch(k), w * a);
    r.add(Point::branch(pivot), w * b * f.q);
    return r;
}

bool is_principal_on_branch(const CurveFamily& f, const Divisor& d) {
    if (!d.supported_on_branch())
        throw ValidationError("principality criterion needs branch support");
    if (d.degree() != 0)
        throw ValidationError("principality criterion needs degree 0");
    // all branch coefficients, zeros included, must be congruent mod q
    BigInt ref = mod_floor(d.coeff(Point::branch(1)), BigInt(f.q));
    for (int i = 2; i <= f.n; ++i)
        if (mod_floor(d.coeff(Point::branch(i)), BigInt(f.q)) != ref) return false;
    return true;
}

IntMatrix principal_function_lattice(const CurveFamily& f) {
    require_infinity_regime(f, "principal_function_lattice");
    const int n = static_cast<int>(f.n);
    const long long prs = pow_ll(f.p, f.r - f.s);
    std::vector<std::vector<BigInt>> rows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<BigInt> row(static_cast<size_t>(n));
            row[static_cast<size_t>(i)] = f.q;
            row[static_cast<size_t>(j)] = -BigInt(f.q);
            rows.push_back(std::move(row));
        }
    for (int i = 0; i < n; ++i) {
        std::vector<BigInt> row(static_cast<size_t>(n), BigInt(prs));
        row[static_cast<size_t>(i)] -= BigInt(f.m) * f.q;
        rows.push_back(std::move(row));
    }
    IntMatrix g(static_cast<int>(rows.size()), n);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < n; ++j) g.at(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
    return g;
}

namespace {

// Principal generators rewritten in the basis e_i - e_n of the degree-0
// lattice: a degree-0 vector's coordinates are just its first n-1 entries.
IntMatrix principal_in_degree0_basis(const CurveFamily& f) {
    IntMatrix g = principal_function_lattice(f);
    IntMatrix c(g.rows(), g.cols() - 1);
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j + 1 < g.cols(); ++j) c.at(i, j) = g.at(i, j);
    return c;
}

} // namespace

PicardStructure picard_structure(const CurveFamily& f) {
    IntMatrix gens = principal_in_degree0_basis(f);
    // Z^{n-1} / row-lattice = cokernel of the transpose
    SmithResult snf = smith_normal_form(gens.transposed());
    PicardStructure pic;
    pic.group = snf.cokernel;
    pic.p_rank = pic.group.p_rank(BigInt(f.p));
    pic.transform = snf.left;
    pic.diagonal.resize(static_cast<size_t>(f.n - 1));
    for (size_t i = 0; i < pic.diagonal.size(); ++i)
        pic.diagonal[i] = i < snf.diagonal.size() ? snf.diagonal[i] : BigInt(0);
    return pic;
}

std::vector<BigInt> PicardStructure::coordinates(const std::vector<BigInt>& branch_vec) const {
    const int n1 = transform.rows();
    if (static_cast<int>(branch_vec.size()) != n1 + 1)
        throw ValidationError("coordinate vector must have length n");
    BigInt deg = 0;
    for (const BigInt& c : branch_vec) deg += c;
    if (deg != 0) throw ValidationError("coordinates need a degree-0 vector");
    std::vector<BigInt> y(static_cast<size_t>(n1));
    for (int i = 0; i < n1; ++i) {
        BigInt acc = 0;
        for (int j = 0; j < n1; ++j) acc += transform.at(i, j) * branch_vec[static_cast<size_t>(j)];
        const BigInt& d = diagonal[static_cast<size_t>(i)];
        y[static_cast<size_t>(i)] = d == 0 ? acc : mod_floor(acc, d);
    }
    return y;
}

std::vector<Divisor> p_torsion_classes(const CurveFamily& f) {
    if (!(0 < f.s && f.s < f.r))
        throw RegimeError("order-p classes require 0 < s < r");
    IntPoly reducer = geometric_series_poly(f.p, f.r - 1);  // degree q/p - 1
    std::vector<Divisor> classes;
    for (int i = 1; i <= f.n; ++i) {
        Divisor seed(f);
        seed.add(Point::branch(i), BigInt(1));
        seed.add(Point::infinity(1), BigInt(-1));
        Divisor spread = apply_automorphism_poly(f, reducer, seed);
        // pivot at the dominant coefficient, ties to the lowest index
        int pivot = 1;
        BigInt best;
        bool have = false;
        for (const auto& [pt, c] : spread.coefficients()) {
            if (pt.kind != Point::Kind::Branch) continue;
            if (!have || c > best) { have = true; best = c; pivot = pt.index; }
        }
        classes.push_back(eliminate_infinity(f, spread, pivot));
    }
    return classes;
}

TorsionMap torsion_map(const CurveFamily& f) {
    if (!(0 < f.s && f.s < f.r))
        throw RegimeError("torsion map requires 0 < s < r");
    PicardStructure pic = picard_structure(f);
    std::vector<Divisor> classes = p_torsion_classes(f);
    const int n = static_cast<int>(f.n);
    const int n1 = n - 1;

    // p-torsion coordinates live at the diagonal positions divisible by p
    std::vector<int> torsion_pos;
    for (int i = 0; i < n1; ++i) {
        const BigInt& d = pic.diagonal[static_cast<size_t>(i)];
        if (d != 0 && d % f.p == 0) torsion_pos.push_back(i);
    }

    TorsionMap tm;
    tm.matrix = FpMatrix(f.p, static_cast<int>(torsion_pos.size()), n);
    for (int col = 0; col < n; ++col) {
        std::vector<BigInt> y = pic.coordinates(classes[static_cast<size_t>(col)].branch_vector());
        for (int i = 0; i < n1; ++i) {
            const BigInt& d = pic.diagonal[static_cast<size_t>(i)];
            bool is_torsion_pos =
                std::find(torsion_pos.begin(), torsion_pos.end(), i) != torsion_pos.end();
            if (!is_torsion_pos) {
                if (d != 0 && y[static_cast<size_t>(i)] % d != 0)
                    throw InternalError("order-p class has a coordinate outside the p-torsion");
                if (d == 0 && y[static_cast<size_t>(i)] != 0)
                    throw InternalError("order-p class has a free coordinate");
            }
        }
        for (size_t row = 0; row < torsion_pos.size(); ++row) {
            const BigInt& d = pic.diagonal[static_cast<size_t>(torsion_pos[row])];
            BigInt step = d / f.p;
            BigInt rem = mod_floor(y[static_cast<size_t>(torsion_pos[row])], d);
            if (rem % step != 0)
                throw InternalError("class coordinate is not p-torsion");
            tm.matrix.set(static_cast<int>(row), col, static_cast<long long>(rem / step));
        }
    }
    tm.kernel = fp_nullspace(tm.matrix);
    tm.rank = fp_rank(tm.matrix);
    return tm;
}

TorsionRankReport torsion_rank_report(const CurveFamily& f) {
    if (!(0 < f.s && f.s < f.r))
        throw RegimeError("torsion rank identities require 0 < s < r");
    TorsionRankReport rep;
    long long phi = f.q - f.q / f.p;
    long long dim = 0;
    for (const LevelDimension& lv : dimension_decomposition(f))
        if (lv.level == f.r) dim = lv.dimension;
    rep.tate_rank = 2 * dim / phi;
    rep.n_minus_1 = f.n - 1;
    rep.picard_p_rank = picard_structure(f).p_rank;
    rep.consistent = (rep.tate_rank == rep.n_minus_1) && (rep.n_minus_1 == rep.picard_p_rank);
    return rep;
}

} // namespace superjac
