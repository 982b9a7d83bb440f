#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superjac/fpmatrix.hpp"
#include "superjac/numeric.hpp"

namespace superjac {

/// Permutation of {0..n-1} stored as the image vector.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);  // apply a first, then b
Perm perm_inverse(const Perm& a);
bool perm_is_even(const Perm& a);
/// Cycle from 1-based point lists, e.g. {1,2,3} is the 3-cycle (1 2 3).
Perm perm_cycle(int n, const std::vector<int>& pts);

enum class GroupLabel { SymmetricFull, Alternating, Custom };

struct PermGenerators {
    int n = 0;
    std::vector<Perm> generators;
    GroupLabel label = GroupLabel::Custom;
};

/// Classic two-generator sets: {(1 2), (1..n)} for S_n; {(1 2 3), (1..n)}
/// for odd n and {(1 2 3), (2..n)} for even n for A_n. For n <= 10 the
/// generated order is verified by a stabilizer chain.
PermGenerators standard_generators(int n, GroupLabel label);

/// Order of the generated subgroup of S_n via Schreier-Sims.
BigInt group_order(const PermGenerators& gens);

/// Single orbit on ordered pairs of distinct points (n <= 12).
bool is_doubly_transitive(const PermGenerators& gens);

enum class ModuleTag { FullPerm, Deg0, V, W };

/// F_p vector space with the action of each generator as an invertible matrix.
/// FullPerm is F_p^n with permuted coordinates; Deg0 its sum-zero submodule;
/// V the quotient by the constants; W the image of Deg0 in V (needs p | n).
struct FpModule {
    long long p = 2;
    int dim = 0;
    std::vector<FpMatrix> action;
    ModuleTag tag = ModuleTag::FullPerm;
};

FpModule build_module(const PermGenerators& gens, long long p, ModuleTag tag);

struct Commutant {
    int dimension = 0;
    std::vector<FpMatrix> basis;
};

/// Matrices commuting with every generator action, by solving the linear
/// system on dim^2 unknowns.
Commutant commutant(const FpModule& mod);

struct SimplicityResult {
    bool simple = false;
    // rows spanning a proper nonzero invariant subspace, when reducible
    std::optional<std::vector<FpVec>> witness;
    int trials_used = 0;
};

/// Norton-style test with random algebra elements: spin kernel vectors on
/// the primal side, one kernel vector of the transpose on the dual side.
/// Exhausting the trial budget raises InconclusiveError, never a guess.
SimplicityResult is_simple(const FpModule& mod, unsigned long long seed = 1,
                           int trials = 200);

/// Smallest invariant subspace containing v, as an echelon basis.
EchelonBasis spin(const std::vector<FpMatrix>& action, long long p, const FpVec& v);

/// Replays the scalar-commutant argument for the quotient module V of the
/// natural permutation module: commutant(V) = F_p Id, W simple with scalar
/// commutant, and double transitivity of the group.
struct CommutantReport {
    int n = 0;
    long long p = 0;
    GroupLabel label = GroupLabel::SymmetricFull;
    int v_commutant_dim = 0;
    bool v_commutant_scalar = false;
    bool w_simple = false;
    int w_commutant_dim = 0;
    bool doubly_transitive = false;
    bool passed = false;
};

CommutantReport commutant_report(int n, long long p, GroupLabel label,
                                 unsigned long long seed = 1);

} // namespace superjac
