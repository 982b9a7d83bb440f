#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "superjac/curve.hpp"
#include "superjac/modrep.hpp"

namespace superjac {

/// Orbits of multiplication by k on the residues of [1, q] prime to p.
struct UnitPartition {
    long long q = 0;
    std::vector<std::vector<long long>> blocks;  // each sorted; blocks sorted by minimum
};

UnitPartition orbit_partition(long long q, long long p, long long k);

/// Outcome of the constraint-propagation procedure for monotone functions on
/// the units invariant under multiplication by k. The classes are the
/// maximal intervals forced to carry a single value; any class-constant
/// monotone assignment satisfies all constraints, so a non-constant witness
/// exists exactly when there are two or more classes. The interval structure
/// is the same for both orientations; `nonincreasing` only flips the witness
/// values.
struct ConstancyResult {
    long long q = 0;
    long long k = 0;
    long long forced_prefix = 0;  // largest L with all units <= L in one class
    bool fully_constant = false;
    std::vector<std::vector<long long>> classes;        // sorted intervals of units
    std::optional<std::map<long long, long long>> witness;  // class value per unit
};

ConstancyResult monotone_constancy(long long q, long long p, long long k,
                                   bool nonincreasing = false);

/// Exhaustive run over q = p^r (r <= r_max) and every unit k != 1.
/// For odd p every case must be fully constant; for p = 2 the forced prefix
/// must cover all units <= 2^{r-1}.
struct SweepCase {
    long long q = 0;
    long long k = 0;
    bool fully_constant = false;
    long long forced_prefix = 0;
    bool ok = false;
    std::vector<std::vector<long long>> blocking_classes;  // filled on failure
};

struct SweepReport {
    long long p = 0;
    int r_max = 0;
    long long cases = 0;
    bool all_pass = false;
    std::vector<SweepCase> failures;        // empty on success
    std::vector<SweepCase> sharp_cases;     // p = 2 runs that are not fully constant
};

SweepReport constancy_sweep(long long p, int r_max);

/// All units k with profile(k*i mod q) = profile(i) for every unit i.
std::set<long long> invariant_multipliers(const MultiplicityProfile& profile, long long p);

/// Decides whether the profile symmetry group is trivial, which (granting
/// the cited center-automorphism criterion) pins the center of the
/// endomorphism algebra to the full cyclotomic field.
struct CenterReport {
    bool verified = false;
    std::string center;             // e.g. "Q(zeta_9)"
    std::vector<long long> obstructions;  // nontrivial invariant multipliers, if any
    bool degenerate = false;        // q = 2 branch
};

CenterReport center_verdict(const CurveFamily& f);

// ---------------------------------------------------------------------------

struct CertificateCheck {
    std::string claim;
    std::string status;  // "verified" | "cited" | "failed"
    std::string detail;
    bool operator==(const CertificateCheck&) const = default;
};

struct CertificateLevel {
    int level = 0;
    long long prime_power = 0;
    long long dimension = 0;
    std::string algebra;      // "Q(zeta_{p^i})"
    std::string ring;         // "Z[zeta_{p^i}]"
    std::string provenance;   // "verified" | "cited"
    bool operator==(const CertificateLevel&) const = default;
};

/// Machine-checked certificate for the decomposition of the endomorphism
/// algebra of the Jacobian into a product of cyclotomic fields. Checks that
/// cannot be recomputed at desk scale carry status "cited" and name their
/// source; the conclusion is only present when nothing failed.
struct Certificate {
    CurveFamily family;
    GroupLabel galois = GroupLabel::SymmetricFull;  // user-asserted
    unsigned long long seed = 1;
    std::vector<CertificateCheck> checks;
    std::optional<std::vector<CertificateLevel>> conclusion;
    std::string algebra_product;  // "Q(zeta_3) x Q(zeta_9)" when concluded

    bool failed() const;
    std::optional<std::string> first_failed_claim() const;
};

/// Assemble the certificate; verified checks run on this machine, the rest
/// are cited. Stops at the first failed check.
Certificate endomorphism_certificate(const CurveFamily& f, GroupLabel galois,
                                     unsigned long long seed = 1);

std::string group_label_name(GroupLabel label);

} // namespace superjac
