#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dexsym/algebra.hpp"
#include "dexsym/identities.hpp"

namespace dexsym {

/// Counterexample to the defining implication "a(bc) = 0 implies b(ac) = 0":
/// a triple with a(bc) = 0 and b(ac) != 0, stored with both products so a
/// verdict can be re-validated independently.
struct Witness {
    Element a, b, c;
    Element a_bc;  // a(bc), zero
    Element b_ac;  // b(ac), nonzero
};

enum class DextralStatus { ProvedYes, ProvedNo, Unknown };

enum class YesReason {
    AllTriplesZero,        // every basis triple product e_i(e_j e_k) vanishes
    DextralIdentity,       // x(yz) + y(xz) == 0 identically
    StructuralSufficiency, // one of the four (anti)commutative x (anti)associative cases
    ExhaustiveEnumeration, // every element triple over GF(p) checked
};

enum class SufficiencyCase {
    CommutativeAssociative,
    CommutativeAntiAssociative,
    AntiCommutativeAssociative,
    AntiCommutativeAntiAssociative,
};

/// Three-valued outcome: ProvedYes carries a machine-checkable reason,
/// ProvedNo carries a validating Witness, Unknown is an honest result for
/// algebras none of the sound tiers can settle.
struct DextralVerdict {
    DextralStatus status = DextralStatus::Unknown;
    std::optional<YesReason> reason;
    std::optional<SufficiencyCase> sufficiency;
    std::optional<Witness> witness;

    static DextralVerdict yes(YesReason r, std::optional<SufficiencyCase> c = std::nullopt);
    static DextralVerdict no(Witness w);
    static DextralVerdict unknown();
};

std::string status_str(DextralStatus s);
std::string reason_str(YesReason r);
std::string sufficiency_str(SufficiencyCase c);

struct DextralOptions {
    long coeff_bound = 1;                        // witness scan coordinates in [-bound, bound]
    std::size_t coeff_triple_budget = 100000;    // triples examined in the coordinate scan
    std::size_t enumeration_budget = 10000000;   // element triples for GF(p) enumeration
};

/// Tiered decision procedure, every tier sound:
///   1. all basis triple products zero            -> ProvedYes
///   2. dextral identity holds                    -> ProvedYes
///   3. (anti)commutative x (anti)associative     -> ProvedYes
///   4. witness search: basis triples, then (a, w, w) with w a pair sum,
///      then a bounded scan with small coordinates -> ProvedNo
///   5. right Leibniz algebras are fully settled by tiers 2 and 4: for them
///      the identity of tier 2 is equivalent to dextral symmetry, and the
///      (a, w, w) pattern of tier 4 is a complete witness set
///   6. over GF(p) with p^(3 dim) within budget: full enumeration
///   7. otherwise Unknown
/// Reported witnesses are the first in the fixed search order.
DextralVerdict decide_dextral(const AlgebraTable& A, const DextralOptions& opts = {});

/// Checks a(bc) == stored value == 0 and b(ac) == stored value != 0.
bool validate_witness(const AlgebraTable& A, const Witness& w);
/// Same with membership of I in place of vanishing: a(bc) in I, b(ac) not in I.
bool validate_witness_mod(const AlgebraTable& A, const Subspace& I, const Witness& w);

/// Verdict for the quotient A/I (I must be an ideal); a ProvedNo witness is
/// lifted to coset representatives in A, so it validates modulo I.
DextralVerdict is_symmetric_ideal(const AlgebraTable& A, const Subspace& I,
                                  const DextralOptions& opts = {});

/// Independent brute-force oracle over GF(p): literal evaluation of the
/// defining implication over every element triple. Deliberately bypasses
/// the Scalar machinery (raw residue arithmetic) so it shares nothing with
/// decide_dextral. Never returns Unknown; exceeding the budget is an error.
DextralVerdict exhaustive_oracle(const AlgebraTable& A, std::size_t budget = 10000000);

/// Exhaustive check over GF(p) of the condition "xy = 0 implies (xz)y = 0
/// for all z". Pairs (x, y) are enumerated literally; z ranges over the
/// basis, which suffices because (xz)y is linear in z.
bool is_cb_algebra(const AlgebraTable& A, std::size_t pair_budget = 30000000);

}  // namespace dexsym
