// u-symbols attached to unipotent classes of Sp_N (ordered pairs) and of
// SO_N / O_N (unordered pairs), their interval structure and defects.
#pragma once

#include <vector>

#include "cusp_atlas/orbits.hpp"

namespace cusp_atlas {

enum class SymbolKind { SpOrdered, OUnordered };

struct USymbol {
    SymbolKind kind = SymbolKind::SpOrdered;
    std::vector<int> A;  // sorted increasing
    std::vector<int> B;  // sorted increasing

    // SpOrdered compares componentwise, OUnordered as an unordered pair.
    bool operator==(const USymbol& other) const;
};

std::string to_string(const USymbol& s);

// Symbol kind for a group family; throws DomainError for GL.
SymbolKind symbol_kind(Family f);

// Checks the defining conditions of a symbol of rank N: no two consecutive
// integers in A or in B, the parity of |A|+|B| (Sp), positivity of B (Sp)
// and the sum identity.
Verdict check_symbol(const USymbol& s, int N);

// Strips the forced prefixes of the equivalence
// Sp: (A,B) ~ ({0} u (A+2), {1} u (B+2)); O: {A,B} ~ {{0} u (A+2), {0} u (B+2)}.
USymbol canonical(const USymbol& s);

// Distinguished symbol of any valid partition (zero padding is internal).
USymbol distinguished_symbol(const GroupKind& kind, const Partition& p);

struct IntervalStructure {
    std::vector<std::vector<int>> intervals;  // increasing, each a run of consecutive integers
    std::vector<int> H;                       // run of C containing 0 (Sp only)
    std::vector<int> parts;                   // parts[r] is the part matched with intervals[r]
};

// Intervals of C = A Δ B of the distinguished symbol, matched with the
// distinct parts carrying generators (even parts for Sp, odd for SO/O).
IntervalStructure interval_structure(const GroupKind& kind, const Partition& p);

// General rule: swap A and B inside every interval whose matched part has
// eta(z_q) = -1. Valid for every partition.
USymbol symbol_for_pair(const GroupKind& kind, const Partition& p, const SignCharacter& eta);

// Closed-form placement of the singleton intervals for a distinguished
// partition, with separate rules for an even and an odd number of parts (Sp).
// Throws DomainError when p is not distinguished.
USymbol symbol_from_character(const GroupKind& kind, const Partition& p, const SignCharacter& eta);

// Sp: |A| - |B| (signed). O: ||A| - |B||.
int defect(const USymbol& s);

// Alternating-sum defect of a distinguished pair; k is the unpadded length.
// Sp: 1 + sum (-1)^i eta(z_{p_i}) for k even, sum (-1)^(i+1) eta(z_{p_i}) for k odd.
// O:  |sum (-1)^(i+1) eta(z_{p_i})|.
int defect_formula(const GroupKind& kind, const Partition& p, const SignCharacter& eta);

// Alternative closed form sum (-1)^(i+k) eta(z_{p_i}) + 2k + 2 - 2*floor((k+1)/2)
// for symplectic slices. Kept only to document its offset from defect_formula;
// never used in a computation.
int defect_formula_alternative(const Partition& p, const SignCharacter& eta);

}  // namespace cusp_atlas
