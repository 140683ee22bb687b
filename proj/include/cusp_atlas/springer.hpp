// Generalized Springer data: elimination of equal-sign neighbours, the
// cuspidal datum of a pair (u, eta), its extension to the full orthogonal
// group and to the determinant-one subgroup of a product of orthogonal groups.
#pragma once

#include <map>
#include <optional>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cusp_atlas/orbits.hpp"

namespace cusp_atlas {

// Sp or O side of the elimination rules. SO, O (any parity) map to Orthogonal.
enum class Side { Symplectic, Orthogonal };
Side side_of(Family f);  // throws DomainError for GL

struct NormalForm {
    Partition partition;                         // remaining parts
    SignCharacter character;                     // restriction of eta
    std::vector<std::pair<int, int>> removed;   // eliminated neighbours (p_j, p_{j+1}), in removal order
};

// Removes the j-th and (j+1)-th parts (1-based, increasing order) when they
// carry the same sign. Throws DomainError otherwise.
std::pair<Partition, SignCharacter> eliminate_once(const Partition& p, const SignCharacter& eta, int j);

// Repeated leftmost elimination down to a normal form with alternating signs.
NormalForm eliminate(const Partition& p, const SignCharacter& eta);

// Every outcome of the elimination procedure over all orders of steps, with
// `removed` sorted. The remaining parts can depend on the order: (2,4,6)
// with all signs +1 leaves (2) or (6). The sign word does not.
std::vector<NormalForm> all_eliminations(const Partition& p, const SignCharacter& eta);

// Signs of the remaining parts in increasing order of the parts.
std::vector<int> sign_word(const NormalForm& nf);

// d of an elimination normal form. Sp: k-1 if the first sign is +1, k if it
// is -1, 0 for the empty form. O: k. Throws DomainError on non-normal input.
int d_from_normal_form(Side side, const Partition& normal, const SignCharacter& eta);

// d from the defect: Sp d = d'-1 for d' >= 1 and -d' otherwise; O d = |d'|.
int d_from_defect(Side side, int dprime);

struct CuspidalDatum {
    int torus_rank = 0;          // l
    int d = 0;
    int dprime = 0;
    Partition cusp_partition;    // (2,4,...,2d) or (1,3,...,2d-1)
    SignCharacter cusp_character;
    // Orthogonal side: +1 when the character is the lift with eps(z_1) = +1,
    // -1 for the other lift, 0 when no lift is determined.
    int lift = 0;
};

// Cuspidal datum of a distinguished pair. d is computed from the defect
// formula and from the elimination normal form; a disagreement raises
// InvariantError. On the orthogonal side the cuspidal character is the
// normal-form sign pattern transported to (1,3,...,2d-1).
CuspidalDatum springer_datum(const GroupKind& kind, const Partition& p, const SignCharacter& eta);

// Cuspidal datum of any valid pair (u, eta) from the interval-swapped symbol.
// For distinguished partitions it agrees with springer_datum on l, d and the
// cuspidal partition.
CuspidalDatum springer_datum_general(const GroupKind& kind, const Partition& p, const SignCharacter& eta);

enum class OCase { I, II, III };
enum class WeylRep { Base, Extended, Induced };
std::string to_string(OCase c);
std::string to_string(WeylRep w);

struct OSpringerDatum {
    OCase which = OCase::I;
    int torus_rank = 0;    // quasi-Levi (C^x)^l x O_{N'}
    int o_block = 0;       // N'
    CuspidalDatum datum;
    WeylRep weyl_rep = WeylRep::Base;
    // Value of eta on the extra generator s of A_O(u) over A_SO(u): -1 when N
    // is odd, otherwise the reflection z_q for the smallest odd part q.
    // Zero in case III where A_O(u) = A_SO(u).
    int chi = 0;
    bool fused_orbits = false;  // case III: the two SO-orbits form one O-orbit
};

// kind must be Oodd or Oeven (SO kinds are accepted and treated as O).
OSpringerDatum springer_O(const GroupKind& kind, const Partition& p, const SignCharacter& eta);

struct ProductFactor {
    int m = 0;
    Partition partition;
    SignCharacter character;  // O-level character of factor i
};

struct ProductDatum {
    std::vector<OSpringerDatum> factors;  // in input order
    // Input indices (1-based) rearranged as case I, then case II, then case III.
    std::vector<int> arrangement;
    int p = 0, q = 0, r = 0;
    // Generators s_i s_j of the three extension groups, as input-index pairs.
    std::vector<std::pair<int, int>> c_levi, c_orbit, c_induced;
    std::vector<int> chi_levi;  // chi on the c_levi generators
    std::vector<int> chi_orbit; // chi on the c_orbit generators
    WeylRep weyl_rep = WeylRep::Base;  // Base, Extended (chi_O), Induced along c_induced
    std::uint64_t index() const { return std::uint64_t{1} << (c_levi.size() + c_orbit.size() + c_induced.size()); }
};

// Three-stage extension for the index-two subgroup of a product of
// orthogonal groups. A single factor reduces to springer_O.
ProductDatum springer_product(const std::vector<ProductFactor>& factors);

struct Census {
    long long pairs = 0;          // number of pairs (orbit, character)
    std::map<int, long long> by_d;  // pairs grouped by the cuspidal datum's d
};

// Counts pairs (u, eta) for every valid partition. SO kinds count characters
// of the SO component group and both orbits of a degenerate partition.
Census springer_census(const GroupKind& kind);

}  // namespace cusp_atlas
