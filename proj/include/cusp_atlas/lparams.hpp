// Discrete enhanced L-parameters of split classical groups: Jordan blocks,
// component groups, the S-group condition, cuspidality and infinitesimal
// characters.
#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cusp_atlas/half.hpp"
#include "cusp_atlas/orbits.hpp"

namespace cusp_atlas {

enum class SdType { Orthogonal, Symplectic, GLpair };
std::string to_string(SdType t);
SdType sd_type_from_string(const std::string& name);  // "orthogonal", "symplectic", "glpair"

struct IrrLabel {
    std::string name;
    int dim = 1;
    SdType type = SdType::Orthogonal;
    bool operator==(const IrrLabel&) const = default;
};

struct Block {
    std::string pi;
    int a = 1;
    auto operator<=>(const Block&) const = default;
};

std::string to_string(const Block& b);

// The complex dual group and its Jordan blocks. Blocks are kept in input
// order so that repeated blocks can be reported; use sorted_blocks() for a
// canonical order.
struct DiscreteParameter {
    GroupKind dual{Family::Sp, 0};
    std::map<std::string, IrrLabel> labels;
    std::vector<Block> blocks;

    const IrrLabel& label(const std::string& name) const;  // throws DomainError if unknown
    std::vector<Block> sorted_blocks() const;
    // a-values of the blocks of one label, increasing.
    std::vector<int> slice(const std::string& pi) const;
    // Labels that carry at least one block, by name.
    std::vector<std::string> used_labels() const;
    bool operator==(const DiscreteParameter& other) const;  // compares dual, used labels, block sets
};

using ParameterCharacter = std::map<Block, int>;
std::string to_string(const ParameterCharacter& eta);

// Dual groups accepted: Sp (N even), SOodd, SOeven (Oodd/Oeven are treated
// as their SO counterparts).
bool dual_is_symplectic(const GroupKind& dual);

// Type of the representation pi (x) S_a: orthogonal or symplectic.
SdType block_type(SdType pi_type, int a);

Verdict validate_parameter(const DiscreteParameter& p);
void require_valid(const DiscreteParameter& p);

enum class BlockSide { Sp, O, GL };
std::string to_string(BlockSide s);
// O-side when the types of pi and of the dual group agree, Sp-side when
// they differ, GL-side for GLpair labels.
BlockSide block_group_type(const GroupKind& dual, const IrrLabel& pi);

struct ParameterAGroup {
    std::vector<Block> generators;  // z_{pi,a}, sorted
    Relation relation = Relation::Free;
    std::uint64_t order = 1;
    // Image of the center of the dual group: every generator (center -1) or
    // none (trivial center).
    std::vector<Block> center_image;
};

ParameterAGroup agroup(const DiscreteParameter& p);

// Checks that eta assigns +1/-1 to exactly the generators of agroup(p).
void require_character(const DiscreteParameter& p, const ParameterCharacter& eta);

// Orthogonal duals: the determinant character z_{pi,a} -> (-1)^(n_pi a).
// Two A-level characters restrict equally to the determinant-one subgroup
// iff they differ by it. Symplectic duals: the trivial character.
ParameterCharacter determinant_character(const DiscreteParameter& p);
bool same_character(const DiscreteParameter& p, const ParameterCharacter& x, const ParameterCharacter& y);

// True iff eta is trivial on the center image.
bool sgroup_factors(const DiscreteParameter& p, const ParameterCharacter& eta);

// No gaps: (pi,a) with a >= 3 implies (pi,a-2).
bool is_sans_trou(const DiscreteParameter& p);
// Consecutive blocks of a label carry opposite signs, and the block (pi,2)
// carries -1 when present.
bool is_alternating(const DiscreteParameter& p, const ParameterCharacter& eta);
bool is_cuspidal(const DiscreteParameter& p, const ParameterCharacter& eta);

using ExponentMultiset = std::vector<std::pair<std::string, Half>>;  // sorted

// Exponents (a-1)/2, (a-3)/2, ..., -(a-1)/2 of S_a.
std::vector<Half> block_exponents(int a);
ExponentMultiset infinitesimal_character(const DiscreteParameter& p);

// Reducibility point of pi against a cuspidal parameter with Jordan blocks
// of pi of sizes a_values: (a_max+1)/2 when present, otherwise 1/2 on the
// O-side and 0 on the Sp-side. Throws DomainError for GLpair labels.
Half reducibility_point(const GroupKind& dual, const IrrLabel& pi, const std::vector<int>& a_values);

}  // namespace cusp_atlas
