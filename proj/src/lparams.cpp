#include "cusp_atlas/lparams.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cusp_atlas/errors.hpp"

namespace cusp_atlas {

std::string to_string(SdType t) {
    switch (t) {
        case SdType::Orthogonal: return "orthogonal";
        case SdType::Symplectic: return "symplectic";
        case SdType::GLpair: return "glpair";
    }
    return "?";
}

SdType sd_type_from_string(const std::string& name) {
    for (SdType t : {SdType::Orthogonal, SdType::Symplectic, SdType::GLpair})
        if (to_string(t) == name) return t;
    throw DomainError("unknown self-duality type '" + name + "'");
}

std::string to_string(const Block& b) { return "(" + b.pi + "," + std::to_string(b.a) + ")"; }

std::string to_string(const ParameterCharacter& eta) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [block, sign] : eta) {
        os << (first ? "" : ",") << to_string(block) << ':' << (sign > 0 ? '+' : '-');
        first = false;
    }
    os << '}';
    return os.str();
}

const IrrLabel& DiscreteParameter::label(const std::string& name) const {
    auto it = labels.find(name);
    if (it == labels.end()) throw DomainError("unknown label '" + name + "'");
    return it->second;
}

std::vector<Block> DiscreteParameter::sorted_blocks() const {
    std::vector<Block> out = blocks;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> DiscreteParameter::slice(const std::string& pi) const {
    std::vector<int> out;
    for (const Block& b : blocks)
        if (b.pi == pi) out.push_back(b.a);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> DiscreteParameter::used_labels() const {
    std::set<std::string> names;
    for (const Block& b : blocks) names.insert(b.pi);
    return {names.begin(), names.end()};
}

bool DiscreteParameter::operator==(const DiscreteParameter& other) const {
    if (dual.family != other.dual.family || dual.N != other.dual.N) return false;
    if (sorted_blocks() != other.sorted_blocks()) return false;
    for (const auto& name : used_labels())
        if (!(label(name) == other.label(name))) return false;
    return true;
}

bool dual_is_symplectic(const GroupKind& dual) {
    if (dual.family == Family::GL) throw DomainError("GL is not a classical dual group for discrete parameters");
    return dual.family == Family::Sp;
}

SdType block_type(SdType pi_type, int a) {
    if (pi_type == SdType::GLpair) return SdType::GLpair;
    if (a % 2 == 1) return pi_type;
    return pi_type == SdType::Orthogonal ? SdType::Symplectic : SdType::Orthogonal;
}

Verdict validate_parameter(const DiscreteParameter& p) {
    Verdict v;
    auto fail = [&](std::string msg) {
        v.valid = false;
        v.problems.push_back(std::move(msg));
    };
    if (p.dual.family == Family::GL) {
        fail("dual group must be symplectic or orthogonal");
        return v;
    }
    const SdType want = dual_is_symplectic(p.dual) ? SdType::Symplectic : SdType::Orthogonal;
    for (const auto& [name, label] : p.labels) {
        if (name != label.name) fail("label key '" + name + "' differs from its name '" + label.name + "'");
        if (label.dim < 1) fail("label " + name + " has non-positive dimension " + std::to_string(label.dim));
    }
    std::set<Block> seen;
    long total = 0;
    for (const Block& b : p.blocks) {
        if (!seen.insert(b).second) fail("repeated block " + to_string(b));
        auto it = p.labels.find(b.pi);
        if (it == p.labels.end()) {
            fail("block " + to_string(b) + " uses an unknown label");
            continue;
        }
        if (b.a < 1) {
            fail("block " + to_string(b) + " has a < 1");
            continue;
        }
        const IrrLabel& label = it->second;
        total += static_cast<long>(label.dim) * b.a;
        if (label.type == SdType::GLpair) {
            fail("block " + to_string(b) + " uses a GLpair label; discrete parameters have self-dual blocks");
            continue;
        }
        if (block_type(label.type, b.a) != want)
            fail("block " + to_string(b) + " of type " + to_string(block_type(label.type, b.a)) +
                 " does not match the " + to_string(want) + " dual group");
    }
    if (total != p.dual.N)
        fail("blocks have total dimension " + std::to_string(total) + " but N = " + std::to_string(p.dual.N));
    return v;
}

void require_valid(const DiscreteParameter& p) {
    Verdict v = validate_parameter(p);
    if (!v.valid) throw DomainError("invalid parameter: " + v.problems.front());
}

std::string to_string(BlockSide s) {
    switch (s) {
        case BlockSide::Sp: return "Sp";
        case BlockSide::O: return "O";
        case BlockSide::GL: return "GL";
    }
    return "?";
}

BlockSide block_group_type(const GroupKind& dual, const IrrLabel& pi) {
    if (pi.type == SdType::GLpair) return BlockSide::GL;
    const bool pi_symplectic = pi.type == SdType::Symplectic;
    return pi_symplectic == dual_is_symplectic(dual) ? BlockSide::O : BlockSide::Sp;
}

ParameterAGroup agroup(const DiscreteParameter& p) {
    require_valid(p);
    ParameterAGroup g;
    g.generators = p.sorted_blocks();
    const auto b = static_cast<int>(g.generators.size());
    g.order = std::uint64_t{1} << b;
    if (dual_is_symplectic(p.dual)) {
        g.relation = Relation::Free;
    } else {
        g.relation = Relation::DetOneSubgroup;
        const bool odd_block = std::any_of(g.generators.begin(), g.generators.end(),
                                           [&](const Block& x) { return p.label(x.pi).dim * x.a % 2 == 1; });
        if (odd_block) g.order >>= 1;
    }
    if (p.dual.N % 2 == 0) g.center_image = g.generators;
    return g;
}

void require_character(const DiscreteParameter& p, const ParameterCharacter& eta) {
    const auto blocks = p.sorted_blocks();
    std::vector<Block> keys;
    for (const auto& [block, sign] : eta) {
        if (sign != 1 && sign != -1) throw DomainError("sign on " + to_string(block) + " must be +1 or -1");
        keys.push_back(block);
    }
    if (keys != blocks) throw DomainError("character " + to_string(eta) + " does not match the Jordan blocks");
}

ParameterCharacter determinant_character(const DiscreteParameter& p) {
    ParameterCharacter out;
    const bool symplectic = dual_is_symplectic(p.dual);
    for (const Block& b : p.blocks)
        out[b] = symplectic || p.label(b.pi).dim * b.a % 2 == 0 ? 1 : -1;
    return out;
}

bool same_character(const DiscreteParameter& p, const ParameterCharacter& x, const ParameterCharacter& y) {
    if (x == y) return true;
    if (dual_is_symplectic(p.dual) || x.size() != y.size()) return false;
    const ParameterCharacter det = determinant_character(p);
    for (const auto& [block, sign] : x) {
        auto it = y.find(block);
        if (it == y.end() || it->second != sign * det.at(block)) return false;
    }
    return true;
}

bool sgroup_factors(const DiscreteParameter& p, const ParameterCharacter& eta) {
    require_character(p, eta);
    int value = 1;
    for (const Block& b : agroup(p).center_image) value *= eta.at(b);
    return value == 1;
}

bool is_sans_trou(const DiscreteParameter& p) {
    std::set<Block> present(p.blocks.begin(), p.blocks.end());
    return std::all_of(p.blocks.begin(), p.blocks.end(),
                       [&](const Block& b) { return b.a < 3 || present.count(Block{b.pi, b.a - 2}) > 0; });
}

bool is_alternating(const DiscreteParameter& p, const ParameterCharacter& eta) {
    require_character(p, eta);
    for (const auto& name : p.used_labels()) {
        const auto as = p.slice(name);
        for (std::size_t i = 1; i < as.size(); ++i)
            if (eta.at(Block{name, as[i]}) == eta.at(Block{name, as[i - 1]})) return false;
        if (as.front() % 2 == 0 && eta.at(Block{name, as.front()}) != -1) return false;
    }
    return true;
}

bool is_cuspidal(const DiscreteParameter& p, const ParameterCharacter& eta) {
    require_valid(p);
    return is_sans_trou(p) && is_alternating(p, eta);
}

std::vector<Half> block_exponents(int a) {
    std::vector<Half> out;
    for (int j = 0; j < a; ++j) out.push_back(Half::from_twice(a - 1 - 2 * j));
    return out;
}

ExponentMultiset infinitesimal_character(const DiscreteParameter& p) {
    ExponentMultiset out;
    for (const Block& b : p.blocks)
        for (Half e : block_exponents(b.a)) out.emplace_back(b.pi, e);
    std::sort(out.begin(), out.end());
    return out;
}

Half reducibility_point(const GroupKind& dual, const IrrLabel& pi, const std::vector<int>& a_values) {
    const BlockSide side = block_group_type(dual, pi);
    if (side == BlockSide::GL) throw DomainError("reducibility point needs a self-dual label, got " + pi.name);
    if (!a_values.empty()) return Half::from_twice(*std::max_element(a_values.begin(), a_values.end()) + 1);
    return side == BlockSide::O ? Half::from_twice(1) : Half(0);
}

}  // namespace cusp_atlas
