#include "cusp_atlas/enumerate.hpp"

#include <functional>

#include "cusp_atlas/errors.hpp"

namespace cusp_atlas {

namespace {

// Sets of distinct positive integers of the given parity summing to m, each
// listed increasingly.
std::vector<std::vector<int>> distinct_parts_of_parity(int m, int parity) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int next) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int a = next; a <= remaining; a += 2) {
            current.push_back(a);
            rec(remaining - a, a + 2);
            current.pop_back();
        }
    };
    rec(m, parity == 0 ? 2 : 1);
    return out;
}

}  // namespace

std::vector<IrrLabel> default_signature() { return {IrrLabel{"1", 1, SdType::Orthogonal}}; }

std::vector<EnhancedParameter> enumerate_parameters(const GroupKind& dual, const std::vector<IrrLabel>& signature,
                                                    int bound, SignMode mode) {
    if (dual.N > bound)
        throw DomainError("N = " + std::to_string(dual.N) + " exceeds the enumeration bound " + std::to_string(bound));
    const SdType want = dual_is_symplectic(dual) ? SdType::Symplectic : SdType::Orthogonal;
    DiscreteParameter base;
    base.dual = dual;
    for (const IrrLabel& label : signature) {
        if (label.type == SdType::GLpair) throw DomainError("GLpair label " + label.name + " cannot carry blocks");
        if (label.dim < 1) throw DomainError("label " + label.name + " has non-positive dimension");
        if (!base.labels.emplace(label.name, label).second) throw DomainError("repeated label " + label.name);
    }

    std::vector<DiscreteParameter> shapes;
    std::function<void(std::size_t, int, std::vector<Block>&)> distribute = [&](std::size_t i, int remaining,
                                                                                std::vector<Block>& blocks) {
        if (i == signature.size()) {
            if (remaining != 0) return;
            DiscreteParameter p = base;
            p.blocks = blocks;
            shapes.push_back(std::move(p));
            return;
        }
        const IrrLabel& label = signature[i];
        const int parity = block_type(label.type, 1) == want ? 1 : 0;
        for (int m = 0; m * label.dim <= remaining; ++m) {
            for (const auto& as : distinct_parts_of_parity(m, parity)) {
                const std::size_t mark = blocks.size();
                for (int a : as) blocks.push_back(Block{label.name, a});
                distribute(i + 1, remaining - m * label.dim, blocks);
                blocks.resize(mark);
            }
        }
    };
    std::vector<Block> scratch;
    distribute(0, dual.N, scratch);

    std::vector<EnhancedParameter> out;
    for (DiscreteParameter& p : shapes) {
        const std::vector<Block> gens = p.sorted_blocks();
        const auto b = static_cast<int>(gens.size());
        int pinned = -1;
        if (mode == SignMode::Canonical && !dual_is_symplectic(dual))
            for (int i = 0; i < b && pinned < 0; ++i)
                if (p.label(gens[i].pi).dim * gens[i].a % 2 == 1) pinned = i;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b); ++mask) {
            if (pinned >= 0 && (mask >> pinned & 1)) continue;
            ParameterCharacter eta;
            for (int i = 0; i < b; ++i) eta[gens[i]] = (mask >> i & 1) ? -1 : 1;
            out.emplace_back(p, std::move(eta));
        }
    }
    return out;
}

}  // namespace cusp_atlas
