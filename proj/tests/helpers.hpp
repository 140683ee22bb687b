// Small constructors shared by the unit tests.
#pragma once

#include <string>
#include <vector>

#include "cusp_atlas/lparams.hpp"
#include "cusp_atlas/orbits.hpp"

namespace test {

inline cusp_atlas::GroupKind sp(int N) { return cusp_atlas::make_group(cusp_atlas::Family::Sp, N); }
inline cusp_atlas::GroupKind soodd(int N) { return cusp_atlas::make_group(cusp_atlas::Family::SOodd, N); }
inline cusp_atlas::GroupKind soeven(int N) { return cusp_atlas::make_group(cusp_atlas::Family::SOeven, N); }
inline cusp_atlas::GroupKind oodd(int N) { return cusp_atlas::make_group(cusp_atlas::Family::Oodd, N); }
inline cusp_atlas::GroupKind oeven(int N) { return cusp_atlas::make_group(cusp_atlas::Family::Oeven, N); }

inline cusp_atlas::Partition part(std::vector<int> parts) { return cusp_atlas::Partition(std::move(parts)); }

// Signs listed in increasing order of the labels.
inline cusp_atlas::SignCharacter chi(const std::vector<int>& labels, const std::vector<int>& signs) {
    return cusp_atlas::SignCharacter::from_signs(labels, signs);
}

inline cusp_atlas::IrrLabel orth(const std::string& name, int dim = 1) {
    return {name, dim, cusp_atlas::SdType::Orthogonal};
}
inline cusp_atlas::IrrLabel symp(const std::string& name, int dim = 2) {
    return {name, dim, cusp_atlas::SdType::Symplectic};
}
inline cusp_atlas::IrrLabel glpair(const std::string& name, int dim = 1) {
    return {name, dim, cusp_atlas::SdType::GLpair};
}

struct SignedBlock {
    cusp_atlas::IrrLabel pi;
    int a = 1;
    int sign = 1;
};

inline cusp_atlas::DiscreteParameter parameter(const cusp_atlas::GroupKind& dual,
                                               const std::vector<SignedBlock>& blocks) {
    cusp_atlas::DiscreteParameter p;
    p.dual = dual;
    for (const auto& b : blocks) {
        p.labels[b.pi.name] = b.pi;
        p.blocks.push_back({b.pi.name, b.a});
    }
    return p;
}

inline cusp_atlas::ParameterCharacter character(const std::vector<SignedBlock>& blocks) {
    cusp_atlas::ParameterCharacter eta;
    for (const auto& b : blocks) eta[{b.pi.name, b.a}] = b.sign;
    return eta;
}

}  // namespace test
