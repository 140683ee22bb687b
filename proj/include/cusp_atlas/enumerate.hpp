// Exhaustive enumeration of discrete enhanced parameters built from a fixed
// list of formal labels.
#pragma once

#include <utility>
#include <vector>

#include "cusp_atlas/lparams.hpp"

namespace cusp_atlas {

enum class SignMode {
    // One character per restriction to the determinant-one subgroup
    // (orthogonal duals fix the sign of the first block with odd n_pi a).
    Canonical,
    // Every sign vector on the Jordan blocks.
    AllSignVectors,
};

using EnhancedParameter = std::pair<DiscreteParameter, ParameterCharacter>;

// Default signature: one orthogonal label "1" of dimension 1.
std::vector<IrrLabel> default_signature();

// Every valid parameter of the dual group whose labels come from the
// signature, with every admissible character. Throws DomainError when
// dual.N exceeds bound or the signature contains a GLpair label.
std::vector<EnhancedParameter> enumerate_parameters(const GroupKind& dual, const std::vector<IrrLabel>& signature,
                                                    int bound, SignMode mode = SignMode::Canonical);

}  // namespace cusp_atlas
