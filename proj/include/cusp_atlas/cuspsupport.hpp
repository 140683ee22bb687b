// Cuspidal support of a discrete enhanced parameter, computed slice by slice
// through elimination, together with an independent route through the
// psi maps and a checker for the expected invariants.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "cusp_atlas/lparams.hpp"
#include "cusp_atlas/springer.hpp"

namespace cusp_atlas {

struct GLTwist {
    std::string pi;
    Half e;  // e >= 0; the pair |.|^e pi + (|.|^e pi)^dual
    auto operator<=>(const GLTwist&) const = default;
};

struct CuspidalSupport {
    std::vector<GLTwist> gl_twists;  // by label, exponents decreasing
    DiscreteParameter cusp_param;    // blocks of the cuspidal part, dual group of size n_sharp
    ParameterCharacter cusp_char;
    std::map<std::string, int> ell;  // l_pi = |E'_pi| for every label of the input
    int n_sharp = 0;

    bool operator==(const CuspidalSupport&) const = default;
};

// "GL1(p)^2 x Sp2"; GL factors in label order, then the classical part.
std::string levi_string(const CuspidalSupport& s);

struct ECMultiset {
    std::vector<Half> full;      // E_c, sorted
    std::vector<Half> positive;  // E'_c, sorted decreasing
};

// Exponents of the slice minus those of the cuspidal blocks of size d on the
// given side, split as E' and -E'. O-side zeros go to E' with multiplicity
// (k - d)/2 where k is the number of blocks in the slice. Throws DomainError
// on an incompatible d.
ECMultiset ec_multiset(BlockSide side, const std::vector<int>& slice, int d);

// One slice of the psi route: twist exponents (decreasing) from the normal
// form and from the eliminated pairs, and the cuspidal blocks psi(p~_i) > 0
// with the transported signs.
struct PsiSlice {
    std::vector<Half> twists;
    std::vector<int> cusp;
    std::vector<int> cusp_signs;
};
PsiSlice psi_slice(BlockSide side, const NormalForm& nf);

CuspidalSupport support(const DiscreteParameter& p, const ParameterCharacter& eta);
CuspidalSupport support_via_psi(const DiscreteParameter& p, const ParameterCharacter& eta);

struct SupportReport {
    bool infinitesimal = false;     // infinitesimal characters agree
    bool dimension = false;         // 2 sum n_pi l_pi + n_sharp = N
    bool idempotent = false;        // support of the cuspidal part is itself
    bool cuspidal_iff_self = false; // support is trivial exactly for cuspidal parameters
    bool psi_agrees = false;        // both routes give the same support
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

SupportReport check_support(const DiscreteParameter& p, const ParameterCharacter& eta);
// Same checks against a supplied support (used for negative controls).
SupportReport check_support(const DiscreteParameter& p, const ParameterCharacter& eta,
                            const CuspidalSupport& claimed);

}  // namespace cusp_atlas
