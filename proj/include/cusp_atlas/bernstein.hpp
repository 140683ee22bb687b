// Dual-side Bernstein data of an inertial triple: the torus dimension, the
// relative Weyl group with its R-group, and the parameters of the graded
// Hecke algebra.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cusp_atlas/lparams.hpp"

namespace cusp_atlas {

struct GLFactor {
    IrrLabel pi;
    int ell = 0;
    int torsion = 1;            // order of the twist stabilizer, taken as given
    int partner_m_prime = 0;    // m'_{pi zeta}: dimension of the partner slice in the cuspidal part
    std::optional<Half> x_minus;  // explicit override of the partner reducibility point
};

struct InertialTriple {
    GroupKind dual{Family::Sp, 0};
    std::vector<GLFactor> gl_factors;
    DiscreteParameter cusp;  // the cuspidal part, dual group of size N_sharp
};

// m'_pi: total size of the blocks of pi in the cuspidal part.
int m_prime(const InertialTriple& t, const std::string& pi);

// Labels distinct, ell >= 0, torsion >= 1, cuspidal part valid and
// m'_pi >= m'_{pi zeta}. Throws DomainError otherwise.
void require_normalized(const InertialTriple& t);

enum class RootType { Trivial, A, B, C, D };
std::string to_string(RootType r);

struct WeylFactor {
    std::string pi;
    RootType type = RootType::Trivial;
    int rank = 0;       // subscript of the type; A_{l-1} has rank l-1
    bool star = false;  // D_l extended by an outer involution
    bool operator==(const WeylFactor&) const = default;
};

struct RGroup {
    // Each generator is s_i or a product s_i s_j, given by factor names.
    std::vector<std::vector<std::string>> generators;
    std::uint64_t order = 1;
    bool operator==(const RGroup&) const = default;
};

struct WeylDescriptor {
    std::vector<WeylFactor> factors;  // sorted by label name
    RGroup r_group;
    bool operator==(const WeylDescriptor&) const = default;
};

// Representation-side description of one GL factor.
enum class RepCase {
    Reducible,    // self-dual, some positive twist reduces
    Irreducible,  // self-dual, no positive twist reduces
    NotSelfDual,
};

struct RepFactor {
    std::string pi;
    int n = 1;
    int ell = 0;
    RepCase which = RepCase::Reducible;
    bool in_jord = false;  // Reducible only: pi occurs in the cuspidal part
};

// The same descriptor from the representation side. dual fixes the R-group
// rule together with n_sharp.
WeylDescriptor weyl_descriptor(const GroupKind& dual, int n_sharp, const std::vector<RepFactor>& factors);
WeylDescriptor weyl_descriptor(const InertialTriple& t);

struct HeckeFactor {
    std::string pi;
    RootType type = RootType::Trivial;
    int rank = 0;
    Half x_plus, x_minus, lambda, lambda_star;
    std::vector<int> mu;  // one value per simple root, the short root last for type B
    int torsion = 1;
};

// Reducibility point of a partner slice of size m' on the given side:
// Sp-side m' = d(d+1) and O-side m' = d^2, 0 meaning absent.
Half partner_reducibility_point(BlockSide side, int m_prime);

// theta holds one sign per gl factor (empty means all +1).
std::vector<HeckeFactor> hecke_parameters(const InertialTriple& t, const std::vector<int>& theta = {});

// Short-root parameter read off a cuspidal partition: its largest part + 1.
int table_short_parameter(const Partition& cusp);

struct TorusDim {
    int dim = 0;
    std::vector<std::pair<std::string, int>> torsion;  // (label, t_i) in factor order
};
TorusDim torus_dim(const InertialTriple& t);

}  // namespace cusp_atlas
