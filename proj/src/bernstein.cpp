#include "cusp_atlas/bernstein.hpp"

#include <algorithm>
#include <set>

#include "cusp_atlas/errors.hpp"

namespace cusp_atlas {

int m_prime(const InertialTriple& t, const std::string& pi) {
    int total = 0;
    for (int a : t.cusp.slice(pi)) total += a;
    return total;
}

Half partner_reducibility_point(BlockSide side, int m) {
    if (side == BlockSide::GL) throw DomainError("GL-side factors have no reducibility point");
    if (m == 0) return side == BlockSide::O ? Half::from_twice(1) : Half(0);
    for (int d = 1; d * d <= m; ++d) {
        if (side == BlockSide::Sp && d * (d + 1) == m) return Half::from_twice(2 * d + 1);
        if (side == BlockSide::O && d * d == m) return Half(d);
    }
    throw DomainError("partner size m' = " + std::to_string(m) + " is not the size of a cuspidal slice on the " +
                      to_string(side) + "-side");
}

void require_normalized(const InertialTriple& t) {
    if (t.cusp.dual.family != t.dual.family)
        throw DomainError("cuspidal part must live in a dual group of the same family");
    require_valid(t.cusp);
    std::set<std::string> names;
    long twisted = 0;
    for (const GLFactor& f : t.gl_factors) {
        if (!names.insert(f.pi.name).second) throw DomainError("repeated gl factor label " + f.pi.name);
        if (f.ell < 0) throw DomainError("negative multiplicity for " + f.pi.name);
        if (f.torsion < 1) throw DomainError("torsion order must be positive for " + f.pi.name);
        if (f.pi.dim < 1) throw DomainError("label " + f.pi.name + " has non-positive dimension");
        if (auto it = t.cusp.labels.find(f.pi.name); it != t.cusp.labels.end() && !(it->second == f.pi))
            throw DomainError("label " + f.pi.name + " differs between the gl factor and the cuspidal part");
        twisted += static_cast<long>(f.pi.dim) * f.ell;
        const BlockSide side = block_group_type(t.dual, f.pi);
        if (side == BlockSide::GL) {
            if (f.partner_m_prime != 0 || f.x_minus) throw DomainError("GLpair factor " + f.pi.name + " has no partner");
            continue;
        }
        if (f.partner_m_prime < 0) throw DomainError("negative partner size for " + f.pi.name);
        if (m_prime(t, f.pi.name) < f.partner_m_prime)
            throw DomainError("triple is not normalized: m'(" + f.pi.name + ") = " +
                              std::to_string(m_prime(t, f.pi.name)) + " < partner m' = " +
                              std::to_string(f.partner_m_prime));
        partner_reducibility_point(side, f.partner_m_prime);
    }
    if (2 * twisted + t.cusp.dual.N != t.dual.N)
        throw DomainError("2 sum n_i l_i + N_sharp = " + std::to_string(2 * twisted + t.cusp.dual.N) +
                          " differs from N = " + std::to_string(t.dual.N));
}

std::string to_string(RootType r) {
    switch (r) {
        case RootType::Trivial: return "trivial";
        case RootType::A: return "A";
        case RootType::B: return "B";
        case RootType::C: return "C";
        case RootType::D: return "D";
    }
    return "?";
}

WeylDescriptor weyl_descriptor(const GroupKind& dual, int n_sharp, const std::vector<RepFactor>& input) {
    std::vector<RepFactor> factors = input;
    std::sort(factors.begin(), factors.end(), [](const RepFactor& x, const RepFactor& y) { return x.pi < y.pi; });
    WeylDescriptor out;
    std::vector<const RepFactor*> starred;
    for (const RepFactor& f : factors) {
        WeylFactor w{f.pi, RootType::Trivial, 0, false};
        if (f.ell > 0) {
            switch (f.which) {
                case RepCase::NotSelfDual: w = {f.pi, RootType::A, f.ell - 1, false}; break;
                case RepCase::Irreducible: w = {f.pi, RootType::D, f.ell, true}; break;
                case RepCase::Reducible: w = {f.pi, f.in_jord ? RootType::B : RootType::C, f.ell, false}; break;
            }
        }
        if (w.star) starred.push_back(&f);
        out.factors.push_back(w);
    }
    const bool pure_gl_even = dual.family == Family::SOeven && n_sharp < 4;
    std::vector<std::string> odd;
    for (const RepFactor* f : starred) {
        if (pure_gl_even && f->n % 2 == 1)
            odd.push_back(f->pi);
        else
            out.r_group.generators.push_back({f->pi});
    }
    for (std::size_t i = 1; i < odd.size(); ++i) out.r_group.generators.push_back({odd[i - 1], odd[i]});
    out.r_group.order = std::uint64_t{1} << out.r_group.generators.size();
    return out;
}

WeylDescriptor weyl_descriptor(const InertialTriple& t) {
    require_normalized(t);
    std::vector<RepFactor> factors;
    for (const GLFactor& f : t.gl_factors) {
        RepFactor r{f.pi.name, f.pi.dim, f.ell, RepCase::Reducible, false};
        const BlockSide side = block_group_type(t.dual, f.pi);
        const int m = m_prime(t, f.pi.name);
        if (side == BlockSide::GL)
            r.which = RepCase::NotSelfDual;
        else if (side == BlockSide::O && m == 0)
            r.which = RepCase::Irreducible;
        else
            r.in_jord = m != 0;
        factors.push_back(r);
    }
    return weyl_descriptor(t.dual, t.cusp.dual.N, factors);
}

std::vector<HeckeFactor> hecke_parameters(const InertialTriple& t, const std::vector<int>& theta) {
    const WeylDescriptor w = weyl_descriptor(t);
    if (!theta.empty() && theta.size() != t.gl_factors.size())
        throw DomainError("theta needs one sign per gl factor");
    for (int s : theta)
        if (s != 1 && s != -1) throw DomainError("theta signs must be +1 or -1");
    std::vector<HeckeFactor> out;
    for (std::size_t i = 0; i < t.gl_factors.size(); ++i) {
        const GLFactor& f = t.gl_factors[i];
        const WeylFactor& wf = *std::find_if(w.factors.begin(), w.factors.end(),
                                             [&](const WeylFactor& x) { return x.pi == f.pi.name; });
        HeckeFactor h;
        h.pi = f.pi.name;
        h.type = wf.type;
        h.rank = wf.rank;
        h.torsion = f.torsion;
        const BlockSide side = block_group_type(t.dual, f.pi);
        if (side != BlockSide::GL) {
            h.x_plus = reducibility_point(t.dual, f.pi, t.cusp.slice(f.pi.name));
            h.x_minus = f.x_minus ? *f.x_minus : partner_reducibility_point(side, f.partner_m_prime);
            if (h.x_minus < Half(0) || h.x_plus < h.x_minus)
                throw DomainError("triple is not normalized: need x+ >= x- >= 0 for " + f.pi.name);
            h.lambda = h.x_plus + h.x_minus;
            h.lambda_star = h.x_plus - h.x_minus;
        }
        int roots = h.rank;
        if (h.type == RootType::D && h.rank < 2) roots = 0;
        if (h.type == RootType::Trivial) roots = 0;
        h.mu.assign(static_cast<std::size_t>(roots), 2);
        if (h.type == RootType::B && roots > 0) {
            const int sign = theta.empty() ? 1 : theta[i];
            const Half value = sign == 1 ? h.lambda + h.lambda_star : h.lambda - h.lambda_star;
            if (!value.is_integer()) throw InvariantError("short-root parameter " + value.to_string() + " is not integral");
            h.mu.back() = value.twice() / 2;
        }
        out.push_back(std::move(h));
    }
    return out;
}

int table_short_parameter(const Partition& cusp) {
    if (cusp.empty()) throw DomainError("an empty cuspidal partition has no short-root parameter");
    return cusp.parts().front() + 1;
}

TorusDim torus_dim(const InertialTriple& t) {
    TorusDim out;
    for (const GLFactor& f : t.gl_factors) {
        out.dim += f.ell;
        out.torsion.emplace_back(f.pi.name, f.torsion);
    }
    return out;
}

}  // namespace cusp_atlas
