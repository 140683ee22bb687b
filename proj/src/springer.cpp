#include "cusp_atlas/springer.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cusp_atlas/errors.hpp"
#include "cusp_atlas/symbols.hpp"

namespace cusp_atlas {

namespace {

using SignedParts = std::vector<std::pair<int, int>>;  // (part, sign), increasing parts

SignedParts signed_parts(const Partition& p, const SignCharacter& eta) {
    SignedParts out;
    for (int q : p.increasing()) out.emplace_back(q, eta.at(q));
    return out;
}

void require_distinct_parts(const Partition& p) {
    if (static_cast<int>(p.distinct_parts().size()) != p.length())
        throw DomainError("elimination needs pairwise distinct parts, got " + to_string(p));
}

bool is_normal(const SignedParts& sp) {
    for (std::size_t i = 1; i < sp.size(); ++i)
        if (sp[i].second == sp[i - 1].second) return false;
    return true;
}

int signed_product_over_multiplicities(const Partition& p, const SignCharacter& eta) {
    int value = 1;
    for (int q : eta.labels())
        if (p.multiplicity(q) % 2 == 1) value *= eta.at(q);
    return value;
}

std::vector<int> arithmetic_parts(int first, int count) {
    std::vector<int> out;
    for (int i = 0; i < count; ++i) out.push_back(first + 2 * i);
    return out;
}

CuspidalDatum datum_from_d(const GroupKind& kind, Side side, int d, int dprime, int lift) {
    CuspidalDatum out;
    out.d = d;
    out.dprime = dprime;
    if (side == Side::Symplectic) {
        const int rest = kind.N - d * (d + 1);
        if (rest < 0 || rest % 2 != 0) throw InvariantError("cuspidal rank exceeds N for Sp_" + std::to_string(kind.N));
        out.torus_rank = rest / 2;
        out.cusp_partition = Partition(arithmetic_parts(2, d));
        out.cusp_character = symplectic_cuspidal_character(d);
    } else {
        const int rest = kind.N - d * d;
        if (rest < 0 || rest % 2 != 0) throw InvariantError("cuspidal rank exceeds N for O_" + std::to_string(kind.N));
        out.torus_rank = rest / 2;
        out.cusp_partition = Partition(arithmetic_parts(1, d));
        out.lift = d == 0 ? 0 : lift;
        if (out.lift != 0) out.cusp_character = orthogonal_cuspidal_character(d, out.lift);
    }
    return out;
}

}  // namespace

Side side_of(Family f) {
    if (f == Family::Sp) return Side::Symplectic;
    if (is_orthogonal(f)) return Side::Orthogonal;
    throw DomainError("no generalized Springer side for " + to_string(f));
}

std::pair<Partition, SignCharacter> eliminate_once(const Partition& p, const SignCharacter& eta, int j) {
    require_distinct_parts(p);
    const SignedParts sp = signed_parts(p, eta);
    if (j < 1 || j >= static_cast<int>(sp.size()))
        throw DomainError("elimination index " + std::to_string(j) + " out of range for " + to_string(p));
    const auto [low, low_sign] = sp[j - 1];
    const auto [high, high_sign] = sp[j];
    if (low_sign != high_sign)
        throw DomainError("signs differ on z_" + std::to_string(low) + " and z_" + std::to_string(high));
    std::vector<int> rest;
    for (const auto& [q, s] : sp)
        if (q != low && q != high) rest.push_back(q);
    return {Partition(rest), eta.without(low).without(high)};
}

NormalForm eliminate(const Partition& p, const SignCharacter& eta) {
    require_distinct_parts(p);
    NormalForm nf{p, eta, {}};
    for (bool changed = true; changed;) {
        changed = false;
        const SignedParts sp = signed_parts(nf.partition, nf.character);
        for (std::size_t i = 1; i < sp.size(); ++i) {
            if (sp[i].second != sp[i - 1].second) continue;
            nf.removed.emplace_back(sp[i - 1].first, sp[i].first);
            auto next = eliminate_once(nf.partition, nf.character, static_cast<int>(i));
            nf.partition = std::move(next.first);
            nf.character = std::move(next.second);
            changed = true;
            break;
        }
    }
    return nf;
}

std::vector<NormalForm> all_eliminations(const Partition& p, const SignCharacter& eta) {
    require_distinct_parts(p);
    using Removed = std::vector<std::pair<int, int>>;
    std::set<std::pair<SignedParts, Removed>> outcomes;
    std::set<std::pair<SignedParts, Removed>> visited;
    std::function<void(const SignedParts&, Removed)> explore = [&](const SignedParts& state, Removed removed) {
        std::sort(removed.begin(), removed.end());
        if (!visited.emplace(state, removed).second) return;
        if (is_normal(state)) {
            outcomes.emplace(state, removed);
            return;
        }
        for (std::size_t i = 1; i < state.size(); ++i) {
            if (state[i].second != state[i - 1].second) continue;
            SignedParts next = state;
            next.erase(next.begin() + static_cast<long>(i) - 1, next.begin() + static_cast<long>(i) + 1);
            Removed more = removed;
            more.emplace_back(state[i - 1].first, state[i].first);
            explore(next, std::move(more));
        }
    };
    explore(signed_parts(p, eta), {});
    std::vector<NormalForm> out;
    for (const auto& [state, removed] : outcomes) {
        std::vector<int> parts;
        std::map<int, int> values;
        for (const auto& [q, s] : state) {
            parts.push_back(q);
            values[q] = s;
        }
        out.push_back(NormalForm{Partition(parts), SignCharacter(std::move(values)), removed});
    }
    return out;
}

std::vector<int> sign_word(const NormalForm& nf) {
    std::vector<int> out;
    for (int q : nf.partition.increasing()) out.push_back(nf.character.at(q));
    return out;
}

int d_from_normal_form(Side side, const Partition& normal, const SignCharacter& eta) {
    require_distinct_parts(normal);
    const SignedParts sp = signed_parts(normal, eta);
    if (!is_normal(sp)) throw DomainError("partition " + to_string(normal) + " is not in elimination normal form");
    const int k = static_cast<int>(sp.size());
    if (side == Side::Orthogonal || k == 0) return k;
    return sp.front().second == 1 ? k - 1 : k;
}

int d_from_defect(Side side, int dprime) {
    if (side == Side::Orthogonal) return std::abs(dprime);
    return dprime >= 1 ? dprime - 1 : -dprime;
}

CuspidalDatum springer_datum(const GroupKind& kind, const Partition& p, const SignCharacter& eta) {
    const Side side = side_of(kind.family);
    const int dprime = defect_formula(kind, p, eta);
    const int symbol_dprime = defect(symbol_from_character(kind, p, eta));
    if (dprime != symbol_dprime)
        throw InvariantError("defect formula " + std::to_string(dprime) + " differs from symbol defect " +
                             std::to_string(symbol_dprime) + " for " + to_string(p));
    const NormalForm nf = eliminate(p, eta);
    const int d = d_from_defect(side, dprime);
    const int d_normal = d_from_normal_form(side, nf.partition, nf.character);
    if (d != d_normal)
        throw InvariantError("d from defect (" + std::to_string(d) + ") differs from d from normal form (" +
                             std::to_string(d_normal) + ") for " + to_string(p) + " " + to_string(eta));
    const int lift = nf.partition.empty() ? 0 : nf.character.at(nf.partition.increasing().front());
    return datum_from_d(kind, side, d, dprime, lift);
}

CuspidalDatum springer_datum_general(const GroupKind& kind, const Partition& p, const SignCharacter& eta) {
    const Side side = side_of(kind.family);
    const int dprime = defect(symbol_for_pair(kind, p, eta));
    const int d = d_from_defect(side, dprime);
    int lift = 0;
    if (side == Side::Orthogonal && d > 0) {
        if (kind.N % 2 == 1) {
            // Match the central value: eta(-1) = eps(-1).
            const int central = signed_product_over_multiplicities(p, eta);
            lift = orthogonal_cuspidal_character(d, 1).product() == central ? 1 : -1;
        } else if (!eta.empty()) {
            lift = eta.at(eta.labels().front());
        }
    }
    return datum_from_d(kind, side, d, dprime, lift);
}

std::string to_string(OCase c) {
    switch (c) {
        case OCase::I: return "I";
        case OCase::II: return "II";
        case OCase::III: return "III";
    }
    return "?";
}

std::string to_string(WeylRep w) {
    switch (w) {
        case WeylRep::Base: return "Base";
        case WeylRep::Extended: return "Extended";
        case WeylRep::Induced: return "Induced";
    }
    return "?";
}

OSpringerDatum springer_O(const GroupKind& kind, const Partition& p, const SignCharacter& eta) {
    if (!is_orthogonal(kind.family)) throw DomainError("springer_O needs an orthogonal group");
    const GroupKind o = make_group(kind.N % 2 == 1 ? Family::Oodd : Family::Oeven, kind.N);
    require_valid(o, p);
    require_character(o, p, eta);
    OSpringerDatum out;
    if (is_degenerate(o, p)) {
        out.which = OCase::III;
        out.datum = springer_datum_general(o, p, eta);
        out.weyl_rep = WeylRep::Induced;
        out.fused_orbits = true;
    } else {
        out.datum = is_distinguished(o, p) ? springer_datum(o, p, eta) : springer_datum_general(o, p, eta);
        if (o.N % 2 == 1) {
            out.chi = signed_product_over_multiplicities(p, eta);
            out.which = OCase::I;
        } else {
            out.chi = eta.at(eta.labels().front());
            out.which = out.datum.d >= 2 ? OCase::I : OCase::II;
        }
        out.weyl_rep = out.which == OCase::I ? WeylRep::Base : WeylRep::Extended;
    }
    out.torus_rank = out.datum.torus_rank;
    out.o_block = out.datum.d * out.datum.d;
    return out;
}

ProductDatum springer_product(const std::vector<ProductFactor>& factors) {
    if (factors.empty()) throw DomainError("springer_product needs at least one factor");
    ProductDatum out;
    std::vector<int> by_case[3];
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        if (f.m <= 0) throw DomainError("orthogonal factor sizes must be positive");
        const GroupKind kind = make_group(f.m % 2 == 1 ? Family::Oodd : Family::Oeven, f.m);
        out.factors.push_back(springer_O(kind, f.partition, f.character));
        by_case[static_cast<int>(out.factors.back().which)].push_back(static_cast<int>(i) + 1);
    }
    for (const auto& group : by_case) out.arrangement.insert(out.arrangement.end(), group.begin(), group.end());
    out.p = static_cast<int>(by_case[0].size());
    out.q = out.p + static_cast<int>(by_case[1].size());
    out.r = static_cast<int>(factors.size());

    auto at = [&](int position) { return out.arrangement[position - 1]; };
    auto link = [&](std::vector<std::pair<int, int>>& gens, int a, int b) {
        if (a >= 1 && b >= 1) gens.emplace_back(at(a), at(b));
    };
    if (out.p == 0) {
        for (int k = 1; k < out.q; ++k) link(out.c_orbit, k, k + 1);
        for (int k = std::max(out.q, 1); k < out.r; ++k) link(out.c_induced, k, k + 1);
    } else {
        for (int k = 1; k < out.p; ++k) link(out.c_levi, k, k + 1);
        for (int j = out.p + 1; j <= out.q; ++j) link(out.c_orbit, out.p, j);
        for (int j = out.q + 1; j <= out.r; ++j) link(out.c_induced, out.p, j);
    }
    auto chi = [&](int index) { return out.factors[index - 1].chi; };
    for (const auto& [a, b] : out.c_levi) out.chi_levi.push_back(chi(a) * chi(b));
    for (const auto& [a, b] : out.c_orbit) out.chi_orbit.push_back(chi(a) * chi(b));

    if (out.r == 1)
        out.weyl_rep = out.factors.front().weyl_rep;
    else if (!out.c_induced.empty())
        out.weyl_rep = WeylRep::Induced;
    else if (!out.c_orbit.empty())
        out.weyl_rep = WeylRep::Extended;
    else
        out.weyl_rep = WeylRep::Base;
    return out;
}

Census springer_census(const GroupKind& kind) {
    Census census;
    for (const Partition& p : partitions_of(kind.N)) {
        if (!validate_partition(kind, p).valid) continue;
        if (kind.family == Family::GL) {
            census.pairs += 1;
            census.by_d[0] += 1;
            continue;
        }
        const ComponentGroup g = component_group(kind, p);
        const auto n = static_cast<int>(g.generators.size());
        const bool quotient = g.relation == Relation::QuotientByFullProduct;
        const int orbits = orbit_count(kind, p);
        // Under the quotient, a character and its global flip coincide; keep
        // the representative with eta(z_{first}) = +1.
        const std::uint64_t count = quotient && n > 0 ? (std::uint64_t{1} << (n - 1)) : (std::uint64_t{1} << n);
        for (std::uint64_t mask = 0; mask < count; ++mask) {
            std::vector<int> signs(n, 1);
            for (int b = 0; b < n; ++b)
                if (mask >> b & 1) signs[n - 1 - b] = -1;
            const auto eta = SignCharacter::from_signs(g.generators, signs);
            const int d = springer_datum_general(kind, p, eta).d;
            census.pairs += orbits;
            census.by_d[d] += orbits;
        }
    }
    return census;
}

}  // namespace cusp_atlas
