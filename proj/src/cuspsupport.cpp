#include "cusp_atlas/cuspsupport.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cusp_atlas/errors.hpp"
#include "cusp_atlas/springer.hpp"

namespace cusp_atlas {

namespace {

struct Slice {
    std::string name;
    const IrrLabel* label = nullptr;
    BlockSide side = BlockSide::Sp;
    std::vector<int> as;  // increasing
    Partition partition;
    SignCharacter signs;
};

std::vector<Slice> slices(const DiscreteParameter& p, const ParameterCharacter& eta) {
    require_valid(p);
    require_character(p, eta);
    std::vector<Slice> out;
    for (const auto& name : p.used_labels()) {
        Slice s;
        s.name = name;
        s.label = &p.label(name);
        s.side = block_group_type(p.dual, *s.label);
        s.as = p.slice(name);
        s.partition = Partition(s.as);
        std::map<int, int> values;
        for (int a : s.as) values[a] = eta.at(Block{name, a});
        s.signs = SignCharacter(std::move(values));
        out.push_back(std::move(s));
    }
    return out;
}

GroupKind slice_group(const Slice& s) {
    const int m = s.partition.total();
    if (s.side == BlockSide::Sp) return make_group(Family::Sp, m);
    return make_group(m % 2 == 1 ? Family::Oodd : Family::Oeven, m);
}

CuspidalSupport start(const DiscreteParameter& p) {
    CuspidalSupport out;
    out.cusp_param.dual = p.dual;
    out.cusp_param.labels = p.labels;
    return out;
}

void finish(CuspidalSupport& out) {
    std::sort(out.gl_twists.begin(), out.gl_twists.end(), [](const GLTwist& x, const GLTwist& y) {
        return x.pi != y.pi ? x.pi < y.pi : y.e < x.e;
    });
    out.n_sharp = 0;
    for (const Block& b : out.cusp_param.blocks) out.n_sharp += out.cusp_param.label(b.pi).dim * b.a;
    std::sort(out.cusp_param.blocks.begin(), out.cusp_param.blocks.end());
    out.cusp_param.dual = GroupKind{out.cusp_param.dual.family, out.n_sharp};
}

bool same_support(const CuspidalSupport& x, const CuspidalSupport& y) {
    return x.gl_twists == y.gl_twists && x.n_sharp == y.n_sharp && x.cusp_param == y.cusp_param &&
           same_character(x.cusp_param, x.cusp_char, y.cusp_char);
}

}  // namespace

std::string levi_string(const CuspidalSupport& s) {
    std::string out;
    for (const auto& [name, ell] : s.ell) {
        if (ell == 0) continue;
        const int dim = s.cusp_param.label(name).dim;
        out += "GL" + std::to_string(dim) + "(" + name + ")" + (ell > 1 ? "^" + std::to_string(ell) : "") + " x ";
    }
    const std::string classical = s.cusp_param.dual.family == Family::Sp ? "Sp" : "SO";
    return out + classical + std::to_string(s.n_sharp);
}

ECMultiset ec_multiset(BlockSide side, const std::vector<int>& slice, int d) {
    if (side == BlockSide::GL) throw DomainError("GL-side slices have no cuspidal part");
    const int parity = side == BlockSide::Sp ? 0 : 1;
    for (int a : slice)
        if (a < 1 || a % 2 != parity)
            throw DomainError("block size " + std::to_string(a) + " has the wrong parity for the " +
                              to_string(side) + "-side");
    if (d < 0) throw DomainError("negative cuspidal size");
    std::multiset<Half> remaining;
    for (int a : slice)
        for (Half e : block_exponents(a)) remaining.insert(e);
    for (int i = 1; i <= d; ++i) {
        const int a = side == BlockSide::Sp ? 2 * i : 2 * i - 1;
        for (Half e : block_exponents(a)) {
            auto it = remaining.find(e);
            if (it == remaining.end())
                throw DomainError("cuspidal part of size d = " + std::to_string(d) + " does not fit the slice");
            remaining.erase(it);
        }
    }
    ECMultiset out;
    out.full.assign(remaining.begin(), remaining.end());
    int zeros = 0;
    for (Half e : out.full) {
        if (e > Half(0)) {
            if (remaining.count(-e) != remaining.count(e))
                throw InvariantError("exponent multiset is not symmetric at " + e.to_string());
            out.positive.push_back(e);
        } else if (e == Half(0)) {
            ++zeros;
        }
    }
    if (zeros % 2 != 0) throw DomainError("odd number of zero exponents; d has the wrong parity");
    if (side == BlockSide::O && zeros != static_cast<int>(slice.size()) - d)
        throw InvariantError("zero count differs from the number of blocks minus d");
    out.positive.insert(out.positive.end(), zeros / 2, Half(0));
    std::sort(out.positive.begin(), out.positive.end(), std::greater<>());
    return out;
}

CuspidalSupport support(const DiscreteParameter& p, const ParameterCharacter& eta) {
    CuspidalSupport out = start(p);
    for (const Slice& s : slices(p, eta)) {
        const CuspidalDatum datum = springer_datum(slice_group(s), s.partition, s.signs);
        const std::vector<int> cusp = datum.cusp_partition.increasing();
        for (int a : cusp) {
            const Block b{s.name, a};
            out.cusp_param.blocks.push_back(b);
            out.cusp_char[b] = datum.cusp_character.at(a);
        }
        const ECMultiset ec = ec_multiset(s.side, s.as, datum.d);
        for (Half e : ec.positive) out.gl_twists.push_back(GLTwist{s.name, e});
        out.ell[s.name] = static_cast<int>(ec.positive.size());
    }
    finish(out);
    return out;
}

PsiSlice psi_slice(BlockSide side, const NormalForm& nf) {
    if (side == BlockSide::GL) throw DomainError("GL-side slices have no psi map");
    PsiSlice out;
    const std::vector<int> kept = nf.partition.increasing();
    const int first_sign = kept.empty() ? 1 : nf.character.at(kept.front());
    for (std::size_t idx = 0; idx < kept.size(); ++idx) {
        const int i = static_cast<int>(idx) + 1;
        const int q = kept[idx];
        int psi = 2 * i - 1;
        if (side == BlockSide::Sp) psi = first_sign == 1 ? 2 * (i - 1) : 2 * i;
        if (psi > q || (q - psi) % 2 != 0)
            throw InvariantError("psi(" + std::to_string(q) + ") = " + std::to_string(psi) + " is not admissible");
        for (int f = 0; f < (q - psi) / 2; ++f) out.twists.push_back(Half::from_twice(q - 1 - 2 * f));
        if (psi > 0) {
            out.cusp.push_back(psi);
            out.cusp_signs.push_back(nf.character.at(q));
        }
    }
    for (const auto& [low, high] : nf.removed)
        for (int f = 0; f < (low + high) / 2; ++f) out.twists.push_back(Half::from_twice(high - 1 - 2 * f).abs());
    std::sort(out.twists.begin(), out.twists.end(), std::greater<>());
    return out;
}

CuspidalSupport support_via_psi(const DiscreteParameter& p, const ParameterCharacter& eta) {
    CuspidalSupport out = start(p);
    for (const Slice& s : slices(p, eta)) {
        const PsiSlice ps = psi_slice(s.side, eliminate(s.partition, s.signs));
        for (Half e : ps.twists) out.gl_twists.push_back(GLTwist{s.name, e});
        for (std::size_t i = 0; i < ps.cusp.size(); ++i) {
            const Block b{s.name, ps.cusp[i]};
            out.cusp_param.blocks.push_back(b);
            out.cusp_char[b] = ps.cusp_signs[i];
        }
        out.ell[s.name] = static_cast<int>(ps.twists.size());
    }
    finish(out);
    return out;
}

SupportReport check_support(const DiscreteParameter& p, const ParameterCharacter& eta) {
    return check_support(p, eta, support(p, eta));
}

SupportReport check_support(const DiscreteParameter& p, const ParameterCharacter& eta,
                            const CuspidalSupport& claimed) {
    SupportReport r;

    ExponentMultiset rebuilt = infinitesimal_character(claimed.cusp_param);
    for (const GLTwist& t : claimed.gl_twists) {
        rebuilt.emplace_back(t.pi, t.e);
        rebuilt.emplace_back(t.pi, -t.e);
    }
    std::sort(rebuilt.begin(), rebuilt.end());
    r.infinitesimal = rebuilt == infinitesimal_character(p);
    if (!r.infinitesimal) r.failures.push_back("infinitesimal character is not preserved");

    long twisted = 0;
    for (const GLTwist& t : claimed.gl_twists) twisted += p.label(t.pi).dim;
    long cusp_dim = 0;
    for (const Block& b : claimed.cusp_param.blocks) cusp_dim += claimed.cusp_param.label(b.pi).dim * b.a;
    r.dimension = cusp_dim == claimed.n_sharp && 2 * twisted + claimed.n_sharp == p.dual.N;
    if (!r.dimension) r.failures.push_back("dimension count 2 sum n_pi l_pi + N_sharp differs from N");

    try {
        const CuspidalSupport again = support(claimed.cusp_param, claimed.cusp_char);
        r.idempotent = again.gl_twists.empty() && again.cusp_param == claimed.cusp_param &&
                       same_character(again.cusp_param, again.cusp_char, claimed.cusp_char);
    } catch (const DomainError&) {
        r.idempotent = false;
    }
    if (!r.idempotent) r.failures.push_back("support of the cuspidal part is not itself");

    const bool is_self = claimed.gl_twists.empty() && claimed.cusp_param == p &&
                         same_character(p, claimed.cusp_char, eta);
    r.cuspidal_iff_self = is_self == is_cuspidal(p, eta);
    if (!r.cuspidal_iff_self) r.failures.push_back("support = self does not match the cuspidality criterion");

    r.psi_agrees = same_support(support_via_psi(p, eta), claimed);
    if (!r.psi_agrees) r.failures.push_back("support via psi differs");
    return r;
}

}  // namespace cusp_atlas
