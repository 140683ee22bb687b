#include "cusp_atlas/selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cusp_atlas/bernstein.hpp"
#include "cusp_atlas/cuspsupport.hpp"
#include "cusp_atlas/enumerate.hpp"
#include "cusp_atlas/springer.hpp"
#include "cusp_atlas/symbols.hpp"

namespace cusp_atlas {

namespace {

long long bipartitions(int n) {
    std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int m = part; m <= n; ++m) p[m] += p[m - part];
    long long total = 0;
    for (int k = 0; k <= n; ++k) total += p[k] * p[n - k];
    return total;
}

struct Pair {
    GroupKind kind;
    Partition partition;
    SignCharacter eta;
};

void for_each_distinguished_pair(int max_n, const std::function<void(const Pair&)>& visit) {
    for (int N = 1; N <= max_n; ++N) {
        std::vector<GroupKind> kinds{make_group(N % 2 == 1 ? Family::Oodd : Family::Oeven, N)};
        if (N % 2 == 0) kinds.push_back(make_group(Family::Sp, N));
        for (const GroupKind& kind : kinds) {
            for (const Partition& p : partitions_of(N)) {
                if (!validate_partition(kind, p).valid || !is_distinguished(kind, p)) continue;
                const auto gens = component_group(kind, p).generators;
                const auto k = static_cast<int>(gens.size());
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
                    std::vector<int> signs(k);
                    for (int i = 0; i < k; ++i) signs[i] = (mask >> i & 1) ? -1 : 1;
                    visit(Pair{kind, p, SignCharacter::from_signs(gens, signs)});
                }
            }
        }
    }
}

std::string describe(const Pair& x) {
    return to_string(x.kind.family) + "_" + std::to_string(x.kind.N) + " " + to_string(x.partition) + " " +
           to_string(x.eta);
}

template <typename F>
PropertyResult guarded(const std::string& name, F&& body) {
    PropertyResult r;
    r.name = name;
    try {
        body(r);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

void fail(PropertyResult& r, const std::string& detail) {
    if (r.passed) r.detail = detail;
    r.passed = false;
}

}  // namespace

std::vector<PropertyResult> run_selfcheck(int bound) {
    std::vector<PropertyResult> out;

    out.push_back(guarded("springer_count", [&](PropertyResult& r) {
        for (int N = 0; N <= std::min(bound, 12); N += 2) {
            long long expected = 0;
            for (int d = 0; d * (d + 1) <= N; ++d) expected += bipartitions((N - d * (d + 1)) / 2);
            const Census c = springer_census(make_group(Family::Sp, N));
            ++r.cases;
            if (c.pairs != expected)
                fail(r, "Sp_" + std::to_string(N) + ": " + std::to_string(c.pairs) + " pairs, expected " +
                            std::to_string(expected));
        }
    }));

    out.push_back(guarded("defect_coherence", [&](PropertyResult& r) {
        for_each_distinguished_pair(std::min(bound, 20), [&](const Pair& x) {
            ++r.cases;
            const int formula = defect_formula(x.kind, x.partition, x.eta);
            const USymbol s = symbol_from_character(x.kind, x.partition, x.eta);
            if (!check_symbol(s, x.kind.N).valid || defect(s) != formula ||
                !(symbol_for_pair(x.kind, x.partition, x.eta) == s))
                fail(r, "symbol mismatch at " + describe(x));
            springer_datum(x.kind, x.partition, x.eta);
            const auto inc = x.partition.increasing();
            for (std::size_t j = 1; j < inc.size(); ++j) {
                if (x.eta.at(inc[j - 1]) != x.eta.at(inc[j])) continue;
                const auto [q, eta] = eliminate_once(x.partition, x.eta, static_cast<int>(j));
                const GroupKind smaller = make_group(x.kind.family, q.total());
                if (defect_formula(smaller, q, eta) != formula) fail(r, "elimination changes the defect at " + describe(x));
            }
        });
    }));

    out.push_back(guarded("elimination_order_independence", [&](PropertyResult& r) {
        for_each_distinguished_pair(std::min(bound, 16), [&](const Pair& x) {
            ++r.cases;
            const BlockSide side = x.kind.family == Family::Sp ? BlockSide::Sp : BlockSide::O;
            const NormalForm reference = eliminate(x.partition, x.eta);
            const PsiSlice expected = psi_slice(side, reference);
            for (const NormalForm& nf : all_eliminations(x.partition, x.eta)) {
                const PsiSlice got = psi_slice(side, nf);
                if (sign_word(nf) != sign_word(reference) || got.twists != expected.twists ||
                    got.cusp != expected.cusp || got.cusp_signs != expected.cusp_signs)
                    fail(r, "order dependence at " + describe(x));
            }
        });
    }));

    out.push_back(guarded("cuspidal_fixed_points", [&](PropertyResult& r) {
        std::vector<GroupKind> kinds;
        for (int d = 1; d * (d + 1) <= std::min(bound, 20); ++d) kinds.push_back(make_group(Family::Sp, d * (d + 1)));
        for (int d = 1; d * d <= std::max(std::min(bound, 25), 0); ++d)
            kinds.push_back(make_group(d % 2 == 1 ? Family::SOodd : Family::SOeven, d * d));
        for (const GroupKind& kind : kinds) {
            ++r.cases;
            const auto pair = cuspidal_pair(kind);
            const CuspidalDatum datum = springer_datum(kind, pair->partition, pair->character);
            if (datum.torus_rank != 0 || datum.d != pair->d || !(datum.cusp_partition.parts() == pair->partition.parts()) ||
                datum.cusp_character.values() != pair->character.values())
                fail(r, "cuspidal pair of " + to_string(kind.family) + "_" + std::to_string(kind.N) + " is not fixed");
        }
    }));

    out.push_back(guarded("support_invariants", [&](PropertyResult& r) {
        for (Family f : {Family::Sp, Family::SOodd, Family::SOeven}) {
            for (int N = 0; N <= std::min(bound, 14); ++N) {
                if ((f == Family::SOodd) != (N % 2 == 1)) continue;
                for (const auto& [p, eta] :
                     enumerate_parameters(GroupKind{f, N}, default_signature(), bound, SignMode::AllSignVectors)) {
                    ++r.cases;
                    const SupportReport report = check_support(p, eta);
                    if (!report.ok())
                        fail(r, to_string(f) + "_" + std::to_string(N) + " " + to_string(eta) + ": " +
                                    report.failures.front());
                }
            }
        }
    }));

    out.push_back(guarded("hecke_short_root", [&](PropertyResult& r) {
        // Symplectic dual group: an orthogonal label sits on the Sp-side, a
        // symplectic one on the O-side.
        for (int d = 1; d <= 6; ++d) {
            for (SdType type : {SdType::Orthogonal, SdType::Symplectic}) {
                ++r.cases;
                const IrrLabel pi{"p", type == SdType::Orthogonal ? 1 : 2, type};
                std::vector<int> parts;
                for (int i = 1; i <= d; ++i) parts.push_back(type == SdType::Orthogonal ? 2 * i : 2 * i - 1);
                InertialTriple t;
                t.cusp.labels[pi.name] = pi;
                for (int a : parts) t.cusp.blocks.push_back(Block{pi.name, a});
                int n_sharp = 0;
                for (int a : parts) n_sharp += pi.dim * a;
                t.cusp.dual = make_group(Family::Sp, n_sharp);
                t.gl_factors.push_back(GLFactor{pi, 2, 1, 0, std::nullopt});
                t.dual = make_group(Family::Sp, n_sharp + 2 * 2 * pi.dim);
                const auto h = hecke_parameters(t, {1});
                if (h.front().mu.back() != table_short_parameter(Partition(parts)))
                    fail(r, "short-root parameter differs from a_max + 1 at d = " + std::to_string(d));
            }
        }
    }));

    out.push_back(guarded("reducibility_fixture", [&](PropertyResult& r) {
        const GroupKind sp = make_group(Family::Sp, 6);
        const IrrLabel orth{"p", 1, SdType::Orthogonal};
        const IrrLabel symp{"s", 2, SdType::Symplectic};
        r.cases = 3;
        if (reducibility_point(sp, orth, {2, 4}) != Half::from_twice(5)) fail(r, "present label");
        if (reducibility_point(sp, symp, {}) != Half::from_twice(1)) fail(r, "absent, same type");
        if (reducibility_point(sp, orth, {}) != Half(0)) fail(r, "absent, different type");
    }));

    out.push_back(guarded("alternative_defect_offset", [&](PropertyResult& r) {
        for (int d = 1; d <= 5; ++d) {
            ++r.cases;
            const GroupKind kind = make_group(Family::Sp, d * (d + 1));
            const auto pair = cuspidal_pair(kind);
            const int k = pair->partition.length();
            const int diff = defect_formula_alternative(pair->partition, pair->character) -
                             defect_formula(kind, pair->partition, pair->character);
            if (diff != k + 1) fail(r, "offset " + std::to_string(diff) + " at d = " + std::to_string(d));
        }
    }));

    return out;
}

}  // namespace cusp_atlas
