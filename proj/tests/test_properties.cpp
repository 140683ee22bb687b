// Exhaustive property checks over small ranks, each compared against a
// reference computation from oracles.hpp.
#include <doctest.h>

#include <functional>
#include <set>

#include "cusp_atlas/cuspsupport.hpp"
#include "cusp_atlas/enumerate.hpp"
#include "cusp_atlas/selfcheck.hpp"
#include "cusp_atlas/symbols.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cusp_atlas;

namespace {

void for_each_distinguished_pair(int max_n, const std::function<void(const GroupKind&, const Partition&,
                                                                       const SignCharacter&)>& visit) {
    for (int N = 1; N <= max_n; ++N) {
        std::vector<GroupKind> kinds{make_group(N % 2 ? Family::SOodd : Family::SOeven, N)};
        if (N % 2 == 0) kinds.push_back(test::sp(N));
        for (const auto& kind : kinds) {
            for (const auto& set : oracle::distinct_parity_sets(N, kind.family == Family::Sp ? 0 : 1)) {
                const Partition p(set);
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << set.size()); ++mask) {
                    std::vector<int> signs;
                    for (std::size_t i = 0; i < set.size(); ++i) signs.push_back(mask >> i & 1 ? -1 : 1);
                    visit(kind, p, SignCharacter::from_signs(set, signs));
                }
            }
        }
    }
}

std::vector<int> signs_in_order(const Partition& p, const SignCharacter& eta) {
    std::vector<int> out;
    for (int q : p.increasing()) out.push_back(eta.at(q));
    return out;
}

}  // namespace

TEST_CASE("symbols, defects and d agree with the reduced sign word") {
    long cases = 0;
    for_each_distinguished_pair(14, [&](const GroupKind& kind, const Partition& p, const SignCharacter& eta) {
        ++cases;
        const bool symplectic = kind.family == Family::Sp;
        const USymbol s = symbol_for_pair(kind, p, eta);
        CHECK(check_symbol(s, kind.N).valid);
        CHECK(defect(s) == defect_formula(kind, p, eta));
        CHECK(s == symbol_from_character(kind, p, eta));

        const auto word = oracle::reduce_sign_word(signs_in_order(p, eta));
        const CuspidalDatum c = springer_datum(kind, p, eta);
        CHECK(c.d == oracle::d_from_word(symplectic, word));
        const int cusp_size = symplectic ? c.d * (c.d + 1) : c.d * c.d;
        CHECK(2 * c.torus_rank + cusp_size == kind.N);
        for (const auto& nf : all_eliminations(p, eta)) CHECK(sign_word(nf) == word);
    });
    CHECK(cases > 100);
}

TEST_CASE("general route matches the distinguished route") {
    for_each_distinguished_pair(12, [&](const GroupKind& kind, const Partition& p, const SignCharacter& eta) {
        const auto a = springer_datum(kind, p, eta);
        const auto b = springer_datum_general(kind, p, eta);
        CHECK(a.d == b.d);
        CHECK(a.torus_rank == b.torus_rank);
        CHECK(a.cusp_partition == b.cusp_partition);
    });
}

TEST_CASE("enumeration is duplicate-free and valid") {
    const std::vector<IrrLabel> signature = {test::orth("p"), test::symp("s")};
    for (int N = 1; N <= 11; N += 2) {
        const auto all = enumerate_parameters(test::soodd(N), signature, 20, SignMode::AllSignVectors);
        std::set<std::pair<std::vector<Block>, ParameterCharacter>> seen;
        for (const auto& [p, eta] : all) {
            CHECK(validate_parameter(p).valid);
            CHECK(seen.insert({p.sorted_blocks(), eta}).second);
        }
    }
}

TEST_CASE("support preserves the infinitesimal character (oracle count maps)") {
    const std::vector<IrrLabel> signature = {test::orth("p"), test::symp("s")};
    for (Family f : {Family::Sp, Family::SOodd}) {
        for (int N = 0; N <= 10; ++N) {
            if ((f == Family::SOodd) != (N % 2 == 1)) continue;
            for (const auto& [p, eta] : enumerate_parameters(GroupKind{f, N}, signature, 20, SignMode::AllSignVectors)) {
                const CuspidalSupport s = support(p, eta);
                std::map<std::string, std::map<int, int>> before, after;
                for (const auto& name : p.used_labels()) before[name] = oracle::doubled_exponents(p.slice(name));
                for (const auto& name : s.cusp_param.used_labels())
                    after[name] = oracle::doubled_exponents(s.cusp_param.slice(name));
                int gl_dim = 0;
                for (const auto& t : s.gl_twists) {
                    ++after[t.pi][t.e.twice()];
                    ++after[t.pi][-t.e.twice()];
                    gl_dim += 2 * p.label(t.pi).dim;
                }
                CHECK(before == after);
                CHECK(gl_dim + s.n_sharp == N);
                CHECK(s == support_via_psi(p, eta));
                CHECK(support(s.cusp_param, s.cusp_char).gl_twists.empty());
            }
        }
    }
}

TEST_CASE("selfcheck passes at a small bound") {
    for (const auto& r : run_selfcheck(10)) CHECK_MESSAGE(r.passed, r.name << ": " << r.detail);
}
