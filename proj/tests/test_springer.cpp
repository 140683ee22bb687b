#include <doctest.h>

#include "cusp_atlas/errors.hpp"
#include "cusp_atlas/springer.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cusp_atlas;
using test::chi;
using test::part;

TEST_CASE("single elimination step") {
    auto [p, eta] = eliminate_once(part({2, 4}), chi({2, 4}, {1, 1}), 1);
    CHECK(p.empty());
    CHECK(eta.empty());

    std::tie(p, eta) = eliminate_once(part({1, 3, 5}), chi({1, 3, 5}, {-1, -1, 1}), 1);
    CHECK(p == part({5}));
    CHECK(eta == chi({5}, {1}));

    CHECK_THROWS_AS(eliminate_once(part({2, 4}), chi({2, 4}, {-1, 1}), 1), DomainError);
}

TEST_CASE("normal forms") {
    auto nf = eliminate(part({2, 4}), chi({2, 4}, {1, 1}));
    CHECK(nf.partition.empty());
    CHECK(nf.removed == std::vector<std::pair<int, int>>{{2, 4}});

    nf = eliminate(part({2, 4}), chi({2, 4}, {-1, 1}));
    CHECK(nf.partition == part({2, 4}));
    CHECK(nf.removed.empty());

    const auto all = all_eliminations(part({2, 4, 6, 8}), chi({2, 4, 6, 8}, {1, 1, -1, -1}));
    for (const auto& f : all) CHECK(f.partition.empty());
}

TEST_CASE("literal normal forms depend on the order, the sign word does not") {
    const auto all = all_eliminations(part({2, 4, 6}), chi({2, 4, 6}, {1, 1, 1}));
    REQUIRE(all.size() == 2);
    CHECK(all[0].partition != all[1].partition);
    for (const auto& f : all) {
        CHECK(sign_word(f) == std::vector<int>{1});
        CHECK(d_from_normal_form(Side::Symplectic, f.partition, f.character) == 0);
    }
}

TEST_CASE("d from normal forms and defects") {
    CHECK(d_from_normal_form(Side::Symplectic, part({2}), chi({2}, {-1})) == 1);
    CHECK(d_from_normal_form(Side::Symplectic, Partition{}, SignCharacter{}) == 0);
    CHECK(d_from_normal_form(Side::Orthogonal, part({5}), chi({5}, {1})) == 1);
    CHECK_THROWS_AS(d_from_normal_form(Side::Symplectic, part({2, 4}), chi({2, 4}, {1, 1})), DomainError);

    CHECK(d_from_defect(Side::Symplectic, 3) == 2);
    CHECK(d_from_defect(Side::Symplectic, -1) == 1);
    CHECK(d_from_defect(Side::Symplectic, 1) == 0);
    CHECK(d_from_defect(Side::Orthogonal, -3) == 3);
}

TEST_CASE("springer data of distinguished pairs") {
    auto c = springer_datum(test::sp(6), part({2, 4}), chi({2, 4}, {-1, 1}));
    CHECK(c.torus_rank == 0);
    CHECK(c.d == 2);
    CHECK(c.cusp_partition == part({2, 4}));
    CHECK(c.cusp_character == chi({2, 4}, {-1, 1}));

    c = springer_datum(test::sp(6), part({2, 4}), chi({2, 4}, {1, -1}));
    CHECK(c.dprime == -1);
    CHECK(c.d == 1);
    CHECK(c.torus_rank == 2);
    CHECK(c.cusp_partition == part({2}));
    CHECK(c.cusp_character == symplectic_cuspidal_character(1));

    c = springer_datum(test::soodd(9), part({1, 3, 5}), chi({1, 3, 5}, {-1, -1, 1}));
    CHECK(c.dprime == 1);
    CHECK(c.d == 1);
    CHECK(c.torus_rank == 4);
    CHECK(c.cusp_partition == part({1}));
    CHECK(c.cusp_character == chi({1}, {1}));

    CHECK_THROWS_AS(springer_datum(test::sp(4), part({2, 2}), chi({2}, {1})), DomainError);
}

TEST_CASE("general route agrees on distinguished pairs") {
    const auto eta = chi({2, 4}, {1, -1});
    const auto a = springer_datum(test::sp(6), part({2, 4}), eta);
    const auto b = springer_datum_general(test::sp(6), part({2, 4}), eta);
    CHECK(a.torus_rank == b.torus_rank);
    CHECK(a.d == b.d);
    CHECK(a.cusp_partition == b.cusp_partition);

    const auto g = springer_datum_general(test::sp(4), part({2, 2}), chi({2}, {-1}));
    CHECK(g.torus_rank + g.d * (g.d + 1) / 2 == 2);
}

TEST_CASE("orthogonal extension: case I") {
    const auto o = springer_O(test::oodd(9), part({1, 3, 5}), chi({1, 3, 5}, {1, -1, 1}));
    CHECK(o.which == OCase::I);
    CHECK(o.torus_rank == 0);
    CHECK(o.o_block == 9);
    CHECK(o.datum.d == 3);

    const auto t = springer_O(test::oodd(9), part({1, 3, 5}), chi({1, 3, 5}, {-1, -1, 1}));
    CHECK(t.which == OCase::I);
    CHECK(t.torus_rank == 4);
    CHECK(t.o_block == 1);
    CHECK(t.weyl_rep == WeylRep::Base);
}

TEST_CASE("orthogonal extension: cases II and III") {
    // (5,1) in O_6 is not degenerate and reaches d = 0.
    const auto two = springer_O(test::oeven(6), part({5, 1}), chi({1, 5}, {1, 1}));
    CHECK(two.which == OCase::II);
    CHECK(two.weyl_rep == WeylRep::Extended);
    CHECK(two.datum.d == 0);
    CHECK(two.torus_rank == 3);

    const auto three = springer_O(test::oeven(4), part({2, 2}), SignCharacter{});
    CHECK(three.which == OCase::III);
    CHECK(three.weyl_rep == WeylRep::Induced);
    CHECK(three.fused_orbits);
    CHECK(three.chi == 0);
}

TEST_CASE("products of orthogonal groups") {
    // Two case I factors: (1,3) with alternating signs has d = 2.
    const ProductFactor f{4, part({3, 1}), chi({1, 3}, {1, -1})};
    auto d = springer_product({f, f});
    CHECK(d.p == 2);
    CHECK(d.q == 2);
    CHECK(d.r == 2);
    CHECK(d.c_levi == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(d.c_orbit.empty());
    CHECK(d.c_induced.empty());
    CHECK(d.weyl_rep == WeylRep::Base);

    // One case II and one case III factor.
    const ProductFactor two{6, part({5, 1}), chi({1, 5}, {1, 1})};
    const ProductFactor three{4, part({2, 2}), SignCharacter{}};
    d = springer_product({two, three});
    CHECK(d.p == 0);
    CHECK(d.q == 1);
    CHECK(d.r == 2);
    CHECK(d.arrangement == std::vector<int>{1, 2});
    CHECK(d.c_levi.empty());
    CHECK(d.c_orbit.empty());
    CHECK(d.c_induced == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(d.weyl_rep == WeylRep::Induced);

    const auto single = springer_product({two});
    CHECK(single.factors.size() == 1);
    CHECK(single.factors[0].which == springer_O(test::oeven(6), part({5, 1}), chi({1, 5}, {1, 1})).which);
    CHECK(single.weyl_rep == WeylRep::Extended);
}

TEST_CASE("census of Sp_4") {
    const Census c = springer_census(test::sp(4));
    CHECK(c.pairs == 7);
    CHECK(c.by_d.at(0) == 5);
    CHECK(c.by_d.at(1) == 2);
}

TEST_CASE("census by d matches bipartitions of the relative rank") {
    for (int N = 0; N <= 14; N += 2) {
        const Census c = springer_census(test::sp(N));
        long long total = 0;
        for (int d = 0; d * (d + 1) <= N; ++d) {
            const long long expect = oracle::bipartitions((N - d * (d + 1)) / 2);
            total += expect;
            CHECK(c.by_d.count(d) == 1);
            if (c.by_d.count(d)) CHECK(c.by_d.at(d) == expect);
        }
        CHECK(c.pairs == total);
    }
    for (int N = 1; N <= 13; N += 2) {
        const Census c = springer_census(test::soodd(N));
        for (const auto& [d, n] : c.by_d) CHECK(n == oracle::bipartitions((N - d * d) / 2));
    }
    for (int N = 2; N <= 12; N += 2) {
        const Census c = springer_census(test::oeven(N));
        for (const auto& [d, n] : c.by_d) CHECK(n == (d == 0 ? 1 : 2) * oracle::bipartitions((N - d * d) / 2));
    }
    for (int N = 2; N <= 12; N += 2) {
        const Census c = springer_census(test::soeven(N));
        for (const auto& [d, n] : c.by_d) {
            if (d == 0)
                CHECK(n == oracle::irr_weyl_D(N / 2));
            else
                CHECK(n == oracle::bipartitions((N - d * d) / 2));
        }
    }
}
