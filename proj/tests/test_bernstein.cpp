#include <doctest.h>

#include "cusp_atlas/bernstein.hpp"
#include "cusp_atlas/errors.hpp"
#include "helpers.hpp"

using namespace cusp_atlas;
using test::orth;
using test::parameter;

namespace {

const IrrLabel pi = orth("p");

InertialTriple triple(const GroupKind& dual, std::vector<GLFactor> gl, const std::vector<test::SignedBlock>& cusp,
                      int n_sharp, Family cusp_family) {
    InertialTriple t;
    t.dual = dual;
    t.gl_factors = std::move(gl);
    t.cusp = parameter(make_group(cusp_family, n_sharp), cusp);
    return t;
}

}  // namespace

TEST_CASE("normalization") {
    const auto t = triple(test::sp(10), {{pi, 2}}, {{pi, 2, -1}, {pi, 4, 1}}, 6, Family::Sp);
    CHECK_NOTHROW(require_normalized(t));
    CHECK(m_prime(t, "p") == 6);

    auto wrong_size = t;
    wrong_size.dual = test::sp(12);
    CHECK_THROWS_AS(require_normalized(wrong_size), DomainError);

    auto bad_torsion = t;
    bad_torsion.gl_factors[0].torsion = 0;
    CHECK_THROWS_AS(require_normalized(bad_torsion), DomainError);
}

TEST_CASE("Weyl descriptors") {
    auto w = weyl_descriptor(triple(test::sp(6), {{pi, 2}}, {{pi, 2, -1}}, 2, Family::Sp));
    REQUIRE(w.factors.size() == 1);
    CHECK(w.factors[0] == WeylFactor{"p", RootType::B, 2, false});

    w = weyl_descriptor(triple(test::sp(6), {{test::glpair("g"), 3}}, {}, 0, Family::Sp));
    REQUIRE(w.factors.size() == 1);
    CHECK(w.factors[0] == WeylFactor{"g", RootType::A, 2, false});
    CHECK(w.r_group.order == 1);

    // O-side factor absent from the cuspidal part: D_2 extended by an outer involution.
    w = weyl_descriptor(triple(test::soodd(5), {{pi, 2}}, {{orth("q"), 1, 1}}, 1, Family::SOodd));
    REQUIRE(w.factors.size() == 1);
    CHECK(w.factors[0] == WeylFactor{"p", RootType::D, 2, true});
    CHECK(w.r_group.order == 2);
    CHECK(w.r_group.generators == std::vector<std::vector<std::string>>{{"p"}});

    w = weyl_descriptor(triple(test::sp(4), {{pi, 2}}, {}, 0, Family::Sp));
    CHECK(w.factors[0].type == RootType::C);

    w = weyl_descriptor(triple(test::sp(2), {{pi, 0}}, {{pi, 2, -1}}, 2, Family::Sp));
    CHECK(w.factors[0].type == RootType::Trivial);
}

TEST_CASE("both dialects of the descriptor agree") {
    const auto t = triple(test::soodd(11), {{pi, 2}, {test::symp("s"), 1}, {test::glpair("g"), 1}},
                          {{orth("q"), 1, 1}}, 1, Family::SOodd);
    const std::vector<RepFactor> rep = {
        {"g", 1, 1, RepCase::NotSelfDual},
        {"p", 1, 2, RepCase::Irreducible},
        {"s", 2, 1, RepCase::Reducible, false},
    };
    CHECK(weyl_descriptor(t) == weyl_descriptor(t.dual, 1, rep));
}

TEST_CASE("Hecke parameters from reducibility points") {
    auto t = triple(test::sp(10), {{pi, 2}}, {{pi, 2, -1}, {pi, 4, 1}}, 6, Family::Sp);
    t.gl_factors[0].x_minus = Half::from_twice(1);

    auto h = hecke_parameters(t);
    REQUIRE(h.size() == 1);
    CHECK(h[0].type == RootType::B);
    CHECK(h[0].x_plus == Half::from_twice(5));
    CHECK(h[0].lambda == Half(3));
    CHECK(h[0].lambda_star == Half(2));
    CHECK(h[0].mu == std::vector<int>{2, 5});
    CHECK(h[0].mu.back() == table_short_parameter(test::part({4, 2})));

    h = hecke_parameters(t, {-1});
    CHECK(h[0].mu == std::vector<int>{2, 1});

    const auto absent = triple(test::sp(6), {{pi, 3}}, {}, 0, Family::Sp);
    h = hecke_parameters(absent);
    CHECK(h[0].x_plus == Half(0));
    CHECK(h[0].type == RootType::C);
    CHECK(h[0].mu == std::vector<int>{2, 2, 2});
}

TEST_CASE("partner reducibility points") {
    CHECK(partner_reducibility_point(BlockSide::Sp, 0) == Half(0));
    CHECK(partner_reducibility_point(BlockSide::Sp, 6) == Half::from_twice(5));
    CHECK(partner_reducibility_point(BlockSide::O, 0) == Half::from_twice(1));
    CHECK(partner_reducibility_point(BlockSide::O, 9) == Half(3));
}

TEST_CASE("torus dimension") {
    const IrrLabel g = test::glpair("g");
    auto t = triple(test::sp(10), {{pi, 2}, {g, 3}}, {}, 0, Family::Sp);
    CHECK(torus_dim(t).dim == 5);

    CHECK(torus_dim(triple(test::sp(2), {}, {{pi, 2, -1}}, 2, Family::Sp)).dim == 0);

    t.gl_factors[1].torsion = 2;
    const auto d = torus_dim(t);
    CHECK(d.torsion == std::vector<std::pair<std::string, int>>{{"p", 1}, {"g", 2}});
}
