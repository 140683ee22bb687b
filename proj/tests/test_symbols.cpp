#include <doctest.h>

#include "cusp_atlas/errors.hpp"
#include "cusp_atlas/symbols.hpp"
#include "helpers.hpp"

using namespace cusp_atlas;
using test::chi;
using test::part;

namespace {

USymbol sp_symbol(std::vector<int> A, std::vector<int> B) { return {SymbolKind::SpOrdered, std::move(A), std::move(B)}; }
USymbol o_symbol(std::vector<int> A, std::vector<int> B) { return {SymbolKind::OUnordered, std::move(A), std::move(B)}; }

}  // namespace

TEST_CASE("distinguished symbols") {
    CHECK(distinguished_symbol(test::sp(6), part({2, 4})) == sp_symbol({0, 4}, {2}));
    CHECK(distinguished_symbol(test::sp(2), part({2})) == sp_symbol({0, 3}, {1}));
    CHECK(distinguished_symbol(test::soodd(9), part({1, 3, 5})) == o_symbol({0, 4}, {2}));
    CHECK(check_symbol(sp_symbol({0, 4}, {2}), 6).valid);
    CHECK(check_symbol(sp_symbol({0, 3}, {1}), 2).valid);
    CHECK(check_symbol(o_symbol({0, 4}, {2}), 9).valid);
}

TEST_CASE("unordered symbols compare as pairs") {
    CHECK(o_symbol({2}, {0, 4}) == o_symbol({0, 4}, {2}));
    CHECK_FALSE(sp_symbol({2}, {0, 4}) == sp_symbol({0, 4}, {2}));
}

TEST_CASE("interval structure") {
    auto s = interval_structure(test::sp(6), part({2, 4}));
    CHECK(s.intervals == std::vector<std::vector<int>>{{2}, {4}});
    CHECK(s.H == std::vector<int>{0});
    CHECK(s.parts == std::vector<int>{2, 4});

    s = interval_structure(test::soodd(9), part({1, 3, 5}));
    CHECK(s.intervals == std::vector<std::vector<int>>{{0}, {2}, {4}});
    CHECK(s.H.empty());

    s = interval_structure(test::sp(2), part({2}));
    CHECK(s.intervals == std::vector<std::vector<int>>{{3}});
    CHECK(s.H == std::vector<int>{0, 1});
}

TEST_CASE("symbols of pairs") {
    const auto e6 = chi({2, 4}, {-1, 1});
    CHECK(symbol_from_character(test::sp(6), part({2, 4}), e6) == sp_symbol({0, 2, 4}, {}));
    CHECK(symbol_for_pair(test::sp(6), part({2, 4}), e6) == sp_symbol({0, 2, 4}, {}));
    CHECK(symbol_for_pair(test::sp(2), part({2}), chi({2}, {-1})) == sp_symbol({0}, {1, 3}));
    CHECK(symbol_for_pair(test::soodd(9), part({1, 3, 5}), chi({1, 3, 5}, {1, -1, 1})) == o_symbol({0, 2, 4}, {}));
    CHECK_THROWS_AS(symbol_from_character(test::sp(4), part({2, 2}), chi({2}, {1})), DomainError);
}

TEST_CASE("defects") {
    CHECK(defect(sp_symbol({0, 2, 4}, {})) == 3);
    CHECK(defect(sp_symbol({0}, {1, 3})) == -1);
    CHECK(defect(o_symbol({0, 2, 4}, {})) == 3);
    CHECK(defect(o_symbol({}, {0, 2, 4})) == 3);

    CHECK(defect_formula(test::sp(6), part({2, 4}), chi({2, 4}, {-1, 1})) == 3);
    CHECK(defect_formula(test::sp(2), part({2}), chi({2}, {-1})) == -1);
    CHECK(defect_formula(test::soodd(9), part({1, 3, 5}), chi({1, 3, 5}, {-1, -1, 1})) == 1);
}

TEST_CASE("canonical form strips forced prefixes") {
    CHECK(canonical(sp_symbol({0, 2, 5}, {1, 3})) == sp_symbol({1}, {}));
    CHECK(canonical(o_symbol({0, 3}, {0, 4})) == o_symbol({1}, {2}));
    CHECK(canonical(sp_symbol({0, 4}, {2})) == sp_symbol({0, 4}, {2}));
}

TEST_CASE("malformed symbols are reported") {
    CHECK_FALSE(check_symbol(sp_symbol({0, 1}, {}), 1).valid);
    CHECK_FALSE(check_symbol(sp_symbol({0, 4}, {2}), 8).valid);
}
