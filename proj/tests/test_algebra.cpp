#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "syzygy/binom.hpp"
#include "syzygy/fp.hpp"
#include "syzygy/matrix.hpp"
#include "syzygy/multiform.hpp"
#include "syzygy/rng.hpp"

using namespace syzygy;

namespace {

SparseMat from_dense(const FpField& F, const std::vector<std::vector<int>>& rows) {
    size_t nc = rows.empty() ? 0 : rows[0].size();
    SparseMat M(rows.size(), nc);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < nc; ++c) {
            uint32_t v = F.reduce(rows[r][c]);
            if (v) M.push(r, static_cast<uint32_t>(c), v);
        }
    return M;
}

SparseMat random_mat(const FpField& F, Rng& rng, size_t rows, size_t cols, int fill_pct) {
    SparseMat M(rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
            if (rng.below(100) < static_cast<uint32_t>(fill_pct)) {
                uint32_t v = rng.below(F.p());
                if (v) M.push(r, static_cast<uint32_t>(c), v);
            }
    return M;
}

MultiForm random_form(const FpField& F, Rng& rng, Ambient amb, Twist deg) {
    MultiForm f;
    f.amb = amb;
    f.deg = deg;
    for (auto& e : monomial_basis(amb, deg)) f.set(e, rng.below(F.p()));
    return f;
}

} // namespace

TEST_CASE("field axioms") {
    FpField F(32003);
    Rng rng(7, "field");
    for (int i = 0; i < 1000; ++i) {
        uint32_t a = rng.below(F.p()), b = rng.below(F.p()), c = rng.below(F.p());
        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        if (a) CHECK(F.mul(a, F.inv(a)) == 1);
    }
    CHECK_THROWS(F.inv(0));
    CHECK_THROWS(FpField(32004));
    CHECK_THROWS(FpField(2));
}

TEST_CASE("rank basics") {
    FpField F(32003);
    CHECK(rank(F, from_dense(F, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    SparseMat Z(4, 7);
    CHECK(rank(F, Z) == 0);
    FpField F5(31013); // proportional rows collapse over any prime
    CHECK(rank(F5, from_dense(F5, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel basics") {
    FpField F(32003);
    CHECK(kernel_basis(F, from_dense(F, {{1, 0}, {0, 1}})).empty());
    SparseMat Z(2, 3);
    CHECK(kernel_basis(F, Z).size() == 3);
    auto M = from_dense(F, {{1, 1, 0}});
    auto ker = kernel_basis(F, M);
    REQUIRE(ker.size() == 2);
    for (auto& v : ker) {
        auto y = M.apply(F, v);
        for (auto x : y) CHECK(x == 0);
    }
}

TEST_CASE("rank properties on random matrices") {
    FpField F(32003);
    Rng rng(11, "rank");
    for (int trial = 0; trial < 12; ++trial) {
        size_t r = 3 + rng.below(20), c = 3 + rng.below(20);
        SparseMat M = random_mat(F, rng, r, c, 30);
        size_t rk = rank(F, M);
        CHECK(rk == rank(F, M.transpose()));
        CHECK(rk + kernel_basis(F, M).size() == c);
        for (auto& v : kernel_basis(F, M)) {
            auto y = M.apply(F, v);
            for (auto x : y) CHECK(x == 0);
        }
    }
}

TEST_CASE("kernel via echelon path matches rref path") {
    FpField F(32003);
    Rng rng(13, "bigker");
    for (int trial = 0; trial < 6; ++trial) {
        SparseMat M = random_mat(F, rng, 40 + rng.below(40), 60 + rng.below(40), 15);
        auto a = kernel_basis(F, M);
        auto b = kernel_basis_echelon(F, M);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    }
}

TEST_CASE("monomial bases") {
    CHECK(monomial_basis(Ambient::P1xP1, {1, 1}).size() == 4);
    CHECK(monomial_basis(Ambient::P2, {3, 0}).size() == 10);
    CHECK(monomial_basis(Ambient::P1xP1, {-2, -2}).empty());
    CHECK(monomial_count(Ambient::P2, {6, 0}) == 28);
}

TEST_CASE("multiform arithmetic") {
    FpField F(32003);
    Rng rng(3, "forms");
    Twist d{2, 1};
    MultiForm one = monomial_form(Ambient::P1xP1, {0, 0}, {0, 0, 0, 0});
    MultiForm f = random_form(F, rng, Ambient::P1xP1, d);
    CHECK(multiply(F, f, one).coeff == f.coeff);
    MultiForm zero;
    zero.amb = Ambient::P1xP1;
    zero.deg = {0, 0};
    CHECK(multiply(F, f, zero).is_zero());

    MultiForm x0y0 = monomial_form(Ambient::P1xP1, {1, 1}, {1, 0, 1, 0});
    MultiForm x1y1 = monomial_form(Ambient::P1xP1, {1, 1}, {0, 1, 0, 1});
    MultiForm prod = multiply(F, x0y0, x1y1);
    REQUIRE(prod.coeff.size() == 1);
    CHECK(prod.coeff.begin()->first == Expo{1, 1, 1, 1});

    for (int i = 0; i < 8; ++i) {
        MultiForm a = random_form(F, rng, Ambient::P1xP1, {1, 1});
        MultiForm b = random_form(F, rng, Ambient::P1xP1, {2, 0});
        MultiForm c = random_form(F, rng, Ambient::P1xP1, {0, 2});
        CHECK(multiply(F, a, b).coeff == multiply(F, b, a).coeff);
        CHECK(multiply(F, multiply(F, a, b), c).coeff == multiply(F, a, multiply(F, b, c)).coeff);
    }
    MultiForm p2 = random_form(F, rng, Ambient::P2, {2, 0});
    CHECK_THROWS(multiply(F, f, p2));
}

TEST_CASE("colex subsets") {
    auto s = subset_first_colex(3);
    std::vector<uint64_t> ranks;
    do {
        ranks.push_back(subset_rank_colex(s));
    } while (subset_next_colex(5, s));
    CHECK(ranks.size() == binom(5, 3));
    for (size_t i = 0; i < ranks.size(); ++i) CHECK(ranks[i] == i);
}

TEST_CASE("subspace coordinates") {
    FpField F(32003);
    auto M = from_dense(F, {{1, 0, 2}, {0, 1, 3}});
    Rref R = rref(F, M);
    std::vector<uint32_t> v{5, 7, F.add(F.mul(5, 2), F.mul(7, 3))};
    auto c = subspace_coords(F, R, v);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == 5);
    CHECK(c[1] == 7);
    std::vector<uint32_t> w{1, 0, 0};
    CHECK_THROWS(subspace_coords(F, R, w));
}
