#include "fixtures.hpp"
#include "workbench/hom.hpp"

#include <doctest.h>

using namespace wb;
using fixtures::mat_rows;
using fixtures::vec_of;

namespace {

// direct sum of the twists used when assembling sums by hand
HomAlgebra assemble_sum(const MultTensor& mult, const Mat& alpha, const Mat& beta) {
    return HomAlgebra{mult.dim, mult, block_diag(alpha, beta)};
}

} // namespace

TEST_CASE("check_hom_associative accepts the trivial fixtures") {
    CHECK(check_hom_associative(fixtures::f1()).ok);
    CHECK(check_hom_associative(fixtures::f3()).ok);

    fixtures::ScalarGen gen(201);
    for (int iter = 0; iter < 5; ++iter) {
        const HomAlgebra zero = fixtures::f4(3, gen.matrix(3, 3, true));
        CHECK(check_hom_associative(zero).ok);
    }
}

TEST_CASE("check_hom_associative rejects the 3-dim family with b1 != 0") {
    // alpha(e1).(e1.e2) = 0 while (e1.e1).alpha(e2) = b1 e3; the residual is
    // lhs - rhs = -b1 e3 at the triple (e1,e1,e2). The symmetric violation
    // sits at (e2,e1,e1) with residual +b1 e3.
    const HomAlgebra a = fixtures::f2(1, 0, 1, 1, 0, 1);
    const CheckReport rep = check_hom_associative(a);
    REQUIRE(!rep.ok);
    const ConditionResult* cond = rep.find("hom_assoc");
    REQUIRE(cond != nullptr);
    CHECK(cond->violations == 2);
    REQUIRE(cond->witnesses.size() == 2);
    CHECK(cond->witnesses[0].indices == std::vector<int>{0, 0, 1});
    CHECK(cond->witnesses[0].residual == vec_of({0, 0, -1}));
    CHECK(cond->witnesses[1].indices == std::vector<int>{1, 0, 0});
    CHECK(cond->witnesses[1].residual == vec_of({0, 0, 1}));
}

TEST_CASE("the 3-dim family is Hom-associative exactly when b1 = c1 = 0") {
    // hand expansion: the only nonzero residuals are -b1 e3 at (1,1,2),
    // -c1 e3 at (1,1,3), b1 e3 at (2,1,1), c1 e3 at (3,1,1)
    for (int mask = 0; mask < 64; ++mask) {
        const Scalar a1 = (mask >> 0) & 1, a2 = (mask >> 1) & 1, b1 = (mask >> 2) & 1;
        const Scalar b2 = (mask >> 3) & 1, c1 = (mask >> 4) & 1, c2 = (mask >> 5) & 1;
        const HomAlgebra a = fixtures::f2(a1, a2, b1, b2, c1, c2);
        CHECK(check_hom_associative(a).ok == (b1 == 0 && c1 == 0));
        CHECK(check_multiplicative(a).ok == (a1 == 0 && a2 == 0 && c1 == 0 && c2 == 0));
    }
}

TEST_CASE("check_multiplicative fixtures and witness") {
    CHECK(check_multiplicative(fixtures::f1()).ok);
    CHECK(check_multiplicative(fixtures::f3()).ok);

    // alpha(e1.e1) = e2 but alpha(e1).alpha(e1) = e2.e2 = 0
    const CheckReport rep = check_multiplicative(fixtures::f2(1, 0, 0, 0, 0, 0));
    REQUIRE(!rep.ok);
    const ConditionResult* cond = rep.find("multiplicative");
    REQUIRE(cond != nullptr);
    CHECK(cond->witnesses[0].indices == std::vector<int>{0, 0});
    CHECK(cond->witnesses[0].residual == vec_of({0, 1, 0}));
}

TEST_CASE("check_involutive") {
    CHECK(check_involutive(Mat::identity(3)));
    CHECK(check_involutive(mat_rows({{0, 1}, {1, 0}})));
    CHECK(!check_involutive(mat_rows({{1, 1}, {0, 1}})));
    CHECK_THROWS_AS(check_involutive(Mat(2, 3)), DimensionError);
}

TEST_CASE("mult_operators come out as frozen matrices") {
    auto [l1, r1] = mult_operators(fixtures::f1());
    CHECK(l1[0] == Mat::identity(1));
    CHECK(r1[0] == Mat::identity(1));

    auto [l4, r4] = mult_operators(fixtures::f4(2, Mat::identity(2)));
    CHECK(is_zero(l4[0]));
    CHECK(is_zero(r4[1]));

    auto [l2, r2] = mult_operators(fixtures::f2(0, 0, 0, 0, 0, 0));
    CHECK(l2[0] == mat_rows({{1, 0, 0}, {0, 0, 0}, {0, 1, 0}}));
    CHECK(r2[0] == mat_rows({{1, 0, 0}, {0, 0, 0}, {0, 1, 0}}));
    CHECK(l2[1] == mat_rows({{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}));
    // e_i . e_j recovered from L: column j of L[i]
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(mat_col(l2[static_cast<std::size_t>(i)], j) ==
                  mult_basis(fixtures::f2(0, 0, 0, 0, 0, 0).mult, i, j));
}

TEST_CASE("regular bimodules pass check_bimodule") {
    for (int n = 0; n <= 3; ++n) {
        for (const auto& b : regular_bimodules(fixtures::f1(), n))
            CHECK(check_bimodule(b).ok);
        for (const auto& b : regular_bimodules(fixtures::f3(), n))
            CHECK(check_bimodule(b).ok);
        for (const auto& b : regular_bimodules(fixtures::f4(2, mat_rows({{1, 1}, {0, 1}})), n))
            CHECK(check_bimodule(b).ok);
    }
    // invertible twist also admits negative powers
    for (const auto& b : regular_bimodules(fixtures::f3(), -2))
        CHECK(check_bimodule(b).ok);
}

TEST_CASE("regular bimodules refuse bad inputs") {
    // b1 = c1 = 0 gives Hom-associativity, but a1 = 1 breaks multiplicativity
    CHECK_THROWS_AS(regular_bimodules(fixtures::f2(1, 1, 0, 1, 0, 1), 0), CheckFailure);
    // zero-product algebra with singular twist: no negative powers
    CHECK_THROWS_AS(regular_bimodules(fixtures::f4(2, mat_rows({{1, 0}, {0, 0}})), -1),
                    CheckFailure);
    try {
        regular_bimodules(fixtures::f2(1, 1, 1, 1, 1, 1), 0);
        FAIL("expected CheckFailure");
    } catch (const CheckFailure& e) {
        CHECK(!e.report.ok);
        CHECK(e.report.find("hom_assoc") != nullptr);
    }
}

TEST_CASE("check_bimodule fixtures") {
    // F1 with l = r = [1], beta = id: the regular bimodule of the unital line
    HomBimodule line{fixtures::f1(), 1, {Mat::identity(1)}, {Mat::identity(1)}, Mat::identity(1)};
    CHECK(check_bimodule(line).ok);

    // zero actions on a zero-product algebra
    HomBimodule zero{fixtures::f4(2, Mat::identity(2)), 3, zero_actions(2, 3), zero_actions(2, 3),
                     Mat::identity(3)};
    CHECK(check_bimodule(zero).ok);

    // F3 with l = L, r = 0, beta = id
    auto [l3, r3] = mult_operators(fixtures::f3());
    HomBimodule lonly{fixtures::f3(), 2, l3, zero_actions(2, 2), Mat::identity(2)};
    CHECK(check_bimodule(lonly).ok);

    // non-commuting module twist breaks the compatibility conditions: with
    // beta(e2) = e1 + e2, beta(L(e2)e1) = e1 + e2 while L(e2)beta(e1) = e2
    HomBimodule skew{fixtures::f3(), 2, l3, zero_actions(2, 2), mat_rows({{1, 1}, {0, 1}})};
    const CheckReport rep = check_bimodule(skew);
    CHECK(!rep.ok);
    CHECK(!rep.find("lpb")->ok);
    CHECK(!rep.find("bl")->ok);
    CHECK(rep.find("br")->ok); // r = 0 keeps the right compatibility trivial
}

TEST_CASE("semidirect sum of the line with its regular bimodule is the dual numbers") {
    const auto regs = regular_bimodules(fixtures::f1(), 0);
    const HomAlgebra sum = semidirect_sum(regs[2]);
    CHECK(sum.dim == 2);
    CHECK(sum.mult == fixtures::f3().mult);
    CHECK(sum.alpha == Mat::identity(2));
    CHECK(check_hom_associative(sum).ok);
}

TEST_CASE("semidirect sum embeds A as a subalgebra and V as a square-zero ideal") {
    const auto regs = regular_bimodules(fixtures::f3(), 0);
    const HomAlgebra sum = semidirect_sum(regs[2]);
    const HomAlgebra a = fixtures::f3();
    CHECK(check_hom_associative(sum).ok);
    const int n = a.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec p = mult_basis(sum.mult, i, j);
            // A-block products agree with A and stay in A
            for (int k = 0; k < n; ++k) CHECK(p[static_cast<std::size_t>(k)] == a.mult.at(i, j, k));
            for (int k = n; k < sum.dim; ++k) CHECK(p[static_cast<std::size_t>(k)] == 0);
            // V.V = 0
            CHECK(is_zero(mult_basis(sum.mult, n + i, n + j)));
            // A.V and V.A land in V
            for (int k = 0; k < n; ++k) {
                CHECK(mult_basis(sum.mult, i, n + j)[static_cast<std::size_t>(k)] == 0);
                CHECK(mult_basis(sum.mult, n + i, j)[static_cast<std::size_t>(k)] == 0);
            }
        }
}

TEST_CASE("semidirect sum refuses a failing bimodule") {
    auto [l3, r3] = mult_operators(fixtures::f3());
    HomBimodule skew{fixtures::f3(), 2, l3, r3, mat_rows({{1, 1}, {0, 1}})};
    CHECK_THROWS_AS(semidirect_sum(skew), CheckFailure);
}

TEST_CASE("semidirect sum associativity is equivalent to lpb+rpb+lar") {
    // randomized: build the sum unconditionally through the product kernel and
    // compare brute-force associativity against the three core conditions
    fixtures::ScalarGen gen(202);
    int agree_pass = 0;
    for (int iter = 0; iter < 120; ++iter) {
        const HomAlgebra a = (iter % 3 == 0)   ? fixtures::f5()
                             : (iter % 3 == 1) ? fixtures::f3()
                                               : fixtures::f4(2, mat_rows({{0, 1}, {1, 0}}));
        const int dv = 1 + gen.index(2);
        HomBimodule b{a, dv, gen.actions(a.dim, dv), gen.actions(a.dim, dv),
                      gen.matrix(dv, dv)};
        if (iter % 4 == 0) { // keep a supply of honest bimodules in the mix
            const auto regs = regular_bimodules(a, 0);
            b = regs[static_cast<std::size_t>(gen.index(3))];
        }
        const CheckReport rep = check_bimodule(b);
        const bool core = rep.find("lpb")->ok && rep.find("rpb")->ok && rep.find("lar")->ok;
        const MultTensor sum = bicrossed_mult(a.mult, MultTensor(b.dim_v), b.l, b.r,
                                              zero_actions(b.dim_v, a.dim),
                                              zero_actions(b.dim_v, a.dim));
        const bool assoc = check_hom_associative(assemble_sum(sum, a.alpha, b.beta)).ok;
        CHECK(core == assoc);
        if (core) ++agree_pass;
    }
    CHECK(agree_pass >= 30); // the equivalence was exercised on passing instances too
}

TEST_CASE("trivial matched pairs and the direct product") {
    const HomAlgebra a = fixtures::f1();
    const HomAlgebra b = fixtures::f4(1, Mat::identity(1));
    HomMatchedPair p{a, b, zero_actions(1, 1), zero_actions(1, 1), zero_actions(1, 1),
                     zero_actions(1, 1)};
    CHECK(check_matched_pair(p).ok);
    const HomAlgebra sum = bicrossed_sum(p);
    CHECK(sum.dim == 2);
    CHECK(check_hom_associative(sum).ok);
    // direct product: e1.e1 = e1 and all mixed products vanish
    CHECK(sum.mult.at(0, 0, 0) == 1);
    CHECK(is_zero(mult_basis(sum.mult, 0, 1)));
    CHECK(is_zero(mult_basis(sum.mult, 1, 0)));
    CHECK(is_zero(mult_basis(sum.mult, 1, 1)));

    HomMatchedPair q{fixtures::f4(2, Mat::identity(2)), fixtures::f4(2, Mat::identity(2)),
                     zero_actions(2, 2), zero_actions(2, 2), zero_actions(2, 2),
                     zero_actions(2, 2)};
    CHECK(check_matched_pair(q).ok);
    CHECK(check_hom_associative(bicrossed_sum(q)).ok);
}

TEST_CASE("bicrossed sum restricted to A equals A's product") {
    const HomAlgebra a = fixtures::f3();
    const HomAlgebra b = fixtures::f4(2, Mat::identity(2));
    HomMatchedPair p{a, b, zero_actions(2, 2), zero_actions(2, 2), zero_actions(2, 2),
                     zero_actions(2, 2)};
    const HomAlgebra sum = bicrossed_sum(p);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k)
                CHECK(sum.mult.at(i, j, k) == a.mult.at(i, j, k));
}

TEST_CASE("matched pair acceptance tracks associativity of the bicrossed sum") {
    // identity twists: bl/br are automatic, so full acceptance must equal
    // brute-force associativity of the assembled sum
    fixtures::ScalarGen gen(203);
    int accepted = 0;
    for (int iter = 0; iter < 150; ++iter) {
        const HomAlgebra a = (iter % 2 == 0) ? fixtures::f3() : fixtures::f4(2, Mat::identity(2));
        const HomAlgebra b = (iter % 3 == 0) ? fixtures::f5() : fixtures::f4(2, Mat::identity(2));
        HomMatchedPair p{a, b, gen.actions(2, 2), gen.actions(2, 2), gen.actions(2, 2),
                         gen.actions(2, 2)};
        if (iter % 5 == 0)
            p = HomMatchedPair{a, b, zero_actions(2, 2), zero_actions(2, 2), zero_actions(2, 2),
                               zero_actions(2, 2)};
        const MultTensor sum =
            bicrossed_mult(a.mult, b.mult, p.lA, p.rA, p.lB, p.rB);
        const bool assoc = check_hom_associative(assemble_sum(sum, a.alpha, b.alpha)).ok;
        CHECK(check_matched_pair(p).ok == assoc);
        if (assoc) ++accepted;
    }
    CHECK(accepted >= 30);
}

TEST_CASE("with twists, sum associativity equals core conditions plus mp1-6") {
    fixtures::ScalarGen gen(204);
    const HomAlgebra a = fixtures::f4(2, mat_rows({{0, 1}, {1, 0}}));
    const HomAlgebra b = fixtures::f4(2, mat_rows({{1, 1}, {0, 1}}));
    for (int iter = 0; iter < 120; ++iter) {
        HomMatchedPair p{a, b, gen.actions(2, 2), gen.actions(2, 2), gen.actions(2, 2),
                         gen.actions(2, 2)};
        const CheckReport rep = check_matched_pair(p);
        bool core = true;
        for (const char* id : {"A_on_B.lpb", "A_on_B.rpb", "A_on_B.lar", "B_on_A.lpb",
                               "B_on_A.rpb", "B_on_A.lar", "mp1", "mp2", "mp3", "mp4", "mp5",
                               "mp6"})
            core = core && rep.find(id)->ok;
        const MultTensor sum = bicrossed_mult(a.mult, b.mult, p.lA, p.rA, p.lB, p.rB);
        const bool assoc = check_hom_associative(assemble_sum(sum, a.alpha, b.alpha)).ok;
        CHECK(core == assoc);
    }
}

TEST_CASE("bicrossed sum refuses a non matched pair") {
    const HomAlgebra a = fixtures::f3();
    const HomAlgebra b = fixtures::f3();
    ActionFamily l{mat_rows({{0, 1}, {0, 0}}), mat_rows({{1, 0}, {0, 1}})};
    HomMatchedPair p{a, b, l, zero_actions(2, 2), zero_actions(2, 2), zero_actions(2, 2)};
    REQUIRE(!check_matched_pair(p).ok);
    CHECK_THROWS_AS(bicrossed_sum(p), CheckFailure);
}

TEST_CASE("yau twist of the dual numbers by a diagonal morphism") {
    // beta(e1) = e1, beta(e2) = 2 e2 is an algebra morphism of K[x]/(x^2)
    const Mat beta = mat_rows({{1, 0}, {0, 2}});
    const HomAlgebra t = yau_twist(fixtures::f3(), beta);
    CHECK(t.alpha == beta);
    CHECK(t.mult.at(0, 0, 0) == 1);
    CHECK(t.mult.at(0, 1, 1) == 2);
    CHECK(t.mult.at(1, 0, 1) == 2);
    CHECK(is_zero(mult_basis(t.mult, 1, 1)));
    CHECK(check_hom_associative(t).ok);
    CHECK(check_multiplicative(t).ok);

    // the identity twist is a no-op
    const HomAlgebra same = yau_twist(fixtures::f1(), Mat::identity(1));
    CHECK(same.mult == fixtures::f1().mult);
    CHECK(same.alpha == Mat::identity(1));
}

TEST_CASE("yau twist by a non-morphism fails the axiom checks") {
    // beta(e2) = e1 + e2 squares to e1 + 2 e2, but beta(e2.e2) = 0
    const HomAlgebra t = yau_twist(fixtures::f3(), mat_rows({{1, 1}, {0, 1}}));
    CHECK(!check_hom_associative(t).ok);
}

TEST_CASE("dimension mismatches are input errors, not math failures") {
    HomAlgebra bad = fixtures::f1();
    bad.alpha = Mat::identity(2);
    CHECK_THROWS_AS(check_hom_associative(bad), DimensionError);
    CHECK_THROWS_AS(check_multiplicative(bad), DimensionError);

    HomBimodule badb{fixtures::f1(), 2, zero_actions(1, 1), zero_actions(1, 2),
                     Mat::identity(2)};
    CHECK_THROWS_AS(check_bimodule(badb), DimensionError);
}
