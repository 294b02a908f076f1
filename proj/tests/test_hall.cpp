#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hallc1/hall.hpp"

using namespace hallc1;

namespace {

C1Class cP(const IndCatalogue& cat, int vertex, int mult = 1) {
    return C1Class::c_of(cat.projective_root(vertex), mult);
}

}  // namespace

TEST_CASE("squares of projective classes count (q+1) and 1") {
    for (int q : {2, 3, 5}) {
        auto Q = linear_quiver(2);
        HallContext ctx(Q, q);
        const auto& cat = ctx.cat();
        for (int j = 0; j < 2; ++j) {
            C1Class c = cP(cat, j);
            C1Class c2 = cP(cat, j, 2);
            C1Class k = C1Class::k_of(j);
            CHECK(ctx.hall_number(c, c, c2) == q + 1);
            CHECK(ctx.hall_number(c, c, k) == 1);
            auto prod = ctx.multiply(C1Element<Rational>::basis(c), C1Element<Rational>::basis(c));
            CHECK(prod.terms.size() == 2);
            CHECK(prod.terms.at(c2) == Rational(q + 1));
            CHECK(prod.terms.at(k) == Rational(1));
        }
    }
}

TEST_CASE("geometric-series Hall numbers on multiples of one projective") {
    auto Q = linear_quiver(2);
    for (int q : {2, 3}) {
        HallContext ctx(Q, q);
        const auto& cat = ctx.cat();
        int P = 1;  // sink vertex, one-dimensional projective
        for (int m = 1; m <= 3; ++m) {
            C1Class cm = cP(cat, P, m), c1 = cP(cat, P);
            C1Class top = cP(cat, P, m + 1);
            C1Class drop = cP(cat, P, m - 1) + C1Class::k_of(P);
            std::int64_t expect = 0, pw = 1;
            for (int t = 0; t <= m; ++t) {
                expect += pw;
                pw *= q;
            }
            CHECK(ctx.hall_number(cm, c1, top) == expect);  // (q^{m+1}-1)/(q-1)
            CHECK(ctx.hall_number(cm, c1, drop) == 1);
            // the rewriting identity: [C_{(m-1)P}][K_P] = q^{m-1}[C_{(m-1)P} + K_P]
            std::int64_t qm = 1;
            for (int t = 1; t < m; ++t) qm *= q;
            CHECK(ctx.hall_number(cP(cat, P, m - 1), C1Class::k_of(P), drop) == qm);
        }
    }
}

TEST_CASE("unit axiom for hall numbers") {
    auto Q = linear_quiver(2);
    HallContext ctx(Q, 2);
    const auto& cat = ctx.cat();
    C1Class x = cP(cat, 0), unit;
    CHECK(ctx.hall_number(x, unit, x) == 1);
    CHECK(ctx.hall_number(unit, x, x) == 1);
    auto e = ctx.multiply(C1Element<Rational>::basis(x), C1Element<Rational>::basis(unit));
    CHECK(e == C1Element<Rational>::basis(x));
}

TEST_CASE("module-side hall numbers in A2") {
    auto Q = linear_quiver(2);
    HallContext ctx(Q, 2);
    const auto& cat = ctx.cat();
    ModClass s1{{cat.simple_root(0), 1}}, s2{{cat.simple_root(1), 1}};
    ModClass p1{{cat.projective_root(0), 1}};
    ModClass split = mod_class_add(s1, s2);
    CHECK(ctx.hall_number_module(s1, s2, p1) == 1);
    CHECK(ctx.hall_number_module(s1, s2, split) == 1);
    CHECK(ctx.hall_number_module(s2, s1, p1) == 0);
}

TEST_CASE("middle term candidates") {
    auto Q = linear_quiver(2);
    HallContext ctx(Q, 2);
    const auto& cat = ctx.cat();
    C1Class c = cP(cat, 1);
    auto cands = ctx.middle_term_candidates(c, c);
    REQUIRE(cands.size() == 2);
    C1Class c2 = cP(cat, 1, 2), k = C1Class::k_of(1);
    CHECK((cands[0] == c2 || cands[1] == c2));
    CHECK((cands[0] == k || cands[1] == k));
    // empty factor
    auto cu = ctx.middle_term_candidates(C1Class{}, c);
    bool has_c = false;
    for (auto& z : cu) has_c = has_c || z == c;
    CHECK(has_c);
}

TEST_CASE("adjacent-pair products match the closed forms") {
    // vertices 0 -> 1; i = 0, j = 1 (path from i to j)
    for (int q : {2, 3}) {
        auto Q = linear_quiver(2);
        HallContext ctx(Q, q);
        const auto& cat = ctx.cat();
        C1Class ci = cP(cat, 0), cj = cP(cat, 1);
        C1Class split = ci + cj;
        C1Class cm = C1Class::c_of(cat.simple_root(0));  // coker(P_1 -> P_0) = S_0
        auto e_ci = C1Element<Rational>::basis(ci), e_cj = C1Element<Rational>::basis(cj);

        auto ji = ctx.multiply(e_cj, e_ci);
        CHECK(ji.terms.size() == 2);
        CHECK(ji.terms.at(split) == Rational(1));
        CHECK(ji.terms.at(cm) == Rational(1));

        auto ij = ctx.multiply(e_ci, e_cj);
        CHECK(ij.terms.size() == 1);
        CHECK(ij.terms.at(split) == Rational(q));
    }
}

TEST_CASE("commuting product for a long-distance pair") {
    auto Q = linear_quiver(3);  // vertices 0 and 2 joined by a length-2 path
    HallContext ctx(Q, 2);
    const auto& cat = ctx.cat();
    auto D4 = d4_sink_quiver();  // arms 0, 2, 3 pairwise disconnected
    HallContext ctx4(D4, 2);
    const auto& cat4 = ctx4.cat();
    C1Class a = cP(cat4, 0), b = cP(cat4, 2);
    auto ab = ctx4.multiply(C1Element<Rational>::basis(a), C1Element<Rational>::basis(b));
    auto ba = ctx4.multiply(C1Element<Rational>::basis(b), C1Element<Rational>::basis(a));
    CHECK(ab == ba);
    CHECK(ab.terms.size() == 1);
    CHECK(ab.terms.at(a + b) == Rational(1));
    // long path in linear A3: only check the candidate support is the
    // expected two classes
    C1Class x = cP(cat, 0), y = cP(cat, 2);
    auto xy = ctx.multiply(C1Element<Rational>::basis(x), C1Element<Rational>::basis(y));
    auto yx = ctx.multiply(C1Element<Rational>::basis(y), C1Element<Rational>::basis(x));
    CHECK(xy.terms.count(x + y) == 1);
    CHECK(yx.terms.count(x + y) == 1);
}

TEST_CASE("hall polynomials interpolate and hold out") {
    auto Q = linear_quiver(2);
    PolyContext pc(Q);
    const auto& cat = pc.at_prime(2).cat();
    C1Class c = cP(cat, 1), c2 = cP(cat, 1, 2), c3 = cP(cat, 1, 3);
    CHECK(pc.hall_polynomial(c, c, c2) == IntPoly(std::vector<std::int64_t>{1, 1}));      // x+1
    CHECK(pc.hall_polynomial(c, c, C1Class::k_of(1)) == IntPoly(1));
    CHECK(pc.hall_polynomial(c2, c, c3) == IntPoly(std::vector<std::int64_t>{1, 1, 1}));  // x^2+x+1
    // vanishing-Ext split pair
    auto D4 = d4_sink_quiver();
    PolyContext pc4(D4);
    const auto& cat4 = pc4.at_prime(2).cat();
    C1Class a = cP(cat4, 0), b = cP(cat4, 2);
    CHECK(pc4.hall_polynomial(a, b, a + b) == IntPoly(1));
    // the fitted polynomial matches counts at two fresh primes
    IntPoly psi = pc.hall_polynomial(c, c, c2);
    for (int q : {13, 17}) CHECK(psi.eval(q) == pc.at_prime(q).hall_number(c, c, c2));
}

TEST_CASE("degenerate product and central K factors") {
    auto Q = linear_quiver(2);
    PolyContext pc(Q);
    const auto& cat = pc.at_prime(2).cat();
    C1Class c = cP(cat, 1);
    auto sq = pc.degenerate_multiply(C1Element<Rational>::basis(c), C1Element<Rational>::basis(c));
    CHECK(sq.terms.at(cP(cat, 1, 2)) == Rational(2));
    CHECK(sq.terms.at(C1Class::k_of(1)) == Rational(1));
    // [K_P] . [X] = [K_P + X]
    C1Class k = C1Class::k_of(0), x = cP(cat, 1);
    auto kx = pc.degenerate_multiply(C1Element<Rational>::basis(k), C1Element<Rational>::basis(x));
    CHECK(kx == C1Element<Rational>::basis(k + x));
}

TEST_CASE("lie bracket on A2 generators") {
    auto Q = linear_quiver(2);
    PolyContext pc(Q);
    const auto& cat = pc.at_prime(2).cat();
    C1Class ci = cP(cat, 0), cj = cP(cat, 1);
    auto br = pc.lie_bracket(cj, ci);
    CHECK(br == C1Element<Rational>::basis(C1Class::c_of(cat.simple_root(0))));
    // antisymmetry and K-centrality
    auto rev = pc.lie_bracket(ci, cj);
    CHECK((br + rev).is_zero());
    CHECK(pc.lie_bracket(ci, ci).is_zero());
    for (int v = 0; v < 2; ++v) {
        C1Class k = C1Class::k_of(v);
        CHECK(pc.lie_bracket(k, ci).is_zero());
        CHECK(pc.lie_bracket(k, cj).is_zero());
    }
    CHECK_THROWS_AS(pc.lie_bracket(ci + cj, ci), NotIndecomposable);
}

TEST_CASE("twisted products: symbolic Laurent coefficients") {
    auto Q = linear_quiver(2);
    PolyContext pc(Q);
    const auto& cat = pc.at_prime(2).cat();
    C1Class ci = cP(cat, 0), cj = cP(cat, 1);
    C1Class cm = C1Class::c_of(cat.simple_root(0));
    auto b = [](const C1Class& x) { return C1Element<LaurentV>::basis(x); };

    // [C_{P_j}] * [C_{P_j}] = (v + v^-1)[C_{2P_j}] + v^-1 [K_{P_j}]
    auto jj = pc.twisted_multiply_symbolic(b(cj), b(cj));
    CHECK(jj.terms.at(cP(cat, 1, 2)) == LaurentV::v_pow(1) + LaurentV::v_pow(-1));
    CHECK(jj.terms.at(C1Class::k_of(1)) == LaurentV::v_pow(-1));

    // first display line: [C_{P_j}]*2 * [C_{P_i}]
    auto lhs = pc.twisted_multiply_symbolic(jj, b(ci));
    LaurentV vv = LaurentV::v_pow(1) + LaurentV::v_pow(-1);
    C1Element<LaurentV> expect;
    expect.add_term(ci + cP(cat, 1, 2), vv);
    expect.add_term(cj + cm, vv);
    expect.add_term(ci + C1Class::k_of(1), LaurentV::v_pow(-1));
    CHECK(lhs == expect);

    // third line: [C_{P_i}] * [C_{P_j}]*2 = v(q+1)[...] + v^-1[...]
    auto rhs = pc.twisted_multiply_symbolic(b(ci), jj);
    C1Element<LaurentV> expect3;
    expect3.add_term(ci + cP(cat, 1, 2),
                     LaurentV::v_pow(1) * LaurentV::from_intpoly_q(IntPoly(std::vector<std::int64_t>{1, 1})));
    expect3.add_term(ci + C1Class::k_of(1), LaurentV::v_pow(-1));
    CHECK(rhs == expect3);
}

TEST_CASE("serre combination leaves only the K-supported residual") {
    auto Q = linear_quiver(2);
    PolyContext pc(Q);
    const auto& cat = pc.at_prime(2).cat();
    C1Class ci = cP(cat, 0), cj = cP(cat, 1);
    auto b = [](const C1Class& x) { return C1Element<LaurentV>::basis(x); };
    LaurentV vv = LaurentV::v_pow(1) + LaurentV::v_pow(-1);

    auto jj = pc.twisted_multiply_symbolic(b(cj), b(cj));
    auto t1 = pc.twisted_multiply_symbolic(b(ci), jj);
    auto t2 = pc.twisted_multiply_symbolic(pc.twisted_multiply_symbolic(b(cj), b(ci)), b(cj));
    auto t3 = pc.twisted_multiply_symbolic(jj, b(ci));
    auto residual = t1 - t2.scaled(vv) + t3;

    C1Element<LaurentV> expect;
    expect.add_term(ci + C1Class::k_of(1), LaurentV::v_pow(-1) - LaurentV::v_pow(1));
    CHECK(residual == expect);
    CHECK(reduce_mod_K(residual).is_zero());
}

TEST_CASE("twisted products agree numerically per prime under v^2 = q") {
    for (int q : {2, 3}) {
        auto Q = linear_quiver(2);
        HallContext ctx(Q, q);
        const auto& cat = ctx.cat();
        C1Class ci = cP(cat, 0), cj = cP(cat, 1);
        auto b = [](const C1Class& x) { return C1Element<LaurentV>::basis(x); };
        auto jj = ctx.twisted_multiply(b(cj), b(cj));
        // (v + v^-1)[C_{2P_j}] + v^-1[K_{P_j}] at v^2 = q
        C1Element<LaurentV> expect;
        expect.add_term(cP(cat, 1, 2), LaurentV::v_pow(1) + LaurentV::v_pow(-1));
        expect.add_term(C1Class::k_of(1), LaurentV::v_pow(-1));
        CHECK(laurent_elem_eq_at_q(jj, expect, q));
        // K classes are central
        auto kx = ctx.twisted_multiply(b(C1Class::k_of(0)), b(ci));
        auto xk = ctx.twisted_multiply(b(ci), b(C1Class::k_of(0)));
        CHECK(laurent_elem_eq_at_q(kx, xk, q));
    }
}

TEST_CASE("module twisted product in A2") {
    auto Q = linear_quiver(2);
    HallContext ctx(Q, 2);
    const auto& cat = ctx.cat();
    ModClass s1{{cat.simple_root(0), 1}}, s2{{cat.simple_root(1), 1}};
    ModClass p1{{cat.projective_root(0), 1}};
    auto prod = ctx.twisted_multiply_module(ModElement<LaurentV>::basis(s1),
                                            ModElement<LaurentV>::basis(s2));
    C1Element<LaurentV> unused;
    ModElement<LaurentV> expect;
    expect.add_term(mod_class_add(s1, s2), LaurentV::v_pow(-1));
    expect.add_term(p1, LaurentV::v_pow(-1));
    CHECK(laurent_elem_eq_at_q(prod, expect, 2));
}

TEST_CASE("reduce_mod_K and top_map") {
    auto Q = linear_quiver(2);
    HallContext ctx(Q, 2);
    const auto& cat = ctx.cat();
    C1Class ci = cP(cat, 0), k1 = C1Class::k_of(1);
    C1Element<Rational> e;
    e.add_term(ci, Rational(2));
    e.add_term(ci + k1, Rational(5));
    auto red = reduce_mod_K(e);
    CHECK(red.terms.size() == 1);
    CHECK(red.terms.at(ci) == Rational(2));
    CHECK_THROWS_AS(top_map(cat, e), HasKTerms);

    auto t = top_map(cat, red);
    ModClass s1{{cat.simple_root(0), 1}};
    CHECK(t.terms.at(s1) == Rational(2));
    // top of a simple and of a split projective pair
    auto t2 = top_map(cat, C1Element<Rational>::basis(C1Class::c_of(cat.simple_root(0))));
    CHECK(t2 == ModElement<Rational>::basis(s1));
    auto t3 = top_map(cat, C1Element<Rational>::basis(ci + cP(cat, 1)));
    ModClass s12 = mod_class_add(s1, ModClass{{cat.simple_root(1), 1}});
    CHECK(t3 == ModElement<Rational>::basis(s12));
}

TEST_CASE("extension totals match q^(h+e)") {
    auto Q = linear_quiver(2);
    HallContext ctx(Q, 2);
    const auto& cat = ctx.cat();
    C1Class c1v = cP(cat, 1), ci = cP(cat, 0);
    CHECK(ctx.extension_total_check(c1v, c1v));
    CHECK(ctx.extension_total_check(ci, c1v));
    CHECK(ctx.extension_total_check(ci, C1Class::k_of(1)));
    CHECK(ctx.extension_total_check(C1Class::c_of(cat.simple_root(0)), c1v));
}

TEST_CASE("plain product is associative on sampled basis triples") {
    std::mt19937 rng(5);
    auto Q = linear_quiver(2);
    HallContext ctx(Q, 2);
    const auto& cat = ctx.cat();
    auto inds = all_indecomposables(cat);
    for (int trial = 0; trial < 10; ++trial) {
        C1Class a = inds[rng() % inds.size()].as_class();
        C1Class b = inds[rng() % inds.size()].as_class();
        C1Class c = inds[rng() % inds.size()].as_class();
        auto ea = C1Element<Rational>::basis(a), eb = C1Element<Rational>::basis(b),
             ec = C1Element<Rational>::basis(c);
        CHECK(ctx.multiply(ctx.multiply(ea, eb), ec) == ctx.multiply(ea, ctx.multiply(eb, ec)));
    }
}

TEST_CASE("syzygy-times-cover products isolate the resolved class") {
    // for indecomposable non-projective M with resolution Omega -> P, the only
    // indecomposable class in the support of [C_Omega][C_P] is C_M
    auto Q = linear_quiver(3);
    HallContext ctx(Q, 2);
    const auto& cat = ctx.cat();
    for (int idx = 0; idx < cat.size(); ++idx) {
        if (cat.is_projective_root(idx)) continue;
        C1Class comega, cp;
        for (auto& [r, m] : cat.syzygy_class(idx)) comega.mods[r] += m;
        for (auto& [r, m] : cat.cover_class(idx)) cp.mods[r] += m;
        auto prod = ctx.multiply(C1Element<Rational>::basis(comega), C1Element<Rational>::basis(cp));
        int indec_classes = 0;
        for (auto& [z, coeff] : prod.terms)
            if (z.is_indecomposable()) {
                ++indec_classes;
                CHECK(z == C1Class::c_of(idx));
            }
        CHECK(indec_classes == 1);
    }
}
