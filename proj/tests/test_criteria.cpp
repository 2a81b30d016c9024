#include "doctest.h"

#include "permpoly/criteria.hpp"

using namespace permpoly;

TEST_CASE("lemma1 reduction on spec examples") {
    Field F7 = Field::build({7, 1, {}});
    // f(x) = x * h_2(x^2)^3 = x^r h(x^s) with h(y) = h_2(y)^3, s = 2, d = 3
    auto h = [&](FieldElement y) { return F7.pow(eval_hk(F7, 2, y), 3); };
    CHECK(lemma1_decide(F7, 1, 3, h));
    CHECK(family_permutes_by_oracle(F7, {1, 2, 2, 3}));
    // r sharing a factor with s = (q-1)/d
    CHECK_FALSE(lemma1_decide(F7, 2, 3, h));
    // d = q-1, s = 1: reduces to "x^r h(x) bijective on F_q^*"
    auto const_one = [&](FieldElement) { return F7.one(); };
    CHECK(lemma1_decide(F7, 1, 6, const_one));                 // x * 1 = x
    auto identity = [&](FieldElement y) { return y; };
    CHECK_FALSE(lemma1_decide(F7, 1, 6, identity));            // x * x = x^2 collides
    CHECK_THROWS_AS(lemma1_decide(F7, 1, 4, identity), std::invalid_argument);
}

TEST_CASE("lemma1 agrees with the oracle across a small grid") {
    for (FieldSpec spec : {FieldSpec{5, 1, {}}, FieldSpec{7, 1, {}}, FieldSpec{2, 3, {}},
                           FieldSpec{13, 1, {}}}) {
        Field F = Field::build(spec);
        const u64 L = F.unit_group_order();
        for (u64 v = 1; v <= L; ++v) {
            for (u64 k = 1; k <= F.order(); ++k) {
                for (u64 t = 1; t <= 2; ++t) {
                    for (u64 r = 1; r <= L; ++r) {
                        FamilyParams P{r, v, k, t};
                        DerivedParams dv = derive(F, P);
                        auto h = [&](FieldElement y) {
                            return F.pow(eval_hk(F, k, F.pow(y, dv.e % L)),
                                         t % L == 0 ? L : t % L);
                        };
                        const bool lem = lemma1_decide(F, r, dv.d, h);
                        CHECK(lem == family_permutes_by_oracle(F, P));
                    }
                }
            }
        }
    }
}

TEST_CASE("easy d cases") {
    Field F13 = Field::build({13, 1, {}});
    {
        // v = 12 gives d = 1
        FamilyParams P{1, 12, 2, 1};
        CriterionReport rep = decide(F13, P, {true});
        CHECK(rep.verdict);
        CHECK(rep.path == DecisionPath::kEasyD1);
    }
    Field F5 = Field::build({5, 1, {}});
    {
        FamilyParams P{1, 2, 3, 1};  // k^{st} = 9 = 4 != 1
        CriterionReport rep = decide(F5, P, {true});
        CHECK_FALSE(rep.verdict);
        CHECK(rep.path == DecisionPath::kEasyD2);
    }
    {
        FamilyParams P{1, 2, 2, 1};  // gcd(k, 2) = 2
        CriterionReport rep = decide(F5, P);
        CHECK_FALSE(rep.verdict);
        CHECK(rep.path == DecisionPath::kEasyD2);
    }
}

TEST_CASE("general proposition conditions on spec examples") {
    Field F7 = Field::build({7, 1, {}});
    {
        FamilyParams P{1, 2, 2, 3};
        DerivedParams dv = derive(F7, P);
        SubgroupContext ctx = roots_of_unity(F7, dv.d);
        PropConditions pc = prop_conditions(F7, P, dv, ctx);
        CHECK(pc.ok[0]);
        CHECK(pc.ok[1]);
        CHECK(pc.ok[2]);
        CHECK(pc.ok[3]);
        CHECK(pc.ok[4]);
        CHECK(pc.all());
    }
    {
        FamilyParams P{1, 2, 2, 1};  // condition (3) fails: 2^2 = 4 != 1
        DerivedParams dv = derive(F7, P);
        SubgroupContext ctx = roots_of_unity(F7, dv.d);
        PropConditions pc = prop_conditions(F7, P, dv, ctx);
        CHECK_FALSE(pc.ok[2]);
        CHECK_FALSE(family_permutes_by_oracle(F7, P));
    }
    {
        // d | k makes condition (1) fail
        FamilyParams P{1, 2, 3, 1};
        DerivedParams dv = derive(F7, P);
        REQUIRE(dv.d == 3);
        SubgroupContext ctx = roots_of_unity(F7, dv.d);
        PropConditions pc = prop_conditions(F7, P, dv, ctx);
        CHECK_FALSE(pc.ok[0]);
    }
}

TEST_CASE("product identity") {
    Field F7 = Field::build({7, 1, {}});
    {
        FamilyParams P{1, 2, 2, 3};
        DerivedParams dv = derive(F7, P);
        SubgroupContext ctx = roots_of_unity(F7, dv.d);
        CHECK(product_identity_check(F7, P, dv, ctx));
    }
    {
        // d = 1: product is ghat(1) = k^{st}
        FamilyParams P{3, 6, 5, 2};
        DerivedParams dv = derive(F7, P);
        REQUIRE(dv.d == 1);
        SubgroupContext ctx = roots_of_unity(F7, 1);
        CHECK(product_identity_check(F7, P, dv, ctx));
    }
    // random sampling with gcd(pd, k) = 1
    nt::SplitMix64 rng(31337);
    int done = 0;
    while (done < 200) {
        const u64 qs[] = {5, 7, 9, 11, 13, 16, 17, 19, 23, 25, 27, 49, 64, 81, 101};
        const u64 q = qs[rng.below(std::size(qs))];
        auto pp = nt::prime_power_decompose(q);
        Field F = Field::build({pp->first, pp->second, {}});
        FamilyParams P{1 + rng.below(F.unit_group_order()), 1 + rng.below(F.unit_group_order()),
                       1 + rng.below(F.order()), 1 + rng.below(4)};
        DerivedParams dv = derive(F, P);
        if (std::gcd(P.k, dv.d * F.p()) != 1) continue;
        SubgroupContext ctx = roots_of_unity(F, dv.d);
        CHECK(product_identity_check(F, P, dv, ctx));
        ++done;
    }
}

TEST_CASE("psi tables") {
    // k = 1 (mod d): ratio is identically 1, psi = 0
    Field F13 = Field::build({13, 1, {}});
    {
        FamilyParams P{1, 4, 4, 1};  // d = 3, k = 1 mod 3
        DerivedParams dv = derive(F13, P);
        REQUIRE(dv.d == 3);
        SubgroupContext ctx = roots_of_unity(F13, 3);
        PsiTable psi = psi_table(F13, P, dv, ctx);
        CHECK(psi.values == std::vector<u64>{0});
    }
    {
        // k = -1 (mod d) with st even: ratio = -1, psi = 0
        FamilyParams P{1, 4, 2, 1};  // d = 3, k = 2 = -1, st = 4
        DerivedParams dv = derive(F13, P);
        SubgroupContext ctx = roots_of_unity(F13, 3);
        PsiTable psi = psi_table(F13, P, dv, ctx);
        CHECK(psi.values == std::vector<u64>{0});
    }
    {
        // self-inverse check at q = 29, d = 7
        Field F29 = Field::build({29, 1, {}});
        FamilyParams P{1, 4, 2, 1};
        DerivedParams dv = derive(F29, P);
        REQUIRE(dv.d == 7);
        SubgroupContext ctx = roots_of_unity(F29, 7);
        PsiTable psi = psi_table(F29, P, dv, ctx);
        const u64 L = F29.unit_group_order();
        const u64 st = dv.s * P.t % L;
        for (u64 i = 1; i <= 3; ++i) {
            const FieldElement num =
                F29.sub(ctx.elements[i * P.k % 7], ctx.elements[(7 - i * P.k % 7) % 7]);
            const FieldElement den = F29.sub(ctx.elements[i], ctx.elements[7 - i]);
            const FieldElement val = F29.pow(F29.mul(num, F29.inv(den)), st);
            CHECK(F29.pow(ctx.omega, psi.at(i)) == val);
        }
    }
}

TEST_CASE("theta interpolation") {
    {
        PsiTable psi{7, {0, 0, 0}};
        auto [theta, strict] = interpolate_theta(psi);
        CHECK(theta.coeffs == std::vector<u64>{0, 0, 0});
        CHECK(strict);
    }
    {
        // psi(i) = 2 i^2 interpolates to theta = 2x
        PsiTable psi{7, {2, 1, 4}};
        auto [theta, strict] = interpolate_theta(psi);
        CHECK(theta.coeffs == std::vector<u64>{2, 0, 0});
        CHECK(strict);
    }
    {
        // psi = (1, 0, 0): theta = 5x^3 + 5x^2 + 5x, not strict
        PsiTable psi{7, {1, 0, 0}};
        auto [theta, strict] = interpolate_theta(psi);
        CHECK(theta.coeffs == std::vector<u64>{5, 5, 5});
        CHECK_FALSE(strict);
        for (u64 i = 1; i <= 3; ++i) CHECK(theta.eval(i * i % 7) == psi.at(i));
    }
}

TEST_CASE("strict degree iff psi sums to zero, synthetic tables") {
    nt::SplitMix64 rng(777);
    for (u64 d : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        for (int trial = 0; trial < 200; ++trial) {
            PsiTable psi;
            psi.d = d;
            u64 sum = 0;
            for (u64 i = 1; i <= (d - 1) / 2; ++i) {
                psi.values.push_back(rng.below(d));
                sum += psi.values.back();
            }
            auto [theta, strict] = interpolate_theta(psi);
            CHECK(strict == (sum % d == 0));
            // and the interpolation really passes through the points
            for (u64 i = 1; i <= (d - 1) / 2; ++i) CHECK(theta.eval(i * i % d) == psi.at(i));
        }
    }
}

TEST_CASE("chi bijectivity") {
    PsiTable zero{5, {0, 0}};
    CHECK(chi_decide(zero, 1));
    CHECK(chi_decide(zero, 3));
    CHECK_FALSE(chi_decide(zero, 0));
    CHECK_FALSE(chi_decide(zero, 5));

    // q = 7 case: d = 3, psi = 0, n = 2
    Field F7 = Field::build({7, 1, {}});
    FamilyParams P{1, 2, 2, 3};
    DerivedParams dv = derive(F7, P);
    SubgroupContext ctx = roots_of_unity(F7, 3);
    PsiTable psi = psi_table(F7, P, dv, ctx);
    CHECK(psi.values == std::vector<u64>{0});
    CHECK(dv.n_lin == 2);
    CHECK(chi_decide(psi, dv.n_lin));
    CHECK(family_permutes_by_oracle(F7, P));
}

TEST_CASE("star condition") {
    Field F11 = Field::build({11, 1, {}});
    {
        // q=11, d=5, k=2, t=1: ratio at any zeta is zeta + 1/zeta, 7^2 = 5 != 1
        FamilyParams P{1, 2, 2, 1};
        DerivedParams dv = derive(F11, P);
        REQUIRE(dv.d == 5);
        SubgroupContext ctx = roots_of_unity(F11, 5);
        CHECK_FALSE(star_condition(F11, P, dv, ctx));
    }
    {
        // k = 1 mod d: ratio identically 1
        FamilyParams P{1, 2, 11, 1};
        DerivedParams dv = derive(F11, P);
        SubgroupContext ctx = roots_of_unity(F11, 5);
        CHECK(star_condition(F11, P, dv, ctx));
    }
}

TEST_CASE("c_set_d11 contents") {
    const auto& cs = c_set_d11();
    CHECK(cs.size() == 24);
    // family 1 with m = 3 is i -> 3i
    bool found = false;
    for (const auto& entry : cs) {
        if (entry.family == "C1(m=3)") {
            found = true;
            const std::array<u64, 5> want{3, 9, 1, 4, 5};  // 3*{1,3,4,5,9} mod 11
            CHECK(entry.values == want);
        }
    }
    CHECK(found);
    // every member used as psi makes chi bijective with n_lin = 1
    for (const auto& entry : cs) {
        PsiTable psi;
        psi.d = 11;
        // values stored for i = 1..5; squares map i=1,3,4,5 directly, psi(2) = psi(9)
        psi.values = {entry.values[0], entry.values[4], entry.values[1], entry.values[2],
                      entry.values[3]};
        CHECK(chi_decide(psi, 1));
    }
}

TEST_CASE("prime_d_decide paths") {
    Field F7 = Field::build({7, 1, {}});
    {
        FamilyParams P{1, 2, 2, 3};  // d = 3, gates hold
        CriterionReport rep = prime_d_decide(F7, P, derive(F7, P));
        CHECK(rep.verdict);
        CHECK(rep.path == DecisionPath::kPrimeDClosedForm);
        CHECK(rep.star_holds.has_value());
    }
    Field F11 = Field::build({11, 1, {}});
    {
        FamilyParams P{1, 2, 2, 1};  // d = 5, condition (3): 2^2 = 4 != 1 mod 11
        CriterionReport rep = prime_d_decide(F11, P, derive(F11, P));
        CHECK_FALSE(rep.verdict);
        CHECK(rep.path == DecisionPath::kGeneralProp);
    }
}

TEST_CASE("d=7 epsilon family and d=11 C family paths") {
    // (*) fails but the epsilon family matches: oracle-confirmed permutation
    Field F197 = Field::build({197, 1, {}});
    CriterionReport rep = decide(F197, {1, 28, 19, 3}, {true});
    CHECK(rep.verdict);
    CHECK(rep.path == DecisionPath::kPrimeDClosedForm);
    REQUIRE(rep.star_holds.has_value());
    CHECK_FALSE(*rep.star_holds);
    REQUIRE(rep.epsilon.has_value());
    CHECK(*rep.epsilon == 1);

    // (*) fails but a C-set family matches over F_243, d = 11
    Field F243 = Field::build({3, 5, {}});
    rep = decide(F243, {1, 22, 2, 1}, {true});
    CHECK(rep.verdict);
    CHECK(rep.path == DecisionPath::kPrimeDClosedForm);
    CHECK_FALSE(*rep.star_holds);
    REQUIRE(rep.matched_psi_family.has_value());
    CHECK(*rep.matched_psi_family == "C1(m=8)");
}

TEST_CASE("d=3 tuples passing (1)-(3) always satisfy (*)") {
    for (u64 q : {7ull, 13ull, 16ull, 31ull}) {
        const auto pp = nt::prime_power_decompose(q);
        Field F = Field::build({pp->first, pp->second, {}});
        const u64 L = F.unit_group_order();
        REQUIRE(L % 3 == 0);
        SubgroupContext ctx = roots_of_unity(F, 3);
        for (u64 v : {L / 3, 2 * L / 3}) {
            for (u64 k = 1; k <= q; ++k) {
                for (u64 t = 1; t <= 3; ++t) {
                    FamilyParams P{1, v, k, t};
                    DerivedParams dv = derive(F, P);
                    if (dv.d != 3) continue;
                    PropConditions pc = prop_conditions(F, P, dv, ctx);
                    if (!(pc.ok[0] && pc.ok[1] && pc.ok[2])) continue;
                    CHECK(star_condition(F, P, dv, ctx));
                }
            }
        }
    }
}

TEST_CASE("oracle rejects fields beyond the enumeration bound") {
    Field big = Field::build({1000003, 1, {}});
    CHECK_THROWS_AS(is_permutation_oracle(big, [&](FieldElement x) { return x; }),
                    std::invalid_argument);
}

TEST_CASE("decide dispatches and agrees with the oracle on small grids") {
    for (FieldSpec spec : {FieldSpec{2, 1, {}}, FieldSpec{3, 1, {}}, FieldSpec{2, 2, {}},
                           FieldSpec{5, 1, {}}, FieldSpec{7, 1, {}}, FieldSpec{3, 2, {}},
                           FieldSpec{11, 1, {}}, FieldSpec{13, 1, {}}, FieldSpec{2, 4, {}}}) {
        Field F = Field::build(spec);
        const u64 L = F.unit_group_order();
        for (u64 v = 1; v <= L; ++v) {
            for (u64 k = 1; k <= F.order(); ++k) {
                for (u64 t = 1; t <= 3; ++t) {
                    for (u64 r = 1; r <= L; ++r) {
                        // with_oracle throws on any disagreement
                        CHECK_NOTHROW(decide(F, {r, v, k, t}, {true}));
                    }
                }
            }
        }
    }
}

TEST_CASE("decide q=7 flagship example") {
    Field F7 = Field::build({7, 1, {}});
    CriterionReport rep = decide(F7, {1, 2, 2, 3}, {true});
    CHECK(rep.verdict);
    CHECK(rep.path == DecisionPath::kPrimeDClosedForm);
    REQUIRE(rep.oracle_verdict.has_value());
    CHECK(*rep.oracle_verdict);
}

TEST_CASE("q=4 h_1 example goes through the d=3 pipeline") {
    Field F4 = Field::build({2, 2, {}});
    CriterionReport rep = decide(F4, {1, 1, 1, 1}, {true});
    CHECK(rep.verdict);  // f = x
    CHECK(rep.path == DecisionPath::kPrimeDClosedForm);
}
