#include <catch2/catch_amalgamated.hpp>

#include "zeta27/zeta.hpp"

using namespace zeta27;

TEST_CASE("trace extraction from counts") {
    // q = 2, N_1 = 3 gives t_1 = (3 - 1 - 4)/2 = -1
    TraceVector tv = traces_from_counts(CountProfile{2, {3}});
    CHECK(tv.t == std::vector<i64>{-1});
    // split surface: N_1 = q^2 + 7q + 1 gives t_1 = 7
    for (i64 q : {2, 3, 5, 7})
        CHECK(traces_from_counts(CountProfile{q, {q * q + 7 * q + 1}}).t == std::vector<i64>{7});
    // q^2 - 2q + 1 is the type-I count
    CHECK(traces_from_counts(CountProfile{5, {16}}).t == std::vector<i64>{-2});
    // non-integral trace is a hard error
    CHECK_THROWS_AS(traces_from_counts(CountProfile{3, {11}}), Error);
    // out-of-range trace is a hard error
    CHECK_THROWS_AS(traces_from_counts(CountProfile{3, {9 + 1 + 3 * 100}}), Error);
}

TEST_CASE("predicted counts reproduce the displayed values") {
    CHECK(predicted_counts("c1", 5, 1).N[0] == 25 + 35 + 1);
    CHECK(predicted_counts("c10", 2, 1).N[0] == 3);
    for (i64 q : {2, 3, 5, 7}) {
        CHECK(predicted_counts("c11", q, 1).N[0] == q * q - 2 * q + 1);
        CHECK(predicted_counts("c1", q, 1).N[0] == q * q + 7 * q + 1);
    }
}

TEST_CASE("round trip over all classes and small q") {
    u32 D = distinguishing_depth();
    INFO("distinguishing depth D* = " << D);
    CHECK(D <= 9);
    for (const auto& row : reference_table())
        for (i64 q : {2, 3, 4, 5}) {
            CountProfile pc = predicted_counts(row.name, q, D);
            auto cands = identify_class(traces_from_counts(pc));
            REQUIRE(cands.size() == 1);
            CHECK(cands[0] == row.name);
        }
}

TEST_CASE("ambiguous prefixes are reported as candidate sets") {
    // depth-1 trace 1 is shared by several classes
    auto cands = identify_class(TraceVector{2, {1}});
    CHECK(cands.size() >= 4);
    auto has = [&](const char* n) { return std::find(cands.begin(), cands.end(), n) != cands.end(); };
    CHECK(has("c9"));
    CHECK(has("c14"));
    CHECK(has("c17"));
    CHECK(has("c20"));
    // an impossible trace vector is a hard error
    CHECK_THROWS_AS(identify_class(TraceVector{2, {7, -2}}), Error);
}

TEST_CASE("zeta numerators match the displayed factorizations") {
    CHECK(p_of_t("c11", 3).factored == "(1-qt)(1+qt+q^2t^2)^3");
    CHECK(p_of_t("c12", 3).factored == "(1-qt)(1+qt+q^2t^2)(1-qt+q^2t^2)^2");
    CHECK(p_of_t("c13", 3).factored == "(1-qt)(1+qt+q^2t^2)(1-q^2t^2+q^4t^4)");
    CHECK(p_of_t("c14", 3).factored == "(1-qt)(1+q^3t^3+q^6t^6)");
    CHECK(p_of_t("c10", 3).factored == "(1-qt)(1+qt)^2(1+qt+q^2t^2)(1-qt+q^2t^2)");

    SECTION("the factored string expands to the coefficient list") {
        auto expand = [](const std::vector<std::pair<int, int>>& factors, i64 q) {
            std::vector<i64> r{1};
            for (auto [m, mult] : factors)
                for (int e = 0; e < mult; ++e) {
                    // reversed cyclotomic with q-powers: coefficients c_i q^i
                    std::vector<i64> f = cyclotomic(m);
                    std::reverse(f.begin(), f.end());
                    i64 qe = 1;
                    for (auto& c : f) {
                        c *= qe;
                        qe *= q;
                    }
                    r = int_poly_mul(r, f);
                }
            return r;
        };
        for (i64 q : {2, 3, 5, 7}) {
            CHECK(p_of_t("c11", q).coeffs == expand({{1, 1}, {3, 3}}, q));
            CHECK(p_of_t("c12", q).coeffs == expand({{1, 1}, {3, 1}, {6, 2}}, q));
            CHECK(p_of_t("c13", q).coeffs == expand({{1, 1}, {3, 1}, {12, 1}}, q));
            CHECK(p_of_t("c14", q).coeffs == expand({{1, 1}, {9, 1}}, q));
            CHECK(p_of_t("c10", q).coeffs == expand({{1, 1}, {2, 2}, {3, 1}, {6, 1}}, q));
            CHECK(p_of_t("c1", q).coeffs == expand({{1, 7}}, q));
        }
    }

    SECTION("P(1) consistency: 1 + q t_1 + q^2 = N_1") {
        for (const auto& row : reference_table())
            for (i64 q : {2, 3, 5}) {
                const auto& c = WeylGroup::get().named(row.name);
                CHECK(1 + q * c.trace_tuple[0] + q * q == predicted_counts(row.name, q, 1).N[0]);
            }
    }
}

TEST_CASE("the c10 zeta denominator over F_2 matches the displayed product") {
    // (1-t)(1-2t)(1+2t)^2(1+2t+4t^2)(1-2t+4t^2)(1-4t): middle factors are P(t)
    auto pt = p_of_t("c10", 2);
    std::vector<i64> want{1};
    auto mulp = [&](std::vector<i64> f) { want = int_poly_mul(want, f); };
    mulp({1, -2});        // 1 - 2t
    mulp({1, 2});         // (1 + 2t)
    mulp({1, 2});         // squared
    mulp({1, 2, 4});      // 1 + 2t + 4t^2
    mulp({1, -2, 4});     // 1 - 2t + 4t^2
    CHECK(pt.coeffs == want);
}

TEST_CASE("classify_surface on explicit forms") {
    SECTION("a singular form is refused") {
        const Field& F = Field::get(5, 1);
        Form cone = cubic_surface(F);
        cone.at(Expo{3, 0, 0, 0}) = F.one();
        cone.at(Expo{0, 3, 0, 0}) = F.one();
        cone.at(Expo{0, 0, 3, 0}) = F.one();
        CHECK_THROWS_AS(classify_surface(cone), Error);
    }
    SECTION("a non-reduced form is refused") {
        const Field& F = Field::get(3, 1);
        Form X = cubic_surface(F);
        X.at(Expo{3, 0, 0, 0}) = F.one();
        X.at(Expo{0, 3, 0, 0}) = F.one();
        X.at(Expo{0, 0, 3, 0}) = F.one();
        X.at(Expo{0, 0, 0, 3}) = F.one();
        CHECK_THROWS_AS(classify_surface(X), Error);
    }
    SECTION("Fermat over F_2 classifies (stably) as c17") {
        const Field& F = Field::get(2, 1);
        Form X = cubic_surface(F);
        X.at(Expo{3, 0, 0, 0}) = F.one();
        X.at(Expo{0, 3, 0, 0}) = F.one();
        X.at(Expo{0, 0, 3, 0}) = F.one();
        X.at(Expo{0, 0, 0, 3}) = F.one();
        auto rep = classify_surface(X);
        REQUIRE(rep.unique);
        CHECK(rep.cls == "c17");
        CHECK(!rep.minimal);
        // stability: recounting to full distinguishing depth keeps the class
        CountProfile pc{2, {}};
        for (u32 d = 1; d <= distinguishing_depth(); ++d) pc.N.push_back(count_points(X, d));
        auto cands = identify_class(traces_from_counts(pc));
        REQUIRE(cands.size() == 1);
        CHECK(cands[0] == "c17");
    }
    SECTION("budget exhaustion reports candidates") {
        const Field& F = Field::get(7, 1);
        Form X = cubic_surface(F);
        X.at(Expo{3, 0, 0, 0}) = F.one();
        X.at(Expo{0, 3, 0, 0}) = F.one();
        X.at(Expo{0, 0, 3, 0}) = F.one();
        X.at(Expo{0, 0, 0, 3}) = F.one();
        CountBudget tiny{100}; // not even N_1 fits
        auto rep = classify_surface(X, tiny);
        CHECK(!rep.unique);
        CHECK(rep.counts.empty());
    }
}
