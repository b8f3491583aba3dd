#include <catch2/catch_amalgamated.hpp>

#include "zeta27/count.hpp"

using namespace zeta27;

static Form fermat(const Field& F) {
    Form X = cubic_surface(F);
    X.at(Expo{3, 0, 0, 0}) = F.one();
    X.at(Expo{0, 3, 0, 0}) = F.one();
    X.at(Expo{0, 0, 3, 0}) = F.one();
    X.at(Expo{0, 0, 0, 3}) = F.one();
    return X;
}

TEST_CASE("census tables agree with brute force on every cubic") {
    for (auto [p, k] : {std::pair<u32, u32>{2, 2}, {3, 1}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}}) {
        const Field& F = Field::get(p, k);
        const FieldTable& T = FieldTable::get(F);
        u64 Q = F.size;
        u64 checked = 0;
        for (u64 a3 = 0; a3 < Q; ++a3)
            for (u64 a2 = 0; a2 < Q; ++a2)
                for (u64 a1 = 0; a1 < Q; ++a1)
                    for (u64 a0 = 0; a0 < Q; ++a0) {
                        u32 c3 = T.from_index(a3), c2 = T.from_index(a2), c1 = T.from_index(a1), c0 = T.from_index(a0);
                        u64 brute = 0;
                        for (u64 t = 0; t < Q; ++t) {
                            u32 tl = T.from_index(t);
                            u32 v = T.add(T.mul(T.add(T.mul(T.add(T.mul(c3, tl), c2), tl), c1), tl), c0);
                            if (v == FieldTable::ZERO) ++brute;
                        }
                        CHECK(T.cubic_census(c3, c2, c1, c0) == brute);
                        ++checked;
                        if (checked > 20000) return; // bounded per field is plenty
                    }
    }
}

TEST_CASE("census exhaustive over tiny fields") {
    for (auto [p, k] : {std::pair<u32, u32>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        const Field& F = Field::get(p, k);
        const FieldTable& T = FieldTable::get(F);
        u64 Q = F.size;
        for (u64 a3 = 0; a3 < Q; ++a3)
            for (u64 a2 = 0; a2 < Q; ++a2)
                for (u64 a1 = 0; a1 < Q; ++a1)
                    for (u64 a0 = 0; a0 < Q; ++a0) {
                        u32 c3 = T.from_index(a3), c2 = T.from_index(a2), c1 = T.from_index(a1), c0 = T.from_index(a0);
                        u64 brute = 0;
                        for (u64 t = 0; t < Q; ++t) {
                            u32 tl = T.from_index(t);
                            u32 v = T.add(T.mul(T.add(T.mul(T.add(T.mul(c3, tl), c2), tl), c1), tl), c0);
                            if (v == FieldTable::ZERO) ++brute;
                        }
                        REQUIRE(T.cubic_census(c3, c2, c1, c0) == brute);
                    }
    }
}

TEST_CASE("Fermat point counts over small fields") {
    const Field& f2 = Field::get(2, 1);
    CHECK(count_points(fermat(f2), 1) == 7);
    CHECK(count_points(fermat(f2), 2) == 45);
    CHECK(count_points_naive(fermat(f2), 2) == 45);
    const Field& f4 = Field::get(2, 2);
    CHECK(count_points(fermat(f4), 1) == 45);

    // ambient bound N_d <= q^3 + q^2 + q + 1 at d = 1
    const Field& f5 = Field::get(5, 1);
    i64 n = count_points(fermat(f5), 1);
    CHECK(n <= 5 * 5 * 5 + 5 * 5 + 5 + 1);
    CHECK(n == count_points_naive(fermat(f5), 1));
}

TEST_CASE("fibered and naive counts agree on seeded random cubics") {
    u64 s = 0xabcdef12;
    auto next = [&] {
        s ^= s << 13; s ^= s >> 7; s ^= s << 17;
        return s;
    };
    for (u32 p : {3u, 5u, 2u}) {
        const Field& F = Field::get(p, 1);
        for (int t = 0; t < 25; ++t) {
            Form X = cubic_surface(F);
            bool nonzero = false;
            for (auto& c : X.c) {
                c = F.element(next() % F.size);
                nonzero = nonzero || !c.is_zero();
            }
            if (!nonzero) continue;
            for (u32 d = 1; d <= 2; ++d)
                CHECK(count_points(X, d) == count_points_naive(X, d));
        }
    }
}

TEST_CASE("smoothness certification") {
    SECTION("Fermat over F_5 is smooth") {
        CHECK(singular_points(fermat(Field::get(5, 1))).empty());
    }
    SECTION("cone misses t: singular exactly at the apex") {
        const Field& F = Field::get(5, 1);
        Form X = cubic_surface(F);
        X.at(Expo{3, 0, 0, 0}) = F.one();
        X.at(Expo{0, 3, 0, 0}) = F.one();
        X.at(Expo{0, 0, 3, 0}) = F.one();
        auto sing = singular_points(X);
        REQUIRE(sing.size() == 1);
        CHECK(sing[0].degree == 1);
        CHECK(same_point(sing[0].pt, ProjPt{F.zero(), F.zero(), F.zero(), F.one()}));
    }
    SECTION("the one-point normal form over F_2 is singular at degree-3 points") {
        const Field& F = Field::get(2, 1);
        Form X = cubic_surface(F);
        // x^2 y + y^2 z + z^2 x + (xy + xz + yz) t + t^3
        X.at(Expo{2, 1, 0, 0}) = F.one();
        X.at(Expo{0, 2, 1, 0}) = F.one();
        X.at(Expo{1, 0, 2, 0}) = F.one();
        X.at(Expo{1, 1, 0, 1}) = F.one();
        X.at(Expo{1, 0, 1, 1}) = F.one();
        X.at(Expo{0, 1, 1, 1}) = F.one();
        X.at(Expo{0, 0, 0, 3}) = F.one();
        auto sing = singular_points(X);
        REQUIRE(!sing.empty());
        bool found = false;
        const Field& f8 = Field::get(2, 3);
        // xi^3 + xi + 1 = 0; the singular points are (xi : xi^2 : xi^4 : 1)
        auto roots = find_roots(UniPoly::from(f8, {f8.one(), f8.one(), f8.zero(), f8.one()}));
        REQUIRE(roots.size() == 3);
        for (const auto& sp : sing) {
            if (sp.degree != 3) continue;
            for (const Fe& xi : roots) {
                ProjPt want = normalize_point(ProjPt{xi, xi * xi, pow(xi, 4), f8.one()});
                if (same_point(embed_point(sp.pt, f8), want)) found = true;
            }
        }
        CHECK(found);
    }
}

TEST_CASE("reducedness of cubic forms") {
    const Field& F = Field::get(3, 1);
    // in characteristic 3 the Fermat form is the cube of a hyperplane
    CHECK(!is_reduced_cubic(fermat(F)));
    CHECK(is_reduced_cubic(fermat(Field::get(5, 1))));
    // x^2 * (x + y + t) is non-reduced
    Form L2 = cubic_surface(F);
    L2.at(Expo{3, 0, 0, 0}) = F.one();
    L2.at(Expo{2, 1, 0, 0}) = F.one();
    L2.at(Expo{2, 0, 0, 1}) = F.one();
    CHECK(!is_reduced_cubic(L2));
    // Fermat over F_2 is reduced (and in fact smooth) even though its
    // F_2-points coincide with a hyperplane's
    CHECK(is_reduced_cubic(fermat(Field::get(2, 1))));
    CHECK(singular_points(fermat(Field::get(2, 1))).empty());
}

TEST_CASE("count budget produces a clean refusal") {
    const Field& F = Field::get(7, 1);
    CountBudget tiny{1000};
    CHECK_THROWS_AS(count_points(fermat(F), 2, tiny), Error);
    try {
        count_points(fermat(F), 2, tiny);
    } catch (const Error& e) {
        CHECK(e.kind == Error::Kind::budget);
        CHECK(std::string(e.what()).find("2451") != std::string::npos); // 49^2+49+1
    }
}
