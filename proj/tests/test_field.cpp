#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "zeta27/tower.hpp"

using namespace zeta27;

TEST_CASE("canonical moduli are the smallest irreducibles") {
    const Field& f8 = Field::get(2, 3);
    // x^3 + x + 1 beats x^3 + x^2 + 1 in the base-2 coefficient order
    CHECK(f8.modulus == std::vector<u32>{1, 1, 0, 1});

    const Field& f3 = Field::get(3, 1);
    CHECK(f3.size == 3);
    CHECK(f3.modulus == std::vector<u32>{0, 1});

    const Field& f9 = Field::get(3, 2);
    CHECK(f9.modulus == std::vector<u32>{1, 0, 1}); // x^2 + 1

    CHECK_THROWS_AS(Field::get(6, 1), Error);
    CHECK_THROWS_AS(Field::get(1, 1), Error);
}

TEST_CASE("prime field and extension arithmetic basics") {
    const Field& f3 = Field::get(3, 1);
    CHECK(f3.from_int(2) + f3.from_int(2) == f3.from_int(1));

    const Field& f8 = Field::get(2, 3);
    Fe g = f8.gen();
    CHECK(pow(g, 3) == g + f8.one()); // defining relation of x^3 + x + 1

    const Field& f5 = Field::get(5, 1);
    CHECK(inv(f5.from_int(2)) == f5.from_int(3));
    CHECK_THROWS_AS(inv(f5.zero()), Error);
    CHECK_THROWS_AS(f5.from_int(1) / f5.zero(), Error);
}

TEST_CASE("x^3 - x - 1 has a root in F_27 and none in F_3") {
    const Field& f27 = Field::get(3, 3);
    auto poly_in = [](const Field& F) {
        // x^3 - x - 1
        return UniPoly::from(F, {F.from_int(-1), F.from_int(-1), F.zero(), F.one()});
    };
    CHECK(find_roots(poly_in(Field::get(3, 1))).empty());
    auto roots = find_roots(poly_in(f27));
    REQUIRE(roots.size() == 3);
    // one Frobenius orbit
    CHECK(std::set<std::vector<u32>>{roots[0].c, roots[1].c, roots[2].c} ==
          std::set<std::vector<u32>>{roots[0].c, frobenius(roots[0], 1).c, frobenius(roots[0], 2).c});
}

TEST_CASE("field axioms hold exhaustively on small fields") {
    for (auto [p, k] : {std::pair<u32, u32>{2, 3}, {3, 2}, {5, 1}, {7, 1}, {3, 4}, {2, 6}}) {
        const Field& F = Field::get(p, k);
        REQUIRE(F.size <= 81);
        for (u64 i = 0; i < F.size; ++i) {
            Fe a = F.element(i);
            CHECK(F.index_of(a) == i);
            for (u64 j = 0; j < F.size; ++j) {
                Fe b = F.element(j);
                CHECK(a * b == b * a);
                CHECK(a + b == b + a);
                if (!b.is_zero()) CHECK((a / b) * b == a);
            }
            if (!a.is_zero()) CHECK(a * inv(a) == F.one());
        }
        // distributivity on a sample grid
        for (u64 i = 0; i < F.size; ++i)
            for (u64 j = 0; j < F.size; j += 3)
                for (u64 l = 0; l < F.size; l += 5) {
                    Fe a = F.element(i), b = F.element(j), c = F.element(l);
                    CHECK(a * (b + c) == a * b + a * c);
                    CHECK((a * b) * c == a * (b * c));
                }
    }
}

TEST_CASE("field axioms hold on seeded random triples of a larger field") {
    const Field& F = Field::get(7, 4); // 2401 elements
    u64 s = 0x12345678;
    auto next = [&] {
        s ^= s << 13; s ^= s >> 7; s ^= s << 17;
        return s % F.size;
    };
    for (int t = 0; t < 10000; ++t) {
        Fe a = F.element(next()), b = F.element(next()), c = F.element(next());
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * inv(a) == F.one());
    }
}

TEST_CASE("frobenius is an automorphism of order exactly k") {
    for (auto [p, k] : {std::pair<u32, u32>{2, 3}, {3, 3}, {5, 2}, {3, 6}, {2, 8}}) {
        const Field& F = Field::get(p, k);
        REQUIRE(F.size <= 729);
        // fixes the prime field
        for (u32 c = 0; c < p; ++c) CHECK(frobenius(F.from_int(c), 1) == F.from_int(c));
        // order exactly k on the whole field
        bool all_fixed_early = true;
        for (u64 i = 0; i < F.size; ++i) {
            Fe a = F.element(i);
            CHECK(frobenius(a, k) == a);
            Fe b = frobenius(a, 1);
            CHECK(frobenius(a + a, 1) == b + b);
        }
        for (u32 e = 1; e < k; ++e) {
            bool fixes_all = true;
            for (u64 i = 0; i < F.size && fixes_all; ++i)
                fixes_all = frobenius(F.element(i), e) == F.element(i);
            CHECK(!fixes_all);
            all_fixed_early = all_fixed_early && fixes_all;
        }
        // multiplicativity on a grid
        for (u64 i = 0; i < F.size; i += 7)
            for (u64 j = 0; j < F.size; j += 5) {
                Fe a = F.element(i), b = F.element(j);
                CHECK(frobenius(a * b, 1) == frobenius(a, 1) * frobenius(b, 1));
            }
    }
    const Field& f8 = Field::get(2, 3);
    CHECK(frobenius(f8.gen(), 3) == f8.gen());
}

TEST_CASE("embeddings are homomorphisms and descend round-trips") {
    const Field& f3 = Field::get(3, 1);
    const Field& f9 = Field::get(3, 2);
    const Field& f27 = Field::get(3, 3);

    CHECK(embed_into(f3.one(), f9) == f9.one());

    // b in F_27 with b^3 = b + 1 generates a cubic extension: no descent to F_3
    auto roots = find_roots(UniPoly::from(f27, {f27.from_int(-1), f27.from_int(-1), f27.zero(), f27.one()}));
    REQUIRE(!roots.empty());
    CHECK(!descend_to(roots[0], f3).has_value());
    CHECK(degree_over(roots[0], 1) == 3);

    // round trip through F_9
    for (u32 c = 0; c < 3; ++c) {
        Fe up = embed_into(f3.from_int(c), f9);
        auto back = descend_to(up, f3);
        REQUIRE(back.has_value());
        CHECK(*back == f3.from_int(c));
    }

    // homomorphism on all pairs F_9 -> F_{3^6}
    const Field& f729 = Field::get(3, 6);
    for (u64 i = 0; i < f9.size; ++i)
        for (u64 j = 0; j < f9.size; ++j) {
            Fe a = f9.element(i), b = f9.element(j);
            CHECK(embed_into(a + b, f729) == embed_into(a, f729) + embed_into(b, f729));
            CHECK(embed_into(a * b, f729) == embed_into(a, f729) * embed_into(b, f729));
        }

    // tower compatibility: F_3 -> F_27 -> F_{3^6}? (27 does not divide 3^6 as degrees: 3 | 6)
    for (u32 c = 0; c < 3; ++c) {
        Fe direct = embed_into(f3.from_int(c), f729);
        Fe via = embed_into(embed_into(f3.from_int(c), f27), f729);
        CHECK(direct == via);
    }
}

TEST_CASE("quadratic character, square roots, cube root census") {
    const Field& f3 = Field::get(3, 1);
    CHECK(quadratic_character(f3.from_int(2)) == -1);
    CHECK(quadratic_character(f3.zero()) == 0);

    const Field& f5 = Field::get(5, 1);
    auto r = sqrt(f5.from_int(4));
    REQUIRE(r.has_value());
    CHECK((*r == f5.from_int(2) || *r == f5.from_int(3)));
    CHECK(!sqrt(f5.from_int(2)).has_value());

    const Field& f7 = Field::get(7, 1);
    CHECK(cube_root_census(f7.one()) == 3);
    // oracle: scan F_7 for cubes of 1
    int n = 0;
    for (u64 i = 0; i < 7; ++i)
        if (pow(f7.element(i), 3) == f7.one()) ++n;
    CHECK(n == 3);

    const Field& f8 = Field::get(2, 3);
    CHECK_THROWS_AS(sqrt(f8.one()), Error);
    CHECK_THROWS_AS(quadratic_character(f8.one()), Error);
}

TEST_CASE("cube census totals and bijectivity when |F| = 2 mod 3") {
    for (auto [p, k] : {std::pair<u32, u32>{5, 1}, {2, 1}, {11, 1}, {2, 5}, {5, 2}, {3, 3}, {2, 7}, {7, 1}, {13, 1}}) {
        const Field& F = Field::get(p, k);
        u64 total = 0;
        for (u64 i = 0; i < F.size; ++i) total += u64(cube_root_census(F.element(i)));
        CHECK(total == F.size); // every element is a cube of something, with multiplicity
        if (F.size % 3 == 2) {
            REQUIRE(F.size <= 128);
            std::set<u64> cubes;
            for (u64 i = 0; i < F.size; ++i) cubes.insert(F.index_of(pow(F.element(i), 3)));
            CHECK(cubes.size() == F.size);
        }
    }
}

TEST_CASE("find_nonsquare returns the smallest non-square") {
    CHECK(find_nonsquare(Field::get(3, 1)) == Field::get(3, 1).from_int(2));
    CHECK(find_nonsquare(Field::get(5, 1)) == Field::get(5, 1).from_int(2));
    // in F_9 the first non-square satisfies a^4 = -1
    const Field& f9 = Field::get(3, 2);
    Fe a = find_nonsquare(f9);
    CHECK(pow(a, 4) == -f9.one());
    CHECK_THROWS_AS(find_nonsquare(Field::get(2, 2)), Error);
}

TEST_CASE("element order") {
    const Field& f9 = Field::get(3, 2);
    int primitive = 0;
    for (u64 i = 1; i < 9; ++i)
        if (element_order(f9.element(i)) == 8) ++primitive;
    CHECK(primitive == 4); // phi(8)
}
