#include "frey/poly.hpp"

#include <doctest.h>

using namespace frey;
using namespace frey::poly;

TEST_CASE("sturm counts real roots")
{
    // x^3 - 15x - 5: three real roots
    CHECK(count_real_roots({-5, -15, 0, 1}) == 3);
    // x^3 - 2: one real root
    CHECK(count_real_roots({-2, 0, 0, 1}) == 1);
    // x^2 + 1: none
    CHECK(count_real_roots({1, 0, 1}) == 0);
    // x^2 - 2: two
    CHECK(count_real_roots({-2, 0, 1}) == 2);
}

TEST_CASE("discriminants match the closed cubic formula")
{
    // x^3 + px + q has disc -4p^3 - 27q^2
    auto cubic_disc = [](long p, long q) { return Int(-4) * p * p * p - Int(27) * q * q; };
    CHECK(discriminant({-5, -15, 0, 1}) == cubic_disc(-15, -5));
    CHECK(discriminant({-5, -15, 0, 1}) == 12825);
    CHECK(discriminant({-2, 1, 0, 1}) == cubic_disc(1, -2));
    // real cyclotomic cubic x^3 - x^2 - 2x + 1 has discriminant 49
    CHECK(discriminant({1, -2, -1, 1}) == 49);
    // quadratic x^2 - d
    CHECK(discriminant({-7, 0, 1}) == 28);
}

TEST_CASE("resultant computes norms of linear images")
{
    // Res(x^2 - 2, x - 3) = 3^2 - 2 = 7
    Rat r = resultant(to_q({-2, 0, 1}), to_q({-3, 1}));
    CHECK(r == 7);
}

TEST_CASE("factorization mod p on known inputs")
{
    // x^3 - 15x - 5 is x^3 mod 5
    auto fac5 = fp_factor(to_fp({-5, -15, 0, 1}, 5));
    REQUIRE(fac5.size() == 1);
    CHECK(fac5[0].multiplicity == 3);
    CHECK(degree(lift_fp(fac5[0].g)) == 1);
    // and irreducible mod 2
    CHECK(fp_is_irreducible(to_fp({-5, -15, 0, 1}, 2)));
    // x^3 - x^2 - 2x + 1 = (x+2)^3 mod 7
    auto fac7 = fp_factor(to_fp({1, -2, -1, 1}, 7));
    REQUIRE(fac7.size() == 1);
    CHECK(fac7[0].multiplicity == 3);
    // x^2 - 1 = (x-1)(x+1) mod 5
    auto fac = fp_factor(to_fp({-1, 0, 1}, 5));
    CHECK(fac.size() == 2);
}

TEST_CASE("factor product reassembles mod p")
{
    const long ps[] = {2, 3, 5, 13, 101};
    for (long p : ps) {
        // a few fixed polynomials with varied factorization shapes
        std::vector<ZPoly> polys = {
            {6, 11, 6, 1},        // (x+1)(x+2)(x+3)
            {-5, -15, 0, 1},      //
            {1, 2, 3, 4, 5, 1},   //
            {0, 0, 0, 1},         // x^3
            {4, 4, 1},            // (x+2)^2
        };
        for (const auto& f : polys) {
            auto fp = to_fp(f, p);
            if (degree(lift_fp(fp)) < 1) continue;
            auto fac = fp_factor(fp);
            ZPoly prod = {1};
            for (const auto& g : fac)
                for (int i = 0; i < g.multiplicity; ++i) prod = mul(prod, lift_fp(g.g));
            // compare mod p against the monic-scaled original
            auto lhs = to_fp(prod, p);
            auto rhs = fp;
            REQUIRE(lhs.c.size() == rhs.c.size());
            long lead = rhs.c.back();
            // fac is monic; multiply back by the original leading coefficient
            for (size_t i = 0; i < lhs.c.size(); ++i) {
                long scaled = static_cast<long>((static_cast<__int128>(lhs.c[i]) * lead) % p);
                CHECK(scaled == rhs.c[i]);
            }
        }
    }
}

TEST_CASE("dedekind criterion")
{
    // 5 is totally ramified in Z[x]/(x^3 - 15x - 5) (Eisenstein)
    auto ded = dedekind_factor({-5, -15, 0, 1}, 5);
    REQUIRE(ded.has_value());
    REQUIRE(ded->size() == 1);
    CHECK((*ded)[0].e == 3);
    CHECK((*ded)[0].f_deg == 1);
    // 7 in the real cyclotomic cubic: (x+2)^3, index prime to 7
    auto ded7 = dedekind_factor({1, -2, -1, 1}, 7);
    REQUIRE(ded7.has_value());
    CHECK((*ded7)[0].e == 3);
    // 2 in x^2 - 17: f = (x+1)^2 mod 2 but 2 divides the index of Z[sqrt(17)]
    auto ded2 = dedekind_factor({-17, 0, 1}, 2);
    CHECK(!ded2.has_value());
}

TEST_CASE("irreducibility over Q")
{
    CHECK(is_irreducible_over_q({-5, -15, 0, 1}));
    CHECK(is_irreducible_over_q({1, -2, -1, 1}));
    CHECK(is_irreducible_over_q({-2, 0, 1}));
    CHECK(!is_irreducible_over_q({6, 11, 6, 1}));     // (x+1)(x+2)(x+3)
    CHECK(!is_irreducible_over_q({1, 2, 3, 2, 1}));   // (x^2+x+1)^2
    CHECK(!is_irreducible_over_q({4, 0, 5, 0, 1}));   // (x^2+1)(x^2+4)
    CHECK(is_irreducible_over_q({-2, 0, 0, 0, 0, 1})); // x^5 - 2
    // degree 5 with no small-prime certificate still resolves
    CHECK(!is_irreducible_over_q({-6, 5, -4, 4, -2, 1})); // (x^2-x+2)(x^3-x^2+x-3)
}

TEST_CASE("real root approximations bracket the true roots")
{
    ZPoly f = {-5, -15, 0, 1};
    auto roots = real_root_approximations(f, 80);
    REQUIRE(roots.size() == 3);
    for (size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1] < roots[i]);
    for (const auto& r : roots) {
        Rat val = eval(to_q(f), r);
        Rat tol = make_rat(1, pow2(40));
        CHECK(abs(val) < Rat(100) * tol * pow2(20)); // loose sanity: tiny residual
    }
}

TEST_CASE("mod inverse in Q[x]")
{
    QPoly f = to_q({-5, -15, 0, 1});
    QPoly g = {Rat(1), Rat(1)}; // 1 + x
    QPoly inv = mod_inverse(g, f);
    QPoly prod = divrem(mul(inv, g), f).second;
    REQUIRE(prod.size() == 1);
    CHECK(prod[0] == 1);
}
