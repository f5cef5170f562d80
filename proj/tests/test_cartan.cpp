#include "doctest.h"
#include "helpers.hpp"

#include "superroot/cartan.hpp"

#include <random>

using namespace testing;

TEST_SUITE("cartan")
{
    TEST_CASE("normalize scales rows with nonzero diagonal")
    {
        CHECK(normalize(mat({{4, -2}, {-1, 2}}), {0, 0}).matrix() == mat({{2, -1}, {-1, 2}}));
        CHECK(normalize(mat({{0, 1}, {-1, 2}}), {1, 0}).matrix() == mat({{0, 1}, {-1, 2}}));
        CHECK(code_of([] { normalize(mat({{0, 0}, {0, 0}}), {0, 0}); }) == ErrorCode::ZeroMatrix);
        CHECK(code_of([] { normalize(mat({{2, -1}}), {0}); }) == ErrorCode::DimensionMismatch);
        // rational scaling
        auto c = normalize(mat({{3, -1}, {-1, 2}}), {0, 0});
        CHECK(c.a(0, 1) == Rational(-2, 3));
    }

    TEST_CASE("constructor rejects unnormalized data")
    {
        CHECK(code_of([] { CartanData(mat({{1, 0}, {0, 2}}), {0, 0}); }) == ErrorCode::NotNormalized);
    }

    TEST_CASE("validate reads the three admissibility conditions")
    {
        auto ok = validate(normalize(mat({{2, -1}, {-1, 2}}), {0, 0}));
        CHECK(ok.admissible);
        CHECK(ok.regular);
        CHECK(ok.symmetrizable);
        CHECK(ok.indecomposable);

        auto odd = validate(normalize(mat({{2, -1}, {-1, 2}}), {1, 0}));
        CHECK_FALSE(odd.admissible);
        REQUIRE(odd.admissibility_violations.size() == 1);
        CHECK(odd.admissibility_violations[0].condition == 2);
        CHECK(odd.admissibility_violations[0].i == 0);
        CHECK(odd.admissibility_violations[0].j == 1);

        // a_22 = 2 and a_21 = 0 force a_12 = 0 (condition 3); also singular
        auto sing = validate(normalize(mat({{0, 1}, {0, 2}}), {1, 0}));
        CHECK_FALSE(sing.admissible);
        REQUIRE(sing.admissibility_violations.size() == 1);
        CHECK(sing.admissibility_violations[0].condition == 3);
        CHECK(sing.admissibility_violations[0].i == 1);
        CHECK(sing.admissibility_violations[0].j == 0);
        CHECK_FALSE(sing.regular);
        CHECK(sing.irregular_pairs.size() >= 1);

        // even isotropic row must vanish (condition 1)
        auto heis = validate(normalize(mat({{0, -1}, {-1, 2}}), {0, 0}));
        CHECK_FALSE(heis.admissible);
        CHECK(heis.admissibility_violations[0].condition == 1);
    }

    TEST_CASE("symmetrizer")
    {
        auto d = symmetrizer(normalize(mat({{2, -1}, {-1, 2}}), {0, 0}));
        REQUIRE(d);
        CHECK(*d == std::vector<Rational>{1, 1});

        d = symmetrizer(normalize(mat({{2, -1}, {-2, 2}}), {0, 0}));
        REQUIRE(d);
        CHECK(*d == std::vector<Rational>{1, Rational(1, 2)});

        d = symmetrizer(normalize(mat({{0, 1}, {-1, 2}}), {1, 0}));
        REQUIRE(d);
        CHECK(*d == std::vector<Rational>{1, -1});

        // ratio product around the cycle is 2 * 1 * 1 != 1
        auto cyc = normalize(mat({{2, -2, -1}, {-1, 2, -1}, {-1, -1, 2}}), {0, 0, 0});
        CHECK_FALSE(symmetrizer(cyc));
        CHECK_FALSE(validate(cyc).symmetrizable);
    }

    TEST_CASE("symmetrizer identity holds exactly on random symmetrizable matrices")
    {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> ent(-3, 0), dval(1, 4);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 2 + trial % 4;
            std::vector<Rational> dd(n);
            for (auto& x : dd)
                x = dval(rng);
            // B symmetric, A = D^-1 B, rows normalized afterwards
            RationalMatrix b = zero_matrix(n, n);
            for (int i = 0; i < n; ++i) {
                b[i][i] = 2 * dd[i];
                for (int j = i + 1; j < n; ++j)
                    b[i][j] = b[j][i] = ent(rng);
                b[i][(i + 1) % n] = b[(i + 1) % n][i] = -1; // keep it connected
            }
            RationalMatrix a = b;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    a[i][j] = b[i][j] / dd[i];
            auto c = normalize(a, std::vector<int>(n, 0));
            auto d = symmetrizer(c);
            REQUIRE(d);
            CHECK((*d)[0] == 1);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    CHECK((*d)[i] * c.a(i, j) == (*d)[j] * c.a(j, i));
            // normalize is idempotent
            CHECK(normalize(c.matrix(), c.parities()) == c);
        }
    }

    TEST_CASE("indecomposable")
    {
        CHECK(is_indecomposable(normalize(mat({{2, -1}, {-1, 2}}), {0, 0})));
        CHECK_FALSE(is_indecomposable(normalize(mat({{2, 0}, {0, 2}}), {0, 0})));
    }

    TEST_CASE("rank-one types")
    {
        auto c = normalize(mat({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}), {1, 0, 0, 1});
        CHECK(rank_one_type(c, 0) == RankOneType::Osp12);
        CHECK(rank_one_type(c, 1) == RankOneType::Sl2);
        CHECK(rank_one_type(c, 2) == RankOneType::Heisenberg3);
        CHECK(rank_one_type(c, 3) == RankOneType::Sl11);
        CHECK(code_of([&] { rank_one_type(c, 4); }) == ErrorCode::IndexOutOfRange);
    }

    TEST_CASE("every catalog Cartan matrix is admissible and regular")
    {
        for (auto t : {"A(0,1)", "A(1,2)", "A(0,3)", "B(1,1)", "B(0,2)", "B(2,1)", "C(3)", "D(2,1)", "D(3,2)",
                       "A(0,1)^(1)", "B(1,1)^(1)", "C(2)^(1)", "D(2,1)^(1)", "A(2,2)^(4)", "A(2,4)^(4)"}) {
            CAPTURE(t);
            auto rep = validate(RootSystemHandle::build(t).cartan());
            CHECK(rep.admissible);
            CHECK(rep.regular);
            CHECK(rep.symmetrizable);
            CHECK(rep.indecomposable);
        }
    }
}
