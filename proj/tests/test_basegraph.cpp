#include "doctest.h"
#include "helpers.hpp"

#include "superroot/basegraph.hpp"
#include "superroot/rootspace.hpp"

#include <algorithm>
#include <set>

using namespace testing;

namespace {

// coordinates of v in the basis b (exact Gaussian elimination), or nullopt
std::optional<std::vector<Rational>> coords_in(const std::vector<RootVector>& b, const RootVector& v)
{
    const std::size_t n = b.size();
    RationalMatrix m(n, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            m[r][c] = Rational(static_cast<long>(b[c][r]));
        m[r][n] = Rational(static_cast<long>(v[r]));
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        std::swap(m[p], m[c]);
        for (std::size_t r = 0; r < n; ++r)
            if (r != c && m[r][c] != 0) {
                Rational f = m[r][c] / m[c][c];
                for (std::size_t k = c; k <= n; ++k)
                    m[r][k] -= f * m[c][k];
            }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = m[i][n] / m[i][i];
    return x;
}

std::set<RootVector> positive_wrt(const std::vector<RootVector>& base, const std::vector<RootVector>& roots)
{
    std::set<RootVector> out;
    for (const auto& r : roots) {
        auto x = coords_in(base, r);
        REQUIRE(x);
        bool pos = true;
        for (auto& c : *x)
            pos = pos && c >= 0;
        if (pos)
            out.insert(r);
    }
    return out;
}

} // namespace

TEST_SUITE("basegraph")
{
    TEST_CASE("odd reflection in A(0,1)")
    {
        auto c = normalize(mat({{0, 1}, {-1, 2}}), {1, 0});
        Base b = odd_reflect_base(standard_base(c), 0, c);
        CHECK(b.roots[0] == RootVector{-1, 0});
        CHECK(b.roots[1] == RootVector{1, 1});
        CHECK(b.coroots[0] == CorootVector::unit(2, 0));
        CHECK(b.coroots[1] == CorootVector::unit(2, 1) - CorootVector::unit(2, 0));
        // reflecting back returns the standard base
        Base back = odd_reflect_base(b, 0, c);
        CHECK(back.key() == standard_base(c).key());

        CHECK(code_of([&] { odd_reflect_base(standard_base(c), 1, c); }) == ErrorCode::NotIsotropicOdd);
        auto bad = CartanData(mat({{0, 0}, {-1, 2}}), {1, 0});
        CHECK(code_of([&] { odd_reflect_base(standard_base(bad), 0, bad); }) == ErrorCode::NotRegularInBase);
    }

    TEST_CASE("even reflection")
    {
        auto c = normalize(mat({{2, -1}, {-1, 2}}), {0, 0});
        Base b = even_reflect_base(standard_base(c), 0, c);
        CHECK(b.roots[0] == RootVector{-1, 0});
        CHECK(b.roots[1] == RootVector{1, 1});
        auto c2 = normalize(mat({{2, 0}, {0, 2}}), {0, 0});
        CHECK(even_reflect_base(standard_base(c2), 0, c2).roots[1] == RootVector{0, 1});
        auto iso = normalize(mat({{0, 1}, {-1, 2}}), {1, 0});
        CHECK(code_of([&] { even_reflect_base(standard_base(iso), 0, iso); }) == ErrorCode::IsotropicReflector);
        // every base Cartan matrix stays normalized
        for (std::size_t i = 0; i < 2; ++i) {
            auto a = base_cartan(even_reflect_base(standard_base(c), i, c), c);
            CHECK(a[0][0] == 2);
            CHECK(a[1][1] == 2);
        }
    }

    TEST_CASE("real roots of small types")
    {
        auto a01 = normalize(mat({{0, 1}, {-1, 2}}), {1, 0});
        auto e = enumerate_real_roots(a01, 10, 10);
        CHECK(e.list() == std::vector<RootVector>{{-1, -1}, {-1, 0}, {0, -1}, {0, 1}, {1, 0}, {1, 1}});
        CHECK(e.complete_up_to == kUnbounded);
        CHECK(e.roots.at({1, 0}).isotropic);
        CHECK_FALSE(e.roots.at({0, 1}).isotropic);

        auto b01 = normalize(mat({{2}}), {1});
        CHECK(enumerate_real_roots(b01, 4, 4).list() == std::vector<RootVector>{{-2}, {-1}, {1}, {2}});

        auto aff = RootSystemHandle::build("B(1,1)^(1)");
        auto e1 = enumerate_real_roots(aff.cartan(), 1, 6);
        for (std::size_t i = 0; i < aff.rank(); ++i) {
            CHECK(e1.roots.count(RootVector::unit(aff.rank(), i)));
            CHECK(e1.roots.count(-RootVector::unit(aff.rank(), i)));
        }
    }

    TEST_CASE("base graph agrees with the catalog")
    {
        for (auto t : {"A(0,2)", "A(1,2)", "B(1,1)", "B(0,2)", "B(2,1)", "C(3)", "D(2,1)"}) {
            CAPTURE(t);
            auto h = RootSystemHandle::build(t);
            auto e = enumerate_real_roots(h.cartan(), 40, 40);
            CHECK(e.complete_up_to == kUnbounded);
            CHECK(e.list() == h.roots_up_to_degree(0, true));
            for (const auto& [v, info] : e.roots) {
                auto k = classify(v, h);
                CHECK(k.parity == info.parity);
                CHECK(k.isotropic == info.isotropic);
            }
        }
        for (auto t : {"A(0,1)^(1)", "B(1,1)^(1)", "A(2,2)^(4)"}) {
            CAPTURE(t);
            auto h = RootSystemHandle::build(t);
            auto e = enumerate_real_roots(h.cartan(), 7, 20);
            CHECK(e.list() == h.roots_up_to_height(7, true));
        }
    }

    TEST_CASE("enumerated real roots: negatives and multiples")
    {
        for (auto t : {"B(1,2)", "A(0,2)^(1)", "B(1,1)^(1)"}) {
            auto h = RootSystemHandle::build(t);
            auto e = enumerate_real_roots(h.cartan(), 8, 16);
            for (const auto& [v, info] : e.roots) {
                if (v.height() <= 8)
                    CHECK(e.roots.count(-v));
                for (std::int64_t k = 2; k <= 3; ++k) {
                    const bool present = h.is_real(k * v);
                    if (k == 2)
                        CHECK(present == (info.parity == 1 && !info.isotropic));
                    else
                        CHECK_FALSE(present);
                }
            }
        }
    }

    TEST_CASE("principal roots")
    {
        auto a01 = normalize(mat({{0, 1}, {-1, 2}}), {1, 0});
        CHECK(principal_roots(a01) == std::vector<RootVector>{{0, 1}});
        CHECK(principal_roots(normalize(mat({{2}}), {1})) == std::vector<RootVector>{{2}});
        // no isotropic simple root: the even simple roots and doubled odd ones
        auto b02 = RootSystemHandle::build("B(0,2)");
        CHECK(principal_roots(b02.cartan()) == std::vector<RootVector>{{0, 2}, {1, 0}});
        // principal roots are even roots of the realization side (catalog)
        auto h = RootSystemHandle::build("B(1,2)");
        for (const auto& p : principal_roots(h.cartan())) {
            CHECK(h.is_real(p));
            CHECK(classify(p, h).parity == 0);
        }
    }

    TEST_CASE("exchange identity for odd and even reflections")
    {
        for (auto t : {"A(1,2)", "B(1,1)", "B(2,1)", "D(2,1)", "C(3)"}) {
            CAPTURE(t);
            auto h = RootSystemHandle::build(t);
            const auto& c = h.cartan();
            auto roots = h.roots_up_to_degree(0, false);
            for (const Base& b : odd_reflection_bases(c)) {
                auto pos = positive_wrt(b.roots, roots);
                auto a = base_cartan(b, c);
                for (std::size_t i = 0; i < b.size(); ++i) {
                    const RootVector al = b.roots[i];
                    Base s;
                    if (a[i][i] == 0)
                        s = odd_reflect_base(b, i, c);
                    else
                        s = even_reflect_base(b, i, c);
                    auto pos2 = positive_wrt(s.roots, roots);
                    auto lhs = pos, rhs = pos2;
                    lhs.erase(al);
                    lhs.erase(2 * al);
                    rhs.erase(-al);
                    rhs.erase(-2 * al);
                    CHECK(lhs == rhs);
                }
            }
        }
    }

    TEST_CASE("even and odd reflections commute up to relabeling")
    {
        for (auto t : {"A(1,2)", "B(1,1)", "B(2,1)", "D(2,1)"}) {
            CAPTURE(t);
            auto h = RootSystemHandle::build(t);
            const auto& c = h.cartan();
            for (const Base& b : odd_reflection_bases(c)) {
                auto a = base_cartan(b, c);
                for (std::size_t i = 0; i < b.size(); ++i) {
                    if (a[i][i] != 0)
                        continue;
                    for (std::size_t g = 0; g < b.size(); ++g) {
                        if (a[g][g] == 0)
                            continue;
                        // w s_a (Sigma) versus s_{w(a)} w (Sigma), w = s_gamma
                        Base left = even_reflect_base(odd_reflect_base(b, i, c), b.roots[g], b.coroots[g], c);
                        Base right = odd_reflect_base(even_reflect_base(b, g, c), i, c);
                        CHECK(left.key() == right.key());
                    }
                }
            }
        }
    }

    TEST_CASE("non-regular base is reported")
    {
        // odd reflection of alpha_1 produces an odd non-isotropic root with pairing -3
        auto c = normalize(mat({{0, 1}, {-3, 2}}), {1, 0});
        CHECK(code_of([&] { enumerate_real_roots(c, 4, 8); }) == ErrorCode::NonRegularBaseEncountered);
    }
}
