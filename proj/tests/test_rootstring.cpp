#include "doctest.h"
#include "helpers.hpp"

#include "superroot/rootstring.hpp"

using namespace testing;

namespace {

std::vector<RootVector> roots_of(const RootString& s)
{
    std::vector<RootVector> out;
    for (const auto& e : s.entries)
        out.push_back(e.root);
    return out;
}

std::string tags(const RootString& s)
{
    std::string t;
    for (const auto& e : s.entries)
        t += e.real ? 'R' : 'I';
    return t;
}

} // namespace

TEST_SUITE("rootstring")
{
    TEST_CASE("string through alpha itself")
    {
        for (auto t : {"B(1,1)", "A(0,2)", "B(1,1)^(1)"}) {
            auto h = RootSystemHandle::build(t);
            for (const auto& a : h.roots_up_to_height(4, true)) {
                auto s = root_string(h, a, a);
                for (const auto& r : roots_of(s))
                    CHECK((r == a || r == -a || r == 2 * a || r == -2 * a));
                CHECK(s.zero_slot == -1);
            }
        }
    }

    TEST_CASE("odd non-isotropic direction in B(1,1)")
    {
        auto h = RootSystemHandle::build("B(1,1)");
        auto e1 = ed(h, {1}, {0}), d1 = ed(h, {0}, {1});
        auto s = root_string(h, e1, d1);
        CHECK(roots_of(s) == std::vector<RootVector>{e1 - d1, e1, e1 + d1});
        auto v = check_unbroken(h, s);
        CHECK(v.p == 1);
        CHECK(v.q == 1);
        CHECK(v.pairing == 0);
        auto pat = string_pattern(s);
        CHECK(pat.q_imag == 0);
        CHECK(pat.p_real == 3);
    }

    TEST_CASE("imaginary root inside an affine string")
    {
        auto h = RootSystemHandle::build("B(1,1)^(1)");
        auto e1 = ed(h, {1}, {0});
        auto beta = ed(h, {-1}, {0}, 1);
        auto s = root_string(h, beta, e1);
        CHECK(roots_of(s) == std::vector<RootVector>{beta, beta + e1, beta + 2 * e1});
        CHECK(tags(s) == "RIR");
        auto pat = string_pattern(s);
        CHECK(pat.p_real == 1);
        CHECK(pat.q_imag == 1);
        CHECK(pat.r_real == 1);
        auto v = check_unbroken(h, s);
        CHECK(v.p == 0);
        CHECK(v.q == 2);
        CHECK(v.pairing == -2);
    }

    TEST_CASE("even root string through itself")
    {
        auto h = RootSystemHandle::build("A(1,2)");
        auto a = RootVector::unit(h.rank(), 0);
        REQUIRE(classify(a, h).parity == 0);
        auto v = check_unbroken(h, root_string(h, a, a));
        CHECK(v.p - v.q == 2);
        CHECK(v.p == 2);
        CHECK(v.q == 0);
    }

    TEST_CASE("orthogonal pair gives p = q = 0")
    {
        auto h = RootSystemHandle::build("B(2,1)");
        auto d = ed(h, {0, 0}, {1});
        // 2 delta and eps_1 + eps_2 are orthogonal and neither sum nor difference is a root
        auto two_d = 2 * d;
        auto ee = ed(h, {1, 1}, {0});
        REQUIRE(h.is_real(two_d));
        auto v = check_unbroken(h, root_string(h, ee, two_d));
        CHECK(v.p == 0);
        CHECK(v.q == 0);
        CHECK(v.pairing == 0);
    }

    TEST_CASE("pattern shape violations")
    {
        RootString s;
        s.alpha = {1};
        s.beta = {1};
        for (std::int64_t k = 0; k < 4; ++k)
            s.entries.push_back({k, RootVector{1 + k}, k % 2 == 0});
        CHECK(code_of([&] { string_pattern(s); }) == ErrorCode::PatternViolation);
        s.entries.pop_back();
        s.entries.push_back({3, RootVector{4}, true});
        s.entries.push_back({4, RootVector{5}, true});
        // R I R R: q != 0 but p != r
        CHECK(code_of([&] { string_pattern(s); }) == ErrorCode::PatternViolation);
        RootString all_real = s;
        for (auto& e : all_real.entries)
            e.real = true;
        CHECK(string_pattern(all_real).q_imag == 0);
    }

    TEST_CASE("pairing laws hold on catalog roots")
    {
        for (auto t : {"A(0,2)", "B(1,1)", "B(1,1)^(1)"}) {
            auto h = RootSystemHandle::build(t);
            auto roots = h.roots_up_to_height(4, true);
            for (const auto& a : roots)
                for (const auto& b : roots)
                    for (const auto& law : pairing_laws(h, a, b))
                        CHECK_MESSAGE(law.pass, law.law << ": " << law.detail);
        }
    }

    TEST_CASE("isotropic beta value sets")
    {
        // beta isotropic, alpha non-isotropic, beta + k alpha isotropic -> pairing -k
        auto h = RootSystemHandle::build("B(1,1)");
        auto beta = ed(h, {-1}, {1}), alpha = ed(h, {1}, {0});
        REQUIRE(classify(beta + 2 * alpha, h).isotropic);
        bool seen = false;
        for (const auto& law : pairing_laws(h, alpha, beta, 2))
            if (law.law == kLawIsoPairing) {
                seen = true;
                CHECK(law.pass);
            }
        CHECK(seen);
        CHECK(h.coroot_pairing(beta, alpha) == -2);

        // isotropic alpha, real beta with alpha + beta real: alpha - beta not a root
        auto a = ed(h, {1}, {-1}), b = ed(h, {0}, {1});
        REQUIRE(h.is_real(a + b));
        CHECK_FALSE(h.is_root(a - b));
    }

    TEST_CASE("sweeps")
    {
        for (auto t : {"A(0,2)", "B(1,1)"}) {
            auto r = string_sweep(RootSystemHandle::build(t), 6);
            CHECK(r.strings > 0);
            CHECK(r.failures() == 0);
        }
        auto r = string_sweep(RootSystemHandle::build("A(0,2)^(1)"), 0, 1);
        CHECK(r.strings > 0);
        CHECK(r.failures() == 0);
        CHECK(r.find(kLawUnbroken));
        CHECK(r.find(kLawUnbroken)->checked > 0);
    }
}
