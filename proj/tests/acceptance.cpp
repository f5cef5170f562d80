// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "superroot/cli.hpp"
#include "superroot/io.hpp"
#include "superroot/oracle.hpp"
#include "superroot/rootstring.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace superroot;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
    void fail(const std::string& why)
    {
        if (pass)
            note = why;
        pass = false;
    }
    void expect(bool cond, const std::string& why)
    {
        if (!cond)
            fail(why);
    }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > limit_s)
        o.fail("took " + std::to_string(s) + " s, limit " + std::to_string(limit_s) + " s");
    if (!o.pass)
        ++failures;
    std::printf("%s  %d  %-58s %8.3f s%s%s\n", o.pass ? "PASS" : "FAIL", id, title, s, o.note.empty() ? "" : "  ",
                o.note.c_str());
    std::fflush(stdout);
}

RootVector ed(const RootSystemHandle& h, std::vector<std::int64_t> eps, std::vector<std::int64_t> del,
              std::int64_t null = 0)
{
    EpsDeltaVector v = h.zero_ed();
    v.eps = std::move(eps);
    v.del = std::move(del);
    v.null = null;
    return h.to_alpha(v);
}

std::vector<RootVector> pm(std::vector<RootVector> v)
{
    auto n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(-v[i]);
    return v;
}

bool certificate_passes(const Json& c, Outcome& o)
{
    for (const auto& a : c["assertions"])
        if (!a["pass"].get<bool>()) {
            o.fail(c["name"].get<std::string>() + ": " + a["name"].get<std::string>());
            return false;
        }
    return true;
}

// all pi-systems of size <= 2 among the given positive roots
std::vector<RootSet> small_pi_systems(const RootSystemHandle& h, const std::vector<RootVector>& pos)
{
    std::vector<RootSet> out;
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i; j < pos.size(); ++j) {
            std::vector<RootVector> v{pos[i]};
            if (j != i)
                v.push_back(pos[j]);
            RootSet s(h, v);
            if (is_pi_system(s).ok)
                out.push_back(s);
        }
    return out;
}

std::vector<RootVector> positives(const RootSystemHandle& h, std::int64_t degree)
{
    std::vector<RootVector> out;
    for (const auto& r : h.roots_up_to_degree(degree, true))
        if (r.is_positive())
            out.push_back(r);
    return out;
}

struct Family {
    RootSystemHandle h;
    std::vector<RootSet> sigmas;
    std::optional<std::int64_t> K;
};

std::vector<Family> theorem_families()
{
    std::vector<Family> fs;
    for (auto t : {"A(0,1)", "A(0,2)", "B(1,1)"}) {
        auto h = RootSystemHandle::build(t);
        fs.push_back({h, small_pi_systems(h, positives(h, 0)), std::nullopt});
    }
    // affine: pi-systems of size <= 2 among positive real roots of degree <= 1
    auto h = RootSystemHandle::build("B(1,1)^(1)");
    fs.push_back({h, small_pi_systems(h, positives(h, 1)), 3});
    return fs;
}

// Root set of A(2k,2l)^(4) written out clause by clause, kept apart from the catalog code.
bool twisted_clause_member(int k, int l, const std::vector<std::int64_t>& e, const std::vector<std::int64_t>& d,
                           std::int64_t n)
{
    std::vector<std::int64_t> nz_e, nz_d;
    std::size_t ce = 0, cd = 0;
    for (auto x : e)
        if (x != 0) {
            nz_e.push_back(x);
            ++ce;
        }
    for (auto x : d)
        if (x != 0) {
            nz_d.push_back(x);
            ++cd;
        }
    (void)k;
    (void)l;
    auto mod = [](std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; };
    auto unit = [](std::int64_t x) { return x == 1 || x == -1; };
    if (ce == 0 && cd == 0)
        return n != 0;                                            // (Z \ 0) null
    if (ce == 2 && cd == 0)
        return unit(nz_e[0]) && unit(nz_e[1]) && mod(n, 2) == 0;  // +-e_i +-e_j + 2r
    if (ce == 0 && cd == 2)
        return unit(nz_d[0]) && unit(nz_d[1]) && mod(n, 2) == 0;  // +-d_p +-d_q + 2r
    if (ce == 1 && cd == 0) {
        if (unit(nz_e[0]))
            return true;                                          // +-e_i + r
        return (nz_e[0] == 2 || nz_e[0] == -2) && mod(n, 4) == 2; // +-2e_i + (4r+2)
    }
    if (ce == 0 && cd == 1) {
        if (unit(nz_d[0]))
            return true;                                          // +-d_p + r
        return (nz_d[0] == 2 || nz_d[0] == -2) && mod(n, 4) == 0; // +-2d_p + 4r
    }
    if (ce == 1 && cd == 1)
        return unit(nz_e[0]) && unit(nz_d[0]) && mod(n, 2) == 0;  // +-e_i +-d_p + 2r
    return false;
}

} // namespace

int main()
{
    criterion(1, "isotropic affine pair: Psi, Pi(Psi), no pi-system, oracle", 10, [](Outcome& o) {
        certificate_passes(replay_isotropic_affine_pair(), o);
        for (auto t : {"B(1,1)^(1)", "A(0,1)^(1)", "A(1,2)^(1)", "D(2,1)^(1)"}) {
            auto h = RootSystemHandle::build(t);
            // first isotropic simple root
            RootVector al;
            for (std::size_t i = 0; i < h.rank(); ++i) {
                auto u = RootVector::unit(h.rank(), i);
                if (classify(u, h).isotropic && h.degree(u) == 0) {
                    al = u;
                    break;
                }
            }
            o.expect(!al.coords().empty(), std::string(t) + ": no isotropic simple root");
            auto dn = h.null_root();
            RootSet psi(h, pm({al, al + dn}));
            auto sc = classify_subset(psi);
            o.expect(sc.symmetric && sc.closed && sc.subroot_system, std::string(t) + ": Psi not closed subroot system");
            o.expect(pi_of_psi(psi) == RootSet(h, std::vector<RootVector>{al, al + dn}), std::string(t) + ": Pi(Psi)");
            o.expect(!admits_pi_system(psi, 12).has_value(), std::string(t) + ": admits a pi-system");
            auto r = Realization::build(h);
            auto s = generated_subalgebra(root_generators(r, psi, false), 4);
            o.expect(!s.truncated, std::string(t) + ": truncated span");
            o.expect(subalgebra_real_roots(s, h) == psi, std::string(t) + ": real roots of g(Psi)");
            o.expect(s.dimension() == 7, std::string(t) + ": dim " + std::to_string(s.dimension()));
        }
    });

    criterion(2, "pi-system whose closure is smaller than Psi, B(2,2)^(1)", 30, [](Outcome& o) {
        certificate_passes(replay_pi_system_closure_smaller(), o);
        auto h = RootSystemHandle::build("B(2,2)^(1)");
        auto x1 = ed(h, {1, 0}, {-1, 0}, 6), x2 = ed(h, {1, 0}, {-1, 0}, 1);
        auto x3 = ed(h, {0, 1}, {0, -1}, 2), x4 = ed(h, {0, -1}, {0, 1}, 3);
        RootSet psi(h, pm({x1, x2, x3, x4}));
        o.expect(psi.size() == 8, "Psi size");
        auto sc = classify_subset(psi);
        o.expect(sc.closed, "Psi not closed: " + sc.witness);
        auto pi = pi_of_psi(psi);
        o.expect(pi == RootSet(h, std::vector<RootVector>{x2, x3, x4}), "Pi(Psi) = " + pi.str());
        o.expect(is_pi_system(pi).ok, "Pi(Psi) not a pi-system");
        auto cl = closure_S_infinity(pi, 64);
        o.expect(cl.status == ClosureStatus::Stabilized, "closure truncated");
        o.expect(cl.set == RootSet(h, pm({x2, x3, x4})), "closure = " + cl.set.str());
        o.expect(!(cl.set == psi), "closure equals Psi");
    });

    std::size_t theorem_count = 0;
    criterion(3, "closure = real roots of g(Sigma), |Sigma| <= 2", 300, [&](Outcome& o) {
        for (const auto& f : theorem_families()) {
            auto r = Realization::build(f.h);
            std::size_t n = 0;
            for (const auto& sigma : f.sigmas) {
                auto v = verify_theorem_main(sigma, r, f.K);
                ++n;
                o.expect(v.equal, f.h.type().str() + " " + sigma.str() + ": " + v.detail);
                if (!f.h.is_affine())
                    o.expect(v.full_closure_checked, f.h.type().str() + " " + sigma.str() + ": mixed generation");
            }
            if (f.h.is_affine())
                o.expect(n >= 20, "only " + std::to_string(n) + " affine samples");
            theorem_count += n;
        }
        o.note = o.pass ? std::to_string(theorem_count) + " pi-systems" : o.note;
    });

    criterion(4, "root-string laws, height 8 and affine degree <= 3", 300, [](Outcome& o) {
        std::size_t strings = 0;
        for (auto t : {"A(0,2)", "B(1,1)", "B(2,1)"}) {
            auto rep = string_sweep(RootSystemHandle::build(t), 8);
            strings += rep.strings;
            for (const auto& [law, tally] : rep.laws)
                o.expect(tally.failed == 0, std::string(t) + " " + law + ": " + tally.first_witness);
            for (auto law : {kLawUnbroken, kLawPattern, kLawFourReal})
                o.expect(rep.find(law) && rep.find(law)->checked > 0, std::string(t) + ": " + law + " never checked");
        }
        for (auto t : {"A(0,2)^(1)", "B(1,1)^(1)", "B(2,1)^(1)"}) {
            auto rep = string_sweep(RootSystemHandle::build(t), 0, 3);
            strings += rep.strings;
            for (const auto& [law, tally] : rep.laws)
                o.expect(tally.failed == 0, std::string(t) + " " + law + ": " + tally.first_witness);
            for (auto law : {kLawUnbroken, kLawPattern, kLawFourReal, kLawIsoTwoReal})
                o.expect(rep.find(law) && rep.find(law)->checked > 0, std::string(t) + ": " + law + " never checked");
        }
        if (o.pass)
            o.note = std::to_string(strings) + " strings";
    });

    criterion(5, "A(2,2)^(4) membership by clause, base validation", 10, [](Outcome& o) {
        auto h = RootSystemHandle::build("A(2,2)^(4)");
        auto v = validate(h.cartan());
        o.expect(v.admissible && v.regular, "distinguished base not admissible/regular");
        struct Q {
            std::int64_t e, d, n;
        };
        std::vector<Q> qs{{2, 0, 2}, {2, 0, 4}, {1, 1, 2}, {0, 0, 3}};
        std::mt19937 rng(2024);
        std::uniform_int_distribution<int> r(-3, 3), s(0, 1), c(0, 7), any(-3, 3);
        auto sg = [&] { return s(rng) ? 1 : -1; };
        while (qs.size() < 200) {
            std::int64_t rr = r(rng);
            switch (c(rng)) {
            case 0: qs.push_back({sg(), 0, rr}); break;                             // +-e + r
            case 1: qs.push_back({0, sg(), rr}); break;                             // +-d + r
            case 2: qs.push_back({2 * sg(), 0, 4 * rr + 2 + (s(rng) ? 0 : 2)}); break; // member or off by 2
            case 3: qs.push_back({0, 2 * sg(), 4 * rr + (s(rng) ? 0 : 2)}); break;
            case 4: qs.push_back({sg(), sg(), 2 * rr + s(rng)}); break;             // even or odd null part
            case 5: qs.push_back({0, 0, rr}); break;
            default: qs.push_back({any(rng), any(rng), 3 * rr + s(rng)}); break;
            }
        }
        std::size_t members = 0;
        for (const auto& q : qs) {
            EpsDeltaVector x = h.zero_ed();
            x.eps = {q.e};
            x.del = {q.d};
            x.null = q.n;
            const bool want = twisted_clause_member(1, 1, x.eps, x.del, x.null);
            auto m = h.classify(x);
            members += want;
            o.expect(m.in_delta == want, "membership of " + x.str());
            if (want && m.in_delta) {
                o.expect(m.real == !(q.e == 0 && q.d == 0), "real/imaginary of " + x.str());
                o.expect(m.isotropic == (q.e != 0 && q.d != 0), "isotropy of " + x.str());
            }
        }
        o.expect(h.classify([&] { auto x = h.zero_ed(); x.eps = {2}; x.null = 2; return x; }()).in_delta,
                 "2e1 + 2 null");
        if (o.pass)
            o.note = std::to_string(qs.size()) + " queries, " + std::to_string(members) + " roots";
    });

    criterion(6, "Dynkin round trip and g(closure) = g(Sigma)", 300, [](Outcome& o) {
        std::size_t n = 0;
        for (const auto& f : theorem_families()) {
            auto r = Realization::build(f.h);
            for (const auto& sigma : f.sigmas) {
                auto rep = verify_dynkin_oracle(sigma, r, f.K);
                ++n;
                o.expect(rep.maps.pi_recovered, f.h.type().str() + " " + sigma.str() + ": Pi(closure) != Sigma");
                o.expect(rep.maps.closed_subroot, f.h.type().str() + " " + sigma.str() + ": " + rep.maps.closed_witness);
                o.expect(rep.spans_equal, f.h.type().str() + " " + sigma.str() + ": spans differ");
            }
        }
        if (o.pass)
            o.note = std::to_string(n) + " pi-systems";
    });

    criterion(7, "ad-nilpotency, Pi(Psi) nonempty, osp(1,2) modules", 120, [](Outcome& o) {
        for (auto t : {"A(0,1)", "A(0,2)", "A(1,2)", "A(2,1)", "B(0,1)", "B(1,1)", "B(2,1)", "B(1,2)", "B(0,2)", "C(3)",
                       "D(2,1)", "D(3,1)", "D(2,2)"}) {
            for (const auto& e : ad_nilpotency(Realization::build(RootSystemHandle::build(t))))
                o.expect(e.observed == e.expected, std::string(t) + ": nilpotency (" + std::to_string(e.i) + "," +
                                                       std::to_string(e.j) + ")");
        }

        std::mt19937 rng(99);
        std::vector<RootSystemHandle> hs;
        for (auto t : {"A(0,2)", "A(1,2)", "B(1,1)", "B(2,1)", "C(3)", "D(2,1)", "B(1,1)^(1)", "A(0,1)^(1)"})
            hs.push_back(RootSystemHandle::build(t));
        std::vector<RootSet> psis;
        std::size_t attempts = 0;
        while (psis.size() < 98 && attempts < 100000) {
            ++attempts;
            const auto& h = hs[rng() % hs.size()];
            auto pos = positives(h, h.is_affine() ? 1 : 0);
            std::vector<RootVector> pick;
            std::sample(pos.begin(), pos.end(), std::back_inserter(pick), 1 + rng() % 3, rng);
            RootSet sigma(h, pick);
            if (!is_pi_system(sigma).ok)
                continue;
            auto cl = closure_S_infinity(sigma, 24);
            if (cl.status != ClosureStatus::Stabilized)
                continue;
            psis.push_back(cl.set);
        }
        o.expect(psis.size() == 98, "could not sample closed subroot systems");
        {
            auto h = RootSystemHandle::build("B(1,1)^(1)");
            auto al = ed(h, {-1}, {1});
            psis.emplace_back(h, pm({al, al + h.null_root()}));
            auto b = RootSystemHandle::build("B(2,2)^(1)");
            psis.emplace_back(b, pm({ed(b, {1, 0}, {-1, 0}, 6), ed(b, {1, 0}, {-1, 0}, 1), ed(b, {0, 1}, {0, -1}, 2),
                                     ed(b, {0, -1}, {0, 1}, 3)}));
        }
        for (const auto& psi : psis) {
            auto sc = classify_subset(psi);
            o.expect(sc.closed && sc.subroot_system, psi.str() + ": not a closed subroot system");
            o.expect(!pi_of_psi(psi).empty(), psi.str() + ": Pi(Psi) empty");
        }

        auto b01 = Realization::build(RootSystemHandle::build("B(0,1)"));
        for (int k = 0; k <= 5; ++k)
            o.expect(osp12_module_consistent(osp12_module_table(k), b01), "osp(1,2) module k=" + std::to_string(k));
        if (o.pass)
            o.note = std::to_string(psis.size()) + " closed subroot systems";
    });

    return failures == 0 ? 0 : 1;
}
