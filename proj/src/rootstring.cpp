#include "superroot/rootstring.hpp"

#include "superroot/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace superroot {

std::size_t RootString::real_count() const
{
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.real; }));
}

RootString root_string(const RootSystemHandle& h, const RootVector& beta, const RootVector& alpha,
                       std::int64_t min_window)
{
    const auto ma = h.classify(alpha);
    if (!ma.real)
        throw Error(ErrorCode::NotARoot, alpha.str() + " is not a real root");
    RootString s;
    s.beta = beta;
    s.alpha = alpha;
    s.alpha_isotropic = ma.isotropic;
    std::map<std::int64_t, StringEntry> found;

    // returns true for a hit (root or the zero slot)
    auto probe = [&](std::int64_t k) {
        RootVector v = beta + k * alpha;
        if (v.is_zero()) {
            s.zero_slot = k;
            return true;
        }
        auto m = h.classify(v);
        if (!m.in_delta)
            return false;
        found[k] = {k, std::move(v), m.real};
        return true;
    };

    constexpr std::int64_t kHardCap = 512;
    if (!ma.isotropic) {
        probe(0);
        for (int dir : {1, -1}) {
            int misses = 0;
            std::int64_t k = dir;
            for (;; k += dir) {
                const std::int64_t ak = k < 0 ? -k : k;
                if (ak > kHardCap)
                    throw Error(ErrorCode::WindowExhausted, "string through " + beta.str() + " does not end");
                misses = probe(k) ? 0 : misses + 1;
                if (misses >= 2 && ak >= min_window)
                    break;
            }
            (dir > 0 ? s.k_hi : s.k_lo) = k;
        }
    } else {
        const std::int64_t bound = std::max(beta.height() + 2, min_window);
        for (std::int64_t k = -bound; k <= bound; ++k)
            probe(k);
        if (found.count(bound) || found.count(-bound))
            throw Error(ErrorCode::WindowExhausted,
                        "isotropic string through " + beta.str() + " reaches the scan bound " + std::to_string(bound));
        s.k_lo = -bound;
        s.k_hi = bound;
    }
    for (auto& [k, e] : found)
        s.entries.push_back(std::move(e));
    return s;
}

UnbrokenVerdict check_unbroken(const RootSystemHandle& h, const RootString& s)
{
    if (s.alpha_isotropic)
        throw Error(ErrorCode::IsotropicReflector, "unbrokenness is only asserted for non-isotropic directions");
    std::map<std::int64_t, int> tag; // 0 imaginary, 1 real, 2 zero slot
    for (const auto& e : s.entries)
        tag[e.k] = e.real ? 1 : 0;
    if (s.zero_slot)
        tag[*s.zero_slot] = 2;
    auto where = [&] { return "string through " + s.beta.str() + " in direction " + s.alpha.str(); };
    if (!tag.count(0))
        throw Error(ErrorCode::BrokenString, where() + ": base point is not a root");
    const std::int64_t lo = tag.begin()->first, hi = tag.rbegin()->first;
    if (static_cast<std::int64_t>(tag.size()) != hi - lo + 1)
        throw Error(ErrorCode::BrokenString, where() + " has a gap");
    UnbrokenVerdict v;
    v.p = -lo;
    v.q = hi;
    v.pairing = h.coroot_pairing(s.beta, s.alpha);
    if (!is_integer(v.pairing) || v.p - v.q != to_int64(v.pairing))
        throw Error(ErrorCode::BrokenString, where() + ": p - q = " + std::to_string(v.p - v.q) +
                                                 " but pairing is " + to_string(v.pairing));
    const std::int64_t c = to_int64(v.pairing);
    for (const auto& [k, t] : tag) {
        auto it = tag.find(-k - c);
        if (it == tag.end() || it->second != t)
            throw Error(ErrorCode::BrokenString, where() + " is not reversed by the reflection at k = " + std::to_string(k));
    }
    return v;
}

StringPattern string_pattern(const RootString& s)
{
    StringPattern p;
    int stage = 0; // 0 leading real, 1 imaginary, 2 trailing real
    for (const auto& e : s.entries) {
        if (e.real) {
            if (stage == 1)
                stage = 2;
            (stage == 0 ? p.p_real : p.r_real)++;
        } else {
            if (stage == 2)
                throw Error(ErrorCode::PatternViolation, "imaginary root after the trailing real block in the string through " +
                                                             s.beta.str());
            stage = 1;
            p.q_imag++;
        }
    }
    if (p.p_real + p.r_real == 0)
        throw Error(ErrorCode::PatternViolation, "string through " + s.beta.str() + " has no real root");
    if (p.q_imag != 0 && p.p_real != p.r_real)
        throw Error(ErrorCode::PatternViolation, "string through " + s.beta.str() + " has unequal real blocks around " +
                                                     "the imaginary middle");
    return p;
}

namespace {

bool proportional(const EpsDeltaVector& a, const EpsDeltaVector& b)
{
    // is b a rational multiple of a (a nonzero)?
    std::vector<std::int64_t> x(a.eps), y(b.eps);
    x.insert(x.end(), a.del.begin(), a.del.end());
    y.insert(y.end(), b.del.begin(), b.del.end());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x[i] * y[j] != x[j] * y[i])
                return false;
    return true;
}

} // namespace

std::vector<LawResult> pairing_laws(const RootSystemHandle& h, const RootVector& alpha, const RootVector& beta,
                                    std::optional<std::int64_t> only_k)
{
    std::vector<LawResult> out;
    const auto ma = h.classify(alpha);
    const auto mb = h.classify(beta);
    if (!ma.real || !mb.in_delta)
        return out;
    auto name = [&](const RootVector& r) { return h.to_epsdelta(r).str(); };
    const std::string pairname = "alpha = " + name(alpha) + ", beta = " + name(beta);
    RootString s = root_string(h, beta, alpha);

    if (!ma.isotropic) {
        if (mb.real)
            out.push_back({kLawFourReal, s.real_count() <= 4,
                           pairname + ": " + std::to_string(s.real_count()) + " real roots in the string"});
        if (mb.real && !mb.isotropic) {
            const Rational ab = h.coroot_pairing(alpha, beta), ba = h.coroot_pairing(beta, alpha);
            if (ab < -1 && ba < -1) {
                const bool real_sum = h.is_real(alpha + beta);
                out.push_back({kLawSumNotReal, !real_sum, pairname + ": both pairings < -1"});
            }
        }
        if (mb.real && mb.isotropic) {
            const Rational x = h.coroot_pairing(beta, alpha);
            for (const auto& e : s.entries) {
                if (e.k == 0 || !e.real || (only_k && e.k != *only_k))
                    continue;
                const bool iso = h.classify(e.root).isotropic;
                const Rational mk(static_cast<long>(-e.k));
                const bool ok = iso ? x == mk : (x == 0 || x == 2 * mk);
                out.push_back({kLawIsoPairing, ok,
                               pairname + ", k = " + std::to_string(e.k) + ": beta(h_alpha) = " + to_string(x) +
                                   (iso ? " (isotropic)" : " (non-isotropic)")});
            }
        }
    } else {
        out.push_back({kLawIsoTwoReal, s.real_count() <= 2,
                       pairname + ": " + std::to_string(s.real_count()) + " real roots"});
        if (mb.real) {
            const bool plus = h.is_real(alpha + beta), minus = h.is_real(alpha - beta);
            if (plus)
                out.push_back({kLawIsoOpposite, !h.is_root(alpha - beta), pairname + ": alpha + beta real"});
            if (minus)
                out.push_back({kLawIsoOpposite, !h.is_root(alpha + beta), pairname + ": alpha - beta real"});
        }
        const auto fa = h.finite_part(h.to_epsdelta(alpha));
        const auto fb = h.finite_part(h.to_epsdelta(beta));
        if (!fb.is_zero() && !proportional(fa, fb)) {
            bool ok = true;
            for (const auto& e : s.entries)
                if (e.k < -1 || e.k > 1)
                    ok = false;
            out.push_back({kLawIsoThree, ok, pairname + ": string within beta-alpha .. beta+alpha"});
        }
    }
    return out;
}

std::size_t SweepReport::failures() const
{
    std::size_t f = 0;
    for (const auto& [n, t] : laws)
        f += t.failed;
    return f;
}

const LawTally* SweepReport::find(const std::string& law) const
{
    for (const auto& [n, t] : laws)
        if (n == law)
            return &t;
    return nullptr;
}

SweepReport string_sweep(const RootSystemHandle& h, std::int64_t height_bound, std::optional<std::int64_t> degree_bound)
{
    SweepReport rep;
    rep.type = h.type().str();
    rep.height_bound = height_bound;
    rep.degree_bound = degree_bound;
    std::map<std::string, LawTally> tally;
    for (const char* law : {kLawUnbroken, kLawPattern, kLawFourReal, kLawSumNotReal, kLawIsoPairing, kLawIsoOpposite,
                            kLawIsoTwoReal, kLawIsoThree})
        tally[law];
    auto record = [&](const std::string& law, bool pass, const std::string& detail) {
        auto& t = tally[law];
        ++t.checked;
        if (!pass && t.failed++ == 0)
            t.first_witness = detail;
    };

    std::vector<RootVector> roots;
    if (degree_bound && h.is_affine())
        roots = h.roots_up_to_degree(*degree_bound);
    else if (height_bound > 0)
        roots = h.roots_up_to_height(height_bound);

    for (const auto& alpha : roots) {
        const auto ma = h.classify(alpha);
        if (!ma.real)
            continue;
        for (const auto& beta : roots) {
            ++rep.strings;
            const std::string where = "alpha = " + h.to_epsdelta(alpha).str() + ", beta = " + h.to_epsdelta(beta).str();
            try {
                RootString s = root_string(h, beta, alpha);
                if (!ma.isotropic) {
                    try {
                        check_unbroken(h, s);
                        record(kLawUnbroken, true, "");
                    } catch (const Error& e) {
                        record(kLawUnbroken, false, e.what());
                    }
                    if (s.real_count() > 0) {
                        try {
                            string_pattern(s);
                            record(kLawPattern, true, "");
                        } catch (const Error& e) {
                            record(kLawPattern, false, e.what());
                        }
                    }
                }
                for (const auto& r : pairing_laws(h, alpha, beta))
                    record(r.law, r.pass, r.detail);
            } catch (const Error& e) {
                record(ma.isotropic ? kLawIsoTwoReal : kLawUnbroken, false, where + ": " + e.what());
            }
        }
    }
    for (auto& [n, t] : tally)
        rep.laws.emplace_back(n, t);
    return rep;
}

} // namespace superroot
