#include "superroot/pisystem.hpp"

#include "superroot/cone.hpp"
#include "superroot/error.hpp"

#include <algorithm>

namespace superroot {

RootSet::RootSet(RootSystemHandle handle, const std::vector<RootVector>& elements)
    : RootSet(std::move(handle), std::set<RootVector>(elements.begin(), elements.end()))
{
}

RootSet::RootSet(RootSystemHandle handle, std::set<RootVector> elements)
    : handle_(std::move(handle)), elements_(std::move(elements))
{
    for (const auto& r : elements_)
        if (!handle_.is_real(r))
            throw Error(ErrorCode::NotARoot, r.str() + " is not a real root of " + handle_.type().str());
}

std::vector<RootVector> RootSet::positive() const
{
    std::vector<RootVector> out;
    for (const auto& r : elements_)
        if (r.is_positive())
            out.push_back(r);
    return out;
}

RootSet RootSet::restrict_height(std::int64_t h) const
{
    std::set<RootVector> out;
    for (const auto& r : elements_)
        if (r.height() <= h)
            out.insert(r);
    return RootSet(handle_, std::move(out));
}

std::string RootSet::str() const
{
    std::string s = "{";
    bool first = true;
    for (const auto& r : elements_) {
        s += (first ? "" : ", ") + handle_.to_epsdelta(r).str();
        first = false;
    }
    return s + "}";
}

PiCheck is_pi_system(const RootSet& sigma)
{
    PiCheck out;
    const auto& h = sigma.handle();
    const auto list = sigma.list();
    for (const auto& a : list)
        for (const auto& b : list)
            if (a != b && h.is_root(a - b))
                out.violations.push_back({1, a, b});
    for (const auto& a : list) {
        std::vector<RootVector> rest;
        for (const auto& b : list)
            if (b != a)
                rest.push_back(b);
        if (in_cone(rest, a))
            out.violations.push_back({2, a, RootVector()});
    }
    out.ok = out.violations.empty();
    return out;
}

RootVector reflect(const RootSystemHandle& h, const RootVector& alpha, const RootVector& beta)
{
    const Rational aa = h.form(alpha, alpha);
    if (aa == 0) {
        if (beta == alpha || beta == -alpha)
            return -beta;
        RootVector s = beta + alpha;
        return h.is_real(s) ? s : beta;
    }
    const Rational k = 2 * h.form(beta, alpha) / aa;
    if (!is_integer(k))
        throw Error(ErrorCode::PairingNotIntegral,
                    "2(b,a)/(a,a) = " + to_string(k) + " for a = " + alpha.str() + ", b = " + beta.str());
    return beta - to_int64(k) * alpha;
}

std::string to_string(ClosureStatus s) { return s == ClosureStatus::Stabilized ? "stabilized" : "truncated"; }

Closure closure_S_infinity(const RootSet& s, std::int64_t hmax, int max_rounds)
{
    const auto& h = s.handle();
    bool discarded = false;
    std::set<RootVector> cur;
    auto admit = [&](const RootVector& r, std::set<RootVector>& into) {
        if (r.height() > hmax) {
            discarded = true;
            return;
        }
        into.insert(r);
    };
    for (const auto& r : s) {
        admit(r, cur);
        RootVector d = 2 * r;
        if (h.is_real(d))
            admit(d, cur);
    }
    // Semi-naive rounds: S_{k-1} contains S_{k-2}, so only pairs touching the
    // newest elements can produce anything new.
    std::set<RootVector> fresh = cur;
    int rounds = 0;
    bool stable = false;
    while (rounds < max_rounds) {
        ++rounds;
        std::set<RootVector> next = cur;
        for (const auto& a : cur)
            for (const auto& b : cur) {
                if (!fresh.count(a) && !fresh.count(b))
                    continue;
                RootVector r = reflect(h, a, b);
                admit(r, next);
                admit(-r, next);
            }
        fresh.clear();
        std::set_difference(next.begin(), next.end(), cur.begin(), cur.end(), std::inserter(fresh, fresh.end()));
        cur = std::move(next);
        if (fresh.empty()) {
            stable = true;
            break;
        }
    }
    const auto status = stable && !discarded ? ClosureStatus::Stabilized : ClosureStatus::Truncated;
    return Closure{RootSet(h, std::move(cur)), status, rounds, hmax};
}

SubsetClass classify_subset(const RootSet& psi, std::optional<std::int64_t> window)
{
    SubsetClass out;
    const auto& h = psi.handle();
    auto visible = [&](const RootVector& r) { return !window || r.height() <= *window; };
    auto name = [&](const RootVector& r) { return h.to_epsdelta(r).str(); };
    for (const auto& a : psi)
        if (!psi.contains(-a)) {
            out.symmetric = false;
            if (out.witness.empty())
                out.witness = "not symmetric: -(" + name(a) + ") missing";
        }
    for (const auto& a : psi)
        for (const auto& b : psi) {
            RootVector s = a + b;
            if (out.closed && visible(s) && !psi.contains(s) && h.is_real(s)) {
                out.closed = false;
                if (out.witness.empty())
                    out.witness = "not closed: (" + name(a) + ") + (" + name(b) + ") is real but missing";
            }
            RootVector r = reflect(h, a, b);
            if (out.subroot_system && visible(r) && !psi.contains(r)) {
                out.subroot_system = false;
                if (out.witness.empty())
                    out.witness = "not a subroot system: s_(" + name(a) + ")(" + name(b) + ") = " + name(r) + " missing";
            }
        }
    return out;
}

RootSet pi_of_psi(const RootSet& psi, std::optional<std::int64_t> window)
{
    auto cls = classify_subset(psi, window);
    if (!cls.closed)
        throw Error(ErrorCode::NotClosed, cls.witness);
    const auto pos = psi.positive();
    std::set<RootVector> out;
    for (const auto& a : pos) {
        bool minimal = true;
        for (const auto& g : pos) {
            if (g == a)
                continue;
            // g in N a: g = k a with k >= 2
            bool multiple = false;
            for (std::int64_t k = 2; k * a.height() <= g.height(); ++k)
                if (g == k * a)
                    multiple = true;
            if (multiple)
                continue;
            if (precedes(g, a, pos)) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            out.insert(a);
    }
    return RootSet(psi.handle(), std::move(out));
}

std::optional<RootSet> admits_pi_system(const RootSet& psi, std::int64_t h, int max_rounds)
{
    RootSet sigma = pi_of_psi(psi);
    if (!is_pi_system(sigma).ok)
        return std::nullopt;
    auto cl = closure_S_infinity(sigma, h, max_rounds);
    if (cl.status == ClosureStatus::Truncated) {
        // a truncated closure that already escapes psi settles the answer
        for (const auto& r : cl.set)
            if (!psi.contains(r))
                return std::nullopt;
        throw Error(ErrorCode::Inconclusive, "closure of Pi(psi) truncated at height " + std::to_string(h));
    }
    if (cl.set == psi)
        return sigma;
    return std::nullopt;
}

DynkinCertificate verify_dynkin_maps(const RootSet& sigma, std::int64_t h, std::optional<std::int64_t> window)
{
    for (const auto& r : sigma)
        if (!r.is_positive())
            throw Error(ErrorCode::NotARoot, r.str() + " is not a positive root");
    if (!is_pi_system(sigma).ok)
        throw Error(ErrorCode::NotARoot, "input is not a pi-system");
    auto cl = closure_S_infinity(sigma, h);
    std::optional<std::int64_t> win;
    RootSet psi = cl.set;
    if (cl.status == ClosureStatus::Truncated) {
        if (!window || *window >= h)
            throw Error(ErrorCode::Inconclusive, "closure truncated at height " + std::to_string(h));
        for (const auto& r : sigma)
            if (r.height() > *window)
                throw Error(ErrorCode::Inconclusive, "pi-system does not fit in the window");
        win = window;
        psi = cl.set.restrict_height(*window);
    }
    auto cls = classify_subset(psi, win);
    DynkinCertificate cert{cl.set, cl.status, win, cls.closed && cls.subroot_system, cls.witness,
                           RootSet(sigma.handle(), std::set<RootVector>{}), false};
    if (cls.closed) {
        cert.pi = pi_of_psi(psi, win);
        cert.pi_recovered = cert.pi == sigma;
    }
    return cert;
}

} // namespace superroot
