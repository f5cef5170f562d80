#include "superroot/basegraph.hpp"

#include "superroot/error.hpp"
#include "superroot/rootspace.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace superroot {

std::vector<RootVector> Base::key() const
{
    auto k = roots;
    std::sort(k.begin(), k.end());
    return k;
}

std::vector<RootVector> RealRootEnumeration::list() const
{
    std::vector<RootVector> out;
    out.reserve(roots.size());
    for (const auto& [r, info] : roots)
        out.push_back(r);
    return out;
}

Base standard_base(const CartanData& c)
{
    Base b;
    for (std::size_t i = 0; i < c.size(); ++i) {
        b.roots.push_back(RootVector::unit(c.size(), i));
        b.coroots.push_back(CorootVector::unit(c.size(), i));
    }
    return b;
}

RationalMatrix base_cartan(const Base& b, const CartanData& c)
{
    RationalMatrix a(b.size(), std::vector<Rational>(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            a[i][j] = pair(b.roots[j], b.coroots[i], c);
    return a;
}

std::vector<int> base_parity(const Base& b, const CartanData& c)
{
    std::vector<int> p;
    for (const auto& r : b.roots)
        p.push_back(parity(r, c));
    return p;
}

namespace {

void renormalize(Base& b, const CartanData& c)
{
    for (std::size_t i = 0; i < b.size(); ++i) {
        Rational d = pair(b.roots[i], b.coroots[i], c);
        if (d != 0 && d != 2)
            b.coroots[i] *= Rational(2) / d;
    }
}

std::string matrix_str(const RationalMatrix& a)
{
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < a[i].size(); ++j)
            s += (j ? "," : "") + to_string(a[i][j]);
        s += "]";
    }
    return s + "]";
}

void check_regular_admissible(const Base& b, const CartanData& c)
{
    auto a = base_cartan(b, c);
    CartanData cd(a, base_parity(b, c));
    auto rep = validate(cd);
    if (!rep.admissible || !rep.regular) {
        std::string roots;
        for (const auto& r : b.roots)
            roots += r.str() + " ";
        throw Error(ErrorCode::NonRegularBaseEncountered,
                    std::string(rep.admissible ? "non-regular" : "non-admissible") + " base {" + roots + "} with A = " +
                        matrix_str(a));
    }
}

std::int64_t max_height(const Base& b)
{
    std::int64_t h = 0;
    for (const auto& r : b.roots)
        h = std::max(h, r.height());
    return h;
}

} // namespace

Base odd_reflect_base(const Base& b, std::size_t idx, const CartanData& c)
{
    if (idx >= b.size())
        throw Error(ErrorCode::IndexOutOfRange, "base index " + std::to_string(idx));
    const RootVector& alpha = b.roots[idx];
    const CorootVector& ha = b.coroots[idx];
    if (pair(alpha, ha, c) != 0 || parity(alpha, c) != 1)
        throw Error(ErrorCode::NotIsotropicOdd, alpha.str() + " is not odd isotropic in this base");
    Base out = b;
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (j == idx) {
            out.roots[j] = -alpha; // coroot h_alpha kept
            continue;
        }
        const Rational a_ab = pair(b.roots[j], ha, c);
        const Rational a_ba = pair(alpha, b.coroots[j], c);
        if ((a_ab == 0) != (a_ba == 0))
            throw Error(ErrorCode::NotRegularInBase, alpha.str() + " is not regular against " + b.roots[j].str());
        if (a_ab == 0)
            continue;
        out.roots[j] = b.roots[j] + alpha;
        CorootVector h = a_ab * b.coroots[j] + a_ba * ha;
        if (parity(b.roots[j], c) == 1)
            h *= Rational(-1);
        out.coroots[j] = std::move(h);
    }
    renormalize(out, c);
    return out;
}

Base even_reflect_base(const Base& b, const RootVector& alpha, const CorootVector& ha, const CartanData& c)
{
    if (pair(alpha, ha, c) != 2)
        throw Error(ErrorCode::IsotropicReflector, alpha.str() + " does not pair to 2 with its coroot");
    Base out = b;
    for (std::size_t j = 0; j < b.size(); ++j) {
        const Rational k = pair(b.roots[j], ha, c);
        if (!is_integer(k))
            throw Error(ErrorCode::PairingNotIntegral, "pairing " + to_string(k) + " of " + b.roots[j].str());
        out.roots[j] = b.roots[j] - to_int64(k) * alpha;
        out.coroots[j] = b.coroots[j] - pair(alpha, b.coroots[j], c) * ha;
    }
    return out;
}

namespace {

/// Shared BFS. `even` enables even reflections.
template <class Visit>
bool explore(const CartanData& c, bool even, std::int64_t h_explore, Visit&& visit)
{
    bool pruned = false;
    std::set<std::vector<RootVector>> seen;
    std::deque<Base> queue;
    Base start = standard_base(c);
    check_regular_admissible(start, c);
    seen.insert(start.key());
    queue.push_back(std::move(start));
    while (!queue.empty()) {
        Base b = std::move(queue.front());
        queue.pop_front();
        visit(b);
        for (std::size_t i = 0; i < b.size(); ++i) {
            const Rational diag = pair(b.roots[i], b.coroots[i], c);
            Base next;
            if (diag == 0) {
                if (parity(b.roots[i], c) == 0)
                    continue;
                next = odd_reflect_base(b, i, c);
            } else if (even) {
                next = even_reflect_base(b, i, c);
            } else {
                continue;
            }
            if (max_height(next) > h_explore) {
                pruned = true;
                continue;
            }
            if (!seen.insert(next.key()).second)
                continue;
            check_regular_admissible(next, c);
            queue.push_back(std::move(next));
        }
    }
    return !pruned;
}

} // namespace

RealRootEnumeration enumerate_real_roots(const CartanData& c, std::int64_t h_report, std::int64_t h_explore)
{
    if (h_explore < h_report)
        h_explore = h_report;
    RealRootEnumeration out;
    auto add = [&](const RootVector& r, RealRootInfo info) {
        if (r.height() <= h_report)
            out.roots.emplace(r, info);
    };
    const bool done = explore(c, true, h_explore, [&](const Base& b) {
        ++out.bases_visited;
        for (std::size_t i = 0; i < b.size(); ++i) {
            const bool iso = pair(b.roots[i], b.coroots[i], c) == 0;
            const int p = parity(b.roots[i], c);
            add(b.roots[i], {p, iso});
            if (p == 1 && !iso)
                add(2 * b.roots[i], {0, false});
        }
    });
    if (done)
        out.complete_up_to = kUnbounded;
    return out;
}

std::vector<Base> odd_reflection_bases(const CartanData& c, std::int64_t h_explore)
{
    std::vector<Base> out;
    explore(c, false, h_explore, [&](const Base& b) { out.push_back(b); });
    return out;
}

std::vector<RootVector> principal_roots(const CartanData& c, std::int64_t h_explore)
{
    std::set<RootVector> out;
    for (const auto& b : odd_reflection_bases(c, h_explore))
        for (std::size_t i = 0; i < b.size(); ++i) {
            const bool iso = pair(b.roots[i], b.coroots[i], c) == 0;
            if (iso)
                continue;
            if (parity(b.roots[i], c) == 0)
                out.insert(b.roots[i]);
            else
                out.insert(2 * b.roots[i]);
        }
    return {out.begin(), out.end()};
}

} // namespace superroot
