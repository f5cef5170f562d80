#include "superroot/cone.hpp"

#include "superroot/error.hpp"

#include <cstdlib>
#include <string>

namespace superroot {

std::size_t max_lp_vars()
{
    if (const char* env = std::getenv("SUPERROOT_MAX_LP_VARS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return 4096;
}

std::optional<std::vector<Rational>> solve_nonnegative(const RationalMatrix& a, const std::vector<Rational>& b)
{
    const std::size_t m = b.size();
    const std::size_t n = m == 0 ? 0 : a.front().size();
    if (a.size() != m)
        throw Error(ErrorCode::DimensionMismatch, "LP row count mismatch");
    if (n > max_lp_vars())
        throw Error(ErrorCode::ProblemTooLarge,
                    std::to_string(n) + " LP variables exceeds SUPERROOT_MAX_LP_VARS=" + std::to_string(max_lp_vars()));
    if (m == 0)
        return std::vector<Rational>(n, Rational(0));

    // columns: n structural, m artificial, then rhs
    const std::size_t cols = n + m + 1;
    const std::size_t rhs = n + m;
    RationalMatrix t(m + 1, std::vector<Rational>(cols, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != n)
            throw Error(ErrorCode::DimensionMismatch, "ragged LP matrix");
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j)
            t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
        t[i][n + i] = 1;
        t[i][rhs] = flip ? Rational(-b[i]) : b[i];
        basis[i] = n + i;
    }
    // objective row: minimize sum of artificials, stored as reduced costs
    auto& obj = t[m];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            obj[j] -= t[i][j];
    for (std::size_t i = 0; i < m; ++i)
        obj[rhs] -= t[i][rhs];

    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < rhs; ++j)
            if (obj[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols)
            break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0)
                continue;
            Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m)
            break; // unbounded direction cannot happen in phase one
        Rational piv = t[leave][enter];
        for (auto& x : t[leave])
            x /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == 0)
                continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j)
                if (t[leave][j] != 0)
                    t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    if (obj[rhs] != 0)
        return std::nullopt;
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n)
            x[basis[i]] = t[i][rhs];
    return x;
}

bool in_cone(const std::vector<RootVector>& gens, const RootVector& target)
{
    const std::size_t dim = target.size();
    if (target.is_zero())
        return true;
    if (gens.empty())
        return false;
    RationalMatrix a(dim, std::vector<Rational>(gens.size()));
    std::vector<Rational> b(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (gens[j].size() != dim)
                throw Error(ErrorCode::DimensionMismatch, "cone generator of wrong length");
            a[i][j] = static_cast<long>(gens[j][i]);
        }
        b[i] = static_cast<long>(target[i]);
    }
    return solve_nonnegative(a, b).has_value();
}

bool precedes(const RootVector& gamma, const RootVector& alpha, const std::vector<RootVector>& others)
{
    if (gamma == alpha)
        return true;
    auto inside = [&](const RootVector& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0 && alpha[i] == 0)
                return false;
        return true;
    };
    // Coordinates outside supp(alpha) force gamma and every used t to vanish there.
    if (!inside(gamma))
        return false;
    // Homogenized: gamma = s alpha - sum b_t t with s, b_t >= 0. Since gamma and
    // the t are positive, s = 0 is impossible, and a = 1/s recovers the preorder.
    std::vector<RootVector> gens{alpha};
    for (const auto& t : others)
        if (t != gamma && t != alpha && inside(t))
            gens.push_back(-t);
    return in_cone(gens, gamma);
}

} // namespace superroot
