#include "superroot/cartan.hpp"

#include "superroot/error.hpp"

#include <queue>

namespace superroot {

namespace {

bool is_zero(const RationalMatrix& a)
{
    for (const auto& row : a)
        for (const auto& x : row)
            if (x != 0)
                return false;
    return true;
}

void check_shape(const RationalMatrix& a, const std::vector<int>& parity)
{
    if (a.size() != parity.size())
        throw Error(ErrorCode::DimensionMismatch, "matrix and parity sizes differ");
    for (const auto& row : a)
        if (row.size() != a.size())
            throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
    for (int p : parity)
        if (p != 0 && p != 1)
            throw Error(ErrorCode::DimensionMismatch, "parity entries must be 0 or 1");
    if (a.empty() || is_zero(a))
        throw Error(ErrorCode::ZeroMatrix, "Cartan matrix is zero");
}

/// Connected components of the graph with an edge i-j when a_ij or a_ji is nonzero.
std::vector<std::vector<std::size_t>> components(const CartanData& c)
{
    const std::size_t n = c.size();
    std::vector<int> seen(n, 0);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<std::size_t> comp;
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            auto i = q.front();
            q.pop();
            comp.push_back(i);
            for (std::size_t j = 0; j < n; ++j)
                if (!seen[j] && (c.a(i, j) != 0 || c.a(j, i) != 0)) {
                    seen[j] = 1;
                    q.push(j);
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace

CartanData::CartanData(RationalMatrix a, std::vector<int> parity)
    : a_(std::move(a)), parity_(std::move(parity))
{
    check_shape(a_, parity_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i][i] != 0 && a_[i][i] != 2)
            throw Error(ErrorCode::NotNormalized,
                        "diagonal entry " + std::to_string(i + 1) + " is " + a_[i][i].get_str());
}

CartanData normalize(const RationalMatrix& matrix, const std::vector<int>& parity)
{
    check_shape(matrix, parity);
    RationalMatrix a = matrix;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i][i] == 0)
            continue;
        Rational s = Rational(2) / a[i][i];
        for (auto& x : a[i])
            x *= s;
    }
    return CartanData(std::move(a), parity);
}

bool is_indecomposable(const CartanData& cartan) { return components(cartan).size() == 1; }

ValidationReport validate(const CartanData& c)
{
    ValidationReport r;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
        const bool isotropic = c.a(i, i) == 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (isotropic && c.parity(i) == 0 && c.a(i, j) != 0)
                r.admissibility_violations.push_back({1, i, j});
            if (!isotropic && j != i) {
                // a_ij must lie in 2^{p(i)} Z_{<=0}
                const Rational& x = c.a(i, j);
                Rational scaled = c.parity(i) ? Rational(x / 2) : x;
                if (x > 0 || !is_integer(scaled))
                    r.admissibility_violations.push_back({2, i, j});
                if (x == 0 && c.a(j, i) != 0)
                    r.admissibility_violations.push_back({3, i, j});
            }
            if (c.a(i, j) == 0 && c.a(j, i) != 0)
                r.irregular_pairs.emplace_back(i, j);
        }
    }
    r.admissible = r.admissibility_violations.empty();
    r.regular = r.irregular_pairs.empty();
    r.symmetrizable = symmetrizer(c).has_value();
    r.indecomposable = is_indecomposable(c);
    return r;
}

std::optional<std::vector<Rational>> symmetrizer(const CartanData& c)
{
    const std::size_t n = c.size();
    std::vector<Rational> d(n, Rational(0));
    for (const auto& comp : components(c)) {
        // propagate d_j = d_i a_ij / a_ji along a BFS tree, then verify every pair
        std::queue<std::size_t> q;
        d[comp.front()] = 1;
        q.push(comp.front());
        while (!q.empty()) {
            auto i = q.front();
            q.pop();
            for (std::size_t j = 0; j < n; ++j) {
                if (d[j] != 0 || (c.a(i, j) == 0 && c.a(j, i) == 0))
                    continue;
                if (c.a(i, j) == 0 || c.a(j, i) == 0)
                    return std::nullopt;
                d[j] = d[i] * c.a(i, j) / c.a(j, i);
                q.push(j);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (d[i] * c.a(i, j) != d[j] * c.a(j, i))
                return std::nullopt;
    return d;
}

std::string to_string(RankOneType t)
{
    switch (t) {
    case RankOneType::Heisenberg3: return "Heisenberg3";
    case RankOneType::Sl11: return "sl(1,1)";
    case RankOneType::Sl2: return "sl2";
    case RankOneType::Osp12: return "osp(1,2)";
    }
    return "?";
}

RankOneType rank_one_type(const CartanData& c, std::size_t i)
{
    if (i >= c.size())
        throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i) + " >= " + std::to_string(c.size()));
    const bool isotropic = c.a(i, i) == 0;
    if (isotropic)
        return c.parity(i) ? RankOneType::Sl11 : RankOneType::Heisenberg3;
    return c.parity(i) ? RankOneType::Osp12 : RankOneType::Sl2;
}

} // namespace superroot
