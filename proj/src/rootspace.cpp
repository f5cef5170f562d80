#include "superroot/rootspace.hpp"

#include "superroot/error.hpp"

namespace superroot {

namespace {

void check_dim(std::size_t got, const CartanData& c)
{
    if (got != c.size())
        throw Error(ErrorCode::DimensionMismatch,
                    "vector of length " + std::to_string(got) + " against rank " + std::to_string(c.size()));
}

} // namespace

Rational pair(const RootVector& beta, const CorootVector& h, const CartanData& c)
{
    check_dim(beta.size(), c);
    check_dim(h.size(), c);
    Rational s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (h[i] == 0)
            continue;
        Rational row = 0;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (beta[j] != 0)
                row += c.a(i, j) * Rational(static_cast<long>(beta[j]));
        s += h[i] * row;
    }
    return s;
}

Rational bilinear(const RootVector& beta, const RootVector& gamma, const CartanData& c,
                  const std::vector<Rational>& d)
{
    check_dim(beta.size(), c);
    check_dim(gamma.size(), c);
    if (d.size() != c.size())
        throw Error(ErrorCode::NotSymmetrizable, "symmetrizer has wrong length");
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (d[i] * c.a(i, j) != d[j] * c.a(j, i))
                throw Error(ErrorCode::NotSymmetrizable, "d does not symmetrize the Cartan matrix");
    Rational s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (beta[i] == 0)
            continue;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (gamma[j] != 0)
                s += Rational(static_cast<long>(beta[i] * gamma[j])) * d[i] * c.a(i, j);
    }
    return s;
}

int parity(const RootVector& beta, const CartanData& c)
{
    check_dim(beta.size(), c);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        s += beta[i] * c.parity(i);
    return static_cast<int>(((s % 2) + 2) % 2);
}

} // namespace superroot
