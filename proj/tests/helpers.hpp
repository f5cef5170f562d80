#pragma once

#include "superroot/catalog.hpp"
#include "superroot/pisystem.hpp"

#include "superroot/error.hpp"

#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace testing {

using namespace superroot;

inline RationalMatrix mat(std::initializer_list<std::initializer_list<long>> rows)
{
    RationalMatrix m;
    for (auto r : rows) {
        std::vector<Rational> row;
        for (auto x : r)
            row.emplace_back(x);
        m.push_back(row);
    }
    return m;
}

// eps/delta coordinates -> alpha coordinates
inline RootVector ed(const RootSystemHandle& h, std::vector<std::int64_t> eps, std::vector<std::int64_t> del,
                     std::int64_t null = 0)
{
    EpsDeltaVector v = h.zero_ed();
    v.eps = std::move(eps);
    v.del = std::move(del);
    v.null = null;
    return h.to_alpha(v);
}

inline RootSet rs(const RootSystemHandle& h, std::vector<RootVector> v) { return RootSet(h, v); }

inline std::vector<RootVector> positive_real(const RootSystemHandle& h, std::int64_t degree = 0)
{
    std::vector<RootVector> out;
    for (const auto& r : h.roots_up_to_degree(degree, true))
        if (r.is_positive())
            out.push_back(r);
    return out;
}

inline ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    throw std::runtime_error("no superroot::Error thrown");
}

} // namespace testing
