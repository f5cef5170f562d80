#pragma once

#include "superroot/cartan.hpp"
#include "superroot/roots.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

namespace superroot {

/// Ordered (root, coroot) pairs. The Cartan matrix of the base is
/// a_{alpha beta} = beta(h_alpha), computed against the ambient CartanData.
struct Base {
    std::vector<RootVector> roots;
    std::vector<CorootVector> coroots;

    std::size_t size() const { return roots.size(); }
    /// Sorted root list, used as the identity of the base.
    std::vector<RootVector> key() const;
};

Base standard_base(const CartanData& cartan);
RationalMatrix base_cartan(const Base& b, const CartanData& cartan);
std::vector<int> base_parity(const Base& b, const CartanData& cartan);

/// Odd reflection at b.roots[idx]. Throws NotIsotropicOdd, NotRegularInBase.
Base odd_reflect_base(const Base& b, std::size_t idx, const CartanData& cartan);

/// Even reflection s_alpha with pair(alpha, h_alpha) = 2. Throws IsotropicReflector,
/// PairingNotIntegral.
Base even_reflect_base(const Base& b, const RootVector& alpha, const CorootVector& h_alpha, const CartanData& cartan);
inline Base even_reflect_base(const Base& b, std::size_t idx, const CartanData& cartan)
{
    return even_reflect_base(b, b.roots[idx], b.coroots[idx], cartan);
}

struct RealRootInfo {
    int parity = 0;
    bool isotropic = false;
};

inline constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

struct RealRootEnumeration {
    std::map<RootVector, RealRootInfo> roots;
    /// kUnbounded when the search terminated without pruning; nullopt otherwise
    /// (best effort only).
    std::optional<std::int64_t> complete_up_to;
    std::size_t bases_visited = 0;

    std::vector<RootVector> list() const;
};

/// BFS over bases reachable by even and odd reflections. Bases with a root of
/// height > h_explore are pruned. Throws NonRegularBaseEncountered.
RealRootEnumeration enumerate_real_roots(const CartanData& cartan, std::int64_t h_report, std::int64_t h_explore);

/// Even roots alpha with alpha or alpha/2 in a base reachable by odd reflections.
std::vector<RootVector> principal_roots(const CartanData& cartan, std::int64_t h_explore = 64);

/// Every base reachable from the standard one by odd reflections.
std::vector<Base> odd_reflection_bases(const CartanData& cartan, std::int64_t h_explore = 64);

} // namespace superroot
