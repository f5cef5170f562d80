#pragma once

#include "superroot/cartan.hpp"
#include "superroot/roots.hpp"

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace superroot {

enum class Family { A, B, C, D, D21a, F4, G3 };
enum class Twist { Finite, Untwisted, A4 };

struct CatalogType {
    Family family = Family::A;
    Twist twist = Twist::Finite;
    int m = 0;
    int n = 0;
    Rational a = 0; // only for D(2,1;a)

    /// "A(1,2)", "B(1,1)^(1)", "A(2,2)^(4)", "C(3)", "D(2,1;1/2)", "F(4)", "G(3)".
    /// Throws InvalidType.
    static CatalogType parse(std::string_view text);
    std::string str() const;
    friend bool operator==(const CatalogType&, const CatalogType&) = default;
};

/// Coordinates on eps_1..eps_M, delta_1..delta_N and the null root.
struct EpsDeltaVector {
    std::vector<std::int64_t> eps;
    std::vector<std::int64_t> del;
    std::int64_t null = 0;

    bool is_zero() const;
    std::string str() const;
    EpsDeltaVector& operator+=(const EpsDeltaVector& o);
    friend EpsDeltaVector operator+(EpsDeltaVector a, const EpsDeltaVector& b) { return a += b; }
    friend EpsDeltaVector operator-(EpsDeltaVector a);
    friend EpsDeltaVector operator-(EpsDeltaVector a, const EpsDeltaVector& b) { return a += -b; }
    friend EpsDeltaVector operator*(std::int64_t k, EpsDeltaVector a);
    friend bool operator==(const EpsDeltaVector&, const EpsDeltaVector&) = default;
    friend auto operator<=>(const EpsDeltaVector&, const EpsDeltaVector&) = default;
};

struct Membership {
    bool in_delta = false;
    bool real = false;
    int parity = 0;
    bool isotropic = false; // meaningful for real roots only
};

/// Immutable root-system oracle of a catalog type. Cheap to copy.
class RootSystemHandle {
public:
    /// Throws UnsupportedType for families that are not built, InvalidType for
    /// out-of-range ranks.
    static RootSystemHandle build(const CatalogType& type);
    static RootSystemHandle build(std::string_view type) { return build(CatalogType::parse(type)); }

    const CatalogType& type() const;
    bool is_affine() const;
    std::size_t rank() const;
    std::size_t num_eps() const;
    std::size_t num_del() const;

    /// Distinguished base; for affine types index 0 is alpha_0.
    const std::vector<EpsDeltaVector>& simple_roots() const;
    const CartanData& cartan() const;
    /// Canonical symmetrizer of cartan() (d_1 = 1).
    const std::vector<Rational>& symmetrizer() const;

    Membership classify(const EpsDeltaVector& v) const;
    Membership classify(const RootVector& v) const;
    bool is_root(const RootVector& v) const { return classify(v).in_delta; }
    bool is_real(const RootVector& v) const { return classify(v).real; }

    /// Invariant form with (eps,eps) = 1, (delta,delta) = -1, null root in the radical.
    Rational form(const EpsDeltaVector& u, const EpsDeltaVector& v) const;
    Rational form(const RootVector& u, const RootVector& v) const;
    /// beta(h_alpha) = 2(beta,alpha)/(alpha,alpha); throws IsotropicReflector if (alpha,alpha) = 0.
    Rational coroot_pairing(const RootVector& beta, const RootVector& alpha) const;

    /// Throws NotInLattice or RankMismatch.
    RootVector to_alpha(const EpsDeltaVector& v) const;
    /// Throws RankMismatch.
    EpsDeltaVector to_epsdelta(const RootVector& v) const;

    EpsDeltaVector finite_part(const EpsDeltaVector& v) const;
    std::int64_t degree(const EpsDeltaVector& v) const { return v.null; }
    std::int64_t degree(const RootVector& v) const;
    /// Throws UnsupportedType for finite types.
    RootVector null_root() const;
    EpsDeltaVector zero_ed() const;

    /// Sorted roots (alpha coordinates) of height <= h.
    std::vector<RootVector> roots_up_to_height(std::int64_t h, bool real_only = false) const;
    /// Sorted roots with |null coefficient| <= k; every root for finite types.
    std::vector<RootVector> roots_up_to_degree(std::int64_t k, bool real_only = false) const;

    struct Impl; // opaque

private:
    std::shared_ptr<const Impl> impl_;
};

struct RootClass {
    int parity = 0;
    bool isotropic = false;
    bool real = false;
};

/// Throws NotARoot.
RootClass classify(const RootVector& beta, const RootSystemHandle& handle);

} // namespace superroot
