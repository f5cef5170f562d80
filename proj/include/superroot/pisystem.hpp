#pragma once

#include "superroot/catalog.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace superroot {

/// Finite set of real roots bound to a root system.
class RootSet {
public:
    /// Throws NotARoot unless every element is a real root of `handle`.
    RootSet(RootSystemHandle handle, const std::vector<RootVector>& elements);
    RootSet(RootSystemHandle handle, std::set<RootVector> elements);

    const RootSystemHandle& handle() const { return handle_; }
    const std::set<RootVector>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    bool contains(const RootVector& r) const { return elements_.count(r) != 0; }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }
    std::vector<RootVector> list() const { return {elements_.begin(), elements_.end()}; }
    std::vector<RootVector> positive() const;
    /// Elements of height <= h.
    RootSet restrict_height(std::int64_t h) const;
    std::string str() const;

    friend bool operator==(const RootSet& a, const RootSet& b) { return a.elements_ == b.elements_; }

private:
    RootSystemHandle handle_;
    std::set<RootVector> elements_;
};

struct PiViolation {
    int condition;    // 1: alpha - beta is a root; 2: alpha lies in the cone of the rest
    RootVector alpha;
    RootVector beta;  // empty for condition 2
};

struct PiCheck {
    bool ok = true;
    std::vector<PiViolation> violations;
};

PiCheck is_pi_system(const RootSet& sigma);

/// Odd reflection for isotropic alpha, s_alpha otherwise. Throws PairingNotIntegral.
RootVector reflect(const RootSystemHandle& handle, const RootVector& alpha, const RootVector& beta);

enum class ClosureStatus { Stabilized, Truncated };
std::string to_string(ClosureStatus s);

struct Closure {
    RootSet set;
    ClosureStatus status;
    int rounds;
    std::int64_t height_bound;
};

/// Iterates S_0 = (S u 2S) n real roots, S_k = +-{s_a(b) : a,b in S_{k-1}},
/// discarding roots above height h. Stabilized only if nothing was discarded.
Closure closure_S_infinity(const RootSet& s, std::int64_t h, int max_rounds = 256);

struct SubsetClass {
    bool symmetric = true;
    bool closed = true;
    bool subroot_system = true;
    std::string witness; // first failure, human readable
};

/// With a window, closedness and reflection stability are only demanded for
/// results of height <= window.
SubsetClass classify_subset(const RootSet& psi, std::optional<std::int64_t> window = std::nullopt);

/// Minimal elements of psi^+ under the cone preorder. Throws NotClosed.
RootSet pi_of_psi(const RootSet& psi, std::optional<std::int64_t> window = std::nullopt);

/// Pi(psi) when it is a pi-system whose closure is psi; nullopt otherwise.
/// Throws Inconclusive when the closure does not stabilize below h.
std::optional<RootSet> admits_pi_system(const RootSet& psi, std::int64_t h, int max_rounds = 256);

struct DynkinCertificate {
    RootSet closure;
    ClosureStatus status;
    std::optional<std::int64_t> window; // set when checks were window-restricted
    bool closed_subroot = false;
    std::string closed_witness;
    RootSet pi;
    bool pi_recovered = false;
    bool ok() const { return closed_subroot && pi_recovered; }
};

/// Checks that the closure of sigma is a closed subroot system and that Pi of it
/// gives sigma back. If the closure truncates, a window below h is required
/// (otherwise throws Inconclusive); the checks then run on the part of height
/// <= window. Throws NotARoot if sigma is not a positive pi-system.
DynkinCertificate verify_dynkin_maps(const RootSet& sigma, std::int64_t h,
                                     std::optional<std::int64_t> window = std::nullopt);

} // namespace superroot
