#pragma once

#include "superroot/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace superroot {

/// A normalized Cartan matrix (diagonal in {0,2}) with its parity vector.
class CartanData {
public:
    /// Wraps an already-normalized matrix; throws NotNormalized, ZeroMatrix
    /// or DimensionMismatch.
    CartanData(RationalMatrix a, std::vector<int> parity);

    std::size_t size() const { return parity_.size(); }
    const Rational& a(std::size_t i, std::size_t j) const { return a_[i][j]; }
    const RationalMatrix& matrix() const { return a_; }
    int parity(std::size_t i) const { return parity_[i]; }
    const std::vector<int>& parities() const { return parity_; }

    friend bool operator==(const CartanData&, const CartanData&) = default;

private:
    RationalMatrix a_;
    std::vector<int> parity_;
};

/// Rescales every row with a_ii != 0 by 2/a_ii. Throws ZeroMatrix.
/// Decomposable input is accepted; see is_indecomposable().
CartanData normalize(const RationalMatrix& matrix, const std::vector<int>& parity);

bool is_indecomposable(const CartanData& cartan);

struct AdmissibilityViolation {
    int condition; // 1, 2 or 3
    std::size_t i;
    std::size_t j;
};

struct ValidationReport {
    bool admissible = true;
    std::vector<AdmissibilityViolation> admissibility_violations;
    bool regular = true;
    std::vector<std::pair<std::size_t, std::size_t>> irregular_pairs;
    bool symmetrizable = false;
    bool indecomposable = false;
};

ValidationReport validate(const CartanData& cartan);

/// Diagonal d with d_i a_ij = d_j a_ji, d_1 = 1 on each connected block, or
/// nullopt when none exists. Entries are nonzero but may be negative.
std::optional<std::vector<Rational>> symmetrizer(const CartanData& cartan);

enum class RankOneType { Heisenberg3, Sl11, Sl2, Osp12 };

std::string to_string(RankOneType t);

/// Throws IndexOutOfRange.
RankOneType rank_one_type(const CartanData& cartan, std::size_t i);

} // namespace superroot
