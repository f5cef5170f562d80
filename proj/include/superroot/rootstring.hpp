#pragma once

#include "superroot/catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace superroot {

struct StringEntry {
    std::int64_t k;
    RootVector root; // beta + k alpha
    bool real;
};

/// The alpha-string through beta: {beta + k alpha} n roots, k increasing.
struct RootString {
    RootVector beta;
    RootVector alpha;
    bool alpha_isotropic = false;
    std::vector<StringEntry> entries;
    std::optional<std::int64_t> zero_slot; // k with beta + k alpha = 0
    std::int64_t k_lo = 0;                 // scanned window
    std::int64_t k_hi = 0;

    std::size_t real_count() const;
};

/// Non-isotropic alpha: scans outward until two consecutive misses, and at least
/// |k| <= min_window. Isotropic alpha: scans |k| <= height(beta) + 2 (or
/// min_window if larger) and throws WindowExhausted if a root sits on the edge.
/// Throws NotARoot if alpha is not real.
RootString root_string(const RootSystemHandle& h, const RootVector& beta, const RootVector& alpha,
                       std::int64_t min_window = 6);

struct UnbrokenVerdict {
    std::int64_t p = 0;
    std::int64_t q = 0;
    Rational pairing; // beta(h_alpha)
};

/// Non-isotropic direction only. Throws BrokenString if the string has a gap,
/// p - q differs from beta(h_alpha), or s_alpha does not reverse it.
UnbrokenVerdict check_unbroken(const RootSystemHandle& h, const RootString& s);

struct StringPattern {
    std::int64_t p_real = 0;
    std::int64_t q_imag = 0;
    std::int64_t r_real = 0;
};

/// Splits tags into real / imaginary / real blocks. Throws PatternViolation on
/// any other shape, or if q != 0 and p != r.
StringPattern string_pattern(const RootString& s);

struct LawResult {
    std::string law;
    bool pass;
    std::string detail;
};

/// Evaluates every law whose hypotheses hold for (alpha, beta); laws that do not
/// apply are omitted. With k, the isotropic-pairing law only looks at beta + k alpha.
std::vector<LawResult> pairing_laws(const RootSystemHandle& h, const RootVector& alpha, const RootVector& beta,
                                    std::optional<std::int64_t> k = std::nullopt);

struct LawTally {
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string first_witness;
};

struct SweepReport {
    std::string type;
    std::int64_t height_bound = 0;
    std::optional<std::int64_t> degree_bound;
    std::size_t strings = 0;
    std::vector<std::pair<std::string, LawTally>> laws;

    std::size_t failures() const;
    const LawTally* find(const std::string& law) const;
};

/// All (beta, alpha) with alpha real, beta a root, both of height <= h (or, for
/// affine types with degree_bound, of |null degree| <= degree_bound).
SweepReport string_sweep(const RootSystemHandle& h, std::int64_t height_bound,
                         std::optional<std::int64_t> degree_bound = std::nullopt);

// law names used in reports
inline constexpr const char* kLawUnbroken = "unbroken";
inline constexpr const char* kLawPattern = "pattern";
inline constexpr const char* kLawFourReal = "at-most-four-real";
inline constexpr const char* kLawSumNotReal = "sum-not-real";
inline constexpr const char* kLawIsoPairing = "isotropic-pairing-values";
inline constexpr const char* kLawIsoOpposite = "isotropic-opposite-sum";
inline constexpr const char* kLawIsoTwoReal = "isotropic-at-most-two-real";
inline constexpr const char* kLawIsoThree = "isotropic-three-term";

} // namespace superroot
