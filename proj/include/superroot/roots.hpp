#pragma once

#include "superroot/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace superroot {

/// Integer coordinates over the simple roots alpha_1..alpha_n.
class RootVector {
public:
    RootVector() = default;
    explicit RootVector(std::size_t n) : coords_(n, 0) {}
    explicit RootVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
    RootVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

    static RootVector unit(std::size_t n, std::size_t i);

    std::size_t size() const { return coords_.size(); }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }
    std::int64_t& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<std::int64_t>& coords() const { return coords_; }

    bool is_zero() const;
    /// Nonzero with every coordinate >= 0.
    bool is_positive() const;
    bool is_negative() const;
    /// Sum of absolute values of the coordinates.
    std::int64_t height() const;

    RootVector& operator+=(const RootVector& o);
    RootVector& operator-=(const RootVector& o);
    friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
    friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
    friend RootVector operator-(RootVector a);
    friend RootVector operator*(std::int64_t k, RootVector a);

    friend bool operator==(const RootVector&, const RootVector&) = default;
    friend auto operator<=>(const RootVector& a, const RootVector& b) { return a.coords_ <=> b.coords_; }

    std::string str() const;

private:
    std::vector<std::int64_t> coords_;
};

std::ostream& operator<<(std::ostream& os, const RootVector& v);

/// Rational coordinates over the simple coroots h_1..h_n.
class CorootVector {
public:
    CorootVector() = default;
    explicit CorootVector(std::size_t n) : coords_(n, Rational(0)) {}
    explicit CorootVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

    static CorootVector unit(std::size_t n, std::size_t i);

    std::size_t size() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

    CorootVector& operator+=(const CorootVector& o);
    CorootVector& operator-=(const CorootVector& o);
    CorootVector& operator*=(const Rational& s);
    friend CorootVector operator+(CorootVector a, const CorootVector& b) { return a += b; }
    friend CorootVector operator-(CorootVector a, const CorootVector& b) { return a -= b; }
    friend CorootVector operator*(const Rational& s, CorootVector a) { return a *= s; }

    friend bool operator==(const CorootVector&, const CorootVector&) = default;

    std::string str() const;

private:
    std::vector<Rational> coords_;
};

} // namespace superroot
