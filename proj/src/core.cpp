#include "superroot/error.hpp"
#include "superroot/rational.hpp"
#include "superroot/roots.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace superroot {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::NotIsotropicOdd: return "NotIsotropicOdd";
    case ErrorCode::NotRegularInBase: return "NotRegularInBase";
    case ErrorCode::IsotropicReflector: return "IsotropicReflector";
    case ErrorCode::NonRegularBaseEncountered: return "NonRegularBaseEncountered";
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::InvalidType: return "InvalidType";
    case ErrorCode::NotInLattice: return "NotInLattice";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::PairingNotIntegral: return "PairingNotIntegral";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::WindowExhausted: return "WindowExhausted";
    case ErrorCode::BrokenString: return "BrokenString";
    case ErrorCode::PatternViolation: return "PatternViolation";
    case ErrorCode::TruncationHit: return "TruncationHit";
    case ErrorCode::ProblemTooLarge: return "ProblemTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start])))
        ++start;
    s = s.substr(start);
    if (s.empty())
        throw Error(ErrorCode::ParseError, "empty rational");
    if (s.front() == '+')
        s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

long long to_int64(const Rational& q)
{
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw Error(ErrorCode::PairingNotIntegral, "expected a machine integer, got " + q.get_str());
    return q.get_num().get_si();
}

RationalMatrix zero_matrix(std::size_t rows, std::size_t cols)
{
    return RationalMatrix(rows, std::vector<Rational>(cols, Rational(0)));
}

std::size_t rank(RationalMatrix m)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0)
                continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::vector<std::vector<Rational>> nullspace(RationalMatrix m, std::size_t cols)
{
    // reduced row echelon form, then one basis vector per free column
    const std::size_t rows = m.size();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        Rational piv = m[r][c];
        for (auto& x : m[r])
            x /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------- RootVector

RootVector RootVector::unit(std::size_t n, std::size_t i)
{
    RootVector v(n);
    v[i] = 1;
    return v;
}

bool RootVector::is_zero() const
{
    for (auto c : coords_)
        if (c != 0)
            return false;
    return true;
}

bool RootVector::is_positive() const
{
    bool nonzero = false;
    for (auto c : coords_) {
        if (c < 0)
            return false;
        nonzero |= c != 0;
    }
    return nonzero;
}

bool RootVector::is_negative() const { return (-*this).is_positive(); }

std::int64_t RootVector::height() const
{
    std::int64_t h = 0;
    for (auto c : coords_)
        h += c < 0 ? -c : c;
    return h;
}

RootVector& RootVector::operator+=(const RootVector& o)
{
    if (o.size() != size())
        throw Error(ErrorCode::DimensionMismatch, "root vector sizes differ");
    for (std::size_t i = 0; i < size(); ++i)
        coords_[i] += o.coords_[i];
    return *this;
}

RootVector& RootVector::operator-=(const RootVector& o)
{
    if (o.size() != size())
        throw Error(ErrorCode::DimensionMismatch, "root vector sizes differ");
    for (std::size_t i = 0; i < size(); ++i)
        coords_[i] -= o.coords_[i];
    return *this;
}

RootVector operator-(RootVector a)
{
    for (auto& c : a.coords_)
        c = -c;
    return a;
}

RootVector operator*(std::int64_t k, RootVector a)
{
    for (auto& c : a.coords_)
        c *= k;
    return a;
}

std::string RootVector::str() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coords_.size(); ++i)
        os << (i ? "," : "") << coords_[i];
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RootVector& v) { return os << v.str(); }

// -------------------------------------------------------------- CorootVector

CorootVector CorootVector::unit(std::size_t n, std::size_t i)
{
    CorootVector v(n);
    v[i] = 1;
    return v;
}

CorootVector& CorootVector::operator+=(const CorootVector& o)
{
    if (o.size() != size())
        throw Error(ErrorCode::DimensionMismatch, "coroot vector sizes differ");
    for (std::size_t i = 0; i < size(); ++i)
        coords_[i] += o.coords_[i];
    return *this;
}

CorootVector& CorootVector::operator-=(const CorootVector& o)
{
    if (o.size() != size())
        throw Error(ErrorCode::DimensionMismatch, "coroot vector sizes differ");
    for (std::size_t i = 0; i < size(); ++i)
        coords_[i] -= o.coords_[i];
    return *this;
}

CorootVector& CorootVector::operator*=(const Rational& s)
{
    for (auto& c : coords_)
        c *= s;
    return *this;
}

std::string CorootVector::str() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coords_.size(); ++i)
        os << (i ? "," : "") << coords_[i].get_str();
    os << ']';
    return os.str();
}

} // namespace superroot
