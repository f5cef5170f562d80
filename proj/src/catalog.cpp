#include "superroot/catalog.hpp"

#include "superroot/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

namespace superroot {

// ---------------------------------------------------------------- CatalogType

namespace {

std::string family_letter(Family f)
{
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D:
    case Family::D21a: return "D";
    case Family::F4: return "F";
    case Family::G3: return "G";
    }
    return "?";
}

[[noreturn]] void bad_type(std::string_view text, const std::string& why)
{
    throw Error(ErrorCode::InvalidType, "cannot parse type '" + std::string(text) + "': " + why);
}

int parse_int(std::string_view s, std::string_view whole)
{
    if (s.empty())
        bad_type(whole, "empty rank");
    int v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            bad_type(whole, "rank '" + std::string(s) + "' is not a nonnegative integer");
        v = v * 10 + (c - '0');
        if (v > 1000)
            bad_type(whole, "rank too large");
    }
    return v;
}

} // namespace

CatalogType CatalogType::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.size() < 4)
        bad_type(text, "too short");

    CatalogType t;
    std::string_view rest(s);
    std::string_view twist_part;
    if (auto caret = rest.find('^'); caret != std::string_view::npos) {
        twist_part = rest.substr(caret + 1);
        rest = rest.substr(0, caret);
    }
    if (twist_part.empty())
        t.twist = Twist::Finite;
    else if (twist_part == "(1)" || twist_part == "1")
        t.twist = Twist::Untwisted;
    else if (twist_part == "(4)" || twist_part == "4")
        t.twist = Twist::A4;
    else
        bad_type(text, "unknown twist '" + std::string(twist_part) + "'");

    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(rest.front())));
    if (rest.size() < 3 || rest[1] != '(' || rest.back() != ')')
        bad_type(text, "expected X(...)");
    std::string_view args = rest.substr(2, rest.size() - 3);

    std::string_view param;
    if (auto semi = args.find(';'); semi != std::string_view::npos) {
        param = args.substr(semi + 1);
        args = args.substr(0, semi);
    }
    std::vector<int> ranks;
    while (true) {
        auto comma = args.find(',');
        ranks.push_back(parse_int(args.substr(0, comma), text));
        if (comma == std::string_view::npos)
            break;
        args = args.substr(comma + 1);
    }

    auto want = [&](std::size_t k) {
        if (ranks.size() != k)
            bad_type(text, "expected " + std::to_string(k) + " rank argument(s)");
    };
    switch (letter) {
    case 'A': want(2); t.family = Family::A; t.m = ranks[0]; t.n = ranks[1]; break;
    case 'B': want(2); t.family = Family::B; t.m = ranks[0]; t.n = ranks[1]; break;
    case 'C': want(1); t.family = Family::C; t.n = ranks[0]; break;
    case 'D':
        want(2);
        t.m = ranks[0];
        t.n = ranks[1];
        if (!param.empty()) {
            if (t.m != 2 || t.n != 1)
                bad_type(text, "parameter only allowed for D(2,1;a)");
            t.family = Family::D21a;
            try {
                t.a = parse_rational(param);
            } catch (const Error&) {
                bad_type(text, "bad parameter");
            }
        } else {
            t.family = Family::D;
        }
        break;
    case 'F': want(1); t.family = Family::F4; t.n = ranks[0]; if (t.n != 4) bad_type(text, "only F(4)"); break;
    case 'G': want(1); t.family = Family::G3; t.n = ranks[0]; if (t.n != 3) bad_type(text, "only G(3)"); break;
    default: bad_type(text, "unknown family");
    }
    if (!param.empty() && t.family != Family::D21a)
        bad_type(text, "unexpected parameter");
    if (t.twist == Twist::A4 && t.family != Family::A)
        bad_type(text, "twist (4) only exists for family A");
    return t;
}

std::string CatalogType::str() const
{
    std::string s = family_letter(family) + "(";
    switch (family) {
    case Family::A:
    case Family::B:
    case Family::D: s += std::to_string(m) + "," + std::to_string(n); break;
    case Family::C:
    case Family::F4:
    case Family::G3: s += std::to_string(n); break;
    case Family::D21a: s += "2,1;" + superroot::to_string(a); break;
    }
    s += ")";
    if (twist == Twist::Untwisted)
        s += "^(1)";
    else if (twist == Twist::A4)
        s += "^(4)";
    return s;
}

// ------------------------------------------------------------- EpsDeltaVector

bool EpsDeltaVector::is_zero() const
{
    auto z = [](std::int64_t x) { return x == 0; };
    return null == 0 && std::all_of(eps.begin(), eps.end(), z) && std::all_of(del.begin(), del.end(), z);
}

std::string EpsDeltaVector::str() const
{
    std::ostringstream os;
    bool first = true;
    auto term = [&](std::int64_t c, const std::string& name) {
        if (c == 0)
            return;
        if (c < 0)
            os << (first ? "-" : " - ");
        else if (!first)
            os << " + ";
        if (c != 1 && c != -1)
            os << (c < 0 ? -c : c);
        os << name;
        first = false;
    };
    for (std::size_t i = 0; i < eps.size(); ++i)
        term(eps[i], "e" + std::to_string(i + 1));
    for (std::size_t p = 0; p < del.size(); ++p)
        term(del[p], "d" + std::to_string(p + 1));
    term(null, "D");
    if (first)
        os << "0";
    return os.str();
}

EpsDeltaVector& EpsDeltaVector::operator+=(const EpsDeltaVector& o)
{
    if (eps.size() != o.eps.size() || del.size() != o.del.size())
        throw Error(ErrorCode::RankMismatch, "eps/delta vectors of different shapes");
    for (std::size_t i = 0; i < eps.size(); ++i)
        eps[i] += o.eps[i];
    for (std::size_t i = 0; i < del.size(); ++i)
        del[i] += o.del[i];
    null += o.null;
    return *this;
}

EpsDeltaVector operator-(EpsDeltaVector a)
{
    for (auto& x : a.eps)
        x = -x;
    for (auto& x : a.del)
        x = -x;
    a.null = -a.null;
    return a;
}

EpsDeltaVector operator*(std::int64_t k, EpsDeltaVector a)
{
    for (auto& x : a.eps)
        x *= k;
    for (auto& x : a.del)
        x *= k;
    a.null *= k;
    return a;
}

// ---------------------------------------------------------------------- Impl

struct RootSystemHandle::Impl {
    CatalogType type;
    std::size_t M = 0;
    std::size_t N = 0;
    bool affine = false;
    std::vector<EpsDeltaVector> simple;
    CartanData cartan{{{Rational(2)}}, {0}};
    std::vector<Rational> d;

    // conversion: S has one row per coordinate (eps, del, null) and one column per simple root
    std::vector<std::vector<std::int64_t>> S;
    std::vector<std::size_t> pivot_rows;
    std::vector<std::vector<std::int64_t>> inv_num;
    std::int64_t inv_den = 1;

    // nonzero finite parts with support <= 2 and entries in {+-1,+-2}
    std::vector<EpsDeltaVector> candidates;

    std::size_t dim() const { return M + N + (affine ? 1 : 0); }

    std::vector<std::int64_t> flatten(const EpsDeltaVector& v) const
    {
        std::vector<std::int64_t> x(v.eps);
        x.insert(x.end(), v.del.begin(), v.del.end());
        if (affine)
            x.push_back(v.null);
        return x;
    }

    EpsDeltaVector zero() const
    {
        EpsDeltaVector z;
        z.eps.assign(M, 0);
        z.del.assign(N, 0);
        return z;
    }

    void check_shape(const EpsDeltaVector& v) const
    {
        if (v.eps.size() != M || v.del.size() != N)
            throw Error(ErrorCode::RankMismatch, "expected " + std::to_string(M) + " eps and " + std::to_string(N) +
                                                     " delta coordinates for " + type.str());
        if (!affine && v.null != 0)
            throw Error(ErrorCode::RankMismatch, "null-root coefficient on finite type " + type.str());
    }

    Rational form(const EpsDeltaVector& u, const EpsDeltaVector& v) const
    {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < M; ++i)
            s += u.eps[i] * v.eps[i];
        for (std::size_t p = 0; p < N; ++p)
            s -= u.del[p] * v.del[p];
        return Rational(static_cast<long>(s));
    }

    EpsDeltaVector from_alpha(const RootVector& r) const
    {
        if (r.size() != simple.size())
            throw Error(ErrorCode::RankMismatch, "root of length " + std::to_string(r.size()) + " for rank " +
                                                     std::to_string(simple.size()));
        EpsDeltaVector v = zero();
        for (std::size_t j = 0; j < simple.size(); ++j)
            if (r[j] != 0)
                v += r[j] * simple[j];
        return v;
    }

    std::optional<RootVector> try_alpha(const EpsDeltaVector& v) const
    {
        auto x = flatten(v);
        const std::size_t n = simple.size();
        RootVector r(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t s = 0;
            for (std::size_t k = 0; k < n; ++k)
                s += inv_num[i][k] * x[pivot_rows[k]];
            if (s % inv_den != 0)
                return std::nullopt;
            r[i] = s / inv_den;
        }
        for (std::size_t row = 0; row < x.size(); ++row) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < n; ++j)
                s += S[row][j] * r[j];
            if (s != x[row])
                return std::nullopt;
        }
        return r;
    }

    /// Membership of the finite part in the finite root table.
    bool finite_member(const EpsDeltaVector& v) const
    {
        struct Entry {
            bool eps;
            std::int64_t val;
        };
        std::vector<Entry> nz;
        for (auto x : v.eps)
            if (x != 0)
                nz.push_back({true, x});
        for (auto x : v.del)
            if (x != 0)
                nz.push_back({false, x});
        if (nz.empty() || nz.size() > 2)
            return false;
        const bool unit_pair = nz.size() == 2 && std::abs(nz[0].val) == 1 && std::abs(nz[1].val) == 1;
        switch (type.family) {
        case Family::A:
            return nz.size() == 2 && nz[0].val + nz[1].val == 0 && std::abs(nz[0].val) == 1;
        case Family::B:
            if (nz.size() == 1)
                return std::abs(nz[0].val) == 1 || (!nz[0].eps && std::abs(nz[0].val) == 2);
            return unit_pair;
        case Family::C:
        case Family::D:
            if (nz.size() == 1)
                return !nz[0].eps && std::abs(nz[0].val) == 2;
            return unit_pair;
        default: return false;
        }
    }

    /// Eq.-(3.1)-style table for A(2k,2l)^(4).
    bool twisted_member(const EpsDeltaVector& v) const
    {
        const std::int64_t r = v.null;
        std::vector<std::pair<bool, std::int64_t>> nz;
        for (auto x : v.eps)
            if (x != 0)
                nz.emplace_back(true, x);
        for (auto x : v.del)
            if (x != 0)
                nz.emplace_back(false, x);
        auto mod = [](std::int64_t a, std::int64_t b) { return ((a % b) + b) % b; };
        if (nz.empty())
            return r != 0;
        if (nz.size() == 2)
            return std::abs(nz[0].second) == 1 && std::abs(nz[1].second) == 1 && mod(r, 2) == 0;
        if (nz.size() == 1) {
            const auto [is_eps, val] = nz[0];
            if (std::abs(val) == 1)
                return true;
            if (std::abs(val) == 2)
                return is_eps ? mod(r, 4) == 2 : mod(r, 4) == 0;
        }
        return false;
    }

    Membership classify(const EpsDeltaVector& v) const
    {
        check_shape(v);
        Membership m;
        EpsDeltaVector fin = v;
        fin.null = 0;
        const bool fin_zero = fin.is_zero();
        switch (type.twist) {
        case Twist::Finite: m.in_delta = finite_member(v); break;
        case Twist::Untwisted: m.in_delta = fin_zero ? v.null != 0 : finite_member(fin); break;
        case Twist::A4: m.in_delta = twisted_member(v); break;
        }
        if (!m.in_delta)
            return m;
        m.real = !fin_zero;
        std::int64_t p = 0;
        for (auto x : v.del)
            p += x;
        if (type.twist == Twist::A4)
            p += v.null;
        m.parity = static_cast<int>(((p % 2) + 2) % 2);
        m.isotropic = m.real && form(v, v) == 0;
        return m;
    }
};

namespace {

using ImplPtr = std::shared_ptr<RootSystemHandle::Impl>;

EpsDeltaVector ed_unit(std::size_t M, std::size_t N, int eps_i, int eps_c, int del_p, int del_c)
{
    EpsDeltaVector v;
    v.eps.assign(M, 0);
    v.del.assign(N, 0);
    if (eps_i >= 0)
        v.eps[eps_i] += eps_c;
    if (del_p >= 0)
        v.del[del_p] += del_c;
    return v;
}

EpsDeltaVector e_minus_e(std::size_t M, std::size_t N, int i, int j)
{
    auto v = ed_unit(M, N, i, 1, -1, 0);
    v.eps[j] -= 1;
    return v;
}

EpsDeltaVector d_minus_d(std::size_t M, std::size_t N, int p, int q)
{
    auto v = ed_unit(M, N, -1, 0, p, 1);
    v.del[q] -= 1;
    return v;
}

/// Finite-family ranks and distinguished bases.
void finite_base(RootSystemHandle::Impl& im)
{
    const auto& t = im.type;
    auto& s = im.simple;
    auto invalid = [&](const std::string& why) { throw Error(ErrorCode::InvalidType, t.str() + ": " + why); };
    switch (t.family) {
    case Family::A: {
        if (t.m < 0 || t.n < 0)
            invalid("ranks must be nonnegative");
        if (t.m == t.n)
            throw Error(ErrorCode::UnsupportedType, t.str() + ": A(n,n) has a degenerate form and is not built");
        im.M = t.m + 1;
        im.N = t.n + 1;
        const std::size_t M = im.M, N = im.N;
        for (std::size_t i = 0; i + 1 < M; ++i)
            s.push_back(e_minus_e(M, N, i, i + 1));
        s.push_back(ed_unit(M, N, M - 1, 1, 0, -1));
        for (std::size_t p = 0; p + 1 < N; ++p)
            s.push_back(d_minus_d(M, N, p, p + 1));
        break;
    }
    case Family::B: {
        if (t.m < 0 || t.n < 1)
            invalid("B(m,n) needs m >= 0, n >= 1");
        im.M = t.m;
        im.N = t.n;
        const std::size_t M = im.M, N = im.N;
        for (std::size_t p = 0; p + 1 < N; ++p)
            s.push_back(d_minus_d(M, N, p, p + 1));
        if (M == 0) {
            s.push_back(ed_unit(M, N, -1, 0, N - 1, 1));
        } else {
            s.push_back(ed_unit(M, N, 0, -1, N - 1, 1));
            for (std::size_t i = 0; i + 1 < M; ++i)
                s.push_back(e_minus_e(M, N, i, i + 1));
            s.push_back(ed_unit(M, N, M - 1, 1, -1, 0));
        }
        break;
    }
    case Family::C: {
        if (t.n < 2)
            invalid("C(n) needs n >= 2");
        im.M = 1;
        im.N = t.n - 1;
        const std::size_t M = im.M, N = im.N;
        s.push_back(ed_unit(M, N, 0, 1, 0, -1));
        for (std::size_t p = 0; p + 1 < N; ++p)
            s.push_back(d_minus_d(M, N, p, p + 1));
        s.push_back(ed_unit(M, N, -1, 0, N - 1, 2));
        break;
    }
    case Family::D: {
        if (t.m < 2 || t.n < 1)
            invalid("D(m,n) needs m >= 2, n >= 1");
        im.M = t.m;
        im.N = t.n;
        const std::size_t M = im.M, N = im.N;
        for (std::size_t p = 0; p + 1 < N; ++p)
            s.push_back(d_minus_d(M, N, p, p + 1));
        s.push_back(ed_unit(M, N, 0, -1, N - 1, 1));
        for (std::size_t i = 0; i + 1 < M; ++i)
            s.push_back(e_minus_e(M, N, i, i + 1));
        auto last = ed_unit(M, N, M - 2, 1, -1, 0);
        last.eps[M - 1] += 1;
        s.push_back(last);
        break;
    }
    default: throw Error(ErrorCode::UnsupportedType, t.str() + " is not built in this release");
    }
}

void build_conversion(RootSystemHandle::Impl& im)
{
    const std::size_t n = im.simple.size();
    const std::size_t dim = im.dim();
    im.S.assign(dim, std::vector<std::int64_t>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        auto x = im.flatten(im.simple[j]);
        for (std::size_t r = 0; r < dim; ++r)
            im.S[r][j] = x[r];
    }
    // greedily pick n independent rows
    RationalMatrix chosen;
    for (std::size_t r = 0; r < dim && im.pivot_rows.size() < n; ++r) {
        std::vector<Rational> row(n);
        for (std::size_t j = 0; j < n; ++j)
            row[j] = static_cast<long>(im.S[r][j]);
        auto trial = chosen;
        trial.push_back(row);
        if (rank(trial) == trial.size()) {
            chosen = std::move(trial);
            im.pivot_rows.push_back(r);
        }
    }
    if (im.pivot_rows.size() != n)
        throw Error(ErrorCode::NotInLattice, "simple roots of " + im.type.str() + " are linearly dependent");
    // invert chosen by Gauss-Jordan
    RationalMatrix aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = chosen[i][j];
        aug[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (aug[p][c] == 0)
            ++p;
        std::swap(aug[p], aug[c]);
        Rational piv = aug[c][c];
        for (auto& x : aug[c])
            x /= piv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || aug[r][c] == 0)
                continue;
            Rational f = aug[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j)
                aug[r][j] -= f * aug[c][j];
        }
    }
    // inverse of chosen (rows are the original simple-root columns transposed)
    mpz_class den = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            den = lcm(den, aug[i][n + j].get_den());
    im.inv_den = den.get_si();
    im.inv_num.assign(n, std::vector<std::int64_t>(n, 0));
    // chosen * x = v_sub  =>  x = chosen^{-1} v_sub
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = aug[i][n + j] * Rational(den);
            im.inv_num[i][j] = v.get_num().get_si();
        }
}

void build_cartan(RootSystemHandle::Impl& im)
{
    const std::size_t n = im.simple.size();
    RationalMatrix a(n, std::vector<Rational>(n));
    std::vector<int> parity(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational fii = im.form(im.simple[i], im.simple[i]);
        for (std::size_t j = 0; j < n; ++j) {
            const Rational fij = im.form(im.simple[i], im.simple[j]);
            a[i][j] = fii == 0 ? fij : Rational(2 * fij / fii);
        }
        parity[i] = im.classify(im.simple[i]).parity;
    }
    im.cartan = CartanData(std::move(a), std::move(parity));
    auto d = symmetrizer(im.cartan);
    if (!d)
        throw Error(ErrorCode::NotSymmetrizable, "catalog Cartan matrix of " + im.type.str() + " not symmetrizable");
    im.d = *d;
}

void build_candidates(RootSystemHandle::Impl& im)
{
    const std::size_t D = im.M + im.N;
    const std::int64_t vals[] = {-2, -1, 1, 2};
    auto make = [&](std::size_t idx, std::int64_t v, EpsDeltaVector& e) {
        if (idx < im.M)
            e.eps[idx] = v;
        else
            e.del[idx - im.M] = v;
    };
    for (std::size_t i = 0; i < D; ++i)
        for (auto vi : vals) {
            auto e = im.zero();
            make(i, vi, e);
            im.candidates.push_back(e);
            for (std::size_t j = i + 1; j < D; ++j)
                for (auto vj : vals) {
                    auto f = e;
                    make(j, vj, f);
                    im.candidates.push_back(f);
                }
        }
}

} // namespace

RootSystemHandle RootSystemHandle::build(const CatalogType& type)
{
    auto im = std::make_shared<Impl>();
    im->type = type;
    switch (type.twist) {
    case Twist::Finite: {
        finite_base(*im);
        break;
    }
    case Twist::Untwisted: {
        CatalogType fin = type;
        fin.twist = Twist::Finite;
        RootSystemHandle f = build(fin);
        im->M = f.num_eps();
        im->N = f.num_del();
        // theta: the unique positive root of maximal height, dominating every root
        auto roots = f.roots_up_to_degree(0);
        const RootVector* theta = nullptr;
        for (const auto& r : roots)
            if (r.is_positive() && (!theta || r.height() > theta->height()))
                theta = &r;
        for (const auto& r : roots)
            if (r.is_positive()) {
                if (r != *theta && r.height() == theta->height())
                    throw Error(ErrorCode::UnsupportedType, "highest root of " + fin.str() + " is not unique");
                if (!(*theta - r).is_zero() && !(*theta - r).is_positive())
                    throw Error(ErrorCode::UnsupportedType, "highest root of " + fin.str() + " does not dominate");
            }
        im->affine = true;
        EpsDeltaVector a0 = -f.to_epsdelta(*theta);
        a0.null = 1;
        im->simple.push_back(a0);
        for (const auto& s : f.simple_roots())
            im->simple.push_back(s);
        break;
    }
    case Twist::A4: {
        if (type.family != Family::A || type.m < 2 || type.n < 2 || type.m % 2 || type.n % 2)
            throw Error(ErrorCode::InvalidType, type.str() + ": twist (4) needs A(2k,2l) with k,l >= 1");
        const std::size_t k = type.m / 2, l = type.n / 2;
        im->M = k;
        im->N = l;
        im->affine = true;
        auto a0 = ed_unit(k, l, -1, 0, 0, -1);
        a0.null = 1;
        im->simple.push_back(a0);
        for (std::size_t p = 0; p + 1 < l; ++p)
            im->simple.push_back(d_minus_d(k, l, p, p + 1));
        im->simple.push_back(ed_unit(k, l, 0, -1, l - 1, 1));
        for (std::size_t i = 0; i + 1 < k; ++i)
            im->simple.push_back(e_minus_e(k, l, i, i + 1));
        im->simple.push_back(ed_unit(k, l, k - 1, 1, -1, 0));
        break;
    }
    }
    for (const auto& s : im->simple)
        if (!im->classify(s).in_delta)
            throw Error(ErrorCode::NotARoot, "simple root " + s.str() + " of " + type.str() + " is not in the table");
    build_conversion(*im);
    build_cartan(*im);
    build_candidates(*im);
    RootSystemHandle h;
    h.impl_ = std::move(im);
    return h;
}

const CatalogType& RootSystemHandle::type() const { return impl_->type; }
bool RootSystemHandle::is_affine() const { return impl_->affine; }
std::size_t RootSystemHandle::rank() const { return impl_->simple.size(); }
std::size_t RootSystemHandle::num_eps() const { return impl_->M; }
std::size_t RootSystemHandle::num_del() const { return impl_->N; }
const std::vector<EpsDeltaVector>& RootSystemHandle::simple_roots() const { return impl_->simple; }
const CartanData& RootSystemHandle::cartan() const { return impl_->cartan; }
const std::vector<Rational>& RootSystemHandle::symmetrizer() const { return impl_->d; }

Membership RootSystemHandle::classify(const EpsDeltaVector& v) const { return impl_->classify(v); }
Membership RootSystemHandle::classify(const RootVector& v) const { return impl_->classify(impl_->from_alpha(v)); }

Rational RootSystemHandle::form(const EpsDeltaVector& u, const EpsDeltaVector& v) const
{
    impl_->check_shape(u);
    impl_->check_shape(v);
    return impl_->form(u, v);
}

Rational RootSystemHandle::form(const RootVector& u, const RootVector& v) const
{
    return impl_->form(impl_->from_alpha(u), impl_->from_alpha(v));
}

Rational RootSystemHandle::coroot_pairing(const RootVector& beta, const RootVector& alpha) const
{
    const auto a = impl_->from_alpha(alpha);
    const Rational aa = impl_->form(a, a);
    if (aa == 0)
        throw Error(ErrorCode::IsotropicReflector, "root " + alpha.str() + " is isotropic");
    return 2 * impl_->form(impl_->from_alpha(beta), a) / aa;
}

RootVector RootSystemHandle::to_alpha(const EpsDeltaVector& v) const
{
    impl_->check_shape(v);
    auto r = impl_->try_alpha(v);
    if (!r)
        throw Error(ErrorCode::NotInLattice, v.str() + " is not in the root lattice of " + type().str());
    return *r;
}

EpsDeltaVector RootSystemHandle::to_epsdelta(const RootVector& v) const { return impl_->from_alpha(v); }

EpsDeltaVector RootSystemHandle::finite_part(const EpsDeltaVector& v) const
{
    EpsDeltaVector f = v;
    f.null = 0;
    return f;
}

std::int64_t RootSystemHandle::degree(const RootVector& v) const { return impl_->from_alpha(v).null; }

RootVector RootSystemHandle::null_root() const
{
    if (!impl_->affine)
        throw Error(ErrorCode::UnsupportedType, type().str() + " has no null root");
    auto z = impl_->zero();
    z.null = 1;
    return to_alpha(z);
}

EpsDeltaVector RootSystemHandle::zero_ed() const { return impl_->zero(); }

std::vector<RootVector> RootSystemHandle::roots_up_to_degree(std::int64_t k, bool real_only) const
{
    const auto& im = *impl_;
    std::vector<RootVector> out;
    const std::int64_t kmax = im.affine ? k : 0;
    auto consider = [&](EpsDeltaVector v) {
        for (std::int64_t r = -kmax; r <= kmax; ++r) {
            v.null = r;
            auto m = im.classify(v);
            if (!m.in_delta || (real_only && !m.real))
                continue;
            auto a = im.try_alpha(v);
            if (!a)
                throw Error(ErrorCode::NotInLattice, "root " + v.str() + " outside the root lattice");
            out.push_back(*a);
        }
    };
    for (const auto& c : im.candidates)
        consider(c);
    if (im.affine && !real_only)
        consider(im.zero());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RootVector> RootSystemHandle::roots_up_to_height(std::int64_t h, bool real_only) const
{
    // alpha_0 carries the whole null coefficient, so |degree| <= height
    auto all = roots_up_to_degree(h, real_only);
    std::vector<RootVector> out;
    for (auto& r : all)
        if (r.height() <= h)
            out.push_back(std::move(r));
    return out;
}

RootClass classify(const RootVector& beta, const RootSystemHandle& handle)
{
    auto m = handle.classify(beta);
    if (!m.in_delta)
        throw Error(ErrorCode::NotARoot, beta.str() + " is not a root of " + handle.type().str());
    return {m.parity, m.isotropic, m.real};
}

} // namespace superroot
