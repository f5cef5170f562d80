#include "superroot/io.hpp"

#include "superroot/error.hpp"

#include <fstream>
#include <sstream>

namespace superroot {

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Rational(std::to_string(j.get<long long>()));
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw Error(ErrorCode::ParseError, "expected an integer or \"p/q\", got " + j.dump());
}

Json rational_to_json(const Rational& q)
{
    if (is_integer(q) && q.get_num().fits_slong_p())
        return q.get_num().get_si();
    return to_string(q);
}

CartanData cartan_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("matrix") || !j.contains("parity"))
        throw Error(ErrorCode::ParseError, "Cartan data needs \"matrix\" and \"parity\"");
    RationalMatrix m;
    for (const auto& row : j.at("matrix")) {
        if (!row.is_array())
            throw Error(ErrorCode::ParseError, "matrix rows must be arrays");
        std::vector<Rational> r;
        for (const auto& x : row)
            r.push_back(rational_from_json(x));
        m.push_back(std::move(r));
    }
    std::vector<int> parity;
    for (const auto& p : j.at("parity")) {
        if (!p.is_number_integer() || (p.get<int>() != 0 && p.get<int>() != 1))
            throw Error(ErrorCode::ParseError, "parity entries must be 0 or 1");
        parity.push_back(p.get<int>());
    }
    return normalize(m, parity);
}

Json cartan_to_json(const CartanData& c)
{
    Json m = Json::array();
    for (std::size_t i = 0; i < c.size(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < c.size(); ++k)
            row.push_back(rational_to_json(c.a(i, k)));
        m.push_back(row);
    }
    return Json{{"matrix", m}, {"parity", c.parities()}};
}

namespace {

std::vector<std::int64_t> int_array(const Json& j, const char* what)
{
    if (!j.is_array())
        throw Error(ErrorCode::ParseError, std::string(what) + " must be an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw Error(ErrorCode::ParseError, std::string(what) + " must be an array of integers");
        out.push_back(x.get<std::int64_t>());
    }
    return out;
}

} // namespace

RootVector root_from_json(const Json& j, const RootSystemHandle& h)
{
    if (j.is_array()) {
        RootVector v(int_array(j, "root"));
        if (v.size() != h.rank())
            throw Error(ErrorCode::RankMismatch, "root " + j.dump() + " has " + std::to_string(v.size()) +
                                                     " coordinates, rank is " + std::to_string(h.rank()));
        return v;
    }
    if (j.is_object()) {
        if (j.contains("alpha"))
            return root_from_json(j.at("alpha"), h);
        EpsDeltaVector e = h.zero_ed();
        if (j.contains("eps"))
            e.eps = int_array(j.at("eps"), "eps");
        if (j.contains("del"))
            e.del = int_array(j.at("del"), "del");
        if (j.contains("null")) {
            if (!j.at("null").is_number_integer())
                throw Error(ErrorCode::ParseError, "null coefficient must be an integer");
            e.null = j.at("null").get<std::int64_t>();
        }
        if (e.eps.size() != h.num_eps() || e.del.size() != h.num_del())
            throw Error(ErrorCode::RankMismatch, "root " + j.dump() + " has the wrong number of eps/del coordinates");
        return h.to_alpha(e);
    }
    throw Error(ErrorCode::ParseError, "cannot read a root from " + j.dump());
}

Json root_to_json(const RootVector& v) { return v.coords(); }

RootSet root_set_from_json(const Json& j, const RootSystemHandle& h)
{
    const Json& arr = (j.is_object() && j.contains("roots")) ? j.at("roots") : j;
    if (!arr.is_array())
        throw Error(ErrorCode::ParseError, "a root set is an array of roots");
    std::vector<RootVector> roots;
    for (const auto& x : arr)
        roots.push_back(root_from_json(x, h));
    return RootSet(h, roots);
}

Json root_set_to_json(const RootSet& s)
{
    Json roots = Json::array(), labels = Json::array();
    for (const auto& r : s) {
        roots.push_back(root_to_json(r));
        labels.push_back(s.handle().to_epsdelta(r).str());
    }
    return Json{{"roots", roots}, {"labels", labels}};
}

Json load_json_argument(const std::string& text)
{
    std::size_t i = text.find_first_not_of(" \t\r\n");
    try {
        if (i != std::string::npos && (text[i] == '[' || text[i] == '{'))
            return Json::parse(text);
        std::ifstream in(text);
        if (!in)
            throw Error(ErrorCode::ParseError, "cannot open " + text);
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
    }
}

} // namespace superroot
