#pragma once

#include "superroot/cartan.hpp"
#include "superroot/pisystem.hpp"

#include "json.hpp"

#include <string>

namespace superroot {

using Json = nlohmann::ordered_json;

/// Integers, or strings "p/q". Throws ParseError.
Rational rational_from_json(const Json& j);
/// Integers come out as numbers, everything else as "p/q".
Json rational_to_json(const Rational& q);

/// {"matrix": [[...], ...], "parity": [0|1, ...]}; the matrix is normalized on read.
CartanData cartan_from_json(const Json& j);
Json cartan_to_json(const CartanData& c);

/// A root is either an array of alpha coordinates or {"eps": [...], "del": [...], "null": k}.
RootVector root_from_json(const Json& j, const RootSystemHandle& h);
Json root_to_json(const RootVector& v);

/// An array of roots, or an object with a "roots" array.
RootSet root_set_from_json(const Json& j, const RootSystemHandle& h);
/// {"roots": [[...]...], "labels": ["e1 - d1", ...]}; re-reads to an equal RootSet.
Json root_set_to_json(const RootSet& s);

/// Inline JSON when the text starts with '[' or '{', otherwise a file path.
Json load_json_argument(const std::string& text);

} // namespace superroot
