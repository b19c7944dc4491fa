#pragma once

#include <string>

#include <json.hpp>

#include "fmw/exploration.hpp"
#include "fmw/product.hpp"
#include "fmw/qe.hpp"
#include "fmw/structure.hpp"

namespace fmw::io {

using Json = nlohmann::json;

// Reads and parses a JSON file; InputError on I/O or syntax problems.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

// {"signature": {...}, "universe": [...], "relations": {...}} with an
// optional free-form "meta" object. Unknown keys are rejected.
Structure structure_from_json(const Json& j);
// Relation tuples are sorted by element name.
Json structure_to_json(const Structure& m);

// A structure document with a "product" key {"base", "fibers", "with_s"};
// the product is rebuilt from base and fibers, and any universe/relations
// given alongside must agree with it.
ProductStructure product_from_json(const Json& j);
Json product_to_json(const ProductStructure& p);

// {"colors": {"elem": "red", ...}}; palette grows to include every color used.
Coloring coloring_from_json(const Json& j, const Structure& m);
Json coloring_to_json(const Coloring& c);

Json morley_to_json(const std::vector<MorleySymbol>& added);

}  // namespace fmw::io
