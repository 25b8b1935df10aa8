#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "grm/gr_measure.hpp"
#include "grm/repcat.hpp"
#include "grm/verify.hpp"

namespace grm {

using Json = nlohmann::ordered_json;

/// Parses text; throws Error(ParseError) on malformed JSON.
Json parse_json(const std::string& text);
/// Reads and parses a file; throws Error(ParseError) when it cannot be read.
Json read_json_file(const std::string& path);

/// {"elements": [...], "relations": [[lower, upper], ...]} with the cover pairs.
Json to_json(const Poset& p);
Poset poset_from_json(const Json& j);

Json to_json(const Chain& c, const Poset& p);
Chain chain_from_json(const Json& j, const Poset& p);

/// "3/2" for scalars, nested arrays for chains. Input scalars may also be
/// JSON integers.
Json to_json(const ChainValue& v);
ChainValue chain_value_from_json(const Json& j);

/// {"poset": ..., "values": {"a": "4", ...}}
Json to_json(const LengthFunction& f);
LengthFunction length_function_from_json(const Json& j);

/// Element indices sorted ascending by value (stable), and the groups of
/// two or more elements sharing a value.
struct ValueOrder {
  std::vector<std::size_t> order;
  std::vector<std::vector<std::size_t>> ties;
};
ValueOrder order_by_value(const std::vector<ChainValue>& values);

/// The measure as a length function plus {"order": [...], "ties": [[...]]}.
/// Re-ingests with length_function_from_json.
Json measure_to_json(const Measure& m);

/// A quiver together with the category data the CLI needs.
struct QuiverInput {
  Quiver quiver;
  PrimeField field;
  int max_len = 5;
  CategoryLengthFunction lengths;
};
/// {"vertices": [...], "arrows": [[s, t], ...], "p": 2, "maxLen": 5,
///  "simpleLengths": {"1": "1", ...}}; p, maxLen and simpleLengths are optional.
QuiverInput quiver_input_from_json(const Json& j);
Json to_json(const QuiverInput& s);

Json to_json(const Representation& r);
Representation representation_from_json(const Json& j, std::shared_ptr<const Quiver> q, const PrimeField& f);

/// Poset JSON plus "quiver", "p", "maxLen", "complete", and per-class
/// "lengths", "dims", "labels", "families", "canonical" and "maps".
Json to_json(const IndPoset& ip, const CategoryLengthFunction& l);
IndPoset ind_poset_from_json(const Json& j);

Json to_json(const CategoryLengthFunction& l, const Quiver& q);
Json to_json(const AxiomReport& r);
Json to_json(const MainPropertyReport& r);
Json to_json(const DetectionResult& r, const Quiver& q);

}  // namespace grm
