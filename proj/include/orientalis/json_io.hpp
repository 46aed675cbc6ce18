#ifndef ORIENTALIS_JSON_IO_HPP
#define ORIENTALIS_JSON_IO_HPP

#include "orientalis/cylinders.hpp"
#include "orientalis/polygraph.hpp"
#include "orientalis/steiner.hpp"

#include "json.hpp"

namespace orientalis {

/// {"dims": [[key,...],...], "boundaries": {key: {"src":..., "tgt":...}}}
/// Keys are serialized as "0.1.2" for tuples, raw strings for names;
/// boundary expressions use the ASCII cell grammar.
nlohmann::json polygraph_to_json(const Polygraph& s);
std::shared_ptr<const Polygraph> polygraph_from_json(const nlohmann::json& j);

/// {"basis": [[key,...],...], "d": {key: {key: int}}}
nlohmann::json adc_to_json(const AugDirComplex& k);

/// Rows of {"neg": {key: int}, "pos": {key: int}}.
nlohmann::json table_to_json(const CellTable& t);

/// {"aux": [...], "principal": "...", "base": "..."}
nlohmann::json cone_to_json(const Cone& c);

/// One generator per line: "<0,1,2> : <0,2> -> <1,2>*0<0,1>".
std::string polygraph_to_text(const Polygraph& s, bool unicode);

} // namespace orientalis

#endif
