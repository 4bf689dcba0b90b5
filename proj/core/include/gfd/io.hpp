#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gfd/cohomology.hpp"
#include "gfd/dimension.hpp"
#include "gfd/resolution.hpp"

namespace gfd {

using json = nlohmann::json;

inline constexpr int kDocumentVersion = 1;

/// An object over a catalog ring, split into one part per local factor.
/// Products and composite moduli are handled factor by factor.
template <class T>
struct OverRing {
  RingHandle ring;
  std::vector<T> parts;
};

RingSpec ring_spec_from_json(const json& j, const std::string& where = "ring");
json ring_spec_to_json(const RingSpec& s);
/// "Z", "Integers", "Zmod4", "Zmod(4)", "TruncPoly(2,3)", "TruncPoly2_3",
/// "Product(Zmod(4),Z)", or an inline JSON ring document.
RingSpec ring_spec_from_name(const std::string& name);

/// Element encoding: integers, or coefficient lists over truncated
/// polynomial rings.
json element_to_json(const Ring& r, Elem a);
Elem element_from_json(const Ring& r, const json& j, const std::string& where);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Ring& r, const json& j, const std::string& where);

json module_to_json(const Module& m);
json complex_to_json(const Complex& c);
json chain_map_to_json(const ChainMap& f);
json bundle_to_json(const ResolutionBundle& b);
json complete_resolution_to_json(const CompleteResolution& c);

Complex complex_from_json(const Ring& r, const json& j, const std::string& where);
ChainMap chain_map_from_json(const Ring& r, const json& j, const std::string& where);
ResolutionBundle bundle_from_json(const Ring& r, const json& j, const std::string& where);

/// Full documents: {"version": 1, "type": ..., "ring": ..., <body>} where the
/// body may instead be {"components": [body per local factor]}.
json module_document(const OverRing<Module>& m);
json complex_document(const OverRing<Complex>& c);
json chain_map_document(const OverRing<ChainMap>& f);
json ses_document(const OverRing<ShortExactSequence>& s);
json bundle_document(const OverRing<ResolutionBundle>& b);

OverRing<Module> parse_module_document(const json& j);
OverRing<Complex> parse_complex_document(const json& j);
OverRing<ChainMap> parse_chain_map_document(const json& j);
OverRing<ShortExactSequence> parse_ses_document(const json& j);
OverRing<ResolutionBundle> parse_bundle_document(const json& j);

/// The "type" field after checking the version; ParseError otherwise.
std::string document_type(const json& j);
/// Reads and parses a JSON file; ParseError carries the path and position.
json read_json_file(const std::string& path);

json ext_int_to_json(ExtInt v);
ExtInt ext_int_from_json(const json& j, const std::string& where);

json table_to_json(const CohomologyTable& t);
json dimension_report_to_json(const DimensionReport& r);
json verdict_to_json(const Verdict& v);
json sequence_report_to_json(const LongExactSequenceReport& r);

}  // namespace gfd
