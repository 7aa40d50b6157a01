#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "opwork/cofree/cofree.hpp"

namespace opwork::io {

using Json = nlohmann::json;

/// Malformed or non-canonical input; the message starts with a position (line:column or a JSON pointer).
struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kFormatVersion = "1";

enum class Kind { operad, colored_space, coalgebra, jet, represented_element, report };
std::string kind_name(Kind k);

struct Document {
  Kind kind = Kind::report;
  Json payload;
};

/// Strict: exactly the keys format_version, kind, payload.
Document parse(const std::string& text);
/// Sorted keys, two-space indent, trailing newline.
std::string serialize(const Document& doc);
Document read_file(const std::string& path);
void write_file(const std::string& path, const Document& doc);
/// Throws unless the document has the given kind.
const Json& expect_kind(const Document& doc, Kind k, const std::string& what);

Json matrix_json(const Matrix& m);
Json vector_json(const SparseVec& v, Index n);

struct OperadRef {
  std::shared_ptr<const OperadData> op;
  Json payload;
};
/// {"builtin": {"name", "cap"}} or an explicit presentation with stored composition tables.
OperadRef load_operad(const Json& payload);
/// Builtin form when the operad is an unmodified builtin, explicit otherwise.
Json operad_payload(const OperadData& op);

struct SpaceSpec {
  ColorSet colors;
  std::vector<Index> dims;
};
SpaceSpec load_space(const Json& payload);
Json space_payload(const ColorSet& colors, const std::vector<Index>& dims);
/// Dimensions per color of `op`, from a {"color": dim} object; colors must match.
std::vector<Index> color_dims(const OperadData& op, const Json& j, const std::string& where);

struct CoalgebraRef {
  OperadRef operad;
  std::shared_ptr<const StructureMaps> d;
};
CoalgebraRef load_coalgebra(const Json& payload);
/// Maps at stabilizer-module generators only; the rest follow by equivariance on load.
Json coalgebra_payload(const StructureMaps& d, const Json& operad);

struct JetRef {
  OperadRef operad;
  Jet jet;
};
JetRef load_jet(const Json& payload);
Json jet_payload(const Jet& f, const Json& operad);

struct ElementRef {
  OperadRef operad;
  RepresentedElement element;
};
ElementRef load_element(const Json& payload);
Json element_payload(const RepresentedElement& e, const Json& operad);

/// {"inputs": [colors, any order], "output": color, "basis": k}: basis vector k of P(rep;y)
/// transported to the given input order.
OpVector load_operation(const OperadData& op, const Json& j, const std::string& where);
Json operation_json(const OperadData& op, const OpVector& mu);
/// {"operation": ..., "slot": i, "args": [{"operation": ..., "coelement": j} or null at the slot]}.
Context load_context(const OperadData& op, const std::vector<Index>& c_dims, const Json& j, const std::string& where);

}  // namespace opwork::io
