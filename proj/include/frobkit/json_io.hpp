#ifndef FROBKIT_JSON_IO_HPP
#define FROBKIT_JSON_IO_HPP

#include <json.hpp>

#include "frobkit/presets.hpp"

namespace frobkit {

using json = nlohmann::ordered_json;

/// Schema violation; `path` is a JSON pointer-like location such as $.mul[3][2].
struct SchemaError : std::runtime_error {
    std::string path;
    SchemaError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), path(std::move(where)) {}
};

/// Parsed input document. The top-level algebra is B for comodule documents
/// and H for Hopf documents.
template <class S>
struct Document {
    std::string name;
    Algebra<S> algebra;
    std::optional<HopfData<S>> hopf;
    std::optional<ComoduleAlgebra<S>> comodule;
    std::optional<Vec<S>> lambda;
    std::string lambda_name;
};

FieldSpec parse_field(const json& j, const std::string& path = "$.field");
json field_json(const FieldSpec& f);

template <ExactScalar S>
json scalar_json(const S& s);

/// Accepts an integer or a string "a" / "a/b".
template <ExactScalar S>
S parse_scalar(const json& j, const FieldSpec& f, const std::string& path);

/// Reads the "field" entry of a document.
FieldSpec document_field(const json& doc);

/// Throws SchemaError for shape problems and AxiomError (wrapped with the
/// path of the structure block) for failed axioms.
template <ExactScalar S>
Document<S> parse_document(const json& doc);

/// A preset in the input schema, so it can be edited and fed back.
template <ExactScalar S>
json emit_document(const PresetObject<S>& p);

}  // namespace frobkit

#endif  // FROBKIT_JSON_IO_HPP
