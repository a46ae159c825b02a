// JSON document model for the command-line surface. A document wraps one
// structure-constant object (algebra, bimodule, matched pair, bialgebra data,
// form, or operator) together with optional metadata. Parsing is strict:
// unknown fields are rejected, every scalar must be an exact rational, and
// every declared dimension must be consistent and within the configured cap.

#pragma once

#include "workbench/bihom.hpp"
#include "workbench/dendriform.hpp"
#include "workbench/frobenius.hpp"
#include "workbench/hom.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace wb {

// `op` serializes as "operator" (the bare name is a C++ keyword).
enum class DocKind {
    hom_algebra,
    bihom_algebra,
    hom_dendriform,
    bihom_dendriform,
    bimodule,
    matched_pair,
    bialgebra_data,
    form,
    op,
};

const char* kind_name(DocKind k);
std::optional<DocKind> kind_from_name(const std::string& name);

// BiHom analogue of HomBilinearForm; the module-side check takes the pieces
// separately, so the pairing only exists at the document level.
struct BiHomForm {
    BiHomAlgebra algebra;
    Mat gram;
};

// Dendriform bialgebra data: a splitting plus one coproduct per piece.
struct DendriformBialgebraData {
    HomDendriform dendriform;
    CoprodTensor coprod_succ;
    CoprodTensor coprod_prec;
};

// A linear map with an optional carrier. Rota-Baxter checks need an algebra
// carrier, O-operator checks a bimodule carrier (T maps the module into the
// algebra, so the matrix is dim(A) x dim(V)); a bare map serves as twisting
// data for constructions such as the Yau twist.
struct OperatorData {
    Mat map;
    std::optional<std::variant<HomAlgebra, BiHomAlgebra>> algebra;
    std::optional<std::variant<HomBimodule, BiHomBimodule>> bimodule;
};

using DocPayload = std::variant<HomAlgebra, BiHomAlgebra, HomDendriform, BiHomDendriform,
                                HomBimodule, BiHomBimodule, HomDendriformBimodule,
                                BiHomDendriformBimodule, HomMatchedPair, BiHomMatchedPair,
                                HomDendriformMatchedPair, BiHomDendriformMatchedPair,
                                HomBialgebraData, BiHomBialgebraData, DendriformBialgebraData,
                                HomBilinearForm, BiHomForm, OperatorData>;

struct WorkbenchDocument {
    DocKind kind = DocKind::hom_algebra;
    std::string name;
    std::string description;
    DocPayload payload;
};

// Parse or validation failure, carrying the JSON field path of the offending
// value ("$.algebra.mult[2]" and similar; "$" for document-level problems).
class DocumentError : public std::runtime_error {
public:
    DocumentError(std::string path, const std::string& message)
        : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

// Dimension cap applied to every declared dimension while parsing. Reads
// WORKBENCH_MAX_DIM from the environment; defaults to 16.
int max_document_dim();

WorkbenchDocument parse_document_text(const std::string& text);
WorkbenchDocument parse_document_file(const std::string& path);

// Canonical form: sorted object keys, two-space indent, sparse tensor entries
// sorted by index with zeros dropped, 1-based indices, denominator-one scalars
// rendered as integers. parse(serialize(doc)) reproduces the document.
std::string serialize_document(const WorkbenchDocument& doc);

// Primary dimension of the payload (algebra dimension; the module dimension
// is excluded for bimodules, and operators report their carrier or map rows).
int document_dim(const WorkbenchDocument& doc);

} // namespace wb
