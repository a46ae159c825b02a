// Maps document kinds onto the module checkers and constructions, and renders
// deterministic reports. Checks run sequentially in the fixed registry order;
// reports are assembled single-threaded, so identical inputs produce
// byte-identical output.

#pragma once

#include "workbench/documents.hpp"

#include <string>
#include <vector>

namespace wb {

// One executed (or skipped) check. A check whose verdict is negative, or
// whose gate refuses the input, reports status "fail" with the witnesses.
struct CheckRun {
    std::string id;
    std::string status; // "ok" | "fail" | "skipped"
    CheckReport report; // default-empty when skipped
};

// Reference to a construction output, embedded in reports.
struct ConstructionRef {
    std::string id;
    std::string name;
    std::string kind;
    int dim = 0;
    std::string file; // where the document was written; empty when not persisted
};

struct DocumentReport {
    std::string target;
    std::vector<CheckRun> checks;
    std::vector<ConstructionRef> constructions;
    std::vector<std::string> notes;
};

// Registry order; this is also the order checks execute and report in.
std::vector<std::string> all_check_ids();
std::vector<std::string> construction_ids();

// Check ids whose kind and flavor both match the document.
std::vector<std::string> applicable_check_ids(const WorkbenchDocument& doc);

// Runs the requested checks (all applicable ones when ids is empty) in
// registry order, deduplicated. Throws DocumentError for an unknown id or one
// whose kind can never host it; a kind-compatible id whose flavor does not
// match the document is reported as "skipped".
std::vector<CheckRun> run_checks(const WorkbenchDocument& doc, const std::vector<std::string>& ids,
                                 const CheckOptions& opt = {});

struct ConstructionResult {
    WorkbenchDocument output;
    std::vector<CheckRun> post;      // construction-specific post-verification
    std::vector<std::string> notes;  // convention notes riding along the report
};

// Throws DocumentError on an unknown id, wrong arity, or carrier mismatch;
// CheckFailure when a gated construction refuses (the report rides along).
ConstructionResult run_construction(const std::string& id,
                                    const std::vector<WorkbenchDocument>& inputs,
                                    const CheckOptions& opt = {});

// Canonical JSON (sorted keys, 1-based witness indices, trailing newline) and
// a line-oriented text form of the same data.
std::string render_report_json(const DocumentReport& report);
std::string render_report_text(const DocumentReport& report);

// Inverse of render_report_json, for re-rendering stored reports.
DocumentReport parse_report_text(const std::string& text);

} // namespace wb
