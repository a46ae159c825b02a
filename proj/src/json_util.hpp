// Shared JSON rendering helpers for the document and report serializers.

#pragma once

#include "workbench/scalar.hpp"

#include <json.hpp>

#include <string>

namespace wb::detail {

// Denominator-one scalars render as JSON integers when they fit, everything
// else as the canonical "p/q" string.
nlohmann::json scalar_json(const Scalar& s);

// Two-space indent, sorted keys (nlohmann objects sort by construction),
// trailing newline. Every byte of CLI output flows through this.
std::string dump_canonical(const nlohmann::json& j);

} // namespace wb::detail
