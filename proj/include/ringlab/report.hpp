#pragma once

/**
 * @file report.hpp
 * @brief Deterministic JSON reports for the CLI subcommands.
 *
 * Every report carries "schema":"1". Key order is fixed by construction and
 * rendering is byte-deterministic for fixed inputs.
 */

#include <json.hpp>

#include "ringlab/decompose.hpp"
#include "ringlab/properties.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

using Json = nlohmann::ordered_json;

Json classify_report(const Ring& ring, std::optional<u32> element);
Json check_report(const Ring& ring, RingProperty property, bool want_witnesses);
Json decompose_report(const Ring& ring, u32 element, DecompKind kind, Scope scope);
Json verify_report(const std::vector<RingPtr>& corpus);
Json atlas_report(u64 lo, u64 hi, std::size_t cap);

Json decomposition_json(const Ring& ring, const Decomposition& d);

/// Canonical byte rendering (2-space indent, trailing newline).
std::string render_report(const Json& report);

}  // namespace ringlab
