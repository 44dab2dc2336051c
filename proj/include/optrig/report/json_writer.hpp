#pragma once

#include <string>

#include <json.hpp>

namespace optrig::report {

/// Doubles rendered with up to 17 significant digits ("%.17g"): enough to
/// round-trip any finite double exactly, with a fixed, locale-independent
/// spelling.
std::string format_double(double v);

/// Deterministic serializer for ordered JSON documents: same document, same
/// bytes. Differs from the stock dump() only in float handling, which goes
/// through format_double.
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

}  // namespace optrig::report
