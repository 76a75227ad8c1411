#ifndef IMULT_REPORT_HPP
#define IMULT_REPORT_HPP

#include <string>

#include <json.hpp>

#include "imult/blowup.hpp"

namespace imult {

/// "3" or "infinity".
std::string render_value(const IMValue& v);

/// Human-readable configuration tree, one depth-indented line per node:
/// chart, root coordinate (or its minimal polynomial with the conjugate
/// count), the local m_f*m_g, and the subtree subtotal.
std::string render_trace(const IMReport& report);

/// {"value": int | "infinity", "tree": ..., "stats": {...}}
nlohmann::json report_to_json(const IMReport& report);

}  // namespace imult

#endif
