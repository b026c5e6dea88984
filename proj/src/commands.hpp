/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include "json_io.hpp"

namespace tropext {

/// Runs one request of the batch interface. The response always carries "command" and
/// "ok"; failed checks set "ok" to false, library errors propagate as exceptions.
json_io::json run_command(const json_io::json& request);

/// {"error": {"kind", "message", "position"?}} for an exception escaping run_command.
json_io::json error_object(const std::exception& e);

/// Schema version stamped on every response.
inline constexpr const char* kSchemaVersion = "1";

}  // namespace tropext
