// Execution of parsed jobs and rendering of their results.
#pragma once

#include <string>

#include "json_io.hpp"

namespace cusp_atlas::io {

struct RunResult {
    json output;
    // 0 on success; 4 when a computed self-consistency check failed.
    int status = 0;
};

// bound caps every exhaustive enumeration.
RunResult run(const JobSpec& job, int bound);

// "key.sub: value" lines in key order; scalar arrays stay on one line.
std::string render_text(const json& output);

// Name of the p-adic group whose dual is `dual` (display only).
std::string p_adic_group_name(const GroupKind& dual);

}  // namespace cusp_atlas::io
