#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or input error, 3 resource limit.

#include <iosfwd>
#include <string>
#include <vector>

namespace glw::cli {

enum ExitCode : int { Success = 0, VerificationFailure = 1, UsageError = 2, ResourceLimit = 3 };

/// Environment variable naming a directory that holds the default cache file.
inline constexpr const char* cache_dir_env = "GLW_CACHE_DIR";
inline constexpr const char* cache_file_name = "wgl-cache.jsonl";

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace glw::cli
