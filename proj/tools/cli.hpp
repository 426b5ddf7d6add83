#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zetaforge::cli {

enum class Format { text, tsv, json };

/// Right-padded text table, tab-separated rows, or left to the caller.
std::string render_table(const std::vector<std::vector<std::string>>& rows, Format fmt);

/// Runs the command line; returns the process exit code
/// (0 pass, 1 identity failure, 2 usage or domain error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetaforge::cli
