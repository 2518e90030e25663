#pragma once

#include <string>
#include <string_view>

namespace harmon {

// Reads a whole file as bytes. Throws Error naming the path on failure.
std::string read_file(const std::string& path);

// Writes bytes to a file, replacing any previous content. Throws WriteError
// naming the path on failure.
void write_file(const std::string& path, std::string_view content);

}  // namespace harmon
