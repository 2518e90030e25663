#include "harmon/io.hpp"

#include <fstream>
#include <sstream>

#include "harmon/error.hpp"

namespace harmon {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + path + " for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw Error("error while reading " + path);
  }
  return std::move(buffer).str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw WriteError(path);
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) {
    throw WriteError(path);
  }
}

}  // namespace harmon
