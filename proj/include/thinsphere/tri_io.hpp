#pragma once

// The `.tri` face-list format: one face per line as three nonnegative
// integers; `#` comments and blank lines are ignored.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "thinsphere/complex.hpp"

namespace thinsphere {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Throws ParseError for malformed lines, repeated vertices or duplicate faces.
Triangulation parse_triangulation(std::string_view text);

/// Faces in stored order, one per line, so that parsing the result
/// reproduces the same vertex and face ids.
std::string serialize_triangulation(const Triangulation& t);

/// Throws std::runtime_error when the file cannot be read.
Triangulation read_tri_file(const std::filesystem::path& path);
void write_tri_file(const std::filesystem::path& path, const Triangulation& t);

}  // namespace thinsphere
