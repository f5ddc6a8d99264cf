#pragma once

#include <string>

namespace orbitgeo {

// Full-precision decimal rendering (printf %.17g): doubles roundtrip exactly.
std::string g17(double v);

// Write text to a file, throwing std::runtime_error on failure.
void write_text_file(const std::string& path, const std::string& text);

// Read a whole file, throwing std::runtime_error on failure.
std::string read_text_file(const std::string& path);

}  // namespace orbitgeo
