#pragma once

#include <cstddef>
#include <string>

namespace avamap {

// Writes to a temporary sibling and renames into place, so readers never see
// a partially written file.
void atomic_write_bytes(const std::string& path, const void* data, std::size_t size);
void atomic_write_text(const std::string& path, const std::string& text);

std::string read_text_file(const std::string& path);

}  // namespace avamap
