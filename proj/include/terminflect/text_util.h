#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace terminflect {

std::vector<std::string> split(std::string_view s, char sep);
std::vector<std::string> split_whitespace(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string_view trim(std::string_view s);

// ASCII-only lowercasing; non-ASCII bytes pass through unchanged.
std::string ascii_lower(std::string_view s);

bool ends_with(std::string_view s, std::string_view suffix);

// True iff `needle` occurs as a contiguous run of elements in `haystack`.
// An empty needle never matches.
bool contains_sequence(const std::vector<std::string>& haystack,
                       const std::vector<std::string>& needle);

// Position of the first occurrence, or npos.
std::size_t find_sequence(const std::vector<std::string>& haystack,
                          const std::vector<std::string>& needle,
                          std::size_t from = 0);

}  // namespace terminflect
