#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "gelfand/space.hpp"

namespace gelfand {

/// A space with the verdict its author expects ("expected" field:
/// "commutative" or "non-commutative").
struct SpaceDocument {
  SpaceSpec space;
  std::optional<bool> expect_commutative;
};

/// Parses a space document (format "gelfand-space", version 1; grammar in
/// docs/spec_format.md). Throws ParseError naming the line or section, and
/// the lie_core validation errors unchanged.
SpaceDocument parse_document(std::string_view text);
SpaceSpec parse_space(std::string_view text);

/// parse_document on a file's contents; unreadable files are a ParseError.
SpaceDocument load_document(const std::filesystem::path& path);

/// Explicit form of the space: every algebra by structure constants, every
/// action by matrices. parse_space(emit_space(s)) == s.
std::string emit_space(const SpaceSpec& space, std::optional<bool> expect_commutative = std::nullopt);

}  // namespace gelfand
