#pragma once

// Sequence text format
// --------------------
//   q=<int>            optional header (required unless q is supplied by the caller)
//   001201122          one ring per line; digits when q <= 10
//   0,11,3             comma-separated decimal residues when q > 10
//
// Blank lines are ignored. The writer always emits the header and one ring per
// line terminated by '\n', so writer output parses back to identical rings and
// re-serializes byte for byte.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orient/ring.hpp"

namespace orient {

struct SequenceFile {
  std::uint32_t q;
  std::vector<RingSequence> rings;
};

/// Ring body only, without header or newline.
std::string format_ring(const RingSequence& s);
/// Parses a single ring body for a known q. Throws ParseError.
RingSequence parse_ring(std::string_view line, std::uint32_t q);

/// Header plus one line per ring. All rings must share q; an empty list
/// requires q explicitly.
std::string format_sequence_file(std::span<const RingSequence> rings);
std::string format_sequence_file(std::span<const RingSequence> rings, std::uint32_t q);

/// Throws ParseError on malformed input, conflicting q, or a missing q.
SequenceFile parse_sequence_file(std::string_view text, std::optional<std::uint32_t> q = {});

SequenceFile read_sequence_file(const std::filesystem::path& path,
                                std::optional<std::uint32_t> q = {});
void write_sequence_file(const std::filesystem::path& path, std::span<const RingSequence> rings);

}  // namespace orient
