#include "orient/sequence_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "orient/errors.hpp"

namespace orient {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint32_t parse_uint(std::string_view s, std::string_view what) {
  s = trim(s);
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string format_ring(const RingSequence& s) {
  std::string out;
  const bool digits = s.q() <= 10;
  for (std::size_t i = 0; i < s.period(); ++i) {
    if (digits) {
      out.push_back(static_cast<char>('0' + s[i]));
    } else {
      if (i) out.push_back(',');
      out += std::to_string(s[i]);
    }
  }
  return out;
}

RingSequence parse_ring(std::string_view line, std::uint32_t q) {
  line = trim(line);
  if (line.empty()) throw ParseError("empty ring");
  std::vector<Symbol> symbols;
  if (line.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      symbols.push_back(parse_uint(line.substr(start, comma - start), "residue"));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    if (q > 10) {
      // a lone residue such as "11" is a valid single-symbol ring for q > 10
      symbols.push_back(parse_uint(line, "residue"));
    } else {
      for (const char c : line) {
        if (c < '0' || c > '9') throw ParseError(std::string("invalid digit '") + c + "'");
        symbols.push_back(static_cast<Symbol>(c - '0'));
      }
    }
  }
  for (const auto s : symbols) {
    if (s >= q) {
      throw ParseError("residue " + std::to_string(s) + " out of range for q=" + std::to_string(q));
    }
  }
  return RingSequence(std::move(symbols), Alphabet(q));
}

std::string format_sequence_file(std::span<const RingSequence> rings) {
  if (rings.empty()) throw std::invalid_argument("cannot infer q for an empty sequence file");
  return format_sequence_file(rings, rings.front().q());
}

std::string format_sequence_file(std::span<const RingSequence> rings, std::uint32_t q) {
  std::string out = "q=" + std::to_string(q) + "\n";
  for (const auto& r : rings) {
    if (r.q() != q) throw std::invalid_argument("mixed alphabets in one sequence file");
    out += format_ring(r);
    out.push_back('\n');
  }
  return out;
}

SequenceFile parse_sequence_file(std::string_view text, std::optional<std::uint32_t> q) {
  std::optional<std::uint32_t> header;
  std::vector<std::string_view> bodies;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const auto line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty()) continue;
    if (line.starts_with("q=")) {
      if (header || !bodies.empty()) throw ParseError("header 'q=' must appear once, first");
      header = parse_uint(line.substr(2), "alphabet size");
      continue;
    }
    bodies.push_back(line);
  }
  if (header && q && *header != *q) {
    throw ParseError("file declares q=" + std::to_string(*header) + " but q=" + std::to_string(*q) +
                     " was requested");
  }
  const auto alphabet = header ? header : q;
  if (!alphabet) throw ParseError("sequence file has no 'q=' header and no q was given");
  if (*alphabet < 2) throw ParseError("alphabet size must be at least 2");

  SequenceFile out{*alphabet, {}};
  for (const auto body : bodies) out.rings.push_back(parse_ring(body, *alphabet));
  return out;
}

SequenceFile read_sequence_file(const std::filesystem::path& path, std::optional<std::uint32_t> q) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_sequence_file(ss.str(), q);
}

void write_sequence_file(const std::filesystem::path& path, std::span<const RingSequence> rings) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_sequence_file(rings);
}

}  // namespace orient
