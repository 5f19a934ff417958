// SPDX-License-Identifier: Apache-2.0
//
// graph6 encoding for graphs on at most 62 vertices: one byte n + 63, then the
// upper triangle read column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...)
// packed into 6-bit groups, most significant bit first, zero-padded, each
// group offset by 63.
#pragma once

#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "graphlab/errors.hpp"
#include "graphlab/graph.hpp"

namespace glab {

inline constexpr int kGraph6MaxOrder = 62;

inline std::string to_graph6(const SimpleGraph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw ValidationError("graph6: only n <= 62 is supported");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline SimpleGraph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ValidationError("graph6: empty string");
  for (char c : text) {
    if (c < 63 || c > 126) throw ValidationError("graph6: byte outside 63..126");
  }
  const int n = text[0] - 63;
  if (n > kGraph6MaxOrder) throw ValidationError("graph6: only n <= 62 is supported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes) {
    throw ValidationError("graph6: expected " + std::to_string(1 + bytes) + " bytes for n = " +
                          std::to_string(n) + ", got " + std::to_string(text.size()));
  }
  SimpleGraph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int group = text[1 + k / 6] - 63;
      if ((group >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int pad = text.back() - 63;
    if ((pad & ((1 << (6 - bits % 6)) - 1)) != 0) throw ValidationError("graph6: nonzero padding bits");
  }
  return g;
}

// One graph6 string per line; blank lines and lines starting with '#' are skipped.
inline std::vector<SimpleGraph> read_graph6_lines(std::istream& in) {
  std::vector<SimpleGraph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

inline std::vector<SimpleGraph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open graph6 file " + path);
  return read_graph6_lines(in);
}

}  // namespace glab
