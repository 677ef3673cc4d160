#include "selfloop/graph6.hpp"

#include <cctype>
#include <string>

namespace selfloop {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;
constexpr std::size_t kMaxSmallOrder = 62;

std::size_t payload_bytes(std::size_t n) {
  const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  return (bits + 5) / 6;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Graph decode_graph6(std::string_view text) {
  if (text.empty()) throw FormatError("graph6: empty input");
  const int head = static_cast<unsigned char>(text[0]);
  if (head == kMaxByte) throw FormatError("graph6: multi-byte header (n > 62) not supported");
  if (head < kBias || head > kMaxByte) throw FormatError("graph6: malformed header byte");
  const std::size_t n = static_cast<std::size_t>(head - kBias);

  const std::string_view body = text.substr(1);
  const std::size_t expected = payload_bytes(n);
  if (body.size() != expected) {
    throw FormatError("graph6: payload has " + std::to_string(body.size()) +
                      " bytes, expected " + std::to_string(expected) + " for n = " +
                      std::to_string(n));
  }

  Graph g(n);
  std::size_t bit = 0;
  const std::size_t total_bits = n * (n > 0 ? n - 1 : 0) / 2;
  Vertex i = 0, j = 1;
  for (char ch : body) {
    const int c = static_cast<unsigned char>(ch);
    if (c < kBias || c > kMaxByte) throw FormatError("graph6: byte out of printable range");
    const int chunk = c - kBias;
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = (chunk >> k) & 1;
      if (bit >= total_bits) {
        if (set) throw FormatError("graph6: nonzero padding bits");
        continue;
      }
      if (set) g.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxSmallOrder) {
    throw FormatError("graph6: n = " + std::to_string(n) + " exceeds single-byte header range");
  }
  std::string out;
  out.reserve(1 + payload_bytes(n));
  out.push_back(static_cast<char>(kBias + n));
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (chunk << (6 - filled))));
  return out;
}

LoopSet parse_loop_mask(std::string_view hex, std::size_t n) {
  hex = trim(hex);
  LoopSet s(n);
  for (std::size_t k = 0; k < hex.size(); ++k) {
    const int nibble = hex_value(hex[k]);
    if (nibble < 0) throw FormatError("loop mask: '" + std::string(1, hex[k]) + "' is not hex");
    for (int b = 0; b < 4; ++b) {
      if (!((nibble >> b) & 1)) continue;
      const Vertex v = 4 * k + b;
      if (v >= n) {
        throw FormatError("loop mask marks vertex " + std::to_string(v) + " but n = " +
                          std::to_string(n));
      }
      s.insert(v);
    }
  }
  return s;
}

std::string format_loop_mask(const LoopSet& s) {
  if (s.empty()) return {};
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out((s.universe() + 3) / 4, '0');
  for (Vertex v : s.members()) {
    auto& digit = out[v / 4];
    digit = kDigits[hex_value(digit) | (1 << (v % 4))];
  }
  return out;
}

Record parse_record(std::string_view line) {
  line = trim(line);
  const auto colon = line.find(':');
  Record r;
  r.graph6 = std::string(trim(line.substr(0, colon)));
  r.graph = decode_graph6(r.graph6);
  if (colon != std::string_view::npos) {
    r.loops = parse_loop_mask(line.substr(colon + 1), r.graph.order());
  }
  return r;
}

std::string format_record(const SelfLoopGraph& gs) {
  std::string out = encode_graph6(gs.base()) + " :";
  if (!gs.loops().empty()) out += " " + format_loop_mask(gs.loops());
  return out;
}

bool is_skippable_line(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

}  // namespace selfloop
