#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "gldpc/crc32.hpp"
#include "gldpc/tanner.hpp"

namespace gldpc {
namespace {

constexpr std::string_view kMagic = "GLDPC-GRAPH v1";

[[noreturn]] void fail(const std::string& why) {
  throw std::invalid_argument("graph file: " + why);
}

// Reads one '\n'-terminated line; the newline is consumed but not returned.
std::string_view take_line(std::string_view& rest) {
  const auto nl = rest.find('\n');
  if (nl == std::string_view::npos) fail("truncated (missing newline)");
  std::string_view line = rest.substr(0, nl);
  rest.remove_prefix(nl + 1);
  return line;
}

long long parse_int(std::string_view& s, const char* what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr == s.data()) {
    fail(std::string("expected integer for ") + what);
  }
  s.remove_prefix(ptr - s.data());
  return value;
}

}  // namespace

std::string serialize_graph(const TannerGraph& graph) {
  std::string out;
  out.reserve(graph.num_sockets() * 8 + 64);
  out.append(kMagic);
  out.push_back('\n');
  out.append(std::to_string(graph.num_vars()));
  out.push_back(' ');
  out.append(std::to_string(graph.var_degree()));
  out.push_back(' ');
  out.append(std::to_string(graph.check_degree()));
  out.push_back('\n');
  const auto& perm = graph.socket_permutation();
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (s) out.push_back(' ');
    out.append(std::to_string(perm[s]));
  }
  out.push_back('\n');
  char digest[16];
  std::snprintf(digest, sizeof digest, "%08x", crc32(out));
  out.append(digest);
  out.push_back('\n');
  return out;
}

TannerGraph parse_graph(std::string_view text) {
  std::string_view rest = text;
  const std::string_view magic = take_line(rest);
  if (magic != kMagic) fail("unrecognized header");
  std::string_view dims = take_line(rest);
  std::string_view perm_line = take_line(rest);

  // The checksum covers everything up to and including the permutation
  // line's newline.
  const std::size_t covered = text.size() - rest.size();
  std::string_view crc_line = take_line(rest);
  if (crc_line.size() != 8) fail("checksum line must be 8 hex digits");
  std::uint32_t stored = 0;
  const auto [ptr, ec] = std::from_chars(
      crc_line.data(), crc_line.data() + crc_line.size(), stored, 16);
  if (ec != std::errc() || ptr != crc_line.data() + crc_line.size()) {
    fail("malformed checksum");
  }
  if (stored != crc32(text.substr(0, covered))) fail("checksum mismatch");

  const long long N = parse_int(dims, "N");
  const long long c = parse_int(dims, "c");
  const long long d = parse_int(dims, "d");
  if (N < 1 || c < 1 || d < 1) fail("dimensions must be positive");
  if ((N * c) % d != 0) fail("N*c is not divisible by d");

  const long long sockets = N * c;
  std::vector<std::uint32_t> perm;
  perm.reserve(sockets);
  std::string_view cursor = perm_line;
  for (long long s = 0; s < sockets; ++s) {
    const long long v = parse_int(cursor, "permutation entry");
    if (v < 0 || v >= sockets) fail("permutation entry out of range");
    perm.push_back(static_cast<std::uint32_t>(v));
  }
  while (!cursor.empty() && cursor.front() == ' ') cursor.remove_prefix(1);
  if (!cursor.empty()) fail("trailing data after permutation");

  return TannerGraph(N, static_cast<int>(c), static_cast<int>(d),
                     std::move(perm));
}

}  // namespace gldpc
