#include "support/ref_graph6.hpp"

#include <stdexcept>

namespace testsupport {

namespace {

// Pulls 6-bit groups off the front of the string.
struct BitReader {
  const std::string& s;
  std::size_t pos;
  int bit = 0;  // 0..5 within the current byte

  int next() {
    if (pos >= s.size()) throw std::runtime_error("graph6: truncated bit data");
    int c = s[pos] - 63;
    if (c < 0 || c > 63) throw std::runtime_error("graph6: byte out of range");
    int b = (c >> (5 - bit)) & 1;
    if (++bit == 6) {
      bit = 0;
      ++pos;
    }
    return b;
  }
};

}  // namespace

std::pair<int, std::vector<std::pair<int, int>>> ref_decode_graph6(const std::string& raw) {
  std::string s = raw;
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
    s.pop_back();
  if (s.empty()) throw std::runtime_error("graph6: empty");

  std::size_t pos = 0;
  long long n;
  if (s[0] != '~') {
    n = s[0] - 63;
    pos = 1;
  } else if (s.size() >= 4 && s[1] != '~') {
    n = 0;
    for (int i = 1; i <= 3; ++i) n = n * 64 + (s[i] - 63);
    pos = 4;
  } else if (s.size() >= 8 && s[1] == '~') {
    n = 0;
    for (int i = 2; i <= 7; ++i) n = n * 64 + (s[i] - 63);
    pos = 8;
  } else {
    throw std::runtime_error("graph6: bad size prefix");
  }
  if (n < 0) throw std::runtime_error("graph6: negative size");
  for (std::size_t i = (s[0] == '~' ? (s.size() >= 2 && s[1] == '~' ? 8 : 4) : 1);
       i < s.size(); ++i)
    if (s[i] < 63 || s[i] > 126) throw std::runtime_error("graph6: byte out of range");

  long long bits_needed = n * (n - 1) / 2;
  long long bytes = (bits_needed + 5) / 6;
  if (static_cast<long long>(s.size()) - static_cast<long long>(pos) != bytes)
    throw std::runtime_error("graph6: wrong length");

  BitReader br{s, pos};
  std::vector<std::pair<int, int>> edges;
  for (long long j = 1; j < n; ++j)
    for (long long i = 0; i < j; ++i)
      if (br.next()) edges.emplace_back(int(i), int(j));
  return {int(n), edges};
}

std::string ref_encode_graph6(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) adj[u][v] = adj[v][u] = true;
  std::string out;
  if (n <= 62) {
    out += char(n + 63);
  } else if (n <= 258047) {
    out += '~';
    out += char((n >> 12 & 63) + 63);
    out += char((n >> 6 & 63) + 63);
    out += char((n & 63) + 63);
  } else {
    out += "~~";
    for (int sh = 30; sh >= 0; sh -= 6) out += char((n >> sh & 63) + 63);
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (adj[i][j] ? 1 : 0);
      if (++nbits == 6) {
        out += char(acc + 63);
        acc = nbits = 0;
      }
    }
  if (nbits) out += char((acc << (6 - nbits)) + 63);
  return out;
}

}  // namespace testsupport
