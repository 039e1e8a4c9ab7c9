#include "dcut/colouring.hpp"

#include <algorithm>

#include "dcut/errors.hpp"
#include "dcut/metrics.hpp"

namespace dcut {

bool PartialColouring::set(int v, Colour c) {
  if (c == Colour::None) return false;
  if (c == Colour::Red) {
    if (blue_.test(v)) return false;
    red_.set(v);
  } else {
    if (red_.test(v)) return false;
    blue_.set(v);
  }
  return true;
}

PartialColouring PartialColouring::of(int n, const std::vector<int>& red,
                                      const std::vector<int>& blue) {
  PartialColouring pc(n);
  for (int v : red) pc.red_.set(v);
  for (int v : blue) {
    if (pc.red_.test(v)) throw PreconditionError("vertex coloured twice: " + std::to_string(v));
    pc.blue_.set(v);
  }
  return pc;
}

ValidationResult validate_colouring(const Graph& g, const Bitset& red, const Bitset& blue,
                                    int d) {
  ValidationResult r;
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    bool inr = red.test(v), inb = blue.test(v);
    if (inr == inb) {
      r.ok = false;
      r.violations.push_back({Violation::NotPartition, v, 0,
                              "vertex " + std::to_string(v) +
                                  (inr ? " on both sides" : " uncoloured")});
    }
  }
  if (!red.any()) {
    r.ok = false;
    r.violations.push_back({Violation::ColourUnused, -1, 0, "red side empty"});
  }
  if (!blue.any()) {
    r.ok = false;
    r.violations.push_back({Violation::ColourUnused, -1, 0, "blue side empty"});
  }
  for (int v = 0; v < n; ++v) {
    const Bitset& opp = red.test(v) ? blue : blue.test(v) ? red : blue;
    if (!red.test(v) && !blue.test(v)) continue;
    int cnt = g.neighbours(v).intersection_count(opp);
    if (cnt > d) {
      r.ok = false;
      r.violations.push_back({Violation::OppositeExcess, v, cnt,
                              "vertex " + std::to_string(v) + " has " + std::to_string(cnt) +
                                  " opposite-coloured neighbours (d=" + std::to_string(d) +
                                  ")"});
    }
  }
  return r;
}

ValidationResult validate_colouring(const Graph& g, const PartialColouring& pc, int d) {
  return validate_colouring(g, pc.red(), pc.blue(), d);
}

DCutCertificate cut_from_colouring(const Graph& g, const Bitset& red, const Bitset& blue,
                                   int d) {
  auto val = validate_colouring(g, red, blue, d);
  if (!val.ok) {
    std::string msg = "not a red-blue d-colouring:";
    for (const auto& v : val.violations) msg += " " + v.message + ";";
    throw PreconditionError(msg);
  }
  DCutCertificate cert;
  cert.d = d;
  cert.red = red.to_vector();
  cert.blue = blue.to_vector();
  for (auto [u, v] : g.edges())
    if (red.test(u) != red.test(v)) cert.cut_edges.emplace_back(u, v);
  return cert;
}

std::pair<Bitset, Bitset> colouring_from_cut(const Graph& g, const std::vector<Edge>& cut,
                                             int d) {
  int n = g.vertex_count();
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  std::vector<Edge> norm;
  norm.reserve(cut.size());
  for (auto [u, v] : cut) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n || !g.has_edge(u, v))
      throw PreconditionError("cut contains a non-edge");
    norm.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

  std::vector<Edge> rest;
  for (auto e : g.edges())
    if (!std::binary_search(norm.begin(), norm.end(), e)) rest.push_back(e);
  Graph residue = Graph::from_edges(n, rest);
  auto comps = component_sets(residue);
  if (comps.size() != 2)
    throw PreconditionError("cut removal leaves " + std::to_string(comps.size()) +
                            " components, expected 2");
  const Bitset& red = comps[0];  // contains vertex 0 (components ordered by minimum)
  const Bitset& blue = comps[1];
  for (auto [u, v] : norm)
    if (red.test(u) == red.test(v))
      throw PreconditionError("cut contains an edge inside one side");
  // The crossing edges must be exactly the cut.
  for (auto [u, v] : g.edges())
    if (red.test(u) != red.test(v) && !std::binary_search(norm.begin(), norm.end(), Edge{u, v}))
      throw PreconditionError("crossing edge missing from the cut");
  auto val = validate_colouring(g, red, blue, d);
  if (!val.ok) throw PreconditionError("cut violates the per-vertex bound: " +
                                       val.violations.front().message);
  return {red, blue};
}

ValidationResult validate_edge_colouring(const Graph& g, const EdgeColouring& ec, int d) {
  ValidationResult r;
  auto es = g.edges();
  int nred = 0, nblue = 0;
  for (std::size_t i = 0; i < es.size(); ++i) {
    auto it = ec.find(es[i]);
    if (it == ec.end() || it->second == Colour::None) {
      r.ok = false;
      r.violations.push_back({Violation::NotPartition, int(i), 0,
                              "edge " + std::to_string(es[i].first) + "-" +
                                  std::to_string(es[i].second) + " uncoloured"});
    } else {
      (it->second == Colour::Red ? nred : nblue)++;
    }
  }
  for (const auto& [e, c] : ec)
    if (!g.has_edge(e.first, e.second)) {
      r.ok = false;
      r.violations.push_back({Violation::NotPartition, -1, 0,
                              "coloured non-edge " + std::to_string(e.first) + "-" +
                                  std::to_string(e.second)});
    }
  if (nred == 0) {
    r.ok = false;
    r.violations.push_back({Violation::ColourUnused, -1, 0, "no red edge"});
  }
  if (nblue == 0) {
    r.ok = false;
    r.violations.push_back({Violation::ColourUnused, -1, 0, "no blue edge"});
  }
  if (!r.ok) return r;

  for (std::size_t i = 0; i < es.size(); ++i) {
    Colour c = ec.at(es[i]);
    int opp = 0;
    for (std::size_t j = 0; j < es.size(); ++j) {
      if (i == j) continue;
      auto [a, b] = es[i];
      auto [x, y] = es[j];
      bool adjacent = a == x || a == y || b == x || b == y;
      if (adjacent && ec.at(es[j]) == opposite(c)) ++opp;
    }
    if (opp > d) {
      r.ok = false;
      r.violations.push_back({Violation::OppositeExcess, int(i), opp,
                              "edge " + std::to_string(es[i].first) + "-" +
                                  std::to_string(es[i].second) + " touches " +
                                  std::to_string(opp) + " opposite-coloured edges"});
    }
  }
  return r;
}

}  // namespace dcut
