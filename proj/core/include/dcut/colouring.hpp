#pragma once

#include <map>
#include <string>
#include <vector>

#include "dcut/graph.hpp"

namespace dcut {

enum class Colour : unsigned char { None, Red, Blue };

inline Colour opposite(Colour c) {
  return c == Colour::Red ? Colour::Blue : c == Colour::Blue ? Colour::Red : Colour::None;
}

// Partial red/blue assignment over a fixed vertex universe.
class PartialColouring {
public:
  PartialColouring() = default;
  explicit PartialColouring(int n) : red_(n), blue_(n) {}

  int universe_size() const { return red_.universe_size(); }

  Colour at(int v) const {
    if (red_.test(v)) return Colour::Red;
    if (blue_.test(v)) return Colour::Blue;
    return Colour::None;
  }
  bool coloured(int v) const { return red_.test(v) || blue_.test(v); }

  // Assign; returns false if v already has the other colour (no overwrite).
  bool set(int v, Colour c);

  const Bitset& red() const { return red_; }
  const Bitset& blue() const { return blue_; }
  const Bitset& side(Colour c) const { return c == Colour::Red ? red_ : blue_; }
  Bitset uncoloured() const { return (red_ | blue_).complement(); }
  int coloured_count() const { return red_.count() + blue_.count(); }

  bool operator==(const PartialColouring& o) const {
    return red_ == o.red_ && blue_ == o.blue_;
  }

  static PartialColouring of(int n, const std::vector<int>& red,
                             const std::vector<int>& blue);

private:
  Bitset red_, blue_;
};

// A d-cut presented as its red/blue sides plus the crossing edges.
struct DCutCertificate {
  int d = 0;
  std::vector<int> red, blue;       // ascending
  std::vector<Edge> cut_edges;      // lexicographic, u < v
};

struct Violation {
  enum Kind {
    NotPartition,    // vertex missing or doubly assigned
    OppositeExcess,  // vertex has more than d opposite-coloured neighbours
    ColourUnused,    // one side is empty
  };
  Kind kind;
  int vertex = -1;  // offending vertex where applicable
  int count = 0;    // opposite-neighbour count for OppositeExcess
  std::string message;
};

struct ValidationResult {
  bool ok = true;
  std::vector<Violation> violations;
};

// Full red-blue d-colouring check: partition, per-vertex opposite bound,
// both colours used.
ValidationResult validate_colouring(const Graph& g, const Bitset& red, const Bitset& blue,
                                    int d);
ValidationResult validate_colouring(const Graph& g, const PartialColouring& pc, int d);

// Build a certificate from a valid colouring (throws PreconditionError when
// the colouring fails validation).
DCutCertificate cut_from_colouring(const Graph& g, const Bitset& red, const Bitset& blue,
                                   int d);

// Inverse: from a cut (edge set) back to the two sides. Requires that g is
// connected, removing `cut` leaves exactly two components, `cut` is exactly
// the set of edges between them, and the per-vertex bound holds. The side
// containing vertex 0 is returned as red.
std::pair<Bitset, Bitset> colouring_from_cut(const Graph& g, const std::vector<Edge>& cut,
                                             int d);

// Total red/blue assignment on the edges of a graph, keyed by canonical edge.
using EdgeColouring = std::map<Edge, Colour>;

// d-cut conditions on the edge version: every edge coloured, at most d
// opposite-coloured edges share an endpoint with any edge, both colours used.
ValidationResult validate_edge_colouring(const Graph& g, const EdgeColouring& ec, int d);

}  // namespace dcut
