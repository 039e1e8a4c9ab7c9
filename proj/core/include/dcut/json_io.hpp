#pragma once

#include <string>
#include <vector>

#include "dcut/colouring.hpp"
#include "dcut/gadgets.hpp"
#include "dcut/stats.hpp"

namespace dcut {

// JSON shapes:
//   certificate    {"d": 2, "red": [...], "blue": [...], "cut_edges": [[u,v],...]}
//   edge colouring {"0-1": "red", "1-2": "blue", ...}
//   role map       [{"vertex": 0, "role": "S", "index": [0]}, ...]
//   stats          {"branches_by_phase": {...}, "propagation_calls": n,
//                   "wall_time_ms": x}

std::string certificate_to_json(const DCutCertificate& cert);
// Throws ParseError on malformed input.
DCutCertificate certificate_from_json(const std::string& text);

std::string edge_colouring_to_json(const EdgeColouring& ec);
EdgeColouring edge_colouring_from_json(const std::string& text);

std::string role_map_to_json(const std::vector<GadgetRole>& roles);

std::string stats_to_json(const SolveStats& stats);

}  // namespace dcut
