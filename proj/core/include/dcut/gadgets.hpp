#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcut/cnf.hpp"
#include "dcut/colouring.hpp"
#include "dcut/graph.hpp"

namespace dcut {

enum class GadgetFlavour { LineGadget, ThreeP2Gadget };

// Role of one gadget vertex for the JSON role map, e.g. {"Vx", {2, 0}} =
// first vertex of the variable clique of x_3. Padding vertices carry "aux"
// with the host clique coded in index[0]: 0 = S, 1 = Sbar, 2 = Vx (index[1]
// = variable), 3 = Vxbar.
struct GadgetRole {
  std::string role;
  std::vector<int> index;
};

// Output of the line-graph reduction (d >= 3, all-positive NAE input).
// `pre_graph` is the constructed graph G; `graph` is L(G), the instance the
// d-cut question is about. Clique lists include occurrence and padding
// vertices.
struct LineGadget {
  Graph pre_graph;
  Graph graph;
  std::vector<Edge> line_edges;        // line-graph vertex -> edge of G
  std::vector<GadgetRole> roles;       // per vertex of pre_graph
  std::vector<GadgetRole> line_roles;  // per vertex of graph: {"edge", {u,v}}
  int d = 3;
  std::vector<int> clique_s, clique_sbar;
  std::vector<std::vector<int>> clique_vx, clique_vxbar;  // by variable
  std::vector<int> connector;      // v_x by variable
  std::vector<int> clause_vertex;  // v_c by clause
};

LineGadget build_line_gadget(const CnfInstance& inst, int d);

// Line-graph vertices whose underlying edge has both ends in `members`
// (i.e. the edges inside one named clique of G).
std::vector<int> line_vertices_within(const LineGadget& gad,
                                      const std::vector<int>& members);

// Red-blue edge d-colouring of the pre-line graph built from a satisfying
// not-all-equal assignment: S red, Sbar blue, V_x/V_xbar by truth value,
// every connector and clause edge takes its clique end's colour. Validated
// on G and, lifted through the line-edge map, on L(G) before returning.
EdgeColouring witness_edge_colouring(const CnfInstance& inst,
                                     const Assignment& a, int d);

// Vertex colouring of L(G) induced by an edge colouring of G.
PartialColouring lift_to_line(const EdgeColouring& ec,
                              const std::vector<Edge>& line_edges);

// Output of the 3P2-free reduction (d >= 2, split pos/neg input). K holds
// the positive clause vertices, the L_h sets (d >= 4) and the apex C; K'
// mirrors it for the negative side.
struct ThreeP2Gadget {
  Graph graph;
  std::vector<GadgetRole> roles;
  int d = 2;
  std::vector<int> clique_k, clique_kp;
  std::vector<int> independent;  // x_h by variable
  int apex_c = -1, apex_d = -1;
  std::vector<std::vector<int>> lh, lph;  // L_h / L'_h by variable
};

// Certified on every build: connected, 3P2-free, radius exactly 2, diameter
// exactly 3. A valid instance can still fail the diameter check when every
// pair of variables shares a clause; that raises CertificationError too.
ThreeP2Gadget build_3p2_gadget(const CnfInstance& inst, int d);

// Red/blue vertex sets on the gadget from a satisfying assignment (K and the
// true variables red, K' and the false variables blue); validated.
std::pair<std::vector<int>, std::vector<int>> witness_colouring_3p2(
    const CnfInstance& inst, const Assignment& a, int d);

enum class DcutDecision { Yes, No, TimedOut, Skipped };

std::string to_string(DcutDecision d);

// One instance's worth of evidence for the reduction equivalence.
struct AgreementReport {
  GadgetFlavour flavour = GadgetFlavour::ThreeP2Gadget;
  int d = 2;
  bool sat = false;
  DcutDecision dcut = DcutDecision::Skipped;
  std::optional<bool> agree;                // set only when dcut is exact
  std::optional<bool> forward_witness_ok;   // set when sat
  std::optional<bool> backward_witness_ok;  // set when dcut == Yes
  std::string notes;
};

// Runs the SAT oracle on the instance and the d-cut oracle on the gadget and
// cross-checks witnesses in both directions. For the line gadget the d-cut
// side runs under `time_budget_ms` (default 60s) and a timeout is a recorded
// outcome, not an error.
AgreementReport verify_reduction(const CnfInstance& inst, int d,
                                 GadgetFlavour flavour,
                                 std::optional<int> time_budget_ms = std::nullopt);

}  // namespace dcut
