#include "dcut/gadgets.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "dcut/errors.hpp"
#include "dcut/line_graph.hpp"
#include "dcut/metrics.hpp"
#include "dcut/oracle.hpp"
#include "dcut/patterns.hpp"

namespace dcut {

namespace {

Edge mk(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

void require_valid(const CnfInstance& inst, CnfFlavour want,
                   const std::string& who) {
  if (inst.flavour != want)
    throw PreconditionError(who + ": instance has the wrong flavour");
  CnfValidation v = validate_instance(inst);
  if (!v.ok) {
    std::string msg = who + ": invalid instance:";
    for (const std::string& s : v.violations) msg += "\n  - " + s;
    throw PreconditionError(msg);
  }
}

void clique_edges(const std::vector<int>& members, std::vector<Edge>& out) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      out.push_back(mk(members[i], members[j]));
}

}  // namespace

LineGadget build_line_gadget(const CnfInstance& inst, int d) {
  require_valid(inst, CnfFlavour::NaeAllPositive, "build_line_gadget");
  if (d < 3)
    throw PreconditionError("build_line_gadget: requires d >= 3, got d = " +
                            std::to_string(d));

  const int n = inst.n_vars;
  const int m = static_cast<int>(inst.clauses.size());
  const int slots = d - 2;  // clause slots per side
  const int pad_to = 2 * d + 2;

  std::vector<std::vector<int>> occ(n);  // clauses containing each variable
  for (int c = 0; c < m; ++c)
    for (int x : inst.clauses[c].vars) occ[x].push_back(c);

  const int base_s = n + m * slots;
  const int size_s = std::max(base_s, pad_to);

  LineGadget gad;
  gad.d = d;
  gad.clique_vx.resize(n);
  gad.clique_vxbar.resize(n);

  // Vertex layout: S block, Sbar block, then V_x / V_xbar blocks per
  // variable (base vertices, occurrence vertices, padding), then the v_x
  // connectors, then the v_c clause vertices.
  int next = 0;
  auto block = [&](int size) {
    std::vector<int> ids(size);
    for (int k = 0; k < size; ++k) ids[k] = next++;
    return ids;
  };

  gad.clique_s = block(size_s);
  gad.clique_sbar = block(size_s);
  for (int x = 0; x < n; ++x) {
    const int base_vx = (d - 1) + static_cast<int>(occ[x].size());
    gad.clique_vx[x] = block(std::max(base_vx, pad_to));
    gad.clique_vxbar[x] = block(pad_to);  // d-1 < 2d+2 always
  }
  gad.connector = block(n);
  gad.clause_vertex = block(m);
  const int total = next;

  gad.roles.resize(total);
  for (int k = 0; k < size_s; ++k) {
    gad.roles[gad.clique_s[k]] =
        k < base_s ? GadgetRole{"S", {k}} : GadgetRole{"aux", {0, k}};
    gad.roles[gad.clique_sbar[k]] =
        k < base_s ? GadgetRole{"Sbar", {k}} : GadgetRole{"aux", {1, k}};
  }
  for (int x = 0; x < n; ++x) {
    const int base_vx = (d - 1) + static_cast<int>(occ[x].size());
    for (std::size_t k = 0; k < gad.clique_vx[x].size(); ++k)
      gad.roles[gad.clique_vx[x][k]] =
          static_cast<int>(k) < base_vx
              ? GadgetRole{"Vx", {x, static_cast<int>(k)}}
              : GadgetRole{"aux", {2, x, static_cast<int>(k)}};
    for (std::size_t k = 0; k < gad.clique_vxbar[x].size(); ++k)
      gad.roles[gad.clique_vxbar[x][k]] =
          static_cast<int>(k) < d - 1
              ? GadgetRole{"Vxbar", {x, static_cast<int>(k)}}
              : GadgetRole{"aux", {3, x, static_cast<int>(k)}};
    gad.roles[gad.connector[x]] = GadgetRole{"vx", {x}};
  }
  for (int c = 0; c < m; ++c)
    gad.roles[gad.clause_vertex[c]] = GadgetRole{"vc", {c}};

  std::vector<Edge> edges;
  clique_edges(gad.clique_s, edges);
  clique_edges(gad.clique_sbar, edges);
  for (int x = 0; x < n; ++x) {
    clique_edges(gad.clique_vx[x], edges);
    clique_edges(gad.clique_vxbar[x], edges);
  }
  // v_x: one edge into each of S and Sbar (the variable slots) and the d-1
  // base vertices of V_x and V_xbar; degree 2d in total.
  for (int x = 0; x < n; ++x) {
    const int vx = gad.connector[x];
    edges.push_back(mk(vx, gad.clique_s[x]));
    edges.push_back(mk(vx, gad.clique_sbar[x]));
    for (int k = 0; k < d - 1; ++k) {
      edges.push_back(mk(vx, gad.clique_vx[x][k]));
      edges.push_back(mk(vx, gad.clique_vxbar[x][k]));
    }
  }
  // v_c: its d-2 clause slots on both sides plus one occurrence vertex in
  // V_x per member variable; degree 2(d-2)+3.
  for (int c = 0; c < m; ++c) {
    const int vc = gad.clause_vertex[c];
    for (int i = 0; i < slots; ++i) {
      edges.push_back(mk(vc, gad.clique_s[n + c * slots + i]));
      edges.push_back(mk(vc, gad.clique_sbar[n + c * slots + i]));
    }
    for (int x : inst.clauses[c].vars) {
      const int rank = static_cast<int>(
          std::find(occ[x].begin(), occ[x].end(), c) - occ[x].begin());
      edges.push_back(mk(vc, gad.clique_vx[x][(d - 1) + rank]));
    }
  }

  gad.pre_graph = Graph::from_edges(total, edges);

  LineGraphResult lg = line_graph(gad.pre_graph);
  gad.graph = std::move(lg.graph);
  gad.line_edges = std::move(lg.edges);
  gad.line_roles.resize(gad.line_edges.size());
  for (std::size_t i = 0; i < gad.line_edges.size(); ++i)
    gad.line_roles[i] =
        GadgetRole{"edge", {gad.line_edges[i].first, gad.line_edges[i].second}};
  return gad;
}

std::vector<int> line_vertices_within(const LineGadget& gad,
                                      const std::vector<int>& members) {
  Bitset set = Bitset::of(gad.pre_graph.vertex_count(), members);
  std::vector<int> out;
  for (std::size_t i = 0; i < gad.line_edges.size(); ++i)
    if (set.test(gad.line_edges[i].first) && set.test(gad.line_edges[i].second))
      out.push_back(static_cast<int>(i));
  return out;
}

PartialColouring lift_to_line(const EdgeColouring& ec,
                              const std::vector<Edge>& line_edges) {
  PartialColouring pc(static_cast<int>(line_edges.size()));
  for (std::size_t i = 0; i < line_edges.size(); ++i) {
    auto it = ec.find(line_edges[i]);
    if (it != ec.end() && it->second != Colour::None)
      pc.set(static_cast<int>(i), it->second);
  }
  return pc;
}

EdgeColouring witness_edge_colouring(const CnfInstance& inst,
                                     const Assignment& a, int d) {
  LineGadget gad = build_line_gadget(inst, d);
  if (!satisfies(inst, a))
    throw PreconditionError(
        "witness_edge_colouring: the assignment is not a satisfying "
        "not-all-equal assignment");

  const int n = inst.n_vars;
  const int total = gad.pre_graph.vertex_count();
  // clique id per vertex: 0 = S, 1 = Sbar, 2+2x = V_x, 3+2x = V_xbar
  std::vector<int> clique_of(total, -1);
  std::vector<Colour> clique_colour(2 + 2 * n);
  auto mark = [&](const std::vector<int>& members, int id, Colour col) {
    for (int v : members) clique_of[v] = id;
    clique_colour[id] = col;
  };
  mark(gad.clique_s, 0, Colour::Red);
  mark(gad.clique_sbar, 1, Colour::Blue);
  for (int x = 0; x < n; ++x) {
    mark(gad.clique_vx[x], 2 + 2 * x, a[x] ? Colour::Red : Colour::Blue);
    mark(gad.clique_vxbar[x], 3 + 2 * x, a[x] ? Colour::Blue : Colour::Red);
  }

  EdgeColouring ec;
  for (const Edge& e : gad.pre_graph.edges()) {
    const int cu = clique_of[e.first], cv = clique_of[e.second];
    if (cu >= 0 && cv >= 0 && cu != cv)
      throw StructuralError(
          "witness_edge_colouring: edge between two distinct named cliques");
    if (cu < 0 && cv < 0)
      throw StructuralError(
          "witness_edge_colouring: edge with no clique endpoint");
    ec[e] = clique_colour[cu >= 0 ? cu : cv];
  }

  ValidationResult ong = validate_edge_colouring(gad.pre_graph, ec, d);
  if (!ong.ok) {
    std::string msg = "witness_edge_colouring: constructed edge colouring "
                      "fails validation:";
    for (const auto& viol : ong.violations) msg += "\n  - " + viol.message;
    throw StructuralError(msg);
  }
  ValidationResult onl = validate_colouring(
      gad.graph, lift_to_line(ec, gad.line_edges), d);
  if (!onl.ok)
    throw StructuralError(
        "witness_edge_colouring: line-graph image fails validation");
  return ec;
}

ThreeP2Gadget build_3p2_gadget(const CnfInstance& inst, int d) {
  require_valid(inst, CnfFlavour::SplitPosNeg, "build_3p2_gadget");
  if (d < 2)
    throw PreconditionError("build_3p2_gadget: requires d >= 2, got d = " +
                            std::to_string(d));

  const int n = inst.n_vars;
  std::vector<int> pos_clauses, neg_clauses;  // indices into inst.clauses
  for (std::size_t c = 0; c < inst.clauses.size(); ++c)
    (inst.clauses[c].positive ? pos_clauses : neg_clauses)
        .push_back(static_cast<int>(c));
  const int p = static_cast<int>(pos_clauses.size());
  const int q = static_cast<int>(neg_clauses.size());
  const int ell = std::max(0, d - 3);  // |L_h| = |L'_h|

  // Layout: C_1..C_p, C, D_1..D_q, D, x_1..x_n, then the L and L' blocks.
  ThreeP2Gadget gad;
  gad.d = d;
  const int id_c = p;
  const int id_d = p + q + 1;
  const int base_i = p + q + 2;
  const int base_l = base_i + n;
  const int base_lp = base_l + n * ell;
  const int total = base_lp + n * ell;
  gad.apex_c = id_c;
  gad.apex_d = id_d;
  gad.lh.resize(n);
  gad.lph.resize(n);
  gad.roles.resize(total);

  for (int i = 0; i < p; ++i) {
    gad.clique_k.push_back(i);
    gad.roles[i] = GadgetRole{"K", {i}};
  }
  for (int j = 0; j < q; ++j) {
    gad.clique_kp.push_back(p + 1 + j);
    gad.roles[p + 1 + j] = GadgetRole{"K'", {j}};
  }
  for (int h = 0; h < n; ++h) {
    gad.independent.push_back(base_i + h);
    gad.roles[base_i + h] = GadgetRole{"I", {h}};
    for (int k = 0; k < ell; ++k) {
      gad.lh[h].push_back(base_l + h * ell + k);
      gad.lph[h].push_back(base_lp + h * ell + k);
      gad.roles[base_l + h * ell + k] = GadgetRole{"L", {h, k}};
      gad.roles[base_lp + h * ell + k] = GadgetRole{"L'", {h, k}};
    }
    gad.clique_k.insert(gad.clique_k.end(), gad.lh[h].begin(), gad.lh[h].end());
    gad.clique_kp.insert(gad.clique_kp.end(), gad.lph[h].begin(),
                         gad.lph[h].end());
  }
  gad.clique_k.push_back(id_c);
  gad.clique_kp.push_back(id_d);
  gad.roles[id_c] = GadgetRole{"C", {}};
  gad.roles[id_d] = GadgetRole{"D", {}};

  std::vector<Edge> edges;
  clique_edges(gad.clique_k, edges);
  clique_edges(gad.clique_kp, edges);
  edges.push_back(mk(id_c, id_d));
  for (int i = 0; i < p; ++i)
    for (int x : inst.clauses[pos_clauses[i]].vars)
      edges.push_back(mk(i, base_i + x));
  for (int j = 0; j < q; ++j)
    for (int x : inst.clauses[neg_clauses[j]].vars)
      edges.push_back(mk(p + 1 + j, base_i + x));
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < ell; ++k) {
      edges.push_back(mk(base_i + h, gad.lh[h][k]));
      edges.push_back(mk(base_i + h, gad.lph[h][k]));
    }
  // Cross edges (d >= 3): the circulant i -> i..i+d-3 (mod s) between
  // K\{C} and K'\{D}, listed clause vertices first; (d-2)-regular each way.
  if (d >= 3) {
    std::vector<int> cross_k(gad.clique_k.begin(), gad.clique_k.end() - 1);
    std::vector<int> cross_kp(gad.clique_kp.begin(), gad.clique_kp.end() - 1);
    const int s = static_cast<int>(cross_k.size());
    assert(static_cast<int>(cross_kp.size()) == s && s >= d - 2);
    for (int i = 0; i < s; ++i)
      for (int t = 0; t <= d - 3; ++t)
        edges.push_back(mk(cross_k[i], cross_kp[(i + t) % s]));
  }

  gad.graph = Graph::from_edges(total, edges);

  std::vector<std::string> failures;
  if (!is_connected(gad.graph)) failures.push_back("graph is not connected");
  if (!is_free(gad.graph, PatternId::ThreeP2))
    failures.push_back("graph contains an induced 3P2");
  const int r = radius(gad.graph);
  if (r != 2) failures.push_back("radius is " + std::to_string(r) + ", expected 2");
  const int diam = diameter(gad.graph);
  if (diam != 3)
    failures.push_back("diameter is " + std::to_string(diam) + ", expected 3");
  if (!failures.empty()) {
    std::string msg = "build_3p2_gadget: certification failed:";
    for (const std::string& s : failures) msg += "\n  - " + s;
    throw CertificationError(msg);
  }
  return gad;
}

std::pair<std::vector<int>, std::vector<int>> witness_colouring_3p2(
    const CnfInstance& inst, const Assignment& a, int d) {
  ThreeP2Gadget gad = build_3p2_gadget(inst, d);
  if (!satisfies(inst, a))
    throw PreconditionError(
        "witness_colouring_3p2: the assignment does not satisfy the instance");

  std::vector<int> red = gad.clique_k, blue = gad.clique_kp;
  for (int h = 0; h < inst.n_vars; ++h)
    (a[h] ? red : blue).push_back(gad.independent[h]);
  std::sort(red.begin(), red.end());
  std::sort(blue.begin(), blue.end());

  const int total = gad.graph.vertex_count();
  ValidationResult vr = validate_colouring(
      gad.graph, Bitset::of(total, red), Bitset::of(total, blue), d);
  if (!vr.ok) {
    std::string msg = "witness_colouring_3p2: constructed colouring fails "
                      "validation:";
    for (const auto& viol : vr.violations) msg += "\n  - " + viol.message;
    throw StructuralError(msg);
  }
  return {red, blue};
}

std::string to_string(DcutDecision d) {
  switch (d) {
    case DcutDecision::Yes: return "yes";
    case DcutDecision::No: return "no";
    case DcutDecision::TimedOut: return "timed-out";
    case DcutDecision::Skipped: return "skipped";
  }
  return "?";
}

namespace {

// Uniform colour of `members` under the certificate, or None when mixed or
// uncoloured.
Colour set_colour(const std::vector<int>& members, const Bitset& red,
                  const Bitset& blue) {
  Colour col = Colour::None;
  for (int v : members) {
    Colour c = red.test(v) ? Colour::Red
                           : (blue.test(v) ? Colour::Blue : Colour::None);
    if (c == Colour::None) return Colour::None;
    if (col == Colour::None) col = c;
    if (c != col) return Colour::None;
  }
  return col;
}

}  // namespace

AgreementReport verify_reduction(const CnfInstance& inst, int d,
                                 GadgetFlavour flavour,
                                 std::optional<int> time_budget_ms) {
  AgreementReport rep;
  rep.flavour = flavour;
  rep.d = d;
  std::optional<Assignment> model = sat_oracle(inst);
  rep.sat = model.has_value();
  std::ostringstream notes;

  if (flavour == GadgetFlavour::ThreeP2Gadget) {
    ThreeP2Gadget gad = build_3p2_gadget(inst, d);
    OracleLimits lim;
    lim.max_n = gad.graph.vertex_count();
    if (time_budget_ms) lim.time_budget_ms = *time_budget_ms;
    OracleOutcome out = oracle_solve_status(gad.graph, d, {}, lim);
    rep.dcut = out.status == OracleStatus::Yes
                   ? DcutDecision::Yes
                   : (out.status == OracleStatus::No ? DcutDecision::No
                                                     : DcutDecision::TimedOut);
    if (rep.dcut != DcutDecision::TimedOut)
      rep.agree = (rep.sat == (rep.dcut == DcutDecision::Yes));
    else
      notes << "d-cut oracle timed out; ";

    if (rep.sat) {
      try {
        witness_colouring_3p2(inst, *model, d);
        rep.forward_witness_ok = true;
      } catch (const Error& e) {
        rep.forward_witness_ok = false;
        notes << "forward witness failed: " << e.what() << "; ";
      }
    }
    if (rep.dcut == DcutDecision::Yes) {
      const int total = gad.graph.vertex_count();
      Bitset red = Bitset::of(total, out.certificate->red);
      Bitset blue = Bitset::of(total, out.certificate->blue);
      Colour ck = set_colour(gad.clique_k, red, blue);
      Colour ckp = set_colour(gad.clique_kp, red, blue);
      if (ck == Colour::None || ckp == Colour::None || ck == ckp) {
        rep.backward_witness_ok = false;
        notes << "K/K' not monochromatic with distinct colours in the d-cut "
                 "witness; ";
      } else {
        Assignment a(inst.n_vars);
        for (int h = 0; h < inst.n_vars; ++h)
          a[h] = red.test(gad.independent[h]) == (ck == Colour::Red);
        rep.backward_witness_ok = satisfies(inst, a);
        if (!*rep.backward_witness_ok)
          notes << "decoded assignment does not satisfy the instance; ";
      }
    }
  } else {
    LineGadget gad = build_line_gadget(inst, d);
    OracleLimits lim;
    lim.max_n = gad.graph.vertex_count();
    lim.time_budget_ms = static_cast<double>(time_budget_ms.value_or(60000));
    OracleOutcome out = oracle_solve_status(gad.graph, d, {}, lim);
    rep.dcut = out.status == OracleStatus::Yes
                   ? DcutDecision::Yes
                   : (out.status == OracleStatus::No ? DcutDecision::No
                                                     : DcutDecision::TimedOut);
    if (rep.dcut != DcutDecision::TimedOut)
      rep.agree = (rep.sat == (rep.dcut == DcutDecision::Yes));
    else
      notes << "d-cut oracle timed out on L(G) ("
            << gad.graph.vertex_count() << " vertices); ";

    if (rep.sat) {
      try {
        witness_edge_colouring(inst, *model, d);
        rep.forward_witness_ok = true;
      } catch (const Error& e) {
        rep.forward_witness_ok = false;
        notes << "forward witness failed: " << e.what() << "; ";
      }
    }
    if (rep.dcut == DcutDecision::Yes) {
      const int total = gad.graph.vertex_count();
      Bitset red = Bitset::of(total, out.certificate->red);
      Bitset blue = Bitset::of(total, out.certificate->blue);
      auto clique_line_colour = [&](const std::vector<int>& members) {
        std::vector<int> inner = line_vertices_within(gad, members);
        return set_colour(inner, red, blue);
      };
      Colour cs = clique_line_colour(gad.clique_s);
      Colour csb = clique_line_colour(gad.clique_sbar);
      bool ok = cs != Colour::None && csb != Colour::None && cs != csb;
      Assignment a(inst.n_vars, false);
      for (int x = 0; ok && x < inst.n_vars; ++x) {
        Colour cv = clique_line_colour(gad.clique_vx[x]);
        if (cv == Colour::None) {
          ok = false;
          break;
        }
        a[x] = (cv == cs);
      }
      if (!ok) {
        rep.backward_witness_ok = false;
        notes << "named cliques not monochromatic with S/Sbar distinct in "
                 "the d-cut witness; ";
      } else {
        rep.backward_witness_ok = satisfies(inst, a);
        if (!*rep.backward_witness_ok)
          notes << "decoded assignment is not a satisfying NAE assignment; ";
      }
    }
  }
  rep.notes = notes.str();
  return rep;
}

}  // namespace dcut
