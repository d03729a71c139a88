#pragma once
// Per-instance analysis of a 2-level subgraph: the outer cycle at level l
// plus the level-(l+1) subgraph in its interior. Extracts the region, parses
// blocks and block-trees off the boundary walk, detects covered blocks and
// clusters, expands super-blocks, computes the vertex ordering, colors the
// crossings and assigns logical pages.
//
// One analysis object is reusable across instances: all per-vertex, per-face
// and per-edge maps are stamped and cleared in O(1), so total work over all
// instances of a graph stays linear.

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tenpage/core.hpp"
#include "tenpage/level.hpp"
#include "tenpage/plane_graph.hpp"

namespace tenpage {

// Shared immutable context for all instances of one normalized multigraph.
struct PipelineContext {
  const PlaneGraph* g = nullptr;
  PlaneGraph skel;
  FaceSet sfs;  // skeleton faces
  LevelDecomposition levels;
  std::vector<int> quad_of_dummy;  // skeleton face of each crossing, by dummy
  std::vector<std::pair<EdgeId, EdgeId>> pair_of_dummy;
  std::vector<std::vector<VertexId>> dummies_in_face;  // inverse of quad_of_dummy

  explicit PipelineContext(const PlaneGraph& graph);
};

enum class EdgeColor : uint8_t { black, green, red, purple };

enum class PageRole : uint8_t {
  none,
  eta,    // outer edges, outer chords, backward binding
  pi,     // edges of a super-block (phase by depth in the expanded tree)
  pibar,  // forward binding and friends (opposite phase)
  rho,    // red
  chi     // purple; the side is fixed by a global 2-coloring at the end
};

enum class PurpleKind : uint8_t { handle, connector, bridge, hook, unclassified };

struct Block {
  std::vector<VertexId> cycle;    // b_0..b_q counterclockwise; {b} if elementary
  std::vector<Dart> cycle_darts;  // skeleton darts b_i -> b_{i+1}
  int parent = -1;                // block id, -1 for tree roots
  int tree = -1;
  int depth = 0;  // in the block tree
  int alpha = -1, omega = -1;  // outer indices (dominator / last outer vertex)
  int key_pos = -1;     // ccw position of the alpha-defining face at alpha
  int w_enter = -1, w_close = -1;  // subtree range on the boundary walk
  bool covered = false;
  bool elementary = false;
  bool is_bridge = false;  // single-copy 2-vertex block: no child instance
  int super_block = -1;    // owning super-block (absorbing one if covered)
  int cluster = -1;        // for covered blocks
  bool displace_child = false;  // a purple handle was relocated onto this block
  VertexId leader() const { return cycle.front(); }
  VertexId last() const { return cycle.back(); }
  int q() const { return (int)cycle.size() - 1; }
};

struct BlockTree {
  int root = -1;  // block id
  int f_T = -1;   // first face (skeleton face id)
  VertexId lambda = -1;
  int alpha = -1, omega = -1;  // outer indices, from the first face
  std::vector<Dart> walk;      // boundary walk, region on the view's left
};

struct Cluster {
  VertexId leader = -1;  // b: inner vertex of an uncovered block
  int cover = -1;        // outer index of v
  std::vector<int> subtree_roots;  // topmost covered blocks, ccw at the leader
  std::vector<VertexId> order;     // nested-sweep vertex order
};

struct SuperBlock {
  int root = -1;       // uncovered block id
  int dominator = -1;  // outer index
  int depth = 0;       // in the expanded super-block tree
  int parent = -1;     // super-block id, -1 at tree roots
  int tree = -1;
  std::vector<int> blocks;      // root plus absorbed covered blocks
  std::vector<VertexId> order;  // vertex string placed right of the dominator
};

struct EdgeAssign {
  EdgeId e = -1;
  EdgeColor color = EdgeColor::black;
  PageRole role = PageRole::none;
  int super_block = -1;  // phase source for pi/pibar; -1 = free phase
  int coloring_case = 0; // 1,2,3,41,42,43,51..54 for diagnostics
  PurpleKind purple = PurpleKind::unclassified;
  int purple_block = -1;
  bool displaced = false;  // moved off eta because of a handle upstream
};

// Partition of the instance induced by an uncovered super-block or by a copy
// of an outer chord/edge between outer vertices v_i < v_k.
struct Partition {
  int super = -1;    // inducer, or
  EdgeId chord = -1; // this uncrossed outer chord/edge copy
  int vi = -1, vk = -1;           // outer indices
  std::vector<VertexId> h2;
  std::vector<VertexId> l_set;  // vertices of H_1 super-blocks dominated by v_i
};

// What the composition driver needs from one instance.
struct ChildInstance {
  std::vector<Dart> cycle;  // skeleton darts of the block cycle, ccw
  int block = -1;           // block id in the parent analysis
  bool displace_last_chords = false;  // parent handle relocated into pi
};

class TwoLevelAnalysis {
 public:
  // cycle: skeleton darts v_i -> v_{i+1} of the outer cycle, in spine order,
  // with the instance interior on the right for mirror=false (left otherwise).
  // phase_seed: initial pi/pibar phase for tree roots. Instances two levels
  // apart share a page pair, and the backward bindings of the level in
  // between sit on one page of it; seeding the root phase keeps the forward
  // pages of this instance off that page.
  void build(const PipelineContext& ctx, const std::vector<Dart>& cycle,
             bool mirror, int level, bool displace_last_chords,
             int phase_seed = 0);

  // inputs / identity
  const PipelineContext* ctx = nullptr;
  bool mirror = false;
  int level = 0;
  std::vector<Dart> cycle;
  std::vector<VertexId> outer;  // v_0..v_t

  // extraction
  std::vector<int> region_faces;
  std::vector<VertexId> inner;
  std::vector<VertexId> crossings;  // owned dummies
  int inner_edge_count = 0;         // inner-subgraph skeleton edges

  // structure
  std::vector<Block> blocks;
  std::vector<BlockTree> trees;
  std::vector<Cluster> clusters;
  std::vector<SuperBlock> supers;
  std::vector<int> super_order;  // super ids sorted by (dominator, ccw)
  std::vector<int> tree_flip;    // per tree: swap pi/pibar phases (Lemma-10 sync)

  // layout
  std::vector<VertexId> layout;
  // chunks[j] = inner vertices to splice right of v_j (before v_1 for j = 0)
  std::vector<std::vector<VertexId>> chunks;

  // pages
  std::vector<EdgeAssign> assigns;
  std::vector<ChildInstance> children;
  std::vector<std::string> diagnostics;

  // role instrumentation, pre-relocation: eta, pi-phase0, pi-phase1, rho,
  // chi, chibar
  bool role_used[6] = {false, false, false, false, false, false};
  int roles_used() const;
  int bgr_roles_used() const;     // eta + pi phases + rho
  int purple_roles_used() const;  // chi + chibar

  // queries
  int outer_index(VertexId v) const;  // -1 if not on the outer cycle
  int position(VertexId v) const;     // layout position
  int block_of(VertexId v) const;     // assigned block, -1 for outer vertices
  int pi_phase(int super_block) const;  // 0/1, tree flips applied

  // analysis for tests and property suites
  Partition partition_by_super(int super_block) const;
  Partition partition_by_chord(EdgeId chord) const;
  bool well_separated(EdgeId e1, EdgeId e2, const Partition& p) const;
  std::vector<int> backbone(int tree, int outer_vertex_index) const;

 private:
  // stamped scratch, reused across build() calls
  StampedMap outer_pos_, inner_mark_, vertex_block_, vertex_tree_, pos_;
  StampedMap region_, face_alpha_, face_pos_;
  StampedMap edge_block_, edge_flags_, edge_assign_, cycle_edge_;
  mutable StampedMap scratch_, scratch2_;
  std::vector<int> stack_index_;  // walk-parse stack positions, -1 elsewhere
  std::vector<EdgeId> owned_;     // uncrossed edges this instance assigns

  std::unordered_map<VertexId, std::vector<int>> clusters_at_;  // by leader

  void extract_region();
  void sweep_face_keys();
  void find_trees_and_blocks();
  void parse_tree_walk(int tree_id, Dart start);
  void finish_blocks();
  void detect_clusters();
  void expand_super_blocks();
  void make_layout();
  int phase_seed_ = 0;
  void color_and_assign(bool displace_last_chords);
  void color_crossing(VertexId dummy);
  bool far_backward(VertexId outer_v, VertexId inner_v) const;
  std::vector<EdgeId> separate_far_backward_phases();
  std::vector<int> deferred_;  // assign indices placed after all crossings
  void place_deferred_bindings();
  void classify_purple(EdgeAssign& a);
  void displace_last_vertex_chords();
  std::vector<VertexId> nested_sweep(int subtree_root) const;
  std::vector<Dart> face_darts_view(int f) const;
  int least_outer_on_face(int f) const;
  void mark_role(PageRole role, int super_block);
  void note(const std::string& msg);
};

}  // namespace tenpage
