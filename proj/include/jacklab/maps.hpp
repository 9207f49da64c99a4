#pragma once
#include <string>
#include <vector>

#include "jacklab/matchings.hpp"
#include "jacklab/partitions.hpp"

namespace jacklab {

// Surface map (possibly non-orientable, possibly disconnected) encoded by flags.
// A flag is one end of one edge-side; 4E flags total.  Involutions: s0 swaps the
// two ends of an edge-side, s1 walks around a corner, s2 swaps the two sides of
// an edge.  Vertices are <s1,s2>-orbits, edges <s0,s2>-orbits (size 4), faces
// <s0,s1>-orbits.  end[f] = 0 at black vertices, 1 at white ones.
struct FlagMap {
  std::vector<int> s0, s1, s2;
  std::vector<char> end;
  std::vector<int> face_roots;  // per numbered face, its root flag (glue outputs)

  int flags() const { return (int)s0.size(); }
  int edges() const { return flags() / 4; }
  bool operator==(const FlagMap&) const = default;
};

// Connected map with a distinguished flag; the empty map has 0 flags, root -1.
struct RootedMap {
  FlagMap map;
  int root = -1;

  bool empty() const { return map.flags() == 0; }
  bool operator==(const RootedMap&) const = default;
};

// Ordered list of rooted connected components.
using MapList = std::vector<RootedMap>;

// Structural asserts: fixed-point-free involutions, s0s2 = s2s0 without fixed
// points, s0 flips the end bit, s1 and s2 preserve it.
void validate_flagmap(const FlagMap& m);

// Polygon gluing: one 2*la_s-gon per part with boundary edge-sides 1^,1,2^,2,..
// per block; black corners realize eps-pairs, white corners delta_la-pairs;
// delta glues edge-side x to edge-side delta(x) end-to-matching-end.  Face s is
// numbered by its block and rooted at the edge-side labelled la_1+..+la_{s-1}+1.
FlagMap glue(const Partition& la, const Matching& delta);

struct Profiles {
  Partition faces;       // half-degrees
  Partition whites;      // white vertex degrees
  Partition blacks;      // black vertex degrees
  Partition components;  // per-component edge counts
};

// Throws "map not bipartite" if the coloring is inconsistent.
Profiles profiles(const FlagMap& m);

// True iff every component's flag graph (adjacency s0 u s1 u s2) is bipartite.
bool is_orientable(const FlagMap& m);

// V - E + F summed over components.
int euler_characteristic(const FlagMap& m);

// Components as standalone unrooted maps, ordered by smallest original flag.
std::vector<RootedMap> split_components(const FlagMap& m);

// The component containing the given flag; new_ids (if non-null) receives the
// old-flag -> new-flag translation, -1 outside the component.
RootedMap extract_component(const FlagMap& m, int flag, std::vector<int>* new_ids = nullptr);

// |M^{la;mu}_{pi,sg}| = |G^{la;mu}_{pi,sg}| * (z_mu 2^l(mu)) / (z_la 2^l(la)).
// Throws "counting identity violated" on a non-integer result.
long long count_rooted_lists(const Partition& pi, const Partition& sg,
                             const Partition& la, const Partition& mu);

// |M~^{.;mu}_{pi,sg}| = sum_nu (z_mu/z_nu) |G~^{nu;mu}_{pi,sg}| over face profiles nu,
// with pi the white and sg the black degree distribution.
long long count_oriented_lists_anyface(const Partition& pi, const Partition& sg,
                                       const Partition& mu);

// All 2^l(mu) z_mu rooted mu-lists obtainable from m: number the components
// consistently with mu (component i gets mu_i edges) and root each at an
// oriented corner of a black vertex (a black-end flag).
// Throws "component profile != mu" on a mismatch.
std::vector<MapList> component_labellings(const FlagMap& m, const Partition& mu);

// Root-preserving isomorphism invariant: BFS relabelling from the root over
// (s0, s1, s2), then the flat table [s0[f], s1[f], s2[f], end[f]] per new flag.
std::vector<int> canonical_serialization(const RootedMap& r);

}  // namespace jacklab
