#pragma once
#include <vector>

#include "jacklab/maps.hpp"
#include "jacklab/scalars.hpp"

namespace jacklab {

enum class EdgeClass { Bridge, Border, Twisted, Handle };

// Handle tie-break when neither regluing of the root edge is orientable: the
// copy whose canonical serialization is lexicographically smaller (resp.
// larger) keeps eta(M\e), the other gets eta(M\e)+1.  When exactly one
// regluing is orientable it always receives eta(M\e).
enum class EtaPolicy { OrientableThenLexSmall, OrientableThenLexLarge };

// Bridge iff deletion disconnects the map (a leaf counts as a bridge);
// otherwise compares the face count of M\e against that of M: one fewer is a
// border, equal is a twisted edge, one more is a handle.
// Throws "no root edge" on an empty map.
EdgeClass classify_root_edge(const RootedMap& m);

// Removes the root edge and re-roots canonically: the component of the root
// vertex at the next corner around that vertex, a detached second component at
// the next corner along the old root face.  A degree-1 endpoint dissolves into
// an edgeless (empty) map.  Returns one map when deletion keeps the map
// connected, otherwise two in (root-vertex side, far side) order.
std::vector<RootedMap> delete_root_edge(const RootedMap& m);

// Reglues the root edge into its far endpoint the other way round by swapping
// the corner links of the two far-end flags.  An involution fixing M\e; both
// endpoints of the root edge must have degree >= 2.
RootedMap twist_root_edge(const RootedMap& m);

// La Croix's measure of non-orientability: 0 for edgeless maps; a bridge sums
// the two parts, a border keeps eta(M\e), a twisted edge adds 1; a handle
// gives eta(M\e) to the orientable regluing if there is one, otherwise by
// policy, and eta(M\e)+1 to the other.  trace (if non-null) receives the
// classes met during the cascade in visit order.
long eta_component(const RootedMap& m, EtaPolicy policy,
                   std::vector<EdgeClass>* trace = nullptr);
long eta(const MapList& l, EtaPolicy policy, std::vector<EdgeClass>* trace = nullptr);

// True iff the root-deletion cascade never meets a handle; policy-free.
bool is_unhandled_component(const RootedMap& m);
bool is_unhandled(const MapList& l);

// eta of glue(la, delta) with component i rooted at the root of face i; needs
// one face per component, i.e. component_type(delta, eps, delta_la) = la.
// Throws "delta not in a G^{la;la} class" otherwise.
long stat_eta(const Partition& la, const Matching& delta, EtaPolicy policy,
              std::vector<EdgeClass>* trace = nullptr);
bool is_unhandled_matching(const Partition& la, const Matching& delta);

// Sum over delta in G^{la;la}_{pi,sg} of beta^{stat_eta(delta)}.
BetaPolynomial poly_G_eta(const Partition& pi, const Partition& sg, const Partition& la,
                          EtaPolicy policy);

// Sum over rooted mu-lists with face type la of beta^eta, computed from the
// (delta, labelling) census divided by the fiber size z_la 2^l(la).
// Throws "list census not divisible" if the fibers do not balance.
BetaPolynomial poly_H_eta(const Partition& pi, const Partition& sg, const Partition& la,
                          const Partition& mu, EtaPolicy policy);

}  // namespace jacklab
