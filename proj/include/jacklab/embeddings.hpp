#pragma once
#include <utility>
#include <vector>

#include "jacklab/partitions.hpp"

namespace jacklab {

// Bipartite multigraph with a fixed coloring; edges join a black and a white vertex.
struct BicoloredGraph {
  int blacks = 0;
  int whites = 0;
  std::vector<std::pair<int, int>> edges;  // (black index, white index)
};

// G_pi: l(pi) black vertices of degrees pi_1..pi_r and |pi| white leaves.
// conjugate swaps the roles of the colors.
BicoloredGraph graph_of_partition(const Partition& pi, bool conjugate = false);

// Number of embeddings of g into the diagram la, by exhaustive backtracking.
// Positive (negative = false): black -> rows, white -> columns, edge (b,w) -> box
// (F(b), F(w)) which must lie in la; the edge-to-box map must be injective.
// negative = true reverses the roles: black -> columns, white -> rows.
// Vertex maps are unrestricted.
long long count_embeddings(const BicoloredGraph& g, const Partition& la,
                           bool negative = false);

// hat_p_pi(la) = sum over functions f : parts of pi -> rows of la of
// prod_r fallingfactorial(la_r, sum of parts sent to r).  Equals N_{G_pi}(la).
long long hat_p(const Partition& pi, const Partition& la);

}  // namespace jacklab
