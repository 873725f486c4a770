#pragma once

#include <cstddef>
#include <vector>

#include "complab/boolean_matrix.hpp"
#include "complab/digraph.hpp"
#include "complab/graph.hpp"

namespace complab {

/// Row graph: rows u != v adjacent iff they share a column holding 1 in both.
Graph row_graph(const BooleanMatrix& a);

/// C(D): u, v adjacent iff they have a common prey.
Graph competition_graph(const Digraph& d);

/// C^m(D), computed as the row graph of A^m. m >= 1.
Graph m_step_competition_graph(const Digraph& d, std::size_t m);

/// C^m(D) straight from the definition: u, v adjacent iff their m-step prey
/// sets intersect. Independent of the matrix route. m >= 1.
Graph m_step_competition_graph_oracle(const Digraph& d, std::size_t m);

struct CompetitionProfile {
  /// Least q such that C^q, C^{q+1}, ... is periodic.
  std::size_t cindex = 1;
  /// Least p >= 1 with C^q = C^{q+p} at q = cindex.
  std::size_t cperiod = 1;
  /// Least period of the tail C^q, C^{q+1}, .... Always >= cperiod; the two
  /// differ only if the tail revisits C^q before completing its cycle.
  std::size_t eventual_period = 1;
  /// A^{matrix_index} = A^{matrix_index + matrix_period}, both minimal.
  std::size_t matrix_index = 1;
  std::size_t matrix_period = 1;
  /// C^1 .. C^{cindex + cperiod}.
  std::vector<Graph> graph_sequence_prefix;
};

/// 2 n^2 + 16.
std::size_t default_safety_cap(std::size_t n);

/// Detects the repetition A^{q_A} = A^{q_A + p_A} with a table of every
/// power seen, then derives the graph-sequence index and period from it.
/// Throws Error{CapExceeded} when no power repeats among A^1..A^{safety_cap}.
CompetitionProfile competition_profile(const Digraph& d, std::size_t safety_cap);
CompetitionProfile competition_profile(const Digraph& d);

}  // namespace complab
