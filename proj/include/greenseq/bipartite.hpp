#pragma once

#include <optional>
#include <string>
#include <vector>

#include "greenseq/quiver.hpp"

namespace greenseq {

enum class Side { White, Black };

struct Bipartition {
  std::vector<Side> color;

  bool is_white(Vertex v) const { return color[v] == Side::White; }
  std::vector<Vertex> vertices(Side s) const;
  Bipartition swapped() const;
};

/// Breadth-first 2-coloring of the underlying graph. The lowest-indexed vertex
/// of every connected piece is white. Returns nullopt on an odd cycle.
std::optional<Bipartition> bipartition_of(const Quiver& q);

/// Undirected multigraph as a symmetric matrix of edge multiplicities.
struct Multigraph {
  std::size_t n = 0;
  std::vector<std::vector<Integer>> adj;

  explicit Multigraph(std::size_t n_vertices = 0)
      : n(n_vertices), adj(n_vertices, std::vector<Integer>(n_vertices)) {}

  bool has_edges() const;
  /// Connected components (isolated vertices included), each sorted.
  std::vector<std::vector<Vertex>> components() const;
  Multigraph induced(const std::vector<Vertex>& vertices) const;
};

/// (Gamma, Delta) split of a bipartite quiver's arrows.
///
/// Gamma collects the arrows leaving black vertices and Delta those leaving
/// white vertices, so white vertices are sinks of Gamma and sources of Delta.
struct Bigraph {
  Multigraph gamma;
  Multigraph delta;
};

Bigraph bigraph_of(const Quiver& q, const Bipartition& eps);

/// Mutating every white vertex and, separately, every black vertex both
/// yield the opposite quiver. Also asserts that the order of mutation within a
/// color class does not matter.
bool is_recurrent(const Quiver& q, const Bipartition& eps);

/// A_Gamma A_Delta == A_Delta A_Gamma, compared exactly.
bool commute_check(const Bigraph& g);

struct DynkinType {
  enum class Family { A, D, E };
  Family family;
  int rank;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

std::string to_string(const DynkinType& t);

struct CoxeterData {
  int coxeter_number;
  int positive_roots;
};

/// Shape match of a connected simple graph against A_n, D_n, E_6, E_7, E_8.
/// Throws InvalidInput on multi-edges.
std::optional<DynkinType> classify_ade(const Multigraph& g);
CoxeterData coxeter(const DynkinType& t);

/// Path 1-2-...-n for A_n; D_n adds vertex n to n-2; E_n adds vertex n to 3.
/// Vertices at even distance from vertex 1 are sources, the rest sinks.
Quiver alternating_dynkin(const DynkinType& t);

enum class GammaSide {
  Auto,        // pick the finite side with the larger Coxeter number (ties: WhiteSink)
  WhiteSink,   // the finite graph is Gamma: white vertices are its sinks
  WhiteSource, // the finite graph is Delta: mutate black vertices first
};

struct RecurrentMgs {
  MutationSequence sequence;
  bool roles_swapped = false; // true when black vertices were mutated first
  int coxeter_number = 0;
  std::vector<std::vector<Vertex>> components; // components of the finite graph
  std::vector<DynkinType> component_types;
};

/// Alternating sink/source mutation sequence for a bipartite recurrent quiver
/// whose finite side has only ADE components with a common Coxeter number h:
/// (sinks, sources) repeated h/2 times, with one extra round of sinks when h
/// is odd. Each color class is emitted in ascending vertex order.
RecurrentMgs recurrent_mgs(const Quiver& q, const Bipartition& eps,
                           GammaSide side = GammaSide::Auto);
std::string to_report(const Quiver& q, const RecurrentMgs& r);

/// Grid quiver on pairs (i, j), i from `left`, j from `right`, with vertex
/// (i, j) at index j * |left| + i. A left arrow i -> i' is copied as-is into
/// the columns of right-sinks and reversed elsewhere; a right arrow j -> j' is
/// copied as-is into the rows of left-sources. Every square is an oriented
/// 4-cycle. Isolated vertices count as both sources and sinks.
Quiver square_product(const Quiver& left, const Quiver& right);

std::string render_bigraph_dot(const Multigraph& g, const Quiver& q, const std::string& name);

} // namespace greenseq
