#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "greenseq/quiver.hpp"

namespace greenseq {

/// A set partition of the mutable vertices 0..n-1 into nonempty blocks.
/// Blocks are stored sorted; block order is the caller's order.
class VertexPartition {
public:
  VertexPartition(std::vector<std::vector<Vertex>> blocks, std::size_t n_mutable);

  static VertexPartition singletons(std::size_t n_mutable);

  std::size_t block_count() const { return blocks_.size(); }
  std::size_t n_mutable() const { return block_of_.size(); }
  const std::vector<Vertex>& block(std::size_t i) const { return blocks_[i]; }
  const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
  std::size_t block_of(Vertex v) const { return block_of_.at(v); }

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;

private:
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<std::size_t> block_of_;
};

/// Block of any vertex of `q` under the extended partition: a frozen copy i'
/// belongs to the block of i. Requires q to have no frozen vertices or the
/// framing layout.
std::size_t extended_block_of(const Quiver& q, const VertexPartition& p, Vertex v);

/// Vertices of block i together with their frozen copies (when q is framed).
std::vector<Vertex> extended_block(const Quiver& q, const VertexPartition& p, std::size_t i);

/// A framed-reachable ice quiver together with a partition of its mutable
/// vertices. Constructing one from a quiver without frozen vertices frames it.
class PartitionedIceQuiver {
public:
  PartitionedIceQuiver(Quiver q, VertexPartition p);

  const Quiver& quiver() const { return quiver_; }
  const VertexPartition& partition() const { return partition_; }
  std::size_t block_of(Vertex v) const { return extended_block_of(quiver_, partition_, v); }

private:
  Quiver quiver_;
  VertexPartition partition_;
};

PartitionedIceQuiver mutate(const PartitionedIceQuiver& pq, Vertex k);

/// Precondition: b(i, j) != 0.
bool is_bridging(const PartitionedIceQuiver& pq, Vertex i, Vertex j);

/// A green vertex is component preserving when all of its mutable in-neighbors
/// share its block; a red vertex when all of its mutable out-neighbors do.
bool is_component_preserving(const PartitionedIceQuiver& pq, Vertex k);

enum class ViolationKind {
  NotComponentPreserving,
  /// Restriction did not commute with mutation at a component preserving
  /// vertex. Indicates an engine defect.
  ComponentMismatch,
};

struct CpViolation {
  std::size_t step; // 0-based position in the sequence
  Vertex vertex;
  ViolationKind kind;
};

struct CpReport {
  bool all_cp = false;
  std::optional<CpViolation> first_violation;
  bool lemma_mu_checked = false;
  std::size_t steps_checked = 0;
};

/// Walks `seq`, checking the component preserving condition before every step
/// and, when `check_components` is set, that restricting to each block commutes
/// with the mutation. Stops at the first violation.
CpReport verify_cp_sequence(const PartitionedIceQuiver& pq, const MutationSequence& seq,
                            bool check_components = true);
std::string to_report(const Quiver& q, const CpReport& report);

/// Per-block sequences to be interleaved.
struct ShuffleProblem {
  Quiver base;
  VertexPartition partition;
  std::vector<MutationSequence> component_sequences;

  ShuffleProblem(Quiver base, VertexPartition partition,
                 std::vector<MutationSequence> component_sequences);
};

enum class Conclusion { None, Reddening, MaximalGreen };
std::string_view to_string(Conclusion c);

struct ShuffleReport {
  bool is_shuffle = false;
  std::optional<std::size_t> order_violation; // first position breaking a block's order
  CpReport cp;
  std::vector<SequenceReport> components; // each sequence on its own component
  Conclusion conclusion = Conclusion::None;
  SequenceReport whole; // direct verification on the full quiver
};

/// Checks that `tau` is a component preserving shuffle and derives the
/// conclusion from the per-component verdicts. The conclusion is then
/// confirmed against direct verification of the whole quiver; a disagreement
/// throws InternalError.
ShuffleReport cp_shuffle_verify(const ShuffleProblem& problem, const MutationSequence& tau);
std::string to_report(const Quiver& q, const ShuffleReport& report);

enum class SearchStatus { Found, NotFound, BudgetExhausted };
std::string_view to_string(SearchStatus s);

struct ShuffleSearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<MutationSequence> sequence;
  std::size_t nodes = 0;
};

/// Depth-first search over interleavings that only extends component
/// preserving moves. Blocks are tried in index order, so the result is the
/// lexicographically first solution by block index.
ShuffleSearchResult shuffle_search(const ShuffleProblem& problem, std::size_t node_budget);
std::string to_report(const Quiver& q, const ShuffleSearchResult& result);

/// Greedy admissible numbering by sources: repeatedly mutate the smallest
/// not-yet-mutated source. Rejects quivers with oriented cycles.
MutationSequence admissible_source_sequence(const Quiver& q);

} // namespace greenseq
