#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "greenseq/partition.hpp"

namespace greenseq {

struct EnumerationResult {
  std::vector<MutationSequence> sequences; // lexicographic order
  bool complete = true; // false when some green path hit max_len
  std::size_t nodes = 0;
};

/// Depth-first search over green mutations from framed `q`, in increasing
/// vertex order. Each maximal green sequence of length <= max_len is passed to
/// `visit` in lexicographic order. Returns the completeness flag; `nodes`
/// receives the number of states expanded.
bool enumerate_mgs(const Quiver& q, std::size_t max_len,
                   const std::function<void(const MutationSequence&)>& visit,
                   std::size_t* nodes = nullptr);
EnumerationResult enumerate_mgs(const Quiver& q, std::size_t max_len);

struct CountResult {
  std::size_t count = 0;
  bool complete = true;
};

CountResult count_mgs(const Quiver& q, std::size_t max_len);

/// "<count> complete" or "<count> truncated".
std::string to_report(const CountResult& r);

/// F_1 = 1, F_2 = 2, F_n = F_(n-1) + F_(n-2).
Integer fibonacci(std::size_t n);

/// Linearly oriented A_n: 1 -> 2 -> ... -> n.
Quiver linear_an(std::size_t n);

/// Oriented cycle 1 -> 2 -> ... -> n -> 1.
Quiver cycle_quiver(std::size_t n);

/// (n, n-1, ..., 1, n, ..., 2, ..., n, n-1, n), a maximal green sequence of
/// linear_an(n) of length n(n+1)/2.
MutationSequence long_sequence(std::size_t n);

struct MinLengthResult {
  std::optional<MutationSequence> witness;
  bool complete = false; // true when the answer is exact (found, or proven absent)
  std::size_t nodes = 0;
};

/// Iterative deepening over green mutations, starting at depth n_mutable
/// (every vertex has to be mutated at least once). The witness is the
/// lexicographically first sequence of minimal length.
MinLengthResult min_length_mgs(const Quiver& q, std::size_t hard_cap);
std::string to_report(const Quiver& q, const MinLengthResult& r);

struct CompositionalResult {
  MutationSequence witness;
  std::vector<std::size_t> component_lengths;
  std::size_t search_nodes = 0;
};

/// Minimal length through a partition: every block's sequence is checked to
/// be a maximal green sequence of its component with no shorter one, and a
/// component preserving shuffle of them is then minimal for the whole quiver.
/// Throws InvalidInput when a block's sequence is not minimal or no shuffle is
/// found within the budget.
CompositionalResult compositional_min_mgs(const ShuffleProblem& problem, std::size_t node_budget);
std::string to_report(const Quiver& q, const CompositionalResult& r);

} // namespace greenseq
