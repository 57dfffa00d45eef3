#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "greenseq/partition.hpp"

namespace greenseq {

/// Positive scaling constants indexed by unordered block pairs. Pairs that
/// were never set read as 1.
class DominanceConstants {
public:
  const Integer& get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Integer d);

  /// Entrywise product.
  DominanceConstants operator*(const DominanceConstants& other) const;

  const std::map<std::pair<std::size_t, std::size_t>, Integer>& entries() const { return d_; }

  /// Pairs explicitly set to 1 compare equal to unset pairs.
  friend bool operator==(const DominanceConstants& a, const DominanceConstants& b);

private:
  std::map<std::pair<std::size_t, std::size_t>, Integer> d_;
};

/// Entrywise: b_ij a_ij >= 0 and |b_ij| >= |a_ij|.
bool dominates(const Quiver& b, const Quiver& a);

/// Returns the constants when `b` has the same components as `a` and every
/// bridging multiplicity is scaled by one positive constant per block pair.
std::optional<DominanceConstants> pi_dominates(const Quiver& b, const Quiver& a,
                                               const VertexPartition& p);

/// Same check with the constants fixed in advance.
bool pi_dominates_with(const Quiver& b, const Quiver& a, const VertexPartition& p,
                       const DominanceConstants& d);

/// Multiplies every bridging arrow between mutable vertices by its block
/// pair's constant. Arrows at frozen vertices are left alone.
Quiver scale_bridging(const Quiver& a, const VertexPartition& p, const DominanceConstants& d);

struct TransferReport {
  bool stepwise_dominance = false; // B_t pi-dominates A_t with constants d after every step
  SequenceReport on_a;
  SequenceReport on_b;
  bool reddening_transfers = false;
  bool maximal_green_transfers = false;
};

/// Runs `tau` on framed A and on framed B = scale_bridging(A, p, d) side by
/// side. Throws InvalidInput if `tau` is not component preserving for
/// (A, p), and InternalError if dominance or the reddening/maximal green
/// property fails to carry over.
TransferReport transfer_check(const Quiver& a, const VertexPartition& p,
                              const DominanceConstants& d, const MutationSequence& tau);
std::string to_report(const Quiver& q, const TransferReport& report);

/// Plain dominance of `b` over `a` and, when a partition is given, the
/// pi-dominance constants (block pairs numbered from 1).
std::string dominance_report(const Quiver& b, const Quiver& a, const VertexPartition* p);

} // namespace greenseq
