#pragma once

#include <string>
#include <vector>

#include "greenseq/partition.hpp"
#include "greenseq/qseries.hpp"

namespace greenseq {

/// E(y^alpha) = sum_m v^(m^2) y^(m alpha) / prod_{t<m} (v^(2m) - v^(2t)),
/// truncated at the context's order.
QSeries dilog(const Exponent& alpha, const SeriesContext& ctx);

/// E(y^alpha)^-1, inverted as a power series in the single monomial y^alpha.
QSeries dilog_inverse(const Exponent& alpha, const SeriesContext& ctx);

struct Letter {
  CVector beta; // c-vector of the mutated vertex just before the step
  int sign;     // +1 when that vertex was green, -1 when red
  Vertex vertex;
};

using SignedWord = std::vector<Letter>;

/// Runs `sigma` on framed `q` and records one letter per step.
SignedWord dt_word(const Quiver& q, const MutationSequence& sigma);

/// lambda(e_u, e_v) = b(u, v) over the mutable vertices.
SeriesContext series_context(const Quiver& q, int order);

/// Ordered product of E(y^(sign beta))^sign over the letters.
QSeries word_product(const SignedWord& word, const SeriesContext& ctx);

/// The ordered dilogarithm product of a reddening sequence. Throws
/// InvalidInput when `sigma` is not reddening.
QSeries dt_invariant(const Quiver& q, const MutationSequence& sigma, int order);

/// Sum of the two largest letter degrees, capped at 6.
int default_order(const SignedWord& word);

/// Letters whose mutated vertex lies in `vertices`.
SignedWord restrict_word(const SignedWord& word, const std::vector<Vertex>& vertices);

/// Every letter's c-vector vanishes outside the block of its vertex.
bool support_confined(const SignedWord& word, const VertexPartition& p);

/// For a component preserving `sigma`, checks that the word restricted to a
/// block equals the word of the block's own component under the restricted
/// sequence, and that supports stay inside the block. Throws InvalidInput if
/// `sigma` is not component preserving and InternalError on a mismatch.
SignedWord check_restriction(const Quiver& q, const MutationSequence& sigma,
                             const VertexPartition& p, std::size_t block);

std::string to_report(const Quiver& q, const SignedWord& word);

/// "equal: true|false", the order, and the first monomial where the two
/// series differ.
std::string identity_report(const QSeries& lhs, const QSeries& rhs);

} // namespace greenseq
