#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "greenseq/integer.hpp"

namespace greenseq {

/// 0-based vertex index. Mutable vertices come first, frozen ones after.
using Vertex = std::size_t;

/// Vertices to mutate, applied left to right.
using MutationSequence = std::vector<Vertex>;

/// Signed arrow counts from a mutable vertex to the frozen copies.
using CVector = std::vector<Integer>;

enum class Color { Green, Red };

std::string_view to_string(Color c);

struct Arrow {
  Vertex source;
  Vertex target;
  Integer multiplicity;
};

/// A quiver or ice quiver stored as its extended exchange matrix.
///
/// Entry b(i, j) is the number of arrows i -> j minus the number of arrows
/// j -> i. The matrix is skew-symmetric with a zero diagonal and zero
/// frozen-frozen block. When n_frozen == n_mutable the frozen copy of mutable
/// vertex i sits at index i + n_mutable (the layout produced by framed()).
///
/// Labels are display names only; equality compares the matrix and the
/// mutable/frozen split.
class Quiver {
public:
  Quiver() = default;
  Quiver(std::size_t n_mutable, std::size_t n_frozen);

  static Quiver from_arrows(std::size_t n_mutable, std::size_t n_frozen,
                            std::span<const Arrow> arrows);

  std::size_t n_mutable() const { return n_mutable_; }
  std::size_t n_frozen() const { return n_frozen_; }
  std::size_t size() const { return n_mutable_ + n_frozen_; }
  bool is_frozen(Vertex v) const { return v >= n_mutable_; }
  bool has_framing_layout() const { return n_frozen_ > 0 && n_frozen_ == n_mutable_; }

  const Integer& operator()(Vertex i, Vertex j) const { return b_[i * size() + j]; }

  /// Sets b(i, j) = m and b(j, i) = -m.
  void set(Vertex i, Vertex j, const Integer& m);

  /// Positive entries of the matrix, in row-major order.
  std::vector<Arrow> arrows() const;

  const std::vector<std::string>& labels() const { return labels_; }
  Quiver with_labels(std::vector<std::string> labels) const;
  std::string vertex_name(Vertex v) const;
  std::optional<Vertex> find_vertex(std::string_view name) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.n_mutable_ == b.n_mutable_ && a.n_frozen_ == b.n_frozen_ && a.b_ == b.b_;
  }

private:
  std::size_t n_mutable_ = 0;
  std::size_t n_frozen_ = 0;
  std::vector<Integer> b_;
  std::vector<std::string> labels_;
};

/// Adds a frozen copy i' and one arrow i -> i' for every vertex.
Quiver framed(const Quiver& q);

/// Matrix mutation at a mutable vertex. The input is left untouched.
Quiver mutate(const Quiver& q, Vertex k);

Quiver apply_sequence(const Quiver& q, const MutationSequence& seq);

/// Requires the framing layout. Throws SignCoherenceError on a mixed-sign or
/// zero vector.
CVector c_vector(const Quiver& q, Vertex i);
Color vertex_color(const Quiver& q, Vertex i);
bool all_red(const Quiver& q);

struct SequenceReport {
  MutationSequence sequence;
  bool is_reddening = false;
  bool is_maximal_green = false;
  std::vector<Color> step_colors; // color of sequence[t] just before step t
};

/// Frames `q` (which must have no frozen vertices) and runs `seq` on it.
SequenceReport verify_sequence(const Quiver& q, const MutationSequence& seq);
std::string to_report(const Quiver& q, const SequenceReport& report);

struct Restriction {
  Quiver quiver;
  std::vector<Vertex> vertex_map; // local index -> original index
};

/// Induced subquiver on `vertices`. Mutable members come first (ascending),
/// then frozen members (ascending). Labels of the result are the original
/// vertex names.
Restriction restrict_to(const Quiver& q, std::span<const Vertex> vertices);

/// Disjoint union of two unframed quivers plus `bridges`, which are given in
/// the combined numbering (A's vertices, then B's) and must run from A to B.
Quiver direct_sum(const Quiver& a, const Quiver& b, std::span<const Arrow> bridges);

Quiver opposite(const Quiver& q);

std::string format_sequence(const Quiver& q, const MutationSequence& seq);

/// Converts 1-based vertex numbers to a 0-based sequence.
MutationSequence one_based(std::initializer_list<std::size_t> vertices);

} // namespace greenseq
