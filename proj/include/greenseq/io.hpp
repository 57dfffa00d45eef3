#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "greenseq/partition.hpp"

namespace greenseq {

/// Contents of a quiver text file:
///
///   # comment
///   quiver <n_mutable> <n_frozen>
///   labels <name> ...          (optional, one per vertex)
///   <i> <j> <m>                m arrows i -> j
///   partition 1,4;2,3          (optional)
///   seq <block>: <v> <v> ...   (optional, one per block)
///
/// Vertices are named by label when labels are given and by 1-based index
/// otherwise.
struct QuiverFile {
  Quiver quiver;
  std::optional<VertexPartition> partition;
  std::vector<MutationSequence> sequences; // indexed by block; empty when absent

  /// Requires a partition and one sequence per block.
  ShuffleProblem shuffle_problem() const;
};

/// Throws ParseError with the offending line and column.
QuiverFile parse_quiver_text(std::string_view text);
QuiverFile parse_quiver_file(const std::filesystem::path& path);

/// Inverse of parse_quiver_text.
std::string write_quiver_text(const QuiverFile& file);
std::string write_quiver_text(const Quiver& q);

/// Vertex names separated by whitespace or commas, resolved against `q`.
/// Every vertex must be mutable.
MutationSequence parse_sequence(const Quiver& q, std::string_view text);

/// One node per vertex, frozen vertices drawn as boxes, one edge per arrow
/// bundle labelled with its multiplicity when above 1. Mutable vertices are
/// filled green or red when the quiver carries the framing layout.
std::string render_dot(const Quiver& q, const std::string& name = "Q");

} // namespace greenseq
