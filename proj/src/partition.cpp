#include "greenseq/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "greenseq/errors.hpp"

namespace greenseq {

VertexPartition::VertexPartition(std::vector<std::vector<Vertex>> blocks, std::size_t n_mutable)
    : blocks_(std::move(blocks)), block_of_(n_mutable, n_mutable) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    auto& blk = blocks_[i];
    if (blk.empty()) throw InvalidInput("partition block " + std::to_string(i + 1) + " is empty");
    std::sort(blk.begin(), blk.end());
    for (Vertex v : blk) {
      if (v >= n_mutable)
        throw InvalidInput("partition mentions non-mutable vertex " + std::to_string(v + 1));
      if (block_of_[v] != n_mutable)
        throw InvalidInput("vertex " + std::to_string(v + 1) + " appears in two blocks");
      block_of_[v] = i;
    }
  }
  for (Vertex v = 0; v < n_mutable; ++v)
    if (block_of_[v] == n_mutable)
      throw InvalidInput("vertex " + std::to_string(v + 1) + " is not covered by the partition");
}

VertexPartition VertexPartition::singletons(std::size_t n_mutable) {
  std::vector<std::vector<Vertex>> blocks;
  for (Vertex v = 0; v < n_mutable; ++v) blocks.push_back({v});
  return VertexPartition(std::move(blocks), n_mutable);
}

std::size_t extended_block_of(const Quiver& q, const VertexPartition& p, Vertex v) {
  if (!q.is_frozen(v)) return p.block_of(v);
  if (!q.has_framing_layout())
    throw InvalidInput("frozen vertices must be frozen copies of mutable ones");
  return p.block_of(v - q.n_mutable());
}

std::vector<Vertex> extended_block(const Quiver& q, const VertexPartition& p, std::size_t i) {
  std::vector<Vertex> out = p.block(i);
  if (q.has_framing_layout())
    for (Vertex v : p.block(i)) out.push_back(v + q.n_mutable());
  return out;
}

PartitionedIceQuiver::PartitionedIceQuiver(Quiver q, VertexPartition p)
    : quiver_(q.n_frozen() == 0 ? framed(q) : std::move(q)), partition_(std::move(p)) {
  if (!quiver_.has_framing_layout())
    throw InvalidInput("partitioned ice quivers must carry one frozen copy per mutable vertex");
  if (partition_.n_mutable() != quiver_.n_mutable())
    throw InvalidInput("partition size does not match the quiver");
}

PartitionedIceQuiver mutate(const PartitionedIceQuiver& pq, Vertex k) {
  return PartitionedIceQuiver(mutate(pq.quiver(), k), pq.partition());
}

bool is_bridging(const PartitionedIceQuiver& pq, Vertex i, Vertex j) {
  return pq.block_of(i) != pq.block_of(j);
}

bool is_component_preserving(const PartitionedIceQuiver& pq, Vertex k) {
  const Quiver& q = pq.quiver();
  if (k >= q.n_mutable()) throw InvalidInput("component preservation is defined for mutable vertices");
  const Color c = vertex_color(q, k);
  const std::size_t home = pq.block_of(k);
  for (Vertex a = 0; a < q.n_mutable(); ++a) {
    // Green: constrain a -> k. Red: constrain k -> a.
    const bool relevant = c == Color::Green ? q(a, k) > 0 : q(k, a) > 0;
    if (relevant && pq.block_of(a) != home) return false;
  }
  return true;
}

namespace {

bool components_commute(const Quiver& before, const Quiver& after, const VertexPartition& p,
                        Vertex k) {
  for (std::size_t i = 0; i < p.block_count(); ++i) {
    const auto blk = extended_block(before, p, i);
    const Restriction lhs = restrict_to(after, blk);
    Restriction rhs = restrict_to(before, blk);
    if (p.block_of(k) == i) {
      const auto pos = std::find(rhs.vertex_map.begin(), rhs.vertex_map.end(), k);
      rhs.quiver = mutate(rhs.quiver, static_cast<Vertex>(pos - rhs.vertex_map.begin()));
    }
    if (!(lhs.quiver == rhs.quiver)) return false;
  }
  return true;
}

} // namespace

CpReport verify_cp_sequence(const PartitionedIceQuiver& pq, const MutationSequence& seq,
                            bool check_components) {
  CpReport report;
  report.lemma_mu_checked = check_components;
  Quiver cur = pq.quiver();
  for (std::size_t t = 0; t < seq.size(); ++t) {
    const Vertex k = seq[t];
    if (k >= cur.n_mutable())
      throw InvalidInput("step " + std::to_string(t + 1) + ": vertex is not mutable");
    if (!is_component_preserving(PartitionedIceQuiver(cur, pq.partition()), k)) {
      report.first_violation = CpViolation{t, k, ViolationKind::NotComponentPreserving};
      return report;
    }
    Quiver next = mutate(cur, k);
    if (check_components && !components_commute(cur, next, pq.partition(), k)) {
      report.first_violation = CpViolation{t, k, ViolationKind::ComponentMismatch};
      return report;
    }
    cur = std::move(next);
    ++report.steps_checked;
  }
  report.all_cp = true;
  return report;
}

std::string to_report(const Quiver& q, const CpReport& report) {
  std::ostringstream os;
  os << "all_cp: " << (report.all_cp ? "true" : "false") << '\n';
  os << "steps_checked: " << report.steps_checked << '\n';
  os << "lemma_mu_checked: " << (report.lemma_mu_checked ? "true" : "false") << '\n';
  if (report.first_violation) {
    const auto& v = *report.first_violation;
    os << "first_violation_step: " << v.step + 1 << '\n';
    os << "first_violation_vertex: " << q.vertex_name(v.vertex) << '\n';
    os << "first_violation_kind: "
       << (v.kind == ViolationKind::NotComponentPreserving ? "not-component-preserving"
                                                           : "component-mismatch")
       << '\n';
  }
  return os.str();
}

ShuffleProblem::ShuffleProblem(Quiver base_, VertexPartition partition_,
                               std::vector<MutationSequence> sequences)
    : base(std::move(base_)), partition(std::move(partition_)),
      component_sequences(std::move(sequences)) {
  if (base.n_frozen() != 0) throw InvalidInput("shuffle problems take an unframed base quiver");
  if (partition.n_mutable() != base.n_mutable())
    throw InvalidInput("partition size does not match the quiver");
  if (component_sequences.size() != partition.block_count())
    throw InvalidInput("need exactly one component sequence per block");
  for (std::size_t i = 0; i < component_sequences.size(); ++i)
    for (Vertex v : component_sequences[i])
      if (v >= base.n_mutable() || partition.block_of(v) != i)
        throw InvalidInput("component sequence " + std::to_string(i + 1) +
                           " uses a vertex outside its block");
}

std::string_view to_string(Conclusion c) {
  switch (c) {
  case Conclusion::MaximalGreen: return "maximal-green";
  case Conclusion::Reddening: return "reddening";
  case Conclusion::None: break;
  }
  return "none";
}

ShuffleReport cp_shuffle_verify(const ShuffleProblem& problem, const MutationSequence& tau) {
  ShuffleReport report;
  const auto& p = problem.partition;

  std::vector<std::size_t> pos(p.block_count(), 0);
  report.is_shuffle = true;
  for (std::size_t t = 0; t < tau.size(); ++t) {
    const Vertex v = tau[t];
    if (v >= problem.base.n_mutable())
      throw InvalidInput("step " + std::to_string(t + 1) + ": vertex is not mutable");
    const std::size_t b = p.block_of(v);
    const auto& sigma = problem.component_sequences[b];
    if (pos[b] >= sigma.size() || sigma[pos[b]] != v) {
      report.is_shuffle = false;
      report.order_violation = t;
      break;
    }
    ++pos[b];
  }
  if (report.is_shuffle) {
    for (std::size_t b = 0; b < p.block_count(); ++b)
      if (pos[b] != problem.component_sequences[b].size()) {
        report.is_shuffle = false;
        report.order_violation = tau.size();
        break;
      }
  }

  report.cp = verify_cp_sequence(PartitionedIceQuiver(problem.base, p), tau);

  bool all_mgs = true, all_red = true;
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    const Restriction r = restrict_to(problem.base, p.block(b));
    MutationSequence local;
    for (Vertex v : problem.component_sequences[b]) {
      const auto it = std::find(r.vertex_map.begin(), r.vertex_map.end(), v);
      local.push_back(static_cast<Vertex>(it - r.vertex_map.begin()));
    }
    report.components.push_back(verify_sequence(r.quiver, local));
    all_mgs = all_mgs && report.components.back().is_maximal_green;
    all_red = all_red && report.components.back().is_reddening;
  }

  if (report.is_shuffle && report.cp.all_cp)
    report.conclusion = all_mgs ? Conclusion::MaximalGreen
                                : all_red ? Conclusion::Reddening : Conclusion::None;

  report.whole = verify_sequence(problem.base, tau);
  if ((report.conclusion == Conclusion::MaximalGreen && !report.whole.is_maximal_green) ||
      (report.conclusion == Conclusion::Reddening && !report.whole.is_reddening))
    throw InternalError("component preserving shuffle of " + format_sequence(problem.base, tau) +
                        " failed direct verification");
  return report;
}

std::string to_report(const Quiver& q, const ShuffleReport& report) {
  std::ostringstream os;
  os << "is_shuffle: " << (report.is_shuffle ? "true" : "false") << '\n';
  if (report.order_violation) os << "order_violation_step: " << *report.order_violation + 1 << '\n';
  os << to_report(q, report.cp);
  for (std::size_t b = 0; b < report.components.size(); ++b) {
    const auto& c = report.components[b];
    os << "component_" << b + 1 << ": "
       << (c.is_maximal_green ? "maximal green" : c.is_reddening ? "reddening" : "not reddening")
       << '\n';
  }
  os << "conclusion: " << to_string(report.conclusion) << '\n';
  os << "direct_is_reddening: " << (report.whole.is_reddening ? "true" : "false") << '\n';
  os << "direct_is_maximal_green: " << (report.whole.is_maximal_green ? "true" : "false") << '\n';
  return os.str();
}

std::string_view to_string(SearchStatus s) {
  switch (s) {
  case SearchStatus::Found: return "found";
  case SearchStatus::BudgetExhausted: return "budget-exhausted";
  case SearchStatus::NotFound: break;
  }
  return "not-found";
}

ShuffleSearchResult shuffle_search(const ShuffleProblem& problem, std::size_t node_budget) {
  const auto& p = problem.partition;
  const auto& sigmas = problem.component_sequences;
  std::size_t total = 0;
  for (const auto& s : sigmas) total += s.size();

  ShuffleSearchResult result;
  std::vector<std::size_t> pos(p.block_count(), 0);
  MutationSequence path;
  bool exhausted = false;

  std::function<bool(const Quiver&)> dfs = [&](const Quiver& cur) -> bool {
    if (path.size() == total) return true;
    if (result.nodes >= node_budget) {
      exhausted = true;
      return false;
    }
    ++result.nodes;
    for (std::size_t b = 0; b < p.block_count(); ++b) {
      if (pos[b] == sigmas[b].size()) continue;
      const Vertex k = sigmas[b][pos[b]];
      if (!is_component_preserving(PartitionedIceQuiver(cur, p), k)) continue;
      ++pos[b];
      path.push_back(k);
      if (dfs(mutate(cur, k))) return true;
      path.pop_back();
      --pos[b];
      if (exhausted) return false;
    }
    return false;
  };

  if (dfs(framed(problem.base))) {
    result.status = SearchStatus::Found;
    result.sequence = path;
  } else {
    result.status = exhausted ? SearchStatus::BudgetExhausted : SearchStatus::NotFound;
  }
  return result;
}

std::string to_report(const Quiver& q, const ShuffleSearchResult& result) {
  std::ostringstream os;
  os << "status: " << to_string(result.status) << '\n';
  if (result.sequence) os << "sequence: " << format_sequence(q, *result.sequence) << '\n';
  os << "nodes: " << result.nodes << '\n';
  return os.str();
}

MutationSequence admissible_source_sequence(const Quiver& q) {
  if (q.n_frozen() != 0) throw InvalidInput("admissible numbering expects an unframed quiver");
  const std::size_t n = q.n_mutable();

  // Kahn's algorithm detects oriented cycles.
  std::vector<std::size_t> indeg(n, 0);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (q(i, j) > 0) ++indeg[j];
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++seen;
    for (Vertex j = 0; j < n; ++j)
      if (q(v, j) > 0 && --indeg[j] == 0) ready.push_back(j);
  }
  if (seen != n) throw InvalidInput("quiver has an oriented cycle; no admissible numbering");

  MutationSequence seq;
  std::vector<bool> done(n, false);
  Quiver cur = q;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = n;
    for (Vertex v = 0; v < n && pick == n; ++v) {
      if (done[v]) continue;
      bool source = true;
      for (Vertex a = 0; a < n && source; ++a) source = !(cur(a, v) > 0);
      if (source) pick = v;
    }
    if (pick == n) throw InternalError("acyclic quiver ran out of sources");
    done[pick] = true;
    seq.push_back(pick);
    cur = mutate(cur, pick);
  }
  return seq;
}

} // namespace greenseq
