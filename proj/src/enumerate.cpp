#include "greenseq/enumerate.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "greenseq/errors.hpp"

namespace greenseq {

namespace {

std::size_t state_hash(const Quiver& q) {
  std::size_t h = q.size();
  for (Vertex i = 0; i < q.size(); ++i)
    for (Vertex j = i + 1; j < q.size(); ++j) {
      const auto x = static_cast<long long>(q(i, j) % 1000003);
      h ^= std::hash<long long>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
  return h;
}

// Green-move DFS with per-path state deduplication. `on_mgs` returns false to
// stop the whole search.
class GreenWalker {
public:
  GreenWalker(std::size_t max_len, std::function<bool(const MutationSequence&)> on_mgs)
      : max_len_(max_len), on_mgs_(std::move(on_mgs)) {}

  void run(const Quiver& q) {
    const Quiver root = framed(q);
    enter(root);
    walk(root);
  }

  bool complete() const { return complete_; }
  std::size_t nodes() const { return nodes_; }

private:
  bool on_path(const Quiver& q, std::size_t h) const {
    const auto [lo, hi] = seen_.equal_range(h);
    for (auto it = lo; it != hi; ++it)
      if (states_[it->second] == q) return true;
    return false;
  }

  void enter(const Quiver& q) {
    const std::size_t h = state_hash(q);
    seen_.emplace(h, states_.size());
    states_.push_back(q);
    hashes_.push_back(h);
  }

  void leave() {
    const auto [lo, hi] = seen_.equal_range(hashes_.back());
    for (auto it = lo; it != hi; ++it)
      if (it->second == states_.size() - 1) {
        seen_.erase(it);
        break;
      }
    states_.pop_back();
    hashes_.pop_back();
  }

  void walk(const Quiver& cur) {
    if (stopped_) return;
    ++nodes_;
    std::vector<Vertex> green;
    for (Vertex k = 0; k < cur.n_mutable(); ++k)
      if (vertex_color(cur, k) == Color::Green) green.push_back(k);
    if (green.empty()) {
      if (!on_mgs_(path_)) stopped_ = true;
      return;
    }
    if (path_.size() >= max_len_) {
      complete_ = false;
      return;
    }
    for (Vertex k : green) {
      Quiver next = mutate(cur, k);
      if (on_path(next, state_hash(next))) continue;
      path_.push_back(k);
      enter(next);
      walk(next);
      leave();
      path_.pop_back();
      if (stopped_) return;
    }
  }

  std::size_t max_len_;
  std::function<bool(const MutationSequence&)> on_mgs_;
  MutationSequence path_;
  std::vector<Quiver> states_;
  std::vector<std::size_t> hashes_;
  std::unordered_multimap<std::size_t, std::size_t> seen_;
  bool complete_ = true;
  bool stopped_ = false;
  std::size_t nodes_ = 0;
};

void require_unframed(const Quiver& q) {
  if (q.n_frozen() != 0) throw InvalidInput("search expects a quiver without frozen vertices");
}

} // namespace

bool enumerate_mgs(const Quiver& q, std::size_t max_len,
                   const std::function<void(const MutationSequence&)>& visit, std::size_t* nodes) {
  require_unframed(q);
  GreenWalker walker(max_len, [&](const MutationSequence& s) {
    visit(s);
    return true;
  });
  walker.run(q);
  if (nodes) *nodes = walker.nodes();
  return walker.complete();
}

EnumerationResult enumerate_mgs(const Quiver& q, std::size_t max_len) {
  EnumerationResult r;
  r.complete = enumerate_mgs(
      q, max_len, [&](const MutationSequence& s) { r.sequences.push_back(s); }, &r.nodes);
  return r;
}

CountResult count_mgs(const Quiver& q, std::size_t max_len) {
  CountResult r;
  r.complete = enumerate_mgs(q, max_len, [&](const MutationSequence&) { ++r.count; });
  return r;
}

std::string to_report(const CountResult& r) {
  return std::to_string(r.count) + (r.complete ? " complete\n" : " truncated\n");
}

Integer fibonacci(std::size_t n) {
  if (n == 0) throw InvalidInput("fibonacci is indexed from 1");
  Integer a = 1, b = 2; // F_1, F_2
  for (std::size_t i = 1; i < n; ++i) {
    Integer c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

Quiver linear_an(std::size_t n) {
  if (n == 0) throw InvalidInput("A_n needs n >= 1");
  Quiver q(n, 0);
  for (Vertex i = 0; i + 1 < n; ++i) q.set(i, i + 1, 1);
  return q;
}

Quiver cycle_quiver(std::size_t n) {
  if (n < 3) throw InvalidInput("an oriented cycle needs at least 3 vertices");
  Quiver q(n, 0);
  for (Vertex i = 0; i < n; ++i) q.set(i, (i + 1) % n, 1);
  return q;
}

MutationSequence long_sequence(std::size_t n) {
  if (n == 0) throw InvalidInput("the long sequence needs n >= 1");
  MutationSequence s;
  for (std::size_t stop = 0; stop < n; ++stop)
    for (std::size_t v = n; v > stop; --v) s.push_back(v - 1);
  return s;
}

MinLengthResult min_length_mgs(const Quiver& q, std::size_t hard_cap) {
  require_unframed(q);
  MinLengthResult r;
  for (std::size_t depth = q.n_mutable(); depth <= hard_cap; ++depth) {
    GreenWalker walker(depth, [&](const MutationSequence& s) {
      r.witness = s;
      return false;
    });
    walker.run(q);
    r.nodes += walker.nodes();
    if (r.witness) {
      r.complete = true;
      return r;
    }
    if (walker.complete()) {
      r.complete = true; // the green tree is finite and has no maximal green leaf
      return r;
    }
  }
  return r;
}

std::string to_report(const Quiver& q, const MinLengthResult& r) {
  std::ostringstream os;
  if (r.witness) {
    os << "length: " << r.witness->size() << '\n';
    os << "witness: " << format_sequence(q, *r.witness) << '\n';
  } else {
    os << "length: none\n";
  }
  os << "complete: " << (r.complete ? "true" : "false") << '\n';
  os << "nodes: " << r.nodes << '\n';
  return os.str();
}

CompositionalResult compositional_min_mgs(const ShuffleProblem& problem, std::size_t node_budget) {
  CompositionalResult r;
  const auto& p = problem.partition;
  for (std::size_t i = 0; i < p.block_count(); ++i) {
    const auto& members = p.block(i);
    const Restriction local = restrict_to(problem.base, members);
    MutationSequence local_seq;
    for (Vertex k : problem.component_sequences[i])
      local_seq.push_back(
          static_cast<Vertex>(std::find(members.begin(), members.end(), k) - members.begin()));
    const std::string where = "block " + std::to_string(i + 1);
    if (!verify_sequence(local.quiver, local_seq).is_maximal_green)
      throw InvalidInput(where + ": sequence is not a maximal green sequence of its component");
    if (local_seq.size() > members.size()) {
      const MinLengthResult shorter = min_length_mgs(local.quiver, local_seq.size() - 1);
      if (shorter.witness)
        throw InvalidInput(where + ": a shorter maximal green sequence exists, " +
                           format_sequence(local.quiver, *shorter.witness));
    }
    r.component_lengths.push_back(local_seq.size());
  }

  const ShuffleSearchResult found = shuffle_search(problem, node_budget);
  r.search_nodes = found.nodes;
  if (found.status != SearchStatus::Found)
    throw InvalidInput("no component preserving shuffle: " + std::string(to_string(found.status)));
  const ShuffleReport check = cp_shuffle_verify(problem, *found.sequence);
  if (check.conclusion != Conclusion::MaximalGreen)
    throw InternalError("shuffle of minimal sequences is not maximal green");
  r.witness = *found.sequence;
  return r;
}

std::string to_report(const Quiver& q, const CompositionalResult& r) {
  std::ostringstream os;
  os << "length: " << r.witness.size() << '\n';
  os << "witness: " << format_sequence(q, r.witness) << '\n';
  os << "component_lengths:";
  for (auto n : r.component_lengths) os << ' ' << n;
  os << '\n';
  os << "search_nodes: " << r.search_nodes << '\n';
  return os.str();
}

} // namespace greenseq
