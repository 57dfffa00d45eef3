#include "greenseq/dominance.hpp"

#include <sstream>

#include "greenseq/errors.hpp"

namespace greenseq {

namespace {

std::pair<std::size_t, std::size_t> key(std::size_t i, std::size_t j) {
  return i < j ? std::pair{i, j} : std::pair{j, i};
}

const Integer& one() {
  static const Integer value = 1;
  return value;
}

void require_same_shape(const Quiver& b, const Quiver& a) {
  if (a.n_mutable() != b.n_mutable() || a.n_frozen() != b.n_frozen())
    throw InvalidInput("dominance compares quivers on the same vertex set");
}

} // namespace

const Integer& DominanceConstants::get(std::size_t i, std::size_t j) const {
  const auto it = d_.find(key(i, j));
  return it == d_.end() ? one() : it->second;
}

void DominanceConstants::set(std::size_t i, std::size_t j, Integer d) {
  if (i == j) throw InvalidInput("dominance constants are indexed by distinct blocks");
  if (d < 1) throw InvalidInput("dominance constants must be positive integers");
  d_[key(i, j)] = std::move(d);
}

DominanceConstants DominanceConstants::operator*(const DominanceConstants& other) const {
  DominanceConstants out = *this;
  for (const auto& [k, v] : other.d_) out.d_[k] = get(k.first, k.second) * v;
  return out;
}

bool operator==(const DominanceConstants& a, const DominanceConstants& b) {
  for (const auto& [k, v] : a.d_)
    if (b.get(k.first, k.second) != v) return false;
  for (const auto& [k, v] : b.d_)
    if (a.get(k.first, k.second) != v) return false;
  return true;
}

bool dominates(const Quiver& b, const Quiver& a) {
  require_same_shape(b, a);
  for (Vertex i = 0; i < a.size(); ++i)
    for (Vertex j = i + 1; j < a.size(); ++j) {
      const Integer& x = b(i, j);
      const Integer& y = a(i, j);
      if (x * y < 0 || abs(x) < abs(y)) return false;
    }
  return true;
}

std::optional<DominanceConstants> pi_dominates(const Quiver& b, const Quiver& a,
                                               const VertexPartition& p) {
  require_same_shape(b, a);
  DominanceConstants d;
  std::map<std::pair<std::size_t, std::size_t>, bool> fixed;
  for (Vertex u = 0; u < a.size(); ++u)
    for (Vertex v = u + 1; v < a.size(); ++v) {
      const std::size_t bu = extended_block_of(a, p, u), bv = extended_block_of(a, p, v);
      const Integer& x = b(u, v);
      const Integer& y = a(u, v);
      if (bu == bv) {
        if (x != y) return std::nullopt;
        continue;
      }
      if (y == 0) {
        if (x != 0) return std::nullopt;
        continue;
      }
      if (x % y != 0) return std::nullopt;
      const Integer ratio = x / y;
      if (ratio < 1) return std::nullopt;
      auto& seen = fixed[key(bu, bv)];
      if (seen) {
        if (d.get(bu, bv) != ratio) return std::nullopt;
      } else {
        d.set(bu, bv, ratio);
        seen = true;
      }
    }
  return d;
}

bool pi_dominates_with(const Quiver& b, const Quiver& a, const VertexPartition& p,
                       const DominanceConstants& d) {
  require_same_shape(b, a);
  for (Vertex u = 0; u < a.size(); ++u)
    for (Vertex v = u + 1; v < a.size(); ++v) {
      const std::size_t bu = extended_block_of(a, p, u), bv = extended_block_of(a, p, v);
      const Integer expected = bu == bv ? a(u, v) : a(u, v) * d.get(bu, bv);
      if (b(u, v) != expected) return false;
    }
  return true;
}

Quiver scale_bridging(const Quiver& a, const VertexPartition& p, const DominanceConstants& d) {
  if (p.n_mutable() != a.n_mutable()) throw InvalidInput("partition size does not match the quiver");
  Quiver out = a;
  for (Vertex u = 0; u < a.n_mutable(); ++u)
    for (Vertex v = u + 1; v < a.n_mutable(); ++v) {
      const std::size_t bu = p.block_of(u), bv = p.block_of(v);
      if (bu != bv && a(u, v) != 0) out.set(u, v, a(u, v) * d.get(bu, bv));
    }
  return out;
}

TransferReport transfer_check(const Quiver& a, const VertexPartition& p,
                              const DominanceConstants& d, const MutationSequence& tau) {
  if (a.n_frozen() != 0) throw InvalidInput("transfer_check expects an unframed quiver");
  const Quiver b = scale_bridging(a, p, d);
  TransferReport report;

  Quiver qa = framed(a), qb = framed(b);
  if (!pi_dominates_with(qb, qa, p, d))
    throw InternalError("scaled quiver does not pi-dominate its source");
  for (std::size_t t = 0; t < tau.size(); ++t) {
    const Vertex k = tau[t];
    if (k >= a.n_mutable())
      throw InvalidInput("step " + std::to_string(t + 1) + ": vertex is not mutable");
    if (!is_component_preserving(PartitionedIceQuiver(qa, p), k))
      throw InvalidInput("step " + std::to_string(t + 1) + ": vertex " + a.vertex_name(k) +
                         " is not component preserving");
    qa = mutate(qa, k);
    qb = mutate(qb, k);
    if (!pi_dominates_with(qb, qa, p, d))
      throw InternalError("pi-dominance lost after step " + std::to_string(t + 1));
  }
  report.stepwise_dominance = true;

  report.on_a = verify_sequence(a, tau);
  report.on_b = verify_sequence(b, tau);
  if (report.on_a.is_reddening && !report.on_b.is_reddening)
    throw InternalError("reddening sequence did not transfer to the dominating quiver");
  if (report.on_a.is_maximal_green && !report.on_b.is_maximal_green)
    throw InternalError("maximal green sequence did not transfer to the dominating quiver");
  report.reddening_transfers = report.on_a.is_reddening;
  report.maximal_green_transfers = report.on_a.is_maximal_green;
  return report;
}

std::string to_report(const Quiver& q, const TransferReport& report) {
  std::ostringstream os;
  os << "sequence: " << format_sequence(q, report.on_a.sequence) << '\n';
  os << "stepwise_pi_dominance: " << (report.stepwise_dominance ? "true" : "false") << '\n';
  os << "source_is_reddening: " << (report.on_a.is_reddening ? "true" : "false") << '\n';
  os << "source_is_maximal_green: " << (report.on_a.is_maximal_green ? "true" : "false") << '\n';
  os << "scaled_is_reddening: " << (report.on_b.is_reddening ? "true" : "false") << '\n';
  os << "scaled_is_maximal_green: " << (report.on_b.is_maximal_green ? "true" : "false") << '\n';
  return os.str();
}

std::string dominance_report(const Quiver& b, const Quiver& a, const VertexPartition* p) {
  std::ostringstream os;
  os << "dominates: " << (dominates(b, a) ? "true" : "false") << '\n';
  if (!p) return os.str();
  const auto d = pi_dominates(b, a, *p);
  os << "pi_dominates: " << (d ? "true" : "false") << '\n';
  if (d)
    for (std::size_t i = 0; i < p->block_count(); ++i)
      for (std::size_t j = i + 1; j < p->block_count(); ++j)
        os << "d_" << i + 1 << "_" << j + 1 << ": " << d->get(i, j) << '\n';
  return os.str();
}

} // namespace greenseq
