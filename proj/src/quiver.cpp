#include "greenseq/quiver.hpp"

#include <algorithm>
#include <sstream>

#include "greenseq/errors.hpp"

namespace greenseq {

std::string_view to_string(Color c) { return c == Color::Green ? "green" : "red"; }

Quiver::Quiver(std::size_t n_mutable, std::size_t n_frozen)
    : n_mutable_(n_mutable), n_frozen_(n_frozen),
      b_((n_mutable + n_frozen) * (n_mutable + n_frozen)) {}

void Quiver::set(Vertex i, Vertex j, const Integer& m) {
  b_[i * size() + j] = m;
  b_[j * size() + i] = -m;
}

Quiver Quiver::from_arrows(std::size_t n_mutable, std::size_t n_frozen,
                           std::span<const Arrow> arrows) {
  Quiver q(n_mutable, n_frozen);
  for (const auto& a : arrows) {
    if (a.source >= q.size() || a.target >= q.size())
      throw InvalidInput("arrow endpoint out of range");
    if (a.source == a.target)
      throw InvalidInput("loop at vertex " + std::to_string(a.source + 1));
    if (a.multiplicity <= 0)
      throw InvalidInput("arrow multiplicity must be positive");
    if (q.is_frozen(a.source) && q.is_frozen(a.target))
      throw InvalidInput("arrow between frozen vertices " + std::to_string(a.source + 1) +
                         " and " + std::to_string(a.target + 1));
    const Integer& current = q(a.source, a.target);
    if (current < 0)
      throw InvalidInput("arrows listed in both directions between " +
                         std::to_string(a.source + 1) + " and " + std::to_string(a.target + 1));
    q.set(a.source, a.target, current + a.multiplicity);
  }
  return q;
}

std::vector<Arrow> Quiver::arrows() const {
  std::vector<Arrow> out;
  for (Vertex i = 0; i < size(); ++i)
    for (Vertex j = 0; j < size(); ++j)
      if ((*this)(i, j) > 0) out.push_back({i, j, (*this)(i, j)});
  return out;
}

Quiver Quiver::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != size())
    throw InvalidInput("expected " + std::to_string(size()) + " labels, got " +
                       std::to_string(labels.size()));
  Quiver q = *this;
  q.labels_ = std::move(labels);
  return q;
}

std::string Quiver::vertex_name(Vertex v) const {
  if (!labels_.empty()) return labels_[v];
  if (has_framing_layout() && is_frozen(v)) return std::to_string(v - n_mutable_ + 1) + "'";
  return std::to_string(v + 1);
}

std::optional<Vertex> Quiver::find_vertex(std::string_view name) const {
  for (Vertex v = 0; v < size(); ++v)
    if (vertex_name(v) == name) return v;
  // Frozen copies of an unlabeled quiver also answer to their plain index.
  if (labels_.empty() && !name.empty() && name.find_first_not_of("0123456789") == std::string_view::npos &&
      name.size() < 10) {
    const std::size_t i = std::stoul(std::string(name));
    if (i >= 1 && i <= size()) return i - 1;
  }
  return std::nullopt;
}

Quiver framed(const Quiver& q) {
  if (q.n_frozen() != 0) throw InvalidInput("framed() expects a quiver without frozen vertices");
  const std::size_t n = q.n_mutable();
  Quiver out(n, n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) out.set(i, j, q(i, j));
    out.set(i, i + n, 1);
  }
  if (!q.labels().empty()) {
    std::vector<std::string> labels = q.labels();
    for (Vertex i = 0; i < n; ++i) labels.push_back(q.labels()[i] + "'");
    out = out.with_labels(std::move(labels));
  }
  return out;
}

Quiver mutate(const Quiver& q, Vertex k) {
  if (k >= q.size()) throw InvalidInput("vertex " + std::to_string(k + 1) + " out of range");
  if (q.is_frozen(k))
    throw InvalidInput("mutation at frozen vertex " + q.vertex_name(k) + " is not allowed");
  Quiver out = q;
  const std::size_t n = q.size();
  for (Vertex i = 0; i < n; ++i) {
    if (i == k) continue;
    const Integer& bik = q(i, k);
    if (bik == 0) continue;
    for (Vertex j = i + 1; j < n; ++j) {
      if (j == k) continue;
      if (q.is_frozen(i) && q.is_frozen(j)) continue;
      const Integer& bkj = q(k, j);
      if (bik > 0 && bkj > 0)
        out.set(i, j, q(i, j) + bik * bkj);
      else if (bik < 0 && bkj < 0)
        out.set(i, j, q(i, j) - bik * bkj);
    }
  }
  for (Vertex i = 0; i < n; ++i)
    if (i != k) out.set(i, k, -q(i, k));
  return out;
}

Quiver apply_sequence(const Quiver& q, const MutationSequence& seq) {
  Quiver cur = q;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    try {
      cur = mutate(cur, seq[t]);
    } catch (const InvalidInput& e) {
      throw InvalidInput("step " + std::to_string(t + 1) + ": " + e.what());
    }
  }
  return cur;
}

CVector c_vector(const Quiver& q, Vertex i) {
  if (!q.has_framing_layout())
    throw InvalidInput("c-vectors need a quiver reached from a framed quiver");
  if (i >= q.n_mutable()) throw InvalidInput("c-vector requested for a frozen vertex");
  const std::size_t n = q.n_mutable();
  CVector c(n);
  bool pos = false, neg = false;
  for (Vertex j = 0; j < n; ++j) {
    c[j] = q(i, j + n);
    pos = pos || c[j] > 0;
    neg = neg || c[j] < 0;
  }
  if (pos == neg)
    throw SignCoherenceError("c-vector of vertex " + q.vertex_name(i) +
                             (pos ? " has mixed signs" : " is zero"));
  return c;
}

Color vertex_color(const Quiver& q, Vertex i) {
  const CVector c = c_vector(q, i);
  return std::any_of(c.begin(), c.end(), [](const Integer& x) { return x > 0; }) ? Color::Green
                                                                                  : Color::Red;
}

bool all_red(const Quiver& q) {
  for (Vertex i = 0; i < q.n_mutable(); ++i)
    if (vertex_color(q, i) == Color::Green) return false;
  return true;
}

SequenceReport verify_sequence(const Quiver& q, const MutationSequence& seq) {
  SequenceReport report;
  report.sequence = seq;
  Quiver cur = framed(q);
  bool green_only = true;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    if (seq[t] >= cur.n_mutable())
      throw InvalidInput("step " + std::to_string(t + 1) + ": vertex " +
                         std::to_string(seq[t] + 1) + " is not mutable");
    const Color c = vertex_color(cur, seq[t]);
    report.step_colors.push_back(c);
    green_only = green_only && c == Color::Green;
    cur = mutate(cur, seq[t]);
  }
  report.is_reddening = all_red(cur);
  report.is_maximal_green = report.is_reddening && green_only;
  return report;
}

std::string to_report(const Quiver& q, const SequenceReport& report) {
  std::ostringstream os;
  os << "sequence: " << format_sequence(q, report.sequence) << '\n';
  os << "length: " << report.sequence.size() << '\n';
  os << "step_colors:";
  for (Color c : report.step_colors) os << ' ' << to_string(c);
  os << '\n';
  os << "is_reddening: " << (report.is_reddening ? "true" : "false") << '\n';
  os << "is_maximal_green: " << (report.is_maximal_green ? "true" : "false") << '\n';
  os << "verdict: "
     << (report.is_maximal_green ? "maximal green"
                                 : report.is_reddening ? "reddening" : "not reddening")
     << '\n';
  return os.str();
}

Restriction restrict_to(const Quiver& q, std::span<const Vertex> vertices) {
  if (vertices.empty()) throw InvalidInput("cannot restrict to an empty vertex set");
  std::vector<Vertex> mut, fro;
  for (Vertex v : vertices) {
    if (v >= q.size()) throw InvalidInput("vertex out of range in restriction");
    (q.is_frozen(v) ? fro : mut).push_back(v);
  }
  std::sort(mut.begin(), mut.end());
  std::sort(fro.begin(), fro.end());
  if (std::adjacent_find(mut.begin(), mut.end()) != mut.end() ||
      std::adjacent_find(fro.begin(), fro.end()) != fro.end())
    throw InvalidInput("duplicate vertex in restriction");

  Restriction r{Quiver(mut.size(), fro.size()), mut};
  r.vertex_map.insert(r.vertex_map.end(), fro.begin(), fro.end());
  const std::size_t m = r.vertex_map.size();
  std::vector<std::string> labels;
  for (Vertex a = 0; a < m; ++a) {
    labels.push_back(q.vertex_name(r.vertex_map[a]));
    for (Vertex b = a + 1; b < m; ++b) r.quiver.set(a, b, q(r.vertex_map[a], r.vertex_map[b]));
  }
  r.quiver = r.quiver.with_labels(std::move(labels));
  return r;
}

Quiver direct_sum(const Quiver& a, const Quiver& b, std::span<const Arrow> bridges) {
  if (a.n_frozen() != 0 || b.n_frozen() != 0)
    throw InvalidInput("direct_sum expects quivers without frozen vertices");
  const std::size_t na = a.size(), nb = b.size();
  Quiver q(na + nb, 0);
  for (Vertex i = 0; i < na; ++i)
    for (Vertex j = i + 1; j < na; ++j) q.set(i, j, a(i, j));
  for (Vertex i = 0; i < nb; ++i)
    for (Vertex j = i + 1; j < nb; ++j) q.set(na + i, na + j, b(i, j));
  for (const auto& e : bridges) {
    if (e.source >= na || e.target < na || e.target >= na + nb)
      throw InvalidInput("bridging arrow " + std::to_string(e.source + 1) + " -> " +
                         std::to_string(e.target + 1) + " does not run from A to B");
    if (e.multiplicity <= 0) throw InvalidInput("arrow multiplicity must be positive");
    q.set(e.source, e.target, q(e.source, e.target) + e.multiplicity);
  }
  if (!a.labels().empty() || !b.labels().empty()) {
    std::vector<std::string> labels;
    for (Vertex i = 0; i < na; ++i) labels.push_back(a.vertex_name(i));
    for (Vertex i = 0; i < nb; ++i) labels.push_back(b.vertex_name(i));
    q = q.with_labels(std::move(labels));
  }
  return q;
}

Quiver opposite(const Quiver& q) {
  Quiver out = q;
  for (Vertex i = 0; i < q.size(); ++i)
    for (Vertex j = i + 1; j < q.size(); ++j) out.set(i, j, -q(i, j));
  return out;
}

std::string format_sequence(const Quiver& q, const MutationSequence& seq) {
  std::string out;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    if (t) out += ' ';
    out += seq[t] < q.size() ? q.vertex_name(seq[t]) : std::to_string(seq[t] + 1);
  }
  return out;
}

MutationSequence one_based(std::initializer_list<std::size_t> vertices) {
  MutationSequence seq;
  for (std::size_t v : vertices) {
    if (v == 0) throw InvalidInput("vertex numbers are 1-based");
    seq.push_back(v - 1);
  }
  return seq;
}

} // namespace greenseq
