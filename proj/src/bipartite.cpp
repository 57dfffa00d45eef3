#include "greenseq/bipartite.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "greenseq/errors.hpp"

namespace greenseq {

std::vector<Vertex> Bipartition::vertices(Side s) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < color.size(); ++v)
    if (color[v] == s) out.push_back(v);
  return out;
}

Bipartition Bipartition::swapped() const {
  Bipartition out = *this;
  for (auto& c : out.color) c = c == Side::White ? Side::Black : Side::White;
  return out;
}

namespace {

void require_unframed(const Quiver& q, const char* what) {
  if (q.n_frozen() != 0) throw InvalidInput(std::string(what) + " expects a quiver without frozen vertices");
}

void require_valid(const Quiver& q, const Bipartition& eps) {
  if (eps.color.size() != q.size()) throw InvalidInput("bipartition size does not match the quiver");
  for (Vertex i = 0; i < q.size(); ++i)
    for (Vertex j = i + 1; j < q.size(); ++j)
      if (q(i, j) != 0 && eps.color[i] == eps.color[j])
        throw InvalidInput("arrow between " + q.vertex_name(i) + " and " + q.vertex_name(j) +
                           " joins two vertices of the same color");
}

Quiver mutate_all(const Quiver& q, std::vector<Vertex> vs, bool descending) {
  if (descending) std::reverse(vs.begin(), vs.end());
  return apply_sequence(q, vs);
}

Multigraph underlying(const Quiver& q) {
  Multigraph g(q.size());
  for (Vertex i = 0; i < q.size(); ++i)
    for (Vertex j = 0; j < q.size(); ++j) g.adj[i][j] = abs(q(i, j));
  return g;
}

} // namespace

std::optional<Bipartition> bipartition_of(const Quiver& q) {
  const std::size_t n = q.size();
  std::vector<int> col(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (col[root] != -1) continue;
    col[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w = 0; w < n; ++w) {
        if (q(v, w) == 0) continue;
        if (col[w] == -1) {
          col[w] = 1 - col[v];
          queue.push_back(w);
        } else if (col[w] == col[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition eps;
  for (int c : col) eps.color.push_back(c == 0 ? Side::White : Side::Black);
  return eps;
}

bool Multigraph::has_edges() const {
  for (const auto& row : adj)
    for (const auto& x : row)
      if (x != 0) return true;
  return false;
}

std::vector<std::vector<Vertex>> Multigraph::components() const {
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp;
    std::deque<Vertex> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (Vertex w = 0; w < n; ++w)
        if (adj[v][w] != 0 && !seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Multigraph Multigraph::induced(const std::vector<Vertex>& vertices) const {
  Multigraph g(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = 0; b < vertices.size(); ++b) g.adj[a][b] = adj[vertices[a]][vertices[b]];
  return g;
}

Bigraph bigraph_of(const Quiver& q, const Bipartition& eps) {
  require_unframed(q, "bigraph_of");
  require_valid(q, eps);
  Bigraph g{Multigraph(q.size()), Multigraph(q.size())};
  for (const auto& a : q.arrows()) {
    Multigraph& side = eps.is_white(a.source) ? g.delta : g.gamma;
    side.adj[a.source][a.target] += a.multiplicity;
    side.adj[a.target][a.source] += a.multiplicity;
  }
  return g;
}

bool is_recurrent(const Quiver& q, const Bipartition& eps) {
  require_unframed(q, "is_recurrent");
  require_valid(q, eps);
  const Quiver op = opposite(q);
  bool recurrent = true;
  for (Side s : {Side::White, Side::Black}) {
    const auto vs = eps.vertices(s);
    const Quiver asc = mutate_all(q, vs, false);
    if (!(asc == mutate_all(q, vs, true)))
      throw InternalError("mutations within one color class failed to commute");
    recurrent = recurrent && asc == op;
  }
  return recurrent;
}

bool commute_check(const Bigraph& g) {
  const std::size_t n = g.gamma.n;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j) {
      Integer gd = 0, dg = 0;
      for (Vertex k = 0; k < n; ++k) {
        gd += g.gamma.adj[i][k] * g.delta.adj[k][j];
        dg += g.delta.adj[i][k] * g.gamma.adj[k][j];
      }
      if (gd != dg) return false;
    }
  return true;
}

std::string to_string(const DynkinType& t) {
  const char* f = t.family == DynkinType::Family::A ? "A" : t.family == DynkinType::Family::D ? "D" : "E";
  return f + std::to_string(t.rank);
}

std::optional<DynkinType> classify_ade(const Multigraph& g) {
  const std::size_t n = g.n;
  if (n == 0) return std::nullopt;
  std::size_t edges = 0;
  std::vector<std::size_t> degree(n, 0);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j) {
      if (g.adj[i][j] > 1 || g.adj[i][j] < 0) throw InvalidInput("ADE recognition needs a simple graph");
      if (g.adj[i][j] == 1) {
        ++degree[i];
        if (i < j) ++edges;
      }
    }
  if (g.components().size() != 1 || edges + 1 != n) return std::nullopt;
  const int rank = static_cast<int>(n);
  const auto max_deg = *std::max_element(degree.begin(), degree.end());
  if (max_deg <= 2) return DynkinType{DynkinType::Family::A, rank};
  if (max_deg > 3 || std::count(degree.begin(), degree.end(), 3) != 1) return std::nullopt;

  const Vertex branch = static_cast<Vertex>(std::find(degree.begin(), degree.end(), 3) - degree.begin());
  std::vector<int> legs;
  for (Vertex start = 0; start < n; ++start) {
    if (g.adj[branch][start] != 1) continue;
    int len = 1;
    Vertex prev = branch, cur = start;
    while (degree[cur] == 2) {
      Vertex next = n;
      for (Vertex w = 0; w < n; ++w)
        if (g.adj[cur][w] == 1 && w != prev) next = w;
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs[0] == 1 && legs[1] == 1) return DynkinType{DynkinType::Family::D, rank};
  if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4)
    return DynkinType{DynkinType::Family::E, rank};
  return std::nullopt;
}

CoxeterData coxeter(const DynkinType& t) {
  const int n = t.rank;
  switch (t.family) {
  case DynkinType::Family::A:
    if (n < 1) break;
    return {n + 1, n * (n + 1) / 2};
  case DynkinType::Family::D:
    if (n < 4) break;
    return {2 * n - 2, n * n - n};
  case DynkinType::Family::E:
    if (n == 6) return {12, 36};
    if (n == 7) return {18, 63};
    if (n == 8) return {30, 120};
    break;
  }
  throw InvalidInput("not a Dynkin type: " + to_string(t));
}

Quiver alternating_dynkin(const DynkinType& t) {
  coxeter(t); // validates the type
  const std::size_t n = static_cast<std::size_t>(t.rank);
  Multigraph g(n);
  auto link = [&](std::size_t a, std::size_t b) { g.adj[a - 1][b - 1] = g.adj[b - 1][a - 1] = 1; };
  const std::size_t path_end = t.family == DynkinType::Family::A ? n : n - 1;
  for (std::size_t i = 1; i < path_end; ++i) link(i, i + 1);
  if (t.family == DynkinType::Family::D) link(n - 2, n);
  if (t.family == DynkinType::Family::E) link(3, n);

  const Quiver shape = Quiver::from_arrows(n, 0, [&] {
    std::vector<Arrow> arrows;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (g.adj[i][j] == 1) arrows.push_back({i, j, 1});
    return arrows;
  }());
  const Bipartition eps = *bipartition_of(shape);
  Quiver q(n, 0);
  for (const auto& a : shape.arrows()) {
    if (eps.is_white(a.source))
      q.set(a.source, a.target, 1);
    else
      q.set(a.target, a.source, 1);
  }
  return q;
}

namespace {

struct SideAttempt {
  std::optional<RecurrentMgs> result;
  std::string failure;
};

SideAttempt attempt(const Quiver& q, const Bipartition& eps, bool swapped) {
  const Bipartition e = swapped ? eps.swapped() : eps;
  const Multigraph finite = bigraph_of(q, e).gamma;
  RecurrentMgs r;
  r.roles_swapped = swapped;
  r.components = finite.components();
  for (const auto& comp : r.components) {
    std::optional<DynkinType> t;
    try {
      t = classify_ade(finite.induced(comp));
    } catch (const InvalidInput&) {
      return {std::nullopt, "component containing " + q.vertex_name(comp.front()) + " has a multi-edge"};
    }
    if (!t) return {std::nullopt, "component containing " + q.vertex_name(comp.front()) + " is not ADE"};
    const int h = coxeter(*t).coxeter_number;
    if (r.coxeter_number != 0 && h != r.coxeter_number)
      return {std::nullopt, "components have different Coxeter numbers"};
    r.coxeter_number = h;
    r.component_types.push_back(*t);
  }
  const auto sinks = e.vertices(Side::White);
  const auto sources = e.vertices(Side::Black);
  for (int round = 0; round < r.coxeter_number / 2; ++round) {
    r.sequence.insert(r.sequence.end(), sinks.begin(), sinks.end());
    r.sequence.insert(r.sequence.end(), sources.begin(), sources.end());
  }
  if (r.coxeter_number % 2 == 1) r.sequence.insert(r.sequence.end(), sinks.begin(), sinks.end());
  return {std::move(r), {}};
}

} // namespace

RecurrentMgs recurrent_mgs(const Quiver& q, const Bipartition& eps, GammaSide side) {
  if (!is_recurrent(q, eps)) throw InvalidInput("quiver is not bipartite recurrent for this bipartition");
  const SideAttempt direct = attempt(q, eps, false);
  const SideAttempt mirrored = attempt(q, eps, true);

  std::optional<RecurrentMgs> chosen;
  switch (side) {
  case GammaSide::WhiteSink:
    if (!direct.result)
      throw InvalidInput("white-sink hypothesis fails: " + direct.failure +
                         (mirrored.result ? "; the mirrored hypothesis holds (use white-source)" : ""));
    chosen = direct.result;
    break;
  case GammaSide::WhiteSource:
    if (!mirrored.result)
      throw InvalidInput("white-source hypothesis fails: " + mirrored.failure +
                         (direct.result ? "; the white-sink hypothesis holds (use white-sink)" : ""));
    chosen = mirrored.result;
    break;
  case GammaSide::Auto:
    if (direct.result && (!mirrored.result || direct.result->coxeter_number >= mirrored.result->coxeter_number))
      chosen = direct.result;
    else if (mirrored.result)
      chosen = mirrored.result;
    else
      throw InvalidInput("neither side is a union of ADE diagrams with one Coxeter number (" +
                         direct.failure + "; " + mirrored.failure + ")");
    break;
  }

  if (!verify_sequence(q, chosen->sequence).is_maximal_green)
    throw InternalError("bipartite construction " + format_sequence(q, chosen->sequence) +
                        " is not a maximal green sequence");
  return *chosen;
}

std::string to_report(const Quiver& q, const RecurrentMgs& r) {
  std::ostringstream os;
  os << "sequence: " << format_sequence(q, r.sequence) << '\n';
  os << "length: " << r.sequence.size() << '\n';
  os << "coxeter_number: " << r.coxeter_number << '\n';
  os << "roles_swapped: " << (r.roles_swapped ? "true" : "false") << '\n';
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    os << "component_" << i + 1 << ": " << to_string(r.component_types[i]) << " {";
    for (std::size_t j = 0; j < r.components[i].size(); ++j)
      os << (j ? "," : "") << q.vertex_name(r.components[i][j]);
    os << "}\n";
  }
  return os.str();
}

Quiver square_product(const Quiver& left, const Quiver& right) {
  for (const Quiver* f : {&left, &right}) {
    require_unframed(*f, "square_product");
    for (Vertex v = 0; v < f->size(); ++v) {
      bool in = false, out = false;
      for (Vertex w = 0; w < f->size(); ++w) {
        in = in || (*f)(w, v) > 0;
        out = out || (*f)(v, w) > 0;
      }
      if (in && out) throw InvalidInput("square_product factors must be alternating orientations");
    }
    const Multigraph g = underlying(*f);
    if (!classify_ade(g)) throw InvalidInput("square_product factors must be ADE Dynkin diagrams");
  }
  auto is_source = [](const Quiver& f, Vertex v) {
    for (Vertex w = 0; w < f.size(); ++w)
      if (f(w, v) > 0) return false;
    return true;
  };
  auto is_sink = [](const Quiver& f, Vertex v) {
    for (Vertex w = 0; w < f.size(); ++w)
      if (f(v, w) > 0) return false;
    return true;
  };

  const std::size_t nl = left.size(), nr = right.size();
  auto index = [nl](Vertex i, Vertex j) { return j * nl + i; };
  Quiver q(nl * nr, 0);
  for (Vertex j = 0; j < nr; ++j)
    for (const auto& a : left.arrows()) {
      const bool keep = is_sink(right, j);
      q.set(index(a.source, j), index(a.target, j), keep ? a.multiplicity : Integer(-a.multiplicity));
    }
  for (Vertex i = 0; i < nl; ++i)
    for (const auto& a : right.arrows()) {
      const bool keep = is_source(left, i);
      q.set(index(i, a.source), index(i, a.target), keep ? a.multiplicity : Integer(-a.multiplicity));
    }
  return q;
}

std::string render_bigraph_dot(const Multigraph& g, const Quiver& q, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.n; ++v) os << "  n" << v + 1 << " [label=\"" << q.vertex_name(v) << "\"];\n";
  for (Vertex i = 0; i < g.n; ++i)
    for (Vertex j = i + 1; j < g.n; ++j) {
      if (g.adj[i][j] == 0) continue;
      os << "  n" << i + 1 << " -- n" << j + 1;
      if (g.adj[i][j] > 1) os << " [label=" << g.adj[i][j] << "]";
      os << ";\n";
    }
  os << "}\n";
  return os.str();
}

} // namespace greenseq
