#include "greenseq/dilog.hpp"

#include <algorithm>
#include <sstream>

#include "greenseq/errors.hpp"

namespace greenseq {

namespace {

int checked_degree(const Exponent& alpha) {
  for (int a : alpha)
    if (a < 0) throw InvalidInput("dilogarithm exponents must be nonnegative");
  const int d = total_degree(alpha);
  if (d == 0) throw InvalidInput("dilogarithm of the zero exponent");
  return d;
}

// Coefficient of y^(m alpha) in E(y^alpha).
LaurentFraction dilog_coefficient(int m) {
  LaurentPolynomial den(Integer(1));
  for (int t = 0; t < m; ++t)
    den = den * (LaurentPolynomial::monomial(1, 2 * m) - LaurentPolynomial::monomial(1, 2 * t));
  return {LaurentPolynomial::monomial(1, m * m), den};
}

Exponent scaled(const Exponent& alpha, int m) {
  Exponent out = alpha;
  for (auto& a : out) a *= m;
  return out;
}

Exponent exponent_of(const Letter& l) {
  Exponent alpha;
  for (const auto& x : l.beta) alpha.push_back(static_cast<int>(l.sign * x));
  return alpha;
}

} // namespace

QSeries dilog(const Exponent& alpha, const SeriesContext& ctx) {
  const int d = checked_degree(alpha);
  QSeries s(ctx);
  for (int m = 0; m * d <= ctx.order; ++m) s.add(scaled(alpha, m), dilog_coefficient(m));
  return s;
}

QSeries dilog_inverse(const Exponent& alpha, const SeriesContext& ctx) {
  const int d = checked_degree(alpha);
  const int top = ctx.order / d;
  std::vector<LaurentFraction> c, inv;
  for (int m = 0; m <= top; ++m) c.push_back(dilog_coefficient(m));
  inv.push_back(c[0]);
  for (int m = 1; m <= top; ++m) {
    LaurentFraction acc;
    for (int j = 1; j <= m; ++j) acc += c[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(m - j)];
    inv.push_back(-acc);
  }
  QSeries s(ctx);
  for (int m = 0; m <= top; ++m) s.add(scaled(alpha, m), inv[static_cast<std::size_t>(m)]);
  return s;
}

SignedWord dt_word(const Quiver& q, const MutationSequence& sigma) {
  Quiver cur = framed(q);
  SignedWord word;
  for (std::size_t t = 0; t < sigma.size(); ++t) {
    const Vertex k = sigma[t];
    if (k >= q.n_mutable()) throw InvalidInput("step " + std::to_string(t + 1) + ": vertex is not mutable");
    CVector beta = c_vector(cur, k);
    const int sign = vertex_color(cur, k) == Color::Green ? 1 : -1;
    word.push_back({std::move(beta), sign, k});
    cur = mutate(cur, k);
  }
  return word;
}

SeriesContext series_context(const Quiver& q, int order) {
  const std::size_t n = q.n_mutable();
  std::vector<std::vector<long long>> lambda(n, std::vector<long long>(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) lambda[u][v] = static_cast<long long>(q(u, v));
  return {n, order, std::move(lambda)};
}

QSeries word_product(const SignedWord& word, const SeriesContext& ctx) {
  QSeries acc = QSeries::one(ctx);
  for (const auto& l : word) {
    if (l.beta.size() != ctx.n) throw InvalidInput("letter has the wrong number of variables");
    const Exponent alpha = exponent_of(l);
    acc = acc * (l.sign > 0 ? dilog(alpha, ctx) : dilog_inverse(alpha, ctx));
  }
  return acc;
}

QSeries dt_invariant(const Quiver& q, const MutationSequence& sigma, int order) {
  if (!verify_sequence(q, sigma).is_reddening)
    throw InvalidInput("sequence " + format_sequence(q, sigma) + " is not reddening");
  return word_product(dt_word(q, sigma), series_context(q, order));
}

int default_order(const SignedWord& word) {
  std::vector<int> degrees;
  for (const auto& l : word) degrees.push_back(total_degree(exponent_of(l)));
  std::sort(degrees.rbegin(), degrees.rend());
  int n = 0;
  for (std::size_t i = 0; i < degrees.size() && i < 2; ++i) n += degrees[i];
  return std::min(n, 6);
}

SignedWord restrict_word(const SignedWord& word, const std::vector<Vertex>& vertices) {
  SignedWord out;
  for (const auto& l : word)
    if (std::find(vertices.begin(), vertices.end(), l.vertex) != vertices.end()) out.push_back(l);
  return out;
}

bool support_confined(const SignedWord& word, const VertexPartition& p) {
  for (const auto& l : word)
    for (Vertex j = 0; j < l.beta.size(); ++j)
      if (l.beta[j] != 0 && p.block_of(j) != p.block_of(l.vertex)) return false;
  return true;
}

SignedWord check_restriction(const Quiver& q, const MutationSequence& sigma,
                             const VertexPartition& p, std::size_t block) {
  if (!verify_cp_sequence(PartitionedIceQuiver(q, p), sigma, false).all_cp)
    throw InvalidInput("sequence is not component preserving for this partition");
  const auto& members = p.block(block);
  const SignedWord whole = dt_word(q, sigma);
  if (!support_confined(whole, p)) throw InternalError("c-vector support left its block");
  const SignedWord restricted = restrict_word(whole, members);

  const Restriction local = restrict_to(q, members);
  MutationSequence local_sigma;
  for (Vertex k : sigma) {
    const auto it = std::find(members.begin(), members.end(), k);
    if (it != members.end()) local_sigma.push_back(static_cast<Vertex>(it - members.begin()));
  }
  const SignedWord expected = dt_word(local.quiver, local_sigma);
  if (expected.size() != restricted.size()) throw InternalError("restricted word has the wrong length");
  for (std::size_t t = 0; t < expected.size(); ++t) {
    const Letter& got = restricted[t];
    const Letter& want = expected[t];
    bool same = got.sign == want.sign && got.vertex == local.vertex_map[want.vertex];
    for (std::size_t j = 0; j < members.size() && same; ++j) same = got.beta[members[j]] == want.beta[j];
    if (!same) throw InternalError("restricted word differs from the component's word at letter " +
                                   std::to_string(t + 1));
  }
  return restricted;
}

std::string to_report(const Quiver& q, const SignedWord& word) {
  std::ostringstream os;
  for (std::size_t t = 0; t < word.size(); ++t) {
    const Letter& l = word[t];
    os << "letter_" << t + 1 << ": vertex=" << q.vertex_name(l.vertex) << " sign=" << (l.sign > 0 ? '+' : '-')
       << " beta=(";
    for (std::size_t j = 0; j < l.beta.size(); ++j) os << (j ? "," : "") << l.beta[j];
    os << ")\n";
  }
  return os.str();
}

std::string identity_report(const QSeries& lhs, const QSeries& rhs) {
  std::ostringstream os;
  const bool equal = lhs == rhs;
  os << "equal: " << (equal ? "true" : "false") << '\n';
  os << "order: " << lhs.context().order << '\n';
  os << "terms: " << lhs.terms().size() << '\n';
  if (equal) return os.str();
  const QSeries diff = lhs - rhs;
  const auto& [alpha, c] = *diff.terms().begin();
  os << "first_difference: y^(";
  for (std::size_t u = 0; u < alpha.size(); ++u) os << (u ? "," : "") << alpha[u];
  os << ") : " << c.to_string() << '\n';
  return os.str();
}

} // namespace greenseq
