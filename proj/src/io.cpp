#include "greenseq/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "greenseq/errors.hpp"

namespace greenseq {

namespace {

struct Token {
  std::string text;
  std::size_t column; // 1-based
};

bool is_separator(char c, std::string_view separators) {
  return c == ' ' || c == '\t' || c == '\r' || separators.find(c) != std::string_view::npos;
}

std::vector<Token> split(std::string_view line, std::size_t offset, std::string_view separators = "") {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_separator(line[i], separators)) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_separator(line[i], separators)) ++i;
    if (i > start) out.push_back({std::string(line.substr(start, i - start)), offset + start + 1});
  }
  return out;
}

std::optional<Integer> parse_integer(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') return std::nullopt;
  return Integer(s);
}

std::size_t parse_count(const Token& t, std::size_t line) {
  const auto v = parse_integer(t.text);
  if (!v || *v < 0 || *v > 100000) throw ParseError(line, t.column, "expected a vertex count, got '" + t.text + "'");
  return static_cast<std::size_t>(*v);
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  QuiverFile run() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      const std::size_t end = std::min(text_.find('\n', pos), text_.size());
      std::string_view line = text_.substr(pos, end - pos);
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      handle(line, line_no);
      pos = end + 1;
    }
    if (!header_) throw ParseError(line_no, 1, "missing 'quiver <n_mutable> <n_frozen>' header");
    return finish(last_content_line_);
  }

private:
  void handle(std::string_view line, std::size_t ln) {
    const auto tokens = split(line, 0);
    if (tokens.empty()) return;
    last_content_line_ = ln;
    const Token& head = tokens[0];
    if (head.text == "quiver") {
      if (header_) throw ParseError(ln, head.column, "duplicate quiver header");
      if (tokens.size() != 3) throw ParseError(ln, head.column, "expected 'quiver <n_mutable> <n_frozen>'");
      n_mut_ = parse_count(tokens[1], ln);
      n_frozen_ = parse_count(tokens[2], ln);
      header_ = true;
      shape_ = Quiver(n_mut_, n_frozen_);
      return;
    }
    if (!header_) throw ParseError(ln, head.column, "the first directive must be the quiver header");
    if (head.text == "labels") return labels(tokens, ln);
    if (head.text == "partition") return partition(line, head, ln);
    if (head.text == "seq") return sequence(line, head, ln);
    if (parse_integer(head.text) || shape_.find_vertex(head.text))
      return arrow(tokens, ln);
    throw ParseError(ln, head.column, "unknown directive '" + head.text + "'");
  }

  void labels(const std::vector<Token>& tokens, std::size_t ln) {
    if (has_labels_) throw ParseError(ln, tokens[0].column, "duplicate labels line");
    if (!arrows_.empty() || partition_line_) throw ParseError(ln, tokens[0].column, "labels must precede arrows");
    std::vector<std::string> names;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const Token& t = tokens[i];
      if (t.text.find_first_of(",;:") != std::string::npos)
        throw ParseError(ln, t.column, "labels may not contain ',', ';' or ':'");
      for (const auto& other : names)
        if (other == t.text) throw ParseError(ln, t.column, "duplicate label '" + t.text + "'");
      names.push_back(t.text);
    }
    if (names.size() != n_mut_ + n_frozen_)
      throw ParseError(ln, tokens[0].column,
                       "expected " + std::to_string(n_mut_ + n_frozen_) + " labels, got " + std::to_string(names.size()));
    shape_ = shape_.with_labels(std::move(names));
    has_labels_ = true;
  }

  Vertex vertex(const Token& t, std::size_t ln, bool mutable_only) const {
    const auto v = shape_.find_vertex(t.text);
    if (!v) throw ParseError(ln, t.column, "unknown vertex '" + t.text + "'");
    if (mutable_only && shape_.is_frozen(*v)) throw ParseError(ln, t.column, "vertex '" + t.text + "' is frozen");
    return *v;
  }

  void arrow(const std::vector<Token>& tokens, std::size_t ln) {
    if (tokens.size() != 3) throw ParseError(ln, tokens[0].column, "expected '<source> <target> <multiplicity>'");
    const Vertex i = vertex(tokens[0], ln, false);
    const Vertex j = vertex(tokens[1], ln, false);
    const auto m = parse_integer(tokens[2].text);
    if (!m || *m <= 0) throw ParseError(ln, tokens[2].column, "multiplicity must be a positive integer");
    if (i == j) throw ParseError(ln, tokens[1].column, "loops are not allowed");
    if (shape_.is_frozen(i) && shape_.is_frozen(j))
      throw ParseError(ln, tokens[1].column, "arrows between frozen vertices are not allowed");
    const auto [it, fresh] = direction_.try_emplace({std::min(i, j), std::max(i, j)}, i < j);
    if (!fresh && it->second != (i < j))
      throw ParseError(ln, tokens[0].column, "arrows listed in both directions between " + tokens[0].text +
                                                 " and " + tokens[1].text);
    arrows_.push_back({i, j, *m});
  }

  void partition(std::string_view line, const Token& head, std::size_t ln) {
    if (partition_line_) throw ParseError(ln, head.column, "duplicate partition line");
    partition_line_ = ln;
    const std::size_t start = head.column - 1 + head.text.size();
    std::vector<std::vector<Vertex>> blocks;
    std::size_t i = start;
    while (i <= line.size()) {
      const std::size_t end = std::min(line.find(';', i), line.size());
      const auto members = split(line.substr(i, end - i), i, ",");
      if (members.empty()) throw ParseError(ln, i + 1, "empty block in partition");
      std::vector<Vertex> block;
      for (const auto& t : members) block.push_back(vertex(t, ln, true));
      blocks.push_back(std::move(block));
      i = end + 1;
    }
    try {
      partition_.emplace(std::move(blocks), n_mut_);
    } catch (const InvalidInput& e) {
      throw ParseError(ln, head.column, e.what());
    }
  }

  void sequence(std::string_view line, const Token& head, std::size_t ln) {
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(ln, head.column, "expected 'seq <block>: <vertices>'");
    const std::size_t after_head = head.column - 1 + head.text.size();
    const auto index_tokens = split(line.substr(after_head, colon - after_head), after_head);
    if (index_tokens.size() != 1) throw ParseError(ln, head.column, "expected one block index before ':'");
    const auto b = parse_integer(index_tokens[0].text);
    if (!b || *b < 1) throw ParseError(ln, index_tokens[0].column, "block index must be a positive integer");
    const auto block = static_cast<std::size_t>(*b) - 1;
    if (!partition_) throw ParseError(ln, head.column, "seq needs a partition line first");
    if (block >= partition_->block_count())
      throw ParseError(ln, index_tokens[0].column, "no block " + index_tokens[0].text);
    MutationSequence seq;
    for (const auto& t : split(line.substr(colon + 1), colon + 1, ",")) {
      const Vertex v = vertex(t, ln, true);
      if (partition_->block_of(v) != block)
        throw ParseError(ln, t.column, "vertex '" + t.text + "' is not in block " + index_tokens[0].text);
      seq.push_back(v);
    }
    if (sequences_.size() <= block) sequences_.resize(block + 1);
    if (seen_blocks_.count(block)) throw ParseError(ln, head.column, "duplicate seq for block " + index_tokens[0].text);
    seen_blocks_.insert({block, ln});
    sequences_[block] = std::move(seq);
  }

  QuiverFile finish(std::size_t last_line) {
    QuiverFile out;
    try {
      out.quiver = Quiver::from_arrows(n_mut_, n_frozen_, arrows_).with_labels(shape_.labels());
    } catch (const InvalidInput& e) {
      throw ParseError(last_line, 1, e.what());
    }
    out.partition = partition_;
    if (!seen_blocks_.empty())
      for (std::size_t b = 0; b < partition_->block_count(); ++b)
        if (!seen_blocks_.count(b)) throw ParseError(last_line, 1, "no seq line for block " + std::to_string(b + 1));
    out.sequences = std::move(sequences_);
    return out;
  }

  std::string_view text_;
  bool header_ = false;
  std::size_t last_content_line_ = 0;
  bool has_labels_ = false;
  std::size_t n_mut_ = 0, n_frozen_ = 0;
  Quiver shape_;
  std::vector<Arrow> arrows_;
  std::map<std::pair<Vertex, Vertex>, bool> direction_;
  std::size_t partition_line_ = 0;
  std::optional<VertexPartition> partition_;
  std::vector<MutationSequence> sequences_;
  std::map<std::size_t, std::size_t> seen_blocks_;
};

} // namespace

ShuffleProblem QuiverFile::shuffle_problem() const {
  if (!partition) throw InvalidInput("the file has no partition line");
  if (sequences.size() != partition->block_count())
    throw InvalidInput("the file needs one seq line per block");
  return ShuffleProblem(quiver, *partition, sequences);
}

QuiverFile parse_quiver_text(std::string_view text) { return Parser(text).run(); }

QuiverFile parse_quiver_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_quiver_text(buf.str());
}

std::string write_quiver_text(const QuiverFile& file) {
  const Quiver& q = file.quiver;
  std::ostringstream os;
  os << "quiver " << q.n_mutable() << ' ' << q.n_frozen() << '\n';
  if (!q.labels().empty()) {
    os << "labels";
    for (const auto& l : q.labels()) os << ' ' << l;
    os << '\n';
  }
  auto name = [&](Vertex v) { return q.vertex_name(v); };
  for (const auto& a : q.arrows()) os << name(a.source) << ' ' << name(a.target) << ' ' << a.multiplicity << '\n';
  if (file.partition) {
    os << "partition ";
    for (std::size_t b = 0; b < file.partition->block_count(); ++b) {
      os << (b ? ";" : "");
      const auto& block = file.partition->block(b);
      for (std::size_t i = 0; i < block.size(); ++i) os << (i ? "," : "") << name(block[i]);
    }
    os << '\n';
    for (std::size_t b = 0; b < file.sequences.size(); ++b) {
      os << "seq " << b + 1 << ':';
      for (Vertex v : file.sequences[b]) os << ' ' << name(v);
      os << '\n';
    }
  }
  return os.str();
}

std::string write_quiver_text(const Quiver& q) { return write_quiver_text(QuiverFile{q, std::nullopt, {}}); }

MutationSequence parse_sequence(const Quiver& q, std::string_view text) {
  MutationSequence seq;
  for (const auto& t : split(text, 0, ",")) {
    const auto v = q.find_vertex(t.text);
    if (!v) throw ParseError(1, t.column, "unknown vertex '" + t.text + "'");
    if (q.is_frozen(*v)) throw ParseError(1, t.column, "vertex '" + t.text + "' is frozen");
    seq.push_back(*v);
  }
  return seq;
}

std::string render_dot(const Quiver& q, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (Vertex v = 0; v < q.size(); ++v) {
    os << "  n" << v + 1 << " [label=\"" << q.vertex_name(v) << "\"";
    if (q.is_frozen(v)) {
      os << ", shape=box";
    } else if (q.has_framing_layout()) {
      try {
        const bool green = vertex_color(q, v) == Color::Green;
        os << ", style=filled, fillcolor=" << (green ? "green" : "red");
      } catch (const SignCoherenceError&) {
        // not framed-reachable; leave uncolored
      }
    }
    os << "];\n";
  }
  for (const auto& a : q.arrows()) {
    os << "  n" << a.source + 1 << " -> n" << a.target + 1;
    if (a.multiplicity > 1) os << " [label=" << a.multiplicity << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace greenseq
