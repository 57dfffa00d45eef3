// Command-line front end. Exit status: 0 when the checked property holds,
// 1 when it does not, 2 on malformed input or any other error.

#include <fstream>
#include <functional>
#include <iostream>
#include <regex>

#include <CLI11.hpp>

#include "greenseq/bipartite.hpp"
#include "greenseq/dilog.hpp"
#include "greenseq/dominance.hpp"
#include "greenseq/enumerate.hpp"
#include "greenseq/errors.hpp"
#include "greenseq/io.hpp"

using namespace greenseq;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

struct Options {
  std::string file;
  std::string seq, seq1, seq2, against, gamma_side = "auto", dot_prefix;
  std::vector<std::string> scales;
  std::size_t max_len = 0, budget = 1000000;
  int order = -1;
  bool framed = false, count_only = false, reddening = false, compositional = false;
};

DominanceConstants parse_scales(const std::vector<std::string>& specs, const VertexPartition& p) {
  static const std::regex pattern(R"(\s*(\d+)\s*,\s*(\d+)\s*=\s*(\d+)\s*)");
  DominanceConstants d;
  for (const auto& s : specs) {
    std::smatch m;
    if (!std::regex_match(s, m, pattern)) throw InvalidInput("--scale expects i,j=d, got '" + s + "'");
    const auto i = std::stoul(m[1]), j = std::stoul(m[2]);
    if (i < 1 || j < 1 || i > p.block_count() || j > p.block_count())
      throw InvalidInput("--scale block index out of range in '" + s + "'");
    d.set(i - 1, j - 1, Integer(m[3].str()));
  }
  return d;
}

const VertexPartition& need_partition(const QuiverFile& f) {
  if (!f.partition) throw InvalidInput("the quiver file has no partition line");
  return *f.partition;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

int run_mutate(const Options& o) {
  const QuiverFile f = parse_quiver_file(o.file);
  Quiver q = o.framed ? framed(f.quiver) : f.quiver;
  q = apply_sequence(q, parse_sequence(q, o.seq));
  std::cout << write_quiver_text(q);
  return kTrue;
}

int run_verify(const Options& o) {
  const QuiverFile f = parse_quiver_file(o.file);
  const SequenceReport r = verify_sequence(f.quiver, parse_sequence(f.quiver, o.seq));
  std::cout << to_report(f.quiver, r);
  return (o.reddening ? r.is_reddening : r.is_maximal_green) ? kTrue : kFalse;
}

int run_cp_verify(const Options& o) {
  const QuiverFile f = parse_quiver_file(o.file);
  const MutationSequence tau = parse_sequence(f.quiver, o.seq);
  if (!f.sequences.empty()) {
    const ShuffleReport r = cp_shuffle_verify(f.shuffle_problem(), tau);
    std::cout << to_report(f.quiver, r);
    return r.is_shuffle && r.cp.all_cp ? kTrue : kFalse;
  }
  const CpReport r = verify_cp_sequence(PartitionedIceQuiver(f.quiver, need_partition(f)), tau);
  std::cout << to_report(f.quiver, r);
  return r.all_cp ? kTrue : kFalse;
}

int run_shuffle_search(const Options& o) {
  const QuiverFile f = parse_quiver_file(o.file);
  const ShuffleSearchResult r = shuffle_search(f.shuffle_problem(), o.budget);
  std::cout << to_report(f.quiver, r);
  return r.status == SearchStatus::Found ? kTrue : kFalse;
}

int run_dominate(const Options& o) {
  const QuiverFile f = parse_quiver_file(o.file);
  if (!o.against.empty()) {
    const QuiverFile b = parse_quiver_file(o.against);
    const VertexPartition* p = f.partition ? &*f.partition : nullptr;
    std::cout << dominance_report(b.quiver, f.quiver, p);
    const bool holds = p ? pi_dominates(b.quiver, f.quiver, *p).has_value() : dominates(b.quiver, f.quiver);
    return holds ? kTrue : kFalse;
  }
  const VertexPartition& p = need_partition(f);
  const TransferReport r =
      transfer_check(f.quiver, p, parse_scales(o.scales, p), parse_sequence(f.quiver, o.seq));
  std::cout << to_report(f.quiver, r);
  return r.on_b.is_reddening ? kTrue : kFalse;
}

int run_bipartite(const Options& o) {
  const QuiverFile f = parse_quiver_file(o.file);
  const auto eps = bipartition_of(f.quiver);
  if (!eps) throw InvalidInput("the quiver is not bipartite");
  const GammaSide side = o.gamma_side == "white-sink"     ? GammaSide::WhiteSink
                         : o.gamma_side == "white-source" ? GammaSide::WhiteSource
                                                          : GammaSide::Auto;
  if (!o.dot_prefix.empty()) {
    const Bigraph g = bigraph_of(f.quiver, *eps);
    write_file(o.dot_prefix + "_gamma.dot", render_bigraph_dot(g.gamma, f.quiver, "Gamma"));
    write_file(o.dot_prefix + "_delta.dot", render_bigraph_dot(g.delta, f.quiver, "Delta"));
  }
  std::cout << to_report(f.quiver, recurrent_mgs(f.quiver, *eps, side));
  return kTrue;
}

int run_enumerate(const Options& o) {
  const QuiverFile f = parse_quiver_file(o.file);
  if (o.count_only) {
    std::cout << to_report(count_mgs(f.quiver, o.max_len));
    return kTrue;
  }
  const bool complete = enumerate_mgs(f.quiver, o.max_len, [&](const MutationSequence& s) {
    std::cout << format_sequence(f.quiver, s) << '\n';
  });
  if (!complete) std::cerr << "truncated at max-len " << o.max_len << '\n';
  return kTrue;
}

int run_min_length(const Options& o) {
  const QuiverFile f = parse_quiver_file(o.file);
  if (o.compositional) {
    std::cout << to_report(f.quiver, compositional_min_mgs(f.shuffle_problem(), o.budget));
    return kTrue;
  }
  if (o.max_len == 0) throw InvalidInput("--max-len is required without --compositional");
  const MinLengthResult r = min_length_mgs(f.quiver, o.max_len);
  std::cout << to_report(f.quiver, r);
  return r.witness ? kTrue : kFalse;
}

int run_dt(const Options& o) {
  const QuiverFile f = parse_quiver_file(o.file);
  const MutationSequence sigma = parse_sequence(f.quiver, o.seq);
  const SignedWord word = dt_word(f.quiver, sigma);
  const int order = o.order >= 0 ? o.order : default_order(word);
  std::cout << to_report(f.quiver, word);
  std::cout << dt_invariant(f.quiver, sigma, order).to_string();
  return kTrue;
}

int run_qdilog_check(const Options& o) {
  const QuiverFile f = parse_quiver_file(o.file);
  const MutationSequence s1 = parse_sequence(f.quiver, o.seq1), s2 = parse_sequence(f.quiver, o.seq2);
  const int order =
      o.order >= 0 ? o.order : std::max(default_order(dt_word(f.quiver, s1)), default_order(dt_word(f.quiver, s2)));
  const QSeries lhs = dt_invariant(f.quiver, s1, order), rhs = dt_invariant(f.quiver, s2, order);
  std::cout << identity_report(lhs, rhs);
  return lhs == rhs ? kTrue : kFalse;
}

int run_export_dot(const Options& o) {
  const QuiverFile f = parse_quiver_file(o.file);
  Quiver q = o.framed ? framed(f.quiver) : f.quiver;
  if (!o.seq.empty()) q = apply_sequence(q, parse_sequence(q, o.seq));
  std::cout << render_dot(q);
  return kTrue;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal green and reddening sequences of quivers"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> action;

  auto verb = [&](const std::string& name, const std::string& help, int (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "quiver file")->required()->check(CLI::ExistingFile);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* mutate_cmd = verb("mutate", "apply a mutation sequence and print the result", run_mutate);
  mutate_cmd->add_option("--seq", o.seq, "vertices to mutate")->required();
  mutate_cmd->add_flag("--framed", o.framed, "frame the quiver first");

  auto* verify_cmd = verb("verify", "check a maximal green or reddening sequence", run_verify);
  verify_cmd->add_option("--seq", o.seq)->required();
  verify_cmd->add_flag("--reddening", o.reddening, "succeed on reddening sequences that are not green");

  auto* cp_cmd = verb("cp-verify", "check a component preserving sequence or shuffle", run_cp_verify);
  cp_cmd->add_option("--seq", o.seq)->required();

  auto* shuffle_cmd = verb("shuffle-search", "search for a component preserving shuffle", run_shuffle_search);
  shuffle_cmd->add_option("--budget", o.budget, "search node budget");

  auto* dom_cmd = verb("dominate", "dominance and sequence transfer", run_dominate);
  dom_cmd->add_option("--against", o.against, "quiver to test as the dominating one")->check(CLI::ExistingFile);
  dom_cmd->add_option("--seq", o.seq, "sequence to transfer");
  dom_cmd->add_option("--scale", o.scales, "block pair constant i,j=d (repeatable)");

  auto* bip_cmd = verb("bipartite-mgs", "maximal green sequence of a bipartite recurrent quiver", run_bipartite);
  bip_cmd->add_option("--gamma-side", o.gamma_side, "which side is of finite type")
      ->check(CLI::IsMember({"auto", "white-sink", "white-source"}));
  bip_cmd->add_option("--dot-prefix", o.dot_prefix, "write <prefix>_gamma.dot and <prefix>_delta.dot");

  auto* enum_cmd = verb("enumerate", "list maximal green sequences", run_enumerate);
  enum_cmd->add_option("--max-len", o.max_len, "length bound")->required();
  enum_cmd->add_flag("--count-only", o.count_only, "print the count and complete|truncated");

  auto* min_cmd = verb("min-length", "minimal length maximal green sequence", run_min_length);
  min_cmd->add_option("--max-len", o.max_len, "depth cap for iterative deepening");
  min_cmd->add_flag("--compositional", o.compositional, "use the file's partition and block sequences");
  min_cmd->add_option("--budget", o.budget, "shuffle search node budget");

  auto* dt_cmd = verb("dt", "dilogarithm product of a reddening sequence", run_dt);
  dt_cmd->add_option("--seq", o.seq)->required();
  dt_cmd->add_option("--order", o.order, "truncation order");

  auto* qd_cmd = verb("qdilog-check", "compare the products of two reddening sequences", run_qdilog_check);
  qd_cmd->add_option("--seq1", o.seq1)->required();
  qd_cmd->add_option("--seq2", o.seq2)->required();
  qd_cmd->add_option("--order", o.order, "truncation order");

  auto* dot_cmd = verb("export-dot", "print the quiver in DOT format", run_export_dot);
  dot_cmd->add_flag("--framed", o.framed, "frame the quiver (colors vertices)");
  dot_cmd->add_option("--seq", o.seq, "mutations applied before export");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    return action(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
}
