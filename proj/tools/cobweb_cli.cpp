// Command-line front end: generate cobweb posets, check orderability
// conditions, build realizers and export graphs.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cobweb/cobweb.hpp"
#include "cobweb/io.hpp"
#include "cobweb/oracle.hpp"

namespace {

using namespace cobweb;

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kBadInput = 2,
  kSequenceError = 3,
  kNotRegular = 4,
  kNoAdmissibleChain = 5,
  kNonTransitiveConjugate = 6,
};

struct Options {
  std::string seq;
  std::optional<std::uint64_t> max_level;
  std::string input;
  std::string output;
  std::string format = "json";
  std::uint64_t search_budget = default_search_budget;
  int max_k = 3;
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_out(const Options& opt, const std::string& text) {
  if (opt.output.empty() || opt.output == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw ParseError("cannot open output file '" + opt.output + "'");
  out << text;
}

CobwebPoset build_from_options(const Options& opt) {
  if (!opt.max_level) throw ParseError("--max-level is required with a sequence spec");
  return build_cobweb(io::parse_sequence_spec(opt.seq), *opt.max_level);
}

// --input wins; otherwise the graph is generated from --seq/--max-level.
Digraph load_graph(const Options& opt) {
  if (!opt.input.empty()) return io::read_graph(read_all(opt.input));
  if (opt.seq.empty()) throw ParseError("provide --input or a sequence spec");
  return build_from_options(opt).hasse();
}

std::string render(const Digraph& g, const std::string& format) {
  if (format == "json") return io::to_json(g);
  if (format == "dot") return io::to_dot(g);
  return io::to_edgelist(g);
}

std::string triple_str(const std::array<Vertex, 3>& t) {
  return "(" + t[0].str() + " ; " + t[1].str() + " ; " + t[2].str() + ")";
}

int run_gen(const Options& opt) {
  write_out(opt, render(build_from_options(opt).hasse(), opt.format));
  return kOk;
}

int run_export(const Options& opt) {
  write_out(opt, render(load_graph(opt), opt.format));
  return kOk;
}

int run_check(const Options& opt) {
  const Digraph g = load_graph(opt);
  auto topo = topological_order(g);
  if (!topo) throw CyclicInput("input digraph contains a directed cycle");

  bool all = true;
  std::ostringstream report;
  report << "PASS acyclic\n";

  auto reg = is_regular(g);
  if (reg) {
    report << "PASS regular\n";
  } else {
    all = false;
    report << "FAIL regular: shortcut arc " << reg.witness->first.str() << " -> " << reg.witness->second.str() << '\n';
  }

  std::vector<Vertex> order;
  for (std::size_t i : *topo) order.push_back(g.vertex(i));
  const Chain reference(std::move(order));
  auto adm = is_admissible(reference, g);
  if (adm) {
    report << "PASS admissible\n";
  } else {
    all = false;
    report << "FAIL admissible: inadmissible triple " << triple_str(*adm.witness) << '\n';
  }
  write_out(opt, report.str());
  return all ? kOk : kCheckFailed;
}

int run_realize(const Options& opt) {
  const Digraph g = load_graph(opt);
  const OrderabilityVerdict verdict = decide_odag(g, opt.search_budget);
  if (const Realizer* r = verdict.realizer()) {
    write_out(opt, io::realizer_json(*r).dump() + "\n");
    std::cerr << "orderable: realizer verification " << (verify_realizer(*r) ? "PASS" : "FAIL") << '\n';
    return kOk;
  }
  write_out(opt, io::verdict_json(verdict).dump() + "\n");
  std::cerr << verdict.kind() << (verdict.exhaustive ? "" : " (inconclusive: heuristic search)") << '\n';
  switch (verdict.outcome.index()) {
    case 1: return kNotRegular;
    case 2: return kNoAdmissibleChain;
    default: return kNonTransitiveConjugate;
  }
}

int run_dim(const Options& opt) {
  const oracle::FinitePoset poset = oracle::FinitePoset::from_digraph(load_graph(opt));
  std::string line;
  if (poset.size() <= oracle::max_dimension_size) {
    auto d = oracle::order_dimension(poset, opt.max_k);
    line = d ? "dimension: " + std::to_string(*d) : "dimension: > " + std::to_string(opt.max_k);
  } else {
    line = oracle::brute_force_dim_le_2(poset) ? "dimension: <= 2" : "dimension: > 2";
  }
  write_out(opt, line + "\n");
  return kOk;
}

int exit_code_for(const Error& e) {
  const std::string kind = e.kind();
  if (kind == "NonPositiveSize" || kind == "IndexOutOfRange" || kind == "TooLarge") return kSequenceError;
  return kBadInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cobweb posets, orderable DAGs and two-chain realizers"};
  app.require_subcommand(1);
  Options opt;

  auto add_source = [&](CLI::App* sub, bool with_input) {
    sub->add_option("sequence", opt.seq, "Sequence spec: fib | const:K | list:a,b,...");
    sub->add_option("--seq", opt.seq, "Sequence spec: fib | const:K | list:a,b,...");
    sub->add_option("--max-level", opt.max_level, "Highest level kept (inclusive)")->check(CLI::NonNegativeNumber);
    if (with_input) sub->add_option("--input", opt.input, "Graph file (edge list or JSON); '-' reads stdin");
    sub->add_option("--output", opt.output, "Output file (default stdout)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "dot", "edgelist"}));
  };

  auto* gen = app.add_subcommand("gen", "Generate a cobweb poset's Hasse digraph");
  add_source(gen, false);
  add_format(gen);

  auto* check = app.add_subcommand("check", "Check acyclicity, regularity and admissibility");
  add_source(check, true);

  auto* realize = app.add_subcommand("realize", "Decide orderability and emit a two-chain realizer");
  add_source(realize, true);
  realize->add_option("--search-budget", opt.search_budget, "Topological-order search budget")
      ->check(CLI::PositiveNumber);

  auto* dim = app.add_subcommand("dim", "Brute-force order dimension of a small poset");
  add_source(dim, true);
  dim->add_option("--max-k", opt.max_k, "Largest dimension tried")->check(CLI::Range(1, 3));

  auto* exp = app.add_subcommand("export", "Convert a graph between formats");
  add_source(exp, true);
  add_format(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (gen->parsed()) return run_gen(opt);
    if (check->parsed()) return run_check(opt);
    if (realize->parsed()) return run_realize(opt);
    if (dim->parsed()) return run_dim(opt);
    return run_export(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
    return exit_code_for(e);
  }
}
