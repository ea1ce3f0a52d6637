#include "edgepart/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <utility>

#include "edgepart/edge_coloring.hpp"
#include "edgepart/error.hpp"
#include "edgepart/oracles.hpp"
#include "edgepart/partition.hpp"
#include "edgepart/reductions.hpp"
#include "edgepart/representation.hpp"
#include "edgepart/tree_decomp.hpp"

namespace edgepart::cli {

namespace {

std::string fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

template <typename Range>
std::string join(const Range& r, std::string_view sep = " ") {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : r) {
    if (!first) out << sep;
    out << x;
    first = false;
  }
  return out.str();
}

// Human-readable lines followed by one key=value block in insertion order.
class Report {
 public:
  explicit Report(std::string command) { set("command", std::move(command)); }

  void say(std::string line) { human_.push_back(std::move(line)); }
  void set(std::string key, std::string value) { fields_.emplace_back(std::move(key), std::move(value)); }
  void set(std::string key, bool value) { set(std::move(key), std::string(value ? "true" : "false")); }

  void print(std::ostream& out) const {
    for (const auto& line : human_) out << line << '\n';
    out << "BEGIN REPORT\n";
    for (const auto& [k, v] : fields_) out << k << '=' << v << '\n';
    out << "END REPORT\n";
  }

 private:
  std::vector<std::string> human_;
  std::vector<std::pair<std::string, std::string>> fields_;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool timing = false;
  bool stdin_used = false;
};

std::string read_source(Context& ctx, const std::string& path) {
  if (path.empty() || path == "-") {
    if (ctx.stdin_used) throw ParameterError("standard input can only be read once");
    ctx.stdin_used = true;
    return {std::istreambuf_iterator<char>(ctx.in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParameterError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParameterError("cannot write '" + path + "'");
  file << content;
}

Family parse_family(const std::string& name) {
  if (auto f = family_from_string(name)) return *f;
  throw ParameterError("unknown family '" + name + "'");
}

void describe_partition(Report& report, const EdgePartition& p) {
  report.say("parts: " + std::to_string(p.num_parts()) + " (nonempty " +
             std::to_string(p.num_nonempty()) + ")");
  report.say("part sizes: " + join(p.part_sizes()));
  report.set("parts", std::to_string(p.num_parts()));
  report.set("nonempty_parts", std::to_string(p.num_nonempty()));
  report.set("has_empty_part", p.has_empty_part());
  report.set("assignment", join(p.parts()));
}

// Each subcommand fills a report and returns its exit code.
using Handler = std::function<int(Context&, Report&)>;

int decide_tree(Context& ctx, Report& report, const std::string& input, std::optional<std::size_t> c) {
  const std::string text = read_source(ctx, input);
  report.set("input_digest", fnv1a64(text));
  const Graph t = parse_graph(text);
  const TreeDecision d = c ? wrc_tree(t, *c) : wr2_tree(t);
  report.say(d.yes ? "YES" : "NO");
  report.set("result", std::string(d.yes ? "YES" : "NO"));
  if (!d.yes) {
    report.set("verified", std::string("n/a"));
    return kNegative;
  }
  report.say("targets: " + join(d.alphas));
  report.set("targets", join(d.alphas));
  describe_partition(report, *d.witness);
  const bool ok = d.witness->num_parts() == (c ? *c : 2) &&
                  verify_partition(t, *d.witness, Family::weakly_semiregular);
  report.set("verified", ok);
  return ok ? kSuccess : kVerifierFailure;
}

int decompose(Context& ctx, Report& report, const std::string& input, const std::string& method,
              const std::string& out_path) {
  const std::string text = read_source(ctx, input);
  report.set("input_digest", fnv1a64(text));
  const Graph g = parse_graph(text);
  EdgePartition p;
  Family family = Family::weakly_semiregular;
  std::optional<std::size_t> bound;
  if (method == "alg3") {
    p = alg3(g).partition;
    const std::size_t bits = std::bit_width(g.max_degree());
    bound = 2 * bits;
  } else if (method == "sr-tree") {
    p = sr_tree(g);
    family = Family::semiregular;
    bound = (g.max_degree() + 1) / 2;
  } else if (method == "sr-general") {
    p = sr_general(g);
    family = Family::semiregular;
    bound = (g.max_degree() + 2) / 2;
  } else if (method == "wr2-deg4") {
    p = wr2_deg4(g);
    bound = 2;
  } else {
    throw ParameterError("unknown method '" + method + "'");
  }
  report.say("method: " + method + ", family " + std::string(to_string(family)));
  report.set("method", method);
  report.set("family", std::string(to_string(family)));
  describe_partition(report, p);
  if (!out_path.empty()) write_file(out_path, serialize_partition(p));
  const bool ok = verify_partition(g, p, family) && p.num_parts() <= *bound;
  report.set("verified", ok);
  return ok ? kSuccess : kVerifierFailure;
}

int oracle(Context& ctx, Report& report, const std::string& input, const std::string& family_name,
           const OracleBudget& budget) {
  const std::string text = read_source(ctx, input);
  report.set("input_digest", fnv1a64(text));
  const Graph g = parse_graph(text);
  const Family family = parse_family(family_name);
  const OracleResult r = oracle_min_parts(g, family, budget);
  report.set("family", std::string(to_string(family)));
  if (!r.min_parts) {
    report.say("> " + std::to_string(budget.max_parts));
    report.set("result", "> " + std::to_string(budget.max_parts));
    report.set("verified", std::string("n/a"));
    return kNegative;
  }
  report.say(std::to_string(*r.min_parts));
  report.set("result", std::to_string(*r.min_parts));
  describe_partition(report, *r.witness);
  const bool ok = verify_partition(g, *r.witness, family);
  report.set("verified", ok);
  return ok ? kSuccess : kVerifierFailure;
}

int verify(Context& ctx, Report& report, const std::string& input, const std::string& family_name,
           const std::string& partition_path) {
  const std::string text = read_source(ctx, input);
  const std::string ptext = read_source(ctx, partition_path);
  report.set("input_digest", fnv1a64(text + '\0' + ptext));
  const Graph g = parse_graph(text);
  const EdgePartition p = parse_partition(ptext);
  const Family family = parse_family(family_name);
  const bool ok = verify_partition(g, p, family);
  report.say(ok ? "VALID" : "INVALID");
  report.set("family", std::string(to_string(family)));
  report.set("result", std::string(ok ? "VALID" : "INVALID"));
  report.set("nonempty_parts", std::to_string(p.num_nonempty()));
  report.set("has_empty_part", p.has_empty_part());
  report.set("verified", ok);
  return ok ? kSuccess : kNegative;
}

int reduce(Context& ctx, Report& report, const std::string& input, const std::string& variant,
           const std::vector<std::string>& gadget_specs, const std::string& out_path) {
  const std::string text = read_source(ctx, input);
  std::string digest_input = text;
  Graph result;
  bool ok = false;
  if (variant == "thm4") {
    result = thm4_construct(parse_graph(text));
    const DegreeSet d = degree_set(result);
    ok = d == DegreeSet({1, 2, 3, 4, 5, 6, 7, 8, 9});
    report.set("wr_lower_bound", std::to_string(wr_lower_bound(result)));
  } else if (auto v = variant_from_string(variant)) {
    const NaeFormula f = parse_nae(text);
    GadgetSet gadgets;
    for (const auto& spec : gadget_specs) {
      const auto eq = spec.find('=');
      if (eq == std::string::npos) throw ParameterError("gadget must be NAME=PATH, got '" + spec + "'");
      const std::string gtext = read_source(ctx, spec.substr(eq + 1));
      digest_input += '\0' + spec.substr(0, eq) + '\0' + gtext;
      gadgets.emplace(spec.substr(0, eq), parse_gadget(gtext));
    }
    const Reduction red = gadget_reduce(f, gadgets, *v);
    result = red.graph;
    report.set("cubic_formula", f.is_cubic());
    report.set("variable_vertices", join(red.ports.variable));
    report.set("clause_ports", join(red.ports.clause_port));
    report.set("clause_checks", join(red.ports.clause_check));
    const std::vector<std::size_t> allowed =
        *v == ReductionVariant::thm2 ? std::vector<std::size_t>{1, 3, 6}
                                     : std::vector<std::size_t>{2, 3, 4, 6};
    const DegreeSet d = degree_set(result);
    ok = bipartition(result).has_value() &&
         std::all_of(d.values().begin(), d.values().end(), [&](std::size_t x) {
           return std::find(allowed.begin(), allowed.end(), x) != allowed.end();
         });
  } else {
    throw ParameterError("unknown variant '" + variant + "'");
  }
  report.set("input_digest", fnv1a64(digest_input));
  report.say("vertices: " + std::to_string(result.num_vertices()) +
             ", edges: " + std::to_string(result.num_edges()));
  report.say("degree set: " + join(degree_set(result).values()));
  report.set("variant", variant);
  report.set("vertices", std::to_string(result.num_vertices()));
  report.set("edges", std::to_string(result.num_edges()));
  report.set("degree_set", join(degree_set(result).values()));
  if (!out_path.empty()) {
    write_file(out_path, serialize_graph(result));
  } else {
    report.say(serialize_graph(result));
  }
  report.set("verified", ok);
  return ok ? kSuccess : kVerifierFailure;
}

int nae_solve(Context& ctx, Report& report, const std::string& input) {
  const std::string text = read_source(ctx, input);
  report.set("input_digest", fnv1a64(text));
  const NaeFormula f = parse_nae(text);
  report.set("variables", std::to_string(f.num_vars));
  report.set("clauses", std::to_string(f.clauses.size()));
  report.set("cubic", f.is_cubic());
  const auto a = nae_bruteforce(f);
  if (!a) {
    report.say("UNSAT");
    report.set("result", std::string("UNSAT"));
    report.set("verified", std::string("n/a"));
    return kNegative;
  }
  std::vector<int> bits(a->begin(), a->end());
  report.say("SAT");
  report.say("assignment: " + join(bits));
  report.set("result", std::string("SAT"));
  report.set("assignment", join(bits));
  const bool ok = nae_satisfies(f, *a);
  report.set("verified", ok);
  return ok ? kSuccess : kVerifierFailure;
}

int rep_command(Context& ctx, Report& report, const std::string& action, const std::string& input,
                const std::string& rep_path, std::uint64_t r_max) {
  const std::string text = read_source(ctx, input);
  const Graph g = parse_graph(text);
  if (action == "verify") {
    const std::string rtext = read_source(ctx, rep_path);
    report.set("input_digest", fnv1a64(text + '\0' + rtext));
    const bool ok = verify_rep(g, parse_rep(rtext));
    report.say(ok ? "VALID" : "INVALID");
    report.set("result", std::string(ok ? "VALID" : "INVALID"));
    report.set("verified", ok);
    return ok ? kSuccess : kNegative;
  }
  report.set("input_digest", fnv1a64(text));
  Representation rep;
  std::vector<std::uint64_t> primes;
  if (action == "search") {
    auto found = rep_search(g, {.r_max = r_max});
    if (!found) {
      report.say("not found for r <= " + std::to_string(r_max));
      report.set("result", std::string("not-found"));
      report.set("verified", std::string("n/a"));
      return kNegative;
    }
    rep = std::move(*found);
  } else {
    TfcRepresentation built = rep_construct_tfc(g);
    rep = std::move(built.rep);
    primes = std::move(built.plan.primes);
  }
  report.say(serialize_rep(rep, primes));
  report.set("result", std::to_string(rep.modulus));
  if (!primes.empty()) report.set("primes", join(primes));
  report.set("labels", join(rep.labels));
  const bool ok = verify_rep(g, rep);
  report.set("verified", ok);
  return ok ? kSuccess : kVerifierFailure;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Edge partitions into weakly semiregular, semiregular and related subgraphs"};
  app.name("edgepart");
  app.require_subcommand(1);
  app.add_flag("--timing", ctx.timing, "Append elapsed_ms to the report");

  Handler handler;
  std::string command;
  std::string input = "-";

  auto* decide = app.add_subcommand("decide", "Decide wr(T) <= 2 or <= c for a tree");
  decide->require_subcommand(1);
  auto* wr2 = decide->add_subcommand("wr2-tree", "Is wr(T) <= 2?");
  wr2->add_option("graph", input, "Edge-list file (default: stdin)");
  wr2->callback([&] {
    command = "decide wr2-tree";
    handler = [&](Context& c, Report& r) { return decide_tree(c, r, input, std::nullopt); };
  });
  std::size_t parts_c = 0;
  auto* wrc = decide->add_subcommand("wrc-tree", "Is wr(T) <= c?");
  wrc->add_option("--c", parts_c, "Part count c")->required()->check(CLI::Range(1, 64));
  wrc->add_option("graph", input, "Edge-list file (default: stdin)");
  wrc->callback([&] {
    command = "decide wrc-tree --c " + std::to_string(parts_c);
    handler = [&](Context& c, Report& r) { return decide_tree(c, r, input, parts_c); };
  });

  std::string method, out_path;
  auto* dec = app.add_subcommand("decompose", "Construct a decomposition");
  dec->add_option("--method", method, "alg3 | sr-tree | sr-general | wr2-deg4")
      ->required()
      ->check(CLI::IsMember({"alg3", "sr-tree", "sr-general", "wr2-deg4"}));
  dec->add_option("--out", out_path, "Write the partition file here");
  dec->add_option("graph", input, "Edge-list file (default: stdin)");
  dec->callback([&] {
    command = "decompose --method " + method;
    handler = [&](Context& c, Report& r) { return decompose(c, r, input, method, out_path); };
  });

  std::string family = "weakly-semiregular";
  OracleBudget budget;
  auto* orc = app.add_subcommand("oracle", "Exhaustive minimum part count");
  orc->add_option("--family", family, "Family name");
  orc->add_option("--max-parts", budget.max_parts, "Largest part count to try");
  orc->add_option("--max-edges", budget.max_edges, "Edge budget (hard guard 24)");
  orc->add_option("graph", input, "Edge-list file (default: stdin)");
  orc->callback([&] {
    command = "oracle --family " + family + " --max-parts " + std::to_string(budget.max_parts);
    handler = [&](Context& c, Report& r) { return oracle(c, r, input, family, budget); };
  });

  std::string partition_path;
  auto* ver = app.add_subcommand("verify", "Check a partition file against a family");
  ver->add_option("--family", family, "Family name");
  ver->add_option("--partition", partition_path, "Partition file")->required();
  ver->add_option("graph", input, "Edge-list file (default: stdin)");
  ver->callback([&] {
    command = "verify --family " + family;
    handler = [&](Context& c, Report& r) { return verify(c, r, input, family, partition_path); };
  });

  std::string variant;
  std::vector<std::string> gadget_specs;
  auto* red = app.add_subcommand("reduce", "Build a reduction instance");
  red->add_option("--variant", variant, "thm2 | thm3iii | thm4")
      ->required()
      ->check(CLI::IsMember({"thm2", "thm3iii", "thm4"}));
  red->add_option("--gadget", gadget_specs, "NAME=PATH gadget file (repeatable)")->allow_extra_args(false);
  red->add_option("--out", out_path, "Write the constructed graph here");
  red->add_option("input", input, "Graph (thm4) or NAE formula (default: stdin)");
  red->callback([&] {
    command = "reduce --variant " + variant;
    handler = [&](Context& c, Report& r) { return reduce(c, r, input, variant, gadget_specs, out_path); };
  });

  auto* nae = app.add_subcommand("nae", "NAE-SAT tools");
  nae->require_subcommand(1);
  auto* solve = nae->add_subcommand("solve", "Brute-force NAE satisfiability");
  solve->add_option("formula", input, "Formula file (default: stdin)");
  solve->callback([&] {
    command = "nae solve";
    handler = [&](Context& c, Report& r) { return nae_solve(c, r, input); };
  });

  std::string rep_path;
  std::uint64_t r_max = 64;
  auto* rep = app.add_subcommand("rep", "Representations modulo r");
  rep->require_subcommand(1);
  auto* rep_verify = rep->add_subcommand("verify", "Check a representation file");
  rep_verify->add_option("--rep", rep_path, "Representation file")->required();
  rep_verify->add_option("graph", input, "Edge-list file (default: stdin)");
  rep_verify->callback([&] {
    command = "rep verify";
    handler = [&](Context& c, Report& r) { return rep_command(c, r, "verify", input, rep_path, 0); };
  });
  auto* rep_search_cmd = rep->add_subcommand("search", "Least modulus by exhaustive search");
  rep_search_cmd->add_option("--r-max", r_max, "Largest modulus to try");
  rep_search_cmd->add_option("graph", input, "Edge-list file (default: stdin)");
  rep_search_cmd->callback([&] {
    command = "rep search --r-max " + std::to_string(r_max);
    handler = [&](Context& c, Report& r) { return rep_command(c, r, "search", input, "", r_max); };
  });
  auto* rep_build = rep->add_subcommand("construct", "Prime-product construction");
  rep_build->add_option("graph", input, "Edge-list file (default: stdin)");
  rep_build->callback([&] {
    command = "rep construct";
    handler = [&](Context& c, Report& r) { return rep_command(c, r, "construct", input, "", 0); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // --help and --version arrive here as well, with exit code 0.
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report(command);
  int code = kSuccess;
  try {
    code = handler(ctx, report);
  } catch (const ResourceError& e) {
    err << "budget error: " << e.what() << '\n';
    return kBudgetError;
  } catch (const Error& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
  if (ctx.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    report.set("elapsed_ms", std::to_string(ms.count()));
  }
  report.print(out);
  if (code == kVerifierFailure) err << "verifier rejected the produced result\n";
  return code;
}

}  // namespace edgepart::cli
