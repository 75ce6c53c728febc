#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sparse_evolve/census.hpp"
#include "sparse_evolve/errors.hpp"
#include "sparse_evolve/evolve.hpp"
#include "sparse_evolve/expectation.hpp"
#include "sparse_evolve/experiment.hpp"
#include "sparse_evolve/io.hpp"

namespace sparse_evolve {

namespace {

struct Options {
  std::string alpha;
  std::uint64_t seed = 0;
  std::uint64_t t = 0;
  std::uint64_t tau0 = 1;
  std::string out;
  std::string spec;
  std::string graph;
  std::string from;
  std::string extension;
  std::vector<Vertex> roots;
  std::vector<Vertex> forbidden;
  std::string mode = "closed";
  std::string format = "json";
  unsigned threads = 1;
  bool timing = false;
};

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_text_file(o.out, text);
  }
}

Json exact_json(const Exact& x) { return to_string(x); }

int cmd_grow(const Options& o, std::ostream& out) {
  if (o.t < 1 || o.t > 0xffffffffull) throw ArgumentError("--T must be in [1, 2^32)");
  EvolvingGraph g = [&] {
    if (!o.from.empty()) return graph_from_json(read_json_file(o.from));
    if (o.alpha.empty()) throw ArgumentError("--alpha is required");
    return EvolvingGraph(Alpha::parse(o.alpha), o.seed);
  }();
  if (o.t < g.num_vertices()) {
    throw ArgumentError("--T " + std::to_string(o.t) + " is below the loaded graph size " +
                        std::to_string(g.num_vertices()));
  }
  grow(g, static_cast<Vertex>(o.t), EdgeSchedule::power_law(g.alpha()));
  if (o.format == "csv") {
    std::string text = "i,j\n";
    for (auto [a, b] : g.edges()) text += std::to_string(a) + "," + std::to_string(b) + "\n";
    emit(o, text, out);
  } else {
    emit(o, dump(graph_to_json(g)), out);
  }
  return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  const EvolvingGraph g = graph_from_json(read_json_file(o.graph));
  const RootedExtension ext = extension_from_json(read_json_file(o.extension));
  if (o.roots.size() != static_cast<std::size_t>(ext.root_size())) {
    throw ArgumentError("--roots has " + std::to_string(o.roots.size()) +
                        " vertices but the extension root has " +
                        std::to_string(ext.root_size()));
  }
  const EmbeddingCount c = count_embeddings(g, ext, o.roots, o.forbidden, o.threads);
  if (o.format == "csv") {
    emit(o,
         "embeddings,copies_num,copies_den\n" + std::to_string(c.embeddings) + "," +
             std::to_string(c.copies_num) + "," + std::to_string(c.copies_den) + "\n",
         out);
  } else {
    emit(o, dump(census_to_json(c)), out);
  }
  return kExitOk;
}

int cmd_expect(const Options& o, std::ostream& out) {
  const RootedExtension ext = extension_from_json(read_json_file(o.extension));
  const Alpha alpha = Alpha::parse(o.alpha);
  if (o.mode != "closed" && o.mode != "oracle" && o.mode != "both") {
    throw ArgumentError("--mode must be closed, oracle or both");
  }
  Json j;
  j["alpha"] = alpha.to_string();
  j["tau0"] = o.tau0;
  j["T"] = o.t;
  j["mode"] = o.mode;
  std::optional<double> closed, oracle;
  if (o.mode != "oracle") {
    const AsymptoticExponent asym = asymptotic_exponent(ext, alpha);
    const ClosedFormExpectation c =
        expected_count_closed(ext, alpha, static_cast<double>(o.tau0), static_cast<double>(o.t));
    j["regime"] = to_string(asym.regime);
    j["asymptotic_exponent"] = to_string(asym.exponent);
    j["dominant_t_exponent"] = exact_json(c.theta.dominant_t_exponent);
    Json terms = Json::array();
    for (const auto& term : c.theta.terms) {
      Json row;
      Json subset = Json::array();
      for (int i = 0; i < ext.ext_size(); ++i)
        if (term.subset >> i & 1u) subset.push_back(i);
      row["subset"] = subset;
      row["coefficient"] = exact_json(term.coefficient);
      row["t_exponent"] = exact_json(term.t_exponent);
      row["tau0_exponent"] = exact_json(term.tau0_exponent);
      terms.push_back(std::move(row));
    }
    j["theta"] = terms;
    j["closed"] = c.value;
    closed = c.value;
  }
  if (o.mode != "closed") {
    oracle = exact_expectation_oracle(ext, alpha, o.tau0, o.t);
    j["oracle"] = *oracle;
  }
  if (closed && oracle) j["ratio"] = *closed != 0.0 ? Json(*oracle / *closed) : Json(nullptr);
  emit(o, dump(j), out);
  return kExitOk;
}

std::filesystem::path sibling_json(const std::filesystem::path& p) {
  std::filesystem::path q = p;
  if (q.extension() == ".json") q.replace_extension(".report.json");
  else q.replace_extension(".json");
  return q;
}

int cmd_experiment(const Options& o, std::ostream& out) {
  const ExperimentSpec spec = ExperimentSpec::from_json(read_json_file(o.spec));
  RunOptions run;
  run.threads = o.threads;
  run.timing = o.timing;
  const ExperimentReport report = run_experiment(spec, run);
  const std::string csv = report.csv();
  const std::string json = dump(report.to_json());
  if (o.out.empty()) {
    out << (o.format == "csv" ? csv : json);
  } else {
    write_text_file(o.out, csv);
    write_text_file(sibling_json(o.out), json);
    out << json;
  }
  return report.pass ? kExitOk : kExitOther;
}

Json error_json(const char* kind, const std::string& message) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  return j;
}

unsigned default_threads() {
  if (const char* env = std::getenv("SPARSE_EVOLVE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evolving sparse random graphs: growth, census, expectations, experiments",
               "sparse-evolve"};
  app.require_subcommand(1);
  Options o;
  o.threads = default_threads();

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Output path (default stdout)"); };

  CLI::App* grow_cmd = app.add_subcommand("grow", "Grow G(T) and write it as JSON");
  grow_cmd->add_option("--alpha", o.alpha, "Edge exponent p/q in (0,1)");
  grow_cmd->add_option("--seed", o.seed, "Random seed");
  grow_cmd->add_option("--T", o.t, "Number of vertices")->required();
  grow_cmd->add_option("--from", o.from, "Continue growing a saved graph");
  add_out(grow_cmd);
  add_format(grow_cmd);

  CLI::App* count_cmd = app.add_subcommand("count", "Count rooted induced embeddings");
  count_cmd->add_option("--graph", o.graph, "Graph JSON file")->required();
  count_cmd->add_option("--extension", o.extension, "Extension JSON file")->required();
  count_cmd->add_option("--roots", o.roots, "Root vertices, comma separated")->delimiter(',');
  count_cmd->add_option("--forbidden", o.forbidden, "Excluded vertices, comma separated")
      ->delimiter(',');
  count_cmd->add_option("--threads", o.threads, "Worker threads (env SPARSE_EVOLVE_THREADS)")
      ->check(CLI::PositiveNumber);
  add_out(count_cmd);
  add_format(count_cmd);

  CLI::App* expect_cmd = app.add_subcommand("expect", "Expected embedding counts");
  expect_cmd->add_option("--extension", o.extension, "Extension JSON file")->required();
  expect_cmd->add_option("--alpha", o.alpha, "Edge exponent p/q in (0,1)")->required();
  expect_cmd->add_option("--tau0", o.tau0, "Warm-up size");
  expect_cmd->add_option("--T", o.t, "Horizon")->required();
  expect_cmd->add_option("--mode", o.mode, "closed, oracle or both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}));
  add_out(expect_cmd);

  CLI::App* exp_cmd = app.add_subcommand("experiment", "Run a Monte Carlo experiment");
  exp_cmd->add_option("--spec", o.spec, "Experiment spec JSON file")->required();
  exp_cmd->add_option("--threads", o.threads, "Worker threads (env SPARSE_EVOLVE_THREADS)")
      ->check(CLI::PositiveNumber);
  exp_cmd->add_option("--out", o.out, "CSV path; the JSON report goes next to it");
  exp_cmd->add_flag("--timing", o.timing, "Record wall-clock elapsed_ms");
  add_format(exp_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitArgument;
  }

  try {
    if (grow_cmd->parsed()) return cmd_grow(o, out);
    if (count_cmd->parsed()) return cmd_count(o, out);
    if (expect_cmd->parsed()) return cmd_expect(o, out);
    if (exp_cmd->parsed()) return cmd_experiment(o, out);
  } catch (const DegeneracyError& e) {
    err << dump(error_json("degeneracy", e.what()));
    return kExitDegeneracy;
  } catch (const InfeasibleError& e) {
    err << dump(error_json("infeasible", e.what()));
    return kExitInfeasible;
  } catch (const ArgumentError& e) {
    err << dump(error_json("argument", e.what()));
    return kExitArgument;
  } catch (const std::exception& e) {
    err << dump(error_json("internal", e.what()));
    return kExitOther;
  }
  return kExitArgument;
}

}  // namespace sparse_evolve
