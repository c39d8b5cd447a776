#include <fstream>
#include <sstream>

#include "tilab/cli.hpp"
#include "tilab/errors.hpp"
#include "tilab/graph6.hpp"

namespace tilab::cli {
namespace {

struct Inputs {
  std::vector<Graph> graphs;
  bool had_error = false;
};

Inputs load_inputs(const RunConfig& cfg, std::ostream& err) {
  if (cfg.graph6.empty() && cfg.file.empty()) {
    throw InvalidArgument("give --graph6 or --file");
  }
  Inputs in;
  for (const std::string& text : cfg.graph6) {
    try {
      in.graphs.push_back(parse_graph6(text));
    } catch (const ParseError& e) {
      throw ParseError("graph6 '" + text + "': " + e.what());
    }
  }
  if (!cfg.file.empty()) {
    std::ifstream file(cfg.file);
    if (!file) throw Error("cannot open " + cfg.file);
    Corpus corpus;
    try {
      corpus = load_graph6_corpus(file, cfg.strict);
    } catch (const ParseError& e) {
      throw ParseError(cfg.file + ": " + e.what());
    }
    for (const CorpusError& e : corpus.errors) {
      err << cfg.file << ": line " << e.line << ": " << e.message << '\n';
      in.had_error = true;
    }
    for (Graph& g : corpus.graphs) in.graphs.push_back(std::move(g));
  }
  return in;
}

int cmd_index(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Inputs in = load_inputs(cfg, err);
  std::vector<IndexRecord> records;
  for (const Graph& g : in.graphs) {
    const std::string code = to_graph6(g);
    try {
      const std::vector<IndexValue> values = evaluate_all(cfg.kinds, g);
      for (std::size_t i = 0; i < values.size(); ++i) {
        records.push_back({code, cfg.kinds[i], values[i]});
      }
    } catch (const Error& e) {
      err << "graph " << code << ": " << e.what() << '\n';
      in.had_error = true;
    }
  }
  write_index(out, cfg.format, records, cfg.kinds.size());
  return in.had_error ? kExitError : kExitOk;
}

int cmd_vk(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Inputs in = load_inputs(cfg, err);
  std::vector<VkRecord> records;
  for (const Graph& g : in.graphs) {
    const std::string code = to_graph6(g);
    try {
      records.push_back({code, cfg.k, vertex_k_partiteness(g, cfg.k)});
    } catch (const Error& e) {
      err << "graph " << code << ": " << e.what() << '\n';
      in.had_error = true;
    }
  }
  write_vk(out, cfg.format, records);
  return in.had_error ? kExitError : kExitOk;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const ClassParams params{cfg.n, cfg.m.front(), cfg.k};
  const PartitionSpec spec = part_sizes(params);
  write_construct(out, cfg.format, spec, to_graph6(extremal_graph(params)));
  return kExitOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  std::vector<Objective> objectives;
  for (IndexKind kind : cfg.kinds) objectives.push_back({kind, natural_sense(kind)});
  const std::vector<ExtremalReport> reports =
      scan_classes(cfg.n, cfg.k, cfg.m, objectives, {cfg.workers, cfg.large});
  write_scan(out, cfg.format, reports);
  for (const ExtremalReport& r : reports) {
    if (!r.matches_construction || !r.matches_closed_form) return kExitRefuted;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<VerificationReport> reports;
  for (const std::string& claim : cfg.claims) reports.push_back(verify_theorem(claim, cfg.grid));
  write_verify(out, cfg.format, reports);
  for (const VerificationReport& r : reports) {
    if (r.count(Verdict::Refuted) > 0) return kExitRefuted;
  }
  return kExitOk;
}

int cmd_fuzz(const RunConfig& cfg, std::ostream& out) {
  std::vector<FuzzReport> reports;
  for (IndexKind kind : cfg.kinds) {
    reports.push_back(monotonicity_fuzz(kind, cfg.trials, cfg.fuzz_n_min, cfg.fuzz_n_max, cfg.seed));
  }
  write_fuzz(out, cfg.format, reports);
  for (const FuzzReport& r : reports) {
    if (!r.violations.empty()) return kExitRefuted;
  }
  return kExitOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string& sub = cfg.subcommand;
  if (sub == "index") return cmd_index(cfg, out, err);
  if (sub == "vk") return cmd_vk(cfg, out, err);
  if (sub == "construct") return cmd_construct(cfg, out);
  if (sub == "scan") return cmd_scan(cfg, out);
  if (sub == "verify") return cmd_verify(cfg, out);
  if (sub == "fuzz") return cmd_fuzz(cfg, out);
  throw InvalidArgument("unknown subcommand " + sub);
}

}  // namespace

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.out.empty()) return dispatch(cfg, out, err);
    // Render fully before touching the file so a failed run leaves no partial report.
    std::ostringstream buffer;
    const int code = dispatch(cfg, buffer, err);
    std::ofstream file(cfg.out);
    if (!file) throw Error("cannot write " + cfg.out);
    file << buffer.str();
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  const std::optional<RunConfig> cfg = parse_args(args, out, err, code);
  if (!cfg) return code;
  return execute(*cfg, out, err);
}

}  // namespace tilab::cli
