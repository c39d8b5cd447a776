#include <algorithm>
#include <string>

#include "CLI11.hpp"
#include "tilab/cli.hpp"

namespace tilab::cli {
namespace {

std::vector<IndexKind> parse_kinds(const std::vector<std::string>& names) {
  std::vector<IndexKind> out;
  for (const std::string& name : names) {
    if (name == "all") {
      out.assign(kAllIndexKinds.begin(), kAllIndexKinds.end());
      continue;
    }
    const std::optional<IndexKind> kind = parse_index_kind(name);
    if (!kind) throw CLI::ValidationError("--kind", "unknown index '" + name + "'");
    if (std::find(out.begin(), out.end(), *kind) == out.end()) out.push_back(*kind);
  }
  return out;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return Format::Plain;
}

struct Shared {
  std::string format = "plain";
  std::vector<std::string> kinds = {"all"};
};

void add_output(CLI::App* sub, RunConfig& cfg, Shared& shared) {
  sub->add_option("--format", shared.format, "json, csv or plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  sub->add_option("--out", cfg.out, "write the report to this path instead of stdout");
}

void add_inputs(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--graph6", cfg.graph6, "graph6 string (repeatable)");
  sub->add_option("--file", cfg.file, "file with one graph6 string per line");
  sub->add_flag("--strict", cfg.strict, "abort at the first malformed line");
}

}  // namespace

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out,
                                    std::ostream& err, int& exit_code) {
  RunConfig cfg;
  Shared shared;
  CLI::App app{"Topological index toolkit for graphs of bounded vertex k-partiteness",
               "tilab"};
  app.require_subcommand(1);

  CLI::App* index = app.add_subcommand("index", "evaluate indices on graph6 input");
  add_inputs(index, cfg);
  index->add_option("--kind", shared.kinds, "index ids, comma separated, or all")
      ->delimiter(',');
  add_output(index, cfg, shared);

  CLI::App* vk = app.add_subcommand("vk", "vertex k-partiteness of graph6 input");
  add_inputs(vk, cfg);
  vk->add_option("--k", cfg.k, "number of parts")->check(CLI::Range(2, 64));
  add_output(vk, cfg, shared);

  CLI::App* construct = app.add_subcommand("construct", "print the extremal construction");
  construct->add_option("--n", cfg.n)->required();
  construct->add_option("--m", cfg.m)->required()->expected(1);
  construct->add_option("--k", cfg.k)->required();
  add_output(construct, cfg, shared);

  CLI::App* scan = app.add_subcommand("scan", "exhaustive extremal scan of a class");
  scan->add_option("--n", cfg.n)->required();
  scan->add_option("--m", cfg.m, "one or more m values")->required()->delimiter(',');
  scan->add_option("--k", cfg.k)->required();
  scan->add_option("--kind", shared.kinds, "index ids, comma separated, or all")
      ->delimiter(',');
  scan->add_option("--workers", cfg.workers)->check(CLI::PositiveNumber);
  scan->add_flag("--large", cfg.large, "allow n = 8");
  add_output(scan, cfg, shared);

  CLI::App* verify = app.add_subcommand("verify", "check printed bounds over a grid");
  verify->add_option("--claim", cfg.claims, "claim ids, comma separated, or all")
      ->required()
      ->delimiter(',');
  verify->add_option("--nmin", cfg.grid.n_min);
  verify->add_option("--nmax", cfg.grid.n_max);
  verify->add_option("--kmin", cfg.grid.k_min);
  verify->add_option("--kmax", cfg.grid.k_max);
  verify->add_option("--scan-nmax", cfg.grid.scan_n_max,
                     "also scan classes up to this order");
  verify->add_option("--min-part", cfg.grid.min_part_size, "skip tuples with s below this");
  verify->add_option("--workers", cfg.grid.workers)->check(CLI::PositiveNumber);
  add_output(verify, cfg, shared);

  CLI::App* fuzz = app.add_subcommand("fuzz", "edge-addition monotonicity fuzzing");
  fuzz->add_option("--kind", shared.kinds, "index ids, comma separated, or all")
      ->delimiter(',');
  fuzz->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
  fuzz->add_option("--nmin", cfg.fuzz_n_min);
  fuzz->add_option("--nmax", cfg.fuzz_n_max);
  fuzz->add_option("--seed", cfg.seed);
  add_output(fuzz, cfg, shared);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.kinds = parse_kinds(shared.kinds);
    cfg.format = parse_format(shared.format);
    if (cfg.subcommand == "verify" && std::find(cfg.claims.begin(), cfg.claims.end(), "all") !=
                                          cfg.claims.end()) {
      cfg.claims.clear();
      for (const ClaimInfo& c : claim_catalog()) cfg.claims.emplace_back(c.id);
    }
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e, out, err) == 0 ? kExitOk : kExitError;
    return std::nullopt;
  }
  return cfg;
}

}  // namespace tilab::cli
