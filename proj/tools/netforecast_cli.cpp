// Command-line driver: synthetic series generation, single forecasts,
// rolling-origin evaluation, and solution-space bounds reporting.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "netforecast/bounds.hpp"
#include "netforecast/evaluation.hpp"
#include "netforecast/io.hpp"
#include "netforecast/optimizer.hpp"
#include "netforecast/synthetic.hpp"

namespace {

using namespace netforecast;

// "a..b" or comma-separated integers.
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  const auto range = text.find("..");
  if (range != std::string::npos) {
    const int lo = std::stoi(text.substr(0, range));
    const int hi = std::stoi(text.substr(range + 2));
    if (hi < lo) throw CLI::ValidationError("range '" + text + "' is empty");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto comma = text.find(',', pos);
    const std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!tok.empty()) out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw CLI::ValidationError("empty list '" + text + "'");
  return out;
}

std::vector<std::string> parse_scheme_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!tok.empty()) {
      if (tok != "LS") scheme_from_string(tok);  // validates
      out.push_back(tok);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw CLI::ValidationError("no schemes in '" + text + "'");
  return out;
}

struct CommonForecastFlags {
  std::string input;
  std::string window_mode = "day";
  int window_count = 1;
  bool keep_empty = false;
  std::string scheme = "C5";
  std::string formulation = "F2";
  double gamma = 0.5;
  double u = 0.55;
  int K = 0;
  std::string solver = "auto";
  int exact_limit = 30;
  double d_avg = -1.0;  // <0: estimate from the series
};

void add_common_flags(CLI::App* cmd, CommonForecastFlags& f,
                      bool with_formulation = true) {
  cmd->add_option("--input", f.input, "edge-list file (u v t per line)")
      ->required();
  cmd->add_option("--window", f.window_mode,
                  "window mode: day, month, or count")
      ->check(CLI::IsMember({"day", "month", "count"}));
  cmd->add_option("--window-count", f.window_count,
                  "events per window for --window count");
  cmd->add_flag("--keep-empty", f.keep_empty,
                "emit edgeless graphs for empty day/month windows");
  cmd->add_option("--scheme", f.scheme, "coefficient scheme C1..C6");
  if (with_formulation) {
    cmd->add_option("--formulation", f.formulation, "F1 or F2");
  }
  cmd->add_option("--gamma", f.gamma, "node-count forecast quantile");
  cmd->add_option("--u", f.u, "degree/edge upper-bound quantile");
  cmd->add_option("--K", f.K,
                  "popular-set size (default max(10, ceil(d_avg)))");
  cmd->add_option("--solver", f.solver, "exact, heuristic, or auto");
  cmd->add_option("--exact-limit", f.exact_limit,
                  "variable-count cutoff for the exact solver");
  cmd->add_option("--d-avg", f.d_avg,
                  "override the new-node mean degree estimate");
}

WindowSpec window_from_flags(const CommonForecastFlags& f) {
  WindowSpec w;
  if (f.window_mode == "day") {
    w.mode = WindowSpec::Mode::day;
  } else if (f.window_mode == "month") {
    w.mode = WindowSpec::Mode::month;
  } else {
    w.mode = WindowSpec::Mode::fixed_count;
    w.count = f.window_count;
  }
  w.keep_empty = f.keep_empty;
  return w;
}

ForecastParams params_from_flags(const CommonForecastFlags& f) {
  ForecastParams p;
  p.scheme = scheme_from_string(f.scheme);
  p.formulation = formulation_from_string(f.formulation);
  p.gamma = f.gamma;
  p.u = f.u;
  p.K = f.K;
  p.solver = solver_mode_from_string(f.solver);
  p.exact_limit = f.exact_limit;
  if (f.d_avg >= 0) p.d_avg_override = f.d_avg;
  return p;
}

int run(int argc, char** argv) {
  CLI::App app{"Growing-graph structure forecasting toolkit"};
  app.require_subcommand(1);

  // --- synth ---
  PAConfig pa;
  std::string synth_out;
  auto* synth = app.add_subcommand(
      "synth", "generate a preferential-attachment graph series");
  synth->add_option("--s0", pa.s0, "seed ring size");
  synth->add_option("--s", pa.s, "edges per new node");
  synth->add_option("--nodes-per-step", pa.nodes_per_step, "arrivals per step");
  synth->add_option("--steps", pa.steps, "number of snapshots");
  synth->add_option("--delete-per-step", pa.delete_per_step,
                    "random edge deletions per step");
  synth->add_option("--seed", pa.seed, "generator seed");
  synth->add_option("--out", synth_out, "output edge-list file")->required();

  // --- forecast ---
  CommonForecastFlags ff;
  int horizon = 1;
  std::uint64_t forecast_seed = 0;
  std::string forecast_out;
  auto* fc = app.add_subcommand("forecast", "forecast the graph h steps ahead");
  add_common_flags(fc, ff);
  fc->add_option("--horizon", horizon, "steps ahead")->required();
  fc->add_option("--seed", forecast_seed,
                 "run label; the pipeline itself is deterministic");
  fc->add_option("--out", forecast_out, "output graph JSON")->required();

  // --- evaluate ---
  CommonForecastFlags ef;
  std::string origins_text, horizons_text = "1..5", schemes_text = "C5,C6,LS";
  int repeats = 1;
  std::string eval_out, eval_agg_out;
  bool eval_synth = false;
  PAConfig eval_pa;
  int eval_seeds = 1;
  auto* ev = app.add_subcommand(
      "evaluate", "rolling-origin evaluation against later snapshots");
  add_common_flags(ev, ef);
  ev->get_option("--input")->required(false);
  ev->add_option("--origins", origins_text, "origins T, e.g. 20..30 or 20,25")
      ->required();
  ev->add_option("--horizons", horizons_text, "horizons h (default 1..5)");
  ev->add_option("--schemes", schemes_text,
                 "comma list of C1..C6 and/or LS (default C5,C6,LS)");
  ev->add_option("--repeats", repeats, "re-runs per series (deterministic)");
  ev->add_flag("--synth", eval_synth,
               "evaluate on generated series instead of --input");
  ev->add_option("--s0", eval_pa.s0, "synth: seed ring size");
  ev->add_option("--s", eval_pa.s, "synth: edges per new node");
  ev->add_option("--nodes-per-step", eval_pa.nodes_per_step,
                 "synth: arrivals per step");
  ev->add_option("--steps", eval_pa.steps, "synth: number of snapshots");
  ev->add_option("--delete-per-step", eval_pa.delete_per_step,
                 "synth: deletions per step");
  ev->add_option("--seeds", eval_seeds, "synth: number of seeds (1..N)");
  ev->add_option("--out", eval_out, "per-run metrics CSV")->required();
  ev->add_option("--aggregate-out", eval_agg_out,
                 "mean/sd per (scheme, h) CSV");

  // --- bounds ---
  CommonForecastFlags bf;
  int bounds_horizon = 1;
  bool do_enumerate = false;
  std::string bounds_out;
  auto* bd = app.add_subcommand(
      "bounds", "solution-space cardinality bounds for the F1 instance");
  add_common_flags(bd, bf, /*with_formulation=*/false);
  bd->add_option("--horizon", bounds_horizon, "steps ahead");
  bd->add_flag("--enumerate", do_enumerate,
               "exhaustively count solutions (tiny instances only)");
  bd->add_option("--out", bounds_out, "output JSON")->required();

  CLI11_PARSE(app, argc, argv);

  if (synth->parsed()) {
    write_edge_list(generate_pa_series(pa), synth_out);
    std::cout << "wrote " << synth_out << "\n";
    return 0;
  }

  if (fc->parsed()) {
    const IngestResult data = ingest(ff.input, window_from_flags(ff));
    const Graph pred = forecast_graph(data.series, horizon,
                                      params_from_flags(ff));
    emit_graph(pred, &data.ids, forecast_out);
    std::cout << "wrote " << forecast_out << " (n=" << pred.n_nodes()
              << ", m=" << pred.n_edges() << ")\n";
    return 0;
  }

  if (ev->parsed()) {
    ExperimentConfig cfg;
    cfg.origins = parse_int_list(origins_text);
    cfg.horizons = parse_int_list(horizons_text);
    cfg.schemes = parse_scheme_list(schemes_text);
    cfg.params = params_from_flags(ef);
    cfg.repeats = repeats;
    ExperimentTable table;
    if (eval_synth) {
      std::vector<std::uint64_t> seeds;
      for (int s = 1; s <= eval_seeds; ++s) {
        seeds.push_back(static_cast<std::uint64_t>(s));
      }
      table = run_experiment(
          [&](std::uint64_t seed) {
            PAConfig c = eval_pa;
            c.seed = seed;
            return generate_pa_series(c);
          },
          seeds, cfg);
    } else {
      if (ef.input.empty()) {
        throw CLI::ValidationError(
            "evaluate needs --input unless --synth is given");
      }
      table = run_experiment(ingest(ef.input, window_from_flags(ef)).series,
                             cfg);
    }
    write_metrics_csv(table.rows, eval_out);
    std::cout << "wrote " << eval_out << " (" << table.rows.size()
              << " rows)\n";
    if (!eval_agg_out.empty()) {
      write_aggregates_csv(table.aggregates, eval_agg_out);
      std::cout << "wrote " << eval_agg_out << "\n";
    }
    return 0;
  }

  if (bd->parsed()) {
    ForecastParams params = params_from_flags(bf);
    params.formulation = Formulation::F1;
    const IngestResult data = ingest(bf.input, window_from_flags(bf));
    const PipelineResult pipe = run_pipeline(data.series, bounds_horizon,
                                             params);
    const BoundsReport rep = bounds_report(pipe.problem);
    nlohmann::json doc = nlohmann::json::parse(bounds_report_to_json(rep));
    if (do_enumerate) {
      const std::uint64_t exact = enumerate_solutions(pipe.problem);
      doc["enumerated"] = exact;
      doc["upper_holds"] = BigInt(exact) <= rep.upper;
      doc["lower_holds"] = rep.lower <= BigInt(exact);
    }
    std::ofstream out(bounds_out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + bounds_out + "'");
    out << doc.dump(2) << "\n";
    std::cout << "wrote " << bounds_out << "\n";
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
