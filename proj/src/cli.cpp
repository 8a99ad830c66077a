#include "mzsim/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mzsim/errors.hpp"
#include "mzsim/parallel.hpp"

namespace mzsim {
namespace {

RunSummary merge(std::span<const RunSummary> replicas) {
  RunSummary total = replicas.front();
  for (std::size_t r = 1; r < replicas.size(); ++r) {
    total.photons += replicas[r].photons;
    total.counts[0] += replicas[r].counts[0];
    total.counts[1] += replicas[r].counts[1];
    total.accumulated_beth_L += replicas[r].accumulated_beth_L;
  }
  const double n = static_cast<double>(total.photons);
  total.frequencies = {static_cast<double>(total.counts[0]) / n, static_cast<double>(total.counts[1]) / n};
  return total;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_header_comment(std::ostream& out, const ConfigDocument& doc) {
  std::istringstream lines(serialize_config(doc));
  for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
}

}  // namespace

std::vector<SummaryRow> run_document(const ConfigDocument& doc, const EventSink& sink) {
  validate(doc);
  const std::vector<RunPoint> points = expand_points(doc);
  for (const auto& p : points) p.config.validate();

  const std::size_t replicas = doc.replicas;
  std::vector<RunSummary> results(points.size() * replicas);
  const auto job = [&](std::size_t i) {
    const std::size_t k = i / replicas;
    const std::size_t r = i % replicas;
    ExperimentConfig cfg = points[k].config;
    cfg.seed = derive_seed(doc.seed, k, r);
    results[i] = run_experiment(cfg, sink);
  };
  if (sink) {
    for (std::size_t i = 0; i < results.size(); ++i) job(i);
  } else {
    parallel_for(results.size(), job);
  }

  std::vector<SummaryRow> rows;
  rows.reserve(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    rows.push_back({points[k].param, points[k].value,
                    merge(std::span<const RunSummary>(results).subspan(k * replicas, replicas))});
  }
  return rows;
}

int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Photon-by-photon interferometer simulator", "mzsim"};
  app.require_subcommand(1);
  CLI::App* run = app.add_subcommand("run", "Run an experiment config and write a CSV summary");

  std::string config_path;
  std::optional<std::uint64_t> photons;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> engine;
  std::optional<std::string> out_path;
  std::optional<std::string> events_path;
  run->add_option("config", config_path, "Experiment config file")->required();
  run->add_option("--photons", photons, "Override photons per run");
  run->add_option("--seed", seed, "Override the base seed");
  run->add_option("--engine", engine, "Override the engine: born | rebalance_greedy | rebalance_biased[:kappa]");
  run->add_option("--out", out_path, "CSV output path (default: config output, else stdout)");
  run->add_option("--events", events_path, "Write per-commit events as JSONL");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "mzsim: " << e.what() << '\n';
    return 2;
  }

  ConfigDocument doc;
  try {
    doc = parse_config(read_file(config_path));
    if (photons) doc.photons = *photons;
    if (seed) doc.seed = *seed;
    if (engine) doc.engine = parse_engine(*engine);
    validate(doc);
    if (events_path && (doc.sweep || doc.replicas != 1)) {
      throw ConfigError("--events needs a single run: no sweep and replicas 1");
    }
  } catch (const ConfigError& e) {
    err << "mzsim: " << config_path << ": " << e.what() << '\n';
    return 2;
  }

  try {
    std::ofstream events_file;
    std::optional<JsonlEventWriter> events;
    if (events_path) {
      events_file.open(*events_path, std::ios::binary | std::ios::trunc);
      if (!events_file) {
        err << "mzsim: cannot open events file '" << *events_path << "'\n";
        return 2;
      }
      events.emplace(events_file);
    }

    const std::vector<SummaryRow> rows = run_document(doc, events ? events->sink() : EventSink{});

    const std::optional<std::string> target = out_path ? out_path : doc.output;
    std::ofstream out_file;
    std::ostream* csv = &out;
    if (target) {
      out_file.open(*target, std::ios::binary | std::ios::trunc);
      if (!out_file) {
        err << "mzsim: cannot open output file '" << *target << "'\n";
        return 2;
      }
      csv = &out_file;
    }
    write_header_comment(*csv, doc);
    write_summary_csv(*csv, rows);
    csv->flush();
    if (!*csv) {
      err << "mzsim: failed writing output\n";
      return 1;
    }
  } catch (const ConfigError& e) {
    err << "mzsim: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "mzsim: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace mzsim
