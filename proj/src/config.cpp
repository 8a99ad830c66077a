#include "mzsim/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>
#include <system_error>

#include "mzsim/errors.hpp"

namespace mzsim {
namespace {

struct Directive {
  std::size_t line;
  std::vector<std::string_view> args;  // args[0] is the keyword
};

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

double parse_real(std::string_view word, std::size_t line) {
  double value = 0.0;
  const char* end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc() || ptr != end || std::isnan(value)) {
    throw ConfigError(line, "malformed number '" + std::string(word) + "'");
  }
  return value;
}

double parse_finite(std::string_view word, std::size_t line) {
  const double v = parse_real(word, line);
  if (!std::isfinite(v)) throw ConfigError(line, "expected a finite number, got '" + std::string(word) + "'");
  return v;
}

std::uint64_t parse_count(std::string_view word, std::size_t line) {
  std::uint64_t value = 0;
  const char* end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(line, "malformed integer '" + std::string(word) + "'");
  }
  return value;
}

void expect_arity(const Directive& d, std::size_t min_args, std::size_t max_args) {
  const std::size_t n = d.args.size() - 1;
  if (n < min_args || n > max_args) {
    throw ConfigError(d.line, "'" + std::string(d.args[0]) + "' takes " +
                                  (min_args == max_args ? std::to_string(min_args)
                                                        : std::to_string(min_args) + "-" + std::to_string(max_args)) +
                                  " argument(s), got " + std::to_string(n));
  }
}

ExperimentKind parse_kind(std::string_view word, std::size_t line) {
  if (word == "single_bs") return ExperimentKind::single_bs;
  if (word == "mach_zehnder") return ExperimentKind::mach_zehnder;
  if (word == "stern_gerlach") return ExperimentKind::stern_gerlach;
  throw ConfigError(line, "unknown experiment kind '" + std::string(word) + "'");
}

EngineKind parse_engine_words(std::string_view name, std::optional<std::string_view> kappa, std::size_t line) {
  if (name == "born" || name == "rebalance_greedy") {
    if (kappa) throw ConfigError(line, "engine '" + std::string(name) + "' takes no gain");
    if (name == "born") return BornEngine{};
    return GreedyEngine{};
  }
  if (name == "rebalance_biased") {
    const double k = kappa ? parse_real(*kappa, line) : 1.0;
    if (!(k > 0.0) || !std::isfinite(k)) throw ConfigError(line, "kappa must be positive");
    return BiasedEngine{k};
  }
  throw ConfigError(line, "unknown engine '" + std::string(name) + "'");
}

std::string format_shortest(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string_view primary_param(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::mach_zehnder:
      return "delta";
    case ExperimentKind::stern_gerlach:
      return "phi";
    case ExperimentKind::single_bs:
      return "transmittance";
  }
  return "";
}

}  // namespace

std::string_view to_string(SweepParam p) noexcept {
  switch (p) {
    case SweepParam::delta:
      return "delta";
    case SweepParam::phi:
      return "phi";
    case SweepParam::tau:
      return "tau";
  }
  return "";
}

std::vector<double> SweepSpec::points() const {
  std::vector<double> out;
  out.reserve(steps);
  const double step = (stop - start) / static_cast<double>(steps);
  for (std::uint64_t k = 0; k < steps; ++k) out.push_back(start + static_cast<double>(k) * step);
  return out;
}

EngineKind parse_engine(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return parse_engine_words(spec, std::nullopt, 0);
  return parse_engine_words(spec.substr(0, colon), spec.substr(colon + 1), 0);
}

ConfigDocument parse_config(std::string_view text) {
  ConfigDocument doc;
  std::vector<std::string_view> seen;
  std::optional<std::size_t> experiment_line;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    Directive d{line_no, split_words(line)};
    if (d.args.empty()) continue;
    const std::string_view kw = d.args[0];

    if (kw == "experiment") {
      if (experiment_line) {
        throw ConfigError(line_no, "duplicate experiment directive (first on line " +
                                       std::to_string(*experiment_line) + ")");
      }
    } else {
      for (auto k : seen) {
        if (k == kw) throw ConfigError(line_no, "duplicate '" + std::string(kw) + "' directive");
      }
    }

    if (kw == "experiment") {
      expect_arity(d, 1, 1);
      doc.experiment = parse_kind(d.args[1], line_no);
      experiment_line = line_no;
    } else if (kw == "engine") {
      expect_arity(d, 1, 2);
      doc.engine = parse_engine_words(d.args[1], d.args.size() > 2 ? std::optional(d.args[2]) : std::nullopt,
                                      line_no);
    } else if (kw == "photons") {
      expect_arity(d, 1, 1);
      doc.photons = parse_count(d.args[1], line_no);
      if (doc.photons < 1) throw ConfigError(line_no, "photons must be at least 1");
    } else if (kw == "seed") {
      expect_arity(d, 1, 1);
      doc.seed = parse_count(d.args[1], line_no);
    } else if (kw == "delta") {
      expect_arity(d, 1, 1);
      doc.delta = parse_finite(d.args[1], line_no);
    } else if (kw == "phi") {
      expect_arity(d, 1, 1);
      doc.phi = parse_finite(d.args[1], line_no);
    } else if (kw == "transmittance") {
      expect_arity(d, 1, 1);
      const double t = parse_finite(d.args[1], line_no);
      if (t < 0.0 || t > 1.0) throw ConfigError(line_no, "transmittance must lie in [0, 1]");
      doc.transmittance = t;
    } else if (kw == "splitter") {
      expect_arity(d, 3, 3);
      if (d.args[1] != "from_interface") {
        throw ConfigError(line_no, "unknown splitter source '" + std::string(d.args[1]) + "'");
      }
      fresnel::InterfaceSpec iface{parse_finite(d.args[2], line_no), parse_finite(d.args[3], line_no)};
      if (iface.n1 < 1.0 || iface.n2 < 1.0) throw ConfigError(line_no, "refractive indices must be >= 1");
      doc.splitter = iface;
    } else if (kw == "arrival") {
      expect_arity(d, 2, 2);
      const double v = parse_finite(d.args[2], line_no);
      if (!(v > 0.0)) throw ConfigError(line_no, "arrival parameter must be positive");
      if (d.args[1] == "fixed") {
        doc.arrival = FixedArrival{v};
      } else if (d.args[1] == "poisson") {
        doc.arrival = PoissonArrival{v};
      } else {
        throw ConfigError(line_no, "unknown arrival process '" + std::string(d.args[1]) + "'");
      }
    } else if (kw == "tau") {
      expect_arity(d, 1, 1);
      doc.tau = parse_real(d.args[1], line_no);
      if (!(doc.tau > 0.0)) throw ConfigError(line_no, "tau must be positive (or inf)");
    } else if (kw == "sweep") {
      expect_arity(d, 4, 4);
      SweepSpec s;
      if (d.args[1] == "delta") {
        s.param = SweepParam::delta;
      } else if (d.args[1] == "phi") {
        s.param = SweepParam::phi;
      } else if (d.args[1] == "tau") {
        s.param = SweepParam::tau;
      } else {
        throw ConfigError(line_no, "cannot sweep '" + std::string(d.args[1]) + "'");
      }
      s.start = parse_finite(d.args[2], line_no);
      s.stop = parse_finite(d.args[3], line_no);
      s.steps = parse_count(d.args[4], line_no);
      if (!(s.start < s.stop)) throw ConfigError(line_no, "sweep start must be below stop");
      if (s.steps < 2) throw ConfigError(line_no, "sweep needs at least 2 steps");
      if (s.param == SweepParam::tau && !(s.start > 0.0)) throw ConfigError(line_no, "tau sweep must stay positive");
      doc.sweep = s;
    } else if (kw == "replicas") {
      expect_arity(d, 1, 1);
      doc.replicas = parse_count(d.args[1], line_no);
      if (doc.replicas < 1) throw ConfigError(line_no, "replicas must be at least 1");
    } else if (kw == "output") {
      expect_arity(d, 1, 1);
      doc.output = std::string(d.args[1]);
    } else {
      throw ConfigError(line_no, "unknown keyword '" + std::string(kw) + "'");
    }
    seen.push_back(kw);
  }

  if (!experiment_line) throw ConfigError("missing experiment directive");
  validate(doc);
  return doc;
}

void validate(const ConfigDocument& doc) {
  const auto kind = std::string(to_string(doc.experiment));
  const bool mz = doc.experiment == ExperimentKind::mach_zehnder;
  const bool sg = doc.experiment == ExperimentKind::stern_gerlach;
  const bool bs = doc.experiment == ExperimentKind::single_bs;

  if (doc.delta && !mz) throw ConfigError("delta is not a parameter of " + kind);
  if (doc.phi && !sg) throw ConfigError("phi is not a parameter of " + kind);
  if ((doc.transmittance || doc.splitter) && !bs) throw ConfigError("splitter settings are not parameters of " + kind);
  if (doc.transmittance && doc.splitter) throw ConfigError("give either transmittance or splitter, not both");

  if (doc.sweep) {
    if (doc.sweep->param == SweepParam::delta && !mz) throw ConfigError("cannot sweep delta in " + kind);
    if (doc.sweep->param == SweepParam::phi && !sg) throw ConfigError("cannot sweep phi in " + kind);
  }
  const auto swept = [&](SweepParam p) { return doc.sweep && doc.sweep->param == p; };
  if (mz && !doc.delta && !swept(SweepParam::delta)) throw ConfigError("mach_zehnder requires delta");
  if (sg && !doc.phi && !swept(SweepParam::phi)) throw ConfigError("stern_gerlach requires phi");
  if (bs && !doc.transmittance && !doc.splitter) throw ConfigError("single_bs requires transmittance or splitter");
  if (doc.photons < 1) throw ConfigError("photons must be at least 1");
  if (doc.replicas < 1) throw ConfigError("replicas must be at least 1");
}

std::string serialize_config(const ConfigDocument& doc) {
  std::ostringstream out;
  out << "experiment " << to_string(doc.experiment) << '\n';
  out << "engine " << engine_name(doc.engine);
  if (const auto* biased = std::get_if<BiasedEngine>(&doc.engine)) out << ' ' << format_shortest(biased->kappa);
  out << '\n';
  out << "photons " << doc.photons << '\n';
  out << "seed " << doc.seed << '\n';
  if (doc.delta) out << "delta " << format_shortest(*doc.delta) << '\n';
  if (doc.phi) out << "phi " << format_shortest(*doc.phi) << '\n';
  if (doc.transmittance) out << "transmittance " << format_shortest(*doc.transmittance) << '\n';
  if (doc.splitter) {
    out << "splitter from_interface " << format_shortest(doc.splitter->n1) << ' ' << format_shortest(doc.splitter->n2)
        << '\n';
  }
  if (const auto* fixed = std::get_if<FixedArrival>(&doc.arrival)) {
    out << "arrival fixed " << format_shortest(fixed->interval) << '\n';
  } else {
    out << "arrival poisson " << format_shortest(std::get<PoissonArrival>(doc.arrival).rate) << '\n';
  }
  out << "tau " << format_shortest(doc.tau) << '\n';
  if (doc.sweep) {
    out << "sweep " << to_string(doc.sweep->param) << ' ' << format_shortest(doc.sweep->start) << ' '
        << format_shortest(doc.sweep->stop) << ' ' << doc.sweep->steps << '\n';
  }
  out << "replicas " << doc.replicas << '\n';
  if (doc.output) out << "output " << *doc.output << '\n';
  return out.str();
}

std::vector<RunPoint> expand_points(const ConfigDocument& doc) {
  ExperimentConfig base;
  base.kind = doc.experiment;
  base.engine = doc.engine;
  base.photons = doc.photons;
  base.seed = doc.seed;
  base.delta = doc.delta.value_or(0.0);
  base.phi = doc.phi.value_or(0.0);
  if (doc.splitter) {
    base.splitter = fresnel::bs_from_interface(*doc.splitter);
  } else if (doc.transmittance) {
    base.splitter = BeamSplitterSpec(*doc.transmittance);
  }
  base.arrival = doc.arrival;
  base.tau = doc.tau;

  std::vector<RunPoint> points;
  if (!doc.sweep) {
    double value = 0.0;
    switch (doc.experiment) {
      case ExperimentKind::mach_zehnder:
        value = base.delta;
        break;
      case ExperimentKind::stern_gerlach:
        value = base.phi;
        break;
      case ExperimentKind::single_bs:
        value = base.splitter.transmittance();
        break;
    }
    points.push_back({std::string(primary_param(doc.experiment)), value, base});
    return points;
  }

  for (double v : doc.sweep->points()) {
    RunPoint p{std::string(to_string(doc.sweep->param)), v, base};
    switch (doc.sweep->param) {
      case SweepParam::delta:
        p.config.delta = v;
        break;
      case SweepParam::phi:
        p.config.phi = v;
        break;
      case SweepParam::tau:
        p.config.tau = v;
        break;
    }
    points.push_back(std::move(p));
  }
  return points;
}

}  // namespace mzsim
