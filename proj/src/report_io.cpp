#include "sta/report_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sta/reference.hpp"

namespace sta {

using nlohmann::json;

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  if (text == "md") return Format::Markdown;
  throw ConfigError("unknown format '" + std::string(text) + "' (expected csv, json or md)");
}

std::string format_exact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_table(double v) {
  char buf[32];
  if (v == 0.0 || std::abs(v) >= 1e-3 || !std::isfinite(v)) {
    std::snprintf(buf, sizeof buf, "%.4f", v);
  } else {
    std::snprintf(buf, sizeof buf, "%.4e", v);
  }
  return buf;
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

template <typename T>
T parse_integer(const std::string& text, const char* what) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError(std::string("bad ") + what + " '" + text + "'");
  }
  return value;
}

double parse_real(const std::string& text, const char* what) {
  // strtod rather than stod: subnormals set ERANGE but parse exactly.
  if (!text.empty()) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() + text.size()) return v;
  }
  throw ConfigError(std::string("bad ") + what + " '" + text + "'");
}

json vector_json(const Vector<double>& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

void write_runs_csv(std::ostream& os, const ExperimentReport& report) {
  os << "function,variant,run,seed,best_f,evaluations\n";
  for (const auto& cell : report.cells) {
    for (const auto& r : cell.runs) {
      os << cell.benchmark << ',' << to_string(cell.variant) << ',' << r.run << ',' << r.seed
         << ',' << format_exact(r.best_f) << ',' << r.evaluations << '\n';
    }
  }
}

std::vector<RunRecord> read_runs_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "function,variant,run,seed,best_f,evaluations") {
    throw ConfigError("runs csv: missing or unexpected header");
  }
  std::vector<RunRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 6) throw ConfigError("runs csv: expected 6 fields in '" + line + "'");
    RunRecord r;
    r.function = f[0];
    r.variant = parse_variant(f[1]);
    r.run = parse_integer<int>(f[2], "run");
    r.seed = parse_integer<std::uint64_t>(f[3], "seed");
    r.best_f = parse_real(f[4], "best_f");
    r.evaluations = parse_integer<std::uint64_t>(f[5], "evaluations");
    out.push_back(std::move(r));
  }
  return out;
}

void write_report_json(std::ostream& os, const ExperimentReport& report) {
  const auto& spec = report.spec;
  json variants = json::array();
  for (auto v : spec.variants) variants.push_back(std::string(to_string(v)));

  json doc;
  doc["experiment"] = {{"functions", spec.benchmarks}, {"variants", variants},
                       {"runs", spec.runs},            {"epochs", spec.epochs},
                       {"seed", spec.master_seed}};
  json params = json::object();
  for (auto v : spec.variants) {
    const auto p = spec.overrides.apply(v);
    params[std::string(to_string(v))] = {{"alpha_max", p.alpha_max}, {"alpha_min", p.alpha_min},
                                         {"beta", p.beta},           {"gamma", p.gamma},
                                         {"delta", p.delta},         {"se", p.se},
                                         {"fc", p.fc}};
  }
  doc["experiment"]["params"] = params;

  const auto rows = compare_to_reference(report);
  json results = json::array();
  for (std::size_t i = 0; i < report.cells.size(); ++i) {
    const auto& cell = report.cells[i];
    const auto& row = rows[i];
    json runs = json::array();
    for (const auto& r : cell.runs) {
      runs.push_back({{"run", r.run},
                      {"seed", r.seed},
                      {"best_f", r.best_f},
                      {"best_x", vector_json(r.best_x)},
                      {"evaluations", r.evaluations}});
    }
    results.push_back({{"function", cell.benchmark},
                       {"variant", std::string(to_string(cell.variant))},
                       {"best", cell.best},
                       {"average", cell.average},
                       {"reference_best", optional_json(row.reference_best)},
                       {"reference_average", optional_json(row.reference_average)},
                       {"criterion", row.criterion},
                       {"pass", row.pass},
                       {"runs", runs}});
  }
  doc["results"] = results;
  os << doc.dump(2) << '\n';
}

void write_comparison_markdown(std::ostream& os, const std::vector<ComparisonRow>& rows) {
  os << "| Function | Variant | Best | Average | Reference-Best | Reference-Average | Pass |\n";
  os << "|---|---|---|---|---|---|---|\n";
  auto ref = [](const std::optional<double>& v) { return v ? format_table(*v) : std::string("-"); };
  for (const auto& r : rows) {
    os << "| " << r.function << " | " << to_string(r.variant) << " | " << format_table(r.best)
       << " | " << format_table(r.average) << " | " << ref(r.reference_best) << " | "
       << ref(r.reference_average) << " | " << (r.pass ? "pass" : "FAIL") << " |\n";
  }
}

void write_report(std::ostream& os, const ExperimentReport& report, Format format) {
  switch (format) {
    case Format::Csv: write_runs_csv(os, report); break;
    case Format::Json: write_report_json(os, report); break;
    case Format::Markdown: write_comparison_markdown(os, compare_to_reference(report)); break;
  }
}

void write_trace_csv(std::ostream& os, const std::vector<TracePoint<double>>& trace) {
  os << "epoch,best_f\n";
  for (const auto& t : trace) os << t.epoch << ',' << format_exact(t.best_f) << '\n';
}

void write_points_csv(std::ostream& os, const Matrix<double>& points) {
  for (Index i = 0; i < points.rows(); ++i) os << (i ? "," : "") << 'x' << (i + 1);
  os << '\n';
  for (Index k = 0; k < points.cols(); ++k) {
    for (Index i = 0; i < points.rows(); ++i) os << (i ? "," : "") << format_exact(points(i, k));
    os << '\n';
  }
}

void write_run_summary(std::ostream& os, const RunSummaryRecord& s, Format format) {
  switch (format) {
    case Format::Json: {
      json doc = {{"function", s.function},
                  {"variant", std::string(to_string(s.variant))},
                  {"seed", s.seed},
                  {"epochs", s.epochs},
                  {"best_f", s.best_f},
                  {"best_x", vector_json(s.best_x)},
                  {"evaluations", s.evaluations}};
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      os << "function,variant,seed,epochs,best_f,evaluations";
      for (Index i = 0; i < s.best_x.size(); ++i) os << ",x" << (i + 1);
      os << '\n'
         << s.function << ',' << to_string(s.variant) << ',' << s.seed << ',' << s.epochs << ','
         << format_exact(s.best_f) << ',' << s.evaluations;
      for (Index i = 0; i < s.best_x.size(); ++i) os << ',' << format_exact(s.best_x(i));
      os << '\n';
      break;
    }
    case Format::Markdown: {
      os << "| Function | Variant | Seed | Epochs | Best f | Evaluations | Best x |\n"
         << "|---|---|---|---|---|---|---|\n"
         << "| " << s.function << " | " << to_string(s.variant) << " | " << s.seed << " | "
         << s.epochs << " | " << format_exact(s.best_f) << " | " << s.evaluations << " | ";
      for (Index i = 0; i < s.best_x.size(); ++i) os << (i ? ", " : "") << format_exact(s.best_x(i));
      os << " |\n";
      break;
    }
  }
}

void write_benchmark_listing(std::ostream& os, const std::vector<Benchmark<double>>& benches,
                             Format format) {
  auto bound = [](double v) { return std::isfinite(v) ? format_exact(v) : (v > 0 ? "inf" : "-inf"); };
  auto range = [&](const Benchmark<double>& b) {
    auto interval = [&](Index i) { return '[' + bound(b.lo(i)) + ' ' + bound(b.hi(i)) + ']'; };
    const bool uniform = (b.lo.array() == b.lo(0)).all() && (b.hi.array() == b.hi(0)).all();
    if (uniform) return b.dim > 1 ? interval(0) + '^' + std::to_string(b.dim) : interval(0);
    std::string s;
    for (Index i = 0; i < b.dim; ++i) s += (i ? ";" : "") + interval(i);
    return s;
  };

  switch (format) {
    case Format::Json: {
      json a = json::array();
      for (const auto& b : benches) {
        json lo = json::array(), hi = json::array();
        for (Index i = 0; i < b.dim; ++i) {
          lo.push_back(std::isfinite(b.lo(i)) ? json(b.lo(i)) : json(bound(b.lo(i))));
          hi.push_back(std::isfinite(b.hi(i)) ? json(b.hi(i)) : json(bound(b.hi(i))));
        }
        a.push_back({{"name", b.name},
                     {"dim", b.dim},
                     {"lo", lo},
                     {"hi", hi},
                     {"theoretical_best", b.theoretical_best}});
      }
      os << a.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << "name,dim,range,theoretical_best\n";
      for (const auto& b : benches)
        os << b.name << ',' << b.dim << ',' << range(b) << ',' << format_table(b.theoretical_best)
           << '\n';
      break;
    case Format::Markdown:
      os << "| Function | Dimension | Variable range | Theoretical best |\n|---|---|---|---|\n";
      for (const auto& b : benches)
        os << "| " << b.name << " | " << b.dim << " | " << range(b) << " | "
           << format_table(b.theoretical_best) << " |\n";
      break;
  }
}

}  // namespace sta
