#include "frullani/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "frullani/catalog.hpp"
#include "frullani/expr.hpp"
#include "frullani/frullani_engine.hpp"
#include "frullani/limit_probe.hpp"
#include "frullani/report.hpp"
#include "frullani/series.hpp"

namespace frullani::cli {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string e3(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double positive_tolerance(std::string_view text, std::string_view what) {
  auto v = parse_number(text);
  if (!v || !(*v > 0.0) || !std::isfinite(*v))
    throw UsageError(std::string(what) + " must be a positive number, got '" + std::string(text) + "'");
  return *v;
}

std::vector<VerificationRecord> run_jobs(const std::vector<std::pair<std::string, Params>>& jobs,
                                         std::optional<double> tol, unsigned threads) {
  std::vector<VerificationRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++)
      records[i] = Catalog::instance().verify_entry(jobs[i].first, jobs[i].second, tol);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return records;
}

void print_verdict(std::ostream& out, std::string_view side, const ProbeOutcome& o) {
  out << side << ": " << describe(o.verdict);
  if (o.borderline) out << " (borderline)";
  out << '\n';
}

int exit_for(const std::vector<VerificationRecord>& records) {
  return all_clear(records) ? kExitOk : kExitFailures;
}

}  // namespace

std::optional<double> parse_number(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

Params parse_params(std::string_view text) {
  Params out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(",;", start);
    if (end == std::string_view::npos) end = text.size();
    const auto item = trim(text.substr(start, end - start));
    start = end + 1;
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("expected key=value, got '" + std::string(item) + "'");
    const auto key = trim(item.substr(0, eq));
    const auto value = parse_number(item.substr(eq + 1));
    if (key.empty() || !value)
      throw std::invalid_argument("expected key=value, got '" + std::string(item) + "'");
    out[std::string(key)] = *value;
  }
  return out;
}

std::vector<GridOverride> parse_grid(std::istream& in) {
  std::vector<GridOverride> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string tok;
    GridOverride g;
    auto fail = [&](const std::string& why) {
      return std::invalid_argument("grid line " + std::to_string(lineno) + ": " + why);
    };
    while (tokens >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0) throw fail("expected key=value, got '" + tok + "'");
      const std::string key = tok.substr(0, eq);
      const std::string value = tok.substr(eq + 1);
      if (key == "entry") {
        if (!g.entry_id.empty()) throw fail("entry given twice");
        g.entry_id = value;
        continue;
      }
      const auto v = parse_number(value);
      if (!v) throw fail("'" + value + "' is not a number");
      if (g.params.contains(key)) throw fail("parameter '" + key + "' given twice");
      g.params[key] = *v;
    }
    if (g.entry_id.empty() && g.params.empty()) continue;
    if (g.entry_id.empty()) throw fail("missing entry=<ID>");
    out.push_back(std::move(g));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_tol) {
  if (!env_tol) {
    const char* raw = std::getenv("FRULLANI_TOL");
    env_tol = raw ? std::string(raw) : std::string();
  }

  CLI::App app{"Frullani integral evaluator and identity checker", "frullani"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  auto* list = app.add_subcommand("list", "Print the catalog table");

  std::string verify_id;
  std::string verify_params;
  std::string tol_text;
  std::string format_name = "text";
  auto* verify = app.add_subcommand("verify", "Verify one catalog entry (default grid when --params is absent)");
  verify->add_option("id", verify_id, "Entry id, e.g. GR-3.434.2")->required();
  verify->add_option("--params", verify_params, "Bindings k=v,k=v");
  verify->add_option("--tol", tol_text, "Absolute tolerance");
  verify->add_option("--format", format_name, "text or json");

  std::string grid_path, report_path;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* verify_all = app.add_subcommand("verify-all", "Verify every entry over its grid");
  verify_all->add_option("--tol", tol_text, "Absolute tolerance for every entry");
  verify_all->add_option("--grid", grid_path, "Grid override file");
  verify_all->add_option("--report", report_path, "Write the report here instead of stdout");
  verify_all->add_option("--format", format_name, "text or json");
  verify_all->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string expr_text;
  double eval_a = 0, eval_b = 0, eval_power = 1;
  auto* eval = app.add_subcommand("eval", "Run the Frullani pipeline on an expression in x");
  eval->add_option("expr", expr_text, "Generator f(x)")->required();
  eval->add_option("--a", eval_a, "First scale")->required();
  eval->add_option("--b", eval_b, "Second scale")->required();
  eval->add_option("--power", eval_power, "Power p in f(a x^p)");
  eval->add_option("--tol", tol_text, "Absolute tolerance");
  eval->add_option("--format", format_name, "text or json");

  double series_a = 0, series_p = 1, series_q = 2;
  int series_terms = 0;
  auto* series_cmd = app.add_subcommand("series", "Closed form against the partial series for the log-cosine entry");
  series_cmd->add_option("--a", series_a, "Amplitude a")->required();
  series_cmd->add_option("--p", series_p, "Frequency p")->required();
  series_cmd->add_option("--q", series_q, "Frequency q")->required();
  series_cmd->add_option("--terms", series_terms, "Number of terms K")->required()->check(CLI::NonNegativeNumber);

  std::string limits_text;
  auto* limits = app.add_subcommand("limits", "Probe the limits of f at 0+ and +inf");
  limits->add_option("expr", limits_text, "f(x)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run 'frullani --help' for usage\n";
    return kExitUsage;
  }

  try {
    std::optional<double> tol;
    if (!tol_text.empty())
      tol = positive_tolerance(tol_text, "--tol");
    else if (!env_tol->empty())
      tol = positive_tolerance(*env_tol, "FRULLANI_TOL");
    ReportFormat format;
    try {
      format = parse_report_format(format_name);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const Catalog& catalog = Catalog::instance();

    if (list->parsed()) {
      for (const auto& e : catalog.list_entries()) {
        out << e.id;
        out << std::string(e.id.size() < 12 ? 12 - e.id.size() : 1, ' ');
        const auto cls = std::string(to_string(e.eval_class));
        out << cls << std::string(cls.size() < 17 ? 17 - cls.size() : 1, ' ') << e.constraints << '\n';
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      if (!catalog.contains(verify_id)) throw UsageError("unknown catalog entry '" + verify_id + "'");
      std::vector<std::pair<std::string, Params>> todo;
      if (verify->count("--params")) {
        try {
          todo.emplace_back(verify_id, parse_params(verify_params));
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("--params: ") + e.what());
        }
      } else {
        for (auto& p : catalog.default_grid(verify_id)) todo.emplace_back(verify_id, p);
      }
      auto records = run_jobs(todo, tol, 1);
      emit_report(records, format, out);
      for (const auto& r : records)
        if (!r.detail.empty()) err << r.entry_id << ": " << r.detail << '\n';
      return exit_for(records);
    }

    if (verify_all->parsed()) {
      std::map<std::string, std::vector<Params>, std::less<>> overrides;
      if (!grid_path.empty()) {
        std::ifstream in(grid_path);
        if (!in) throw UsageError("cannot read grid file '" + grid_path + "'");
        try {
          for (auto& g : parse_grid(in)) {
            if (!catalog.contains(g.entry_id)) throw std::invalid_argument("unknown entry '" + g.entry_id + "'");
            overrides[g.entry_id].push_back(std::move(g.params));
          }
        } catch (const std::invalid_argument& e) {
          throw UsageError(grid_path + ": " + e.what());
        }
      }
      std::vector<std::pair<std::string, Params>> todo;
      for (const auto& e : catalog.entries()) {
        auto it = overrides.find(e.id);
        const auto& grid = it != overrides.end() ? it->second : e.default_grid;
        for (const auto& p : grid) todo.emplace_back(e.id, p);
        if (it != overrides.end()) overrides.erase(it);
      }
      // alias ids only run when the grid file names them
      for (auto& [id, grid] : overrides)
        for (auto& p : grid) todo.emplace_back(id, p);

      auto records = run_jobs(todo, tol, jobs);
      const std::string summary = format_summary(summarize(records));
      if (!report_path.empty()) {
        std::ofstream file(report_path, std::ios::binary | std::ios::trunc);
        if (!file) throw UsageError("cannot write report file '" + report_path + "'");
        emit_report(records, format, file);
        out << summary << '\n';
      } else {
        emit_report(records, format, out);
        // keeps stdout a single JSON document
        if (format == ReportFormat::Json) err << summary << '\n';
      }
      return exit_for(records);
    }

    if (eval->parsed()) {
      Expression f = [&] {
        try {
          return parse(expr_text);
        } catch (const ParseError& e) {
          throw UsageError(e.what());
        }
      }();
      std::optional<FrullaniProblem> prob;
      try {
        prob.emplace(f, eval_a, eval_b, eval_power);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      auto rec = evaluate_pipeline(*prob, tol.value_or(1e-6));
      std::vector<VerificationRecord> records{rec};
      emit_report(records, format, out);
      if (!rec.detail.empty()) err << rec.detail << '\n';
      return exit_for(records);
    }

    if (series_cmd->parsed()) {
      double closed, partial;
      try {
        closed = series::gr_4_324_2_closed(series_a, series_p, series_q);
        partial = series::gr_4_324_2_series(series_a, series_p, series_q, series_terms);
      } catch (const std::logic_error& e) {
        throw UsageError(e.what());
      }
      out << "closed=" << g17(closed) << " partial=" << g17(partial) << " residual=" << e3(std::fabs(closed - partial))
          << " terms=" << series_terms << '\n';
      return kExitOk;
    }

    if (limits->parsed()) {
      Expression f = [&] {
        try {
          return parse(limits_text);
        } catch (const ParseError& e) {
          throw UsageError(e.what());
        }
      }();
      auto vars = f.free_variables();
      vars.erase("x");
      if (!vars.empty()) throw UsageError("expression may depend on x only; unbound: " + *vars.begin());
      RealFunction g = [f](double x) { return f.evaluate_at("x", x); };
      try {
        print_verdict(out, "zero", probe_zero_plus(g));
        print_verdict(out, "infinity", probe_infinity(g));
      } catch (const ProbeError& e) {
        err << "probe failed at x=" << g17(e.abscissa()) << ": " << e.what() << '\n';
        return kExitFailures;
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailures;
  }
  return kExitUsage;
}

}  // namespace frullani::cli
