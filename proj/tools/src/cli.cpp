#include "pgcurvelab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgcurve/aw.hpp"
#include "pgcurve/bertrand.hpp"
#include "pgcurve/curve.hpp"
#include "pgcurve/equiform.hpp"
#include "pgcurve/error.hpp"
#include "pgcurve/frenet.hpp"
#include "pgcurve/zoo.hpp"

namespace pgcurvelab {

using json = nlohmann::ordered_json;
using pgcurve::Error;
using pgcurve::ErrorCode;

namespace {

constexpr const char* kSchema = "pg-curvelab/1";
constexpr std::size_t kDefaultGridCount = 101;
constexpr std::size_t kFigureSamples = 201;

struct LoadedCurve {
  std::string name;
  std::string source;  // "zoo" or "file"
  double a = 0.0, b = 0.0;
  pgcurve::CurveJet curve;
  std::optional<pgcurve::ZooEntry> entry;
  std::vector<double> lattice;  // sample parameters of file input
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void header(const std::vector<std::string>& cols) { row_strings(cols); }
  void row_strings(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os_ << (i ? "," : "") << csv_field(cells[i]);
    os_ << '\n';
  }
  void row(const std::vector<double>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os_ << (i ? "," : "") << format_double(cells[i]);
    os_ << '\n';
  }

 private:
  std::ostream& os_;
};

double parse_double(std::string_view text, const char* what) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  while (first < last && (*first == ' ' || *first == '\t')) ++first;
  while (last > first && (last[-1] == ' ' || last[-1] == '\t' || last[-1] == '\r')) --last;
  if (first < last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last)
    throw Error(ErrorCode::InvalidArgument, std::string("cannot parse ") + what + " '" +
                                                std::string(text) + "'");
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

LoadedCurve load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open input '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::InvalidArgument, "input is empty");
  const auto head = split(line, ',');
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < head.size(); ++i) {
    std::string h = head[i];
    h.erase(std::remove_if(h.begin(), h.end(), [](char c) { return c == '\r' || c == ' '; }),
            h.end());
    col.emplace(h, i);
  }
  for (const char* need : {"s", "x", "y", "z"})
    if (!col.count(need))
      throw Error(ErrorCode::InvalidArgument, std::string("input lacks column '") + need + "'");

  std::vector<double> params;
  std::vector<pgcurve::PGVector> points;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto cells = split(line, ',');
    if (cells.size() < head.size())
      throw Error(ErrorCode::InvalidArgument, "short row at line " + std::to_string(lineno));
    params.push_back(parse_double(cells[col["s"]], "s"));
    points.push_back({parse_double(cells[col["x"]], "x"), parse_double(cells[col["y"]], "y"),
                      parse_double(cells[col["z"]], "z")});
  }
  LoadedCurve lc{path, "file", 0.0, 0.0, pgcurve::make_lattice_curve(params, points), std::nullopt,
                 {}};
  for (double s : params)
    if (lc.curve.domain().contains(s)) lc.lattice.push_back(s);
  return lc;
}

LoadedCurve load_curve(const RunConfig& cfg) {
  if (cfg.input) {
    if (!cfg.curve.empty())
      throw Error(ErrorCode::InvalidArgument, "--curve and --input are mutually exclusive");
    return load_file(*cfg.input);
  }
  if (cfg.curve.empty()) throw Error(ErrorCode::InvalidArgument, "--curve or --input is required");
  const auto& fx = pgcurve::list_fixtures();
  const auto it = std::find_if(fx.begin(), fx.end(), [&](const auto& f) { return f.name == cfg.curve; });
  if (it == fx.end()) throw Error(ErrorCode::UnknownName, "unknown fixture '" + cfg.curve + "'");
  const double a = cfg.a.value_or(it->default_a);
  const double b = cfg.b.value_or(it->default_b);
  auto entry = pgcurve::get_example(cfg.curve, a, b);
  return LoadedCurve{cfg.curve, "zoo", a, b, entry.curve, std::move(entry), {}};
}

std::vector<double> make_grid(const RunConfig& cfg, const LoadedCurve& lc) {
  if (!cfg.grid) {
    if (!lc.lattice.empty()) return lc.lattice;
    const auto d = lc.curve.domain();
    return pgcurve::linspace(d.lo, d.hi, kDefaultGridCount);
  }
  const GridSpec& g = *cfg.grid;
  const auto d = lc.curve.domain();
  if (!d.contains(g.start) || !d.contains(g.stop)) {
    std::ostringstream os;
    os << "grid [" << format_double(g.start) << ", " << format_double(g.stop)
       << "] leaves the curve domain [" << format_double(d.lo) << ", " << format_double(d.hi)
       << "]";
    throw Error(ErrorCode::OutOfDomain, os.str());
  }
  return pgcurve::linspace(g.start, g.stop, g.count);
}

bool analytic(const LoadedCurve& lc) { return lc.curve.kind() == pgcurve::JetKind::AnalyticJets; }

double tol_class(const RunConfig& cfg, const LoadedCurve& lc) {
  return cfg.tol.classify.value_or(pgcurve::default_aw_tolerance(lc.curve.kind()));
}
double tol_zero(const RunConfig& cfg, const LoadedCurve& lc) {
  return cfg.tol.zero.value_or(analytic(lc) ? 1e-8 : 1e-5);
}
double tol_const(const RunConfig& cfg, const LoadedCurve& lc) {
  return cfg.tol.constant.value_or(analytic(lc) ? 1e-6 : 1e-4);
}

json json_num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json curve_json(const LoadedCurve& lc) {
  json j;
  j["name"] = lc.name;
  j["source"] = lc.source;
  j["jets"] = analytic(lc) ? "analytic" : "finite_difference";
  return j;
}

json params_json(const LoadedCurve& lc) {
  if (lc.source != "zoo") return json::object();
  return json{{"a", lc.a}, {"b", lc.b}};
}

json grid_json(const std::vector<double>& grid) {
  return json{{"start", grid.front()}, {"stop", grid.back()}, {"count", grid.size()}};
}

void emit(std::ostream& err, const char* level, const std::string& message,
          std::optional<std::string_view> code = std::nullopt,
          std::optional<double> param = std::nullopt) {
  json j{{"schema", kSchema}, {"level", level}};
  if (code) j["code"] = *code;
  j["message"] = message;
  if (param) j["param"] = json_num(*param);
  err << j.dump() << '\n';
}

double residual_or_nan(auto&& f) {
  try {
    return f();
  } catch (const Error&) {
    return std::nan("");
  }
}

// Step for the frame residual columns: lattice spacing for file input.
double residual_step(const LoadedCurve& lc) {
  if (lc.lattice.size() >= 2) return lc.lattice[1] - lc.lattice[0];
  return 1e-4;
}

void cmd_eval(const RunConfig& cfg, std::ostream& out) {
  const LoadedCurve lc = load_curve(cfg);
  const auto grid = make_grid(cfg, lc);
  const double h = residual_step(lc);
  static const std::vector<std::string> cols{
      "s",     "x",     "y",     "z",     "kappa", "tau",   "epsilon", "K",
      "Tq",    "e1_x1", "e1_x2", "e1_x3", "e2_x1", "e2_x2", "e2_x3",   "e3_x1",
      "e3_x2", "e3_x3", "frenet_residual", "equiform_residual"};

  std::vector<std::vector<double>> rows;
  rows.reserve(grid.size());
  for (double s : grid) {
    const auto e = pgcurve::equiform_data(lc.curve, s, cfg.tol.light);
    const auto p = lc.curve.eval(s, 0);
    const auto& f = e.frenet;
    rows.push_back({s, p.x1, p.x2, p.x3, f.kappa, f.tau, static_cast<double>(f.epsilon), e.K,
                    e.Tq, f.e1.x1, f.e1.x2, f.e1.x3, f.e2.x1, f.e2.x2, f.e2.x3, f.e3.x1, f.e3.x2,
                    f.e3.x3,
                    residual_or_nan([&] { return pgcurve::frenet_residual(lc.curve, s, h); }),
                    residual_or_nan([&] { return pgcurve::equiform_residual(lc.curve, s, h); })});
  }

  if (cfg.format == Format::Csv) {
    CsvWriter w(out);
    w.header(cols);
    for (const auto& r : rows) w.row(r);
    return;
  }
  json doc{{"schema", kSchema}, {"command", "eval"}, {"curve", curve_json(lc)},
           {"params", params_json(lc)}, {"grid", grid_json(grid)}};
  json jrows = json::array();
  for (const auto& r : rows) {
    json jr;
    for (std::size_t i = 0; i < cols.size(); ++i) jr[cols[i]] = json_num(r[i]);
    jrows.push_back(std::move(jr));
  }
  doc["rows"] = std::move(jrows);
  out << doc.dump(2) << '\n';
}

void cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const LoadedCurve lc = load_curve(cfg);
  const auto grid = make_grid(cfg, lc);
  const auto report = pgcurve::classify(lc.curve, grid, tol_class(cfg, lc));

  std::optional<pgcurve::NaturalClass> nc;
  if (grid.size() >= 5) nc = pgcurve::natural_class(lc.curve, grid, tol_const(cfg, lc), tol_zero(cfg, lc));

  std::vector<std::string> diagnostics = lc.curve.warnings();
  diagnostics.insert(diagnostics.end(), report.diagnostics.begin(), report.diagnostics.end());
  if (lc.entry) {
    for (auto& d : pgcurve::reference_discrepancies(*lc.entry, grid)) diagnostics.push_back(d);
    for (auto& d : pgcurve::classification_discrepancies(*lc.entry, report))
      diagnostics.push_back(d);
  }
  for (const auto& d : diagnostics) emit(err, "diagnostic", d);

  if (cfg.format == Format::Csv) {
    CsvWriter w(out);
    w.header({"type", "holds", "sup_residual", "grid_size", "tolerance"});
    for (auto t : pgcurve::kAllAwTypes) {
      const auto& e = report[t];
      w.row_strings({std::string(pgcurve::to_string(t)), e.holds ? "true" : "false",
                     format_double(e.sup_residual), std::to_string(e.grid_size),
                     format_double(report.tolerance)});
    }
    return;
  }

  json doc{{"schema", kSchema}, {"command", "classify"}, {"curve", curve_json(lc)},
           {"params", params_json(lc)}, {"grid", grid_json(grid)},
           {"tolerance", report.tolerance}};
  if (nc) {
    doc["natural_class"] = json{{"tag", pgcurve::to_string(nc->tag)},
                                {"K_mean", json_num(nc->K_mean)},
                                {"Tq_mean", json_num(nc->Tq_mean)},
                                {"K_var", json_num(nc->K_var)},
                                {"Tq_var", json_num(nc->Tq_var)}};
  } else {
    doc["natural_class"] = nullptr;
  }
  json aw = json::object();
  json holds = json::array();
  for (auto t : pgcurve::kAllAwTypes) {
    const auto& e = report[t];
    aw[std::string(pgcurve::to_string(t))] =
        json{{"holds", e.holds}, {"sup_residual", json_num(e.sup_residual)}, {"grid_size", e.grid_size}};
    if (e.holds) holds.push_back(pgcurve::to_string(t));
  }
  doc["aw"] = std::move(aw);
  doc["holds"] = std::move(holds);
  doc["degenerate_points"] = report.degenerate_points.size();
  doc["diagnostics"] = diagnostics;
  out << doc.dump(2) << '\n';
}

void cmd_bertrand(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.lambda) throw Error(ErrorCode::InvalidArgument, "bertrand needs --lambda");
  const LoadedCurve lc = load_curve(cfg);
  const auto grid = make_grid(cfg, lc);
  const auto mate = pgcurve::bertrand_mate(lc.curve, *cfg.lambda);
  const auto pair = pgcurve::verify_bertrand_pair(lc.curve, mate, grid, tol_class(cfg, lc));
  for (const auto& d : pair.diagnostics) emit(err, "diagnostic", d);

  const std::vector<std::pair<std::string, double>> fields{
      {"lambda", *cfg.lambda},
      {"lambda_recovered", pair.lambda},
      {"lambda_var", pair.lambda_spread},
      {"K_sup", pair.K_sup},
      {"K_mate_sup", pair.K_mate_sup},
      {"normal_parallel_sup", pair.normal_parallel_sup},
      {"tangent_product_mean", pair.tangent_product_mean},
      {"tangent_product_var", pair.tangent_product_var}};
  const std::string nature(pgcurve::to_string(pair.nature));

  if (cfg.format == Format::Csv) {
    CsvWriter w(out);
    std::vector<std::string> head{"is_pair", "nature"}, row{pair.is_pair ? "true" : "false", nature};
    for (const auto& [k, v] : fields) {
      head.push_back(k);
      row.push_back(format_double(v));
    }
    w.header(head);
    w.row_strings(row);
    return;
  }
  json doc{{"schema", kSchema}, {"command", "bertrand"}, {"curve", curve_json(lc)},
           {"params", params_json(lc)}, {"grid", grid_json(grid)},
           {"is_pair", pair.is_pair}, {"nature", nature}};
  for (const auto& [k, v] : fields) doc[k] = json_num(v);
  doc["diagnostics"] = pair.diagnostics;
  out << doc.dump(2) << '\n';
}

void cmd_zoo_list(const RunConfig& cfg, std::ostream& out) {
  const auto& fx = pgcurve::list_fixtures();
  if (cfg.format == Format::Csv) {
    CsvWriter w(out);
    w.header({"name", "description", "constraints", "default_a", "default_b", "domain_lo",
              "domain_hi"});
    for (const auto& f : fx) {
      const auto d = pgcurve::default_domain(f.name, f.default_a, f.default_b);
      w.row_strings({f.name, f.description, f.constraints, format_double(f.default_a),
                     format_double(f.default_b), format_double(d.lo), format_double(d.hi)});
    }
    return;
  }
  json list = json::array();
  for (const auto& f : fx) {
    const auto d = pgcurve::default_domain(f.name, f.default_a, f.default_b);
    list.push_back(json{{"name", f.name}, {"description", f.description},
                        {"constraints", f.constraints}, {"default_a", f.default_a},
                        {"default_b", f.default_b}, {"domain", json::array({d.lo, d.hi})}});
  }
  out << json{{"schema", kSchema}, {"command", "zoo-list"}, {"fixtures", list}}.dump(2) << '\n';
}

void cmd_figure(const RunConfig& cfg, std::ostream& out) {
  const auto fig = pgcurve::figure_spec(cfg.figure);
  const auto entry = pgcurve::get_example(fig.name, fig.a, fig.b);
  const auto grid = pgcurve::linspace(entry.domain.lo, entry.domain.hi, kFigureSamples);
  if (cfg.format == Format::Csv) {
    CsvWriter w(out);
    w.header({"s", "x", "y", "z"});
    for (double s : grid) {
      const auto p = entry.position(s);
      w.row({s, p.x1, p.x2, p.x3});
    }
    return;
  }
  json samples = json::array();
  for (double s : grid) {
    const auto p = entry.position(s);
    samples.push_back(json::array({s, p.x1, p.x2, p.x3}));
  }
  json doc{{"schema", kSchema}, {"command", "figure"}, {"figure", cfg.figure},
           {"curve", fig.name}, {"params", json{{"a", fig.a}, {"b", fig.b}}},
           {"columns", json::array({"s", "x", "y", "z"})}, {"samples", std::move(samples)}};
  out << doc.dump(2) << '\n';
}

int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::Inadmissible:
    case ErrorCode::MateInadmissible:
    case ErrorCode::IsotropicTangent:
    case ErrorCode::Q1Lightlike:
      return kInadmissible;
    default:
      return kValidation;
  }
}

void validate(const RunConfig& cfg) {
  auto positive = [](std::optional<double> v, const char* what) {
    if (v && !(*v > 0.0)) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be positive");
  };
  positive(cfg.tol.classify, "--tol");
  positive(cfg.tol.zero, "--tol-zero");
  positive(cfg.tol.constant, "--tol-const");
  positive(cfg.tol.light, "--tol-light");
  if (cfg.grid) {
    const auto& g = *cfg.grid;
    if (g.count == 0) throw Error(ErrorCode::InvalidArgument, "grid count must be positive");
    if (g.count == 1 && g.start != g.stop)
      throw Error(ErrorCode::InvalidArgument, "a one-point grid needs start == stop");
    if (g.count >= 2 && !(g.start < g.stop))
      throw Error(ErrorCode::InvalidArgument, "grid needs start < stop");
  }
}

void build_app(CLI::App& app, RunConfig& cfg, std::string& grid_text, std::string& format_text) {
  app.require_subcommand(1);
  auto output_opts = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Output path, '-' for stdout");
    sub->add_option("--format", format_text, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };
  auto curve_opts = [&](CLI::App* sub) {
    sub->add_option("--curve", cfg.curve, "Fixture name (see zoo-list)");
    sub->add_option("--a", cfg.a, "Fixture parameter a");
    sub->add_option("--b", cfg.b, "Fixture parameter b");
    sub->add_option("--input", cfg.input, "CSV with columns s,x,y,z");
    sub->add_option("--grid", grid_text, "start:stop:count or a single point");
    sub->add_option("--tol", cfg.tol.classify, "Classification tolerance");
    sub->add_option("--tol-zero", cfg.tol.zero, "Zero test tolerance");
    sub->add_option("--tol-const", cfg.tol.constant, "Constancy test tolerance");
    sub->add_option("--tol-light", cfg.tol.light, "Lightlike normal tolerance");
    output_opts(sub);
  };

  auto* eval = app.add_subcommand("eval", "Frames and invariants over a grid");
  curve_opts(eval);
  eval->callback([&] { cfg.command = Command::Eval; });

  auto* cls = app.add_subcommand("classify", "AW types and natural class");
  curve_opts(cls);
  cls->callback([&] { cfg.command = Command::Classify; });

  auto* bert = app.add_subcommand("bertrand", "Build and verify a Bertrand mate");
  curve_opts(bert);
  bert->add_option("--lambda", cfg.lambda, "Normal offset")->required();
  bert->callback([&] { cfg.command = Command::Bertrand; });

  auto* zoo = app.add_subcommand("zoo-list", "List fixtures and parameter constraints");
  output_opts(zoo);
  zoo->callback([&] { cfg.command = Command::ZooList; });

  auto* fig = app.add_subcommand("figure", "Position samples for figure N (1..5)");
  fig->add_option("n", cfg.figure, "Figure number")->required()->check(CLI::Range(1, 5));
  output_opts(fig);
  fig->callback([&] { cfg.command = Command::Figure; });
}

RunConfig parse_with(CLI::App& app, const std::vector<std::string>& args) {
  RunConfig cfg;
  std::string grid_text, format_text = "csv";
  build_app(app, cfg, grid_text, format_text);
  std::vector<std::string> rev(args.rbegin(), args.rend());
  app.parse(rev);
  if (!grid_text.empty()) cfg.grid = parse_grid(grid_text);
  cfg.format = format_text == "json" ? Format::Json : Format::Csv;
  validate(cfg);
  return cfg;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

GridSpec parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) {
    const double s = parse_double(parts[0], "grid point");
    return {s, s, 1};
  }
  if (parts.size() != 3)
    throw Error(ErrorCode::InvalidArgument, "grid must be start:stop:count, got '" + text + "'");
  GridSpec g;
  g.start = parse_double(parts[0], "grid start");
  g.stop = parse_double(parts[1], "grid stop");
  const double n = parse_double(parts[2], "grid count");
  if (!(n >= 1.0) || n != std::floor(n) || n > 1e7)
    throw Error(ErrorCode::InvalidArgument, "grid count must be a positive integer");
  g.count = static_cast<std::size_t>(n);
  return g;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"pg-curvelab", "pg-curvelab"};
  try {
    return parse_with(app, args);
  } catch (const CLI::Error& e) {
    throw Error(ErrorCode::InvalidArgument, e.what());
  }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostringstream buffer;
  const bool to_file = cfg.out != "-";
  std::ostream& sink = to_file ? static_cast<std::ostream&>(buffer) : out;
  try {
    validate(cfg);
    switch (cfg.command) {
      case Command::Eval: cmd_eval(cfg, sink); break;
      case Command::Classify: cmd_classify(cfg, sink, err); break;
      case Command::Bertrand: cmd_bertrand(cfg, sink, err); break;
      case Command::ZooList: cmd_zoo_list(cfg, sink); break;
      case Command::Figure: cmd_figure(cfg, sink); break;
    }
  } catch (const Error& e) {
    emit(err, "error", e.what(), pgcurve::to_string(e.code()), e.param());
    return exit_for(e.code());
  }
  if (to_file) {
    file.open(cfg.out, std::ios::binary);
    if (!file || !(file << buffer.str()) || !file.flush()) {
      emit(err, "error", "cannot write '" + cfg.out + "'", "InvalidArgument");
      return kValidation;
    }
  }
  return kOk;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pg-curvelab", "pg-curvelab"};
  RunConfig cfg;
  try {
    cfg = parse_with(app, args);
  } catch (const CLI::Success&) {
    out << app.help();
    return kOk;
  } catch (const CLI::Error& e) {
    emit(err, "error", e.what(), "InvalidArgument");
    return kValidation;
  } catch (const Error& e) {
    emit(err, "error", e.what(), pgcurve::to_string(e.code()), e.param());
    return kValidation;
  }
  return run(cfg, out, err);
}

}  // namespace pgcurvelab
