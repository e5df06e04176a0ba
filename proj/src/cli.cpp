#include "popwilf/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "popwilf/bijection.hpp"
#include "popwilf/enumeration.hpp"
#include "popwilf/patterns.hpp"
#include "popwilf/trace_json.hpp"
#include "popwilf/verify.hpp"

namespace popwilf {

std::string render_ascii(const Transversal& t) {
  std::string out;
  for (int r = 1; r <= t.size(); ++r) {
    for (int c = 1; c <= t.shape().row_length(r); ++c)
      out += (c == t.col_of_row(r)) ? "●" : "·";
    out += "\n";
  }
  out += t.to_string();
  out += "\n";
  return out;
}

std::string render_svg(const Transversal& t) {
  constexpr int cell = 20;
  constexpr int margin = 1;
  const int width = t.shape().col_count() * cell + 2 * margin;
  const int height = t.size() * cell + 2 * margin;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\">\n";
  for (int r = 1; r <= t.size(); ++r)
    for (int c = 1; c <= t.shape().row_length(r); ++c)
      svg << "  <rect x=\"" << margin + (c - 1) * cell << "\" y=\"" << margin + (r - 1) * cell
          << "\" width=\"" << cell << "\" height=\"" << cell
          << "\" fill=\"white\" stroke=\"black\"/>\n";
  for (int r = 1; r <= t.size(); ++r)
    svg << "  <circle cx=\"" << margin + (t.col_of_row(r) - 1) * cell + cell / 2 << "\" cy=\""
        << margin + (r - 1) * cell + cell / 2 << "\" r=\"" << cell / 4 << "\" fill=\"black\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

namespace {

Pop parse_pop_spec(const std::string& spec) {
  if (spec.size() >= 2 && (spec[0] == 'P' || spec[0] == 'p' || spec[0] == 'Q' || spec[0] == 'q') &&
      std::all_of(spec.begin() + 1, spec.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const int k = std::stoi(spec.substr(1));
    return (spec[0] == 'P' || spec[0] == 'p') ? Pop::p_k(k) : Pop::q_k(k);
  }
  return Pop::parse(spec);
}

// A --pop value is either one spec or a comma-separated list of the P<k>/Q<k>
// shorthands; full-grammar specs contain commas themselves and must be passed
// one per flag.
std::vector<Pop> parse_pop_list(const std::vector<std::string>& values) {
  std::vector<Pop> pops;
  for (const std::string& value : values) {
    bool shorthand_list = !value.empty();
    std::vector<std::string> parts;
    std::stringstream ss(value);
    std::string part;
    while (std::getline(ss, part, ',')) {
      parts.push_back(part);
      if (part.empty() || (part[0] != 'P' && part[0] != 'p' && part[0] != 'Q' && part[0] != 'q') ||
          !std::all_of(part.begin() + 1, part.end(), [](char c) { return c >= '0' && c <= '9'; }))
        shorthand_list = false;
    }
    if (shorthand_list)
      for (const std::string& p : parts) pops.push_back(parse_pop_spec(p));
    else
      pops.push_back(parse_pop_spec(value));
  }
  return pops;
}

std::vector<Pattern> parse_pattern_csv(const std::string& csv) {
  std::vector<Pattern> out;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::vector<int> word;
    for (char c : token) {
      if (c < '1' || c > '9') raise(errc::syntax_error, "pattern must be digits 1-9: " + token);
      word.push_back(c - '0');
    }
    out.push_back(Pattern(std::move(word)));
  }
  if (out.empty()) raise(errc::syntax_error, "no patterns given");
  return out;
}

Transversal read_transversal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::syntax_error, "cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) return parse_transversal(line);
  }
  raise(errc::syntax_error, "no transversal line in " + path);
}

template <typename Item, typename Fn>
void parallel_over(const std::vector<Item>& items, int jobs, Fn&& fn) {
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < items.size(); ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1)) fn(i);
    });
  for (std::thread& th : pool) th.join();
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case errc::iteration_cap_exceeded:
    case errc::consistency_violation:
    case errc::selection_incomplete:
    case errc::not_a_qk_submatrix:
    case errc::not_a_pk_submatrix:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pattern-avoiding transversals of Young diagrams: enumeration, "
               "avoider counts, and the p_k/q_k bijection with verification"};
  app.name("popwilf");
  app.require_subcommand(1);

  // shapes
  int rows = 0;
  CLI::App* shapes_cmd = app.add_subcommand("shapes", "List transversal-admitting shapes");
  shapes_cmd->add_option("--rows", rows, "Number of rows")->required();

  // enumerate
  std::string shape_arg;
  CLI::App* enum_cmd = app.add_subcommand("enumerate", "List all transversals of a shape");
  enum_cmd->add_option("--shape", shape_arg, "Row lengths, e.g. 3,3,2")->required();

  // count
  std::string count_shape;
  std::vector<std::string> count_pops;
  std::string count_patterns;
  CLI::App* count_cmd = app.add_subcommand("count", "Count avoiding transversals of a shape");
  count_cmd->add_option("--shape", count_shape, "Row lengths")->required();
  CLI::Option* count_pop_opt = count_cmd->add_option("--pop", count_pops, "POP spec (P3, Q4, or k=...;lt=...)");
  CLI::Option* count_pat_opt = count_cmd->add_option("--patterns", count_patterns, "Comma-separated patterns, e.g. 213,312");
  count_pop_opt->excludes(count_pat_opt);

  // census
  int census_rows = 0;
  std::vector<std::string> census_pops;
  std::string census_out;
  int census_jobs = 1;
  CLI::App* census_cmd = app.add_subcommand("census", "Avoider counts for every shape up to a size");
  census_cmd->add_option("--max-rows", census_rows, "Largest row count")->required();
  census_cmd->add_option("--pop", census_pops, "POP specs (repeatable; P3,Q3 shorthand lists allowed)")
      ->required();
  census_cmd->add_option("--out", census_out, "Output CSV file, '-' for stdout")->required();
  census_cmd->add_option("--jobs", census_jobs, "Worker threads over shapes");

  // apply
  std::string map_name, apply_input, trace_path;
  int apply_k = 0;
  CLI::App* apply_cmd = app.add_subcommand("apply", "Apply the phi or psi map to a transversal");
  apply_cmd->add_option("--map", map_name, "phi or psi")
      ->required()
      ->check(CLI::IsMember({"phi", "psi"}));
  apply_cmd->add_option("--k", apply_k, "Pattern length (k >= 3)")->required();
  apply_cmd->add_option("--input", apply_input, "File with a transversal line")->required();
  apply_cmd->add_option("--trace", trace_path, "Write the step trace as JSON");

  // verify
  int verify_rows = 0, verify_k = 0, verify_jobs = 1;
  std::string report_path, failures_path;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Exhaustively verify the bijection");
  verify_cmd->add_option("--max-rows", verify_rows, "Largest row count")->required();
  verify_cmd->add_option("--k", verify_k, "Pattern length (k >= 3)")->required();
  verify_cmd->add_option("--jobs", verify_jobs, "Worker threads over shapes");
  verify_cmd->add_option("--report", report_path, "Write a per-shape CSV report");
  verify_cmd->add_option("--failures", failures_path, "Write lemma-failure details as JSON");

  // render
  std::string render_input, render_format = "ascii";
  CLI::App* render_cmd = app.add_subcommand("render", "Render a transversal");
  render_cmd->add_option("--input", render_input, "File with a transversal line")->required();
  render_cmd->add_option("--format", render_format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*shapes_cmd) {
      for_each_shape(rows, [&](const YoungDiagram& d) { out << d.to_string() << '\n'; });
      return 0;
    }
    if (*enum_cmd) {
      for_each_transversal(parse_shape(shape_arg),
                           [&](const Transversal& t) { out << t.to_string() << '\n'; });
      return 0;
    }
    if (*count_cmd) {
      const YoungDiagram shape = parse_shape(count_shape);
      if (!count_pops.empty()) {
        std::vector<Pop> pops = parse_pop_list(count_pops);
        if (pops.size() != 1) raise(errc::syntax_error, "count takes exactly one POP");
        out << count_avoiders(shape, pops.front()) << '\n';
      } else if (!count_patterns.empty()) {
        out << count_avoiders(shape, parse_pattern_csv(count_patterns)) << '\n';
      } else {
        raise(errc::syntax_error, "count needs --pop or --patterns");
      }
      return 0;
    }
    if (*census_cmd) {
      const std::vector<Pop> pops = parse_pop_list(census_pops);
      if (census_out == "-") {
        write_census_csv(census_rows, pops, census_jobs, out);
      } else {
        std::ofstream file(census_out);
        if (!file) raise(errc::syntax_error, "cannot write " + census_out);
        write_census_csv(census_rows, pops, census_jobs, file);
      }
      return 0;
    }
    if (*apply_cmd) {
      const Transversal input = read_transversal_file(apply_input);
      auto [result, trace] =
          map_name == "phi" ? run_phi(input, apply_k) : run_psi(input, apply_k);
      if (!trace_path.empty()) {
        std::ofstream file(trace_path);
        if (!file) raise(errc::syntax_error, "cannot write " + trace_path);
        file << trace_to_json(trace);
      }
      out << result.to_string() << '\n';
      return 0;
    }
    if (*verify_cmd) {
      std::vector<YoungDiagram> shapes;
      for (int n = 1; n <= verify_rows; ++n)
        for_each_shape(n, [&](const YoungDiagram& d) { shapes.push_back(d); });
      std::vector<VerificationReport> reports;
      reports.reserve(shapes.size());
      for (const YoungDiagram& d : shapes) reports.push_back({d, verify_k, 0, 0, false, false, {}});
      parallel_over(shapes, verify_jobs,
                    [&](std::size_t i) { reports[i] = verify_shape(shapes[i], verify_k); });
      if (!report_path.empty()) {
        std::ofstream file(report_path);
        if (!file) raise(errc::syntax_error, "cannot write " + report_path);
        write_verify_csv(reports, file);
      }
      if (!failures_path.empty()) {
        std::ofstream file(failures_path);
        if (!file) raise(errc::syntax_error, "cannot write " + failures_path);
        file << lemma_failures_to_json(reports);
      }
      std::size_t failures = 0;
      for (const VerificationReport& rep : reports) {
        out << "shape=" << rep.shape.to_string() << " k=" << rep.k << " P=" << rep.count_p
            << " Q=" << rep.count_q;
        if (rep.ok()) {
          out << " ok\n";
        } else {
          ++failures;
          out << " FAIL bijective=" << (rep.bijective ? "yes" : "no")
              << " inverse=" << (rep.inverse_ok ? "yes" : "no")
              << " lemma_failures=" << rep.lemma_failures.size() << '\n';
          for (const LemmaFailure& f : rep.lemma_failures)
            err << "  " << f.lemma << " at " << f.where << (f.detail.empty() ? "" : ": " + f.detail)
                << '\n';
        }
      }
      out << "verified " << reports.size() << " shapes, " << failures << " failing\n";
      return failures == 0 ? 0 : 1;
    }
    if (*render_cmd) {
      const Transversal t = read_transversal_file(render_input);
      out << (render_format == "svg" ? render_svg(t) : render_ascii(t));
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return 2;
}

}  // namespace popwilf
