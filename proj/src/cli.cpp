#include "copangle/cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "copangle/copositivity.hpp"
#include "copangle/matrix_io.hpp"
#include "copangle/report.hpp"
#include "copangle/search.hpp"
#include "copangle/simplex_oracle.hpp"
#include "copangle/spectral.hpp"

namespace copangle {

namespace {

using nlohmann::json;

json matrix_json(const SymMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.rows()) rows.push_back(row);
  return rows;
}

json verdict_json(const CopositivityVerdict& v, double tol) {
  json out{{"member", v.member},
           {"margin", v.margin},
           {"tol", tol},
           {"slacks", v.slacks}};
  if (v.witness) {
    out["witness"] = {{"point", v.witness->point},
                      {"value", v.witness->value}};
  } else {
    out["witness"] = nullptr;
  }
  out["violated_index"] = v.violated_index;
  return out;
}

json report_json(const SearchReport& report) {
  json per_start = json::array();
  for (const StartResult& s : report.per_start) {
    per_start.push_back({{"start", s.start_index},
                         {"final_angle", s.final_angle},
                         {"iterations", s.iterations},
                         {"converged", s.converged}});
  }
  return json{
      {"config",
       {{"order", report.config.order},
        {"starts", report.config.starts},
        {"seed", report.config.seed.value},
        {"max_outer_iter", report.config.max_outer_iter},
        {"inner_tol", report.config.inner_tol},
        {"outer_tol", report.config.outer_tol}}},
      {"best",
       {{"angle_rad", report.best.angle},
        {"angle_over_pi", report.best.angle / std::numbers::pi},
        {"inner", report.best.inner},
        {"a", matrix_json(report.best.a)},
        {"b", matrix_json(report.best.b)}}},
      {"best_start", report.best_start},
      {"per_start", per_start}};
}

void write_start_csv(std::ostream& out, const SearchReport& report) {
  out << "start,final_angle,iterations,converged\n";
  for (const StartResult& s : report.per_start) {
    out << s.start_index << "," << format_real(s.final_angle) << ","
        << s.iterations << "," << (s.converged ? "true" : "false") << "\n";
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw IoError("cannot open " + path + " for writing");
  return file;
}

int run_search_command(bool psi, int order, int starts,
                       std::uint64_t seed_value, bool csv,
                       const std::string& out_path, std::ostream& out) {
  SearchConfig cfg;
  cfg.order = order;
  cfg.starts = starts;
  cfg.seed = Seed{seed_value};
  const SearchReport report =
      psi ? psd_nonneg_max_angle(order, cfg) : multistart_max_angle(cfg);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file = open_output(out_path);
    sink = &file;
  }
  if (csv) {
    write_start_csv(*sink, report);
  } else {
    *sink << report_json(report).dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Geometry of the copositive cone for small symmetric matrices"};
  app.require_subcommand(1);

  std::string file_a, file_b, out_path;
  double tol = 1e-10;
  long oracle_resolution = 0;
  int order = 3;
  int starts = 64;
  std::uint64_t seed_value = 0;
  bool csv = false;
  double a22 = 0.25;

  CLI::App* check = app.add_subcommand("check", "Exact copositivity verdict");
  check->add_option("file", file_a, "matrix file")->required();
  check->add_option("--tol", tol, "slack tolerance");
  check->add_option("--oracle", oracle_resolution,
                    "cross-check with the simplex oracle at this resolution");

  CLI::App* classify =
      app.add_subcommand("classify", "Sign case, scaled parameters, PSD flag");
  classify->add_option("file", file_a, "matrix file")->required();

  CLI::App* angle = app.add_subcommand("angle", "Inner product and angle");
  angle->add_option("fileA", file_a, "first matrix file")->required();
  angle->add_option("fileB", file_b, "second matrix file")->required();

  CLI::App* search =
      app.add_subcommand("search", "Multistart maximal-angle search");
  search->add_option("--n", order, "matrix order (2..4)");
  search->add_option("--starts", starts, "number of starts");
  search->add_option("--seed", seed_value, "run seed");
  search->add_flag("--csv", csv, "emit per-start rows as CSV");
  search->add_option("--out", out_path, "write output to this file");

  CLI::App* psi = app.add_subcommand(
      "psi", "Maximal angle between PSD and nonnegative matrices");
  psi->add_option("--n", order, "matrix order (2..6)");
  psi->add_option("--starts", starts, "number of starts");
  psi->add_option("--seed", seed_value, "run seed");
  psi->add_flag("--csv", csv, "emit per-start rows as CSV");
  psi->add_option("--out", out_path, "write output to this file");

  CLI::App* family =
      app.add_subcommand("family", "Maximal-angle family pair for one a22");
  family->add_option("--a22", a22, "family parameter in [0, 1/2]")->required();
  family->add_option("--out", out_path,
                     "write the pair to <out>_A.txt and <out>_B.txt");

  CLI::App* reproduce =
      app.add_subcommand("reproduce", "Full reproduction table as CSV");
  reproduce->add_option("--out", out_path, "write the CSV to this file");

  try {
    // CLI11's vector overload consumes the arguments in reverse order.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) {
      const SymMatrix m = load_matrix(file_a);
      const CopositivityVerdict v = is_copositive(m, tol);
      json result = verdict_json(v, tol);
      result["order"] = m.order();
      if (oracle_resolution > 0) {
        const SimplexScan scan = simplex_oracle(m, oracle_resolution);
        bool agrees = true;
        if (v.member && v.margin > 1e-6) agrees = scan.min_value >= -1e-9;
        if (!v.member && v.margin < -1e-3) {
          agrees = agrees && scan.min_value < 0.0;
        }
        result["oracle"] = {{"resolution", oracle_resolution},
                            {"min_value", scan.min_value},
                            {"argmin", scan.argmin},
                            {"agrees", agrees}};
      }
      out << result.dump(2) << "\n";
      return 0;
    }

    if (classify->parsed()) {
      const SymMatrix m = load_matrix(file_a);
      json result{{"order", m.order()}};
      result["negatives_above_diagonal"] =
          classify_signs(m).negatives_above_diagonal;
      bool positive_diagonal = true;
      for (int i = 0; i < m.order(); ++i) {
        positive_diagonal = positive_diagonal && m(i, i) > 0.0;
      }
      if (positive_diagonal) {
        const ScaledParams sp = scaled_params(m);
        result["scaled_params"] = {
            {"alpha", sp.alpha}, {"beta", sp.beta}, {"gamma", sp.gamma}};
      } else {
        result["scaled_params"] = nullptr;
      }
      result["psd"] = min_eigenvalue(m) >= -1e-10;
      out << result.dump(2) << "\n";
      return 0;
    }

    if (angle->parsed()) {
      const SymMatrix a = load_matrix(file_a);
      const SymMatrix b = load_matrix(file_b);
      const double rad = angle_between(a, b);
      json result{{"inner", inner_product(a, b)},
                  {"angle_rad", rad},
                  {"angle_over_pi", rad / std::numbers::pi}};
      out << result.dump(2) << "\n";
      return 0;
    }

    if (search->parsed()) {
      return run_search_command(false, order, starts, seed_value, csv,
                                out_path, out);
    }
    if (psi->parsed()) {
      return run_search_command(true, order, starts, seed_value, csv,
                                out_path, out);
    }

    if (family->parsed()) {
      const AnglePair pair = antipodal_family_pair(a22);
      out << "# A\n";
      write_matrix(out, pair.a);
      out << "# B\n";
      write_matrix(out, pair.b);
      out << "# inner\n" << format_real(pair.inner) << "\n";
      if (!out_path.empty()) {
        save_matrix(out_path + "_A.txt", pair.a);
        save_matrix(out_path + "_B.txt", pair.b);
      }
      return 0;
    }

    if (reproduce->parsed()) {
      const std::vector<ReportRow> rows = reproduce_all();
      if (out_path.empty()) {
        write_report_csv(out, rows);
      } else {
        std::ofstream file = open_output(out_path);
        write_report_csv(file, rows);
      }
      bool all_pass = true;
      for (const ReportRow& row : rows) all_pass = all_pass && row.pass;
      return all_pass ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace copangle
