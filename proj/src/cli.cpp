#include "mlpd/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "mlpd/format.hpp"

namespace mlpd {

namespace {

struct FamilyArgs {
  std::string family;
  std::string alpha, beta, gamma, alpha1, beta1, alpha2, beta2;
};

struct PolicyArgs {
  double rel_tol = 1e-12;
  long max_terms = 100000;
  int small_run = 3;
  std::string tail_mode = "geometric-ratio";
};

struct ContourArgs {
  double quad_tol = 1e-10;
  double phi = 1.0;
  double c = 0.5;
  double x_max = 0.0;
  long max_nodes = 200000;
};

void add_family_options(CLI::App* cmd, FamilyArgs& fa) {
  cmd->add_option("--family", fa.family, "ml2|ml3|ml4|wright|leroy")
      ->required();
  cmd->add_option("--alpha", fa.alpha, "complex, e.g. 0.8 or 0.8+0.1i");
  cmd->add_option("--beta", fa.beta, "complex");
  cmd->add_option("--gamma", fa.gamma, "complex (ml3) / positive real (leroy)");
  cmd->add_option("--alpha1", fa.alpha1, "complex (ml4)");
  cmd->add_option("--beta1", fa.beta1, "complex (ml4)");
  cmd->add_option("--alpha2", fa.alpha2, "complex (ml4)");
  cmd->add_option("--beta2", fa.beta2, "complex (ml4)");
}

void add_policy_options(CLI::App* cmd, PolicyArgs& pa) {
  cmd->add_option("--rel-tol", pa.rel_tol, "series relative tolerance");
  cmd->add_option("--max-terms", pa.max_terms, "series term cap");
  cmd->add_option("--small-run", pa.small_run,
                  "consecutive small terms required to stop");
  cmd->add_option("--tail-mode", pa.tail_mode, "geometric-ratio|last-term");
}

void add_contour_options(CLI::App* cmd, ContourArgs& ca) {
  cmd->add_option("--quad-tol", ca.quad_tol, "quadrature tolerance");
  cmd->add_option("--phi", ca.phi, "contour half-offset");
  cmd->add_option("--c", ca.c, "contour crossing point in (0,1)");
  cmd->add_option("--x-max", ca.x_max, "leg truncation (0 = adaptive)");
  cmd->add_option("--max-nodes", ca.max_nodes, "quadrature node cap");
}

cplx need(const std::string& text, const char* flag) {
  if (text.empty())
    throw DomainError(std::string("missing required option ") + flag);
  return parse_complex(text);
}

ParameterSet build_params(const FamilyArgs& fa) {
  if (fa.family == "ml2")
    return Ml2{need(fa.alpha, "--alpha"), need(fa.beta, "--beta")};
  if (fa.family == "ml3")
    return Ml3{need(fa.alpha, "--alpha"), need(fa.beta, "--beta"),
               need(fa.gamma, "--gamma")};
  if (fa.family == "ml4")
    return Ml4{need(fa.alpha1, "--alpha1"), need(fa.beta1, "--beta1"),
               need(fa.alpha2, "--alpha2"), need(fa.beta2, "--beta2")};
  if (fa.family == "wright")
    return Wright{need(fa.alpha, "--alpha"), need(fa.beta, "--beta")};
  if (fa.family == "leroy") {
    const cplx g = need(fa.gamma, "--gamma");
    if (g.imag() != 0.0) throw DomainError("leroy: --gamma must be real");
    return LeRoy{need(fa.alpha, "--alpha"), need(fa.beta, "--beta"), g.real()};
  }
  throw DomainError("unknown family '" + fa.family + "'");
}

TruncationPolicy build_policy(const PolicyArgs& pa) {
  TruncationPolicy policy;
  policy.rel_tol = pa.rel_tol;
  policy.max_terms = pa.max_terms;
  policy.small_run = pa.small_run;
  if (pa.tail_mode == "geometric-ratio")
    policy.tail_mode = TailMode::geometric_ratio;
  else if (pa.tail_mode == "last-term")
    policy.tail_mode = TailMode::last_term;
  else
    throw DomainError("unknown --tail-mode '" + pa.tail_mode + "'");
  return policy;
}

ContourSpec build_contour(const ContourArgs& ca) {
  ContourSpec contour;
  contour.quad_tol = ca.quad_tol;
  contour.phi = ca.phi;
  contour.c = ca.c;
  contour.x_max = ca.x_max;
  contour.max_nodes = ca.max_nodes;
  contour.validate();
  return contour;
}

Method parse_method(const std::string& m) {
  if (m == "series") return Method::series;
  if (m == "mb" || m == "mellin-barnes") return Method::mellin_barnes;
  if (m == "fd" || m == "finite-difference") return Method::finite_difference;
  throw DomainError("unknown method '" + m + "'");
}

OutputFormat parse_format(const std::string& f) {
  if (f == "csv") return OutputFormat::csv;
  if (f == "json-lines" || f == "jsonl") return OutputFormat::json_lines;
  throw DomainError("unknown --format '" + f + "'");
}

struct ParamCells {
  std::string alpha, beta, gamma, alpha1, beta1, alpha2, beta2;
};

ParamCells param_cells(const ParameterSet& p) {
  ParamCells c;
  std::visit(detail::overloaded{
                 [&](const Ml2& q) {
                   c.alpha = format_complex(q.alpha);
                   c.beta = format_complex(q.beta);
                 },
                 [&](const Ml3& q) {
                   c.alpha = format_complex(q.alpha);
                   c.beta = format_complex(q.beta);
                   c.gamma = format_complex(q.gamma);
                 },
                 [&](const Ml4& q) {
                   c.alpha1 = format_complex(q.alpha1);
                   c.beta1 = format_complex(q.beta1);
                   c.alpha2 = format_complex(q.alpha2);
                   c.beta2 = format_complex(q.beta2);
                 },
                 [&](const Wright& q) {
                   c.alpha = format_complex(q.alpha);
                   c.beta = format_complex(q.beta);
                 },
                 [&](const LeRoy& q) {
                   c.alpha = format_complex(q.alpha);
                   c.beta = format_complex(q.beta);
                   c.gamma = fmt_g17(q.gamma);
                 }},
             p);
  return c;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// --z-grid re0:re1:n,im0:im1:m
std::vector<cplx> parse_z_grid(const std::string& spec) {
  const std::vector<std::string> halves = split(spec, ',');
  if (halves.size() != 2)
    throw DomainError("--z-grid expects re0:re1:n,im0:im1:m");
  auto axis = [](const std::string& part) {
    const std::vector<std::string> f = split(part, ':');
    if (f.size() != 3) throw DomainError("--z-grid axis expects lo:hi:n");
    const double lo = parse_complex(f[0]).real();
    const double hi = parse_complex(f[1]).real();
    const long n = std::strtol(f[2].c_str(), nullptr, 10);
    if (n < 1) throw DomainError("--z-grid axis needs n >= 1");
    std::vector<double> v;
    for (long i = 0; i < n; ++i)
      v.push_back(n == 1 ? lo : lo + (hi - lo) * double(i) / double(n - 1));
    return v;
  };
  const std::vector<double> re = axis(halves[0]);
  const std::vector<double> im = axis(halves[1]);
  std::vector<cplx> grid;
  grid.reserve(re.size() * im.size());
  for (double y : im)
    for (double x : re) grid.emplace_back(x, y);
  return grid;
}

std::string comparison_csv_header() {
  return "family,alpha,beta,gamma,alpha1,beta1,alpha2,beta2,target,z,"
         "method_a,method_b,value_a_re,value_a_im,value_b_re,value_b_im,"
         "abs_diff,budget,pass,error";
}

std::string comparison_to_csv(const ComparisonReport& rep) {
  const ParamCells cells = param_cells(rep.point.params);
  std::string error = rep.error;
  for (char& ch : error)
    if (ch == ',' || ch == '\n') ch = ';';
  std::string s;
  s += family_name(rep.point.params);
  s += "," + cells.alpha + "," + cells.beta + "," + cells.gamma + "," +
       cells.alpha1 + "," + cells.beta1 + "," + cells.alpha2 + "," +
       cells.beta2;
  s += ",";
  if (rep.point.target) s += to_string(*rep.point.target);
  s += "," + format_complex(rep.point.z);
  s += std::string(",") + to_string(rep.method_a) + "," +
       to_string(rep.method_b);
  s += "," + fmt_g17(rep.value_a.real()) + "," + fmt_g17(rep.value_a.imag());
  s += "," + fmt_g17(rep.value_b.real()) + "," + fmt_g17(rep.value_b.imag());
  s += "," + fmt_g17(rep.abs_diff) + "," + fmt_g17(rep.budget);
  s += rep.pass ? ",true" : ",false";
  s += "," + error;
  return s;
}

std::string comparison_to_jsonl(const ComparisonReport& rep) {
  const ParamCells cells = param_cells(rep.point.params);
  std::ostringstream os;
  os << "{\"family\":\"" << family_name(rep.point.params) << "\"";
  if (!cells.alpha.empty()) os << ",\"alpha\":\"" << cells.alpha << "\"";
  if (!cells.beta.empty()) os << ",\"beta\":\"" << cells.beta << "\"";
  if (!cells.gamma.empty()) os << ",\"gamma\":\"" << cells.gamma << "\"";
  if (!cells.alpha1.empty()) os << ",\"alpha1\":\"" << cells.alpha1 << "\"";
  if (!cells.beta1.empty()) os << ",\"beta1\":\"" << cells.beta1 << "\"";
  if (!cells.alpha2.empty()) os << ",\"alpha2\":\"" << cells.alpha2 << "\"";
  if (!cells.beta2.empty()) os << ",\"beta2\":\"" << cells.beta2 << "\"";
  if (rep.point.target)
    os << ",\"target\":\"" << to_string(*rep.point.target) << "\"";
  os << ",\"z\":\"" << format_complex(rep.point.z) << "\"";
  os << ",\"method_a\":\"" << to_string(rep.method_a) << "\"";
  os << ",\"method_b\":\"" << to_string(rep.method_b) << "\"";
  os << ",\"value_a_re\":" << fmt_g17(rep.value_a.real());
  os << ",\"value_a_im\":" << fmt_g17(rep.value_a.imag());
  os << ",\"value_b_re\":" << fmt_g17(rep.value_b.real());
  os << ",\"value_b_im\":" << fmt_g17(rep.value_b.imag());
  os << ",\"abs_diff\":" << fmt_g17(rep.abs_diff);
  os << ",\"budget\":" << fmt_g17(rep.budget);
  os << ",\"pass\":" << (rep.pass ? "true" : "false");
  os << ",\"error\":\"" << rep.error << "\"}";
  return os.str();
}

OutputRecord make_record(const PointSpec& point, const Evaluation& ev) {
  OutputRecord rec;
  rec.params = point.params;
  rec.target = point.target;
  rec.z = point.z;
  rec.value = ev.value;
  rec.abs_err_est = ev.abs_err_est;
  rec.terms_or_nodes = ev.terms_used;
  rec.method = ev.method;
  rec.converged = ev.converged;
  return rec;
}

void emit_records(std::ostream& out, OutputFormat format,
                  const std::vector<OutputRecord>& records) {
  if (format == OutputFormat::csv) out << record_csv_header() << "\n";
  for (const OutputRecord& rec : records)
    out << (format == OutputFormat::csv ? record_to_csv(rec)
                                        : record_to_jsonl(rec))
        << "\n";
}

}  // namespace

std::string record_csv_header() {
  return "family,alpha,beta,gamma,alpha1,beta1,alpha2,beta2,target,z,"
         "value_re,value_im,abs_err_est,terms_or_nodes,method,converged";
}

std::string record_to_csv(const OutputRecord& rec) {
  const ParamCells cells = param_cells(rec.params);
  std::string s;
  s += family_name(rec.params);
  s += "," + cells.alpha + "," + cells.beta + "," + cells.gamma + "," +
       cells.alpha1 + "," + cells.beta1 + "," + cells.alpha2 + "," +
       cells.beta2;
  s += ",";
  if (rec.target) s += to_string(*rec.target);
  s += "," + format_complex(rec.z);
  s += "," + fmt_g17(rec.value.real()) + "," + fmt_g17(rec.value.imag());
  s += "," + fmt_g17(rec.abs_err_est);
  s += "," + std::to_string(rec.terms_or_nodes);
  s += std::string(",") + to_string(rec.method);
  s += rec.converged ? ",true" : ",false";
  return s;
}

OutputRecord record_from_csv(const std::string& line) {
  const std::vector<std::string> f = split(line, ',');
  if (f.size() != 16) throw DomainError("record: expected 16 CSV fields");
  OutputRecord rec;
  const std::string& family = f[0];
  if (family == "ml2")
    rec.params = Ml2{parse_complex(f[1]), parse_complex(f[2])};
  else if (family == "ml3")
    rec.params = Ml3{parse_complex(f[1]), parse_complex(f[2]), parse_complex(f[3])};
  else if (family == "ml4")
    rec.params = Ml4{parse_complex(f[4]), parse_complex(f[5]),
                     parse_complex(f[6]), parse_complex(f[7])};
  else if (family == "wright")
    rec.params = Wright{parse_complex(f[1]), parse_complex(f[2])};
  else if (family == "leroy")
    rec.params = LeRoy{parse_complex(f[1]), parse_complex(f[2]),
                       parse_complex(f[3]).real()};
  else
    throw DomainError("record: unknown family '" + family + "'");
  if (!f[8].empty()) rec.target = target_from_string(f[8]);
  rec.z = parse_complex(f[9]);
  rec.value = cplx(parse_complex(f[10]).real(), parse_complex(f[11]).real());
  rec.abs_err_est = parse_complex(f[12]).real();
  rec.terms_or_nodes = std::strtol(f[13].c_str(), nullptr, 10);
  if (f[14] == "series") rec.method = Method::series;
  else if (f[14] == "mellin-barnes") rec.method = Method::mellin_barnes;
  else if (f[14] == "finite-difference") rec.method = Method::finite_difference;
  else throw DomainError("record: unknown method");
  rec.converged = f[15] == "true";
  return rec;
}

std::string record_to_jsonl(const OutputRecord& rec) {
  const ParamCells cells = param_cells(rec.params);
  std::ostringstream os;
  os << "{\"family\":\"" << family_name(rec.params) << "\"";
  if (!cells.alpha.empty()) os << ",\"alpha\":\"" << cells.alpha << "\"";
  if (!cells.beta.empty()) os << ",\"beta\":\"" << cells.beta << "\"";
  if (!cells.gamma.empty()) os << ",\"gamma\":\"" << cells.gamma << "\"";
  if (!cells.alpha1.empty()) os << ",\"alpha1\":\"" << cells.alpha1 << "\"";
  if (!cells.beta1.empty()) os << ",\"beta1\":\"" << cells.beta1 << "\"";
  if (!cells.alpha2.empty()) os << ",\"alpha2\":\"" << cells.alpha2 << "\"";
  if (!cells.beta2.empty()) os << ",\"beta2\":\"" << cells.beta2 << "\"";
  if (rec.target) os << ",\"target\":\"" << to_string(*rec.target) << "\"";
  os << ",\"z\":\"" << format_complex(rec.z) << "\"";
  os << ",\"value_re\":" << fmt_g17(rec.value.real());
  os << ",\"value_im\":" << fmt_g17(rec.value.imag());
  os << ",\"abs_err_est\":" << fmt_g17(rec.abs_err_est);
  os << ",\"terms_or_nodes\":" << rec.terms_or_nodes;
  os << ",\"method\":\"" << to_string(rec.method) << "\"";
  os << ",\"converged\":" << (rec.converged ? "true" : "false") << "}";
  return os.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"mlpd: Mittag-Leffler-type functions and their parameter "
               "derivatives, with series and Mellin-Barnes pathways"};
  app.require_subcommand(1);
  // config file (key=value) provides defaults; flags override it
  const char* env_config = std::getenv("MLPD_CONFIG");
  app.set_config("--config", env_config ? env_config : "",
                 "key=value config file (also via MLPD_CONFIG)");

  FamilyArgs fa;
  PolicyArgs pa;
  ContourArgs ca;
  std::string z_text, method_text = "series", format_text = "csv";
  std::string target_text, methods_text = "series,mb", z_grid_text;
  std::string suite_text = "default";
  double check_fd = 0.0, fd_h = 1e-5;
  unsigned long long seed = 42;

  // shared numeric options live on the top-level app so config keys apply
  // to every subcommand; fallthrough lets them appear after the subcommand
  add_policy_options(&app, pa);
  add_contour_options(&app, ca);
  app.add_option("--format", format_text, "csv|json-lines");

  CLI::App* eval = app.add_subcommand("eval", "evaluate a function value");
  eval->fallthrough();
  add_family_options(eval, fa);
  eval->add_option("--z", z_text, "complex argument")->required();
  eval->add_option("--method", method_text, "series|mb");

  CLI::App* deriv = app.add_subcommand("deriv", "evaluate dF/d(parameter)");
  deriv->fallthrough();
  add_family_options(deriv, fa);
  deriv->add_option("--z", z_text, "complex argument")->required();
  deriv->add_option("--target", target_text,
                    "alpha|beta|gamma|alpha1|beta1|alpha2|beta2")
      ->required();
  deriv->add_option("--method", method_text, "series|mb");
  deriv->add_option("--check-fd", check_fd,
                    "append a finite-difference comparison with this step");

  CLI::App* compare = app.add_subcommand("compare", "compare two pathways");
  compare->fallthrough();
  add_family_options(compare, fa);
  compare->add_option("--z", z_text, "complex argument");
  compare->add_option("--z-grid", z_grid_text, "re0:re1:n,im0:im1:m");
  compare->add_option("--target", target_text, "derivative target (optional)");
  compare->add_option("--methods", methods_text, "pair, e.g. series,mb");
  compare->add_option("--fd-h", fd_h, "step for the fd method");

  CLI::App* audit = app.add_subcommand("audit", "run the audit suite");
  audit->fallthrough();
  audit->add_option("--suite", suite_text,
                    "'default' or comma-separated audit names");
  audit->add_option("--seed", seed, "seed for randomized grids");

  CLI::App* table = app.add_subcommand("table", "tabulate over a z grid");
  table->fallthrough();
  add_family_options(table, fa);
  table->add_option("--z-grid", z_grid_text, "re0:re1:n,im0:im1:m")->required();
  table->add_option("--target", target_text, "derivative target (optional)");
  table->add_option("--method", method_text, "series|mb");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    const OutputFormat format = parse_format(format_text);

    if (audit->parsed()) {
      AuditConfig config;
      config.seed = seed;
      if (suite_text == "default")
        config.audits = default_audit_names();
      else if (!suite_text.empty())
        for (const std::string& name : split(suite_text, ','))
          config.audits.push_back(name);
      const AuditBundle bundle = run_full_audit(config);
      write_bundle(out, bundle);
      return bundle.pass ? 0 : 3;
    }

    const ParameterSet params = build_params(fa);
    validate(params);
    const TruncationPolicy policy = build_policy(pa);
    const ContourSpec contour = build_contour(ca);

    std::optional<ParamTarget> target;
    if (!target_text.empty()) {
      target = target_from_string(target_text);
      if (!target)
        throw DomainError("unknown --target '" + target_text + "'");
    }

    if (compare->parsed()) {
      const std::vector<std::string> pair = split(methods_text, ',');
      if (pair.size() != 2)
        throw DomainError("--methods expects exactly two entries");
      std::vector<cplx> zs;
      if (!z_grid_text.empty())
        zs = parse_z_grid(z_grid_text);
      else if (!z_text.empty())
        zs.push_back(parse_complex(z_text));
      else
        throw DomainError("compare needs --z or --z-grid");
      std::vector<EvalRequest> requests;
      for (const cplx& z : zs) {
        EvalRequest req;
        req.point = PointSpec{params, target, z};
        req.method_a = parse_method(pair[0]);
        req.method_b = parse_method(pair[1]);
        req.policy = policy;
        req.contour = contour;
        req.fd_h = fd_h;
        requests.push_back(req);
      }
      const std::vector<ComparisonReport> reports = compare_methods(requests);
      bool all_pass = true;
      if (format == OutputFormat::csv) out << comparison_csv_header() << "\n";
      for (const ComparisonReport& rep : reports) {
        out << (format == OutputFormat::csv ? comparison_to_csv(rep)
                                            : comparison_to_jsonl(rep))
            << "\n";
        all_pass = all_pass && rep.pass;
      }
      return all_pass ? 0 : 3;
    }

    if (eval->parsed() || deriv->parsed()) {
      if (deriv->parsed() && !target)
        throw DomainError("deriv requires --target");
      if (eval->parsed()) target.reset();
      const PointSpec point{params, target, parse_complex(z_text)};
      const Evaluation ev = evaluate_by_method(point, parse_method(method_text),
                                               policy, contour, fd_h);
      std::vector<OutputRecord> records{make_record(point, ev)};
      bool all_converged = ev.converged;
      emit_records(out, format, records);
      if (deriv->parsed() && check_fd > 0.0) {
        const Evaluation fd = evaluate_by_method(
            point, Method::finite_difference, policy, contour, check_fd);
        ComparisonReport rep;
        rep.point = point;
        rep.method_a = ev.method;
        rep.method_b = Method::finite_difference;
        rep.value_a = ev.value;
        rep.value_b = fd.value;
        rep.abs_diff = std::abs(ev.value - fd.value);
        rep.budget = 1e-8 + 10.0 * (ev.abs_err_est + fd.abs_err_est);
        rep.pass = rep.abs_diff <= rep.budget;
        if (format == OutputFormat::csv) out << comparison_csv_header() << "\n";
        out << (format == OutputFormat::csv ? comparison_to_csv(rep)
                                            : comparison_to_jsonl(rep))
            << "\n";
        all_converged = all_converged && fd.converged;
      }
      return all_converged ? 0 : 2;
    }

    if (table->parsed()) {
      const std::vector<cplx> zs = parse_z_grid(z_grid_text);
      std::vector<OutputRecord> records;
      bool all_converged = true;
      for (const cplx& z : zs) {
        const PointSpec point{params, target, z};
        const Evaluation ev = evaluate_by_method(
            point, parse_method(method_text), policy, contour, fd_h);
        records.push_back(make_record(point, ev));
        all_converged = all_converged && ev.converged;
      }
      emit_records(out, format, records);
      return all_converged ? 0 : 2;
    }

    err << "error: no subcommand\n";
    return 1;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace mlpd
