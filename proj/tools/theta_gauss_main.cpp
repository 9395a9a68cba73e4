// Command-line surface: single-point evaluation, Gaussian-approximation
// certification, and grid tables, emitting plain text, CSV, or JSON for
// scripts and CI. Exit codes: 0 success/pass, 1 domain or certification
// failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "theta_gauss/gauss_approx.hpp"
#include "theta_gauss/modular.hpp"
#include "theta_gauss/sweep.hpp"
#include "theta_gauss/theta.hpp"

using namespace theta_gauss;
using nlohmann::json;

namespace {

// 17 significant digits: enough for any double to re-parse to the same bits.
std::string fmt(double d) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

// JSON cannot carry inf; emit null for non-finite doubles (log of an exact
// zero) so consumers see an explicit absence rather than a broken token.
json json_num(double d) {
  if (!std::isfinite(d)) return nullptr;
  return d;
}

const char kTableHeader[] = "kind,v,t,sign,log_mag,value,method,terms,tail_bound_log";

void csv_row(std::ostream& os, int kind, double v, double t, const EvalReport& rep) {
  ScaledReal::ToPlain p = rep.value.to_plain_checked();
  os << kind << ',' << fmt(v) << ',' << fmt(t) << ',' << rep.value.sign() << ','
     << fmt(rep.value.log_mag()) << ',';
  if (!p.underflow && !p.overflow) os << fmt(p.value);
  os << ',' << method_name(rep.method) << ',' << rep.terms_used << ','
     << fmt(rep.tail_bound.log_mag()) << '\n';
}

json json_row(int kind, double v, double t, const EvalReport& rep) {
  ScaledReal::ToPlain p = rep.value.to_plain_checked();
  json row;
  row["kind"] = kind;
  row["v"] = v;
  row["t"] = t;
  row["sign"] = rep.value.sign();
  row["log_mag"] = json_num(rep.value.log_mag());
  if (p.underflow || p.overflow) {
    row["value"] = nullptr;
  } else {
    row["value"] = p.value;
  }
  row["method"] = method_name(rep.method);
  row["terms"] = rep.terms_used;
  row["tail_bound_log"] = json_num(rep.tail_bound.log_mag());
  return row;
}

void plain_row(std::ostream& os, int kind, double v, double t, const EvalReport& rep) {
  ScaledReal::ToPlain p = rep.value.to_plain_checked();
  os << "kind " << kind << "\nv " << fmt(v) << "\nt " << fmt(t) << "\nmethod "
     << method_name(rep.method) << "\nsign " << rep.value.sign() << "\nlog_mag "
     << fmt(rep.value.log_mag()) << "\nvalue " << fmt(p.value);
  if (p.underflow) os << " (underflow; log_mag is exact)";
  if (p.overflow) os << " (overflow; log_mag is exact)";
  os << "\nterms " << rep.terms_used << "\ntail_bound_log "
     << fmt(rep.tail_bound.log_mag()) << '\n';
}

// "a,b,c" or geometric "start:stop:count". Malformed text is a usage error
// (exit 2); values outside the operation domains surface later as exit 1.
std::vector<double> parse_t_list(const std::string& spec) {
  auto number = [](const std::string& s) {
    const char* c = s.c_str();
    char* end = nullptr;
    double d = std::strtod(c, &end);
    if (end != c + s.size() || s.empty()) {
      throw CLI::ValidationError("--t", "unparseable number '" + s + "'");
    }
    return d;
  };
  std::vector<std::string> parts;
  std::string cur;
  const char sep = spec.find(':') != std::string::npos ? ':' : ',';
  for (char c : spec) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);

  std::vector<double> out;
  if (sep == ':') {
    if (parts.size() != 3) {
      throw CLI::ValidationError("--t", "range form is start:stop:count");
    }
    double start = number(parts[0]);
    double stop = number(parts[1]);
    double count_d = number(parts[2]);
    auto count = static_cast<std::int64_t>(count_d);
    if (count_d != static_cast<double>(count) || count < 1) {
      throw CLI::ValidationError("--t", "count must be a positive integer");
    }
    if (!(start > 0.0) || !(stop > 0.0)) {
      throw CLI::ValidationError("--t", "geometric range needs positive endpoints");
    }
    for (std::int64_t i = 0; i < count; ++i) {
      double frac = count == 1 ? 0.0
                               : static_cast<double>(i) / static_cast<double>(count - 1);
      out.push_back(std::exp(std::log(start) + (std::log(stop) - std::log(start)) * frac));
    }
  } else {
    for (const std::string& p : parts) out.push_back(number(p));
  }
  if (out.empty()) throw CLI::ValidationError("--t", "empty list");
  return out;
}

// "lo:hi" for table axes.
std::pair<double, double> parse_range(const std::string& flag, const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos || spec.find(':', colon + 1) != std::string::npos) {
    throw CLI::ValidationError(flag, "range form is lo:hi");
  }
  const std::string lo_s = spec.substr(0, colon);
  const std::string hi_s = spec.substr(colon + 1);
  char* end = nullptr;
  double lo = std::strtod(lo_s.c_str(), &end);
  if (lo_s.empty() || end != lo_s.c_str() + lo_s.size()) {
    throw CLI::ValidationError(flag, "unparseable number '" + lo_s + "'");
  }
  double hi = std::strtod(hi_s.c_str(), &end);
  if (hi_s.empty() || end != hi_s.c_str() + hi_s.size()) {
    throw CLI::ValidationError(flag, "unparseable number '" + hi_s + "'");
  }
  return {lo, hi};
}

// stdout unless --out names a file.
class OutSink {
 public:
  explicit OutSink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
    named_ = true;
  }
  std::ostream& stream() { return named_ ? file_ : std::cout; }

 private:
  std::ofstream file_;
  bool named_ = false;
};

int cmd_eval(int kind_i, double v, double t, double tol, const std::string& method,
             const std::string& format) {
  ThetaKind kind = static_cast<ThetaKind>(kind_i);
  EvalReport rep;
  if (method == "auto") {
    rep = theta_auto(kind, v, t, tol);
  } else if (method == "series") {
    rep = theta_series(kind, v, t, tol);
  } else if (method == "product") {
    rep = theta_product(kind, v, t, tol);
  } else {
    rep = theta_transformed(kind, v, t, tol);
  }
  if (format == "json") {
    std::cout << json_row(kind_i, v, t, rep).dump() << '\n';
  } else if (format == "csv") {
    std::cout << kTableHeader << '\n';
    csv_row(std::cout, kind_i, v, t, rep);
  } else {
    plain_row(std::cout, kind_i, v, t, rep);
  }
  return 0;
}

int cmd_certify(int kind_i, double C, double eps, const std::string& t_spec,
                std::int64_t x_count, double a, const std::string& format) {
  std::vector<double> ts = parse_t_list(t_spec);
  std::sort(ts.begin(), ts.end());
  if (!(a > 0.0)) throw std::domain_error("certify: a must be positive");
  for (double t : ts) {
    if (!(t < a)) {
      char msg[128];
      std::snprintf(msg, sizeof msg, "t=%.6g >= a=%.6g", t, a);
      throw std::domain_error(msg);
    }
  }

  CertificationReport rep = certify(static_cast<ThetaKind>(kind_i), C, eps, ts, x_count);
  const std::size_t n = rep.t_values.size();

  if (format == "json") {
    json doc;
    doc["kind"] = kind_i;
    doc["C"] = C;
    doc["eps"] = eps;
    doc["a"] = a;
    doc["x_count"] = x_count;
    doc["rows"] = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      double sup = rep.sup_measured[i].log_mag();
      double bound = rep.bounds[i].log_mag();
      json row;
      row["t"] = rep.t_values[i];
      row["sup_log"] = json_num(sup);
      row["bound_log"] = json_num(bound);
      row["margin"] = json_num(bound - sup);
      row["pass"] = sup <= bound;
      doc["rows"].push_back(row);
    }
    doc["decay_slope"] = rep.decay_slope;
    doc["all_pass"] = rep.all_pass;
    std::cout << doc.dump() << '\n';
  } else if (format == "csv") {
    std::cout << "# kind=" << kind_i << " C=" << fmt(C) << " eps=" << fmt(eps)
              << " a=" << fmt(a) << " x_count=" << x_count << '\n';
    std::cout << "t,sup_log,bound_log,margin,pass\n";
    for (std::size_t i = 0; i < n; ++i) {
      double sup = rep.sup_measured[i].log_mag();
      double bound = rep.bounds[i].log_mag();
      std::cout << fmt(rep.t_values[i]) << ',' << fmt(sup) << ',' << fmt(bound) << ','
                << fmt(bound - sup) << ',' << (sup <= bound ? 1 : 0) << '\n';
    }
    std::cout << "# decay_slope=" << fmt(rep.decay_slope) << '\n';
  } else {
    std::cout << "kind " << kind_i << "  C " << fmt(C) << "  eps " << fmt(eps) << "  a "
              << fmt(a) << "  x_count " << x_count << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      double sup = rep.sup_measured[i].log_mag();
      double bound = rep.bounds[i].log_mag();
      std::cout << "t " << fmt(rep.t_values[i]) << "  sup_log " << fmt(sup)
                << "  bound_log " << fmt(bound) << "  margin " << fmt(bound - sup)
                << "  pass " << (sup <= bound ? 1 : 0) << '\n';
    }
    std::cout << "decay_slope " << fmt(rep.decay_slope) << '\n';
    std::cout << "all_pass " << (rep.all_pass ? 1 : 0) << '\n';
  }
  return rep.all_pass ? 0 : 1;
}

int cmd_table(int kind_i, const std::string& v_spec, const std::string& t_spec,
              std::int64_t steps, double tol, const std::string& format,
              const std::string& out_path) {
  auto [v_lo, v_hi] = parse_range("--v", v_spec);
  auto [t_lo, t_hi] = parse_range("--t", t_spec);
  std::vector<TableRow> rows =
      table_grid(static_cast<ThetaKind>(kind_i), v_lo, v_hi, t_lo, t_hi, steps, tol);

  OutSink sink(out_path);
  std::ostream& os = sink.stream();
  if (format == "json") {
    json doc = json::array();
    for (const TableRow& row : rows) {
      doc.push_back(json_row(static_cast<int>(row.kind), row.v, row.t, row.report));
    }
    os << doc.dump() << '\n';
  } else if (format == "csv") {
    os << kTableHeader << '\n';
    for (const TableRow& row : rows) {
      csv_row(os, static_cast<int>(row.kind), row.v, row.t, row.report);
    }
  } else {
    for (const TableRow& row : rows) {
      plain_row(os, static_cast<int>(row.kind), row.v, row.t, row.report);
      os << '\n';
    }
  }
  os.flush();
  if (!os) throw std::runtime_error("write failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobi theta evaluation, Gaussian-approximation certification, and sweeps"};
  app.require_subcommand(1);

  int kind = 0;
  double v = 0.0, t = 0.0, tol = 1e-12, C = 0.0, eps = 0.0, a = 1.0;
  std::int64_t x_count = 101, steps = 11;
  std::string method = "auto", format, t_spec, v_spec, out_path;

  CLI::App* eval = app.add_subcommand("eval", "evaluate one theta value");
  eval->add_option("--kind", kind, "theta kind 1..4")->required()->check(CLI::Range(1, 4));
  eval->add_option("--v", v, "argument")->required();
  eval->add_option("--t", t, "lattice parameter, tau = i t")->required();
  eval->add_option("--tol", tol, "relative tolerance (default 1e-12)");
  eval->add_option("--method", method, "auto|series|product|transformed")
      ->check(CLI::IsMember({"auto", "series", "product", "transformed"}));
  eval->add_option("--format", format, "json|csv|plain (default plain)")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  CLI::App* certify = app.add_subcommand("certify", "certify sup-remainder bounds");
  certify->add_option("--kind", kind, "theta kind 1..4")->required()->check(CLI::Range(1, 4));
  certify->add_option("--C", C, "x sweeps [-C, C]")->required();
  certify->add_option("--eps", eps, "bound parameter in (0, 1)")->required();
  certify->add_option("--t", t_spec, "comma list or geometric start:stop:count")->required();
  certify->add_option("--x-count", x_count, "grid points per t (default 101)");
  certify->add_option("--a", a, "expansion parameter, requires t < a (default 1)");
  certify->add_option("--format", format, "json|csv|plain (default plain)")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  CLI::App* table = app.add_subcommand("table", "evaluation table over a (v, t) grid");
  table->add_option("--kind", kind, "theta kind 1..4")->required()->check(CLI::Range(1, 4));
  table->add_option("--v", v_spec, "v range lo:hi")->required();
  table->add_option("--t", t_spec, "t range lo:hi")->required();
  table->add_option("--steps", steps, "points per axis (default 11)");
  table->add_option("--tol", tol, "relative tolerance (default 1e-12)");
  table->add_option("--format", format, "json|csv|plain (default csv)")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  table->add_option("--out", out_path, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) {
      return cmd_eval(kind, v, t, tol, method, format.empty() ? "plain" : format);
    }
    if (certify->parsed()) {
      return cmd_certify(kind, C, eps, t_spec, x_count, a,
                         format.empty() ? "plain" : format);
    }
    return cmd_table(kind, v_spec, t_spec, steps, tol, format.empty() ? "csv" : format,
                     out_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
