#include "neoclassical/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "neoclassical/boundary_functions.hpp"
#include "neoclassical/errors.hpp"
#include "neoclassical/identities.hpp"

namespace neoclassical {

namespace {

constexpr std::array<std::pair<SweepMode, const char*>, 11> kModeNames = {{
    {SweepMode::neo3, "neo3"},
    {SweepMode::neo3A, "neo3A"},
    {SweepMode::osler, "osler"},
    {SweepMode::taylor_t1, "taylor_t1"},
    {SweepMode::taylor_t2, "taylor_t2"},
    {SweepMode::taylor_t3, "taylor_t3"},
    {SweepMode::taylor_t1A, "taylor_t1A"},
    {SweepMode::taylor_t2A, "taylor_t2A"},
    {SweepMode::taylor_t3A, "taylor_t3A"},
    {SweepMode::inequality, "inequality"},
    {SweepMode::r_scan, "r_scan"},
}};

bool takes_gamma(SweepMode m) {
  return m == SweepMode::taylor_t1A || m == SweepMode::taylor_t2A || m == SweepMode::taylor_t3A;
}

TaylorIdentity taylor_identity(SweepMode m) {
  switch (m) {
    case SweepMode::taylor_t1: return TaylorIdentity::t1;
    case SweepMode::taylor_t2: return TaylorIdentity::t2;
    case SweepMode::taylor_t3: return TaylorIdentity::t3;
    case SweepMode::taylor_t1A: return TaylorIdentity::t1A;
    case SweepMode::taylor_t2A: return TaylorIdentity::t2A;
    default: return TaylorIdentity::t3A;
  }
}

std::string sanitize(std::string text) {
  for (char& c : text) {
    if (c == ',' || c == '\n' || c == '\r' || c == '"') c = ';';
  }
  return text;
}

void fill(SweepRow& row, const IdentityReport& r) {
  row.lhs = r.lhs.real();
  row.rhs = r.rhs.real();
  row.abs_err = r.abs_err;
  row.rel_err = r.rel_err;
  row.passed = r.passed;
  row.pieces = r.pieces;
}

Ordering predicted_ordering(double alpha) {
  if (alpha < 1.0) return Ordering::strict_less;
  if (alpha == 1.0) return Ordering::equal;
  return Ordering::strict_greater;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double round_grid(double x) { return std::round(x * 1e12) / 1e12; }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw PreconditionError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw PreconditionError("not a number: '" + s + "'");
  return v;
}

}  // namespace

SweepMode parse_mode(const std::string& name) {
  for (const auto& [mode, label] : kModeNames) {
    if (name == label) return mode;
  }
  throw PreconditionError("unknown mode '" + name + "'");
}

const char* to_string(SweepMode mode) {
  for (const auto& [m, label] : kModeNames) {
    if (m == mode) return label;
  }
  return "?";
}

TaylorFunction parse_function(const std::string& name) {
  if (name == "binomial") return TaylorFunction::binomial;
  if (name == "exp") return TaylorFunction::exponential;
  throw PreconditionError("unknown function '" + name + "' (binomial or exp)");
}

void SweepGrid::validate() const {
  if (alpha_values.empty() || n_values.empty() || lambda_values.empty()) {
    throw PreconditionError("alpha, n and lambda lists must be non-empty");
  }
  if (!(tol > 0.0) || !std::isfinite(tol)) throw PreconditionError("tol must be positive");
  if (!std::isfinite(gamma)) throw PreconditionError("gamma must be finite");
  if (!takes_gamma(mode) && gamma != 0.0) {
    throw PreconditionError(std::string("mode ") + to_string(mode) + " takes no gamma");
  }
  const bool below_two = mode == SweepMode::neo3 || mode == SweepMode::inequality ||
                         mode == SweepMode::r_scan || mode == SweepMode::taylor_t1 ||
                         mode == SweepMode::taylor_t2 || mode == SweepMode::taylor_t3;
  for (double a : alpha_values) {
    if (!(a > 0.0) || !std::isfinite(a)) throw PreconditionError("alpha must be positive");
    if (below_two && !(a < 2.0)) {
      throw PreconditionError(std::string("mode ") + to_string(mode) + " needs alpha < 2");
    }
    if (mode == SweepMode::r_scan && a == 1.0) {
      throw PreconditionError("r_scan needs alpha != 1");
    }
    if (takes_gamma(mode) && !(gamma < a)) throw PreconditionError("gamma must be below alpha");
  }
  for (int n : n_values) {
    if (n < 1) throw PreconditionError("n must be a positive integer");
  }
  for (double l : lambda_values) {
    if (!(l > 0.0 && l <= 1.0)) throw PreconditionError("lambda must lie in (0, 1]");
  }
}

SweepRow evaluate_point(SweepMode mode, double alpha, int n, double lambda, double gamma,
                        double tol, TaylorFunction function) {
  SweepRow row;
  row.alpha = alpha;
  row.n = n;
  row.lambda = lambda;
  row.gamma = gamma;
  row.mode = mode;
  row.tol = tol;
  try {
    switch (mode) {
      case SweepMode::neo3:
      case SweepMode::neo3A: {
        const NeoParams p{alpha, n, lambda, 0.0};
        const IdentityReport r = mode == SweepMode::neo3 ? verify_neo3(p, tol) : verify_neo3A(p, tol);
        fill(row, r);
        row.residual_R = r.pieces.at("residual_R");
        break;
      }
      case SweepMode::osler: {
        row.lambda = 1.0;
        fill(row, verify_osler(alpha, n, tol));
        break;
      }
      case SweepMode::inequality: {
        const InequalityCheck c = check_inequality(alpha, n, lambda, 1.0);
        row.lhs = c.lhs;
        row.rhs = c.rhs;
        row.residual_R = c.margin;
        row.abs_err = std::abs(c.margin);
        row.rel_err = row.abs_err / std::max(1.0, std::abs(c.rhs));
        row.tol = kEqualityRelTol;
        row.passed = c.ordering == predicted_ordering(alpha);
        row.status = row.passed ? to_string(c.ordering)
                                : std::string("failed:") + to_string(c.ordering);
        break;
      }
      case SweepMode::r_scan: {
        const double current = residual_R({alpha, n, lambda, 0.0});
        const double previous =
            n == 1 ? std::abs(1.0 - alpha) : std::abs(residual_R({alpha, n - 1, lambda, 0.0}));
        row.lhs = std::abs(current);
        row.rhs = previous;
        row.residual_R = current;
        row.abs_err = std::abs(row.lhs - row.rhs);
        row.rel_err = row.abs_err / std::max(1.0, row.rhs);
        row.passed = row.lhs < row.rhs;
        break;
      }
      default: {
        const BoundaryFunction f = function == TaylorFunction::binomial
                                       ? BoundaryFunction::binomial(n)
                                       : BoundaryFunction::exponential();
        const IdentityReport r = verify_taylor(taylor_identity(mode), f, alpha, lambda, gamma, tol);
        fill(row, r);
        row.residual_R = r.pieces.at("residual_integral");
        break;
      }
    }
    if (row.status.empty()) row.status = row.passed ? "passed" : "failed";
  } catch (const std::exception& e) {
    row.passed = false;
    row.status = "error:" + sanitize(e.what());
  }
  return row;
}

std::vector<SweepRow> evaluate_grid(const SweepGrid& grid, unsigned threads) {
  grid.validate();
  const std::vector<double> lambdas =
      grid.mode == SweepMode::osler ? std::vector<double>{1.0} : grid.lambda_values;

  struct Point {
    double alpha;
    int n;
    double lambda;
  };
  std::vector<Point> points;
  for (double a : grid.alpha_values) {
    for (int n : grid.n_values) {
      for (double l : lambdas) points.push_back({a, n, l});
    }
  }

  std::vector<SweepRow> rows(points.size());
  const auto work = [&](std::size_t i) {
    const Point& p = points[i];
    rows[i] = evaluate_point(grid.mode, p.alpha, p.n, p.lambda, grid.gamma, grid.tol,
                             grid.function);
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, points.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < points.size(); ++i) work(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < points.size(); i = next++) work(i);
      });
    }
  }
  return rows;
}

std::string csv_header() {
  return "alpha,n,lambda,gamma,mode,lhs,rhs,residual_R,abs_err,rel_err,tol,status";
}

std::string csv_row(const SweepRow& r) {
  std::string out;
  out += format_double(r.alpha) + ',';
  out += std::to_string(r.n) + ',';
  out += format_double(r.lambda) + ',';
  out += format_double(r.gamma) + ',';
  out += std::string(to_string(r.mode)) + ',';
  out += format_double(r.lhs) + ',';
  out += format_double(r.rhs) + ',';
  out += format_double(r.residual_R) + ',';
  out += format_double(r.abs_err) + ',';
  out += format_double(r.rel_err) + ',';
  out += format_double(r.tol) + ',';
  out += r.status;
  return out;
}

SweepSummary summarize(const std::vector<SweepRow>& rows) {
  SweepSummary s;
  s.total = rows.size();
  for (const SweepRow& r : rows) {
    if (r.passed) {
      ++s.passed;
    } else {
      ++s.failed;
    }
    if (std::isfinite(r.rel_err)) s.worst_rel_err = std::max(s.worst_rel_err, r.rel_err);
  }
  return s;
}

SweepSummary run_sweep(const SweepGrid& grid, const std::string& output_path, unsigned threads) {
  const std::vector<SweepRow> rows = evaluate_grid(grid, threads);
  std::ostringstream csv;
  csv << csv_header() << '\n';
  for (const SweepRow& r : rows) csv << csv_row(r) << '\n';

  if (output_path == "-") {
    std::cout << csv.str() << std::flush;
  } else {
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + output_path + "' for writing");
    file << csv.str();
    file.close();
    if (!file) throw std::runtime_error("failed writing '" + output_path + "'");
  }
  return summarize(rows);
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& item : split(text, ',')) {
    if (item.empty()) throw PreconditionError("empty entry in list '" + text + "'");
    const std::vector<std::string> range = split(item, ':');
    if (range.size() == 1) {
      out.push_back(parse_double(item));
      continue;
    }
    if (range.size() != 3) throw PreconditionError("range must be start:stop:step, got '" + item + "'");
    const double start = parse_double(range[0]);
    const double stop = parse_double(range[1]);
    const double step = parse_double(range[2]);
    if (!(step > 0.0) || stop < start) throw PreconditionError("bad range '" + item + "'");
    const auto count = static_cast<long long>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 1000000) throw PreconditionError("range '" + item + "' is too long");
    for (long long i = 0; i < count; ++i) {
      out.push_back(round_grid(start + static_cast<double>(i) * step));
    }
  }
  if (out.empty()) throw PreconditionError("empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_real_list(text)) {
    if (v != std::round(v) || std::abs(v) > 1e9) {
      throw PreconditionError("expected integers in '" + text + "'");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace neoclassical
