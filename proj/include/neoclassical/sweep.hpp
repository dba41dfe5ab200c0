#ifndef NEOCLASSICAL_SWEEP_HPP
#define NEOCLASSICAL_SWEEP_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace neoclassical {

enum class SweepMode {
  neo3,
  neo3A,
  osler,
  taylor_t1,
  taylor_t2,
  taylor_t3,
  taylor_t1A,
  taylor_t2A,
  taylor_t3A,
  inequality,
  r_scan
};

/// Throws PreconditionError on an unknown name.
SweepMode parse_mode(const std::string& name);
const char* to_string(SweepMode mode);

/// Boundary function used by the taylor modes: (1+z)^n or exp(z).
enum class TaylorFunction { binomial, exponential };

TaylorFunction parse_function(const std::string& name);

struct SweepGrid {
  std::vector<double> alpha_values;
  std::vector<int> n_values;
  std::vector<double> lambda_values;
  double gamma = 0.0;
  double tol = 1e-8;
  SweepMode mode = SweepMode::neo3;
  TaylorFunction function = TaylorFunction::binomial;

  /// Throws PreconditionError on empty lists or values outside the mode's
  /// preconditions.
  void validate() const;
};

/// One grid point. Complex sides are reported by their real part; abs_err
/// and rel_err use the full complex difference.
///
/// Mode notes: osler ignores lambda. inequality compares at x = lambda, y = 1
/// and passes when the ordering is the one the inequality theorem predicts;
/// residual_R holds the signed margin. r_scan compares |R(n)| (lhs) against
/// |R(n-1)| (rhs), with |1 - alpha| standing in for n = 1.
struct SweepRow {
  double alpha = 0.0;
  int n = 0;
  double lambda = 0.0;
  double gamma = 0.0;
  SweepMode mode = SweepMode::neo3;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual_R = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool passed = false;
  std::string status;
  std::map<std::string, double> pieces;
};

/// Computation errors end up in status as "error:<message>".
SweepRow evaluate_point(SweepMode mode, double alpha, int n, double lambda, double gamma,
                        double tol, TaylorFunction function = TaylorFunction::binomial);

/// Rows in alpha-outer, n-middle, lambda-inner order, whatever the thread count.
std::vector<SweepRow> evaluate_grid(const SweepGrid& grid, unsigned threads = 1);

std::string csv_header();
/// Floats with 17 significant digits.
std::string csv_row(const SweepRow& row);

struct SweepSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double worst_rel_err = 0.0;
};

SweepSummary summarize(const std::vector<SweepRow>& rows);

/// Writes the CSV to output_path ("-" for stdout). Throws std::runtime_error
/// when the file cannot be written.
SweepSummary run_sweep(const SweepGrid& grid, const std::string& output_path,
                       unsigned threads = 1);

/// "0.1,0.5" or "0.1:1.9:0.1" (inclusive, values rounded to 1e-12), mixed
/// freely with commas.
std::vector<double> parse_real_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

}  // namespace neoclassical

#endif  // NEOCLASSICAL_SWEEP_HPP
