#pragma once

// Parameter sweeps over circuit-file placeholders, producing CSV tables.
//
// Column names (indices are storage-basis eigenstate numbers, j is a 0-based gate index):
//   re_q_I_F  im_q_I_F          full KDQ entry
//   re_qpop_I_F                 population part
//   re_qcoh_I_F  im_qcoh_I_F    coherent part
//   work  work_pop  work_coh
//   w_I_F                       two-qubit work component (I < F)
//   norm_pos_up  norm_neg_up  norm_pos_down  norm_neg_down
//   re_constituent_J_I_F  re_gap_J_I_F  re_correction_I_F  im_correction_I_F

#include <map>
#include <string>
#include <vector>

namespace kdwork {

struct SweepAxis {
  std::string name; // placeholder name without '$'
  std::vector<double> values;

  /// count >= 2 evenly spaced points with start < stop, both ends included.
  static SweepAxis linspace(std::string name, double start, double stop, std::size_t count);
};

struct SweepSpec {
  std::vector<SweepAxis> axes; // first axis varies slowest
  std::vector<std::string> columns;
  std::map<std::string, double> fixed;
};

struct SweepResult {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::size_t column(const std::string &name) const;
};

/// Throws InvalidArgument for unknown columns or axes that the template does
/// not reference, ParseError/ValidationError from the circuit files.
SweepResult run_sweep(const std::string &circuit_template, const SweepSpec &spec);
void validate_columns(const std::vector<std::string> &columns);
/// Comma separated, 17 significant digits, header first.
std::string to_csv(const SweepResult &result);

} // namespace kdwork
