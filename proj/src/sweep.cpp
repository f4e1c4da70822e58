#include "kdwork/sweep.hpp"

#include "kdwork/circuit_parser.hpp"
#include "kdwork/decomposition.hpp"
#include "kdwork/error.hpp"
#include "kdwork/thermo.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace kdwork {

namespace {

enum class Quantity {
  ReQ, ImQ, ReQPop, ReQCoh, ImQCoh,
  Work, WorkPop, WorkCoh, Component,
  NormPosUp, NormNegUp, NormPosDown, NormNegDown,
  ReConstituent, ReGap, ReCorrection, ImCorrection,
};

struct Column {
  Quantity q;
  std::size_t j = 0, i = 0, f = 0;
};

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

std::optional<std::size_t> index_of(const std::string &s) {
  if (s.empty() || s.size() > 3 || !std::all_of(s.begin(), s.end(), ::isdigit)) return std::nullopt;
  return std::stoul(s);
}

Column parse_column(const std::string &name) {
  static const std::map<std::string, Quantity> plain{
      {"work", Quantity::Work},           {"work_pop", Quantity::WorkPop},
      {"work_coh", Quantity::WorkCoh},    {"norm_pos_up", Quantity::NormPosUp},
      {"norm_neg_up", Quantity::NormNegUp}, {"norm_pos_down", Quantity::NormPosDown},
      {"norm_neg_down", Quantity::NormNegDown}};
  if (auto it = plain.find(name); it != plain.end()) return {it->second};

  static const std::map<std::string, Quantity> pair_kinds{
      {"re_q", Quantity::ReQ},         {"im_q", Quantity::ImQ},
      {"re_qpop", Quantity::ReQPop},   {"re_qcoh", Quantity::ReQCoh},
      {"im_qcoh", Quantity::ImQCoh},   {"w", Quantity::Component},
      {"re_correction", Quantity::ReCorrection}, {"im_correction", Quantity::ImCorrection}};
  static const std::map<std::string, Quantity> gate_kinds{
      {"re_constituent", Quantity::ReConstituent}, {"re_gap", Quantity::ReGap}};

  const auto parts = split(name, '_');
  auto fail = [&]() -> Column { throw InvalidArgument("unknown column '" + name + "'"); };
  if (parts.size() >= 3) {
    const auto i = index_of(parts[parts.size() - 2]);
    const auto f = index_of(parts[parts.size() - 1]);
    std::string prefix;
    for (std::size_t k = 0; k + 2 < parts.size(); ++k) prefix += (k ? "_" : "") + parts[k];
    if (i && f) {
      if (auto it = pair_kinds.find(prefix); it != pair_kinds.end()) {
        if (it->second == Quantity::Component && !(*i < *f)) fail();
        return {it->second, 0, *i, *f};
      }
    }
    if (parts.size() >= 4) {
      const auto j = index_of(parts[parts.size() - 3]);
      std::string gprefix;
      for (std::size_t k = 0; k + 3 < parts.size(); ++k) gprefix += (k ? "_" : "") + parts[k];
      if (j && i && f) {
        if (auto it = gate_kinds.find(gprefix); it != gate_kinds.end()) {
          return {it->second, *j, *i, *f};
        }
      }
    }
  }
  return fail();
}

bool needs_split(Quantity q) {
  return q == Quantity::ReQPop || q == Quantity::ReQCoh || q == Quantity::ImQCoh ||
         q == Quantity::WorkPop || q == Quantity::WorkCoh;
}

bool needs_decomposition(Quantity q) {
  return q == Quantity::ReConstituent || q == Quantity::ReGap || q == Quantity::ReCorrection ||
         q == Quantity::ImCorrection;
}

std::vector<double> evaluate_point(const CircuitFile &file, const std::vector<Column> &cols,
                                   const std::vector<std::string> &names) {
  const Hamiltonian h = file.hamiltonian();
  const DensityMatrix rho = file.initial_state();
  const CMatrix u = circuit_unitary(file.circuit);
  const KdqTable t = kdq_table(u, rho, h);
  const bool want_split = std::any_of(cols.begin(), cols.end(), [](const Column &c) { return needs_split(c.q); });
  const bool want_dec =
      std::any_of(cols.begin(), cols.end(), [](const Column &c) { return needs_decomposition(c.q); });
  std::optional<KdqSplit> split;
  if (want_split) split = kdq_split(u, rho, h);
  std::optional<DecompositionReport> dec;
  if (want_dec) dec = decomposition_identity(file.circuit, rho, h);

  std::vector<double> row;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Column &c = cols[k];
    if (c.i >= t.dim || c.f >= t.dim) {
      throw InvalidArgument("column '" + names[k] + "': eigenstate index out of range for dimension " +
                            std::to_string(t.dim));
    }
    if (needs_decomposition(c.q) && c.j >= file.circuit.gates.size()) {
      throw InvalidArgument("column '" + names[k] + "': gate index out of range");
    }
    double v = 0.0;
    switch (c.q) {
    case Quantity::ReQ: v = t(c.i, c.f).real(); break;
    case Quantity::ImQ: v = t(c.i, c.f).imag(); break;
    case Quantity::ReQPop: v = split->population(c.i, c.f).real(); break;
    case Quantity::ReQCoh: v = split->coherent(c.i, c.f).real(); break;
    case Quantity::ImQCoh: v = split->coherent(c.i, c.f).imag(); break;
    case Quantity::Work: v = extractable_work(t); break;
    case Quantity::WorkPop: v = extractable_work(split->population); break;
    case Quantity::WorkCoh: v = extractable_work(split->coherent); break;
    case Quantity::Component: {
      const auto comps = work_components(t);
      const auto it = comps.find({static_cast<int>(c.i), static_cast<int>(c.f)});
      if (it == comps.end()) throw InvalidArgument("column '" + names[k] + "': no such work component");
      v = it->second;
      break;
    }
    case Quantity::NormPosUp: v = anomaly_norms(t).pos_up; break;
    case Quantity::NormNegUp: v = anomaly_norms(t).neg_up; break;
    case Quantity::NormPosDown: v = anomaly_norms(t).pos_down; break;
    case Quantity::NormNegDown: v = anomaly_norms(t).neg_down; break;
    case Quantity::ReConstituent: v = dec->per_gate[c.j].constituent(c.i, c.f).real(); break;
    case Quantity::ReGap: v = dec->per_gate[c.j].gap(c.i, c.f).real(); break;
    case Quantity::ReCorrection: v = dec->correction(c.i, c.f).real(); break;
    case Quantity::ImCorrection: v = dec->correction(c.i, c.f).imag(); break;
    }
    row.push_back(v);
  }
  return row;
}

} // namespace

SweepAxis SweepAxis::linspace(std::string name, double start, double stop, std::size_t count) {
  if (count < 2) throw InvalidArgument("sweep axis " + name + ": count must be at least 2");
  if (!(start < stop)) throw InvalidArgument("sweep axis " + name + ": start must be below stop");
  SweepAxis a{std::move(name), {}};
  for (std::size_t k = 0; k < count; ++k) {
    a.values.push_back(k + 1 == count ? stop
                                      : start + (stop - start) * static_cast<double>(k) /
                                                    static_cast<double>(count - 1));
  }
  return a;
}

std::size_t SweepResult::column(const std::string &name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw InvalidArgument("no column '" + name + "' in sweep result");
  return static_cast<std::size_t>(it - header.begin());
}

void validate_columns(const std::vector<std::string> &columns) {
  if (columns.empty()) throw InvalidArgument("sweep needs at least one output column");
  for (const auto &c : columns) (void)parse_column(c);
}

SweepResult run_sweep(const std::string &circuit_template, const SweepSpec &spec) {
  validate_columns(spec.columns);
  std::vector<Column> cols;
  for (const auto &c : spec.columns) cols.push_back(parse_column(c));
  if (spec.axes.empty()) throw InvalidArgument("sweep needs at least one axis");

  const auto used = placeholder_names(circuit_template);
  for (const auto &axis : spec.axes) {
    if (std::find(used.begin(), used.end(), axis.name) == used.end()) {
      throw InvalidArgument("placeholder $" + axis.name + " does not appear in the circuit file");
    }
    if (axis.values.empty()) throw InvalidArgument("sweep axis " + axis.name + " has no values");
  }

  SweepResult result;
  for (const auto &axis : spec.axes) result.header.push_back(axis.name);
  for (const auto &c : spec.columns) result.header.push_back(c);

  std::vector<std::size_t> idx(spec.axes.size(), 0);
  for (;;) {
    std::map<std::string, double> values = spec.fixed;
    std::vector<double> row;
    for (std::size_t a = 0; a < spec.axes.size(); ++a) {
      const double v = spec.axes[a].values[idx[a]];
      values[spec.axes[a].name] = v;
      row.push_back(v);
    }
    const CircuitFile file = parse_circuit(substitute_placeholders(circuit_template, values));
    const auto computed = evaluate_point(file, cols, spec.columns);
    row.insert(row.end(), computed.begin(), computed.end());
    result.rows.push_back(std::move(row));

    std::size_t a = spec.axes.size();
    while (a > 0) {
      --a;
      if (++idx[a] < spec.axes[a].values.size()) break;
      idx[a] = 0;
      if (a == 0) return result;
    }
  }
}

std::string to_csv(const SweepResult &result) {
  std::string out;
  for (std::size_t k = 0; k < result.header.size(); ++k) {
    out += (k ? "," : "") + result.header[k];
  }
  out += "\n";
  for (const auto &row : result.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      out += (k ? "," : "") + format_real(row[k]);
    }
    out += "\n";
  }
  return out;
}

} // namespace kdwork
