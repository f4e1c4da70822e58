#pragma once

// Built-in sweep recipes that produce the data behind the standard plots:
//   2a  Hadamard-like evolution of qubit_state(1/2, 1/2, phi), phi in {0, pi/4, .., pi}, vs omega t
//   2b  same evolution for pure_pop(p, -pi/2), p in {0, 0.1, .., 0.5}, vs omega t
//   3   H T H on pure_bloch(theta, phi), 2-D grid
//   4   CNOT (H (x) H) on pure_bloch(theta, phi) (x) pure_bloch(theta, phi), 2-D grid
//   5   CNOT (H (x) H) on pure_pop(1/2, phi) (x) pure_pop(1/2, phi), vs phi

#include "kdwork/sweep.hpp"

#include <string>
#include <vector>

namespace kdwork {

struct FigureRecipe {
  std::string id;
  std::string description;
  std::string circuit_template;
  SweepSpec spec;
};

std::vector<std::string> figure_ids();
/// Throws InvalidArgument for an unknown id.
FigureRecipe figure_recipe(const std::string &id);
SweepResult run_figure(const std::string &id);

} // namespace kdwork
