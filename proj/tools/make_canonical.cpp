// Writes a problem file for the canonical module Ext^c(S/I, S)(-sum deg x_i)
// of a Cohen-Macaulay quotient S/I of codimension c, read from an ideal file.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "strandlab/problem.hpp"
#include "strandlab/resolution.hpp"

using namespace strandlab;

int main(int argc, char** argv) {
  CLI::App app{"canonical module of a Cohen-Macaulay quotient"};
  std::string path;
  app.add_option("file", path, "problem file with an ideal")->required();
  CLI11_PARSE(app, argc, argv);
  try {
    const Problem p = load_problem(path, Field::prime(32003));
    const Ring& ring = *p.ring;
    const GradedComplex f = free_resolution(p.presentation).complex;
    const std::size_t c = f.size() - 1;
    Multidegree total = ring.grading().zero();
    for (const auto& d : ring.grading().var_degrees()) total += d;
    const GradedMatrix& d = f.differential(c);
    std::vector<Multidegree> rows, cols;
    for (const auto& a : d.col_degrees()) rows.push_back(total - a);
    for (const auto& a : d.row_degrees()) cols.push_back(total - a);
    GradedMatrix pres(&ring, rows, cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) pres.at(i, j) = d.at(j, i);
    pres.check_homogeneous();
    std::cout << "# Ext^" << c << "(S/I, S) twisted by -(sum of the variable degrees)\n";
    std::cout << format_problem(ring, pres);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
