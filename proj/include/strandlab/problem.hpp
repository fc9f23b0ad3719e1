#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strandlab/complex.hpp"

namespace strandlab {

// Input errors carry the name of the offending field, e.g. "grading.theta".
class ProblemError : public std::runtime_error {
 public:
  enum class Kind { parse, grading };
  ProblemError(Kind kind, std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), kind_(kind), field_(std::move(field)) {}
  Kind kind() const { return kind_; }
  const std::string& field() const { return field_; }

 private:
  Kind kind_;
  std::string field_;
};

// A ring and a module read from a problem file:
//
//   [field]
//   characteristic = 32003          # 0 for the rationals
//   [grading]
//   variables = x0 x1 x2            # optional, defaults to x0..xn
//   degrees = 1 1 2                 # or (1,0) (-3,1) ... for rank > 1
//   theta = 1                       # optional positivity witness
//   order = grevlex                 # or lex
//   [module]
//   ideal = x0, x1^2, x2            # M = S/I
//   # or an explicit presentation, in the same layout format_matrix prints:
//   rows = (0) (0)
//   columns = (1) (1)
//   [x0, x2]
//   [-x1, 0]
//   [options]
//   degree = 0
//   length = 3
//   cap = 8
struct Problem {
  std::shared_ptr<const Ring> ring;
  GradedMatrix presentation;
  std::optional<Multidegree> degree;
  std::optional<std::size_t> length;
  std::optional<long> cap;
};

// `default_field` is used when the file has no [field] section.
Problem parse_problem(const std::string& text, const Field& default_field);
Problem load_problem(const std::string& path, const Field& default_field);

// "32003" for F_32003, "0" or "QQ" for the rationals.
Field parse_field(const std::string& text);
// "(1,0)", "1,0" or "1".
Multidegree parse_degree(const std::string& text);

// rows = ..., columns = ..., then one bracketed line per row.
std::string format_matrix(const GradedMatrix& m);
GradedMatrix parse_matrix(const Ring& ring, const std::string& text);

// "S(-1)^2 + S(-2)", grouping equal consecutive degrees; "0" if empty.
std::string format_free_module(const GradedFreeModule& f);
// Terms "F0 = ...", then for each i >= 1 the block "d<i>:" and format_matrix.
std::string format_complex(const GradedComplex& c, bool matrices);

// A problem file for the module presented by `pres`.
std::string format_problem(const Ring& ring, const GradedMatrix& pres);

}  // namespace strandlab
