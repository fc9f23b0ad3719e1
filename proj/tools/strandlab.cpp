// Command-line front end. Exit codes: 0 success, 1 computation error,
// 2 unreadable input, 3 invalid grading, 4 degree not minimal in Eff(M).

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "strandlab/bgg.hpp"
#include "strandlab/lst.hpp"
#include "strandlab/problem.hpp"
#include "strandlab/resolution.hpp"

using namespace strandlab;

namespace {

std::string betti_block(const GradedComplex& f) {
  const BettiTable b = betti_table(f);
  const GradingSpec& g = f.ring()->grading();
  return "betti\n" + b.to_text(g) + "grid\n" + b.to_grid(g);
}

long max_generator_theta(const GradedComplex& f) {
  const GradingSpec& g = f.ring()->grading();
  long t = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (const auto& d : f.term(i).gen_degrees) t = std::max(t, g.theta_of(d));
  return t;
}

std::string degree_list(const std::vector<Multidegree>& v) {
  std::string s;
  for (const auto& d : v) s += (s.empty() ? "" : " ") + d.to_string();
  return s;
}

// The strand degree: the flag, the file, or the unique minimal degree.
Multidegree choose_degree(const PresentedModule& m, const Problem& p, const std::string& flag) {
  if (!flag.empty()) {
    try {
      return parse_degree(flag);
    } catch (const std::exception& e) {
      throw ProblemError(ProblemError::Kind::parse, "--degree", e.what());
    }
  }
  if (p.degree) return *p.degree;
  auto mins = m.minimal_effective_degrees();
  if (mins.size() == 1) return mins.front();
  throw NotMinimalDegree(m.grading().zero(), std::move(mins));
}

struct Args {
  std::string file;
  std::string degree;
  std::optional<std::size_t> length;
  std::optional<long> cap;
  bool matrices = false;
};

std::string run(const std::string& command, const Args& a, const Field& field) {
  const Problem p = load_problem(a.file, field);
  const std::optional<std::size_t> length = a.length ? a.length : p.length;
  const std::optional<long> cap = a.cap ? a.cap : p.cap;
  std::ostringstream out;

  if (command == "resolve") {
    ResolutionOptions opt;
    opt.length = length;
    const GradedComplex f = free_resolution(p.presentation, opt).complex;
    out << betti_block(f);
    if (a.matrices) out << format_complex(f, true);
  } else if (command == "strand") {
    const PresentedModule m(p.presentation);
    const Multidegree d = choose_degree(m, p, a.degree);
    const GradedComplex l = strongly_linear_strand(m, d);
    out << "degree = " << d.to_string() << "\n" << "length = " << strand_length(l) << "\n";
    out << format_complex(l, true);
  } else if (command == "linear-part") {
    ResolutionOptions opt;
    opt.length = length;
    const GradedComplex f = free_resolution(p.presentation, opt).complex;
    const long c = cap.value_or(max_generator_theta(f));
    out << "cap = " << c << "\n" << format_complex(strongly_linear_part(f, c), true);
  } else if (command == "perturb") {
    const PresentedModule m(p.presentation);
    PerturbationOptions opt;
    opt.length = length;
    opt.theta_cap = cap;
    const Perturbation r = perturbation_resolution(m, opt);
    out << "cap = " << r.theta_cap << "\n" << betti_block(r.complex);
    if (a.matrices) out << format_complex(r.complex, true);
  } else if (command == "lst") {
    const PresentedModule m(p.presentation);
    const Multidegree d = choose_degree(m, p, a.degree);
    const LstReport r = lst_check(m, d);
    out << "degree=" << r.degree.to_string() << "\n"
        << "strand_length=" << r.strand_length << "\n"
        << "dim_M_a=" << r.dim_Ma << "\n"
        << "dim_R=" << r.dim_R << "\n"
        << "bound=" << r.bound << "\n"
        << "holds=" << (r.holds ? "true" : "false") << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multigraded free resolutions, BGG and linear strands"};
  app.require_subcommand(1);
  Args args;
  struct Spec {
    const char* name;
    const char* help;
    bool degree, length, cap, matrices;
  };
  const Spec specs[] = {
      {"resolve", "minimal free resolution and its Betti table", false, true, false, true},
      {"strand", "strongly linear strand L(K_a(M))", true, false, false, false},
      {"linear-part", "strongly linear part L(H(R(F))) of the minimal resolution", false, true, true, false},
      {"perturb", "minimal resolution by homological perturbation of L(H(R(M)))", false, true, true, true},
      {"lst", "linear syzygy theorem report", true, false, false, false},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("file", args.file, "problem file")->required();
    if (s.degree) sub->add_option("--degree", args.degree, "degree a, e.g. 0 or (0,0)");
    if (s.length) sub->add_option("--length", args.length, "homological length");
    if (s.cap) sub->add_option("--cap", args.cap, "theta cap of the degree window");
    if (s.matrices) sub->add_flag("--matrices", args.matrices, "print the differentials");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Field field = Field::prime(32003);
    if (const char* env = std::getenv("STRANDLAB_FIELD")) {
      try {
        field = parse_field(env);
      } catch (const std::exception& e) {
        throw ProblemError(ProblemError::Kind::parse, "STRANDLAB_FIELD", e.what());
      }
    }
    std::cout << run(app.get_subcommands().front()->get_name(), args, field);
  } catch (const ProblemError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ProblemError::Kind::grading ? 3 : 2;
  } catch (const NotMinimalDegree& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "minimal degrees: " << degree_list(e.minimal()) << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
