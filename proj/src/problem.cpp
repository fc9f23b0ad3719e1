#include "strandlab/problem.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace strandlab {

namespace {

using Kind = ProblemError::Kind;

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Splits at commas outside parentheses.
std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

// Whitespace-separated degrees; parentheses may contain spaces.
std::vector<Multidegree> parse_degree_list(const std::string& s, const std::string& field) {
  std::vector<std::string> tokens;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (std::isspace(static_cast<unsigned char>(ch)) && depth == 0) {
      if (!cur.empty()) tokens.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  std::vector<Multidegree> out;
  for (const auto& t : tokens) {
    try {
      out.push_back(parse_degree(t));
    } catch (const std::exception& e) {
      throw ProblemError(Kind::parse, field, e.what());
    }
  }
  return out;
}

long parse_integer(const std::string& s, const std::string& field) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ProblemError(Kind::parse, field, "expected an integer, got '" + s + "'");
}

std::string degree_text(const Multidegree& d) { return d.to_string(); }

std::string join_degrees(const std::vector<Multidegree>& v) {
  std::string s;
  for (const auto& d : v) s += (s.empty() ? "" : " ") + degree_text(d);
  return s;
}

struct Line {
  int number;
  std::string text;
};

const std::set<std::string> kSections{"field", "grading", "module", "options"};

GradedMatrix parse_matrix_lines(const Ring& ring, const std::vector<Line>& lines, const std::string& prefix) {
  std::optional<std::vector<Multidegree>> rows, cols;
  std::vector<std::vector<Polynomial>> entries;
  for (const auto& l : lines) {
    const std::string where = prefix + " (line " + std::to_string(l.number) + ")";
    if (l.text.front() == '[') {
      if (l.text.back() != ']') throw ProblemError(Kind::parse, where, "unterminated matrix row");
      std::vector<Polynomial> row;
      for (const auto& e : split_top_level(l.text.substr(1, l.text.size() - 2))) {
        try {
          row.push_back(ring.parse(e));
        } catch (const std::exception& ex) {
          throw ProblemError(Kind::parse, where, ex.what());
        }
      }
      entries.push_back(std::move(row));
      continue;
    }
    const auto eq = l.text.find('=');
    if (eq == std::string::npos) throw ProblemError(Kind::parse, where, "expected key = value");
    const std::string key = trim(l.text.substr(0, eq)), value = trim(l.text.substr(eq + 1));
    if (key == "rows")
      rows = parse_degree_list(value, prefix + ".rows");
    else if (key == "columns")
      cols = parse_degree_list(value, prefix + ".columns");
    else
      throw ProblemError(Kind::parse, where, "unknown key '" + key + "'");
  }
  if (!rows) throw ProblemError(Kind::parse, prefix + ".rows", "missing row degrees");
  const std::size_t r = rows->size();
  if (!entries.empty() && entries.size() != r)
    throw ProblemError(Kind::parse, prefix, "expected " + std::to_string(r) + " matrix rows, got " +
                                                std::to_string(entries.size()));
  const std::size_t c = entries.empty() ? (cols ? cols->size() : 0) : entries.front().size();
  if (entries.empty() && c > 0 && r > 0) throw ProblemError(Kind::parse, prefix, "missing matrix rows");
  for (const auto& row : entries)
    if (row.size() != c) throw ProblemError(Kind::parse, prefix, "matrix rows have different lengths");
  if (cols && cols->size() != c)
    throw ProblemError(Kind::parse, prefix + ".columns",
                       "expected " + std::to_string(c) + " column degrees, got " + std::to_string(cols->size()));
  for (const auto& d : *rows)
    if (d.rank() != ring.grading().rank())
      throw ProblemError(Kind::parse, prefix + ".rows", "degree " + d.to_string() + " has the wrong rank");
  if (!cols) {
    cols.emplace();
    for (std::size_t j = 0; j < c; ++j) {
      std::optional<Multidegree> d;
      for (std::size_t i = 0; i < r && !d; ++i)
        if (auto e = entries[i][j].degree()) d = (*rows)[i] + *e;
      if (!d) throw ProblemError(Kind::parse, prefix + ".columns", "column " + std::to_string(j) + " is zero; give its degree");
      cols->push_back(*d);
    }
  }
  for (const auto& d : *cols)
    if (d.rank() != ring.grading().rank())
      throw ProblemError(Kind::parse, prefix + ".columns", "degree " + d.to_string() + " has the wrong rank");
  GradedMatrix m(&ring, *rows, *cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entries[i][j];
  try {
    m.check_homogeneous();
  } catch (const std::exception& e) {
    throw ProblemError(Kind::parse, prefix, e.what());
  }
  return m;
}

}  // namespace

Field parse_field(const std::string& text) {
  const std::string t = trim(text);
  if (t == "QQ" || t == "0") return Field::rationals();
  const long p = parse_integer(t, "field.characteristic");
  try {
    return Field::prime(p);
  } catch (const std::exception& e) {
    throw ProblemError(Kind::parse, "field.characteristic", e.what());
  }
}

Multidegree parse_degree(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty degree");
  if (t.front() != '(') t = "(" + t + ")";
  return Multidegree::parse(t);
}

Problem parse_problem(const std::string& text, const Field& default_field) {
  std::map<std::string, std::vector<Line>> sections;
  std::string current;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']' && kSections.count(trim(line.substr(1, line.size() - 2)))) {
      current = trim(line.substr(1, line.size() - 2));
      if (sections.count(current)) throw ProblemError(Kind::parse, current, "section appears twice");
      sections[current];
      continue;
    }
    if (current.empty())
      throw ProblemError(Kind::parse, "line " + std::to_string(number), "text before the first section");
    sections[current].push_back({number, line});
  }

  auto key_values = [&](const std::string& sec) {
    std::map<std::string, std::string> kv;
    for (const auto& l : sections[sec]) {
      const auto eq = l.text.find('=');
      if (eq == std::string::npos)
        throw ProblemError(Kind::parse, sec + " (line " + std::to_string(l.number) + ")", "expected key = value");
      kv[trim(l.text.substr(0, eq))] = trim(l.text.substr(eq + 1));
    }
    return kv;
  };

  Field field = default_field;
  if (sections.count("field")) {
    for (const auto& [k, v] : key_values("field")) {
      if (k != "characteristic") throw ProblemError(Kind::parse, "field." + k, "unknown key");
      field = parse_field(v);
    }
  }

  if (!sections.count("grading")) throw ProblemError(Kind::parse, "grading", "missing [grading] section");
  const auto g = key_values("grading");
  for (const auto& [k, v] : g)
    if (k != "variables" && k != "degrees" && k != "theta" && k != "order")
      throw ProblemError(Kind::parse, "grading." + k, "unknown key");
  if (!g.count("degrees")) throw ProblemError(Kind::parse, "grading.degrees", "missing variable degrees");
  const auto degs = parse_degree_list(g.at("degrees"), "grading.degrees");
  if (degs.empty()) throw ProblemError(Kind::grading, "grading.degrees", "no variables");
  if (degs.size() > static_cast<std::size_t>(kMaxVars))
    throw ProblemError(Kind::grading, "grading.degrees", "at most " + std::to_string(kMaxVars) + " variables");
  const std::size_t r = degs.front().rank();
  for (const auto& d : degs)
    if (d.rank() != r)
      throw ProblemError(Kind::grading, "grading.degrees", "degree " + d.to_string() + " does not have rank " +
                                                               std::to_string(r));
  std::vector<std::string> names;
  if (g.count("variables")) {
    std::istringstream ns(g.at("variables"));
    for (std::string s; ns >> s;) names.push_back(s);
    if (names.size() != degs.size())
      throw ProblemError(Kind::grading, "grading.variables",
                         std::to_string(names.size()) + " names for " + std::to_string(degs.size()) + " degrees");
  }
  std::vector<int> theta;
  if (g.count("theta")) {
    Multidegree t;
    try {
      t = parse_degree(g.at("theta"));
    } catch (const std::exception& e) {
      throw ProblemError(Kind::parse, "grading.theta", e.what());
    }
    if (t.rank() != r) throw ProblemError(Kind::grading, "grading.theta", "must have " + std::to_string(r) + " entries");
    theta = t.coords();
  } else {
    auto found = find_theta(r, degs);
    if (!found) throw ProblemError(Kind::grading, "grading.degrees", "the grading is not positive");
    theta = *found;
  }
  GradingSpec spec(r, degs, theta);
  if (!validate_positive(spec))
    throw ProblemError(Kind::grading, "grading.theta", "theta is not positive on every variable degree");
  MonomialOrder order = MonomialOrder::theta_grevlex;
  if (g.count("order")) {
    if (g.at("order") == "lex")
      order = MonomialOrder::theta_lex;
    else if (g.at("order") != "grevlex")
      throw ProblemError(Kind::parse, "grading.order", "expected grevlex or lex");
  }
  Problem p;
  try {
    p.ring = Ring::make(field, spec, names, order);
  } catch (const std::exception& e) {
    throw ProblemError(Kind::parse, "grading.variables", e.what());
  }

  if (!sections.count("module")) throw ProblemError(Kind::parse, "module", "missing [module] section");
  const auto& mod = sections["module"];
  if (!mod.empty() && mod.front().text.rfind("ideal", 0) == 0) {
    if (mod.size() != 1) throw ProblemError(Kind::parse, "module.ideal", "an ideal takes a single line");
    const auto eq = mod.front().text.find('=');
    if (eq == std::string::npos) throw ProblemError(Kind::parse, "module.ideal", "expected ideal = ...");
    std::vector<Polynomial> gens;
    for (const auto& s : split_top_level(mod.front().text.substr(eq + 1))) {
      if (s.empty()) continue;
      try {
        Polynomial q = p.ring->parse(s);
        if (!q.is_zero()) gens.push_back(std::move(q));
      } catch (const std::exception& e) {
        throw ProblemError(Kind::parse, "module.ideal", e.what());
      }
    }
    std::vector<Multidegree> cols;
    for (const auto& q : gens) {
      auto d = q.degree();
      if (!d) throw ProblemError(Kind::parse, "module.ideal", "generator " + p.ring->format(q) + " is not homogeneous");
      cols.push_back(*d);
    }
    p.presentation = GradedMatrix(p.ring.get(), {spec.zero()}, cols);
    for (std::size_t c = 0; c < gens.size(); ++c) p.presentation.at(0, c) = gens[c];
  } else {
    p.presentation = parse_matrix_lines(*p.ring, mod, "module");
  }

  if (sections.count("options")) {
    for (const auto& [k, v] : key_values("options")) {
      if (k == "degree") {
        try {
          p.degree = parse_degree(v);
        } catch (const std::exception& e) {
          throw ProblemError(Kind::parse, "options.degree", e.what());
        }
        if (p.degree->rank() != r) throw ProblemError(Kind::parse, "options.degree", "wrong rank");
      } else if (k == "length") {
        const long l = parse_integer(v, "options.length");
        if (l < 0) throw ProblemError(Kind::parse, "options.length", "must be nonnegative");
        p.length = static_cast<std::size_t>(l);
      } else if (k == "cap") {
        p.cap = parse_integer(v, "options.cap");
      } else {
        throw ProblemError(Kind::parse, "options." + k, "unknown key");
      }
    }
  }
  return p;
}

Problem load_problem(const std::string& path, const Field& default_field) {
  std::ifstream in(path);
  if (!in) throw ProblemError(Kind::parse, path, "cannot read file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str(), default_field);
}

std::string format_matrix(const GradedMatrix& m) {
  const Ring& ring = *m.ring();
  std::string s = "rows = " + join_degrees(m.row_degrees()) + "\n";
  s += "columns = " + join_degrees(m.col_degrees()) + "\n";
  if (m.cols() == 0) return s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + ring.format(m.at(i, j));
    s += "]\n";
  }
  return s;
}

GradedMatrix parse_matrix(const Ring& ring, const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::string l = trim(raw);
    if (!l.empty()) lines.push_back({number, l});
  }
  return parse_matrix_lines(ring, lines, "matrix");
}

std::string format_free_module(const GradedFreeModule& f) {
  if (f.gen_degrees.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < f.gen_degrees.size();) {
    std::size_t j = i;
    while (j < f.gen_degrees.size() && f.gen_degrees[j] == f.gen_degrees[i]) ++j;
    const Multidegree& d = f.gen_degrees[i];
    std::string t = "S";
    if (!d.is_zero()) {
      t += "(";
      for (std::size_t k = 0; k < d.rank(); ++k) t += (k ? "," : "") + std::to_string(-d[k]);
      t += ")";
    }
    if (j - i > 1) t += "^" + std::to_string(j - i);
    s += (s.empty() ? "" : " + ") + t;
    i = j;
  }
  return s;
}

std::string format_complex(const GradedComplex& c, bool matrices) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += "F" + std::to_string(i) + " = " + format_free_module(c.term(i)) + "\n";
  if (matrices)
    for (std::size_t i = 1; i < c.size(); ++i) s += "d" + std::to_string(i) + ":\n" + format_matrix(c.differential(i));
  return s;
}

std::string format_problem(const Ring& ring, const GradedMatrix& pres) {
  const GradingSpec& g = ring.grading();
  std::string s = "[field]\ncharacteristic = " + std::to_string(ring.field().characteristic()) + "\n";
  s += "[grading]\nvariables =";
  for (const auto& n : ring.names()) s += " " + n;
  s += "\ndegrees = " + join_degrees(g.var_degrees()) + "\n";
  s += "theta = " + Multidegree(g.theta()).to_string() + "\n";
  s += std::string("order = ") + (ring.order() == MonomialOrder::theta_lex ? "lex" : "grevlex") + "\n";
  s += "[module]\n" + format_matrix(pres);
  return s;
}

}  // namespace strandlab
