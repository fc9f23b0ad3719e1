#include "strandlab/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace strandlab {

ModuleOrder::ModuleOrder(const Ring* ring, const std::vector<Multidegree>& gen_degrees) : ring_(ring) {
  for (std::uint32_t i = 0; i < gen_degrees.size(); ++i) {
    lead_.emplace_back();
    shift_.push_back(ring->grading().theta_of(gen_degrees[i]));
    key_.push_back({i});
  }
}

ModuleOrder ModuleOrder::induced(const std::vector<std::pair<Monomial, std::uint32_t>>& lead) const {
  ModuleOrder o;
  o.ring_ = ring_;
  for (std::uint32_t i = 0; i < lead.size(); ++i) {
    const auto& [m, c] = lead[i];
    o.lead_.push_back(m * lead_.at(c));
    o.shift_.push_back(shift_[c]);
    auto k = key_[c];
    k.push_back(i);
    o.key_.push_back(std::move(k));
  }
  return o;
}

long ModuleOrder::theta(const Monomial& m, std::uint32_t i) const {
  return ring_->weight(m * lead_[i]) + shift_[i];
}

int ModuleOrder::compare(const Monomial& a, std::uint32_t i, const Monomial& b, std::uint32_t j) const {
  const Monomial ma = a * lead_[i], mb = b * lead_[j];
  const long wa = ring_->weight(ma) + shift_[i], wb = ring_->weight(mb) + shift_[j];
  if (wa != wb) return wa < wb ? -1 : 1;
  if (int r = ring_->compare(ma, mb)) return r;
  const auto& ka = key_[i];
  const auto& kb = key_[j];
  for (std::size_t t = 0; t < ka.size() && t < kb.size(); ++t)
    if (ka[t] != kb[t]) return ka[t] < kb[t] ? 1 : -1;
  return 0;
}

bool operator==(const FreeVector& a, const FreeVector& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    const auto &x = a.terms[i], &y = b.terms[i];
    if (x.comp != y.comp || !(x.mono == y.mono) || !(x.coeff == y.coeff)) return false;
  }
  return true;
}

FreeVector make_vector(const ModuleOrder& ord, std::vector<VTerm> terms) {
  std::sort(terms.begin(), terms.end(), [&](const VTerm& x, const VTerm& y) {
    return ord.compare(x.mono, x.comp, y.mono, y.comp) > 0;
  });
  FreeVector v;
  for (auto& t : terms) {
    if (!v.terms.empty() && v.terms.back().comp == t.comp && v.terms.back().mono == t.mono)
      v.terms.back().coeff += t.coeff;
    else
      v.terms.push_back(std::move(t));
    if (v.terms.back().coeff.is_zero()) v.terms.pop_back();
  }
  return v;
}

void add_multiple(const ModuleOrder& ord, FreeVector& a, const FreeVector& b, const Monomial& m, const Scalar& c) {
  if (c.is_zero() || b.is_zero()) return;
  std::vector<VTerm> out;
  out.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size()) {
      out.push_back(std::move(a.terms[i++]));
      continue;
    }
    const Monomial mb = m * b.terms[j].mono;
    const int cmp = i == a.terms.size() ? -1 : ord.compare(a.terms[i].mono, a.terms[i].comp, mb, b.terms[j].comp);
    if (cmp > 0) {
      out.push_back(std::move(a.terms[i++]));
    } else if (cmp < 0) {
      out.push_back(VTerm{mb, b.terms[j].comp, c * b.terms[j].coeff});
      ++j;
    } else {
      Scalar s = a.terms[i].coeff + c * b.terms[j].coeff;
      if (!s.is_zero()) out.push_back(VTerm{mb, b.terms[j].comp, std::move(s)});
      ++i;
      ++j;
    }
  }
  a.terms = std::move(out);
}

FreeVector scale(const FreeVector& v, const Monomial& m, const Scalar& c) {
  FreeVector r;
  if (c.is_zero()) return r;
  r.terms.reserve(v.terms.size());
  for (const auto& t : v.terms) r.terms.push_back(VTerm{m * t.mono, t.comp, c * t.coeff});
  return r;
}

FreeVector column_vector(const ModuleOrder& ord, const GradedMatrix& a, std::size_t col) {
  std::vector<VTerm> terms;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& t : a.at(r, col).terms()) terms.push_back(VTerm{t.mono, static_cast<std::uint32_t>(r), t.coeff});
  return make_vector(ord, std::move(terms));
}

std::vector<Polynomial> to_polynomials(const Ring& ring, const FreeVector& v, std::size_t rank) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v.terms) parts.at(t.comp).push_back(Term{t.mono, t.coeff});
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& p : parts) out.push_back(Polynomial::from_terms(&ring, std::move(p)));
  return out;
}

std::vector<std::pair<Monomial, std::uint32_t>> leads(const std::vector<FreeVector>& g) {
  std::vector<std::pair<Monomial, std::uint32_t>> out;
  out.reserve(g.size());
  for (const auto& v : g) out.emplace_back(v.lead().mono, v.lead().comp);
  return out;
}

namespace {

// Lead positions of g bucketed by component.
struct LeadIndex {
  std::map<std::uint32_t, std::vector<std::size_t>> by_comp;
  explicit LeadIndex(const std::vector<FreeVector>& g) {
    for (std::size_t k = 0; k < g.size(); ++k) by_comp[g[k].lead().comp].push_back(k);
  }
  std::optional<std::size_t> find(const std::vector<FreeVector>& g, const VTerm& t) const {
    auto it = by_comp.find(t.comp);
    if (it == by_comp.end()) return std::nullopt;
    for (auto k : it->second)
      if (g[k].lead().mono.divides(t.mono)) return k;
    return std::nullopt;
  }
};

void make_monic(FreeVector& v) {
  if (v.is_zero() || v.lead().coeff.is_one()) return;
  const Scalar inv = v.lead().coeff.inverse();
  for (auto& t : v.terms) t.coeff *= inv;
}

bool lex_greater(const Monomial& a, const Monomial& b) { return b < a; }

void sort_by_lead(std::vector<FreeVector>& g) {
  std::stable_sort(g.begin(), g.end(), [](const FreeVector& a, const FreeVector& b) {
    if (a.lead().comp != b.lead().comp) return a.lead().comp < b.lead().comp;
    return lex_greater(a.lead().mono, b.lead().mono);
  });
}

Division divide_impl(const ModuleOrder& ord, FreeVector v, const std::vector<FreeVector>& g,
                     const LeadIndex& idx, bool with_quotients) {
  Division d;
  std::vector<std::vector<Term>> q(with_quotients ? g.size() : 0);
  std::vector<VTerm> rem;
  std::reverse(v.terms.begin(), v.terms.end());  // lead at the back
  FreeVector work;
  while (!v.terms.empty()) {
    const VTerm t = v.terms.back();
    auto k = idx.find(g, t);
    if (!k) {
      rem.push_back(t);
      v.terms.pop_back();
      continue;
    }
    const auto& lead = g[*k].lead();
    const Monomial m = t.mono / lead.mono;
    const Scalar c = t.coeff / lead.coeff;
    if (with_quotients) q[*k].push_back(Term{m, c});
    std::reverse(v.terms.begin(), v.terms.end());
    add_multiple(ord, v, g[*k], m, -c);
    std::reverse(v.terms.begin(), v.terms.end());
  }
  d.remainder.terms = std::move(rem);
  if (with_quotients) {
    const Ring* ring = ord.ring();
    for (auto& terms : q) d.quotients.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return d;
}

}  // namespace

Division divide(const ModuleOrder& ord, FreeVector v, const std::vector<FreeVector>& g, bool with_quotients) {
  return divide_impl(ord, std::move(v), g, LeadIndex(g), with_quotients);
}

FreeVector normal_form(const ModuleOrder& ord, FreeVector v, const std::vector<FreeVector>& g) {
  return divide(ord, std::move(v), g, false).remainder;
}

std::vector<FreeVector> groebner_basis(const ModuleOrder& ord, std::vector<FreeVector> gens, const GBOptions& opt) {
  std::vector<FreeVector> g;
  // (theta, kind, a, b): kind 0 is an input generator a, kind 1 the pair (a, b).
  using Item = std::tuple<long, int, std::size_t, std::size_t>;
  std::set<Item> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending, done;
  std::vector<FreeVector> inputs;
  for (auto& v : gens) {
    if (v.is_zero()) continue;
    queue.insert({ord.theta(v.lead().mono, v.lead().comp), 0, inputs.size(), 0});
    inputs.push_back(std::move(v));
  }
  const bool rank_one = ord.rank() == 1;

  auto lcm_of = [&](std::size_t a, std::size_t b) { return Monomial::lcm(g[a].lead().mono, g[b].lead().mono); };
  auto chain_ok = [&](std::size_t a, std::size_t b, const Monomial& l) {
    const auto key = std::minmax(a, b);
    if (pending.count(key)) return false;
    return done.count(key) > 0 || !(lcm_of(a, b) == l);
  };

  while (!queue.empty()) {
    const auto [theta, kind, a, b] = *queue.begin();
    queue.erase(queue.begin());
    if (opt.theta_cap && theta > *opt.theta_cap) break;
    FreeVector h;
    if (kind == 0) {
      h = std::move(inputs[a]);
    } else {
      pending.erase({a, b});
      const Monomial l = lcm_of(a, b);
      const std::uint32_t comp = g[a].lead().comp;
      bool skip = false;
      if (rank_one && Monomial::gcd(g[a].lead().mono, g[b].lead().mono).is_one()) {
        done.insert({a, b});
        skip = true;
      }
      for (std::size_t k = 0; k < g.size() && !skip; ++k) {
        if (k == a || k == b || g[k].lead().comp != comp || !g[k].lead().mono.divides(l)) continue;
        if (chain_ok(a, k, l) && chain_ok(b, k, l)) skip = true;
      }
      if (skip) continue;
      done.insert({a, b});
      h = scale(g[a], l / g[a].lead().mono, g[a].lead().coeff.inverse());
      add_multiple(ord, h, g[b], l / g[b].lead().mono, -g[b].lead().coeff.inverse());
    }
    h = normal_form(ord, std::move(h), g);
    if (h.is_zero()) continue;
    make_monic(h);
    const std::size_t n = g.size();
    g.push_back(std::move(h));
    for (std::size_t k = 0; k < n; ++k) {
      if (g[k].lead().comp != g[n].lead().comp) continue;
      pending.insert({k, n});
      queue.insert({ord.theta(lcm_of(k, n), g[n].lead().comp), 1, k, n});
    }
  }

  // Interreduce.
  std::vector<FreeVector> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || g[i].lead().comp != g[j].lead().comp) continue;
      if (g[j].lead().mono.divides(g[i].lead().mono) && (!(g[j].lead().mono == g[i].lead().mono) || j < i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<FreeVector> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<FreeVector> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    FreeVector tail = minimal[i];
    const VTerm lead = tail.terms.front();
    tail.terms.erase(tail.terms.begin());
    tail = normal_form(ord, std::move(tail), others);
    tail.terms.insert(tail.terms.begin(), lead);
    make_monic(tail);
    reduced.push_back(std::move(tail));
  }
  sort_by_lead(reduced);
  return reduced;
}

std::vector<FreeVector> schreyer_syzygies(const ModuleOrder& ord, const std::vector<FreeVector>& g,
                                          const ModuleOrder& induced, const GBOptions& opt) {
  const LeadIndex idx(g);
  std::vector<FreeVector> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    // Candidate lead monomials lcm/lt_i for j > i, keeping the first j per monomial.
    std::vector<std::pair<Monomial, std::size_t>> cand;
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g[j].lead().comp != g[i].lead().comp) continue;
      const Monomial m = Monomial::lcm(g[i].lead().mono, g[j].lead().mono) / g[i].lead().mono;
      cand.emplace_back(m, j);
    }
    std::vector<std::pair<Monomial, std::size_t>> mins;
    for (std::size_t s = 0; s < cand.size(); ++s) {
      bool keep = true;
      for (std::size_t t = 0; t < cand.size() && keep; ++t) {
        if (s == t || !cand[t].first.divides(cand[s].first)) continue;
        if (!(cand[t].first == cand[s].first) || t < s) keep = false;
      }
      if (keep) mins.push_back(cand[s]);
    }
    for (const auto& [m, j] : mins) {
      const auto ii = static_cast<std::uint32_t>(i), jj = static_cast<std::uint32_t>(j);
      if (opt.theta_cap && induced.theta(m, ii) > *opt.theta_cap) continue;
      const Monomial mj = Monomial::lcm(g[i].lead().mono, g[j].lead().mono) / g[j].lead().mono;
      const Scalar ci = g[i].lead().coeff.inverse(), cj = g[j].lead().coeff.inverse();
      FreeVector s = scale(g[i], m, ci);
      add_multiple(ord, s, g[j], mj, -cj);
      Division d = divide_impl(ord, std::move(s), g, idx, true);
      if (!d.remainder.is_zero()) throw std::logic_error("schreyer_syzygies: input is not a Groebner basis");
      std::vector<VTerm> terms{VTerm{m, ii, ci}, VTerm{mj, jj, -cj}};
      for (std::size_t k = 0; k < g.size(); ++k)
        for (const auto& t : d.quotients[k].terms())
          terms.push_back(VTerm{t.mono, static_cast<std::uint32_t>(k), -t.coeff});
      FreeVector syz = make_vector(induced, std::move(terms));
      if (syz.is_zero() || syz.lead().comp != ii || !(syz.lead().mono == m))
        throw std::logic_error("schreyer_syzygies: unexpected lead term");
      make_monic(syz);
      out.push_back(std::move(syz));
    }
  }
  sort_by_lead(out);
  return out;
}

int krull_dimension(const Ring& ring, const std::vector<Polynomial>& ideal) {
  const ModuleOrder ord(&ring, {ring.grading().zero()});
  std::vector<FreeVector> gens;
  for (const auto& p : ideal) {
    std::vector<VTerm> terms;
    for (const auto& t : p.terms()) terms.push_back(VTerm{t.mono, 0, t.coeff});
    gens.push_back(make_vector(ord, std::move(terms)));
  }
  const auto gb = groebner_basis(ord, std::move(gens));
  std::vector<Monomial> lm;
  for (const auto& v : gb) {
    if (v.lead().mono.is_one()) return -1;
    lm.push_back(v.lead().mono);
  }
  const std::size_t n = ring.nvars();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    if (std::none_of(lm.begin(), lm.end(), [&](const Monomial& m) { return m.supported_in(mask); })) best = size;
  }
  return best;
}

PresentedModule::PresentedModule(GradedMatrix presentation)
    : pres_(std::move(presentation)), order_(pres_.ring(), pres_.row_degrees()) {
  pres_.check_homogeneous();
  std::vector<FreeVector> gens;
  for (std::size_t c = 0; c < pres_.cols(); ++c) gens.push_back(column_vector(order_, pres_, c));
  gb_ = groebner_basis(order_, std::move(gens));
}

const PresentedModule::Piece& PresentedModule::piece(const Multidegree& b) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(b);
  if (it != cache_.end()) return it->second;
  Piece p;
  const auto& degs = generator_degrees();
  for (std::uint32_t c = 0; c < degs.size(); ++c) {
    for (const auto& m : monomials_of_degree(b - degs[c], grading())) {
      const bool standard = std::none_of(gb_.begin(), gb_.end(), [&](const FreeVector& v) {
        return v.lead().comp == c && v.lead().mono.divides(m);
      });
      if (standard) {
        p.index[{m, c}] = p.basis.size();
        p.basis.emplace_back(m, c);
      }
    }
  }
  return cache_.emplace(b, std::move(p)).first->second;
}

const std::vector<std::pair<Monomial, std::uint32_t>>& PresentedModule::basis(const Multidegree& b) const {
  return piece(b).basis;
}

std::vector<Scalar> PresentedModule::coordinates(const FreeVector& v, const Multidegree& b) const {
  const Piece& p = piece(b);
  std::vector<Scalar> out(p.basis.size(), ring().field().zero());
  for (const auto& t : normal_form(order_, v, gb_).terms) {
    auto it = p.index.find({t.mono, t.comp});
    if (it == p.index.end()) throw std::invalid_argument("coordinates: vector is not of degree " + b.to_string());
    out[it->second] = t.coeff;
  }
  return out;
}

Matrix PresentedModule::multiplication_map(const Monomial& u, const Multidegree& b) const {
  const Multidegree target = b + grading().degree(u);
  const auto& src = basis(b);
  std::vector<std::vector<Scalar>> cols;
  cols.reserve(src.size());
  for (const auto& [m, c] : src) {
    FreeVector v;
    v.terms.push_back(VTerm{u * m, c, ring().field().one()});
    cols.push_back(coordinates(v, target));
  }
  return Matrix::from_columns(ring().field(), dim(target), cols);
}

Matrix PresentedModule::multiplication_map(std::size_t i, const Multidegree& b) const {
  return multiplication_map(Monomial::variable(static_cast<int>(i)), b);
}

std::vector<Multidegree> PresentedModule::minimal_effective_degrees() const {
  std::vector<Multidegree> nonzero;
  for (const auto& d : generator_degrees())
    if (dim(d) > 0) nonzero.push_back(d);
  return minimal_elements(nonzero, grading());
}

}  // namespace strandlab
