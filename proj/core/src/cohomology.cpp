// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

#include "drep/cohomology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "drep/linalg.hpp"

namespace drep::coh {

Grading detect_grading(const nc::Resolution& res) {
  const auto& alphabet = *res.alphabet();
  Grading g;
  g.weights.assign(alphabet.size(), 1);
  std::vector<std::uint32_t> order(alphabet.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return alphabet.degree(a) > alphabet.degree(b);
  });
  for (auto gen : order) {
    if (alphabet.degree(gen) == 0) continue;
    const auto& d = res.diff(gen);
    if (d.is_zero()) continue;
    std::set<int> seen;
    for (const auto& [w, c] : d.terms()) {
      int total = 0;
      for (auto f : w) total += g.weights[f];
      seen.insert(total);
    }
    g.weights[gen] = *seen.rbegin();
    if (!g.homogeneous) continue;
    if (seen.size() > 1) {
      g.homogeneous = false;
      std::ostringstream msg;
      msg << "differential of " << alphabet[gen].name << " mixes internal weights";
      for (int w : seen) msg << ' ' << w;
      g.reason = msg.str();
    } else if (*seen.begin() <= 0) {
      g.homogeneous = false;
      g.reason = "differential of " + alphabet[gen].name + " has a constant term";
    }
  }
  return g;
}

std::map<int, std::size_t> HPresentation::generator_counts() const {
  std::map<int, std::size_t> out;
  for (std::size_t i = 0; i < module.generator_degrees.size(); ++i) ++out[module.generator_degrees[i]];
  return out;
}

bool EulerReport::ok() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const EulerRow& r) { return r.chain_side == r.cohomology_side; });
}

// ---------------------------------------------------------------------------

struct CochainComplex::Cache {
  std::map<int, std::vector<gc::Monomial>> basis;
  std::map<int, std::vector<int>> weights;
  std::map<int, std::map<std::vector<std::uint32_t>, std::uint32_t>> index;
  std::map<int, gb::FreeModuleMap> diffs;
  std::map<std::pair<int, int>, gb::GroebnerBasis> boundaries;  // bound -1 = none
};

namespace {

std::vector<std::string> s_names(const expand::ExpandedAlgebra& ea) {
  std::vector<std::string> names;
  for (auto v : ea.degree_zero_variables()) names.push_back((*ea.variables())[v].name);
  if (names.size() > gb::kMaxVars)
    throw Error("too many degree-0 variables (" + std::to_string(names.size()) + ") for the Gröbner engine");
  return names;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer monomial_count(std::size_t nvars, int d) {
  if (d < 0) return 0;
  if (nvars == 0) return d == 0 ? 1 : 0;
  return binomial(static_cast<long>(nvars) - 1 + d, static_cast<long>(nvars) - 1);
}

}  // namespace

CochainComplex::CochainComplex(const expand::ExpandedAlgebra& ea, gb::GroebnerOptions options)
    : ea_(ea),
      options_(options),
      grading_(detect_grading(ea.source())),
      ring_(s_names(ea)),
      cache_(std::make_unique<Cache>()) {
  const auto& vars = *ea_.variables();
  var_weight_.resize(vars.size());
  s_index_.assign(vars.size(), -1);
  for (std::uint32_t v = 0; v < vars.size(); ++v) var_weight_[v] = grading_.weights[ea_.generator_of(v)];
  const auto& zero = ea_.degree_zero_variables();
  for (std::size_t i = 0; i < zero.size(); ++i) s_index_[zero[i]] = static_cast<int>(i);
}

CochainComplex::~CochainComplex() = default;
CochainComplex::CochainComplex(CochainComplex&&) noexcept = default;
CochainComplex& CochainComplex::operator=(CochainComplex&&) noexcept = default;

int CochainComplex::variable_weight(std::uint32_t var) const { return var_weight_.at(var); }

std::optional<int> CochainComplex::top_degree() const {
  const auto& vars = *ea_.variables();
  int top = 0;
  for (const auto& v : vars.variables()) {
    if (v.degree == 0) continue;
    if (!v.odd()) return std::nullopt;
    top += -v.degree;
  }
  return top;
}

const std::vector<gc::Monomial>& CochainComplex::basis(int m) const {
  auto it = cache_->basis.find(m);
  if (it != cache_->basis.end()) return it->second;
  std::vector<gc::Monomial> b;
  if (m >= 0) b = gc::component_basis(ea_.presentation(), m);
  std::vector<int> w;
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < b.size(); ++i) {
    int total = 0;
    for (auto f : b[i].factors()) total += var_weight_[f];
    w.push_back(total);
    index.emplace(b[i].factors(), i);
  }
  cache_->weights.emplace(m, std::move(w));
  cache_->index.emplace(m, std::move(index));
  return cache_->basis.emplace(m, std::move(b)).first->second;
}

const std::vector<int>& CochainComplex::weights(int m) const {
  basis(m);
  return cache_->weights.at(m);
}

gb::Element CochainComplex::to_element(const gc::CPoly& p, int m) const {
  basis(m);
  const auto& index = cache_->index.at(m);
  std::vector<gb::Term> terms;
  for (const auto& [mon, c] : p.terms()) {
    if (mon.degree() != -m) throw Error("polynomial does not lie in the degree -" + std::to_string(m) + " component");
    gb::Monomial s;
    std::vector<std::uint32_t> rest;
    for (auto f : mon.factors()) {
      if (s_index_[f] >= 0)
        s.set(static_cast<std::size_t>(s_index_[f]), s[static_cast<std::size_t>(s_index_[f])] + 1);
      else
        rest.push_back(f);
    }
    auto it = index.find(rest);
    if (it == index.end()) throw Error("monomial outside the component basis");
    terms.push_back({s, it->second, c});
  }
  return gb::Element::from_terms(std::move(terms));
}

gc::CPoly CochainComplex::to_cpoly(const gb::Element& v, int m) const {
  const auto& b = basis(m);
  const auto& zero = ea_.degree_zero_variables();
  gc::CPoly out(ea_.variables());
  for (const auto& t : v.terms()) {
    if (t.comp >= b.size()) throw Error("vector component exceeds the component basis");
    std::vector<std::uint32_t> factors;
    for (std::size_t i = 0; i < zero.size(); ++i)
      for (unsigned e = 0; e < t.mon[i]; ++e) factors.push_back(zero[i]);
    for (auto f : b[t.comp].factors()) factors.push_back(f);
    auto sm = gc::normalize(*ea_.variables(), factors);
    out.add_term(sm.monomial, sm.sign > 0 ? t.coeff : Rational(-t.coeff));
  }
  return out;
}

std::string CochainComplex::format(const gb::Element& v, int m) const { return gc::to_string(to_cpoly(v, m)); }

const gb::FreeModuleMap& CochainComplex::differential(int m) const {
  if (m < 1) throw Error("differential_matrix needs m >= 1");
  auto it = cache_->diffs.find(m);
  if (it != cache_->diffs.end()) return it->second;
  gb::FreeModuleMap map;
  map.target_rank = basis(m - 1).size();
  map.source_shifts = weights(m);
  map.target_shifts = weights(m - 1);
  const auto& pres = ea_.presentation();
  for (const auto& b : basis(m)) {
    auto db = gc::c_d(gc::CPoly::monomial(pres.variables(), b), pres);
    map.columns.push_back(to_element(db, m - 1));
  }
  return cache_->diffs.emplace(m, std::move(map)).first->second;
}

DegreeComponent CochainComplex::component(int m) const {
  DegreeComponent c;
  c.m = m;
  c.basis = basis(m);
  c.weights = weights(m);
  if (m >= 1) {
    c.outgoing = differential(m);
  } else {
    c.outgoing.target_rank = 0;
    c.outgoing.source_shifts = c.weights;
    c.outgoing.columns.assign(c.basis.size(), gb::Element{});
  }
  if (!basis(m + 1).empty()) {
    c.incoming = differential(m + 1);
  } else {
    c.incoming.target_rank = c.basis.size();
    c.incoming.target_shifts = c.weights;
  }
  return c;
}

Integer CochainComplex::component_dimension(int m, int d) const {
  Integer total = 0;
  for (int w : weights(m)) total += monomial_count(nvars(), d - w);
  return total;
}

const gb::GroebnerBasis& CochainComplex::boundaries(int m, std::optional<int> degree_bound) const {
  if (!homogeneous()) degree_bound.reset();
  std::pair<int, int> key{m, degree_bound ? *degree_bound : -1};
  auto it = cache_->boundaries.find(key);
  if (it != cache_->boundaries.end()) return it->second;
  std::vector<gb::Element> cols;
  if (!basis(m + 1).empty()) cols = differential(m + 1).columns;
  gb::GroebnerOptions opts = options_;
  opts.degree_bound = degree_bound;
  auto g = gb::buchberger(basis(m).size(), weights(m), cols, opts);
  return cache_->boundaries.emplace(key, std::move(g)).first->second;
}

bool CochainComplex::is_cocycle(const gb::Element& v, int m) const {
  if (m == 0) return true;
  return differential(m).apply(v).is_zero();
}

bool CochainComplex::is_coboundary(const gb::Element& v, int m) const {
  if (v.is_zero()) return true;
  std::optional<int> bound;
  if (homogeneous()) bound = v.degree(weights(m));
  return boundaries(m, bound).contains(v);
}

HPresentation CochainComplex::h_presentation(int m, std::optional<int> degree_bound,
                                             bool with_relations) const {
  if (m < 0) throw Error("cohomological degree must be non-positive");
  HPresentation h;
  h.m = m;
  h.homogeneous = homogeneous();
  if (h.homogeneous) h.degree_bound = degree_bound;
  const std::size_t rank = basis(m).size();
  if (rank == 0) return h;

  gb::GroebnerOptions opts = options_;
  opts.degree_bound = h.degree_bound;

  std::vector<gb::Element> cocycles;
  if (m == 0) {
    cocycles.push_back(gb::Element::basis_vector(0));
  } else {
    auto syz = gb::syzygies(differential(m), opts);
    h.complete = h.complete && syz.complete;
    cocycles = std::move(syz.generators);
  }
  std::vector<gb::Element> bounds;
  if (!basis(m + 1).empty()) bounds = differential(m + 1).columns;

  if (h.homogeneous) {
    auto sel = gb::select_minimal(rank, weights(m), bounds, cocycles, opts);
    h.complete = h.complete && sel.complete;
    for (auto i : sel.kept) h.cocycles.push_back(cocycles[i]);
    std::stable_sort(h.cocycles.begin(), h.cocycles.end(), [&](const gb::Element& a, const gb::Element& b) {
      return *a.degree(weights(m)) < *b.degree(weights(m));
    });
    for (const auto& z : h.cocycles) h.module.generator_degrees.push_back(*z.degree(weights(m)));
  } else {
    for (auto& z : cocycles)
      if (!z.is_zero()) h.cocycles.push_back(std::move(z));
    h.module.generator_degrees.assign(h.cocycles.size(), 0);
  }
  if (!with_relations) return h;

  // Relations: kernel of [cocycles | boundaries], projected onto the cocycles.
  const std::size_t k = h.cocycles.size();
  gb::FreeModuleMap g;
  g.target_rank = rank;
  g.target_shifts = weights(m);
  g.source_shifts = h.module.generator_degrees;
  if (!h.homogeneous) {
    g.source_shifts.assign(k, 0);
  }
  g.columns = h.cocycles;
  if (!bounds.empty()) {
    const auto& w = weights(m + 1);
    g.source_shifts.insert(g.source_shifts.end(), w.begin(), w.end());
    g.columns.insert(g.columns.end(), bounds.begin(), bounds.end());
  }
  auto syz = gb::syzygies(g, opts);
  h.complete = h.complete && syz.complete;
  std::vector<gb::Element> relations;
  for (const auto& s : syz.generators) {
    std::vector<gb::Term> terms;
    for (const auto& t : s.terms())
      if (t.comp < k) terms.push_back(t);
    auto r = gb::Element::from_terms(std::move(terms));
    if (!r.is_zero()) relations.push_back(std::move(r));
  }
  if (h.homogeneous && !relations.empty()) {
    auto sel = gb::select_minimal(k, h.module.generator_degrees, {}, relations, opts);
    for (auto i : sel.kept) h.module.relations.push_back(relations[i]);
  } else {
    h.module.relations = std::move(relations);
  }
  return h;
}

std::vector<Integer> CochainComplex::hilbert_function(int m, int up_to) const {
  if (!homogeneous()) throw Error("Hilbert function needs a consistent internal grading: " + grading_.reason);
  std::vector<Integer> out(static_cast<std::size_t>(up_to + 1), 0);
  if (basis(m).empty()) return out;
  gb::GroebnerOptions opts = options_;
  auto coker = [&](int target) {
    // coker(d_{target+1}) as a module presented on F_target.
    gb::ModulePresentation mp;
    mp.generator_degrees = weights(target);
    if (!basis(target + 1).empty()) mp.relations = differential(target + 1).columns;
    return gb::hilbert_function(mp, nvars(), up_to, opts);
  };
  auto a = coker(m);
  for (int d = 0; d <= up_to; ++d) out[d] += a[d];
  if (m >= 1) {
    auto b = coker(m - 1);
    for (int d = 0; d <= up_to; ++d) out[d] += b[d] - component_dimension(m - 1, d);
  }
  return out;
}

bool CochainComplex::vanishing(int m) const {
  if (m < 0) throw Error("cohomological degree must be non-positive");
  if (basis(m).empty()) return true;
  if (m == 0) return boundaries(0).contains(gb::Element::basis_vector(0));
  if (homogeneous()) {
    // HS(H) = HS(coker d_{m+1}) + HS(coker d_m) - HS(F_{m-1}); all share (1-t)^N.
    auto num = gb::hilbert_numerator(boundaries(m), nvars());
    auto prev = gb::hilbert_numerator(boundaries(m - 1), nvars());
    std::size_t len = std::max(num.size(), prev.size());
    for (int w : weights(m - 1)) len = std::max(len, static_cast<std::size_t>(w) + 1);
    num.resize(len, 0);
    for (std::size_t i = 0; i < prev.size(); ++i) num[i] += prev[i];
    for (int w : weights(m - 1)) num[static_cast<std::size_t>(w)] -= 1;
    return std::all_of(num.begin(), num.end(), [](const Integer& c) { return sgn(c) == 0; });
  }
  auto syz = gb::syzygies(differential(m), options_);
  const auto& b = boundaries(m);
  return std::all_of(syz.generators.begin(), syz.generators.end(),
                     [&](const gb::Element& z) { return b.contains(z); });
}

CohomologyClass CochainComplex::cup_product(const CohomologyClass& a, const CohomologyClass& b) const {
  if (!is_cocycle(a.representative, a.m) || !is_cocycle(b.representative, b.m))
    throw Error("cup product needs cocycle representatives");
  auto p = gc::c_mul(to_cpoly(a.representative, a.m), to_cpoly(b.representative, b.m));
  int m = a.m + b.m;
  if (p.is_zero()) return {m, gb::Element{}};
  return {m, to_element(p, m)};
}

EulerReport CochainComplex::euler_check(int up_to) const {
  if (!homogeneous()) throw Error("Euler check needs a consistent internal grading: " + grading_.reason);
  EulerReport report;
  // A degree -m monomial has weight at least m * min(weight / |degree|).
  int last = 0;
  const auto& vars = *ea_.variables();
  for (std::uint32_t v = 0; v < vars.size(); ++v)
    if (vars[v].degree < 0) last = std::max(last, up_to * -vars[v].degree / var_weight_[v]);
  if (auto top = top_degree()) last = std::min(last, *top);
  std::vector<std::vector<Integer>> hf;
  for (int m = 0; m <= last; ++m) {
    const auto& w = weights(m);
    if (w.empty() || *std::min_element(w.begin(), w.end()) > up_to) {
      hf.emplace_back(static_cast<std::size_t>(up_to + 1), 0);
      continue;
    }
    auto h = h_presentation(m, up_to);
    hf.push_back(gb::hilbert_function(h.module, nvars(), up_to, options_));
  }
  for (int d = 0; d <= up_to; ++d) {
    EulerRow row;
    row.degree = d;
    row.chain_side = 0;
    row.cohomology_side = 0;
    for (std::size_t m = 0; m < hf.size(); ++m) {
      Integer f = component_dimension(static_cast<int>(m), d);
      if (m % 2) {
        row.chain_side -= f;
        row.cohomology_side -= hf[m][d];
      } else {
        row.chain_side += f;
        row.cohomology_side += hf[m][d];
      }
    }
    report.rows.push_back(row);
  }
  return report;
}

// ---------------------------------------------------------------------------

gb::FreeModuleMap differential_matrix(const expand::ExpandedAlgebra& ea, int m) {
  return CochainComplex(ea).differential(m);
}

HPresentation h_presentation(const expand::ExpandedAlgebra& ea, int m, std::optional<int> degree_bound) {
  return CochainComplex(ea).h_presentation(m, degree_bound);
}

bool vanishing(const expand::ExpandedAlgebra& ea, int m) { return CochainComplex(ea).vanishing(m); }

EulerReport euler_check(const expand::ExpandedAlgebra& ea, int up_to) {
  return CochainComplex(ea).euler_check(up_to);
}

// ---------------------------------------------------------------------------
// Dense graded pieces for solve_relations.

namespace {

void monomials_of_degree(std::size_t nvars, int d, std::vector<gb::Monomial>& out) {
  if (d < 0) return;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return;
  }
  gb::Monomial m;
  auto rec = [&](auto&& self, std::size_t var, int left) -> void {
    if (var + 1 == nvars) {
      m.set(var, static_cast<unsigned>(left));
      out.push_back(m);
      m.set(var, 0);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.set(var, static_cast<unsigned>(e));
      self(self, var + 1, left - e);
    }
    m.set(var, 0);
  };
  rec(rec, 0, d);
}

// k-basis of F_{m,d}: S-monomials times basis vectors.
class Piece {
 public:
  Piece(const CochainComplex& cx, int m, int d) {
    const auto& w = cx.weights(m);
    for (std::uint32_t c = 0; c < w.size(); ++c) {
      std::vector<gb::Monomial> mons;
      monomials_of_degree(cx.nvars(), d - w[c], mons);
      for (const auto& mon : mons) {
        index_.emplace(std::make_pair(c, mon.exp), elems_.size());
        elems_.push_back(gb::Element::monomial(mon, c));
      }
    }
  }
  std::size_t size() const { return elems_.size(); }
  const gb::Element& element(std::size_t i) const { return elems_[i]; }
  std::vector<Rational> coords(const gb::Element& v) const {
    std::vector<Rational> out(size());
    for (const auto& t : v.terms()) out[index_.at({t.comp, t.mon.exp})] = t.coeff;
    return out;
  }
  gb::Element combine(const std::vector<Rational>& x, std::size_t offset = 0) const {
    gb::Element out;
    for (std::size_t i = 0; i < size(); ++i)
      if (sgn(x[offset + i]) != 0) out += x[offset + i] * elems_[i];
    return out;
  }

 private:
  std::map<std::pair<std::uint32_t, std::array<std::uint8_t, gb::kMaxVars>>, std::size_t> index_;
  std::vector<gb::Element> elems_;
};

// Columns spanning the image of d_{m+1} in F_{m,d}.
std::vector<std::vector<Rational>> boundary_span(const CochainComplex& cx, int m, int d, const Piece& target) {
  std::vector<std::vector<Rational>> out;
  if (cx.basis(m + 1).empty()) return out;
  Piece src(cx, m + 1, d);
  const auto& dm = cx.differential(m + 1);
  for (std::size_t i = 0; i < src.size(); ++i) out.push_back(target.coords(dm.apply(src.element(i))));
  return out;
}

}  // namespace

std::vector<std::vector<gb::Element>> solve_relations(const CochainComplex& cx, int m, int w,
                                                      const std::vector<LinearRelation>& relations) {
  if (!cx.homogeneous()) throw Error("solve_relations needs a consistent internal grading");
  if (relations.empty()) throw Error("solve_relations needs at least one relation");
  const std::size_t k = relations.front().coefficients.size();
  Piece src(cx, m, w);

  // Cocycle basis of F_{m,w}.
  std::vector<std::vector<Rational>> z;
  if (m == 0) {
    for (std::size_t i = 0; i < src.size(); ++i) {
      std::vector<Rational> e(src.size());
      e[i] = 1;
      z.push_back(e);
    }
  } else {
    Piece tgt(cx, m - 1, w);
    linalg::Matrix a(tgt.size(), src.size());
    const auto& dm = cx.differential(m);
    for (std::size_t j = 0; j < src.size(); ++j) {
      auto c = tgt.coords(dm.apply(src.element(j)));
      for (std::size_t i = 0; i < tgt.size(); ++i) a(i, j) = c[i];
    }
    z = linalg::nullspace(a);
  }
  const std::size_t nz = z.size();

  // Unknowns: k blocks of cocycle coordinates, then boundary coordinates per relation.
  struct Block {
    Piece piece;
    std::vector<std::vector<Rational>> bspan;
    std::size_t offset;
  };
  std::vector<Block> blocks;
  std::size_t unknowns = k * nz;
  std::size_t rows = 0;
  for (const auto& rel : relations) {
    if (rel.coefficients.size() != k) throw Error("relations disagree on the number of unknowns");
    std::optional<int> e;
    for (const auto& a : rel.coefficients)
      if (!a.is_zero()) {
        auto ad = a.degree({0});
        if (!ad || (e && *e != *ad)) throw Error("relation coefficients must be homogeneous of one degree");
        e = ad;
      }
    int d = w + (e ? *e : 0);
    Piece p(cx, m, d);
    auto bs = boundary_span(cx, m, d, p);
    blocks.push_back({std::move(p), std::move(bs), unknowns});
    unknowns += blocks.back().bspan.size();
    rows += blocks.back().piece.size();
  }

  linalg::Matrix a(rows, unknowns);
  std::size_t row0 = 0;
  for (std::size_t r = 0; r < relations.size(); ++r) {
    const auto& blk = blocks[r];
    for (std::size_t i = 0; i < k; ++i) {
      const auto& coeff = relations[r].coefficients[i];
      if (coeff.is_zero()) continue;
      for (std::size_t j = 0; j < nz; ++j) {
        auto v = coeff * src.combine(z[j]);
        auto c = blk.piece.coords(v);
        for (std::size_t q = 0; q < c.size(); ++q) a(row0 + q, i * nz + j) += c[q];
      }
    }
    for (std::size_t j = 0; j < blk.bspan.size(); ++j)
      for (std::size_t q = 0; q < blk.piece.size(); ++q) a(row0 + q, blk.offset + j) = -blk.bspan[j][q];
    row0 += blk.piece.size();
  }
  auto sols = linalg::nullspace(a);

  // Tuples in (F_{m,w})^k; reduce modulo tuples of boundaries.
  auto bw = boundary_span(cx, m, w, src);
  const std::size_t dim = k * src.size();
  std::vector<std::vector<Rational>> span;
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& b : bw) {
      std::vector<Rational> v(dim);
      for (std::size_t q = 0; q < src.size(); ++q) v[i * src.size() + q] = b[q];
      span.push_back(std::move(v));
    }
  auto rank_of = [&](const std::vector<std::vector<Rational>>& vs) {
    if (vs.empty()) return std::size_t{0};
    linalg::Matrix mtx(dim, vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j)
      for (std::size_t q = 0; q < dim; ++q) mtx(q, j) = vs[j][q];
    return linalg::rank(mtx);
  };
  std::size_t r0 = rank_of(span);
  std::vector<std::vector<gb::Element>> out;
  for (const auto& s : sols) {
    std::vector<Rational> v(dim);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < nz; ++j)
        if (sgn(s[i * nz + j]) != 0)
          for (std::size_t q = 0; q < src.size(); ++q) v[i * src.size() + q] += s[i * nz + j] * z[j][q];
    span.push_back(v);
    std::size_t r1 = rank_of(span);
    if (r1 == r0) {
      span.pop_back();
      continue;
    }
    r0 = r1;
    std::vector<gb::Element> tuple;
    for (std::size_t i = 0; i < k; ++i) tuple.push_back(src.combine(v, i * src.size()));
    out.push_back(std::move(tuple));
  }
  return out;
}

}  // namespace drep::coh
