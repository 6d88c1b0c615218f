// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

#include "drep/groebner.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <sstream>

#include "groebner_engine.hpp"

namespace drep::gb {

namespace {

constexpr std::uint64_t kHigh = 0x8080808080808080ULL;

inline std::uint64_t load(const Monomial& m, std::size_t w) {
  std::uint64_t x;
  std::memcpy(&x, m.exp.data() + 8 * w, 8);
  return x;
}

inline void store(Monomial& m, std::size_t w, std::uint64_t x) {
  std::memcpy(m.exp.data() + 8 * w, &x, 8);
}

std::uint64_t mask_of(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (m.exp[i]) mask |= std::uint64_t{1} << i;
  return mask;
}

}  // namespace

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVars) throw Error("variable index exceeds the supported number of variables");
  if (e > kMaxExponent) throw Error("exponent overflow");
  degree = degree - exp[i] + e;
  exp[i] = static_cast<std::uint8_t>(e);
  if (e)
    mask |= std::uint64_t{1} << i;
  else
    mask &= ~(std::uint64_t{1} << i);
}

Monomial Monomial::variable(std::size_t i, unsigned e) {
  Monomial m;
  m.set(i, e);
  return m;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.degree > b.degree || (a.mask & ~b.mask)) return false;
  for (std::size_t w = 0; w < kMaxVars / 8; ++w) {
    // Bytes are at most 127, so the high bit survives iff b >= a bytewise.
    if ((((load(b, w) | kHigh) - load(a, w)) & kHigh) != kHigh) return false;
  }
  return true;
}

Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t w = 0; w < kMaxVars / 8; ++w) {
    std::uint64_t s = load(a, w) + load(b, w);
    if (s & kHigh) throw Error("exponent overflow");
    store(m, w, s);
  }
  m.degree = a.degree + b.degree;
  m.mask = a.mask | b.mask;
  return m;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t w = 0; w < kMaxVars / 8; ++w) store(m, w, load(a, w) - load(b, w));
  m.degree = a.degree - b.degree;
  m.mask = mask_of(m);
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp[i] = std::max(a.exp[i], b.exp[i]);
    d += m.exp[i];
  }
  m.degree = d;
  m.mask = a.mask | b.mask;
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) { return (a.mask & b.mask) == 0; }

int compare_degrevlex(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

PolyRing::PolyRing(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) throw Error("too many variables for the Gröbner engine");
}

std::string PolyRing::to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (!m.exp[i]) continue;
    if (!out.empty()) out += '*';
    out += i < names_.size() ? names_[i] : "v" + std::to_string(i);
    if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// Element

namespace {

bool term_before(const Term& a, const Term& b) {
  if (a.comp != b.comp) return a.comp < b.comp;
  return compare_degrevlex(a.mon, b.mon) > 0;
}

bool same_slot(const Term& a, const Term& b) { return a.comp == b.comp && a.mon == b.mon; }

}  // namespace

Element Element::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  Element e;
  for (auto& t : terms) {
    if (!e.terms_.empty() && same_slot(e.terms_.back(), t)) {
      e.terms_.back().coeff += t.coeff;
      if (sgn(e.terms_.back().coeff) == 0) e.terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      e.terms_.push_back(std::move(t));
    }
  }
  return e;
}

Element Element::basis_vector(std::uint32_t comp, const Rational& c) {
  return monomial(Monomial{}, comp, c);
}

Element Element::monomial(const Monomial& m, std::uint32_t comp, const Rational& c) {
  Element e;
  if (sgn(c) != 0) e.terms_.push_back({m, comp, c});
  return e;
}

Element Element::component(std::uint32_t comp) const {
  Element e;
  for (const auto& t : terms_)
    if (t.comp == comp) e.terms_.push_back({t.mon, 0, t.coeff});
  return e;
}

Element Element::remap(const std::vector<std::uint32_t>& map) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.comp >= map.size()) throw Error("component remap is missing an entry");
    terms.push_back({t.mon, map[t.comp], t.coeff});
  }
  return from_terms(std::move(terms));
}

std::optional<int> Element::degree(const std::vector<int>& shifts) const {
  if (terms_.empty()) return std::nullopt;
  auto deg = [&](const Term& t) {
    int s = t.comp < shifts.size() ? shifts[t.comp] : 0;
    return static_cast<int>(t.mon.degree) + s;
  };
  int d = deg(terms_.front());
  for (const auto& t : terms_)
    if (deg(t) != d) return std::nullopt;
  return d;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && term_before(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || term_before(b[j], a[i])) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = a[i].coeff;
      if (subtract)
        c -= b[j].coeff;
      else
        c += b[j].coeff;
      if (sgn(c) != 0) out.push_back({a[i].mon, a[i].comp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Element& Element::operator+=(const Element& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Element& Element::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= s;
  }
  return *this;
}

Element Element::times(const Monomial& m) const {
  Element e;
  e.terms_.reserve(terms_.size());
  for (const auto& t : terms_) e.terms_.push_back({mul(m, t.mon), t.comp, t.coeff});
  return e;
}

Element operator*(const Element& poly, const Element& v) {
  std::vector<Term> terms;
  terms.reserve(poly.size() * v.size());
  for (const auto& p : poly.terms_) {
    if (p.comp != 0) throw Error("left factor must be a polynomial");
    for (const auto& t : v.terms_) terms.push_back({mul(p.mon, t.mon), t.comp, p.coeff * t.coeff});
  }
  return Element::from_terms(std::move(terms));
}

bool operator==(const Element& a, const Element& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!same_slot(a.terms_[i], b.terms_[i]) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string to_string(const Element& e, const PolyRing& ring, bool module) {
  if (e.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : e.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    std::string mon = t.mon.degree ? ring.to_string(t.mon) : "";
    std::string comp = module ? "e" + std::to_string(t.comp) : "";
    std::string body = mon;
    if (!comp.empty()) body = body.empty() ? comp : body + "*" + comp;
    if (body.empty()) {
      out << drep::to_string(c);
    } else {
      if (c != 1) out << drep::to_string(c) << "*";
      out << body;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Maps

Element FreeModuleMap::apply(const Element& v) const {
  Element out;
  std::vector<Term> terms;
  for (const auto& t : v.terms()) {
    if (t.comp >= columns.size()) throw Error("vector component exceeds the map's source rank");
    for (const auto& c : columns[t.comp].terms())
      terms.push_back({mul(t.mon, c.mon), c.comp, t.coeff * c.coeff});
  }
  return Element::from_terms(std::move(terms));
}

bool FreeModuleMap::is_homogeneous() const {
  for (std::size_t j = 0; j < columns.size(); ++j) {
    int s = j < source_shifts.size() ? source_shifts[j] : 0;
    for (const auto& t : columns[j].terms()) {
      int ts = t.comp < target_shifts.size() ? target_shifts[t.comp] : 0;
      if (static_cast<int>(t.mon.degree) + ts != s) return false;
    }
  }
  return true;
}

FreeModuleMap compose(const FreeModuleMap& outer, const FreeModuleMap& inner) {
  if (inner.target_rank != outer.source_rank()) throw Error("cannot compose maps of mismatched ranks");
  FreeModuleMap m;
  m.target_rank = outer.target_rank;
  m.source_shifts = inner.source_shifts;
  m.target_shifts = outer.target_shifts;
  for (const auto& c : inner.columns) m.columns.push_back(outer.apply(c));
  return m;
}

// ---------------------------------------------------------------------------
// Gröbner bases

class ReducerBase {
 public:
  virtual ~ReducerBase() = default;
  virtual Element normal_form(const Element& f) const = 0;
};

namespace {

template <class D>
class Reducer final : public ReducerBase {
 public:
  explicit Reducer(detail::Engine<D> engine) : engine_(std::move(engine)) {}
  Element normal_form(const Element& f) const override {
    Rational lambda = 1;
    auto v = engine_.import(f, &lambda);
    Rational mult = 1;
    auto rem = engine_.reduce(std::move(v), true, &mult);
    return engine_.export_vec(rem, mult * lambda);
  }

 private:
  detail::Engine<D> engine_;
};

}  // namespace

struct GroebnerAccess {
  template <class D>
  static GroebnerBasis build(std::size_t rank, std::vector<int> shifts,
                             const std::vector<Element>& inputs, const std::vector<int>& kinds,
                             const GroebnerOptions& options,
                             std::vector<std::size_t>* kept = nullptr) {
    detail::Engine<D> engine(rank, shifts, options.order);
    std::vector<typename detail::Engine<D>::Vec> vecs;
    vecs.reserve(inputs.size());
    for (const auto& e : inputs) {
      auto v = engine.import(e);
      engine.normalize(v);
      vecs.push_back(std::move(v));
    }
    auto run = engine.run(std::move(vecs), kinds, options.degree_bound);
    GroebnerBasis gb;
    gb.rank_ = rank;
    gb.shifts_ = engine.shifts();
    gb.order_ = options.order;
    gb.field_ = options.field;
    gb.complete_ = run.complete;
    gb.homogeneous_ = run.homogeneous;
    gb.stats_ = engine.stats();
    for (const auto& e : engine.basis()) {
      gb.leads_.emplace_back(e.v.front().comp, e.v.front().mon);
      if constexpr (std::is_same_v<D, detail::IntegerDomain>)
        gb.elements_.push_back(engine.export_vec(e.v, Rational(e.v.front().c)));
      else
        gb.elements_.push_back(engine.export_vec(e.v));
    }
    if (kept) *kept = std::move(run.kept_candidates);
    gb.reducer_ = std::make_shared<Reducer<D>>(std::move(engine));
    return gb;
  }

  static GroebnerBasis dispatch(std::size_t rank, std::vector<int> shifts,
                                const std::vector<Element>& inputs, const std::vector<int>& kinds,
                                const GroebnerOptions& options,
                                std::vector<std::size_t>* kept = nullptr) {
    if (options.field == Field::Prime)
      return build<detail::PrimeDomain>(rank, std::move(shifts), inputs, kinds, options, kept);
    return build<detail::IntegerDomain>(rank, std::move(shifts), inputs, kinds, options, kept);
  }
};

GroebnerBasis::GroebnerBasis() = default;

Element GroebnerBasis::normal_form(const Element& f) const {
  if (!reducer_) return f;
  return reducer_->normal_form(f);
}

std::vector<std::vector<Monomial>> GroebnerBasis::leading_monomials() const {
  std::vector<std::vector<Monomial>> out(rank_);
  for (const auto& [comp, mon] : leads_) out[comp].push_back(mon);
  return out;
}

GroebnerBasis buchberger(std::size_t rank, std::vector<int> shifts,
                         const std::vector<Element>& generators, const GroebnerOptions& options) {
  std::vector<int> kinds(generators.size(), 1);
  return GroebnerAccess::dispatch(rank, std::move(shifts), generators, kinds, options);
}

GroebnerBasis buchberger(const std::vector<Element>& polys, const GroebnerOptions& options) {
  return buchberger(1, {0}, polys, options);
}

Element normal_form(const Element& f, const GroebnerBasis& gb) { return gb.normal_form(f); }

MinimalSelection select_minimal(std::size_t rank, std::vector<int> shifts,
                                const std::vector<Element>& relations,
                                const std::vector<Element>& candidates,
                                const GroebnerOptions& options) {
  if (shifts.empty()) shifts.assign(rank, 0);
  std::vector<Element> inputs;
  std::vector<int> kinds;
  inputs.reserve(relations.size() + candidates.size());
  for (const auto& r : relations) {
    if (!r.is_zero() && !r.degree(shifts)) throw Error("minimal selection needs homogeneous relations");
    inputs.push_back(r);
    kinds.push_back(1);
  }
  for (const auto& c : candidates) {
    if (!c.is_zero() && !c.degree(shifts)) throw Error("minimal selection needs homogeneous candidates");
    inputs.push_back(c);
    kinds.push_back(2);
  }
  std::vector<std::size_t> kept;
  auto gb = GroebnerAccess::dispatch(rank, shifts, inputs, kinds, options, &kept);
  MinimalSelection sel;
  sel.complete = gb.complete();
  for (auto idx : kept) sel.kept.push_back(idx - relations.size());
  std::sort(sel.kept.begin(), sel.kept.end());
  for (auto idx : sel.kept) ++sel.count_by_degree[*candidates[idx].degree(shifts)];
  return sel;
}

SyzygyResult syzygies(const FreeModuleMap& m, const GroebnerOptions& options) {
  const std::size_t q = m.target_rank;
  const std::size_t r = m.source_rank();
  std::vector<int> shifts = m.target_shifts;
  if (shifts.empty()) shifts.assign(q, 0);
  std::vector<int> source = m.source_shifts;
  if (source.empty()) source.assign(r, 0);
  shifts.insert(shifts.end(), source.begin(), source.end());

  std::vector<Element> graph;
  graph.reserve(r);
  for (std::size_t j = 0; j < r; ++j) {
    Element g = m.columns[j];
    g += Element::basis_vector(static_cast<std::uint32_t>(q + j));
    graph.push_back(std::move(g));
  }
  GroebnerOptions opts = options;
  opts.order = OrderKind::PositionOverTerm;
  auto gb = buchberger(q + r, shifts, graph, opts);

  std::vector<std::uint32_t> back(q + r, 0);
  for (std::size_t j = 0; j < r; ++j) back[q + j] = static_cast<std::uint32_t>(j);
  std::vector<Element> kernel;
  for (std::size_t i = 0; i < gb.elements().size(); ++i) {
    if (gb.leads_of(i).first < q) continue;
    kernel.push_back(gb.elements()[i].remap(back));
  }

  SyzygyResult out;
  out.complete = gb.complete();
  if (gb.homogeneous() && m.is_homogeneous()) {
    auto sel = select_minimal(r, source, {}, kernel, opts);
    for (auto idx : sel.kept) out.generators.push_back(std::move(kernel[idx]));
    out.complete = out.complete && sel.complete;
  } else {
    out.generators = std::move(kernel);
  }
  return out;
}

std::size_t MinimalGenerators::total() const {
  std::size_t t = 0;
  for (const auto& [d, c] : count_by_degree) t += c;
  return t;
}

bool ModulePresentation::is_homogeneous() const {
  for (const auto& r : relations)
    if (!r.is_zero() && !r.degree(generator_degrees)) return false;
  return true;
}

MinimalGenerators minimal_generators(const ModulePresentation& mp, const GroebnerOptions& options) {
  if (!mp.is_homogeneous()) throw Error("minimal generators need a homogeneous presentation");
  std::vector<Element> basis;
  for (std::size_t i = 0; i < mp.rank(); ++i)
    basis.push_back(Element::basis_vector(static_cast<std::uint32_t>(i)));
  auto sel = select_minimal(mp.rank(), mp.generator_degrees, mp.relations, basis, options);
  MinimalGenerators out;
  out.count_by_degree = std::move(sel.count_by_degree);
  out.generator_indices = std::move(sel.kept);
  out.complete = sel.complete;
  return out;
}

}  // namespace drep::gb
