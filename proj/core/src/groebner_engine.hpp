// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

// Buchberger engine shared by the rational (primitive integer) and the
// prime-field coefficient domains. Private to the library.

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "drep/groebner.hpp"

namespace drep::gb::detail {

struct PrimeDomain {
  using value_type = std::uint32_t;
  static constexpr std::uint64_t p = kPrime;

  static bool is_zero(value_type a) { return a == 0; }
  static bool is_one(value_type a) { return a == 1; }
  static value_type mul(value_type a, value_type b) {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p);
  }
  static value_type sub(value_type a, value_type b) {
    return a >= b ? a - b : static_cast<value_type>(a + p - b);
  }
  static value_type neg(value_type a) { return a == 0 ? 0 : static_cast<value_type>(p - a); }
  static value_type inv(value_type a) {
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
  static value_type from_integer(const Integer& z) {
    Integer r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return static_cast<value_type>(r.get_ui());
  }
  static value_type from_rational(const Rational& q) {
    value_type den = from_integer(q.get_den());
    if (den == 0) throw Error("rational coefficient not defined modulo the working prime");
    return mul(from_integer(q.get_num()), inv(den));
  }

  // fa * a - ga * b == 0
  static void cancel(value_type a, value_type b, value_type& fa, value_type& ga) {
    fa = 1;
    ga = mul(a, inv(b));
  }
  static value_type combo(value_type fa, const value_type& x, value_type ga, const value_type& y) {
    return sub(mul(fa, x), mul(ga, y));
  }
  static value_type scale(value_type fa, const value_type& x) { return mul(fa, x); }
  static value_type negmul(value_type ga, const value_type& y) { return neg(mul(ga, y)); }
};

struct IntegerDomain {
  using value_type = Integer;

  static bool is_zero(const value_type& a) { return sgn(a) == 0; }
  static bool is_one(const value_type& a) { return a == 1; }

  static void cancel(const value_type& a, const value_type& b, value_type& fa, value_type& ga) {
    Integer h;
    mpz_gcd(h.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_divexact(fa.get_mpz_t(), b.get_mpz_t(), h.get_mpz_t());
    mpz_divexact(ga.get_mpz_t(), a.get_mpz_t(), h.get_mpz_t());
    if (sgn(fa) < 0) {
      fa = -fa;
      ga = -ga;
    }
  }
  static value_type combo(const value_type& fa, const value_type& x, const value_type& ga,
                          const value_type& y) {
    return fa * x - ga * y;
  }
  static value_type scale(const value_type& fa, const value_type& x) { return fa * x; }
  static value_type negmul(const value_type& ga, const value_type& y) { return -(ga * y); }
};

template <class D>
class Engine {
 public:
  using C = typename D::value_type;
  struct T {
    Monomial mon;
    std::uint32_t comp;
    C c;
  };
  using Vec = std::vector<T>;

  struct Elem {
    Vec v;
    int sugar = 0;
    bool redundant = false;
  };

  Engine(std::size_t rank, std::vector<int> shifts, OrderKind kind)
      : rank_(rank), shifts_(std::move(shifts)), kind_(kind), buckets_(rank) {
    if (shifts_.empty()) shifts_.assign(rank_, 0);
    if (shifts_.size() != rank_) throw Error("module shifts do not match the rank");
  }

  std::size_t rank() const { return rank_; }
  const std::vector<int>& shifts() const { return shifts_; }

  int cmp(const Monomial& am, std::uint32_t ac, const Monomial& bm, std::uint32_t bc) const {
    if (kind_ == OrderKind::PositionOverTerm) {
      if (ac != bc) return ac < bc ? 1 : -1;
      return compare_degrevlex(am, bm);
    }
    int da = static_cast<int>(am.degree) + shifts_[ac];
    int db = static_cast<int>(bm.degree) + shifts_[bc];
    if (da != db) return da > db ? 1 : -1;
    int c = compare_degrevlex(am, bm);
    if (c) return c;
    if (ac != bc) return ac < bc ? 1 : -1;
    return 0;
  }

  void sort_desc(Vec& v) const {
    std::sort(v.begin(), v.end(),
              [&](const T& a, const T& b) { return cmp(a.mon, a.comp, b.mon, b.comp) > 0; });
  }

  int weighted_degree(const T& t) const { return static_cast<int>(t.mon.degree) + shifts_[t.comp]; }

  std::optional<int> homogeneous_degree(const Vec& v) const {
    if (v.empty()) return std::nullopt;
    int d = weighted_degree(v.front());
    for (const auto& t : v)
      if (weighted_degree(t) != d) return std::nullopt;
    return d;
  }

  int sugar_of(const Vec& v) const {
    int s = 0;
    for (const auto& t : v) s = std::max(s, weighted_degree(t));
    return s;
  }

  // Converts a rational element; `scale` receives the factor lambda with
  // result = lambda * input.
  Vec import(const Element& e, Rational* scale = nullptr) const {
    Vec v;
    v.reserve(e.size());
    if constexpr (std::is_same_v<D, PrimeDomain>) {
      for (const auto& t : e.terms()) {
        if (t.comp >= rank_) throw Error("element component exceeds module rank");
        auto c = D::from_rational(t.coeff);
        if (!D::is_zero(c)) v.push_back({t.mon, t.comp, c});
      }
      if (scale) *scale = 1;
    } else {
      Integer den = 1;
      for (const auto& t : e.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
      for (const auto& t : e.terms()) {
        if (t.comp >= rank_) throw Error("element component exceeds module rank");
        Integer c = t.coeff.get_num() * (den / t.coeff.get_den());
        v.push_back({t.mon, t.comp, std::move(c)});
      }
      if (scale) *scale = Rational(den);
    }
    sort_desc(v);
    return v;
  }

  // Rational element from a domain vector, divided by `divisor`.
  Element export_vec(const Vec& v, const Rational& divisor = 1) const {
    std::vector<Term> terms;
    terms.reserve(v.size());
    for (const auto& t : v) {
      Rational c;
      if constexpr (std::is_same_v<D, PrimeDomain>)
        c = Rational(static_cast<unsigned long>(t.c));
      else
        c = Rational(t.c);
      if (divisor != 1) c /= divisor;
      terms.push_back({t.mon, t.comp, std::move(c)});
    }
    return Element::from_terms(std::move(terms));
  }

  // Makes the leading coefficient 1 (prime) or the vector primitive with a
  // positive leading coefficient (integers).
  void normalize(Vec& v) const {
    if (v.empty()) return;
    if constexpr (std::is_same_v<D, PrimeDomain>) {
      auto inv = D::inv(v.front().c);
      if (inv != 1)
        for (auto& t : v) t.c = D::mul(t.c, inv);
    } else {
      Integer g = 0;
      for (const auto& t : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
      }
      if (sgn(v.front().c) < 0) g = -g;
      if (g != 1)
        for (auto& t : v) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    }
  }

  // out = fa * f[fs..] - ga * q * g[gs..]; consumes f.
  void axpy(Vec& out, const C& fa, Vec& f, std::size_t fs, const C& ga, const Monomial& q,
            const Vec& g, std::size_t gs) const {
    out.clear();
    out.reserve(f.size() - fs + g.size() - gs);
    const bool unit = D::is_one(fa);
    std::size_t i = fs, j = gs;
    Monomial m;
    if (j < g.size()) m = mul(q, g[j].mon);
    while (i < f.size() && j < g.size()) {
      int c = cmp(f[i].mon, f[i].comp, m, g[j].comp);
      if (c > 0) {
        if (unit)
          out.push_back(std::move(f[i]));
        else
          out.push_back({f[i].mon, f[i].comp, D::scale(fa, f[i].c)});
        ++i;
      } else if (c < 0) {
        out.push_back({m, g[j].comp, D::negmul(ga, g[j].c)});
        if (++j < g.size()) m = mul(q, g[j].mon);
      } else {
        C v = D::combo(fa, f[i].c, ga, g[j].c);
        if (!D::is_zero(v)) out.push_back({f[i].mon, f[i].comp, std::move(v)});
        ++i;
        if (++j < g.size()) m = mul(q, g[j].mon);
      }
    }
    for (; i < f.size(); ++i) {
      if (unit)
        out.push_back(std::move(f[i]));
      else
        out.push_back({f[i].mon, f[i].comp, D::scale(fa, f[i].c)});
    }
    for (; j < g.size(); ++j) out.push_back({mul(q, g[j].mon), g[j].comp, D::negmul(ga, g[j].c)});
  }

  int find_reducer(const Monomial& mon, std::uint32_t comp, std::optional<std::size_t> skip = {}) const {
    int best = -1;
    std::size_t best_len = 0;
    for (auto idx : buckets_[comp]) {
      if (skip && *skip == idx) continue;
      const auto& lead = basis_[idx].v.front().mon;
      if (lead.degree > mon.degree || (lead.mask & ~mon.mask) != 0) continue;
      if (!divides(lead, mon)) continue;
      std::size_t len = basis_[idx].v.size();
      if (best < 0 || len < best_len) {
        best = static_cast<int>(idx);
        best_len = len;
      }
    }
    return best;
  }

  void content_reduce(Vec& rem, Vec& f, std::size_t pos, Rational* mult) const {
    if constexpr (std::is_same_v<D, IntegerDomain>) {
      Integer g = 0;
      for (const auto& t : rem) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) return;
      }
      for (std::size_t i = pos; i < f.size(); ++i) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f[i].c.get_mpz_t());
        if (g == 1) return;
      }
      if (g == 0 || g == 1) return;
      for (auto& t : rem) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
      for (std::size_t i = pos; i < f.size(); ++i)
        mpz_divexact(f[i].c.get_mpz_t(), f[i].c.get_mpz_t(), g.get_mpz_t());
      if (mult) *mult /= Rational(g);
    } else {
      (void)rem;
      (void)f;
      (void)pos;
      (void)mult;
    }
  }

  // Reduces f by the current basis. With `full`, every term is reduced;
  // otherwise only the leading term. `mult` (integers only) accumulates the
  // factor lambda with result == lambda * (f mod basis).
  Vec reduce(Vec f, bool full, Rational* mult = nullptr, std::optional<std::size_t> skip = {}) const {
    Vec rem, buf;
    std::size_t pos = 0;
    unsigned steps = 0;
    while (pos < f.size()) {
      const T& t = f[pos];
      int r = find_reducer(t.mon, t.comp, skip);
      if (r < 0) {
        if (!full) {
          for (std::size_t i = pos; i < f.size(); ++i) rem.push_back(std::move(f[i]));
          break;
        }
        rem.push_back(std::move(f[pos]));
        ++pos;
        continue;
      }
      const Vec& g = basis_[r].v;
      Monomial q = quotient(t.mon, g.front().mon);
      C fa, ga;
      D::cancel(t.c, g.front().c, fa, ga);
      axpy(buf, fa, f, pos + 1, ga, q, g, 1);
      if (!D::is_one(fa)) {
        for (auto& x : rem) x.c = D::scale(fa, x.c);
        if constexpr (std::is_same_v<D, IntegerDomain>)
          if (mult) *mult *= Rational(fa);
      }
      f.swap(buf);
      pos = 0;
      if constexpr (std::is_same_v<D, IntegerDomain>) {
        if (++steps % 16 == 0 || (!f.empty() && mpz_sizeinbase(f.front().c.get_mpz_t(), 2) > 512))
          content_reduce(rem, f, 0, mult);
      }
    }
    return rem;
  }

  // ---------------------------------------------------------------------
  // Buchberger

  enum Kind : int { kPair = 0, kRelation = 1, kCandidate = 2 };

  struct Key {
    int sugar;
    int kind;
    Monomial lcm;
    std::uint32_t comp;
    std::uint32_t i;
    std::uint32_t j;
  };

  struct KeyLess {
    const Engine* e;
    bool operator()(const Key& a, const Key& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      if (a.kind != b.kind) return a.kind < b.kind;
      if (a.kind == kPair) {
        int c = e->cmp(a.lcm, a.comp, b.lcm, b.comp);
        if (c) return c < 0;
      }
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  struct RunResult {
    std::vector<std::size_t> kept_candidates;
    bool complete = true;
    bool homogeneous = true;
  };

  RunResult run(std::vector<Vec> inputs, std::vector<int> kinds, std::optional<int> bound) {
    RunResult result;
    for (const auto& v : inputs)
      if (!v.empty() && !homogeneous_degree(v)) result.homogeneous = false;
    homogeneous_ = result.homogeneous;
    std::set<Key, KeyLess> queue(KeyLess{this});
    for (std::uint32_t i = 0; i < inputs.size(); ++i) {
      if (inputs[i].empty()) continue;
      queue.insert(Key{sugar_of(inputs[i]), kinds[i], Monomial{}, 0, i, 0});
    }
    while (!queue.empty()) {
      Key key = *queue.begin();
      if (result.homogeneous && bound && key.sugar > *bound) {
        result.complete = false;
        break;
      }
      queue.erase(queue.begin());
      Vec h;
      if (key.kind == kPair) {
        ++stats_.pairs_reduced;
        h = spoly(key.i, key.j, key.lcm);
      } else {
        h = std::move(inputs[key.i]);
      }
      h = reduce(std::move(h), true);
      if (h.empty()) {
        if (key.kind == kPair) ++stats_.zero_reductions;
        continue;
      }
      normalize(h);
      if (key.kind == kCandidate) result.kept_candidates.push_back(key.i);
      insert(std::move(h), key.sugar, queue);
    }
    finalize();
    return result;
  }

  Vec spoly(std::uint32_t i, std::uint32_t j, const Monomial& l) const {
    const Vec& gi = basis_[i].v;
    const Vec& gj = basis_[j].v;
    Monomial qi = quotient(l, gi.front().mon);
    Monomial qj = quotient(l, gj.front().mon);
    Vec first;
    first.reserve(gi.size());
    for (const auto& t : gi) first.push_back({mul(qi, t.mon), t.comp, t.c});
    C fa, ga;
    D::cancel(gi.front().c, gj.front().c, fa, ga);
    Vec out;
    axpy(out, fa, first, 1, ga, qj, gj, 1);
    return out;
  }

  void insert(Vec h, int sugar, std::set<Key, KeyLess>& queue) {
    const std::uint32_t t = static_cast<std::uint32_t>(basis_.size());
    const Monomial lt = h.front().mon;
    const std::uint32_t comp = h.front().comp;
    basis_.push_back(Elem{std::move(h), sugar, false});

    struct Cand {
      std::uint32_t i;
      Monomial lcm;
      bool coprime;
    };
    const bool ideal = rank_ == 1;
    std::vector<Cand> cands;
    for (auto idx : buckets_[comp]) {
      const Monomial& li = basis_[idx].v.front().mon;
      cands.push_back({idx, lcm(li, lt), ideal && coprime(li, lt)});
    }

    // Chain criterion on the existing pairs.
    for (auto it = queue.begin(); it != queue.end();) {
      const Key& k = *it;
      if (k.kind == kPair && k.comp == comp && divides(lt, k.lcm)) {
        Monomial li = lcm(basis_[k.i].v.front().mon, lt);
        Monomial lj = lcm(basis_[k.j].v.front().mon, lt);
        if (!(li == k.lcm) && !(lj == k.lcm)) {
          it = queue.erase(it);
          ++stats_.chain_criterion;
          continue;
        }
      }
      ++it;
    }

    // Gebauer-Möller on the new pairs.
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const Cand& p = cands[a];
      bool keep = p.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cands.size() && keep; ++b)
          if (divides(cands[b].lcm, p.lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (divides(kept[b].lcm, p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    for (const auto& p : kept) {
      if (p.coprime) {
        ++stats_.product_criterion;
        continue;
      }
      const Elem& ei = basis_[p.i];
      int si = ei.sugar + static_cast<int>(p.lcm.degree) - static_cast<int>(ei.v.front().mon.degree);
      int st = sugar + static_cast<int>(p.lcm.degree) - static_cast<int>(lt.degree);
      queue.insert(Key{std::max(si, st), kPair, p.lcm, comp, p.i, t});
      ++stats_.pairs_created;
    }

    auto& bucket = buckets_[comp];
    bucket.erase(std::remove_if(bucket.begin(), bucket.end(),
                                [&](std::uint32_t idx) {
                                  if (divides(lt, basis_[idx].v.front().mon)) {
                                    basis_[idx].redundant = true;
                                    return true;
                                  }
                                  return false;
                                }),
                 bucket.end());
    bucket.push_back(t);
  }

  // Keeps the minimal basis, interreduces tails and sorts by leading term.
  void finalize() {
    std::vector<Elem> minimal;
    for (auto& e : basis_)
      if (!e.redundant) minimal.push_back(std::move(e));
    basis_ = std::move(minimal);
    rebuild_buckets();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      Vec& v = basis_[i].v;
      Vec tail(std::make_move_iterator(v.begin() + 1), std::make_move_iterator(v.end()));
      T lead = std::move(v.front());
      // Reduce the tail; scaling the tail scales the lead as well.
      Rational mult = 1;
      Vec reduced = reduce(std::move(tail), true, &mult, i);
      if constexpr (std::is_same_v<D, IntegerDomain>) {
        // lead * mult (mult is an integer ratio; reduce() only multiplies by
        // integers and divides by common contents of the tail).
        Integer num = mult.get_num(), den = mult.get_den();
        // tail_reduced = mult * tail (mod basis); rescale to integers:
        // new vector = num * lead + den * tail_reduced / ... keep it primitive.
        Vec out;
        out.reserve(reduced.size() + 1);
        out.push_back({lead.mon, lead.comp, lead.c * num});
        for (auto& x : reduced) out.push_back({x.mon, x.comp, x.c * den});
        v = std::move(out);
      } else {
        (void)mult;
        Vec out;
        out.reserve(reduced.size() + 1);
        out.push_back(std::move(lead));
        for (auto& x : reduced) out.push_back(std::move(x));
        v = std::move(out);
      }
      normalize(v);
    }
    std::sort(basis_.begin(), basis_.end(), [&](const Elem& a, const Elem& b) {
      return cmp(a.v.front().mon, a.v.front().comp, b.v.front().mon, b.v.front().comp) < 0;
    });
    rebuild_buckets();
  }

  void rebuild_buckets() {
    for (auto& b : buckets_) b.clear();
    for (std::uint32_t i = 0; i < basis_.size(); ++i)
      if (!basis_[i].redundant) buckets_[basis_[i].v.front().comp].push_back(i);
  }

  const std::vector<Elem>& basis() const { return basis_; }
  const GroebnerStats& stats() const { return stats_; }
  bool homogeneous() const { return homogeneous_; }

 private:
  std::size_t rank_;
  std::vector<int> shifts_;
  OrderKind kind_;
  std::vector<Elem> basis_;
  std::vector<std::vector<std::uint32_t>> buckets_;
  GroebnerStats stats_;
  bool homogeneous_ = true;
};

}  // namespace drep::gb::detail
