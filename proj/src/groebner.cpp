#include "fiberbound/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "fiberbound/errors.hpp"

namespace fiberbound {

namespace {

// p[head..] - c*m*(g without its leading term), merged in order.
std::vector<Term> subtract_multiple(const PolyRing& R, const std::vector<Term>& p, std::size_t head,
                                    const Scalar& c, const Monomial& m, const Poly& g) {
  const FieldSpec& F = R.field();
  const auto& gt = g.terms();
  std::vector<Term> out;
  out.reserve(p.size() - head + gt.size());
  std::size_t i = head, j = 1;
  while (i < p.size() && j < gt.size()) {
    Monomial mj = gt[j].mono * m;
    auto cmp = R.compare(p[i].mono, mj);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{std::move(mj), F.neg(F.mul(c, gt[j].coef))});
      ++j;
    } else {
      Scalar s = p[i].coef;
      F.sub_mul(s, c, gt[j].coef);
      if (sgn(s) != 0) out.push_back(Term{std::move(mj), std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < p.size(); ++i) out.push_back(p[i]);
  for (; j < gt.size(); ++j) out.push_back(Term{gt[j].mono * m, F.neg(F.mul(c, gt[j].coef))});
  return out;
}

Poly from_sorted_terms(const RingPtr& ring, std::vector<Term> terms) {
  // Already canonical; the constructor's sort is stable on sorted input.
  return Poly(ring, std::move(terms));
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  const Monomial l = lcm(f.leading().mono, g.leading().mono);
  const FieldSpec& F = f.ring()->field();
  Poly a = f.times_monomial(l.quotient(f.leading().mono), F.inv(f.leading().coef));
  Poly b = g.times_monomial(l.quotient(g.leading().mono), F.inv(g.leading().coef));
  return a - b;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

Poly reduce(const Poly& f, std::span<const Poly> divisors) {
  const PolyRing& R = *f.ring();
  const FieldSpec& F = R.field();
  for (const auto& d : divisors)
    if (!same_ring(d.ring(), f.ring())) throw RingMismatch();
  std::vector<Term> p = f.terms();
  std::vector<Term> rem;
  std::size_t head = 0;
  while (head < p.size()) {
    const Term& lt = p[head];
    const Poly* red = nullptr;
    for (const auto& d : divisors) {
      if (!d.is_zero() && d.leading().mono.divides(lt.mono)) {
        red = &d;
        break;
      }
    }
    if (!red) {
      rem.push_back(lt);
      ++head;
      continue;
    }
    Scalar c = F.div(lt.coef, red->leading().coef);
    Monomial m = lt.mono.quotient(red->leading().mono);
    p = subtract_multiple(R, p, head + 1, c, m, *red);
    head = 0;
  }
  return from_sorted_terms(f.ring(), std::move(rem));
}

std::vector<Poly> buchberger(std::span<const Poly> gens) {
  std::vector<Poly> G;
  for (const auto& g : gens) {
    if (!G.empty() && !same_ring(G.front().ring(), g.ring())) throw RingMismatch();
    if (!g.is_zero()) G.push_back(g.monic());
  }
  if (G.empty()) throw InvalidArgument("Groebner basis of the zero ideal requested");
  const PolyRing& R = *G.front().ring();

  // The reduced basis is unique; sorting only fixes the pair numbering.
  std::sort(G.begin(), G.end(), [&R](const Poly& a, const Poly& b) {
    return R.compare(a.leading().mono, b.leading().mono) < 0;
  });

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      pending.push_back(Pair{i, k, lcm(G[i].leading().mono, G[k].leading().mono)});
      pending_keys.insert({i, k});
    }
  };
  for (std::size_t k = 0; k < G.size(); ++k) add_pairs_for(k);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending_keys.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    // Normal strategy: smallest lcm (degree first, then order), then indices.
    auto best = std::min_element(pending.begin(), pending.end(), [&R](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      auto c = R.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    Pair pr = *best;
    pending.erase(best);
    pending_keys.erase({pr.i, pr.j});

    const Monomial& li = G[pr.i].leading().mono;
    const Monomial& lj = G[pr.j].leading().mono;
    if (gcd(li, lj).is_one()) continue;  // product criterion

    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (G[k].leading().mono.divides(pr.lcm) && !is_pending(pr.i, k) && !is_pending(pr.j, k))
        chain = true;
    }
    if (chain) continue;

    Poly h = reduce(s_polynomial(G[pr.i], G[pr.j]), G);
    if (h.is_zero()) continue;
    G.push_back(h.monic());
    add_pairs_for(G.size() - 1);
  }

  // Minimalize.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = G[i].leading().mono;
      const Monomial& mj = G[j].leading().mono;
      if (mj.divides(mi) && (!(mj == mi) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  // Interreduce: tails reduced against the other elements.
  std::vector<Poly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(reduce(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&R](const Poly& a, const Poly& b) {
    return R.compare(a.leading().mono, b.leading().mono) < 0;
  });
  return reduced;
}

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(std::vector<Poly> gens)
    : ring_(gens.empty() ? RingPtr() : gens.front().ring()),
      gens_(std::move(gens)),
      cache_(std::make_shared<Cache>()) {
  validate();
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  validate();
}

void Ideal::validate() const {
  if (gens_.empty() || !ring_) throw InvalidArgument("an ideal needs at least one generator");
  for (const auto& g : gens_)
    if (!same_ring(g.ring(), ring_)) throw RingMismatch();
}

const std::vector<Poly>& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = buchberger(gens_); });
  return cache_->basis;
}

Poly Ideal::normal_form(const Poly& f) const {
  if (!same_ring(f.ring(), ring_)) throw RingMismatch();
  return reduce(f, groebner_basis());
}

bool Ideal::is_proper() const {
  const auto& gb = groebner_basis();
  return !(gb.size() == 1 && gb.front().leading().mono.is_one());
}

bool Ideal::same_as(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) return false;
  const auto& a = groebner_basis();
  const auto& b = other.groebner_basis();
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

Ideal Ideal::in_ring(RingPtr other) const {
  std::vector<Poly> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.in_ring(other));
  return Ideal(std::move(other), std::move(gens));
}

namespace {

void dedupe(std::vector<Poly>& polys) {
  std::vector<Poly> out;
  for (auto& p : polys) {
    if (p.is_zero()) continue;
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  if (out.empty()) out.push_back(Poly(polys.front().ring()));
  polys = std::move(out);
}

}  // namespace

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  std::vector<Poly> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  std::vector<Poly> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  dedupe(gens);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, unsigned k) {
  if (k == 0) throw InvalidArgument("ideal power exponent must be at least 1");
  Ideal result = a;
  for (unsigned i = 1; i < k; ++i) result = ideal_product(result, a);
  return result;
}

Ideal ideal_ops(IdealOp op, const Ideal& a, const Ideal& b) {
  return op == IdealOp::sum ? ideal_sum(a, b) : ideal_product(a, b);
}

bool is_zero_dimensional(const Ideal& ideal) {
  if (!ideal.is_proper()) throw ImproperIdeal();
  const std::size_t n = ideal.ring()->nvars();
  std::vector<bool> has_pure_power(n, false);
  for (const auto& g : ideal.groebner_basis()) {
    const Monomial& m = g.leading().mono;
    std::size_t support = 0, last = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) {
        ++support;
        last = i;
      }
    if (support == 1) has_pure_power[last] = true;
  }
  return std::all_of(has_pure_power.begin(), has_pure_power.end(), [](bool b) { return b; });
}

std::vector<Monomial> standard_monomials(const Ideal& ideal) {
  if (!is_zero_dimensional(ideal)) throw NotZeroDimensional();
  const PolyRing& R = *ideal.ring();
  const auto& gb = ideal.groebner_basis();
  auto is_standard = [&gb](const Monomial& m) {
    return std::none_of(gb.begin(), gb.end(), [&m](const Poly& g) { return g.leading().mono.divides(m); });
  };
  // Standard monomials are closed under division: grow degree by degree.
  std::vector<Monomial> all;
  std::vector<Monomial> frontier{Monomial(R.nvars())};
  while (!frontier.empty()) {
    all.insert(all.end(), frontier.begin(), frontier.end());
    std::vector<Monomial> next;
    for (const auto& m : frontier)
      for (std::size_t i = 0; i < R.nvars(); ++i) {
        Monomial c = m.times_variable(i);
        if (is_standard(c) && std::find(next.begin(), next.end(), c) == next.end()) next.push_back(c);
      }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [&R](const Monomial& a, const Monomial& b) { return R.compare(a, b) < 0; });
  return all;
}

int krull_dimension(const Ideal& ideal) {
  if (!ideal.is_proper()) return -1;
  const std::size_t n = ideal.ring()->nvars();
  if (n > 20) throw InvalidArgument("dimension computation limited to 20 variables");
  std::vector<std::uint32_t> supports;
  for (const auto& g : ideal.groebner_basis()) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g.leading().mono[i]) s |= 1u << i;
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    int size = __builtin_popcount(set);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [set](std::uint32_t s) { return (s & ~set) == 0; });
    if (independent) best = size;
  }
  return best;
}

}  // namespace fiberbound
