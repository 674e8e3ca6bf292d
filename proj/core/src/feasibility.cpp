#include "troppic/feasibility.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace troppic {

namespace {

// Inequality a.x > b (strict) or a.x >= b.
struct Ineq {
  std::vector<Rational> a;
  Rational b;
  bool strict = false;
};

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

// Scales so the first nonzero coefficient has absolute value 1 and merges
// parallel rows, keeping the tightest bound. Returns false if a constant row
// is violated.
bool normalize(std::vector<Ineq>& rows) {
  std::map<std::vector<Rational>, std::pair<Rational, bool>> merged;
  for (auto& r : rows) {
    auto lead = std::find_if(r.a.begin(), r.a.end(),
                             [](const Rational& v) { return v != 0; });
    if (lead == r.a.end()) {
      if (r.strict ? !(0 > r.b) : !(0 >= r.b)) return false;
      continue;
    }
    const Rational scale = *lead < 0 ? Rational(-*lead) : *lead;
    for (auto& v : r.a) v /= scale;
    r.b /= scale;
    auto [it, inserted] = merged.try_emplace(r.a, r.b, r.strict);
    if (!inserted) {
      auto& [b, strict] = it->second;
      if (r.b > b) {
        b = r.b;
        strict = r.strict;
      } else if (r.b == b) {
        strict = strict || r.strict;
      }
    }
  }
  rows.clear();
  for (auto& [a, bs] : merged) rows.push_back(Ineq{a, bs.first, bs.second});
  return true;
}

// Equality x_var = (rhs - sum_{j != var} a_j x_j) / a_var, recorded for
// back-substitution.
struct Substitution {
  std::size_t var;
  std::vector<Rational> a;
  Rational rhs;
};

}  // namespace

LinearConstraint make_constraint(const IntVector& coeffs, Relation rel,
                                 const Rational& rhs) {
  LinearConstraint c;
  c.coeffs.reserve(coeffs.size());
  for (const auto& v : coeffs) c.coeffs.emplace_back(v);
  c.rhs = rhs;
  c.rel = rel;
  return c;
}

bool satisfies(const LinearConstraint& c, const std::vector<Rational>& x) {
  const Rational lhs = dot(c.coeffs, x);
  switch (c.rel) {
    case Relation::Greater: return lhs > c.rhs;
    case Relation::GreaterEqual: return lhs >= c.rhs;
    case Relation::Equal: return lhs == c.rhs;
  }
  return false;
}

std::optional<std::vector<Rational>> find_point(
    std::size_t dim, const std::vector<LinearConstraint>& constraints) {
  std::vector<std::pair<std::vector<Rational>, Rational>> equalities;
  std::vector<Ineq> rows;
  for (const auto& c : constraints) {
    if (c.coeffs.size() != dim) throw InputError("constraint dimension mismatch");
    if (c.rel == Relation::Equal)
      equalities.emplace_back(c.coeffs, c.rhs);
    else
      rows.push_back(Ineq{c.coeffs, c.rhs, c.rel == Relation::Greater});
  }

  // Gaussian elimination of the equalities.
  std::vector<Substitution> subs;
  while (!equalities.empty()) {
    auto [a, rhs] = std::move(equalities.back());
    equalities.pop_back();
    auto lead = std::find_if(a.begin(), a.end(), [](const Rational& v) { return v != 0; });
    if (lead == a.end()) {
      if (rhs != 0) return std::nullopt;
      continue;
    }
    const auto var = static_cast<std::size_t>(lead - a.begin());
    const Rational pivot = a[var];
    for (auto& v : a) v /= pivot;
    rhs /= pivot;
    auto eliminate = [&](std::vector<Rational>& row, Rational& row_rhs) {
      const Rational f = row[var];
      if (f == 0) return;
      for (std::size_t j = 0; j < dim; ++j) row[j] -= f * a[j];
      row_rhs -= f * rhs;
    };
    for (auto& [ea, eb] : equalities) eliminate(ea, eb);
    for (auto& r : rows) eliminate(r.a, r.b);
    subs.push_back(Substitution{var, a, rhs});
  }

  if (!normalize(rows)) return std::nullopt;

  // Fourier-Motzkin: eliminate every variable that still occurs.
  std::vector<std::pair<std::size_t, std::vector<Ineq>>> stages;
  for (;;) {
    std::size_t best = dim;
    std::size_t best_cost = 0;
    for (std::size_t v = 0; v < dim; ++v) {
      std::size_t pos = 0, neg = 0;
      for (const auto& r : rows) {
        if (r.a[v] > 0) ++pos;
        if (r.a[v] < 0) ++neg;
      }
      if (pos + neg == 0) continue;
      const std::size_t cost = pos * neg;
      if (best == dim || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    if (best == dim) break;

    std::vector<Ineq> next;
    std::vector<const Ineq*> pos, neg;
    for (const auto& r : rows) {
      if (r.a[best] > 0)
        pos.push_back(&r);
      else if (r.a[best] < 0)
        neg.push_back(&r);
      else
        next.push_back(r);
    }
    for (const Ineq* p : pos)
      for (const Ineq* n : neg) {
        const Rational fp = -n->a[best];
        const Rational fn = p->a[best];
        Ineq c;
        c.a.resize(dim);
        for (std::size_t j = 0; j < dim; ++j) c.a[j] = fp * p->a[j] + fn * n->a[j];
        c.a[best] = 0;
        c.b = fp * p->b + fn * n->b;
        c.strict = p->strict || n->strict;
        next.push_back(std::move(c));
      }
    stages.emplace_back(best, std::move(rows));
    rows = std::move(next);
    if (!normalize(rows)) return std::nullopt;
  }

  // Back-substitution through the stages.
  std::vector<Rational> x(dim, Rational(0));
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    const std::size_t v = it->first;
    std::optional<std::pair<Rational, bool>> lo, hi;
    for (const auto& r : it->second) {
      if (r.a[v] == 0) continue;
      Rational rest = r.b;
      for (std::size_t j = 0; j < dim; ++j)
        if (j != v) rest -= r.a[j] * x[j];
      const Rational bound = rest / r.a[v];
      if (r.a[v] > 0) {
        if (!lo || bound > lo->first || (bound == lo->first && r.strict))
          lo = std::make_pair(bound, r.strict);
      } else {
        if (!hi || bound < hi->first || (bound == hi->first && r.strict))
          hi = std::make_pair(bound, r.strict);
      }
    }
    if (lo && hi)
      x[v] = lo->first == hi->first ? lo->first : (lo->first + hi->first) / 2;
    else if (lo)
      x[v] = lo->first + 1;
    else if (hi)
      x[v] = hi->first - 1;
  }
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    Rational val = it->rhs;
    for (std::size_t j = 0; j < dim; ++j)
      if (j != it->var) val -= it->a[j] * x[j];
    x[it->var] = val;
  }
  return x;
}

}  // namespace troppic
