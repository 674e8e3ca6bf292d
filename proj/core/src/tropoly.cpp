#include "troppic/tropoly.hpp"

#include "troppic/feasibility.hpp"

namespace troppic {

std::optional<std::vector<Rational>> domination_point(const TropRatPolynomial& p,
                                                      const IntVector& exponent) {
  const auto self = p.terms().find(exponent);
  if (self == p.terms().end()) throw InputError("exponent is not a term of the polynomial");
  const std::size_t n = p.chart().lattice_rank();
  std::vector<LinearConstraint> sys;
  for (const auto& [e, c] : p.terms()) {
    if (e == exponent) continue;
    // c_self + <u_self, w> > c + <u, w>
    IntVector diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = exponent[i] - e[i];
    sys.push_back(make_constraint(diff, Relation::Greater, c.value() - self->second.value()));
  }
  return find_point(n, sys);
}

TropRatPolynomial reduce_to_function(const TropRatPolynomial& p) {
  std::vector<std::pair<IntVector, TropRat>> kept;
  for (const auto& [e, c] : p.terms())
    if (domination_point(p, e)) kept.emplace_back(e, c);
  return TropRatPolynomial(p.chart_ptr(), kept);
}

TropRat evaluate(const TropRatPolynomial& p, const std::vector<Rational>& w) {
  if (w.size() != p.chart().lattice_rank()) throw InputError("evaluation point of wrong length");
  TropRat best;
  for (const auto& [e, c] : p.terms()) {
    Rational v = c.value();
    for (std::size_t i = 0; i < w.size(); ++i) v += Rational(e[i]) * w[i];
    best = add(best, TropRat(v));
  }
  return best;
}

}  // namespace troppic
