#pragma once

// Elements of the monoid semiring K[S] over a chart monoid S.
//
// A polynomial is kept in canonical form: one nonzero coefficient per
// distinct monomial, monomials ordered lexicographically by exponent. With K
// idempotent and zero-sum free, the number of terms is the minimal length of
// any expression of the element, which is what phi() reports.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "troppic/intlin.hpp"
#include "troppic/semifield.hpp"
#include "troppic/toricmonoid.hpp"

namespace troppic {

/// The unit coefficient * x^exponent.
template <IdempotentSemifield K>
struct UnitCertificate {
  K coefficient;
  IntVector exponent;

  UnitCertificate inverse() const {
    IntVector e = exponent;
    for (auto& v : e) v = -v;
    return {inv(coefficient), std::move(e)};
  }
  friend bool operator==(const UnitCertificate&, const UnitCertificate&) = default;
};

template <IdempotentSemifield K>
class TropicalPolynomial {
 public:
  using Coefficient = K;
  using Terms = std::map<IntVector, K>;

  /// The zero polynomial on `chart`.
  explicit TropicalPolynomial(std::shared_ptr<const AffineToricMonoid> chart)
      : chart_(std::move(chart)) {
    if (!chart_) throw InputError("polynomial without a chart");
  }

  /// Canonicalizes: colliding monomials are combined with (+), zero
  /// coefficients dropped. Throws DomainError for exponents outside the chart.
  TropicalPolynomial(std::shared_ptr<const AffineToricMonoid> chart,
                     const std::vector<std::pair<IntVector, K>>& terms)
      : TropicalPolynomial(std::move(chart)) {
    for (const auto& [e, c] : terms) accumulate(e, c);
  }

  static TropicalPolynomial monomial(std::shared_ptr<const AffineToricMonoid> chart,
                                     const K& coeff, const IntVector& exponent) {
    return TropicalPolynomial(std::move(chart), {{exponent, coeff}});
  }
  static TropicalPolynomial constant(std::shared_ptr<const AffineToricMonoid> chart,
                                     const K& coeff) {
    IntVector zero(chart->lattice_rank());
    return monomial(std::move(chart), coeff, zero);
  }

  const AffineToricMonoid& chart() const noexcept { return *chart_; }
  const std::shared_ptr<const AffineToricMonoid>& chart_ptr() const noexcept {
    return chart_;
  }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend bool operator==(const TropicalPolynomial& a, const TropicalPolynomial& b) {
    return a.same_chart(b) && a.terms_ == b.terms_;
  }

  friend TropicalPolynomial add(const TropicalPolynomial& p, const TropicalPolynomial& q) {
    p.require_same_chart(q);
    TropicalPolynomial r = p;
    for (const auto& [e, c] : q.terms_) r.accumulate_member(e, c);
    return r;
  }

  friend TropicalPolynomial mul(const TropicalPolynomial& p, const TropicalPolynomial& q) {
    p.require_same_chart(q);
    TropicalPolynomial r(p.chart_);
    for (const auto& [ep, cp] : p.terms_)
      for (const auto& [eq, cq] : q.terms_) {
        IntVector e(ep.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
        r.accumulate_member(e, mul(cp, cq));
      }
    return r;
  }

 private:
  bool same_chart(const TropicalPolynomial& o) const {
    return chart_ == o.chart_ || *chart_ == *o.chart_;
  }
  void require_same_chart(const TropicalPolynomial& o) const {
    if (!same_chart(o)) throw InputError("polynomials live on different charts");
  }
  void accumulate(const IntVector& e, const K& c) {
    if (!chart_->contains(e)) throw DomainError("monomial exponent outside the chart monoid");
    accumulate_member(e, c);
  }
  void accumulate_member(const IntVector& e, const K& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) it->second = add(it->second, c);
  }
  static bool is_zero(const K& c) { return troppic::is_zero(c); }

  std::shared_ptr<const AffineToricMonoid> chart_;
  Terms terms_;
};

/// Minimal number of terms a_k x^{m_k} needed to write p.
template <IdempotentSemifield K>
std::size_t phi(const TropicalPolynomial<K>& p) {
  return p.terms().size();
}

/// A certificate iff p is a single term a x^m with a invertible in K and m
/// in the unit lattice of the chart.
template <IdempotentSemifield K>
std::optional<UnitCertificate<K>> is_unit(const TropicalPolynomial<K>& p) {
  if (p.terms().size() != 1) return std::nullopt;
  const auto& [exponent, coeff] = *p.terms().begin();
  if (is_zero(coeff) || !p.chart().is_unit(exponent)) return std::nullopt;
  return UnitCertificate<K>{coeff, exponent};
}

using TropRatPolynomial = TropicalPolynomial<TropRat>;

/// Canonical representative of p as a function on Q^n: keeps exactly the
/// terms that strictly dominate every other term at some rational point.
/// Two polynomials agree as functions iff their reductions are equal.
TropRatPolynomial reduce_to_function(const TropRatPolynomial& p);

/// Point where the term with the given exponent strictly dominates, if any.
std::optional<std::vector<Rational>> domination_point(const TropRatPolynomial& p,
                                                      const IntVector& exponent);

/// max_k (c_k + <u_k, w>); bottom for the zero polynomial.
TropRat evaluate(const TropRatPolynomial& p, const std::vector<Rational>& w);

}  // namespace troppic
