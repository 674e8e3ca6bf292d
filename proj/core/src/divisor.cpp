#include "troppic/divisor.hpp"

#include <memory>

namespace troppic {

namespace {

IntVector difference(const IntVector& a, const IntVector& b) {
  IntVector d(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) d[k] = a[k] - b[k];
  return d;
}

}  // namespace

MonomialCartierDivisor operator+(const MonomialCartierDivisor& a,
                                 const MonomialCartierDivisor& b) {
  if (a.local_data.size() != b.local_data.size())
    throw InputError("adding divisors over different covers");
  MonomialCartierDivisor s;
  for (std::size_t i = 0; i < a.local_data.size(); ++i) {
    const auto& x = a.local_data[i];
    const auto& y = b.local_data[i];
    if (x.exponent.size() != y.exponent.size()) throw InputError("exponent length mismatch");
    IntVector e(x.exponent.size());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = x.exponent[k] + y.exponent[k];
    s.local_data.push_back({mul(x.coefficient, y.coefficient), std::move(e)});
  }
  return s;
}

void check_shape(const PicardComputation& pic, const MonomialCartierDivisor& d) {
  const Fan& fan = pic.fan();
  if (d.local_data.size() != fan.cone_count())
    throw InputError("divisor has " + std::to_string(d.local_data.size()) +
                     " local data, fan has " + std::to_string(fan.cone_count()) +
                     " maximal cones");
  for (const auto& datum : d.local_data) {
    if (datum.exponent.size() != fan.rank()) throw InputError("local exponent of wrong length");
    if (is_zero(datum.coefficient))
      throw InputError("local coefficient -inf is not a unit of the semifield");
  }
}

std::optional<DivisorViolation> validate_divisor(const PicardComputation& pic,
                                                 const MonomialCartierDivisor& d) {
  check_shape(pic, d);
  const auto& cx = pic.complex();
  for (std::size_t p = 0; p < cx.pairs.size(); ++p) {
    const auto [i, j] = cx.pairs[p];
    IntVector diff = difference(d.local_data[i].exponent, d.local_data[j].exponent);
    if (!solve_integer(cx.pair_bases[p], diff)) return DivisorViolation{i, j, std::move(diff)};
  }
  return std::nullopt;
}

Cochain1 cocycle_of(const PicardComputation& pic, const MonomialCartierDivisor& d) {
  if (auto v = validate_divisor(pic, d))
    throw CocycleError("local data on cones " + std::to_string(v->cone_i) + " and " +
                           std::to_string(v->cone_j) + " do not glue",
                       {v->cone_i, v->cone_j});
  Cochain1 c;
  for (const auto& [i, j] : pic.complex().pairs)
    c.push_back(difference(d.local_data[i].exponent, d.local_data[j].exponent));
  return c;
}

IntVector class_in_pic(const PicardComputation& pic, const MonomialCartierDivisor& d) {
  return pic.class_of_cocycle(cocycle_of(pic, d));
}

std::optional<IntVector> principal_witness(const PicardComputation& pic,
                                           const MonomialCartierDivisor& d) {
  if (auto v = validate_divisor(pic, d))
    throw CocycleError("divisor local data do not glue", {v->cone_i, v->cone_j});
  const auto& cx = pic.complex();
  const std::size_t n = cx.fan.rank();
  const std::size_t count = cx.fan.cone_count();

  // Unknowns (m, y_0, .., y_{N-1}) with m + L_i y_i = m_i for every chart.
  std::size_t cols = n;
  for (const auto& b : cx.chart_bases) cols += b.cols();
  IntMatrix a(n * count, cols);
  IntVector rhs(n * count);
  std::size_t col = n;
  for (std::size_t i = 0; i < count; ++i) {
    const IntMatrix& basis = cx.chart_bases[i];
    for (std::size_t r = 0; r < n; ++r) {
      a(i * n + r, r) = 1;
      for (std::size_t c = 0; c < basis.cols(); ++c) a(i * n + r, col + c) = basis(r, c);
      rhs[i * n + r] = d.local_data[i].exponent[r];
    }
    col += basis.cols();
  }
  const auto x = solve_integer(a, rhs);
  if (!x) return std::nullopt;
  return IntVector(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(n));
}

MonomialCartierDivisor divisor_from_cocycle(const PicardComputation& pic, const Cochain1& c) {
  pic.cochain_coordinates(c);
  pic.check_cocycle(c);
  const auto& cx = pic.complex();
  const std::size_t n = cx.fan.rank();
  MonomialCartierDivisor d;
  d.local_data.push_back({TropRat::one(), IntVector(n)});
  for (std::size_t j = 1; j < cx.fan.cone_count(); ++j) {
    IntVector m = c[cx.pair_index(0, j)];
    for (auto& v : m) v = -v;
    d.local_data.push_back({TropRat::one(), std::move(m)});
  }
  return d;
}

TropRatPolynomial transition_function(const PicardComputation& pic,
                                      const MonomialCartierDivisor& d, std::size_t i,
                                      std::size_t j) {
  check_shape(pic, d);
  const Fan& fan = pic.fan();
  auto chart = std::make_shared<const AffineToricMonoid>(
      chart_monoid(fan, intersection_cone(fan, {i, j})));
  const auto& fi = d.local_data.at(i);
  const auto& fj = d.local_data.at(j);
  return TropRatPolynomial::monomial(std::move(chart), mul(fi.coefficient, inv(fj.coefficient)),
                                     difference(fi.exponent, fj.exponent));
}

}  // namespace troppic
