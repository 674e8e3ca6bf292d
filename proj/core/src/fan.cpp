#include "troppic/fan.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "troppic/feasibility.hpp"

namespace troppic {

namespace {

std::string cone_name(std::size_t i) { return "cone " + std::to_string(i); }

std::vector<std::size_t> shared_rays(const std::vector<std::size_t>& a,
                                     const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<IntVector> gather(const Fan& fan, const std::vector<std::size_t>& ids) {
  std::vector<IntVector> out;
  for (auto i : ids) out.push_back(fan.rays()[i]);
  return out;
}

bool spans_face(const Fan& fan, const std::vector<std::size_t>& cone,
                const std::vector<std::size_t>& sub) {
  std::vector<bool> on(cone.size());
  for (std::size_t k = 0; k < cone.size(); ++k)
    on[k] = std::binary_search(sub.begin(), sub.end(), cone[k]);
  return supporting_functional(fan.rank(), gather(fan, cone), on).has_value();
}

IntVector primitive_integer(const std::vector<Rational>& x) {
  Integer lcm = 1;
  for (const auto& v : x) {
    const Integer d = boost::multiprecision::denominator(v);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  IntVector out;
  for (const auto& v : x)
    out.push_back(boost::multiprecision::numerator(v) * (lcm / boost::multiprecision::denominator(v)));
  const Integer g = content(out);
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

// A point of cone_a ∩ cone_b that leaves the face spanned by the shared rays
// inside cone_a. Variables: coefficients on the rays of a, then of b.
std::optional<IntVector> intersection_witness(const Fan& fan,
                                              const std::vector<std::size_t>& a,
                                              const std::vector<std::size_t>& b,
                                              const std::vector<std::size_t>& shared) {
  const std::size_t na = a.size();
  const std::size_t dim = na + b.size();
  std::vector<LinearConstraint> sys;
  for (std::size_t k = 0; k < dim; ++k) {
    LinearConstraint c;
    c.coeffs.assign(dim, Rational(0));
    c.coeffs[k] = 1;
    c.rel = Relation::GreaterEqual;
    sys.push_back(std::move(c));
  }
  for (std::size_t coord = 0; coord < fan.rank(); ++coord) {
    LinearConstraint c;
    c.coeffs.assign(dim, Rational(0));
    for (std::size_t k = 0; k < na; ++k) c.coeffs[k] = Rational(fan.rays()[a[k]][coord]);
    for (std::size_t k = 0; k < b.size(); ++k)
      c.coeffs[na + k] = Rational(-fan.rays()[b[k]][coord]);
    c.rel = Relation::Equal;
    sys.push_back(std::move(c));
  }
  LinearConstraint off_face;
  off_face.coeffs.assign(dim, Rational(0));
  for (std::size_t k = 0; k < na; ++k)
    if (!std::binary_search(shared.begin(), shared.end(), a[k])) off_face.coeffs[k] = 1;
  off_face.rhs = 1;
  sys.push_back(std::move(off_face));

  const auto sol = find_point(dim, sys);
  if (!sol) return std::nullopt;
  std::vector<Rational> x(fan.rank(), Rational(0));
  for (std::size_t k = 0; k < na; ++k)
    for (std::size_t coord = 0; coord < fan.rank(); ++coord)
      x[coord] += (*sol)[k] * Rational(fan.rays()[a[k]][coord]);
  return primitive_integer(x);
}

}  // namespace

Fan::Fan(std::size_t rank, std::vector<IntVector> rays,
         std::vector<std::vector<std::size_t>> max_cones)
    : rank_(rank), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
  for (const auto& r : rays_)
    if (r.size() != rank_)
      throw InputError("ray of length " + std::to_string(r.size()) +
                       " in a rank-" + std::to_string(rank_) + " fan");
  if (max_cones_.empty()) throw InputError("fan has no maximal cones");
  for (auto& cone : max_cones_) {
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw InputError("repeated ray index in a maximal cone");
    if (!cone.empty() && cone.back() >= rays_.size())
      throw InputError("ray index " + std::to_string(cone.back()) + " out of range");
  }
}

Fan Fan::permuted(const std::vector<std::size_t>& order) const {
  if (order.size() != max_cones_.size()) throw InputError("permutation length mismatch");
  std::vector<std::vector<std::size_t>> cones;
  for (auto i : order) cones.push_back(max_cones_.at(i));
  return Fan(rank_, rays_, std::move(cones));
}

std::optional<FanViolation> validate(const Fan& fan) {
  const auto& rays = fan.rays();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const Integer g = content(rays[i]);
    if (g == 0) return FanViolation{"ray " + std::to_string(i) + " is zero", {}, {}, {}};
    if (g != 1)
      return FanViolation{"ray " + std::to_string(i) + " is not primitive (gcd " +
                              g.str() + ")",
                          {}, {}, rays[i]};
    for (std::size_t j = 0; j < i; ++j)
      if (rays[j] == rays[i])
        return FanViolation{"rays " + std::to_string(j) + " and " + std::to_string(i) +
                                " coincide",
                            {}, {}, {}};
  }

  const auto& cones = fan.max_cones();
  for (std::size_t c = 0; c < cones.size(); ++c) {
    if (!spans_face(fan, cones[c], {}))
      return FanViolation{cone_name(c) + " is not strongly convex", c, {}, {}};
    for (auto r : cones[c])
      if (!spans_face(fan, cones[c], {r}))
        return FanViolation{"ray " + std::to_string(r) + " is not extremal in " +
                                cone_name(c),
                            c, {}, rays[r]};
  }

  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = 0; j < cones.size(); ++j) {
      if (i == j) continue;
      if (std::includes(cones[j].begin(), cones[j].end(), cones[i].begin(),
                        cones[i].end()))
        return FanViolation{cone_name(i) + " is contained in " + cone_name(j), i, j, {}};
    }

  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      const auto& a = cones[i];
      const auto& b = cones[j];
      const auto shared = shared_rays(a, b);
      // Separation: u = 0 on shared rays, u > 0 on the rest of a, u < 0 on
      // the rest of b.
      std::vector<IntVector> signed_rays;
      std::vector<bool> on;
      for (auto r : a) {
        signed_rays.push_back(rays[r]);
        on.push_back(std::binary_search(shared.begin(), shared.end(), r));
      }
      for (auto r : b) {
        if (std::binary_search(shared.begin(), shared.end(), r)) continue;
        IntVector neg = rays[r];
        for (auto& v : neg) v = -v;
        signed_rays.push_back(std::move(neg));
        on.push_back(false);
      }
      if (supporting_functional(fan.rank(), signed_rays, on)) continue;

      FanViolation v;
      v.cone_a = i;
      v.cone_b = j;
      const std::string pair = cone_name(i) + " and " + cone_name(j);
      if (spans_face(fan, a, shared)) {
        v.witness = intersection_witness(fan, a, b, shared);
      }
      if (!v.witness && spans_face(fan, b, shared)) {
        v.witness = intersection_witness(fan, b, a, shared);
      }
      v.message = v.witness ? pair + " meet outside the span of their shared rays"
                            : "shared rays of " + pair + " do not span a common face";
      return v;
    }
  return std::nullopt;
}

void require_valid(const Fan& fan) {
  if (auto v = validate(fan)) throw FanError(std::move(*v));
}

ConeRef max_cone(const Fan& fan, std::size_t id) {
  if (id >= fan.cone_count()) throw InputError("unknown cone id " + std::to_string(id));
  return ConeRef{fan.max_cones()[id]};
}

ConeRef intersection_cone(const Fan& fan, const std::vector<std::size_t>& cone_ids) {
  if (cone_ids.empty()) throw InputError("intersection of no cones");
  ConeRef out = max_cone(fan, cone_ids.front());
  for (std::size_t k = 1; k < cone_ids.size(); ++k)
    out.rays = shared_rays(out.rays, max_cone(fan, cone_ids[k]).rays);
  return out;
}

AffineToricMonoid chart_monoid(const Fan& fan, const ConeRef& cone) {
  for (auto r : cone.rays)
    if (r >= fan.rays().size()) throw InputError("cone references unknown ray");
  return AffineToricMonoid(fan.rank(), gather(fan, cone.rays));
}

}  // namespace troppic
