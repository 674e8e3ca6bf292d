#include "troppic/toricmonoid.hpp"

#include <algorithm>

#include "troppic/feasibility.hpp"

namespace troppic {

Integer pairing(const IntVector& u, const IntVector& r) {
  if (u.size() != r.size()) throw InputError("pairing of vectors of different length");
  Integer s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * r[i];
  return s;
}

std::optional<std::vector<Rational>> supporting_functional(
    std::size_t lattice_rank, const std::vector<IntVector>& rays,
    const std::vector<bool>& on_face) {
  std::vector<LinearConstraint> system;
  system.reserve(rays.size());
  for (std::size_t k = 0; k < rays.size(); ++k)
    system.push_back(
        make_constraint(rays[k], on_face[k] ? Relation::Equal : Relation::Greater));
  return find_point(lattice_rank, system);
}

AffineToricMonoid::AffineToricMonoid(std::size_t lattice_rank,
                                     std::vector<IntVector> cone_rays)
    : rank_(lattice_rank), rays_(std::move(cone_rays)) {
  for (const auto& r : rays_)
    if (r.size() != rank_) throw InputError("cone ray of wrong length");
  units_ = kernel_basis(pairing_matrix());
  units_snf_ = smith_normal_form(units_);
}

IntMatrix AffineToricMonoid::pairing_matrix() const {
  IntMatrix m(rays_.size(), rank_);
  for (std::size_t i = 0; i < rays_.size(); ++i)
    for (std::size_t j = 0; j < rank_; ++j) m(i, j) = rays_[i][j];
  return m;
}

std::size_t AffineToricMonoid::cone_dimension() const {
  return rational_rank(pairing_matrix());
}

bool AffineToricMonoid::contains(const IntVector& u) const {
  if (u.size() != rank_) throw InputError("lattice point of wrong length");
  return std::all_of(rays_.begin(), rays_.end(),
                     [&](const IntVector& r) { return pairing(u, r) >= 0; });
}

bool AffineToricMonoid::is_unit(const IntVector& u) const {
  if (u.size() != rank_) throw InputError("lattice point of wrong length");
  return solve_integer(units_snf_, u).has_value();
}

void AffineToricMonoid::require_member(const IntVector& u) const {
  if (!contains(u)) throw DomainError("lattice point is not in the chart monoid");
}

bool AffineToricMonoid::maximal_ideal_contains(const IntVector& u) const {
  require_member(u);
  return std::any_of(rays_.begin(), rays_.end(),
                     [&](const IntVector& r) { return pairing(u, r) > 0; });
}

std::vector<FacePrime> AffineToricMonoid::spec_faces() const {
  const std::size_t k = rays_.size();
  if (k >= 8 * sizeof(unsigned long)) throw InputError("too many rays for face enumeration");
  std::vector<unsigned long> masks;
  for (unsigned long mask = 0; mask < (1UL << k); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned long a, unsigned long b) {
    return __builtin_popcountl(a) < __builtin_popcountl(b);
  });

  std::vector<FacePrime> primes;
  for (unsigned long mask : masks) {
    std::vector<bool> on_face(k);
    FacePrime p;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1UL << i)) {
        on_face[i] = true;
        p.face_ray_indices.push_back(i);
      }
    if (supporting_functional(rank_, rays_, on_face)) primes.push_back(std::move(p));
  }
  return primes;
}

bool AffineToricMonoid::prime_contains(const FacePrime& p, const IntVector& u) const {
  require_member(u);
  return std::any_of(p.face_ray_indices.begin(), p.face_ray_indices.end(),
                     [&](std::size_t i) { return pairing(u, rays_.at(i)) > 0; });
}

AffineToricMonoid AffineToricMonoid::localize_at(const IntVector& u) const {
  require_member(u);
  std::vector<IntVector> face;
  for (const auto& r : rays_)
    if (pairing(u, r) == 0) face.push_back(r);
  return AffineToricMonoid(rank_, std::move(face));
}

bool operator==(const AffineToricMonoid& a, const AffineToricMonoid& b) {
  if (a.rank_ != b.rank_) return false;
  auto ra = a.rays_;
  auto rb = b.rays_;
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  return ra == rb;
}

}  // namespace troppic
