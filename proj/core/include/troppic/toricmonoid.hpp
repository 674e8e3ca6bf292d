#pragma once

// Affine chart monoids S = cone^dual ∩ Z^n with an adjoined absorbing zero.
//
// A monoid is stored only through the rays of its cone in the dual lattice;
// u belongs to S iff <u, r> >= 0 for every ray r. Nothing about the dual
// cone or a Hilbert basis is ever materialized.

#include <cstddef>
#include <optional>
#include <vector>

#include "troppic/intlin.hpp"

namespace troppic {

/// Inner product of two integer vectors of equal length.
Integer pairing(const IntVector& u, const IntVector& r);

/// A functional u with <u, r> = 0 for the selected rays and <u, r> > 0 for
/// the others, when one exists. The selected rays then span a face of the
/// cone and the unselected ones lie off it.
std::optional<std::vector<Rational>> supporting_functional(
    std::size_t lattice_rank, const std::vector<IntVector>& rays,
    const std::vector<bool>& on_face);

/// Prime ideal of a chart monoid, indexed by a face of its cone. The ideal
/// consists of the monoid elements pairing positively with some ray of the
/// face; its complement is the face-localized unit group intersected with S.
struct FacePrime {
  std::vector<std::size_t> face_ray_indices;

  friend bool operator==(const FacePrime&, const FacePrime&) = default;
};

class AffineToricMonoid {
 public:
  AffineToricMonoid(std::size_t lattice_rank, std::vector<IntVector> cone_rays);

  std::size_t lattice_rank() const noexcept { return rank_; }
  const std::vector<IntVector>& cone_rays() const noexcept { return rays_; }
  /// Rays as rows.
  IntMatrix pairing_matrix() const;
  /// Dimension of the cone (rank of the ray span).
  std::size_t cone_dimension() const;

  bool contains(const IntVector& u) const;

  /// Columns form a saturated basis of the unit group (cone^perp ∩ Z^n).
  const IntMatrix& units_lattice() const noexcept { return units_; }
  /// Membership in the unit lattice, decided by integer solving.
  bool is_unit(const IntVector& u) const;

  /// u lies in the unique maximal ideal S \ S^x. Requires contains(u).
  bool maximal_ideal_contains(const IntVector& u) const;

  /// One prime per face of the cone, smallest faces first.
  std::vector<FacePrime> spec_faces() const;
  /// Membership of u in the prime of a face. Requires contains(u).
  bool prime_contains(const FacePrime& p, const IntVector& u) const;

  /// The chart obtained by inverting u: the monoid of the face cone ∩ u^perp.
  AffineToricMonoid localize_at(const IntVector& u) const;

  /// Same lattice and same ray set (order-insensitive).
  friend bool operator==(const AffineToricMonoid& a, const AffineToricMonoid& b);

 private:
  void require_member(const IntVector& u) const;

  std::size_t rank_;
  std::vector<IntVector> rays_;
  IntMatrix units_;
  SmithDecomposition units_snf_;
};

}  // namespace troppic
