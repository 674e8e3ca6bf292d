#pragma once

// Čech complex of unit lattices over the maximal-cone cover of a fan, and the
// groups H^0 and H^1 = Pic it computes.
//
// Charts of a fan always meet (the variety is irreducible), so the nerve of
// the cover is a full simplex: every pair and every triple of maximal cones
// contributes a cochain summand. Each summand is the unit lattice of the
// intersection chart, stored as a basis of columns in Z^n.
//
// Sign convention: (d c)_{i_0..i_k} = sum_m (-1)^m c_{i_0..^i_m..i_k}, indices
// strictly increasing. So (d0 f)_ij = f_j - f_i and
// (d1 c)_ijk = c_jk - c_ik + c_ij.
//
// The constant factor K^x of every unit group is not part of the complex; it
// contributes nothing to H^1 because the nerve is a simplex. Setting
// `augment_constant` adds a shared Z summand to each chart group with identity
// restriction maps, as a finitely generated stand-in for that factor.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "troppic/fan.hpp"
#include "troppic/intlin.hpp"

namespace troppic {

struct ComplexOptions {
  bool augment_constant = false;
};

struct CechComplex {
  Fan fan;
  bool augmented = false;

  std::vector<std::array<std::size_t, 2>> pairs;
  std::vector<std::array<std::size_t, 3>> triples;

  // Lattice bases (n x rank) of the chart unit groups. With augmentation the
  // extra Z summand is an additional coordinate, not part of these bases.
  std::vector<IntMatrix> chart_bases;
  std::vector<IntMatrix> pair_bases;
  std::vector<IntMatrix> triple_bases;

  // Start of each summand in the concatenated cochain coordinates.
  std::vector<std::size_t> chart_offsets;
  std::vector<std::size_t> pair_offsets;
  std::vector<std::size_t> triple_offsets;

  IntMatrix d0;  ///< C^1 x C^0
  IntMatrix d1;  ///< C^2 x C^1

  std::size_t c0_rank() const noexcept { return d0.cols(); }
  std::size_t c1_rank() const noexcept { return d0.rows(); }
  std::size_t c2_rank() const noexcept { return d1.rows(); }

  /// Position of pair (i, j), i < j, in `pairs`.
  std::size_t pair_index(std::size_t i, std::size_t j) const;
};

/// Throws FanError for an invalid fan.
CechComplex build_complex(const Fan& fan, ComplexOptions options = {});

/// One lattice vector in Z^n per pair of maximal cones, in the order of
/// CechComplex::pairs.
using Cochain1 = std::vector<IntVector>;

/// Raised for a 1-cochain that fails the cocycle condition or has a value
/// outside the unit lattice of its pair.
class CocycleError : public std::invalid_argument {
 public:
  CocycleError(const std::string& what, std::vector<std::size_t> cones)
      : std::invalid_argument(what), cones_(std::move(cones)) {}
  /// The offending pair or triple of maximal cones.
  const std::vector<std::size_t>& cones() const noexcept { return cones_; }

 private:
  std::vector<std::size_t> cones_;
};

/// The complex together with its H^1 presentation.
class PicardComputation {
 public:
  explicit PicardComputation(const Fan& fan, ComplexOptions options = {});

  const CechComplex& complex() const noexcept { return complex_; }
  const Fan& fan() const noexcept { return complex_.fan; }
  const FinGenAbGroup& picard_group() const noexcept { return h1_.group; }
  const HomologyPresentation& h1() const noexcept { return h1_; }

  /// Coordinates of a 1-cochain in C^1. Throws CocycleError if some value
  /// is not in the unit lattice of its pair.
  IntVector cochain_coordinates(const Cochain1& c) const;
  /// Inverse of cochain_coordinates.
  Cochain1 cochain_from_coordinates(const IntVector& x) const;

  /// Throws CocycleError naming the first violating triple, if any.
  void check_cocycle(const Cochain1& c) const;

  /// Coordinates of [c] in H^1: free part first (row-Hermite basis), then
  /// one residue per invariant factor. Coboundaries map to zero.
  IntVector class_of_cocycle(const Cochain1& c) const;

  /// Cocycles representing the canonical generators of H^1, in the order of
  /// class_of_cocycle coordinates.
  std::vector<Cochain1> generator_cocycles() const;

 private:
  CechComplex complex_;
  HomologyPresentation h1_;
};

FinGenAbGroup picard_group(const Fan& fan, ComplexOptions options = {});

/// Lattice part of H^0 (the global monomial units). The constant factor K^x
/// sits alongside and is not finitely generated, so it is not included.
FinGenAbGroup global_units(const Fan& fan);

}  // namespace troppic
