#pragma once

// Torus-invariant Cartier divisors given by monomial local data
// f_i = a_i x^{m_i} on each maximal-cone chart.
//
// Compatibility on U_i ∩ U_j means f_i / f_j is a unit there, i.e.
// m_i - m_j lies in the unit lattice of the overlap. The associated Čech
// cocycle is c_ij = m_i - m_j (i < j); coefficients only touch the constant
// K^x factor and never influence the class.
//
// Sign convention: on P^1 with rays (1), (-1) the divisor with m_0 = 0,
// m_1 = k has c_01 = -k and class -k.

#include <cstddef>
#include <optional>
#include <vector>

#include "troppic/picard.hpp"
#include "troppic/semifield.hpp"
#include "troppic/tropoly.hpp"

namespace troppic {

struct LocalDatum {
  TropRat coefficient = TropRat::one();
  IntVector exponent;

  friend bool operator==(const LocalDatum&, const LocalDatum&) = default;
};

struct MonomialCartierDivisor {
  /// One datum per maximal cone, in cone order.
  std::vector<LocalDatum> local_data;

  /// Componentwise product of local functions.
  friend MonomialCartierDivisor operator+(const MonomialCartierDivisor& a,
                                          const MonomialCartierDivisor& b);
  friend bool operator==(const MonomialCartierDivisor&,
                         const MonomialCartierDivisor&) = default;
};

struct DivisorViolation {
  std::size_t cone_i;
  std::size_t cone_j;
  IntVector obstruction;  ///< m_i - m_j, outside the overlap unit lattice
};

/// Malformed local data: wrong number of cones, wrong exponent length,
/// or a -inf coefficient.
void check_shape(const PicardComputation& pic, const MonomialCartierDivisor& d);

std::optional<DivisorViolation> validate_divisor(const PicardComputation& pic,
                                                 const MonomialCartierDivisor& d);

/// c_ij = m_i - m_j on every pair i < j.
Cochain1 cocycle_of(const PicardComputation& pic, const MonomialCartierDivisor& d);

/// Coordinates of the class in H^1 (see PicardComputation::class_of_cocycle).
IntVector class_in_pic(const PicardComputation& pic, const MonomialCartierDivisor& d);

/// Some m with m_i - m a unit on every chart, when d is principal.
std::optional<IntVector> principal_witness(const PicardComputation& pic,
                                           const MonomialCartierDivisor& d);
inline bool is_principal(const PicardComputation& pic, const MonomialCartierDivisor& d) {
  return principal_witness(pic, d).has_value();
}

/// Divisor with m_0 = 0 and m_j = -c_0j, whose cocycle is exactly c.
/// Coefficients are the multiplicative identity.
MonomialCartierDivisor divisor_from_cocycle(const PicardComputation& pic, const Cochain1& c);

/// The transition function f_i / f_j as a polynomial on the overlap chart.
TropRatPolynomial transition_function(const PicardComputation& pic,
                                      const MonomialCartierDivisor& d, std::size_t i,
                                      std::size_t j);

}  // namespace troppic
