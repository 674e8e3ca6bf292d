#pragma once

// Exact rational feasibility of small linear systems by Fourier-Motzkin
// elimination, with witness reconstruction by back-substitution.

#include <cstddef>
#include <optional>
#include <vector>

#include "troppic/intlin.hpp"

namespace troppic {

enum class Relation { Greater, GreaterEqual, Equal };

/// coeffs . x  (rel)  rhs
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Rational rhs;
  Relation rel = Relation::GreaterEqual;
};

/// Helper for integer-valued rows.
LinearConstraint make_constraint(const IntVector& coeffs, Relation rel,
                                 const Rational& rhs = 0);

/// A rational point satisfying every constraint, or nullopt when the system
/// is infeasible. All constraints must have `dim` coefficients.
std::optional<std::vector<Rational>> find_point(
    std::size_t dim, const std::vector<LinearConstraint>& constraints);

inline bool is_feasible(std::size_t dim,
                        const std::vector<LinearConstraint>& constraints) {
  return find_point(dim, constraints).has_value();
}

/// Evaluates one constraint at x.
bool satisfies(const LinearConstraint& c, const std::vector<Rational>& x);

}  // namespace troppic
