#pragma once

// Rational polyhedral fans and the chart data of their maximal-cone cover.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "troppic/intlin.hpp"
#include "troppic/toricmonoid.hpp"

namespace troppic {

class Fan {
 public:
  /// Structural checks only (lengths, index ranges, duplicate indices);
  /// geometric validity is the job of validate().
  Fan(std::size_t rank, std::vector<IntVector> rays,
      std::vector<std::vector<std::size_t>> max_cones);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<IntVector>& rays() const noexcept { return rays_; }
  /// Each cone is a sorted list of ray indices.
  const std::vector<std::vector<std::size_t>>& max_cones() const noexcept {
    return max_cones_;
  }
  std::size_t cone_count() const noexcept { return max_cones_.size(); }

  /// Same fan with maximal cones listed in the order given by `order`.
  Fan permuted(const std::vector<std::size_t>& order) const;

  friend bool operator==(const Fan&, const Fan&) = default;

 private:
  std::size_t rank_;
  std::vector<IntVector> rays_;
  std::vector<std::vector<std::size_t>> max_cones_;
};

struct FanViolation {
  std::string message;
  std::optional<std::size_t> cone_a;
  std::optional<std::size_t> cone_b;
  /// Primitive lattice point in both cones but outside the span of the shared
  /// rays, when the violation is a bad intersection.
  std::optional<IntVector> witness;
};

/// Thrown by operations that need a valid fan.
class FanError : public std::runtime_error {
 public:
  explicit FanError(FanViolation v)
      : std::runtime_error(v.message), violation_(std::move(v)) {}
  const FanViolation& violation() const noexcept { return violation_; }

 private:
  FanViolation violation_;
};

/// First violation found, or nullopt for a valid fan.
///
/// Checks, in order: rays nonzero, primitive and distinct; every maximal cone
/// strongly convex with each listed ray extremal; no maximal cone inside
/// another; every pair of maximal cones separated by a functional vanishing
/// exactly on their shared rays, which certifies that the intersection is the
/// cone on the shared rays and a face of both.
std::optional<FanViolation> validate(const Fan& fan);
void require_valid(const Fan& fan);

/// A face common to some maximal cones, named by its sorted ray indices.
/// The empty set is the zero cone.
struct ConeRef {
  std::vector<std::size_t> rays;

  friend bool operator==(const ConeRef&, const ConeRef&) = default;
};

ConeRef max_cone(const Fan& fan, std::size_t id);

/// Common face of the given maximal cones (shared rays). Assumes a validated
/// fan; throws InputError for empty or out-of-range ids.
ConeRef intersection_cone(const Fan& fan, const std::vector<std::size_t>& cone_ids);

AffineToricMonoid chart_monoid(const Fan& fan, const ConeRef& cone);

}  // namespace troppic
