#pragma once

// Exact integer linear algebra: Smith normal form, integer kernels,
// integer system solving and homology of two-step complexes of free
// abelian groups. All entries are arbitrary-precision integers.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace troppic {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Integer>;

/// Raised on dimension mismatches and malformed arguments.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is applied outside its domain
/// (inverting zero, testing a non-member, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by homology() when d1 * d0 != 0.
class NotAComplex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) {
    return IntMatrix(rows, cols);
  }
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(std::size_t rows,
                                const std::vector<IntVector>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector column(std::size_t c) const;
  IntVector row(std::size_t r) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  /// Column subrange [first, last).
  IntMatrix columns(std::size_t first, std::size_t last) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);

/// U * A * V == D, U and V unimodular, D diagonal with d_i | d_{i+1}.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Diagonal entries d_1 .. d_min(rows, cols).
  IntVector diagonal() const;
  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
};

/// Finitely generated abelian group Z^rank + Z/t_1 + ... + Z/t_k in
/// invariant-factor form: every t_i >= 2 and t_i | t_{i+1}.
class FinGenAbGroup {
 public:
  FinGenAbGroup() = default;
  /// Canonicalizes: accepts arbitrary nonnegative invariant factors in a
  /// divisibility chain, drops 1s, counts 0s into the rank.
  FinGenAbGroup(std::size_t rank, IntVector torsion = {});

  std::size_t rank() const noexcept { return rank_; }
  const IntVector& torsion() const noexcept { return torsion_; }
  bool is_trivial() const noexcept { return rank_ == 0 && torsion_.empty(); }

  /// "0", "Z", "Z^2", "Z ⊕ Z/2", "Z/2 ⊕ Z/4", ...
  std::string to_string() const;

  friend bool operator==(const FinGenAbGroup&, const FinGenAbGroup&) = default;

 private:
  std::size_t rank_ = 0;
  IntVector torsion_;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Columns form a basis of the integer kernel {v : A v = 0}, in row-Hermite
/// canonical form (unique for the lattice).
IntMatrix kernel_basis(const IntMatrix& a);

/// Some x with A x = b, or nullopt when none exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);
/// Same, reusing an already computed decomposition of `a`.
std::optional<IntVector> solve_integer(const SmithDecomposition& snf,
                                       const IntVector& b);

/// Z^rows / column-span(A).
FinGenAbGroup cokernel(const IntMatrix& a);

/// ker(d1) / im(d0) for Z^c0 --d0--> Z^c1 --d1--> Z^c2.
FinGenAbGroup homology(const IntMatrix& d0, const IntMatrix& d1);

/// Homology together with an explicit quotient map ker(d1) -> group, used to
/// read off coordinates of individual cycles.
///
/// Coordinates of a cycle z: solve kernel * x = z, then the free part is
/// free_map * x and torsion component i is (torsion_map.row(i) * x) mod
/// group.torsion()[i]. free_map is in row-Hermite form, so the free
/// coordinates do not depend on the kernel basis the engine happened to pick.
struct HomologyPresentation {
  FinGenAbGroup group;
  IntMatrix kernel;       ///< c1 x k basis of ker(d1)
  IntMatrix free_map;     ///< rank x k
  IntMatrix torsion_map;  ///< |torsion| x k
  /// k x (rank + |torsion|): kernel coordinates of one cycle per generator,
  /// whose coordinates are the corresponding unit vector.
  IntMatrix generators;

  /// Coordinates of a cycle; throws DomainError if z is not in ker(d1).
  IntVector coordinates(const IntVector& z) const;
  /// True iff z is a boundary (all coordinates vanish).
  bool is_boundary(const IntVector& z) const;
  /// Cycle representing generator j.
  IntVector generator_cycle(std::size_t j) const;
};

HomologyPresentation homology_presentation(const IntMatrix& d0,
                                           const IntMatrix& d1);

/// Row-style Hermite normal form with zero rows removed: upper echelon,
/// positive pivots, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_rows(const IntMatrix& a);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& a);

/// Rank over Q.
std::size_t rational_rank(const IntMatrix& a);

/// gcd of the entries of v (0 for the zero vector).
Integer content(const IntVector& v);

}  // namespace troppic
