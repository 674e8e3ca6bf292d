#include "troppic/intlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace troppic {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows,
                                  const std::vector<IntVector>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InputError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Integer& x) { return x == 0; });
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t last) const {
  IntMatrix m(rows_, last - first);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = first; j < last; ++j) m(i, j - first) = (*this)(i, j);
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size()) throw InputError("matrix-vector dimension mismatch");
  IntVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) y[i] += a(i, k) * x[k];
  return y;
}

// ------------------------------------------------------------ FinGenAbGroup

FinGenAbGroup::FinGenAbGroup(std::size_t rank, IntVector torsion) : rank_(rank) {
  for (const auto& t : torsion)
    if (t < 0) throw InputError("negative cyclic order");
  // Normalize an arbitrary list of cyclic orders through the diagonal SNF.
  IntMatrix diag(torsion.size(), torsion.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) diag(i, i) = torsion[i];
  for (const auto& d : smith_normal_form(diag).diagonal()) {
    if (d == 0)
      ++rank_;
    else if (d != 1)
      torsion_.push_back(d);
  }
}

std::string FinGenAbGroup::to_string() const {
  std::vector<std::string> parts;
  if (rank_ == 1)
    parts.emplace_back("Z");
  else if (rank_ > 1)
    parts.push_back("Z^" + std::to_string(rank_));
  for (const auto& t : torsion_) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " ⊕ " + parts[i];
  return out;
}

// ---------------------------------------------------------------- Smith form

IntVector SmithDecomposition::diagonal() const {
  IntVector d(std::min(D.rows(), D.cols()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = D(i, i);
  return d;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

namespace {

// Quotient rounded to the nearest integer, so the remainder is at most |b|/2.
Integer nearest_quotient(const Integer& a, const Integer& b) {
  Integer q = a / b;
  const Integer r = a - q * b;
  if (2 * abs_value(r) > abs_value(b)) q += ((a < 0) == (b < 0)) ? 1 : -1;
  return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithDecomposition s{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& D = s.D;

  // Clears column t below the pivot, re-pivoting on the smallest remainder.
  auto clear_column = [&](std::size_t t) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        const Integer q = nearest_quotient(D(i, t), D(t, t));
        D.add_row_multiple(i, t, -q);
        s.U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0 && (best == m || abs_value(D(i, t)) < abs_value(D(best, t)))) best = i;
      }
      if (best == m) return;
      D.swap_rows(t, best);
      s.U.swap_rows(t, best);
    }
  };
  auto clear_row = [&](std::size_t t) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        const Integer q = nearest_quotient(D(t, j), D(t, t));
        D.add_col_multiple(j, t, -q);
        s.V.add_col_multiple(j, t, -q);
        if (D(t, j) != 0 && (best == n || abs_value(D(t, j)) < abs_value(D(t, best)))) best = j;
      }
      if (best == n) return;
      D.swap_cols(t, best);
      s.V.swap_cols(t, best);
    }
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t pr = m, pc = n;
    Integer best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (D(i, j) != 0 && (pr == m || abs_value(D(i, j)) < best)) {
          best = abs_value(D(i, j));
          pr = i;
          pc = j;
        }
    if (pr == m) break;
    D.swap_rows(t, pr);
    s.U.swap_rows(t, pr);
    D.swap_cols(t, pc);
    s.V.swap_cols(t, pc);

    for (;;) {
      clear_column(t);
      clear_row(t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m && clean; ++i) clean = D(i, t) == 0;
      if (!clean) continue;

      // Enforce d_t | every entry of the trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            D.add_row_multiple(t, i, 1);
            s.U.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

// ------------------------------------------------------------------ Hermite

IntMatrix hermite_rows(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < m; ++c) {
    for (;;) {
      std::size_t piv = m;
      for (std::size_t i = row; i < m; ++i)
        if (h(i, c) != 0 && (piv == m || abs_value(h(i, c)) < abs_value(h(piv, c))))
          piv = i;
      if (piv == m) break;
      h.swap_rows(row, piv);
      bool reduced = true;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        h.add_row_multiple(i, row, -(h(i, c) / h(row, c)));
        if (h(i, c) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (h(row, c) == 0) continue;
    if (h(row, c) < 0) h.negate_row(row);
    for (std::size_t i = 0; i < row; ++i)
      h.add_row_multiple(i, row, -floor_div(h(i, c), h(row, c)));
    ++row;
  }
  IntMatrix out(row, n);
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = h(i, j);
  return out;
}

// ------------------------------------------------------- kernels and solving

IntMatrix kernel_basis(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  const IntMatrix raw = snf.V.columns(r, a.cols());
  return hermite_rows(raw.transpose()).transpose();
}

std::optional<IntVector> solve_integer(const SmithDecomposition& snf,
                                       const IntVector& b) {
  if (b.size() != snf.U.cols()) throw InputError("right-hand side length mismatch");
  const IntVector ub = snf.U * b;
  const auto diag = snf.diagonal();
  IntVector y(snf.V.rows());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    const Integer d = i < diag.size() ? diag[i] : Integer(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
      continue;
    }
    if (ub[i] % d != 0) return std::nullopt;
    y[i] = ub[i] / d;
  }
  return snf.V * y;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw InputError("right-hand side length mismatch");
  return solve_integer(smith_normal_form(a), b);
}

FinGenAbGroup cokernel(const IntMatrix& a) {
  const auto diag = smith_normal_form(a).diagonal();
  std::size_t rank = a.rows() - diag.size();
  IntVector torsion;
  for (const auto& d : diag) {
    if (d == 0)
      ++rank;
    else if (d != 1)
      torsion.push_back(d);
  }
  return FinGenAbGroup(rank, std::move(torsion));
}

// ----------------------------------------------------------------- homology

HomologyPresentation homology_presentation(const IntMatrix& d0,
                                           const IntMatrix& d1) {
  if (d1.cols() != d0.rows())
    throw InputError("d1 columns (" + std::to_string(d1.cols()) +
                     ") != d0 rows (" + std::to_string(d0.rows()) + ")");
  if (!(d1 * d0).is_zero()) throw NotAComplex("d1 * d0 is nonzero");

  HomologyPresentation h;
  h.kernel = kernel_basis(d1);
  const std::size_t k = h.kernel.cols();
  const auto kernel_snf = smith_normal_form(h.kernel);

  // Image of d0 in kernel coordinates. Always solvable: im d0 lies in the
  // saturated lattice ker d1.
  IntMatrix image(k, d0.cols());
  for (std::size_t j = 0; j < d0.cols(); ++j) {
    const auto x = solve_integer(kernel_snf, d0.column(j));
    if (!x) throw NotAComplex("boundary outside the cycle lattice");
    for (std::size_t i = 0; i < k; ++i) image(i, j) = (*x)[i];
  }

  const auto snf = smith_normal_form(image);
  const auto diag = snf.diagonal();
  std::vector<IntVector> free_rows;
  std::vector<IntVector> torsion_rows;
  IntVector torsion;
  for (std::size_t i = 0; i < k; ++i) {
    const Integer d = i < diag.size() ? diag[i] : Integer(0);
    if (d == 0) {
      free_rows.push_back(snf.U.row(i));
    } else if (d != 1) {
      torsion_rows.push_back(snf.U.row(i));
      torsion.push_back(d);
    }
  }
  h.group = FinGenAbGroup(free_rows.size(), torsion);
  h.free_map = hermite_rows(IntMatrix::from_columns(k, free_rows).transpose());
  h.torsion_map = IntMatrix::from_columns(k, torsion_rows).transpose();

  // Generators: columns of U^-1 at the free and torsion positions, with the
  // free ones recombined to undo the Hermite change of basis.
  const auto u_snf = smith_normal_form(snf.U);
  auto u_inverse_column = [&](std::size_t i) {
    IntVector e(k);
    e[i] = 1;
    return *solve_integer(u_snf, e);
  };
  std::vector<IntVector> free_cols;
  std::vector<IntVector> torsion_cols;
  for (std::size_t i = 0; i < k; ++i) {
    const Integer d = i < diag.size() ? diag[i] : Integer(0);
    if (d == 0)
      free_cols.push_back(u_inverse_column(i));
    else if (d != 1)
      torsion_cols.push_back(u_inverse_column(i));
  }
  const IntMatrix free_basis = IntMatrix::from_columns(k, free_cols);
  const std::size_t r = free_cols.size();
  const IntMatrix change = h.free_map * free_basis;  // r x r, unimodular
  std::vector<IntVector> gens;
  for (std::size_t j = 0; j < r; ++j) {
    IntVector e(r);
    e[j] = 1;
    gens.push_back(free_basis * *solve_integer(change, e));
  }
  for (auto& t : torsion_cols) gens.push_back(std::move(t));
  h.generators = IntMatrix::from_columns(k, gens);
  return h;
}

FinGenAbGroup homology(const IntMatrix& d0, const IntMatrix& d1) {
  return homology_presentation(d0, d1).group;
}

IntVector HomologyPresentation::coordinates(const IntVector& z) const {
  if (z.size() != kernel.rows()) throw InputError("cycle length mismatch");
  const auto x = solve_integer(kernel, z);
  if (!x) throw DomainError("vector is not a cycle");
  IntVector coords = free_map * *x;
  const IntVector t = torsion_map * *x;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Integer& d = group.torsion()[i];
    coords.push_back(t[i] - floor_div(t[i], d) * d);
  }
  return coords;
}

IntVector HomologyPresentation::generator_cycle(std::size_t j) const {
  if (j >= generators.cols()) throw InputError("generator index out of range");
  return kernel * generators.column(j);
}

bool HomologyPresentation::is_boundary(const IntVector& z) const {
  const auto c = coordinates(z);
  return std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; });
}

// ------------------------------------------------------------------- misc

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rational_rank(const IntMatrix& a) {
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = Rational(a(i, j));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && m[p][c] == 0) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < a.cols(); ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs_value(x));
  return g;
}

}  // namespace troppic
