#include "troppic/picard.hpp"

#include <algorithm>

namespace troppic {

namespace {

std::size_t summand_rank(const IntMatrix& basis, bool augmented) {
  return basis.cols() + (augmented ? 1 : 0);
}

// Coordinates of the sublattice basis `from` in terms of the basis `to`
// (to * M = from), with the constant summand mapped identically.
IntMatrix inclusion(const IntMatrix& from, const IntMatrix& to, bool augmented) {
  const auto to_snf = smith_normal_form(to);
  IntMatrix m(summand_rank(to, augmented), summand_rank(from, augmented));
  for (std::size_t j = 0; j < from.cols(); ++j) {
    const auto x = solve_integer(to_snf, from.column(j));
    // Unit lattices of smaller charts sit inside those of their overlaps.
    if (!x) throw DomainError("unit lattice is not contained in its restriction target");
    for (std::size_t i = 0; i < to.cols(); ++i) m(i, j) = (*x)[i];
  }
  if (augmented) m(to.cols(), from.cols()) = 1;
  return m;
}

void place_block(IntMatrix& target, std::size_t row, std::size_t col,
                 const IntMatrix& block, int sign) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j)
      target(row + i, col + j) += sign * block(i, j);
}

std::vector<std::size_t> offsets(const std::vector<IntMatrix>& bases, bool augmented,
                                 std::size_t& total) {
  std::vector<std::size_t> out;
  total = 0;
  for (const auto& b : bases) {
    out.push_back(total);
    total += summand_rank(b, augmented);
  }
  return out;
}

}  // namespace

std::size_t CechComplex::pair_index(std::size_t i, std::size_t j) const {
  const std::array<std::size_t, 2> key{std::min(i, j), std::max(i, j)};
  const auto it = std::lower_bound(pairs.begin(), pairs.end(), key);
  if (i == j || it == pairs.end() || *it != key) throw InputError("no such pair of cones");
  return static_cast<std::size_t>(it - pairs.begin());
}

CechComplex build_complex(const Fan& fan, ComplexOptions options) {
  require_valid(fan);
  CechComplex cx{fan, options.augment_constant, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  const bool aug = cx.augmented;
  const std::size_t count = fan.cone_count();

  auto units_of = [&](const std::vector<std::size_t>& ids) {
    return chart_monoid(fan, intersection_cone(fan, ids)).units_lattice();
  };

  for (std::size_t i = 0; i < count; ++i) cx.chart_bases.push_back(units_of({i}));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) {
      cx.pairs.push_back({i, j});
      cx.pair_bases.push_back(units_of({i, j}));
    }
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      for (std::size_t k = j + 1; k < count; ++k) {
        cx.triples.push_back({i, j, k});
        cx.triple_bases.push_back(units_of({i, j, k}));
      }

  std::size_t c0 = 0, c1 = 0, c2 = 0;
  cx.chart_offsets = offsets(cx.chart_bases, aug, c0);
  cx.pair_offsets = offsets(cx.pair_bases, aug, c1);
  cx.triple_offsets = offsets(cx.triple_bases, aug, c2);

  cx.d0 = IntMatrix(c1, c0);
  for (std::size_t p = 0; p < cx.pairs.size(); ++p) {
    const auto [i, j] = cx.pairs[p];
    const std::size_t row = cx.pair_offsets[p];
    place_block(cx.d0, row, cx.chart_offsets[i],
                inclusion(cx.chart_bases[i], cx.pair_bases[p], aug), -1);
    place_block(cx.d0, row, cx.chart_offsets[j],
                inclusion(cx.chart_bases[j], cx.pair_bases[p], aug), +1);
  }

  cx.d1 = IntMatrix(c2, c1);
  for (std::size_t t = 0; t < cx.triples.size(); ++t) {
    const auto [i, j, k] = cx.triples[t];
    const std::size_t row = cx.triple_offsets[t];
    const std::array<std::pair<std::size_t, int>, 3> faces{
        {{cx.pair_index(j, k), +1}, {cx.pair_index(i, k), -1}, {cx.pair_index(i, j), +1}}};
    for (const auto& [p, sign] : faces)
      place_block(cx.d1, row, cx.pair_offsets[p],
                  inclusion(cx.pair_bases[p], cx.triple_bases[t], aug), sign);
  }

  if (!(cx.d1 * cx.d0).is_zero()) throw NotAComplex("Čech differentials do not compose to zero");
  return cx;
}

PicardComputation::PicardComputation(const Fan& fan, ComplexOptions options)
    : complex_(build_complex(fan, options)),
      h1_(homology_presentation(complex_.d0, complex_.d1)) {}

IntVector PicardComputation::cochain_coordinates(const Cochain1& c) const {
  const auto& cx = complex_;
  if (c.size() != cx.pairs.size())
    throw InputError("cochain has " + std::to_string(c.size()) + " values, expected " +
                     std::to_string(cx.pairs.size()));
  IntVector x(cx.c1_rank());
  for (std::size_t p = 0; p < cx.pairs.size(); ++p) {
    if (c[p].size() != cx.fan.rank()) throw InputError("cochain value of wrong length");
    const auto y = solve_integer(cx.pair_bases[p], c[p]);
    if (!y)
      throw CocycleError("value on pair (" + std::to_string(cx.pairs[p][0]) + ", " +
                             std::to_string(cx.pairs[p][1]) +
                             ") is not a unit of the overlap chart",
                         {cx.pairs[p][0], cx.pairs[p][1]});
    for (std::size_t i = 0; i < y->size(); ++i) x[cx.pair_offsets[p] + i] = (*y)[i];
  }
  return x;
}

Cochain1 PicardComputation::cochain_from_coordinates(const IntVector& x) const {
  const auto& cx = complex_;
  if (x.size() != cx.c1_rank()) throw InputError("coordinate vector of wrong length");
  Cochain1 c;
  for (std::size_t p = 0; p < cx.pairs.size(); ++p) {
    const IntMatrix& basis = cx.pair_bases[p];
    IntVector y(basis.cols());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = x[cx.pair_offsets[p] + i];
    c.push_back(basis * y);
  }
  return c;
}

void PicardComputation::check_cocycle(const Cochain1& c) const {
  const auto& cx = complex_;
  if (c.size() != cx.pairs.size()) throw InputError("cochain length mismatch");
  for (const auto& [i, j, k] : cx.triples) {
    const auto& cjk = c[cx.pair_index(j, k)];
    const auto& cik = c[cx.pair_index(i, k)];
    const auto& cij = c[cx.pair_index(i, j)];
    for (std::size_t a = 0; a < cx.fan.rank(); ++a)
      if (cjk[a] - cik[a] + cij[a] != 0)
        throw CocycleError("cocycle condition fails on triple (" + std::to_string(i) +
                               ", " + std::to_string(j) + ", " + std::to_string(k) + ")",
                           {i, j, k});
  }
}

IntVector PicardComputation::class_of_cocycle(const Cochain1& c) const {
  const IntVector x = cochain_coordinates(c);
  check_cocycle(c);
  return h1_.coordinates(x);
}

std::vector<Cochain1> PicardComputation::generator_cocycles() const {
  std::vector<Cochain1> out;
  for (std::size_t g = 0; g < h1_.generators.cols(); ++g) {
    IntVector z = h1_.generator_cycle(g);
    // Drop the constant coordinates of an augmented complex; they carry no
    // lattice data.
    if (complex_.augmented)
      for (std::size_t p = 0; p < complex_.pairs.size(); ++p)
        z[complex_.pair_offsets[p] + complex_.pair_bases[p].cols()] = 0;
    out.push_back(cochain_from_coordinates(z));
  }
  return out;
}

FinGenAbGroup picard_group(const Fan& fan, ComplexOptions options) {
  const auto cx = build_complex(fan, options);
  return homology(cx.d0, cx.d1);
}

FinGenAbGroup global_units(const Fan& fan) {
  const auto cx = build_complex(fan);
  return FinGenAbGroup(kernel_basis(cx.d0).cols());
}

}  // namespace troppic
