// Acceptance suite: one PASS/FAIL line per criterion. All checks are exact;
// the sample sizes below are the pinned minimums.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "oracles.hpp"
#include "troppic/divisor.hpp"
#include "troppic/picard.hpp"
#include "troppic/tropoly.hpp"

namespace {

using namespace troppic;
using oracle::load_fan;
using oracle::vec;
using Poly = TropRatPolynomial;
using ChartPtr = std::shared_ptr<const AffineToricMonoid>;

constexpr std::size_t kMinUnitInstances = 900;  // criterion 6, "about 10^3"
constexpr int kPairsPerChart = 500;             // criterion 7
constexpr int kDivisorsPerFan = 100;            // criterion 8
constexpr int kCocyclesPerFan = 20;             // criterion 8 (c)
constexpr int kReduceInstances = 300;           // criterion 9
constexpr int kComplexes = 240;                 // criterion 10
constexpr double kSecondsPerCheck = 2.0;

const char* const kAllValid[] = {"p1", "p2", "p3", "p1xp1", "hirzebruch_f0", "hirzebruch_f1",
                                 "hirzebruch_f2", "hirzebruch_f3", "p112", "affine_quadrant",
                                 "laurent_torus", "p1xa1"};
const char* const kSmoothComplete[] = {"p1", "p2", "p3", "p1xp1", "hirzebruch_f0",
                                       "hirzebruch_f1", "hirzebruch_f2", "hirzebruch_f3"};

// Outcome of one criterion: empty `failure` means pass.
struct Outcome {
  std::string failure;
  std::string detail;
};

#define REQUIRE(cond, msg)                \
  do {                                    \
    if (!(cond)) {                        \
      std::ostringstream os_;             \
      os_ << msg;                         \
      return Outcome{os_.str(), {}};      \
    }                                     \
  } while (0)

ChartPtr chart(std::size_t n, std::vector<IntVector> rays) {
  return std::make_shared<const AffineToricMonoid>(n, std::move(rays));
}

std::vector<ChartPtr> small_charts() {
  return {chart(1, {}),
          chart(1, {vec({1})}),
          chart(1, {vec({-1})}),
          chart(2, {}),
          chart(2, {vec({1, 0}), vec({0, 1})}),
          chart(2, {vec({1, 0})}),
          chart(2, {vec({0, 1})}),
          chart(2, {vec({-1, -2})}),
          chart(2, {vec({0, 1}), vec({-1, -2})}),
          chart(2, {vec({1, 0}), vec({-1, -2})})};
}

Poly random_poly(std::mt19937& rng, const ChartPtr& c, int max_terms, int box) {
  std::uniform_int_distribution<int> e(-box, box), k(-3, 3), n(0, max_terms);
  std::vector<std::pair<IntVector, TropRat>> t;
  const int count = n(rng);
  while (static_cast<int>(t.size()) < count) {
    IntVector u(c->lattice_rank());
    for (auto& x : u) x = e(rng);
    if (c->contains(u)) t.emplace_back(u, TropRat(Rational(k(rng), 1 + rng() % 2)));
  }
  return Poly(c, t);
}

std::string cli_pic(const std::string& fan_name) {
  std::ostringstream out, err;
  const int status = cli::run({"pic", oracle::fixture("fans/" + fan_name + ".json").string()}, out, err);
  return status == cli::kOk ? out.str() : "exit " + std::to_string(status) + ": " + err.str();
}

Outcome criterion1() {
  for (const char* name : {"p1", "p2", "p3"}) {
    REQUIRE(cli_pic(name) == "Z\n", name << ": pic printed " << cli_pic(name));
    REQUIRE(picard_group(load_fan(name)) == FinGenAbGroup(1), name);
  }
  return {{}, "P^1, P^2, P^3 -> Z"};
}

Outcome criterion2() {
  REQUIRE(cli_pic("p1xp1") == "Z^2\n", "pic printed " << cli_pic("p1xp1"));
  const auto cx = build_complex(load_fan("p1xp1"));
  REQUIRE(cx.c0_rank() == 0 && cx.c1_rank() == 8 && cx.c2_rank() == 8,
          "ranks " << cx.c0_rank() << "," << cx.c1_rank() << "," << cx.c2_rank());
  return {{}, "Z^2, cochain ranks (0, 8, 8)"};
}

Outcome criterion3() {
  int fans = 0;
  for (const char* name : {"affine_quadrant", "laurent_torus"}) {
    REQUIRE(cli_pic(name) == "0\n", name << ": pic printed " << cli_pic(name));
    ++fans;
  }
  // Every maximal cone of every bundled fan, taken as an affine fan.
  for (const char* name : kAllValid) {
    const Fan fan = load_fan(name);
    for (const auto& cone : fan.max_cones()) {
      std::vector<IntVector> rays;
      std::vector<std::size_t> ids;
      for (auto r : cone) {
        ids.push_back(rays.size());
        rays.push_back(fan.rays()[r]);
      }
      REQUIRE(picard_group(Fan(fan.rank(), rays, {ids})).is_trivial(), name);
      ++fans;
    }
  }
  return {{}, std::to_string(fans) + " single-cone fans"};
}

Outcome criterion4() {
  for (const char* name : kSmoothComplete) {
    const Fan fan = load_fan(name);
    const auto got = picard_group(fan);
    const auto want = oracle::classical_pic(fan);
    REQUIRE(got == want, name << ": " << got.to_string() << " vs oracle " << want.to_string());
  }
  // P(1,1,2): d1 derived by hand in the bases e2^perp, e1^perp, (-1,-2)^perp.
  const IntMatrix by_hand{{1, 0, 2}, {0, -1, -1}};
  const auto hand = oracle::homology_by_enumeration(IntMatrix(3, 0), by_hand, 2);
  const auto cx = build_complex(load_fan("p112"));
  REQUIRE(cx.c0_rank() == 0 && cx.c1_rank() == 3 && cx.c2_rank() == 2, "p112 ranks");
  REQUIRE(hand == FinGenAbGroup(1), "by-hand P(1,1,2) gives " << hand.to_string());
  REQUIRE(picard_group(load_fan("p112")) == hand, "p112");
  return {{}, "8 smooth complete fans + P(1,1,2)"};
}

Outcome criterion5() {
  for (const char* name : kAllValid) {
    const Fan fan = load_fan(name);
    const auto plain = picard_group(fan);
    const auto aug = picard_group(fan, {.augment_constant = true});
    REQUIRE(plain == aug, name << ": " << plain.to_string() << " vs " << aug.to_string());
  }
  return {{}, "12 fans"};
}

Outcome criterion6() {
  std::size_t instances = 0, units = 0;
  for (const auto& c : small_charts()) {
    const auto family = oracle::small_family(c, 1);
    for (const auto& p : family) {
      const bool claimed = is_unit(p).has_value();
      const bool found = oracle::has_inverse_in(p, family);
      REQUIRE(claimed == found, "disagreement on a " << p.terms().size() << "-term polynomial");
      ++instances;
      units += claimed;
    }
  }
  REQUIRE(instances >= kMinUnitInstances, "only " << instances << " instances");
  return {{}, std::to_string(instances) + " instances, " + std::to_string(units) + " units"};
}

Outcome criterion7() {
  std::mt19937 rng(7);
  auto charts = small_charts();
  charts.push_back(chart(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}));
  charts.push_back(chart(3, {}));
  for (const auto& c : charts) {
    for (int i = 0; i < kPairsPerChart; ++i) {
      const Poly x = random_poly(rng, c, 4, 2), y = random_poly(rng, c, 4, 2);
      REQUIRE(phi(x) <= phi(add(x, y)), "phi(x) > phi(x + y)");
      if (!y.is_zero()) REQUIRE(phi(mul(x, y)) >= phi(x), "phi(xy) < phi(x)");
      const Poly m = random_poly(rng, c, 1, 2);
      if (phi(m) == 1) REQUIRE(phi(mul(m, x)) == phi(x), "phi(mx) != phi(x)");
    }
  }
  return {{}, std::to_string(charts.size()) + " charts x " + std::to_string(kPairsPerChart) + " pairs"};
}

Outcome criterion8() {
  std::mt19937 rng(8);
  std::size_t principal = 0, total = 0;
  for (const char* name : kAllValid) {
    const Fan fan = load_fan(name);
    const PicardComputation pic(fan);
    // (a)
    for (int t = 0; t < kDivisorsPerFan; ++t) {
      const auto d = oracle::sample_divisor(rng, fan, 2);
      REQUIRE(d.has_value(), name << ": no divisor sampled");
      REQUIRE(!validate_divisor(pic, *d), name << ": sampled divisor rejected");
      const IntVector cls = class_in_pic(pic, *d);
      const bool zero = std::all_of(cls.begin(), cls.end(), [](const Integer& v) { return v == 0; });
      const bool p = is_principal(pic, *d);
      REQUIRE(p == zero, name << ": is_principal " << p << " but class zero " << zero);
      REQUIRE(p == oracle::principal_by_enumeration(fan, *d, 2), name << ": enumeration disagrees");
      principal += p;
      ++total;
    }
    // (b)
    const auto gens = pic.generator_cocycles();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      IntVector e(gens.size());
      e[j] = 1;
      REQUIRE(class_in_pic(pic, divisor_from_cocycle(pic, gens[j])) == e, name << ": generator " << j);
    }
    // (c)
    std::uniform_int_distribution<int> coef(-3, 3);
    const IntMatrix& ker = pic.h1().kernel;
    for (int t = 0; t < kCocyclesPerFan; ++t) {
      IntVector x(ker.cols());
      for (auto& v : x) v = coef(rng);
      const Cochain1 c = pic.cochain_from_coordinates(ker * x);
      REQUIRE(cocycle_of(pic, divisor_from_cocycle(pic, c)) == c, name << ": round trip");
    }
  }
  return {{}, std::to_string(total) + " divisors (" + std::to_string(principal) + " principal)"};
}

Outcome criterion9() {
  std::mt19937 rng(9);
  const std::vector<ChartPtr> charts{chart(1, {}), chart(1, {vec({1})}), chart(2, {}),
                                     chart(2, {vec({1, 0}), vec({0, 1})})};
  int cancellations = 0;
  for (int i = 0; i < kReduceInstances; ++i) {
    const auto& c = charts[i % charts.size()];
    const Poly p = random_poly(rng, c, 3, 2), q = random_poly(rng, c, 3, 2);
    const Poly rp = reduce_to_function(p), rq = reduce_to_function(q);
    REQUIRE(reduce_to_function(rp) == rp, "not idempotent");
    REQUIRE(reduce_to_function(add(p, q)) == reduce_to_function(add(rp, rq)), "sum not preserved");
    REQUIRE(reduce_to_function(mul(p, q)) == reduce_to_function(mul(rp, rq)), "product not preserved");
    // q2 differs from p by one term, which may or may not be dominated.
    const Poly q2 = add(p, random_poly(rng, c, 1, 2));
    Poly r = random_poly(rng, c, 3, 2);
    if (r.is_zero()) r = Poly::constant(c, TropRat::one());
    const bool products = reduce_to_function(mul(p, r)) == reduce_to_function(mul(q2, r));
    const bool factors = reduce_to_function(p) == reduce_to_function(q2);
    REQUIRE(products == factors, "cancellation fails after reduction");
    if (products && !(p == q2)) ++cancellations;
  }
  REQUIRE(cancellations > 0, "cancellation hypothesis never exercised");
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<IntVector> rays;
    std::vector<std::size_t> ids;
    for (std::size_t k = 0; k < n; ++k) {
      IntVector e(n);
      e[k] = 1;
      rays.push_back(e);
      ids.push_back(k);
    }
    REQUIRE(picard_group(Fan(n, rays, {ids})).is_trivial(), "affine " << n << "-space");
  }
  return {{}, std::to_string(kReduceInstances) + " instances, " + std::to_string(cancellations) +
                  " nontrivial cancellations"};
}

Outcome criterion10() {
  std::mt19937 rng(10);
  int done = 0, nontrivial = 0;
  while (done < kComplexes) {
    const std::size_t c0 = rng() % 4, c1 = 1 + rng() % 3, c2 = rng() % 4;
    IntMatrix d0, d1;
    if (done % 2 == 0) {
      // d1 first, d0 from its small kernel vectors.
      d1 = oracle::random_matrix(rng, c2, c1, -2, 2);
      const auto ker = oracle::kernel_by_enumeration(d1, 2);
      std::vector<IntVector> cols;
      for (std::size_t j = 0; j < c0; ++j) cols.push_back(ker[rng() % ker.size()]);
      d0 = c0 ? IntMatrix::from_columns(c1, cols) : IntMatrix(c1, 0);
    } else {
      // d0 first, rows of d1 from the small left kernel of d0.
      d0 = oracle::random_matrix(rng, c1, c0, -2, 2);
      const auto left = oracle::kernel_by_enumeration(d0.transpose(), 2);
      IntMatrix m(c2, c1);
      for (std::size_t i = 0; i < c2; ++i) {
        const IntVector& row = left[rng() % left.size()];
        for (std::size_t j = 0; j < c1; ++j) m(i, j) = row[j];
      }
      d1 = m;
    }
    const auto got = homology(d0, d1);
    const auto want = oracle::homology_by_enumeration(d0, d1, 2);
    REQUIRE(got == want, "d0 =\n" << d0.to_string() << "d1 =\n" << d1.to_string() << got.to_string()
                                  << " vs " << want.to_string());
    nontrivial += !got.is_trivial();
    ++done;
  }
  return {{}, std::to_string(done) + " complexes, " + std::to_string(nontrivial) + " nontrivial"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"Pic(P^n) = Z, n = 1..3", criterion1},
      {"Pic(P^1 x P^1) = Z^2 with C^1, C^2 ranks 8, 8", criterion2},
      {"affine vanishing on single-cone fans", criterion3},
      {"agreement with classical toric Pic and by-hand P(1,1,2)", criterion4},
      {"constant-factor splitting", criterion5},
      {"unit criterion vs bounded inverse search", criterion6},
      {"phi inequalities", criterion7},
      {"CaCl = Pic: principality, generators, round trip", criterion8},
      {"reduced model: quotient map, cancellation, affine Pic", criterion9},
      {"homology vs lattice enumeration", criterion10},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [title, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.failure = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.failure.empty() && secs > kSecondsPerCheck)
      o.failure = "took " + std::to_string(secs) + " s";
    const bool pass = o.failure.empty();
    failures += !pass;
    std::printf("%s %2d  %s  [%s] (%.2f s)\n", pass ? "PASS" : "FAIL", index, title,
                pass ? o.detail.c_str() : o.failure.c_str(), secs);
  }
  return failures == 0 ? 0 : 1;
}
