#include "troppic/io.hpp"

#include <fstream>
#include <limits>
#include <memory>
#include <set>

namespace troppic::io {

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object()) throw MalformedInput("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw MalformedInput(std::string("missing member \"") + key + "\"");
  return *it;
}

const json& array_member(const json& j, const char* key) {
  const json& a = member(j, key);
  if (!a.is_array()) throw MalformedInput(std::string("member \"") + key + "\" must be an array");
  return a;
}

std::size_t index_from_json(const json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw MalformedInput("expected a nonnegative integer index");
  return j.get<std::size_t>();
}

TropRat coeff_from_json(const json& j) {
  if (!j.is_string()) throw MalformedInput("coefficient must be a string \"p/q\" or \"-inf\"");
  try {
    return TropRat::parse(j.get<std::string>());
  } catch (const InputError& e) {
    throw MalformedInput(e.what());
  }
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw MalformedInput(path.string() + ": " + e.what());
  }
}

json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return json(static_cast<long long>(v));
  return json(v.str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto body = !s.empty() && s.front() == '-' ? s.substr(1) : s;
    if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
      throw MalformedInput("malformed integer string \"" + s + "\"");
    return Integer(s);
  }
  throw MalformedInput("expected an integer");
}

json vector_to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(integer_to_json(x));
  return a;
}

IntVector vector_from_json(const json& j) {
  if (!j.is_array()) throw MalformedInput("expected an integer array");
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

json matrix_to_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_to_json(m.row(i)));
  return a;
}

Fan fan_from_json(const json& j) {
  const json& rank_j = member(j, "rank");
  if (!rank_j.is_number_integer() || rank_j.get<long long>() < 0)
    throw MalformedInput("\"rank\" must be a nonnegative integer");
  const auto rank = rank_j.get<std::size_t>();
  std::vector<IntVector> rays;
  for (const auto& r : array_member(j, "rays")) {
    rays.push_back(vector_from_json(r));
    if (rays.back().size() != rank)
      throw MalformedInput("ray " + std::to_string(rays.size() - 1) + " has length " +
                           std::to_string(rays.back().size()) + ", rank is " +
                           std::to_string(rank));
  }
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& c : array_member(j, "max_cones")) {
    if (!c.is_array()) throw MalformedInput("each maximal cone must be an array of ray indices");
    std::vector<std::size_t> ids;
    for (const auto& i : c) ids.push_back(index_from_json(i));
    cones.push_back(std::move(ids));
  }
  try {
    return Fan(rank, std::move(rays), std::move(cones));
  } catch (const InputError& e) {
    throw MalformedInput(e.what());
  }
}

json fan_to_json(const Fan& fan) {
  json rays = json::array();
  for (const auto& r : fan.rays()) rays.push_back(vector_to_json(r));
  json cones = json::array();
  for (const auto& c : fan.max_cones()) cones.push_back(c);
  return json{{"rank", fan.rank()}, {"rays", rays}, {"max_cones", cones}};
}

MonomialCartierDivisor divisor_from_json(const json& j, std::size_t lattice_rank) {
  const json& data = array_member(j, "local_data");
  std::vector<std::optional<LocalDatum>> slots(data.size());
  for (const auto& rec : data) {
    const std::size_t cone = index_from_json(member(rec, "cone"));
    if (cone >= slots.size())
      throw MalformedInput("local datum for cone " + std::to_string(cone) + " out of range");
    if (slots[cone]) throw MalformedInput("duplicate local datum for cone " + std::to_string(cone));
    LocalDatum d{coeff_from_json(member(rec, "coeff")), vector_from_json(member(rec, "exp"))};
    if (d.exponent.size() != lattice_rank)
      throw MalformedInput("exponent for cone " + std::to_string(cone) + " has wrong length");
    slots[cone] = std::move(d);
  }
  MonomialCartierDivisor out;
  for (auto& s : slots) out.local_data.push_back(std::move(*s));
  return out;
}

std::optional<Fan> divisor_fan(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object() || !j.contains("fan")) return std::nullopt;
  const json& f = j.at("fan");
  if (f.is_string()) {
    std::filesystem::path p = f.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    return fan_from_json(read_json_file(p));
  }
  return fan_from_json(f);
}

json divisor_to_json(const MonomialCartierDivisor& d) {
  json data = json::array();
  for (std::size_t i = 0; i < d.local_data.size(); ++i)
    data.push_back({{"cone", i},
                    {"coeff", d.local_data[i].coefficient.str()},
                    {"exp", vector_to_json(d.local_data[i].exponent)}});
  return json{{"local_data", data}};
}

TropRatPolynomial polynomial_from_json(const json& j, const Fan& fan) {
  ConeRef cone;
  const json* terms = &j;
  if (j.is_object()) {
    const std::size_t id = index_from_json(member(j, "cone"));
    if (id >= fan.cone_count()) throw MalformedInput("unknown cone " + std::to_string(id));
    cone = max_cone(fan, id);
    terms = &array_member(j, "terms");
  } else if (!j.is_array()) {
    throw MalformedInput("polynomial must be a term list or {\"cone\", \"terms\"}");
  }
  std::vector<std::pair<IntVector, TropRat>> parsed;
  for (const auto& t : *terms) {
    IntVector e = vector_from_json(member(t, "exp"));
    if (e.size() != fan.rank()) throw MalformedInput("term exponent of wrong length");
    parsed.emplace_back(std::move(e), coeff_from_json(member(t, "coeff")));
  }
  auto chart = std::make_shared<const AffineToricMonoid>(chart_monoid(fan, cone));
  return TropRatPolynomial(std::move(chart), parsed);
}

json polynomial_to_json(const TropRatPolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"coeff", c.str()}, {"exp", vector_to_json(e)}});
  return terms;
}

Cochain1 cochain_from_json(const json& j, const PicardComputation& pic) {
  const auto& cx = pic.complex();
  std::vector<std::optional<IntVector>> slots(cx.pairs.size());
  for (const auto& rec : array_member(j, "pairs")) {
    const json& cones = array_member(rec, "cones");
    if (cones.size() != 2) throw MalformedInput("\"cones\" must name two cones");
    const std::size_t a = index_from_json(cones[0]);
    const std::size_t b = index_from_json(cones[1]);
    if (a >= b || b >= cx.fan.cone_count())
      throw MalformedInput("pair must be increasing cone ids of the fan");
    const std::size_t p = cx.pair_index(a, b);
    if (slots[p]) throw MalformedInput("duplicate value for a pair");
    IntVector v = vector_from_json(member(rec, "value"));
    if (v.size() != cx.fan.rank()) throw MalformedInput("cochain value of wrong length");
    slots[p] = std::move(v);
  }
  Cochain1 c;
  for (std::size_t p = 0; p < slots.size(); ++p) {
    if (!slots[p])
      throw MalformedInput("missing value for pair (" + std::to_string(cx.pairs[p][0]) + ", " +
                           std::to_string(cx.pairs[p][1]) + ")");
    c.push_back(std::move(*slots[p]));
  }
  return c;
}

json cochain_to_json(const Cochain1& c, const PicardComputation& pic) {
  json pairs = json::array();
  for (std::size_t p = 0; p < c.size(); ++p)
    pairs.push_back({{"cones", pic.complex().pairs.at(p)}, {"value", vector_to_json(c[p])}});
  return json{{"pairs", pairs}};
}

json group_to_json(const FinGenAbGroup& g) {
  return json{{"rank", g.rank()}, {"torsion", vector_to_json(g.torsion())}};
}

json complex_to_json(const CechComplex& cx) {
  auto bases = [](const std::vector<IntMatrix>& bs) {
    json a = json::array();
    for (const auto& b : bs) a.push_back(matrix_to_json(b.transpose()));
    return a;
  };
  json singles = json::array();
  for (std::size_t i = 0; i < cx.fan.cone_count(); ++i) singles.push_back(json::array({i}));
  json pairs = json::array();
  for (const auto& p : cx.pairs) pairs.push_back(p);
  json triples = json::array();
  for (const auto& t : cx.triples) triples.push_back(t);
  return json{
      {"fan", fan_to_json(cx.fan)},
      {"augmented", cx.augmented},
      {"simplices", {{"0", singles}, {"1", pairs}, {"2", triples}}},
      // Each basis is listed as rows = basis vectors in Z^n.
      {"lattice_bases", {{"0", bases(cx.chart_bases)}, {"1", bases(cx.pair_bases)},
                         {"2", bases(cx.triple_bases)}}},
      {"ranks", {cx.c0_rank(), cx.c1_rank(), cx.c2_rank()}},
      {"d0", {{"rows", cx.d0.rows()}, {"cols", cx.d0.cols()}, {"entries", matrix_to_json(cx.d0)}}},
      {"d1", {{"rows", cx.d1.rows()}, {"cols", cx.d1.cols()}, {"entries", matrix_to_json(cx.d1)}}},
  };
}

}  // namespace troppic::io
