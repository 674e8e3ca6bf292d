#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "troppic/divisor.hpp"
#include "troppic/fan.hpp"
#include "troppic/io.hpp"
#include "troppic/picard.hpp"
#include "troppic/tropoly.hpp"

namespace troppic::cli {

namespace {

using io::json;
namespace fs = std::filesystem;

// Validation failure with the file it concerns.
struct Invalid {
  std::string file;
  std::string message;
};

struct Options {
  std::string format = "text";
  std::string emit_complex;
  std::string fan_path;
  std::string second_path;
};

std::string join_vector(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "]";
}

Fan load_fan(const std::string& path) {
  Fan fan = io::fan_from_json(io::read_json_file(path));
  if (auto v = validate(fan)) {
    std::string msg = v->message;
    if (v->witness) msg += "; witness " + join_vector(*v->witness);
    throw Invalid{path, msg};
  }
  return fan;
}

MonomialCartierDivisor load_divisor(const std::string& path, const Fan& fan) {
  const json j = io::read_json_file(path);
  if (auto own = io::divisor_fan(j, fs::path(path).parent_path()); own && !(*own == fan))
    throw Invalid{path, "divisor refers to a different fan"};
  auto d = io::divisor_from_json(j, fan.rank());
  if (d.local_data.size() != fan.cone_count())
    throw io::MalformedInput(path + ": expected one local datum per maximal cone (" +
                             std::to_string(fan.cone_count()) + ")");
  return d;
}

void require_glue(const PicardComputation& pic, const MonomialCartierDivisor& d,
                  const std::string& path) {
  if (auto v = validate_divisor(pic, d))
    throw Invalid{path, "local data on cones " + std::to_string(v->cone_i) + " and " +
                            std::to_string(v->cone_j) + " do not glue: " +
                            join_vector(v->obstruction) +
                            " is not a unit on their overlap"};
}

std::string polynomial_text(const TropRatPolynomial& p) {
  if (p.is_zero()) return "-inf";
  std::string s;
  for (const auto& [e, c] : p.terms()) {
    if (!s.empty()) s += " ⊕ ";
    std::string exps;
    for (std::size_t i = 0; i < e.size(); ++i) exps += (i ? "," : "") + e[i].str();
    s += c.str() + "·x^(" + exps + ")";
  }
  return s;
}

void write_complex(const CechComplex& cx, const std::string& path, std::ostream& out) {
  const std::string text = io::complex_to_json(cx).dump(2) + "\n";
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw io::MalformedInput("cannot write " + path);
  f << text;
}

int cmd_pic(const Options& o, std::ostream& out) {
  const PicardComputation pic(load_fan(o.fan_path));
  if (!o.emit_complex.empty()) write_complex(pic.complex(), o.emit_complex, out);
  if (o.format == "json")
    out << io::group_to_json(pic.picard_group()).dump() << "\n";
  else
    out << pic.picard_group().to_string() << "\n";
  return kOk;
}

int cmd_units(const Options& o, std::ostream& out) {
  const auto lattice = global_units(load_fan(o.fan_path));
  if (o.format == "json") {
    out << json{{"constant_factor", "K^×"}, {"lattice", io::group_to_json(lattice)}}.dump()
        << "\n";
  } else {
    out << (lattice.is_trivial() ? std::string("K^×") : "K^× ⊕ " + lattice.to_string())
        << "\n";
  }
  return kOk;
}

int cmd_spec(const Options& o, std::ostream& out) {
  const Fan fan = load_fan(o.fan_path);
  json all = json::array();
  for (std::size_t i = 0; i < fan.cone_count(); ++i) {
    const auto chart = chart_monoid(fan, max_cone(fan, i));
    const auto& cone = fan.max_cones()[i];
    json faces = json::array();
    for (const auto& p : chart.spec_faces()) {
      json rays = json::array();
      for (auto k : p.face_ray_indices) rays.push_back(cone[k]);
      faces.push_back(rays);
    }
    all.push_back({{"cone", i}, {"primes", faces}});
  }
  if (o.format == "json") {
    out << all.dump() << "\n";
    return kOk;
  }
  for (const auto& c : all) {
    out << "cone " << c["cone"].get<std::size_t>() << ": " << c["primes"].size()
        << " primes\n";
    for (const auto& f : c["primes"]) out << "  face " << f.dump() << "\n";
  }
  return kOk;
}

int cmd_divisor_class(const Options& o, std::ostream& out) {
  const Fan fan = load_fan(o.fan_path);
  const PicardComputation pic(fan);
  const auto d = load_divisor(o.second_path, fan);
  require_glue(pic, d, o.second_path);
  const IntVector cls = class_in_pic(pic, d);
  if (o.format == "json")
    out << json{{"class", io::vector_to_json(cls)},
                {"group", io::group_to_json(pic.picard_group())}}.dump()
        << "\n";
  else
    out << join_vector(cls) << " in " << pic.picard_group().to_string() << "\n";
  return kOk;
}

int cmd_is_principal(const Options& o, std::ostream& out) {
  const Fan fan = load_fan(o.fan_path);
  const PicardComputation pic(fan);
  const auto d = load_divisor(o.second_path, fan);
  require_glue(pic, d, o.second_path);
  const auto witness = principal_witness(pic, d);
  if (o.format == "json") {
    json j{{"principal", witness.has_value()}};
    if (witness) j["witness"] = io::vector_to_json(*witness);
    out << j.dump() << "\n";
  } else {
    out << (witness ? "true" : "false") << "\n";
  }
  return kOk;
}

int cmd_lift_cocycle(const Options& o, std::ostream& out) {
  const Fan fan = load_fan(o.fan_path);
  const PicardComputation pic(fan);
  const Cochain1 c = io::cochain_from_json(io::read_json_file(o.second_path), pic);
  MonomialCartierDivisor d;
  try {
    d = divisor_from_cocycle(pic, c);
  } catch (const CocycleError& e) {
    throw Invalid{o.second_path, e.what()};
  }
  json j = io::divisor_to_json(d);
  if (o.format == "json") {
    out << j.dump() << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return kOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const Fan fan = load_fan(o.fan_path);
  TropRatPolynomial p = [&] {
    try {
      return io::polynomial_from_json(io::read_json_file(o.second_path), fan);
    } catch (const DomainError& e) {
      throw Invalid{o.second_path, e.what()};
    }
  }();
  const auto r = reduce_to_function(p);
  if (o.format == "json")
    out << io::polynomial_to_json(r).dump() << "\n";
  else
    out << polynomial_text(r) << "\n";
  return kOk;
}

int cmd_emit_complex(const Options& o, std::ostream& out) {
  const auto cx = build_complex(load_fan(o.fan_path));
  write_complex(cx, o.emit_complex, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Picard groups of tropical toric schemes"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--emit-complex", o.emit_complex,
                 "Write the Čech complex as JSON to this file ('-' for stdout)");

  using Handler = std::function<int(const Options&, std::ostream&)>;
  Handler handler;
  auto add = [&](const char* name, const char* help, const char* second, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("fan", o.fan_path, "Fan file")->required();
    if (second) sub->add_option(second, o.second_path, std::string(second) + " file")->required();
    sub->callback([&handler, h] { handler = h; });
  };
  add("pic", "Picard group H^1", nullptr, cmd_pic);
  add("units", "Global units H^0", nullptr, cmd_units);
  add("spec", "Primes of every maximal-cone chart", nullptr, cmd_spec);
  add("divisor-class", "Class of a monomial Cartier divisor", "divisor", cmd_divisor_class);
  add("is-principal", "Whether a divisor is principal", "divisor", cmd_is_principal);
  add("lift-cocycle", "Divisor realizing a 1-cocycle", "cocycle", cmd_lift_cocycle);
  add("reduce", "Function representative of a polynomial", "polynomial", cmd_reduce);
  add("emit-complex", "Serialize the Čech complex", nullptr, cmd_emit_complex);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  }

  try {
    return handler(o, out);
  } catch (const Invalid& e) {
    err << "error: " << e.file << ": " << e.message << "\n";
    return kInvalid;
  } catch (const FanError& e) {
    err << "error: " << o.fan_path << ": " << e.what() << "\n";
    return kInvalid;
  } catch (const CocycleError& e) {
    err << "error: " << o.second_path << ": " << e.what() << "\n";
    return kInvalid;
  } catch (const io::MalformedInput& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace troppic::cli
