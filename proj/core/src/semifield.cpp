#include "troppic/semifield.hpp"

#include <cctype>

namespace troppic {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

const Rational& TropRat::value() const {
  if (!value_) throw DomainError("bottom element has no rational value");
  return *value_;
}

std::string TropRat::str() const {
  if (!value_) return "-inf";
  const Integer num = boost::multiprecision::numerator(*value_);
  const Integer den = boost::multiprecision::denominator(*value_);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

TropRat TropRat::parse(std::string_view text) {
  if (text == "-inf") return TropRat();
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
    throw InputError("malformed rational '" + std::string(text) + "'");
  const Integer d{std::string(den)};
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return TropRat(Rational(Integer{std::string(num)}, d));
}

std::strong_ordering operator<=>(const TropRat& a, const TropRat& b) {
  if (a.is_bottom() || b.is_bottom()) return !a.is_bottom() <=> !b.is_bottom();
  if (a.value() < b.value()) return std::strong_ordering::less;
  if (a.value() > b.value()) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

TropRat add(const TropRat& a, const TropRat& b) { return a < b ? b : a; }

TropRat mul(const TropRat& a, const TropRat& b) {
  if (a.is_bottom() || b.is_bottom()) return TropRat();
  return TropRat(a.value() + b.value());
}

TropRat inv(const TropRat& a) {
  if (a.is_bottom()) throw DomainError("inverse of the tropical zero (-inf)");
  return TropRat(Rational(-a.value()));
}

BoolSF BoolSF::parse(std::string_view text) {
  if (text == "0") return BoolSF(false);
  if (text == "1") return BoolSF(true);
  throw InputError("malformed Boolean coefficient '" + std::string(text) + "'");
}

BoolSF inv(BoolSF a) {
  if (is_zero(a)) throw DomainError("inverse of 0 in the Boolean semifield");
  return a;
}

}  // namespace troppic
