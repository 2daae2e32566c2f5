#include "entwine/field.hpp"

#include <cctype>

namespace entwine {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!entwine::is_prime(p))
    throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  return Field(Kind::prime, p);
}

std::string Field::name() const {
  if (kind_ == Kind::rational) return "Q";
  return "GF(" + std::to_string(p_) + ")";
}

namespace {

mpz_class reduce(const mpz_class& v, const mpz_class& p) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return r;
}

}  // namespace

Scalar Field::normalize(const Scalar& x) const {
  if (kind_ == Kind::rational) {
    Scalar y = x;
    y.canonicalize();
    return y;
  }
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = reduce(x.get_num(), p);
  mpz_class den = reduce(x.get_den(), p);
  if (den == 0) throw std::domain_error("denominator vanishes in " + name());
  if (den != 1) {
    mpz_class inverse;
    mpz_invert(inverse.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = reduce(num * inverse, p);
  }
  return Scalar(num);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::rational) return a + b;
  mpz_class s = a.get_num() + b.get_num();
  if (s >= static_cast<unsigned long>(p_)) s -= static_cast<unsigned long>(p_);
  return Scalar(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::rational) return a - b;
  mpz_class s = a.get_num() - b.get_num();
  if (s < 0) s += static_cast<unsigned long>(p_);
  return Scalar(s);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::rational) return a * b;
  mpz_class s = a.get_num() * b.get_num();
  return Scalar(reduce(s, mpz_class(static_cast<unsigned long>(p_))));
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == Kind::rational) return -a;
  if (a == 0) return a;
  return Scalar(mpz_class(static_cast<unsigned long>(p_)) - a.get_num());
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw std::domain_error("division by zero in " + name());
  if (kind_ == Kind::rational) return 1 / a;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  auto bad = [&](const std::string& why) {
    return FieldParseError("coefficient \"" + s + "\": " + why);
  };
  if (s.empty()) throw bad("empty");
  std::size_t slash = s.find('/');
  auto valid_integer = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num_text = s.substr(0, slash);
  std::string den_text = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer(num_text) || !valid_integer(den_text)) throw bad("not an integer or fraction");
  if (num_text[0] == '+') num_text.erase(0, 1);
  if (den_text[0] == '+') den_text.erase(0, 1);
  mpz_class num(num_text), den(den_text);
  if (den == 0) throw bad("zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  try {
    return normalize(q);
  } catch (const std::domain_error&) {
    throw bad("denominator not invertible in " + name());
  }
}

std::string Field::format(const Scalar& x) const {
  Scalar y = normalize(x);
  return y.get_str();
}

}  // namespace entwine
