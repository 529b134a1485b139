#include "dwork/poly.hpp"

#include <map>
#include <sstream>

namespace dwork {

QPoly make_monic(const QPoly& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.coeffs().back();
  return inv * p;
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

QPoly lcm(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  QPoly g = gcd(a, b);
  return make_monic(a * b.divmod(g).first);
}

namespace {

std::vector<Int> divisors(const Int& v) {
  long n = to_long(Int(abs(v)));
  std::vector<Int> d;
  for (long i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  return d;
}

}  // namespace

std::pair<std::vector<Rational>, QPoly> rational_roots(QPoly p) {
  std::vector<Rational> roots;
  const QPoly x = QPoly::monomial(1, 1);
  while (p.degree() >= 1) {
    if (p.coeff(0) == 0) {
      roots.emplace_back(0);
      p = p.divmod(x).first;
      continue;
    }
    Int den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    Int a0 = Int(p.coeff(0).get_num() * den / p.coeff(0).get_den());
    Int an = Int(p.coeffs().back().get_num() * den / p.coeffs().back().get_den());
    bool found = false;
    for (const Int& pp : divisors(a0)) {
      for (const Int& qq : divisors(an)) {
        for (int sg : {1, -1}) {
          Rational r = rat(sg * pp, qq);
          if (p.evaluate(r) == 0) {
            roots.push_back(r);
            p = p.divmod(x - QPoly::constant(r)).first;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  return {roots, p};
}

Int stirling2(unsigned n, unsigned k) {
  static std::map<std::pair<unsigned, unsigned>, Int> memo;
  if (k > n) return 0;
  if (n == 0) return 1;  // k == 0 here
  if (k == 0) return 0;
  auto key = std::make_pair(n, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Int v = stirling2(n - 1, k - 1) + Int(k) * stirling2(n - 1, k);
  memo[key] = v;
  return v;
}

QPoly falling_factorial(unsigned k) {
  QPoly p = QPoly::constant(1);
  for (unsigned j = 0; j < k; ++j)
    p = p * QPoly(std::vector<Rational>{rat(-static_cast<long>(j)), 1});
  return p;
}

std::string format_rational_coeff(const Rational& c, bool lead) {
  std::ostringstream os;
  if (lead) {
    if (c == -1)
      os << "-";
    else if (c != 1)
      os << c.get_str() << "*";
  } else {
    os << (c < 0 ? " - " : " + ");
    Rational a = abs(c);
    if (a != 1) os << a.get_str() << "*";
  }
  return os.str();
}

template <>
std::string Poly<Rational>::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    Rational c = c_[i];
    if (c == 0) continue;
    if (i == 0) {
      if (first)
        os << c.get_str();
      else
        os << (c < 0 ? " - " : " + ") << Rational(abs(c)).get_str();
    } else {
      os << format_rational_coeff(c, first) << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

RatFun::RatFun(QPoly num, QPoly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  QPoly g = gcd(num, den);
  if (!g.is_zero() && g.degree() > 0) {
    num = num.divmod(g).first;
    den = den.divmod(g).first;
  }
  Rational lead = den.coeffs().back();
  num_ = (1 / lead) * num;
  den_ = (1 / lead) * den;
}

Rational RatFun::evaluate(const Rational& x) const {
  Rational d = den_.evaluate(x);
  if (d == 0) throw DomainError("rational function pole at " + x.get_str());
  return num_.evaluate(x) / d;
}

std::string RatFun::to_string(const std::string& var) const {
  if (den_ == QPoly::constant(1)) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace dwork
