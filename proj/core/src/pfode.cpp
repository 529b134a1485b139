#include "dwork/pfode.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "dwork/matrix.hpp"

namespace dwork {

namespace {

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string factored_string(const std::vector<Rational>& params, const std::string& sym) {
  std::ostringstream os;
  std::size_t i = 0;
  while (i < params.size()) {
    std::size_t j = i;
    while (j < params.size() && params[j] == params[i]) ++j;
    if (params[i] == 0) {
      os << sym;
    } else {
      os << "(" << sym << (params[i] < 0 ? "-" : "+") << Rational(abs(params[i])).get_str()
         << ")";
    }
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

QPoly product_poly(const std::vector<Rational>& params) {
  QPoly p = QPoly::constant(1);
  for (const auto& s : params) p = p * QPoly(std::vector<Rational>{s, 1});
  return p;
}

// series with rational exponents, exact coefficients
using ExpSeries = std::map<Rational, Rational>;

ExpSeries apply_theta_product(const ExpSeries& s, const std::vector<Rational>& params) {
  ExpSeries r;
  for (const auto& [e, c] : s) {
    Rational f = c;
    for (const auto& p : params) f *= e + p;
    if (f != 0) r.emplace(e, f);
  }
  return r;
}

ExpSeries apply_operator(const ThetaOperator& op, const ExpSeries& s) {
  ExpSeries r = apply_theta_product(s, op.lower);
  for (const auto& [e, c] : apply_theta_product(s, op.upper)) {
    Rational key = e + op.monomial_power;
    Rational v = r.count(key) ? Rational(r[key] - op.scale * c) : Rational(-op.scale * c);
    if (v == 0)
      r.erase(key);
    else
      r[key] = v;
  }
  return r;
}

ExpSeries x_derivative(const ExpSeries& s) {
  ExpSeries r;
  for (const auto& [e, c] : s) {
    Rational v = c * e;
    if (v != 0) r.emplace(e - 1, v);
  }
  return r;
}

[[noreturn]] void first_mismatch(const ExpSeries& lhs, const ExpSeries& rhs) {
  std::map<Rational, std::pair<Rational, Rational>> both;
  for (const auto& [e, c] : lhs) both[e].first = c;
  for (const auto& [e, c] : rhs) both[e].second = c;
  for (const auto& [e, pr] : both)
    if (pr.first != pr.second)
      throw VerificationFailed("coefficient of exponent " + e.get_str() + ": " +
                               pr.first.get_str() + " vs " + pr.second.get_str());
  throw VerificationFailed("mismatch without differing coefficient");
}

ThetaOperator d_form_to_theta(const std::vector<QPoly>& P, char variable) {
  std::map<long, QPoly> g = theta_layers(P);
  if (g.empty() || g.size() != 2)
    throw NotCanonicalForm("operator is not binomial in the variable");
  long smin = g.begin()->first;
  QPoly g0 = g.begin()->second;
  long q = std::next(g.begin())->first - smin;
  QPoly gq = std::next(g.begin())->second;

  auto [roots0, rem0] = rational_roots(g0);
  auto [rootsq, remq] = rational_roots(gq);
  if (rem0.degree() != 0 || remq.degree() != 0)
    throw NotCanonicalForm("coefficient polynomial does not split over the rationals");
  if (roots0.size() != rootsq.size())
    throw NotCanonicalForm("unequal factor degrees");

  ThetaOperator out;
  out.variable = variable;
  for (const auto& r : roots0) out.lower.push_back(-r);
  for (const auto& r : rootsq) out.upper.push_back(-r);
  out.lower = sorted(out.lower);
  out.upper = sorted(out.upper);
  out.scale = -remq.coeff(0) / rem0.coeff(0);
  out.monomial_power = q;
  return out;
}

}  // namespace

std::map<long, QPoly> theta_layers(const std::vector<QPoly>& dform) {
  std::map<long, QPoly> g;
  for (std::size_t j = 0; j < dform.size(); ++j) {
    QPoly ff = falling_factorial(j);
    for (long mdeg = 0; mdeg <= dform[j].degree(); ++mdeg) {
      Rational c = dform[j].coeff(mdeg);
      if (c == 0) continue;
      long key = mdeg - static_cast<long>(j);
      g[key] = g[key] + c * ff;
    }
  }
  for (auto it = g.begin(); it != g.end();)
    it = it->second.is_zero() ? g.erase(it) : std::next(it);
  return g;
}

std::vector<Rational> ThetaOperator::exponents_at_zero() const {
  std::vector<Rational> e;
  for (const auto& l : lower) e.push_back(-l);
  return sorted(e);
}

std::vector<Rational> ThetaOperator::exponents_at_infinity() const {
  return sorted(upper);
}

std::string ThetaOperator::pretty() const {
  std::string sym = std::string("θ_") + variable;
  std::ostringstream os;
  os << factored_string(lower, sym);
  os << (scale < 0 ? " + " : " - ");
  Rational a = abs(scale);
  if (a != 1) os << "(" << a.get_str() << ")";
  os << variable;
  if (monomial_power != 1) os << "^" << monomial_power;
  os << factored_string(upper, sym);
  return os.str();
}

std::string ThetaOperator::to_json_string() const {
  nlohmann::json j;
  j["variable"] = std::string(1, variable);
  j["scale"] = scale.get_str();
  j["monomial_power"] = monomial_power;
  j["lower"] = nlohmann::json::array();
  j["upper"] = nlohmann::json::array();
  for (const auto& l : lower) j["lower"].push_back(l.get_str());
  for (const auto& u : upper) j["upper"].push_back(u.get_str());
  return j.dump();
}

bool operator==(const ThetaOperator& a, const ThetaOperator& b) {
  return a.variable == b.variable && a.lower == b.lower && a.upper == b.upper &&
         a.scale == b.scale && a.monomial_power == b.monomial_power;
}

ThetaOperator pf_operator(int n, const std::vector<int>& m) {
  if (n < 2) throw DomainError("need n >= 2");
  if (m.size() != static_cast<std::size_t>(n + 1))
    throw DimensionError("exponent vector must have length n+1");
  ThetaOperator op;
  op.variable = 'a';
  for (int i = 0; i <= n; ++i) op.lower.push_back(rat(i - n));
  for (int mi : m) {
    if (mi < 0) throw DomainError("exponents must be nonnegative");
    op.upper.push_back(rat(mi + 1));
  }
  op.upper = sorted(op.upper);
  Int d;
  mpz_ui_pow_ui(d.get_mpz_t(), n + 1, n + 1);
  op.scale = rat(Int(1), d);
  op.monomial_power = n + 1;
  return op;
}

std::pair<ThetaOperator, ReductionCertificate> reduce(const ThetaOperator& op) {
  if (op.lower.size() != op.upper.size())
    throw NotCanonicalForm("parameter multisets of unequal size");
  ThetaOperator r = op;
  r.lower = sorted(r.lower);
  r.upper = sorted(r.upper);
  ReductionCertificate cert;
  for (;;) {
    bool found = false;
    for (std::size_t i = 0; i < r.upper.size() && !found; ++i) {
      Rational want = r.upper[i] - r.monomial_power;
      auto it = std::find(r.lower.begin(), r.lower.end(), want);
      if (it != r.lower.end()) {
        cert.cancelled_pairs.emplace_back(r.upper[i], want);
        r.lower.erase(it);
        r.upper.erase(r.upper.begin() + i);
        found = true;
      }
    }
    if (!found) break;
  }
  cert.reduced_order = static_cast<long>(r.order());
  return {r, cert};
}

ThetaOperator base_change_to_b(const ThetaOperator& op) {
  if (op.variable == 'b') return op;
  ThetaOperator r;
  r.variable = 'b';
  long q = op.monomial_power;
  for (const auto& l : op.lower) r.lower.push_back(l / q);
  for (const auto& u : op.upper) r.upper.push_back(u / q);
  r.scale = 1;
  r.monomial_power = 1;
  return r;
}

ThetaOperator twist(const ThetaOperator& op, const Rational& s) {
  ThetaOperator r = op;
  for (auto& l : r.lower) l -= s;
  for (auto& u : r.upper) u -= s;
  return r;
}

ThetaOperator invert(const ThetaOperator& op) {
  ThetaOperator r;
  r.variable = op.variable;
  for (const auto& u : op.upper) r.lower.push_back(-u);
  for (const auto& l : op.lower) r.upper.push_back(-l);
  r.lower = sorted(r.lower);
  r.upper = sorted(r.upper);
  r.scale = 1 / op.scale;
  r.monomial_power = op.monomial_power;
  return r;
}

ThetaOperator rescale(const ThetaOperator& op, const Rational& c, char new_variable) {
  if (c == 0) throw DomainError("rescale by zero");
  ThetaOperator r = op;
  Rational f = 1;
  for (long i = 0; i < op.monomial_power; ++i) f *= c;
  r.scale = op.scale * f;
  r.variable = new_variable;
  return r;
}

bool shift_relation_check(int n, const std::vector<int>& m, int trunc) {
  if (trunc < 10) throw DomainError("trunc must be at least 10");
  ThetaOperator d1 = reduce(pf_operator(n, m)).first;
  std::vector<int> m2 = m;
  for (auto& x : m2) ++x;
  ThetaOperator d2 = reduce(pf_operator(n, m2)).first;
  long q = d1.monomial_power;

  // operator identity on series with generic exponent and pseudo-random
  // rational coefficients
  std::mt19937 rng(948371u);
  for (const Rational& rho : {rat(1, 7), rat(-3, 5)}) {
    ExpSeries s;
    for (int k = 0; k <= trunc; ++k) s[rho + k] = rat(static_cast<long>(rng() % 997) + 1);
    ExpSeries lhs = apply_operator(d2, x_derivative(s));
    ExpSeries rhs;
    for (const auto& [e, c] : apply_operator(d1, s)) {
      Rational v = c * (e - (n + 1));
      if (v != 0) rhs.emplace(e - 1, v);
    }
    if (lhs != rhs) first_mismatch(lhs, rhs);
  }

  // transport of an actual truncated solution branch
  Rational rho0 = -d1.lower.front();
  ExpSeries y;
  y[rho0] = 1;
  Rational c = 1;
  for (long j = 1; j <= trunc; ++j) {
    Rational lv = 1, uv = 1;
    for (const auto& l : d1.lower) lv *= rho0 + q * j + l;
    for (const auto& u : d1.upper) uv *= rho0 + q * (j - 1) + u;
    c = d1.scale * uv * c / lv;
    y[rho0 + q * j] = c;
  }
  Rational bound = rho0 + q * trunc - 1;
  for (const auto& [e, v] : apply_operator(d2, x_derivative(y)))
    if (e <= bound && v != 0)
      throw VerificationFailed("derivative of solution not annihilated at exponent " +
                               e.get_str());
  return true;
}

std::vector<QPoly> to_d_form(const ThetaOperator& op) {
  QPoly lpoly = product_poly(op.lower);
  QPoly upoly = product_poly(op.upper);
  long r = static_cast<long>(op.order());
  std::vector<QPoly> out(r + 1);
  for (long j = 0; j <= r; ++j) {
    Rational a = 0, b = 0;
    for (long i = j; i <= r; ++i) {
      Rational s = Rational(stirling2(i, j));
      a += lpoly.coeff(i) * s;
      b += upoly.coeff(i) * s;
    }
    QPoly qj = QPoly::monomial(a, j) - QPoly::monomial(op.scale * b, j + op.monomial_power);
    out[j] = qj;
  }
  return out;
}

ThetaOperator symmetric_power(const ThetaOperator& op, int k) {
  if (k < 1) throw OrderError("symmetric power needs k >= 1");
  if (k == 1) return op;
  if (op.order() != 2) throw OrderError("symmetric power implemented for order-2 operators");
  auto Q = to_d_form(op);
  RatFun one(rat(1));
  RatFun q2(Q[2], QPoly::constant(1));
  RatFun acoef = RatFun() - RatFun(Q[1], QPoly::constant(1)) / q2;  // y'' = a y' + b y
  RatFun bcoef = RatFun() - RatFun(Q[0], QPoly::constant(1)) / q2;

  int dim = k + 1;
  SquareMatrix<RatFun> m(dim, RatFun());
  for (int j = 0; j < dim; ++j) {
    if (j + 1 < dim) m(j, j + 1) = RatFun(rat(k - j));
    m(j, j) = RatFun(rat(j)) * acoef;
    if (j >= 1) m(j, j - 1) = RatFun(rat(j)) * bcoef;
  }

  // iterated derivatives of the cyclic functional picking out y^k
  std::vector<std::vector<RatFun>> d(dim + 1, std::vector<RatFun>(dim, RatFun()));
  d[0][0] = one;
  for (int i = 0; i < dim; ++i)
    for (int col = 0; col < dim; ++col) {
      RatFun v = d[i][col].derivative();
      for (int t = 0; t < dim; ++t) v += d[i][t] * m(t, col);
      d[i + 1][col] = v;
    }

  SquareMatrix<RatFun> dm(dim, RatFun());
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) dm(i, j) = d[i][j];
  std::vector<RatFun> rhs(dim);
  for (int i = 0; i < dim; ++i) rhs[i] = d[dim][i];
  std::vector<RatFun> gamma = dm.transpose().inverse().apply(rhs);

  QPoly common = QPoly::constant(1);
  for (const auto& gj : gamma) common = lcm(common, gj.den());
  std::vector<QPoly> p(dim + 1);
  p[dim] = common;
  for (int j = 0; j < dim; ++j) {
    RatFun scaled = (RatFun() - gamma[j]) * RatFun(common, QPoly::constant(1));
    p[j] = scaled.num();
  }
  return d_form_to_theta(p, op.variable);
}

}  // namespace dwork
