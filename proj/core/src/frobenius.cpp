#include "dwork/frobenius.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>

#include <json.hpp>

#include "dwork/errors.hpp"
#include "dwork/jets.hpp"
#include "dwork/poly.hpp"

namespace dwork {

namespace {

// Operator in the local coordinate of the expansion point, regrouped as
// sum_s t^s g_s(theta_t) with the smallest shift normalized to zero.
std::map<long, QPoly> local_layers(const ThetaOperator& op, Point point) {
  ThetaOperator loc = point == Point::Infinity ? invert(op) : op;
  std::vector<QPoly> dform = to_d_form(loc);
  if (point == Point::One) {
    if (loc.monomial_power != 1)
      throw NotCanonicalForm("expansion at the finite singular point needs a power-1 operator");
    Rational x1 = 1 / loc.scale;
    for (auto& p : dform) p = p.shift(x1);
  }
  std::map<long, QPoly> g = theta_layers(dform);
  if (g.empty()) throw DomainError("zero operator");
  long smin = g.begin()->first;
  std::map<long, QPoly> out;
  for (const auto& [s, p] : g) out[s - smin] = p;
  return out;
}

// p(a + eps) as a jet, via the Taylor shift.
QJet poly_jet(const QPoly& p, const Rational& a, std::size_t len) {
  QPoly sh = p.shift(a);
  QJet j(len);
  for (std::size_t i = 0; i < len && static_cast<long>(i) <= sh.degree(); ++i)
    j[i] = sh.coeff(i);
  return j;
}

struct RootClass {
  Rational base;                           // smallest root of the class
  std::vector<std::pair<long, int>> roots; // (offset from base, multiplicity), ascending
};

std::vector<RootClass> congruence_classes(std::vector<Rational> roots) {
  std::sort(roots.begin(), roots.end());
  std::vector<RootClass> classes;
  for (std::size_t i = 0; i < roots.size();) {
    std::size_t j = i;
    while (j < roots.size() && roots[j] == roots[i]) ++j;
    int mult = static_cast<int>(j - i);
    bool placed = false;
    for (auto& cl : classes) {
      Rational d = roots[i] - cl.base;
      if (is_integer(d)) {
        cl.roots.emplace_back(to_long(d), mult);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({roots[i], {{0, mult}}});
    i = j;
  }
  return classes;
}

// Log-power rows of one local solution candidate on the common grid of its
// congruence class; row l holds the series multiplying log(t)^l.
using Rows = std::vector<std::vector<Rational>>;

std::pair<long, int> leading_position(const Rows& rows, long grid) {
  for (long k = 0; k <= grid; ++k)
    for (int l = static_cast<int>(rows.size()) - 1; l >= 0; --l)
      if (rows[l][k] != 0) return {k, l};
  return {grid + 1, -1};
}

// Scan order: ascending k, descending log power within a column.
bool position_less(std::pair<long, int> a, std::pair<long, int> b) {
  if (a.first != b.first) return a.first < b.first;
  return a.second > b.second;
}

void axpy(Rows& a, const Rational& f, const Rows& b) {
  for (std::size_t l = 0; l < a.size(); ++l)
    for (std::size_t k = 0; k < a[l].size(); ++k) a[l][k] -= f * b[l][k];
}

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Frobenius candidates for one indicial root: derivatives in the deformed
// exponent rho + eps of the recurrence solution with c_0 = eps^kappa, where
// kappa counts roots of the class above rho. Writes m candidates.
void root_candidates(const std::map<long, QPoly>& layers, const QPoly& g0, const Rational& rho,
                     long offset, int mult, int kappa, int max_log, long grid,
                     std::vector<Rows>& out) {
  std::size_t P = 2 * static_cast<std::size_t>(kappa) + mult + 2;
  long terms = grid - offset;
  std::vector<QJet> c;
  c.reserve(terms + 1);
  c.push_back(QJet::eps(P, kappa));
  for (long k = 1; k <= terms; ++k) {
    QJet num(P);
    for (const auto& [s, g] : layers) {
      if (s == 0 || s > k) continue;
      num -= poly_jet(g, rho + k - s, P) * c[k - s];
    }
    c.push_back(num.divide(poly_jet(g0, rho + k, P)));
  }
  for (int j = kappa; j < kappa + mult; ++j) {
    Rows rows(max_log + 1, std::vector<Rational>(grid + 1, Rational(0)));
    for (long k = 0; k <= terms; ++k)
      for (int l = 0; l <= j; ++l) {
        int i = j - l;
        if (i >= static_cast<int>(P)) continue;
        if (c[k][i] == 0) continue;
        rows[l][offset + k] += c[k][i] / factorial(l);
      }
    out.push_back(std::move(rows));
  }
}

std::vector<ExactLogSeries> reduce_class(const RootClass& cl, std::vector<Rows> cands,
                                         long grid, long trunc) {
  // row echelon: distinct leading positions
  for (;;) {
    std::sort(cands.begin(), cands.end(), [&](const Rows& a, const Rows& b) {
      return position_less(leading_position(a, grid), leading_position(b, grid));
    });
    bool clash = false;
    for (std::size_t i = 0; i + 1 < cands.size(); ++i) {
      auto pa = leading_position(cands[i], grid);
      auto pb = leading_position(cands[i + 1], grid);
      if (pa != pb) continue;
      if (pb.second < 0) throw DomainError("dependent local solution candidates");
      Rational f = cands[i + 1][pb.second][pb.first] / cands[i][pa.second][pa.first];
      axpy(cands[i + 1], f, cands[i]);
      clash = true;
      break;
    }
    if (!clash) break;
  }
  if (!cands.empty() && leading_position(cands.back(), grid).second < 0)
    throw DomainError("dependent local solution candidates");
  // back substitution against every later pivot
  for (std::size_t i = cands.size(); i-- > 0;)
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      auto pj = leading_position(cands[j], grid);
      Rational v = cands[i][pj.second][pj.first];
      if (v != 0) axpy(cands[i], v / cands[j][pj.second][pj.first], cands[j]);
    }

  std::vector<ExactLogSeries> out;
  for (const auto& rows : cands) {
    auto [k0, ltop] = leading_position(rows, grid);
    if (ltop < 0) throw DomainError("dependent local solution candidates");
    int L = 0;
    for (int l = static_cast<int>(rows.size()) - 1; l >= 0; --l) {
      bool nz = false;
      for (long k = k0; k <= grid; ++k)
        if (rows[l][k] != 0) {
          nz = true;
          break;
        }
      if (nz) {
        L = l;
        break;
      }
    }
    if (rows[L][k0] == 0)
      throw ResonantExponents("log tail above the leading term cannot be normalized");
    if (k0 + trunc > grid) throw TruncationError("leading exponent beyond the class grid");
    Rational f = 1 / (factorial(L) * rows[L][k0]);
    ExactLogSeries s;
    s.exponent = cl.base + k0;
    s.trunc = trunc;
    s.coeffs.assign(L + 1, std::vector<Rational>(trunc + 1, Rational(0)));
    for (int l = 0; l <= L; ++l)
      for (long k = 0; k <= trunc; ++k) s.coeffs[l][k] = f * rows[l][k0 + k];
    out.push_back(std::move(s));
  }
  return out;
}

ExactLogSeries apply_layers(const std::map<long, QPoly>& layers, const ExactLogSeries& s) {
  ExactLogSeries r;
  r.exponent = s.exponent;
  r.trunc = s.trunc;
  r.coeffs.assign(s.coeffs.size(), std::vector<Rational>(s.trunc + 1, Rational(0)));
  for (const auto& [shift, g] : layers) {
    // Horner in theta: theta acts by (rho + k) on row l, plus l onto row l-1
    Rows acc(s.coeffs.size(), std::vector<Rational>(s.trunc + 1, Rational(0)));
    for (long d = g.degree(); d >= 0; --d) {
      Rows next(acc.size(), std::vector<Rational>(s.trunc + 1, Rational(0)));
      for (std::size_t l = 0; l < acc.size(); ++l)
        for (long k = 0; k <= s.trunc; ++k) {
          const Rational& v = acc[l][k];
          if (v != 0) {
            next[l][k] += (s.exponent + k) * v;
            if (l > 0) next[l - 1][k] += static_cast<long>(l) * v;
          }
        }
      for (std::size_t l = 0; l < acc.size(); ++l)
        for (long k = 0; k <= s.trunc; ++k) {
          next[l][k] += g.coeff(d) * s.coeffs[l][k];
          acc[l][k] = next[l][k];
        }
    }
    for (std::size_t l = 0; l < acc.size(); ++l)
      for (long k = shift; k <= s.trunc; ++k) r.coeffs[l][k] += acc[l][k - shift];
  }
  return r;
}

}  // namespace

std::string to_string(Point p) {
  switch (p) {
    case Point::Zero: return "0";
    case Point::One: return "1";
    default: return "inf";
  }
}

std::vector<Rational> indicial_roots(const ThetaOperator& op, Point point) {
  if (point == Point::Zero) return op.exponents_at_zero();
  if (point == Point::Infinity) return op.exponents_at_infinity();
  std::vector<Rational> e;
  long r = static_cast<long>(op.order());
  for (long j = 0; j + 1 < r; ++j) e.emplace_back(j);
  e.push_back(Rational(r - 1) + sum(op.lower) - sum(op.upper));
  std::sort(e.begin(), e.end());
  return e;
}

std::vector<ExactLogSeries> frobenius_basis_exact(const ThetaOperator& op, Point point,
                                                  long trunc) {
  long order = static_cast<long>(op.order());
  if (trunc < 2 * order) throw DomainError("truncation below twice the order");
  std::map<long, QPoly> layers = local_layers(op, point);
  const QPoly& g0 = layers.at(0);
  if (g0.degree() < order) throw IrregularPoint("indicial polynomial drops degree");
  auto [roots, rem] = rational_roots(g0);
  if (rem.degree() > 0) throw DomainError("irrational local exponents are unsupported");

  std::vector<ExactLogSeries> basis;
  for (const RootClass& cl : congruence_classes(std::move(roots))) {
    long spread = cl.roots.back().first;
    long grid = spread + trunc + 2;
    int total = 0;
    for (const auto& [off, m] : cl.roots) total += m;
    std::vector<Rows> cands;
    cands.reserve(total);
    int above = total;
    for (const auto& [off, m] : cl.roots) {
      above -= m;
      // `above` now counts multiplicity of roots strictly larger than this one
      root_candidates(layers, g0, cl.base + off, off, m, above, total - 1, grid, cands);
    }
    for (auto& s : reduce_class(cl, std::move(cands), grid, trunc)) basis.push_back(std::move(s));
  }
  std::sort(basis.begin(), basis.end(), [](const ExactLogSeries& a, const ExactLogSeries& b) {
    if (a.exponent != b.exponent) return a.exponent < b.exponent;
    return a.log_degree() < b.log_degree();
  });
  return basis;
}

FrobeniusBasis frobenius_basis(const ThetaOperator& op, Point point, long trunc, Prec prec) {
  FrobeniusBasis fb;
  fb.point = point;
  BigFloat as(abs(op.scale), prec);
  BigFloat lg = log(as) / BigFloat(op.monomial_power, prec);
  fb.radius = point == Point::Infinity ? exp(lg)
            : point == Point::One      ? BigFloat(Rational(abs(1 / op.scale)), prec)
                                       : exp(-lg);
  for (const ExactLogSeries& s : frobenius_basis_exact(op, point, trunc)) {
    LogSeries ls;
    ls.exponent = s.exponent;
    ls.log_degree = s.log_degree();
    ls.trunc = s.trunc;
    for (const auto& row : s.coeffs) {
      std::vector<BigComplex> r;
      r.reserve(row.size());
      for (const Rational& c : row) r.emplace_back(c, prec);
      ls.coeffs.push_back(std::move(r));
    }
    fb.solutions.push_back(std::move(ls));
  }
  return fb;
}

ExactLogSeries apply_operator(const ThetaOperator& op, const ExactLogSeries& s, Point point) {
  return apply_layers(local_layers(op, point), s);
}

long first_nonzero_order(const ExactLogSeries& s) {
  for (long k = 0; k <= s.trunc; ++k)
    for (const auto& row : s.coeffs)
      if (row[k] != 0) return k;
  return -1;
}

BigComplex eval_log_series(const LogSeries& s, const BigComplex& x) {
  Prec prec = x.prec();
  if (x.is_zero()) {
    if (s.exponent > 0) return BigComplex(0L, prec);
    if (s.exponent == 0 && s.log_degree == 0) return s.coeffs[0][0];
    throw DomainError("series is singular at the expansion point");
  }
  BigComplex lx = log(x);
  BigComplex lp(1L, prec);
  BigComplex total(0L, prec);
  for (int l = 0; l <= s.log_degree; ++l) {
    BigComplex row(0L, prec);
    for (long k = s.trunc; k >= 0; --k) row = row * x + s.coeffs[l][k];
    total = total + row * lp;
    lp = lp * lx;
  }
  return total * pow(x, s.exponent);
}

BigComplex eval_rgs(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                    const BigComplex& z, long trunc, BigFloat* tail_bound, double margin) {
  Prec prec = z.prec();
  for (const Rational& b : lower)
    if (is_integer(b) && b <= 0 && -b < trunc) throw ParameterPole("lower parameter " + to_string(b));
  BigFloat az = abs(z);
  BigFloat lim = BigFloat(1L, prec) - BigFloat::from_double(margin, prec);
  if (!(az < lim)) throw ConvergenceError("evaluation point outside the convergence margin");

  BigComplex term(1L, prec);
  BigComplex acc(1L, prec);
  for (long k = 0; k < trunc; ++k) {
    Rational ratio_k = 1;
    for (const Rational& a : upper) ratio_k *= a + k;
    for (const Rational& b : lower) ratio_k /= Rational(b + k);
    term = term * BigComplex(ratio_k, prec) * z;
    acc = acc + term;
  }
  // a posteriori geometric bound from the (decreasing) term ratio at trunc
  BigFloat ratio = az;
  for (const Rational& a : upper) ratio = ratio * BigFloat(Rational(abs(a)) + trunc + 1, prec);
  for (const Rational& b : lower) {
    Rational d = b + trunc + 1;
    BigFloat down = BigFloat(trunc + 1, prec) - BigFloat(Rational(abs(b)), prec);
    if (!(down > BigFloat(0L, prec)) || d <= 0)
      throw TruncationError("tail bound needs trunc above the parameter sizes");
    ratio = ratio / down;
  }
  if (!(ratio < BigFloat(1L, prec)))
    throw TruncationError("geometric tail bound does not close at this truncation");
  BigFloat tb = abs(term) * ratio / (BigFloat(1L, prec) - ratio);
  if (tail_bound) *tail_bound = tb;
  return acc;
}

std::string LogSeries::to_json_string() const {
  nlohmann::json j;
  j["exponent"] = exponent.get_str();
  j["log_degree"] = log_degree;
  j["trunc"] = trunc;
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t l = 0; l < coeffs.size(); ++l)
    for (std::size_t k = 0; k < coeffs[l].size(); ++k) {
      if (coeffs[l][k].is_zero()) continue;
      nlohmann::json t;
      t["j"] = l;
      t["k"] = k;
      t["re"] = coeffs[l][k].re().to_string();
      t["im"] = coeffs[l][k].im().to_string();
      terms.push_back(std::move(t));
    }
  j["terms"] = std::move(terms);
  return j.dump();
}

}  // namespace dwork
