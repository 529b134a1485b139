#include "dwork/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dwork/errors.hpp"

namespace dwork {

namespace {

// Planning geometry runs in double precision; the chosen centers are stored
// exactly and re-validated at full precision before any transfer.
// A walk step of f*dist taken toward a singular point is f/(1-f)*dist when
// measured from its near endpoint; 0.31 keeps even reversed walks below the
// 0.5 safety fraction.
constexpr double kWalkFactor = 0.31;
constexpr double kDetourClearance = 0.12;
constexpr int kArcCount = 16;

std::complex<double> cd(const BigComplex& z) {
  return {z.re().to_double(), z.im().to_double()};
}

BigComplex bc(const std::complex<double>& z, Prec prec) {
  return BigComplex(BigFloat::from_double(z.real(), prec),
                    BigFloat::from_double(z.imag(), prec));
}

double plan_dist(const std::complex<double>& c) {
  return std::min(std::abs(c), std::abs(c - std::complex<double>(1.0, 0.0)));
}

double segment_clearance(const std::complex<double>& a, const std::complex<double>& b,
                         const std::complex<double>& s) {
  const std::complex<double> d = b - a;
  const double len2 = std::norm(d);
  double t = len2 == 0.0 ? 0.0 : ((s - a) * std::conj(d)).real() / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(a + t * d - s);
}

// Intermediate centers of a walk from a to b, endpoints excluded. Steps stay
// below kWalkFactor times the distance to {0, 1}; a segment that would graze
// a singular point it does not end near detours through a waypoint below it.
void route_points(std::vector<std::complex<double>>& out, const std::complex<double>& a,
                  const std::complex<double>& b, int depth) {
  if (depth < 4) {
    for (const auto& s : {std::complex<double>(0.0, 0.0), std::complex<double>(1.0, 0.0)}) {
      if (segment_clearance(a, b, s) < kDetourClearance && std::abs(a - s) > 0.2 &&
          std::abs(b - s) > 0.2) {
        const std::complex<double> w = s + std::complex<double>(0.0, -0.45);
        route_points(out, a, w, depth + 1);
        out.push_back(w);
        route_points(out, w, b, depth + 1);
        return;
      }
    }
  }
  std::complex<double> cur = a;
  for (;;) {
    const double step = kWalkFactor * plan_dist(cur);
    const double rem = std::abs(b - cur);
    if (rem <= step || step <= 0.0) break;
    cur += (b - cur) * (step / rem);
    out.push_back(cur);
  }
}

void append_route(std::vector<BigComplex>& cs, const BigComplex& from, const BigComplex& to,
                  Prec prec) {
  std::vector<std::complex<double>> mid;
  route_points(mid, cd(from), cd(to), 0);
  for (const auto& z : mid) cs.push_back(bc(z, prec));
}

std::vector<BigComplex> singular_points(const ThetaOperator& op, Prec prec) {
  std::vector<BigComplex> s{BigComplex(0L, prec)};
  const BigComplex base(Rational(Rational(1) / op.scale), prec);
  const BigComplex root = pow(base, Rational(1, op.monomial_power));
  for (long k = 0; k < op.monomial_power; ++k)
    s.push_back(root * root_of_unity(Rational(k, op.monomial_power), prec));
  return s;
}

BigFloat dist_to_singular(const BigComplex& c, const std::vector<BigComplex>& sing) {
  BigFloat best = abs(c - sing[0]);
  for (std::size_t i = 1; i < sing.size(); ++i) {
    BigFloat d = abs(c - sing[i]);
    if (d < best) best = d;
  }
  return best;
}

// Coefficients of op at one ordinary center c: with y = sum_i a_i u^i,
// u = x - c, the Taylor recurrence reads
//   sum over terms  p * ff(t + j - s, j) * a_{t+j-s}  +  lead * ff(t+r, r) * a_{t+r} = 0
// where p is the u^s coefficient of Q_j(c + u) and ff a falling factorial.
struct TermList {
  struct Term {
    long j;
    long s;
    BigComplex p;
  };
  long r = 0;
  std::vector<Term> terms;
  BigComplex lead;
};

TermList make_terms(const std::vector<QPoly>& dform, const BigComplex& c, Prec prec) {
  TermList tl;
  tl.r = static_cast<long>(dform.size()) - 1;
  tl.lead = BigComplex(0L, prec);
  for (long j = 0; j <= tl.r; ++j) {
    const long deg = dform[j].degree();
    if (deg < 0) continue;
    std::vector<BigComplex> v;
    v.reserve(deg + 1);
    for (long k = 0; k <= deg; ++k) v.emplace_back(dform[j].coeff(k), prec);
    for (long i = 0; i < deg; ++i)
      for (long k = deg - 1; k >= i; --k) v[k] += v[k + 1] * c;
    for (long s = 0; s <= deg; ++s) {
      if (v[s].is_zero()) continue;
      if (j == tl.r && s == 0)
        tl.lead = v[0];
      else
        tl.terms.push_back({j, s, v[s]});
    }
  }
  if (tl.lead.is_zero()) throw StepTooClose("expansion center is singular");
  return tl;
}

// One Taylor step: seed[col] holds the first r series coefficients about the
// current center; returns the r coefficients about center + delta. The series
// is extended until a windowed geometric tail estimate clears the working
// tolerance 2^(32 - prec) relative to the largest jet entry.
std::vector<std::vector<BigComplex>> advance_step(const TermList& tl,
                                                  const std::vector<std::vector<BigComplex>>& seed,
                                                  const BigComplex& delta,
                                                  const BigFloat& safe_dist, Prec prec) {
  const long r = tl.r;
  const std::size_t ncols = seed.size();
  const BigFloat dmag = abs(delta);
  const double qhat = (dmag / safe_dist).to_double();
  const long window = r + 8;
  const BigFloat slack =
      BigFloat::from_double(4.0 * static_cast<double>(window + 1) / (1.0 - qhat), prec);
  const BigFloat one(1L, prec);
  const BigFloat dfac = pow_si(dmag > one ? dmag : one, r - 1);
  const BigFloat tol = pow2(-static_cast<long>(prec) + 32, prec);
  const long kmin = 2 * r + 12;
  const long kcap = std::min<long>(20 * static_cast<long>(prec) + 200, 30000);

  std::vector<std::vector<BigComplex>> hist(ncols);
  for (std::size_t col = 0; col < ncols; ++col) hist[col] = seed[col];
  std::vector<std::vector<BigComplex>> out(ncols,
                                           std::vector<BigComplex>(r, BigComplex(0L, prec)));
  std::vector<BigComplex> dpow{BigComplex(1L, prec)};
  auto absorb = [&](long k) {
    while (static_cast<long>(dpow.size()) <= k) dpow.push_back(dpow.back() * delta);
    long ff = 1;
    const long imax = std::min<long>(k, r - 1);
    for (long i = 0; i <= imax; ++i) {
      if (i > 0) ff = ff * (k - i + 1) / i;
      for (std::size_t col = 0; col < ncols; ++col)
        out[col][i] += hist[col][k] * dpow[k - i] * ff;
    }
  };
  for (long k = 0; k < r; ++k) absorb(k);

  std::vector<BigFloat> recent;
  BigFloat dmag_pow = dmag;
  std::vector<BigComplex> num(ncols, BigComplex(0L, prec));
  for (long k = r;; ++k) {
    if (k > kcap)
      throw PrecisionExhausted("Taylor tail did not clear the tolerance before the term cap");
    const long t = k - r;
    for (std::size_t col = 0; col < ncols; ++col) num[col] = BigComplex(0L, prec);
    for (const auto& tm : tl.terms) {
      const long idx = t + tm.j - tm.s;
      if (idx < tm.j) continue;
      BigFloat ffb(1L, prec);
      for (long q = 0; q < tm.j; ++q) ffb = ffb * (idx - q);
      for (std::size_t col = 0; col < ncols; ++col) num[col] += hist[col][idx] * tm.p * ffb;
    }
    BigFloat ffm(1L, prec);
    for (long q = 0; q < r; ++q) ffm = ffm * (k - q);
    const BigComplex inv_den = BigComplex(-1L, prec) / (tl.lead * ffm);
    BigFloat mag(prec);
    for (std::size_t col = 0; col < ncols; ++col) {
      hist[col].push_back(num[col] * inv_den);
      const BigComplex& ak = hist[col].back();
      BigFloat m1 = abs(ak.re()) + abs(ak.im());
      if (m1 > mag) mag = std::move(m1);
    }
    absorb(k);

    long cb = 1;
    for (long q = 1; q < r; ++q) cb = cb * (k - q + 1) / q;
    recent.push_back(mag * dmag_pow * dfac * cb);
    if (static_cast<long>(recent.size()) > window) recent.erase(recent.begin());
    dmag_pow *= dmag;
    if (k >= kmin && static_cast<long>(recent.size()) == window) {
      BigFloat tmax = recent[0];
      for (const auto& tv : recent)
        if (tv > tmax) tmax = tv;
      BigFloat scale = one;
      for (std::size_t col = 0; col < ncols; ++col)
        for (long i = 0; i < r; ++i) {
          BigFloat m1 = abs(out[col][i].re()) + abs(out[col][i].im());
          if (m1 > scale) scale = std::move(m1);
        }
      if (tmax * slack <= tol * scale) break;
    }
  }
  return out;
}

// d/dx of a log-series: x^rho sum_{l,k} c[l][k] x^k log(x)^l differentiates
// coefficientwise to exponent rho - 1 with c'[l][k] = (rho+k) c[l][k] + (l+1) c[l+1][k].
LogSeries derivative_series(const LogSeries& s, Prec prec) {
  LogSeries d;
  d.exponent = s.exponent - 1;
  d.log_degree = s.log_degree;
  d.trunc = s.trunc;
  const std::size_t rows = s.coeffs.size();
  d.coeffs.assign(rows, {});
  for (std::size_t l = 0; l < rows; ++l) {
    d.coeffs[l].reserve(s.coeffs[l].size());
    for (std::size_t k = 0; k < s.coeffs[l].size(); ++k) {
      BigComplex v =
          s.coeffs[l][k] * BigComplex(Rational(s.exponent + static_cast<long>(k)), prec);
      if (l + 1 < rows) v += s.coeffs[l + 1][k] * static_cast<long>(l + 1);
      d.coeffs[l].push_back(std::move(v));
    }
  }
  return d;
}

// Jet matrix of the basis at local coordinate u0: row i holds y^(i)(u0)/i!.
ComplexMatrix basis_jets(const FrobeniusBasis& basis, const BigComplex& u0, long r, Prec prec) {
  if (!(abs(u0) < basis.radius))
    throw DomainError("path endpoint lies outside the basis disk");
  ComplexMatrix J(r, BigComplex(0L, prec));
  for (std::size_t col = 0; col < basis.solutions.size(); ++col) {
    LogSeries cur = basis.solutions[col];
    long fact = 1;
    for (long i = 0; i < r; ++i) {
      if (i > 0) {
        cur = derivative_series(cur, prec);
        fact *= i;
      }
      J(i, col) = eval_log_series(cur, u0) / fact;
    }
  }
  return J;
}

BigComplex local_coord(const ThetaOperator& op, Point pt, const BigComplex& x, Prec prec) {
  if (pt == Point::Zero) return x;
  if (pt == Point::One) return x - BigComplex(Rational(Rational(1) / op.scale), prec);
  throw DomainError("continuation frames must expand about a finite point");
}

nlohmann::json complex_json(const BigComplex& z, int digits) {
  return nlohmann::json::array({z.re().to_string(digits), z.im().to_string(digits)});
}

nlohmann::json matrix_json(const ComplexMatrix& m, int digits) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(complex_json(m(i, j), digits));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string order_to_string(long order) {
  return order == kInfiniteOrder ? "inf" : std::to_string(order);
}

std::string Signature::to_string() const {
  return "(" + order_to_string(l0) + ", " + order_to_string(l1) + ", " + order_to_string(linf) +
         ")";
}

PathPlan plan_loop(Point s, const BigComplex& basepoint, Prec prec) {
  PathPlan plan;
  std::vector<BigComplex>& cs = plan.centers;
  const BigFloat two_pi = pi(prec) * 2;
  BigComplex center(0L, prec);
  BigFloat radius(prec);
  BigFloat ang0(prec);
  int orientation = 1;
  // All loops pass through a common hub, so the three loop matrices at any
  // basepoint are a joint conjugate of the hub arrangement and the relation
  // Minf * M1 * M0 = I is preserved under basepoint changes.
  const BigComplex hub(Rational(2, 5), prec);
  if (s == Point::Infinity) {
    radius = BigFloat(8L, prec);
    ang0 = pi(prec) / 2;
    orientation = -1;  // counterclockwise about infinity runs clockwise here
    if (!(abs(basepoint) < BigFloat(7L, prec)))
      throw DomainError("basepoint must lie well inside the outer circle");
  } else {
    center = (s == Point::Zero) ? BigComplex(0L, prec) : BigComplex(1L, prec);
    radius = BigFloat(Rational(1, 8), prec);
    const BigComplex rel = hub - center;
    ang0 = atan2(rel.im(), rel.re());
  }
  const BigComplex entry = center + polar(radius, ang0);
  cs.push_back(basepoint);
  if (abs(basepoint - hub).to_double() > 1e-12) {
    append_route(cs, basepoint, hub, prec);
    cs.push_back(hub);
  }
  const BigComplex approach = cs.back();
  append_route(cs, approach, entry, prec);
  const std::vector<BigComplex> outbound(cs.begin() + 1, cs.end());
  cs.push_back(entry);
  for (int j = 1; j < kArcCount; ++j)
    cs.push_back(center + polar(radius, ang0 + two_pi * (orientation * j) / kArcCount));
  cs.push_back(entry);
  for (auto it = outbound.rbegin(); it != outbound.rend(); ++it) cs.push_back(*it);
  cs.push_back(basepoint);
  return plan;
}

PathPlan plan_route(const BigComplex& from, const BigComplex& to, Prec prec) {
  PathPlan plan;
  plan.centers.push_back(from);
  append_route(plan.centers, from, to, prec);
  plan.centers.push_back(to);
  return plan;
}

ComplexMatrix continue_basis(const ThetaOperator& op, const FrobeniusBasis& basis,
                             const PathPlan& path, const FrobeniusBasis* target) {
  const long r = static_cast<long>(op.order());
  if (r < 1) throw OrderError("operator has empty parameter lists");
  if (op.monomial_power < 1)
    throw NotCanonicalForm("continuation needs a positive monomial power");
  if (static_cast<long>(basis.solutions.size()) != r)
    throw DimensionError("basis size does not match the operator order");
  if (path.centers.size() < 2) throw DomainError("path needs at least two centers");
  const Prec prec = basis.solutions[0].coeffs[0][0].prec();

  const auto sing = singular_points(op, prec);
  const BigFloat safety = BigFloat::from_double(path.step_safety * (1.0 + 1e-9), prec);
  for (std::size_t k = 0; k + 1 < path.centers.size(); ++k) {
    const BigFloat d = dist_to_singular(path.centers[k], sing);
    if (!(abs(path.centers[k + 1] - path.centers[k]) <= d * safety))
      throw StepTooClose("step exceeds the safety fraction of the singular distance");
  }
  if (dist_to_singular(path.centers.back(), sing).is_zero())
    throw StepTooClose("path ends on the singular set");

  const auto dform = to_d_form(op);
  const ComplexMatrix J0 =
      basis_jets(basis, local_coord(op, basis.point, path.centers.front(), prec), r, prec);
  std::vector<std::vector<BigComplex>> state(r);
  for (long col = 0; col < r; ++col) {
    state[col].reserve(r);
    for (long i = 0; i < r; ++i) state[col].push_back(J0(i, col));
  }
  for (std::size_t k = 0; k + 1 < path.centers.size(); ++k) {
    const TermList tl = make_terms(dform, path.centers[k], prec);
    state = advance_step(tl, state, path.centers[k + 1] - path.centers[k],
                         dist_to_singular(path.centers[k], sing), prec);
  }
  const FrobeniusBasis& endb = target ? *target : basis;
  if (static_cast<long>(endb.solutions.size()) != r)
    throw DimensionError("target basis size does not match the operator order");
  const ComplexMatrix J1 =
      basis_jets(endb, local_coord(op, endb.point, path.centers.back(), prec), r, prec);
  ComplexMatrix Jc(r, BigComplex(0L, prec));
  for (long col = 0; col < r; ++col)
    for (long i = 0; i < r; ++i) Jc(i, col) = state[col][i];
  return J1.inverse() * Jc;
}

BigComplex scalar_continuation(const PathPlan& path, const Rational& e0, const Rational& e1,
                               Prec prec) {
  if (path.centers.size() < 2) throw DomainError("path needs at least two centers");
  const BigComplex one(1L, prec);
  BigComplex acc(1L, prec);
  for (std::size_t k = 0; k + 1 < path.centers.size(); ++k) {
    const BigComplex& a = path.centers[k];
    const BigComplex& b = path.centers[k + 1];
    if (e0 != 0) acc *= pow(b / a, e0);
    if (e1 != 0) acc *= pow((one - b) / (one - a), e1);
  }
  return acc;
}

MonodromyRep monodromy_rep(const ThetaOperator& op, const BigComplex& basepoint, Prec prec) {
  if (op.monomial_power != 1 || op.scale != 1)
    throw NotCanonicalForm("monodromy loops assume singular points 0, 1 and infinity");
  const long r = static_cast<long>(op.order());
  const double au = abs(basepoint).to_double();
  if (au <= 0.0 || au >= 0.85)
    throw DomainError("basepoint must lie inside the unit disk, away from its boundary");
  const long trunc =
      static_cast<long>(std::ceil(static_cast<double>(prec + 56) / std::log2(1.0 / au))) + 24;
  const FrobeniusBasis fb = frobenius_basis(op, Point::Zero, trunc, prec);
  MonodromyRep rep;
  rep.basepoint = basepoint;
  rep.M0 = continue_basis(op, fb, plan_loop(Point::Zero, basepoint, prec));
  rep.M1 = continue_basis(op, fb, plan_loop(Point::One, basepoint, prec));
  rep.Minf = continue_basis(op, fb, plan_loop(Point::Infinity, basepoint, prec));
  rep.orders = {projective_order(rep.M0), projective_order(rep.M1), projective_order(rep.Minf)};
  rep.relation_residual = matrix_distance(
      rep.Minf * rep.M1 * rep.M0, ComplexMatrix::identity(r, BigComplex(1L, prec)));
  return rep;
}

MonodromyRep monodromy_rep(const ThetaOperator& op, Prec prec) {
  return monodromy_rep(op, BigComplex(Rational(2, 5), prec), prec);
}

long projective_order(const ComplexMatrix& M, long cap) {
  const std::size_t n = M.size();
  if (n == 0) throw DimensionError("projective order of an empty matrix");
  const Prec prec = M(0, 0).prec();
  const BigFloat tol = pow2(64 - static_cast<long>(prec), prec);
  if (n == 1) {
    BigComplex p(1L, prec);
    const BigComplex one(1L, prec);
    for (long l = 1; l <= cap; ++l) {
      p *= M(0, 0);
      if (abs(p - one) <= tol) return l;
    }
    return kInfiniteOrder;
  }
  ComplexMatrix P = M;
  for (long l = 1; l <= cap; ++l) {
    const BigComplex zeta = P(0, 0);
    if (tol < abs(zeta)) {
      BigFloat scale(1L, prec);
      const BigFloat m = max_abs_entry(P);
      if (m > scale) scale = m;
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j) {
          const BigComplex want = (i == j) ? zeta : BigComplex(0L, prec);
          if (!(abs(P(i, j) - want) <= tol * scale)) ok = false;
        }
      if (ok) return l;
    }
    if (l < cap) P = P * M;
  }
  return kInfiniteOrder;
}

Signature signature(const ThetaOperator& op, Prec prec) {
  const MonodromyRep rep = monodromy_rep(op, prec);
  return {rep.orders[0], rep.orders[1], rep.orders[2]};
}

std::pair<ComplexMatrix, ComplexMatrix> levelt_generators(const std::vector<Rational>& upper,
                                                          const std::vector<Rational>& lower,
                                                          Prec prec) {
  const std::size_t n = upper.size();
  if (n == 0 || lower.size() != n)
    throw DimensionError("parameter lists must be nonempty and of equal length");
  for (const auto& u : upper)
    for (const auto& l : lower)
      if (is_integer(Rational(u - l)))
        throw ReducibleParameters("an upper and a lower parameter differ by an integer");
  const auto companion = [prec](const std::vector<Rational>& params) {
    const std::size_t m = params.size();
    std::vector<BigComplex> p{BigComplex(1L, prec)};
    for (const auto& a : params) {
      const BigComplex root = root_of_unity(a, prec);
      std::vector<BigComplex> q(p.size() + 1, BigComplex(0L, prec));
      for (std::size_t k = 0; k < p.size(); ++k) {
        q[k + 1] += p[k];
        q[k] -= p[k] * root;
      }
      p = std::move(q);
    }
    ComplexMatrix C(m, BigComplex(0L, prec));
    for (std::size_t i = 0; i < m; ++i) C(i, m - 1) = -p[i];
    for (std::size_t i = 1; i < m; ++i) C(i, i - 1) = BigComplex(1L, prec);
    return C;
  };
  return {companion(upper), companion(lower)};
}

std::string MonodromyRep::to_json_string() const {
  nlohmann::json j;
  const int digits = 40;
  j["basepoint"] = complex_json(basepoint, digits);
  j["m0"] = matrix_json(M0, digits);
  j["m1"] = matrix_json(M1, digits);
  j["minf"] = matrix_json(Minf, digits);
  j["orders"] = nlohmann::json::array(
      {order_to_string(orders[0]), order_to_string(orders[1]), order_to_string(orders[2])});
  j["relation_residual"] = relation_residual.to_string(12);
  return j.dump(2);
}

}  // namespace dwork
