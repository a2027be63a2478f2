#include "jcone/propcheck.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "jcone/matrix_file.hpp"
#include "jcone/means.hpp"
#include "jcone/random.hpp"

namespace jcone {

using nlohmann::json;

json to_json(const PropertyReport& r) {
  json j{{"property_id", r.property_id},
         {"trials", r.trials},
         {"failures", r.failures},
         {"worst_margin", r.worst_margin},
         {"seed", r.seed}};
  j["counterexample"] = r.counterexample ? *r.counterexample : json(nullptr);
  return j;
}

std::string to_json_line(const PropertyReport& r) { return canonical_dump(to_json(r)); }

bool all_passed(const std::vector<PropertyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const PropertyReport& r) { return r.passed(); });
}

namespace {

constexpr double kShrinkSteps = 30;
constexpr double kMostlyFraction = 0.9;
// Condition cap for draws that are raised to powers up to ~5 in total.
constexpr double kPowerHeavyCondition = 30.0;
constexpr double kGlMaxCondition = 30.0;

struct TrialOutcome {
  bool ok = false;
  double margin = 0.0;
  json inputs = json::object();
};

// err <= tol * scale, slack expressed relative to scale.
TrialOutcome equality(double err, double scale, double tol) {
  return {err <= tol * scale, tol - err / scale, json::object()};
}

TrialOutcome order_outcome(const OrderVerdict& v, double tol) {
  return {v.holds, v.margin / v.scale + tol, json::object()};
}

// Folds `next` into `acc`: all must hold, the margin is the smallest.
void merge(TrialOutcome& acc, const TrialOutcome& next) {
  acc.ok = acc.ok && next.ok;
  acc.margin = std::min(acc.margin, next.margin);
}

TrialOutcome all_of() { return {true, std::numeric_limits<double>::infinity(), json::object()}; }

template <Scalar T>
Matrix<T> phi(const JPositive<T>& x) {
  return hermitian_part(j_left(x.signature(), x.matrix()));
}

template <Scalar T>
struct Trial {
  const SuiteConfig& cfg;
  Signature sig;
  std::uint64_t seed;
  double perturbation;
  std::uint64_t counter = 0;

  std::uint64_t next_seed() { return derive_seed(seed, counter++); }
  JPositive<T> pj(double cap = kSuiteMaxCondition) { return random_pj<T>(sig, next_seed(), cap); }
  Matrix<T> jhermitian() { return random_jhermitian<T>(sig, next_seed()); }
  Matrix<T> kj() { return random_kj<T>(sig, next_seed()); }
  Rng rng() { return Rng(next_seed()); }
  double uniform(double lo, double hi) { return rng().uniform(lo, hi); }

  // Gaussian g with cond(g) <= kGlMaxCondition.
  Matrix<T> gl() {
    for (;;) {
      Rng r = rng();
      Matrix<T> g = random_matrix<T>(sig.n(), sig.n(), r);
      const auto ev = eigenvalues(hermitian_part(adjoint(g) * g));
      if (ev.back() > 0.0 && ev.front() <= kGlMaxCondition * kGlMaxCondition * ev.back()) return g;
    }
  }
  // J P for a random PSD P of random rank, scaled by the perturbation.
  Matrix<T> bump() {
    Rng r = rng();
    const Index rank = 1 + static_cast<Index>(r.bits() % sig.n());
    return j_left(sig, perturbation * random_psd<T>(sig.n(), rank, r));
  }

  // x + bump(), redrawn until cond(J(x + bump)) <= cap.
  JPositive<T> above(const JPositive<T>& x, double cap) {
    for (;;) {
      JPositive<T> y = certify(x.matrix() + bump());
      const auto ev = eigenvalues(phi(y));
      if (ev.front() <= cap * ev.back()) return y;
    }
  }

  JPositive<T> mean(const JPositive<T>& a, const JPositive<T>& b, double t) const {
    if (cfg.mean_weight) return geodesic(a, b, cfg.mean_weight(t));
    return weighted_mean(a, b, t).mean;
  }
  JPositive<T> certify(const Matrix<T>& x) const {
    return make_j_positive(j_hermitian_part(x, sig), sig);
  }
  Matrix<T> j() const { return j_matrix<T>(sig); }
};

template <Scalar T>
json enc(const Matrix<T>& m) {
  return encode_matrix(m);
}
template <Scalar T>
json enc(const JPositive<T>& m) {
  return encode_matrix(m.matrix());
}

// P #_t Q through the Cholesky congruence P = L L*:
//   L (L^-1 Q L^-*)^t L*.
template <Scalar T>
Matrix<T> classical_mean(const Matrix<T>& p, const Matrix<T>& q, double t) {
  const Matrix<T> l = cholesky_lower(p);
  const Matrix<T> l_inv = inverse(l);
  const Matrix<T> inner = hermitian_part(l_inv * q * adjoint(l_inv));
  return hermitian_part(l * mat_pow_pd(inner, t) * adjoint(l));
}

// The 2x2 exp witness placed on coordinates (0, p).
template <Scalar T>
Matrix<T> exp_witness(const Signature& sig) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  Matrix<T> x(sig.n(), sig.n());
  if constexpr (std::is_same_v<T, double>) {
    x(0, sig.p) = kTwoPi;
    x(sig.p, 0) = -kTwoPi;
  } else if constexpr (std::is_same_v<T, Complex>) {
    x(0, sig.p) = x(sig.p, 0) = Complex(0.0, kTwoPi);
  } else {
    x(0, sig.p) = x(sig.p, 0) = Quaternion(0.0, kTwoPi, 0.0, 0.0);
  }
  return x;
}

// ---------------------------------------------------------------------------
// jcalc

template <Scalar T>
TrialOutcome exp_non_injective(Trial<T>& tr) {
  const Matrix<T> x = exp_witness<T>(tr.sig);
  const Matrix<T> id = Matrix<T>::identity(tr.sig.n());
  TrialOutcome out = all_of();
  merge(out, {is_j_hermitian(x, tr.sig) && frobenius_norm(x) > 1.0, 0.0});
  merge(out, equality(distance(mat_exp_general(x), id), 1.0, 1e-10));
  merge(out, equality(distance(mat_exp_general(Matrix<T>::zero(tr.sig.n())), id), 1.0, 1e-10));
  out.inputs = {{"x", enc(x)}};
  return out;
}

template <Scalar T>
TrialOutcome inverse_exponential(Trial<T>& tr) {
  const Matrix<T> x = tr.perturbation * tr.jhermitian();
  const Matrix<T> lhs = inverse(exp_j(x, tr.sig).matrix());
  const Matrix<T> rhs = j_right(mat_exp_general(-j_left(tr.sig, x)), tr.sig);
  TrialOutcome out = equality(distance(lhs, rhs), tol_scale(rhs), 1e-10);
  out.inputs = {{"x", enc(x)}};
  return out;
}

template <Scalar T>
TrialOutcome generic_inverse_inequality(Trial<T>& tr) {
  const Matrix<T> x = tr.jhermitian();
  const double gap =
      distance(inverse(exp_j(x, tr.sig).matrix()), exp_j(Matrix<T>(-x), tr.sig).matrix());
  return {gap > 1e-6, gap - 1e-6, {{"x", enc(x)}}};
}

template <Scalar T>
TrialOutcome kj_congruence_powers(Trial<T>& tr) {
  const Matrix<T> g = tr.kj();
  const JPositive<T> x = tr.pj();
  const JPositive<T> gx = tr.certify(g * x.matrix() * sharp(g, tr.sig));
  TrialOutcome out = all_of();
  for (double t : {-1.0, 0.3, 0.5, 2.0}) {
    const Matrix<T> rhs = g * pow_j(x, t).matrix() * sharp(g, tr.sig);
    merge(out, equality(distance(pow_j(gx, t).matrix(), rhs), tol_scale(rhs), tr.cfg.tol));
  }
  out.inputs = {{"g", enc(g)}, {"x", enc(x)}};
  return out;
}

template <Scalar T>
TrialOutcome bullet_commuting_powers(Trial<T>& tr) {
  const JPositive<T> s = tr.pj(kPowerHeavyCondition);
  const double a = tr.uniform(-1.5, 1.5), b = tr.uniform(-1.5, 1.5), t = tr.uniform(-1.0, 2.0);
  const JPositive<T> x = pow_j(s, a), y = pow_j(s, b);
  const JPositive<T> xy = tr.certify(bullet(x.matrix(), y.matrix(), tr.sig));
  const Matrix<T> rhs = bullet(pow_j(x, t).matrix(), pow_j(y, t).matrix(), tr.sig);
  TrialOutcome out = equality(distance(pow_j(xy, t).matrix(), rhs), tol_scale(rhs), tr.cfg.tol);
  out.inputs = {{"s", enc(s)}, {"a", a}, {"b", b}, {"t", t}};
  return out;
}

template <Scalar T>
TrialOutcome bullet_algebra(Trial<T>& tr) {
  const Signature& sig = tr.sig;
  const Matrix<T> a = tr.gl(), b = tr.gl(), c = tr.gl();
  const Matrix<T> j = tr.j();
  const Matrix<T> abc = bullet(bullet(a, b, sig), c, sig);
  TrialOutcome out =
      equality(distance(abc, bullet(a, bullet(b, c, sig), sig)), tol_scale(abc), 1e-9);
  merge(out, equality(distance(bullet(j, a, sig), a), tol_scale(a), 1e-12));
  merge(out, equality(distance(bullet(a, j, sig), a), tol_scale(a), 1e-12));
  const Matrix<T> a_inv = bullet_inverse(a, sig);
  merge(out, equality(distance(bullet(a, a_inv, sig), j), 1.0, 1e-9));
  merge(out, equality(distance(bullet(a_inv, a, sig), j), 1.0, 1e-9));
  const BulletPolar<T> kp = polar_decompose_bullet(a, sig);
  merge(out, equality(distance(bullet(kp.k, kp.p.matrix(), sig), a), tol_scale(a), 1e-9));
  merge(out, equality(distance(adjoint(kp.k) * kp.k, Matrix<T>::identity(sig.n())), 1.0, 1e-9));
  out.inputs = {{"a", enc(a)}, {"b", enc(b)}, {"c", enc(c)}};
  return out;
}

template <Scalar T>
TrialOutcome power_laws(Trial<T>& tr) {
  const Signature& sig = tr.sig;
  const JPositive<T> x = tr.pj(kPowerHeavyCondition);
  const double t = tr.uniform(-1.5, 1.5), s = tr.uniform(-1.5, 1.5), alpha = tr.uniform(0.0, 1.0);
  const Matrix<T> xm = x.matrix();
  const double tol = tr.cfg.tol;
  TrialOutcome out = equality(distance(pow_j(x, 0.0).matrix(), tr.j()), 1.0, tol);
  merge(out, equality(distance(pow_j(x, 1.0).matrix(), xm), tol_scale(xm), tol));
  const Matrix<T> xts = pow_j(x, t * s).matrix();
  merge(out, equality(distance(pow_j(pow_j(x, t), s).matrix(), xts), tol_scale(xts), tol));
  const Matrix<T> tlog = t * log_j(x);
  merge(out, equality(distance(log_j(pow_j(x, t)), tlog), tol_scale(tlog), tol));
  const Matrix<T> inv_t = inverse(pow_j(x, t).matrix());
  merge(out, equality(distance(pow_j(tr.certify(inverse(xm)), t).matrix(), inv_t),
                      tol_scale(inv_t), tol));
  const Matrix<T> xs = pow_j(x, s).matrix();
  merge(out, equality(distance(bullet(pow_j(x, alpha * s).matrix(),
                                      pow_j(x, (1.0 - alpha) * s).matrix(), sig),
                               xs),
                      tol_scale(xs), tol));
  merge(out, equality(distance(bullet(xs, pow_j(x, -s).matrix(), sig), tr.j()), 1.0, tol));
  out.inputs = {{"x", enc(x)}, {"t", t}, {"s", s}, {"alpha", alpha}};
  return out;
}

// ---------------------------------------------------------------------------
// order

template <Scalar T>
TrialOutcome power_monotonicity(Trial<T>& tr) {
  const JPositive<T> x = tr.pj();
  const JPositive<T> y = tr.certify(x.matrix() + tr.bump());
  TrialOutcome out = all_of();
  for (double t : {0.25, 0.5, 0.75, 1.0}) {
    merge(out, order_outcome(j_leq(pow_j(x, t), pow_j(y, t), tr.cfg.tol), tr.cfg.tol));
  }
  out.inputs = {{"x", enc(x)}, {"y", enc(y)}};
  return out;
}

template <Scalar T>
TrialOutcome power_monotonicity_fails_t2(Trial<T>& tr) {
  const JPositive<T> x = tr.pj();
  const JPositive<T> y = tr.certify(x.matrix() + tr.bump());
  const OrderVerdict premise = j_leq(x, y, tr.cfg.tol);
  const OrderVerdict squared = j_leq(pow_j(x, 2.0), pow_j(y, 2.0), tr.cfg.tol);
  return {premise.holds && !squared.holds, squared.margin / squared.scale,
          {{"x", enc(x)}, {"y", enc(y)}}};
}

template <Scalar T>
TrialOutcome order_congruence(Trial<T>& tr) {
  const Matrix<T> x = tr.jhermitian();
  const Matrix<T> y = x + tr.bump();
  const Matrix<T> c = tr.gl();
  const Matrix<T> cs = sharp(c, tr.sig);
  TrialOutcome out = order_outcome(
      j_leq(j_hermitian_part(cs * x * c, tr.sig), j_hermitian_part(cs * y * c, tr.sig), tr.sig,
            tr.cfg.tol),
      tr.cfg.tol);
  out.inputs = {{"x", enc(x)}, {"y", enc(y)}, {"c", enc(c)}};
  return out;
}

template <Scalar T>
TrialOutcome inverse_antimonotone(Trial<T>& tr) {
  const JPositive<T> x = tr.pj();
  const JPositive<T> y = tr.certify(x.matrix() + tr.bump());
  TrialOutcome out = order_outcome(
      j_leq(tr.certify(inverse(y.matrix())), tr.certify(inverse(x.matrix())), tr.cfg.tol),
      tr.cfg.tol);
  out.inputs = {{"x", enc(x)}, {"y", enc(y)}};
  return out;
}

// ---------------------------------------------------------------------------
// geometry

template <Scalar T>
TrialOutcome geodesic_pullback(Trial<T>& tr) {
  const JPositive<T> a = tr.pj(), b = tr.pj();
  const GeodesicPath<T> path(a, b);
  TrialOutcome out = all_of();
  for (double t : {0.1, 0.5, 0.9}) {
    const Matrix<T> expected = classical_mean(phi(a), phi(b), t);
    merge(out, equality(distance(phi(path.sample(t)), expected), tol_scale(expected), 1e-9));
  }
  out.inputs = {{"a", enc(a)}, {"b", enc(b)}};
  return out;
}

template <Scalar T>
TrialOutcome metric_positivity_invariance(Trial<T>& tr) {
  const JPositive<T> p = tr.pj();
  const Matrix<T> u = tr.jhermitian(), v = tr.jhermitian();
  const Matrix<T> g = tr.gl();
  const Matrix<T> gs = sharp(g, tr.sig);
  const double uu = metric_omega(p, u, u);
  const double uv = metric_omega(p, u, v);
  const JPositive<T> gp = tr.certify(g * p.matrix() * gs);
  const double moved = metric_omega(gp, j_hermitian_part(g * u * gs, tr.sig),
                                    j_hermitian_part(g * v * gs, tr.sig));
  TrialOutcome out = {uu > 0.0, std::min(uu, 0.0), json::object()};
  merge(out, equality(std::abs(moved - uv), std::max({1.0, std::abs(uv), uu}), 1e-9));
  out.inputs = {{"p", enc(p)}, {"u", enc(u)}, {"v", enc(v)}, {"g", enc(g)}};
  return out;
}

template <Scalar T>
TrialOutcome segment_additivity(Trial<T>& tr) {
  const JPositive<T> a = tr.pj(), b = tr.pj();
  const double t = tr.uniform(0.05, 0.95);
  const JPositive<T> mid = geodesic(a, b, t);
  const double whole = geodesic_distance(a, b);
  const double parts = geodesic_distance(a, mid) + geodesic_distance(mid, b);
  TrialOutcome out = equality(std::abs(parts - whole), std::max(1.0, whole), 1e-8);
  out.inputs = {{"a", enc(a)}, {"b", enc(b)}, {"t", t}};
  return out;
}

// Endpoints with ||log_J|| <= 2.
template <Scalar T>
std::pair<JPositive<T>, JPositive<T>> bounded_log_pair(Trial<T>& tr) {
  auto draw = [&tr] {
    Matrix<T> x = tr.jhermitian();
    const double r = tr.uniform(0.2, 2.0);
    return exp_j(Matrix<T>(x * (r / frobenius_norm(x))), tr.sig);
  };
  JPositive<T> a = draw();
  JPositive<T> b = draw();
  return {std::move(a), std::move(b)};
}

template <Scalar T>
TrialOutcome geodesic_ode(Trial<T>& tr) {
  const auto [a, b] = bounded_log_pair(tr);
  const GeodesicPath<T> path(a, b);
  TrialOutcome out = all_of();
  merge(out, equality(distance(path.sample(0.0).matrix(), a.matrix()), tol_scale(a.matrix()), 1e-9));
  merge(out, equality(distance(path.sample(1.0).matrix(), b.matrix()), tol_scale(b.matrix()), 1e-9));
  const double residual = geodesic_ode_residual(a, b, 0.5, kDefaultOdeStep);
  merge(out, equality(residual, tol_scale(path.sample(0.5).matrix()), 1e-5));
  out.inputs = {{"a", enc(a)}, {"b", enc(b)}};
  return out;
}

template <Scalar T>
TrialOutcome linear_impostor(Trial<T>& tr) {
  const auto [a, b] = bounded_log_pair(tr);
  const Matrix<T> am = a.matrix(), bm = b.matrix();
  const double residual = curve_ode_residual<T>(
      [&am, &bm](double s) { return Matrix<T>((1.0 - s) * am + s * bm); }, 0.5, kDefaultOdeStep);
  return {residual > 1e-2, residual - 1e-2, {{"a", enc(a)}, {"b", enc(b)}}};
}

// ---------------------------------------------------------------------------
// means

template <Scalar T>
TrialOutcome mean_symmetry(Trial<T>& tr) {
  const JPositive<T> a = tr.pj(), b = tr.pj();
  const Matrix<T> ab = tr.mean(a, b, 0.5).matrix();
  TrialOutcome out =
      equality(distance(ab, tr.mean(b, a, 0.5).matrix()), tol_scale(ab), tr.cfg.tol);
  out.inputs = {{"a", enc(a)}, {"b", enc(b)}};
  return out;
}

template <Scalar T>
TrialOutcome mean_inversion(Trial<T>& tr) {
  const JPositive<T> a = tr.pj(), b = tr.pj();
  const Matrix<T> lhs = inverse(tr.mean(a, b, 0.5).matrix());
  const Matrix<T> rhs =
      tr.mean(tr.certify(inverse(a.matrix())), tr.certify(inverse(b.matrix())), 0.5).matrix();
  TrialOutcome out = equality(distance(lhs, rhs), tol_scale(rhs), tr.cfg.tol);
  out.inputs = {{"a", enc(a)}, {"b", enc(b)}};
  return out;
}

template <Scalar T>
TrialOutcome mean_idempotence(Trial<T>& tr) {
  const JPositive<T> a = tr.pj();
  const JPositive<T> b = tr.certify(a.matrix() + tr.bump());
  const double t = tr.uniform(0.05, 0.95);
  const double scale = tol_scale(a.matrix());
  TrialOutcome out =
      equality(distance(tr.mean(a, a, t).matrix(), a.matrix()), scale, tr.cfg.tol);
  // A != B must move the mean away from A.
  const double moved = distance(tr.mean(a, b, t).matrix(), a.matrix()) / scale;
  merge(out, {moved > tr.cfg.tol, moved - tr.cfg.tol});
  out.inputs = {{"a", enc(a)}, {"b", enc(b)}, {"t", t}};
  return out;
}

template <Scalar T>
TrialOutcome mean_scaling(Trial<T>& tr) {
  const JPositive<T> a = tr.pj(), b = tr.pj();
  const double t = tr.uniform(0.05, 0.95);
  const Matrix<T> base = tr.mean(a, b, t).matrix();
  TrialOutcome out = all_of();
  for (double alpha : {0.5, 2.0, 3.0}) {
    for (double beta : {0.5, 2.0, 3.0}) {
      const Matrix<T> lhs =
          tr.mean(tr.certify(alpha * a.matrix()), tr.certify(beta * b.matrix()), t).matrix();
      const Matrix<T> rhs = std::pow(alpha, 1.0 - t) * std::pow(beta, t) * base;
      merge(out, equality(distance(lhs, rhs), tol_scale(rhs), tr.cfg.tol));
    }
  }
  out.inputs = {{"a", enc(a)}, {"b", enc(b)}, {"t", t}};
  return out;
}

template <Scalar T>
TrialOutcome mean_time_reversal(Trial<T>& tr) {
  const JPositive<T> a = tr.pj(), b = tr.pj();
  const double t = tr.uniform(0.05, 0.95);
  const Matrix<T> lhs = tr.mean(a, b, t).matrix();
  TrialOutcome out =
      equality(distance(lhs, tr.mean(b, a, 1.0 - t).matrix()), tol_scale(lhs), tr.cfg.tol);
  out.inputs = {{"a", enc(a)}, {"b", enc(b)}, {"t", t}};
  return out;
}

template <Scalar T>
TrialOutcome mean_monotonicity(Trial<T>& tr) {
  const JPositive<T> a = tr.pj(), b = tr.pj();
  const JPositive<T> c = tr.certify(a.matrix() + tr.bump());
  const JPositive<T> d = tr.certify(b.matrix() + tr.bump());
  const double t = tr.uniform(0.05, 0.95);
  TrialOutcome out =
      order_outcome(j_leq(tr.mean(a, b, t), tr.mean(c, d, t), tr.cfg.tol), tr.cfg.tol);
  out.inputs = {{"a", enc(a)}, {"b", enc(b)}, {"c", enc(c)}, {"d", enc(d)}, {"t", t}};
  return out;
}

template <Scalar T>
TrialOutcome mean_kj_congruence(Trial<T>& tr) {
  const JPositive<T> a = tr.pj(), b = tr.pj();
  const Matrix<T> g = tr.kj();
  const Matrix<T> gs = sharp(g, tr.sig);
  const double t = tr.uniform(0.0, 1.0);
  const Matrix<T> lhs =
      tr.mean(tr.certify(g * a.matrix() * gs), tr.certify(g * b.matrix() * gs), t).matrix();
  const Matrix<T> rhs = g * tr.mean(a, b, t).matrix() * gs;
  TrialOutcome out = equality(distance(lhs, rhs), tol_scale(rhs), tr.cfg.tol);
  out.inputs = {{"a", enc(a)}, {"b", enc(b)}, {"g", enc(g)}, {"t", t}};
  return out;
}

template <Scalar T>
TrialOutcome mean_joint_concavity(Trial<T>& tr) {
  const JPositive<T> a = tr.pj(), b = tr.pj(), c = tr.pj(), d = tr.pj();
  const double s = tr.uniform(0.0, 1.0), t = tr.uniform(0.0, 1.0);
  const JPositive<T> lhs = tr.certify((1.0 - s) * tr.mean(a, c, t).matrix() +
                                      s * tr.mean(b, d, t).matrix());
  const JPositive<T> rhs = tr.mean(tr.certify((1.0 - s) * a.matrix() + s * b.matrix()),
                                   tr.certify((1.0 - s) * c.matrix() + s * d.matrix()), t);
  TrialOutcome out = order_outcome(j_leq(lhs, rhs, tr.cfg.tol), tr.cfg.tol);
  out.inputs = {{"a", enc(a)}, {"b", enc(b)}, {"c", enc(c)}, {"d", enc(d)}, {"s", s}, {"t", t}};
  return out;
}

template <Scalar T>
TrialOutcome mean_composition(Trial<T>& tr) {
  const JPositive<T> a = tr.pj(), b = tr.pj();
  const double t = tr.uniform(0.0, 1.0), s = tr.uniform(0.0, 1.0), u = tr.uniform(0.0, 1.0);
  const Matrix<T> lhs = tr.mean(tr.mean(a, b, t), tr.mean(a, b, s), u).matrix();
  const Matrix<T> rhs = tr.mean(a, b, (1.0 - u) * t + u * s).matrix();
  TrialOutcome out = equality(distance(lhs, rhs), tol_scale(rhs), tr.cfg.tol);
  out.inputs = {{"a", enc(a)}, {"b", enc(b)}, {"t", t}, {"s", s}, {"u", u}};
  return out;
}

template <Scalar T>
TrialOutcome mean_agm_sandwich(Trial<T>& tr) {
  const JPositive<T> a = tr.pj(), b = tr.pj();
  const double t = tr.uniform(0.0, 1.0);
  const JPositive<T> mean = tr.mean(a, b, t);
  TrialOutcome out =
      order_outcome(j_leq(harmonic_mean_j(a, b, t), mean, tr.cfg.tol), tr.cfg.tol);
  merge(out, order_outcome(j_leq(mean, arithmetic_mean_j(a, b, t), tr.cfg.tol), tr.cfg.tol));
  out.inputs = {{"a", enc(a)}, {"b", enc(b)}, {"t", t}};
  return out;
}

template <Scalar T>
TrialOutcome mean_pullback(Trial<T>& tr) {
  const JPositive<T> a = tr.pj(), b = tr.pj();
  TrialOutcome out = all_of();
  for (double t : {0.1, 0.5, 0.9}) {
    const Matrix<T> expected = classical_mean(phi(a), phi(b), t);
    merge(out, equality(distance(phi(tr.mean(a, b, t)), expected), tol_scale(expected), 1e-9));
  }
  out.inputs = {{"a", enc(a)}, {"b", enc(b)}};
  return out;
}

template <Scalar T>
TrialOutcome noncommutative_witness(Trial<T>& tr) {
  const Signature& sig = tr.sig;
  const JPositive<T> a =
      make_j_positive(promote_matrix<T>(MatrixR{{2.0, 1.0}, {-1.0, -2.0}}), sig);
  const JPositive<T> b =
      make_j_positive(promote_matrix<T>(MatrixR{{3.0, 1.0}, {-1.0, -1.0}}), sig);
  const Matrix<T> reference =
      promote_matrix<T>(MatrixR{{0.263207, 0.768429}, {-0.857469, -2.50336}});
  const Matrix<T> diff = tr.mean(a, b, 0.5).matrix() - pow_j(a, 0.5).matrix() * pow_j(b, 0.5).matrix();
  TrialOutcome out = equality(max_abs(Matrix<T>(diff - reference)), 1.0, 5e-4);
  // A and B commute for the ordinary product but not for the bullet product.
  merge(out, equality(frobenius_norm(Matrix<T>(a.matrix() * b.matrix() - b.matrix() * a.matrix())),
                      1.0, 1e-12));
  const double comm = frobenius_norm(bullet_commutator(a.matrix(), b.matrix(), sig));
  merge(out, {comm > 1e-3, comm - 1e-3});
  out.inputs = {{"diff", enc(diff)}};
  return out;
}

template <Scalar T>
TrialOutcome riccati(Trial<T>& tr) {
  const JPositive<T> a = tr.pj(), b = tr.pj();
  const Matrix<T> x = tr.mean(a, b, 0.5).matrix();
  TrialOutcome out = equality(riccati_residual(x, a, b), tol_scale(b.matrix()), 1e-9);
  out.inputs = {{"a", enc(a)}, {"b", enc(b)}};
  return out;
}

template <Scalar T>
TrialOutcome commuting_closed_form(Trial<T>& tr) {
  const JPositive<T> s = tr.pj(kPowerHeavyCondition);
  const JPositive<T> a = pow_j(s, tr.uniform(-1.5, 1.5));
  const JPositive<T> b = pow_j(s, tr.uniform(-1.5, 1.5));
  const double t = tr.uniform(0.0, 1.0);
  const Matrix<T> general = tr.mean(a, b, t).matrix();
  TrialOutcome out = equality(distance(commuting_bullet_mean(a, b, t).matrix(), general),
                              tol_scale(general), 1e-9);
  out.inputs = {{"a", enc(a)}, {"b", enc(b)}, {"t", t}};
  return out;
}

template <Scalar T>
TrialOutcome maximality(Trial<T>& tr) {
  const JPositive<T> a = tr.pj(), b = tr.pj();
  const JPositive<T> m = tr.mean(a, b, 0.5);
  const double tol = tr.cfg.tol;
  TrialOutcome out = all_of();
  // Shrunken means pass both tests.
  const Matrix<T> below = tr.uniform(0.05, 1.0) * m.matrix();
  merge(out, order_outcome(maximality_check(below, a, b, tol), tol));
  merge(out, order_outcome(j_leq(below, m.matrix(), tr.sig, tol), tol));
  // Anything strictly above the mean fails both.
  const Matrix<T> above = m.matrix() + tr.bump();
  const OrderVerdict blk = maximality_check(above, a, b, tol);
  const OrderVerdict ord = j_leq(above, m.matrix(), tr.sig, tol);
  merge(out, {!blk.holds, -blk.margin / blk.scale - tol});
  merge(out, {!ord.holds, -ord.margin / ord.scale - tol});
  // Block-PSD candidates never exceed the mean.
  const Matrix<T> x = tr.uniform(0.05, 1.5) * tr.pj().matrix();
  if (maximality_check(x, a, b, tol).holds) {
    merge(out, order_outcome(j_leq(x, m.matrix(), tr.sig, tol), tol));
  }
  out.inputs = {{"a", enc(a)}, {"b", enc(b)}, {"above", enc(above)}, {"x", enc(x)}};
  return out;
}

template <Scalar T>
TrialOutcome ando_hiai(Trial<T>& tr) {
  const JPositive<T> a0 = tr.pj(kPowerHeavyCondition), b0 = tr.pj(kPowerHeavyCondition);
  const double t = tr.uniform(0.05, 0.95);
  const auto [a, b] = normalize_ando_hiai_premise(a0, b0, t);
  TrialOutcome out = all_of();
  for (double r : {1.0, 1.5, 2.0, 3.0}) {
    const ImplicationVerdict v = ando_hiai_check(a, b, t, r, tr.cfg.tol);
    merge(out, {!v.vacuous, 0.0});
    merge(out, order_outcome(v.conclusion, tr.cfg.tol));
  }
  out.inputs = {{"a", enc(a)}, {"b", enc(b)}, {"t", t}};
  return out;
}

template <Scalar T>
TrialOutcome furuta(Trial<T>& tr) {
  const JPositive<T> b0 = tr.pj(kPowerHeavyCondition);
  const JPositive<T> a0 = tr.above(b0, kPowerHeavyCondition);
  // Both sides are homogeneous of degree r; rescaling to lambda_min(JB) = 1
  // keeps B^p_J and A^r_J above the absolute floor of the positivity test.
  const double c = 1.0 / eigenvalues(phi(b0)).back();
  const JPositive<T> a = tr.certify(c * a0.matrix()), b = tr.certify(c * b0.matrix());
  TrialOutcome out = all_of();
  for (double p : {0.0, 1.0, 2.0}) {
    for (double r : {1.0, 2.0, 3.0}) {
      merge(out, order_outcome(furuta_check(a, b, p, r, tr.cfg.tol), tr.cfg.tol));
    }
  }
  out.inputs = {{"a", enc(a)}, {"b", enc(b)}};
  return out;
}

// ---------------------------------------------------------------------------
// quaternion (always over H)

MatrixH random_hermitian_h(Trial<Quaternion>& tr, double norm2_bound) {
  Rng r = tr.rng();
  MatrixH h = random_hermitian<Quaternion>(tr.sig.n(), r);
  return h * (norm2_bound * r.uniform(0.1, 1.0) / hermitian_norm2(h));
}

TrialOutcome quaternion_functional_calculus(Trial<Quaternion>& tr) {
  const MatrixH h = random_hermitian_h(tr, 3.0);
  const MatrixH pd = hermitian_part(MatrixH(h * h + MatrixH::identity(tr.sig.n()) * 0.5));
  const double tol = 1e-9;
  TrialOutcome out = all_of();
  auto check = [&](const MatrixH& fx, const MatrixC& f_embedded, const MatrixH& x,
                   const RealFunction& f) {
    merge(out, equality(distance(psi(fx), f_embedded), tol_scale(f_embedded), tol));
    merge(out, equality(psi_image_residual(f_embedded), 1.0, 1e-10));
    // Second route through the quaternionic eigenvectors.
    const auto d = hermitian_eig(x);
    MatrixH scaled = d.unitary;
    for (Index j = 0; j < scaled.cols(); ++j) {
      for (Index i = 0; i < scaled.rows(); ++i) scaled(i, j) = scaled(i, j) * f(d.eigenvalues[j]);
    }
    const MatrixH via_u = scaled * adjoint(d.unitary);
    merge(out, equality(distance(via_u, fx), tol_scale(fx), tol));
  };
  check(mat_exp_h(h), mat_exp_h(psi(h)), h, [](double v) { return std::exp(v); });
  check(mat_log_pd(pd), mat_log_pd(psi(pd)), pd, [](double v) { return std::log(v); });
  check(mat_pow_pd(pd, 0.37), mat_pow_pd(psi(pd), 0.37), pd,
        [](double v) { return std::pow(v, 0.37); });
  check(mat_sqrt_pd(pd), mat_sqrt_pd(psi(pd)), pd, [](double v) { return std::sqrt(v); });
  check(inverse(pd), inverse(psi(pd)), pd, [](double v) { return 1.0 / v; });
  out.inputs = {{"h", enc(h)}};
  return out;
}

TrialOutcome quaternion_exp_log(Trial<Quaternion>& tr) {
  const MatrixH h = random_hermitian_h(tr, 3.0);
  TrialOutcome out = equality(distance(mat_log_pd(mat_exp_h(h)), h), tol_scale(h), 1e-9);
  const JPositive<Quaternion> p = tr.pj();
  merge(out, equality(distance(exp_j(log_j(p), tr.sig).matrix(), p.matrix()),
                      tol_scale(p.matrix()), 1e-9));
  out.inputs = {{"h", enc(h)}, {"p", enc(p)}};
  return out;
}

TrialOutcome quaternion_spectral(Trial<Quaternion>& tr) {
  Rng r = tr.rng();
  const MatrixH x = random_hermitian<Quaternion>(tr.sig.n(), r);
  const auto d = hermitian_eig(x);
  TrialOutcome out = equality(distance(d.reconstruct(), x), tol_scale(x), 1e-9);
  merge(out, equality(distance(adjoint(d.unitary) * d.unitary, MatrixH::identity(x.rows())), 1.0,
                      1e-9));
  for (Index k = 1; k < d.eigenvalues.size(); ++k) {
    merge(out, {d.eigenvalues[k - 1] >= d.eigenvalues[k], 0.0});
  }
  out.inputs = {{"x", enc(x)}};
  return out;
}

TrialOutcome quaternion_psi_homomorphism(Trial<Quaternion>& tr) {
  Rng r = tr.rng();
  const Quaternion p = r.normal_scalar<Quaternion>(), q = r.normal_scalar<Quaternion>();
  TrialOutcome out = equality(distance(psi(p * q), MatrixC(psi(p) * psi(q))),
                              std::max(1.0, abs(p) * abs(q)), 1e-14);
  merge(out, equality(distance(psi(conj(p)), adjoint(psi(p))), std::max(1.0, abs(p)), 1e-15));
  const MatrixH x = random_matrix<Quaternion>(tr.sig.n(), tr.sig.n(), r);
  const MatrixH y = random_matrix<Quaternion>(tr.sig.n(), tr.sig.n(), r);
  const MatrixC xy = psi(x) * psi(y);
  merge(out, equality(distance(psi(MatrixH(x * y)), xy), tol_scale(xy), 1e-12));
  merge(out, equality(distance(psi(adjoint(x)), adjoint(psi(x))), tol_scale(x), 1e-15));
  out.inputs = {{"x", enc(x)}, {"y", enc(y)}};
  return out;
}

TrialOutcome quaternion_trd_cyclicity(Trial<Quaternion>& tr) {
  Rng r = tr.rng();
  const Quaternion p = r.normal_scalar<Quaternion>(), q = r.normal_scalar<Quaternion>();
  TrialOutcome out =
      equality(std::abs(trd(p * q) - trd(q * p)), std::max(1.0, abs(p) * abs(q)), 1e-14);
  const MatrixH x = random_matrix<Quaternion>(tr.sig.n(), tr.sig.n(), r);
  const MatrixH y = random_matrix<Quaternion>(tr.sig.n(), tr.sig.n(), r);
  merge(out, equality(std::abs(trd(MatrixH(x * y)) - trd(MatrixH(y * x))),
                      tol_scale(x) * tol_scale(y), 1e-12));
  out.inputs = {{"x", enc(x)}, {"y", enc(y)}};
  return out;
}

// ---------------------------------------------------------------------------
// registry

using Runner = std::function<TrialOutcome(const SuiteConfig&, const Signature&, Field,
                                          std::uint64_t, double)>;
using Applicability = bool (*)(const Signature&);

bool always(const Signature&) { return true; }
bool mixed(const Signature& s) { return s.p >= 1 && s.q >= 1; }
bool single_block_signature(const Signature& s) { return s.p == 1 && s.q == 1; }

struct Entry {
  PropertyInfo info;
  Runner run;
  Applicability applicable = always;
  bool quaternion_only = false;
};

// Dispatches one templated trial function over the runtime field.
#define JCONE_RUNNER(fn)                                                                  \
  [](const SuiteConfig& cfg, const Signature& sig, Field f, std::uint64_t seed,           \
     double pert) -> TrialOutcome {                                                       \
    switch (f) {                                                                          \
      case Field::kReal: { Trial<double> tr{cfg, sig, seed, pert}; return fn(tr); }       \
      case Field::kComplex: { Trial<Complex> tr{cfg, sig, seed, pert}; return fn(tr); }   \
      case Field::kQuaternion: {                                                          \
        Trial<Quaternion> tr{cfg, sig, seed, pert};                                       \
        return fn(tr);                                                                    \
      }                                                                                   \
    }                                                                                     \
    return {};                                                                            \
  }

#define JCONE_H_RUNNER(fn)                                                                \
  [](const SuiteConfig& cfg, const Signature& sig, Field, std::uint64_t seed,             \
     double pert) -> TrialOutcome {                                                       \
    Trial<Quaternion> tr{cfg, sig, seed, pert};                                           \
    return fn(tr);                                                                        \
  }

const std::vector<Entry>& entries() {
  using Q = Quantifier;
  static const std::vector<Entry> kEntries = {
      {{"jcalc.exp_non_injective", "powers", "jcalc#1", Q::kForAll},
       JCONE_RUNNER(exp_non_injective), mixed},
      {{"jcalc.inverse_exponential", "powers", "jcalc#2", Q::kForAll},
       JCONE_RUNNER(inverse_exponential)},
      {{"jcalc.generic_inverse_inequality", "powers", "jcalc#3", Q::kMostly},
       JCONE_RUNNER(generic_inverse_inequality), mixed},
      {{"jcalc.kj_congruence_powers", "powers", "jcalc#4", Q::kForAll},
       JCONE_RUNNER(kj_congruence_powers)},
      {{"jcalc.bullet_commuting_powers", "powers", "jcalc#5", Q::kForAll},
       JCONE_RUNNER(bullet_commuting_powers)},
      {{"jcalc.bullet_algebra", "powers", "bullet", Q::kForAll}, JCONE_RUNNER(bullet_algebra)},
      {{"jcalc.power_laws", "powers", "pow_j", Q::kForAll}, JCONE_RUNNER(power_laws)},

      {{"order.power_monotonicity", "order", "order#1", Q::kForAll},
       JCONE_RUNNER(power_monotonicity)},
      {{"order.power_monotonicity_fails_t2", "order", "order#2", Q::kExists},
       JCONE_RUNNER(power_monotonicity_fails_t2)},
      {{"order.congruence", "order", "order#3", Q::kForAll}, JCONE_RUNNER(order_congruence)},
      {{"order.inverse_antimonotone", "order", "order#4", Q::kForAll},
       JCONE_RUNNER(inverse_antimonotone)},

      {{"geometry.pullback_consistency", "geometry", "geometry#1", Q::kForAll},
       JCONE_RUNNER(geodesic_pullback)},
      {{"geometry.metric_positivity_invariance", "geometry", "geometry#2", Q::kForAll},
       JCONE_RUNNER(metric_positivity_invariance)},
      {{"geometry.segment_additivity", "geometry", "geometry#3", Q::kForAll},
       JCONE_RUNNER(segment_additivity)},
      {{"geometry.ode_residual", "geometry", "geodesic_ode_residual", Q::kForAll},
       JCONE_RUNNER(geodesic_ode)},
      {{"geometry.linear_impostor", "geometry", "geodesic_ode_residual", Q::kMostly},
       JCONE_RUNNER(linear_impostor)},

      {{"means.symmetry", "means", "means#1", Q::kForAll}, JCONE_RUNNER(mean_symmetry)},
      {{"means.inversion", "means", "means#2", Q::kForAll}, JCONE_RUNNER(mean_inversion)},
      {{"means.idempotence", "means", "means#3", Q::kForAll}, JCONE_RUNNER(mean_idempotence)},
      {{"means.scaling", "means", "means#4", Q::kForAll}, JCONE_RUNNER(mean_scaling)},
      {{"means.time_reversal", "means", "means#5", Q::kForAll},
       JCONE_RUNNER(mean_time_reversal)},
      {{"means.monotonicity", "inequalities", "means#6", Q::kForAll},
       JCONE_RUNNER(mean_monotonicity)},
      {{"means.kj_congruence", "means", "means#7", Q::kForAll},
       JCONE_RUNNER(mean_kj_congruence)},
      {{"means.joint_concavity", "inequalities", "means#8", Q::kForAll},
       JCONE_RUNNER(mean_joint_concavity)},
      {{"means.composition", "means", "means#9", Q::kForAll}, JCONE_RUNNER(mean_composition)},
      {{"means.agm_sandwich", "inequalities", "means#10", Q::kForAll},
       JCONE_RUNNER(mean_agm_sandwich)},
      {{"means.pullback", "means", "means#11", Q::kForAll}, JCONE_RUNNER(mean_pullback)},
      {{"means.noncommutative_witness", "means", "means#12", Q::kForAll},
       JCONE_RUNNER(noncommutative_witness), single_block_signature},
      {{"means.riccati", "means", "riccati_solve", Q::kForAll}, JCONE_RUNNER(riccati)},
      {{"means.commuting_closed_form", "means", "commuting_bullet_mean", Q::kForAll},
       JCONE_RUNNER(commuting_closed_form)},
      {{"means.maximality", "inequalities", "maximality_check", Q::kForAll},
       JCONE_RUNNER(maximality)},
      {{"means.ando_hiai", "inequalities", "ando_hiai_check", Q::kForAll},
       JCONE_RUNNER(ando_hiai)},
      {{"means.furuta", "inequalities", "furuta_check", Q::kForAll}, JCONE_RUNNER(furuta)},

      {{"quaternion.functional_calculus", "quaternion", "matcore#4", Q::kForAll},
       JCONE_H_RUNNER(quaternion_functional_calculus), always, true},
      {{"quaternion.exp_log_roundtrip", "quaternion", "matcore#1", Q::kForAll},
       JCONE_H_RUNNER(quaternion_exp_log), always, true},
      {{"quaternion.spectral_reconstruction", "quaternion", "hermitian_eig", Q::kForAll},
       JCONE_H_RUNNER(quaternion_spectral), always, true},
      {{"quaternion.psi_homomorphism", "quaternion", "scalars#3", Q::kForAll},
       JCONE_H_RUNNER(quaternion_psi_homomorphism), always, true},
      {{"quaternion.trd_cyclicity", "quaternion", "scalars#1", Q::kForAll},
       JCONE_H_RUNNER(quaternion_trd_cyclicity), always, true},
  };
  return kEntries;
}

#undef JCONE_RUNNER
#undef JCONE_H_RUNNER

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

TrialOutcome run_guarded(const Entry& e, const SuiteConfig& cfg, Field f, std::uint64_t seed,
                         double pert) {
  try {
    return e.run(cfg, cfg.signature, f, seed, pert);
  } catch (const std::exception& ex) {
    return {false, -std::numeric_limits<double>::infinity(), {{"error", ex.what()}}};
  }
}

PropertyReport run_property(const Entry& e, const SuiteConfig& cfg) {
  PropertyReport report;
  report.property_id = e.info.id;
  report.seed = cfg.seed;
  if (!e.applicable(cfg.signature) || cfg.trials == 0) return report;

  const Field field = e.quaternion_only ? Field::kQuaternion : cfg.field;
  const std::uint64_t base = derive_seed(cfg.seed, fnv1a(e.info.id));
  report.trials = cfg.trials;
  report.worst_margin = std::numeric_limits<double>::infinity();

  std::uint64_t misses = 0;
  std::optional<std::uint64_t> first_miss;
  std::optional<TrialOutcome> first_miss_outcome;
  for (std::uint64_t k = 0; k < cfg.trials; ++k) {
    const TrialOutcome o = run_guarded(e, cfg, field, derive_seed(base, k), 1.0);
    report.worst_margin = std::min(report.worst_margin, o.margin);
    if (!o.ok) {
      ++misses;
      if (!first_miss) {
        first_miss = k;
        first_miss_outcome = o;
      }
    }
  }

  const std::uint64_t witnesses = cfg.trials - misses;
  switch (e.info.quantifier) {
    case Quantifier::kForAll: report.failures = misses; break;
    case Quantifier::kExists: report.failures = witnesses > 0 ? 0 : cfg.trials; break;
    case Quantifier::kMostly:
      report.failures = static_cast<double>(witnesses) >=
                                kMostlyFraction * static_cast<double>(cfg.trials)
                            ? 0
                            : misses;
      break;
  }
  if (report.failures == 0) return report;

  json cex;
  if (e.info.quantifier == Quantifier::kForAll && first_miss) {
    // Halve the perturbation while the failure persists; keep the last failing instance.
    const std::uint64_t trial_seed = derive_seed(base, *first_miss);
    TrialOutcome last = *first_miss_outcome;
    double pert = 1.0;
    for (int step = 0; step < kShrinkSteps; ++step) {
      const TrialOutcome o = run_guarded(e, cfg, field, trial_seed, pert / 2.0);
      if (o.ok) break;
      pert /= 2.0;
      last = o;
    }
    cex = {{"trial", *first_miss}, {"trial_seed", trial_seed}, {"perturbation", pert},
           {"margin", last.margin}, {"inputs", last.inputs}};
  } else {
    cex = {{"witnesses", witnesses}, {"required", e.info.quantifier == Quantifier::kExists
                                                       ? 1.0
                                                       : kMostlyFraction * cfg.trials}};
    if (first_miss_outcome) cex["inputs"] = first_miss_outcome->inputs;
  }
  if (!std::isfinite(cex.value("margin", 0.0))) cex["margin"] = nullptr;
  report.counterexample = std::move(cex);
  if (!std::isfinite(report.worst_margin)) report.worst_margin = -1.0;
  return report;
}

}  // namespace

const std::vector<PropertyInfo>& property_registry() {
  static const std::vector<PropertyInfo> kInfo = [] {
    std::vector<PropertyInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return kInfo;
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> kIds = {"powers", "order", "geometry", "means",
                                                "inequalities", "quaternion", "all"};
  return kIds;
}

std::vector<PropertyReport> run_suite(const SuiteConfig& config) {
  return run_suite(config, nullptr);
}

std::vector<PropertyReport> run_suite(const SuiteConfig& config,
                                      const std::function<void(const PropertyReport&)>& sink) {
  const auto& ids = suite_ids();
  if (std::find(ids.begin(), ids.end(), config.suite_id) == ids.end()) {
    throw Error(ErrorKind::kUnknownSuite, "'" + config.suite_id + "'");
  }
  if (config.dim != config.signature.n() || config.dim == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "dim " + std::to_string(config.dim) + " does not match signature " +
                    to_string(config.signature));
  }
  std::vector<PropertyReport> reports;
  for (const auto& e : entries()) {
    if (config.suite_id != "all" && e.info.suite != config.suite_id) continue;
    reports.push_back(run_property(e, config));
    if (sink) sink(reports.back());
  }
  return reports;
}

}  // namespace jcone
