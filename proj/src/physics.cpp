#include "cgl/physics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cgl {

namespace {

std::string describe(const Vec9& a) {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (int k = 0; k < 9; ++k) os << (k ? ", " : "") << a[k];
  os << ")";
  return os.str();
}

// Clamp a radicand that is negative only by round-off.
double clamp_radicand(double r, double scale, const char* what, const Vec9& w) {
  if (r >= 0.0) return r;
  if (r >= -1e-12 * scale * scale) return 0.0;
  throw ComplexSpeed(std::string(what) + " radicand " + std::to_string(r) +
                     " at W = " + describe(w));
}

}  // namespace

void check_positive(const Vec9& w, double eps_b) {
  if (!(w[0] > 0.0)) throw NonPositiveDensity("rho = " + std::to_string(w[0]));
  if (!(w[4] > 0.0)) throw NonPositivePressure("p_par = " + std::to_string(w[4]));
  if (!(w[5] > 0.0)) throw NonPositivePressure("p_perp = " + std::to_string(w[5]));
  const double b2 = w[6] * w[6] + w[7] * w[7] + w[8] * w[8];
  if (!(b2 > eps_b)) throw DegenerateField("|B|^2 = " + std::to_string(b2));
}

Vec9 cons_to_prim(const Vec9& u, double eps_b) {
  const double rho = u[0];
  if (!(rho > 0.0)) throw NonPositiveDensity("rho = " + std::to_string(rho));
  Vec9 w;
  w[0] = rho;
  w[1] = u[1] / rho;
  w[2] = u[2] / rho;
  w[3] = u[3] / rho;
  w[4] = u[4];
  const double m2 = u[1] * u[1] + u[2] * u[2] + u[3] * u[3];
  const double b2 = u[6] * u[6] + u[7] * u[7] + u[8] * u[8];
  w[5] = 0.5 * (2.0 * u[5] - m2 / rho - b2 - u[4]);
  w[6] = u[6];
  w[7] = u[7];
  w[8] = u[8];
  check_positive(w, eps_b);
  return w;
}

Vec9 prim_to_cons(const Vec9& w, double eps_b) {
  check_positive(w, eps_b);
  const double rho = w[0];
  const double u2 = w[1] * w[1] + w[2] * w[2] + w[3] * w[3];
  const double b2 = w[6] * w[6] + w[7] * w[7] + w[8] * w[8];
  Vec9 u;
  u[0] = rho;
  u[1] = rho * w[1];
  u[2] = rho * w[2];
  u[3] = rho * w[3];
  u[4] = w[4];
  u[5] = 0.5 * rho * u2 + 0.5 * b2 + w[5] + 0.5 * w[4];
  u[6] = w[6];
  u[7] = w[7];
  u[8] = w[8];
  return u;
}

double specific_entropy(const Vec9& w) {
  const double rho = w[0];
  return std::log(w[4] * w[5] * w[5] / std::pow(rho, 5));
}

Vec9 entropy_vars(const Vec9& w) {
  const double rho = w[0];
  const double s = std::log(w[4]) + 2.0 * std::log(w[5]) - 5.0 * std::log(rho);
  const double bperp = rho / w[5];
  const double bpar = rho / w[4];
  const double u2 = w[1] * w[1] + w[2] * w[2] + w[3] * w[3];
  Vec9 v;
  v[0] = 5.0 - s - bperp * u2;
  v[1] = 2.0 * bperp * w[1];
  v[2] = 2.0 * bperp * w[2];
  v[3] = 2.0 * bperp * w[3];
  v[4] = bperp - bpar;
  v[5] = -2.0 * bperp;
  v[6] = 2.0 * bperp * w[6];
  v[7] = 2.0 * bperp * w[7];
  v[8] = 2.0 * bperp * w[8];
  return v;
}

Vec9 cons_from_entropy_vars(const Vec9& v) {
  const double bperp = -0.5 * v[5];
  if (!(bperp > 0.0)) throw DegenerateEntropyState("V6 = " + std::to_string(v[5]));
  const double bpar = bperp - v[4];
  if (!(bpar > 0.0)) throw DegenerateEntropyState("beta_par = " + std::to_string(bpar));
  Vec9 w;
  w[1] = v[1] / (2.0 * bperp);
  w[2] = v[2] / (2.0 * bperp);
  w[3] = v[3] / (2.0 * bperp);
  w[6] = v[6] / (2.0 * bperp);
  w[7] = v[7] / (2.0 * bperp);
  w[8] = v[8] / (2.0 * bperp);
  const double u2 = w[1] * w[1] + w[2] * w[2] + w[3] * w[3];
  const double s = 5.0 - v[0] - bperp * u2;
  // s = -ln(beta_par beta_perp^2 rho^2)
  const double rho = std::exp(-0.5 * s) / (bperp * std::sqrt(bpar));
  w[0] = rho;
  w[4] = rho / bpar;
  w[5] = rho / bperp;
  return prim_to_cons(w, 0.0);
}

EntropyPair entropy_pair(const Vec9& w) {
  const double rs = w[0] * specific_entropy(w);
  return {-rs, -rs * w[1], -rs * w[2]};
}

GodunovPhi godunov_phi(const Vec9& v) {
  if (v[5] == 0.0) throw DegenerateEntropyState("V6 = 0");
  GodunovPhi g;
  g.phi = -(v[1] * v[6] + v[2] * v[7] + v[3] * v[8]) / v[5];
  // B = V7..9 / (-V6), u = V2..4 / (-V6)
  const double inv = -1.0 / v[5];
  const double bx = v[6] * inv, by = v[7] * inv, bz = v[8] * inv;
  const double ux = v[1] * inv, uy = v[2] * inv, uz = v[3] * inv;
  g.dphi << 0.0, bx, by, bz, 0.0, ux * bx + uy * by + uz * bz, ux, uy, uz;
  return g;
}

double entropy_potential(const Vec9& w) {
  const double b2 = w[6] * w[6] + w[7] * w[7] + w[8] * w[8];
  return 2.0 * w[0] + w[0] / w[5] * b2;
}

double potential_flux(const Vec9& w, Axis d) {
  return entropy_potential(w) * w[1 + static_cast<int>(d)];
}

WaveSpeeds conservative_speeds(const Vec9& w, Axis d) {
  const int n = d == Axis::x ? 6 : 7;
  const double rho = w[0];
  const double b2 = w[6] * w[6] + w[7] * w[7] + w[8] * w[8];
  const double a2 = 2.0 * w[5] / rho;
  const double vax2 = w[n] * w[n] / rho;
  const double va2 = b2 / rho;
  const double sum = va2 + a2;
  const double disc = std::sqrt(std::max(sum * sum - 4.0 * vax2 * a2, 0.0));
  WaveSpeeds s{};
  s.cons_cf = std::sqrt(0.5 * (sum + disc));
  s.cons_cs = std::sqrt(std::max(0.5 * (sum - disc), 0.0));
  s.v_ax = std::sqrt(vax2);
  s.a = std::sqrt(a2);
  return s;
}

namespace {

// strict: radicands below the round-off band throw; otherwise they are
// replaced by zero (real parts of the speeds)
WaveSpeeds full_speeds(const Vec9& w, Axis d, bool strict) {
  auto clamp = [&](double r, double scale, const char* what) {
    return strict ? clamp_radicand(r, scale, what, w) : std::max(r, 0.0);
  };
  WaveSpeeds s = conservative_speeds(w, d);
  const int n = d == Axis::x ? 6 : 7;
  const double rho = w[0];
  const double ppar = w[4], pperp = w[5];
  const double bn = w[n];
  const double b2 = w[6] * w[6] + w[7] * w[7] + w[8] * w[8];
  const double cb2 = bn * bn / b2;  // b_n^2
  const double dp = ppar - pperp;

  const double ca2 = (bn * bn - dp * cb2) / rho;
  s.ca = std::sqrt(clamp(ca2, std::sqrt((bn * bn + std::abs(dp) * cb2) / rho), "alfven"));

  const double X = b2 + 2.0 * pperp + cb2 * (2.0 * ppar - pperp);
  const double inner = X * X + 4.0 * (pperp * pperp * cb2 * (1.0 - cb2) -
                                      3.0 * ppar * pperp * cb2 * (2.0 - cb2) +
                                      3.0 * ppar * ppar * cb2 * cb2 - 3.0 * bn * bn * ppar);
  const double root = std::sqrt(clamp(inner, std::abs(X), "magnetosonic"));
  s.cf = std::sqrt((X + root) / (2.0 * rho));
  s.cs = std::sqrt(clamp((X - root) / (2.0 * rho), std::sqrt(std::abs(X) / rho), "slow"));
  return s;
}

}  // namespace

WaveSpeeds wave_speeds(const Vec9& w, Axis d) { return full_speeds(w, d, true); }

double signal_speed_bound(const Vec9& w, Axis d) {
  const double u = std::abs(w[d == Axis::x ? 1 : 2]);
  if (admissibility(w).region != Region::violated) {
    const WaveSpeeds s = full_speeds(w, d, true);
    return u + std::max(s.ca, s.cf);
  }
  const WaveSpeeds s = full_speeds(w, d, false);
  return u + std::max({s.ca, s.cf, s.cons_cf});
}

const char* region_name(Region r) {
  switch (r) {
    case Region::R1: return "R1";
    case Region::R2: return "R2";
    case Region::R3: return "R3";
    default: return "violated";
  }
}

AdmissibilityReport admissibility(const Vec9& w) {
  const double b2 = w[6] * w[6] + w[7] * w[7] + w[8] * w[8];
  const double pperp = w[5], ppar = w[4];
  AdmissibilityReport r{};
  r.p_m = pperp * pperp / (6.0 * pperp + 3.0 * b2);
  r.p_M = b2 + pperp;
  const bool positive = w[0] > 0.0 && ppar > 0.0 && pperp > 0.0;
  if (!positive || ppar < r.p_m || ppar > r.p_M) {
    r.region = Region::violated;
  } else if (ppar <= 0.25 * r.p_M) {
    r.region = Region::R1;
  } else if (ppar <= 0.25 * r.p_M + 0.75 * r.p_m) {
    r.region = Region::R2;
  } else {
    r.region = Region::R3;
  }
  return r;
}

Vec9 relaxation_source(const Vec9& w, double tau) {
  Vec9 s = Vec9::Zero();
  s[4] = (w[5] - w[4]) / tau;
  return s;
}

}  // namespace cgl
