#include "cgl/verify.hpp"

#include <algorithm>
#include <cmath>

#include "cgl/eigensystem.hpp"
#include "cgl/flux.hpp"
#include "cgl/noncons.hpp"
#include "cgl/physics.hpp"
#include "cgl/reconstruct.hpp"
#include "cgl/timeint.hpp"

namespace cgl {

namespace {

double uni(std::mt19937_64& rng, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

double loguni(std::mt19937_64& rng, double a, double b) {
  return std::exp(uni(rng, std::log(a), std::log(b)));
}

struct Check {
  CheckResult r;
  Check(std::string name, double tol, long n) : r{std::move(name), true, 0.0, tol, n} {}
  void see(double err) {
    if (!(err <= r.worst)) r.worst = std::isnan(err) ? INFINITY : err;
  }
  CheckResult done() {
    r.passed = r.worst <= r.tolerance;
    return r;
  }
};

Mat9 fd_du_dv(const Vec9& v) {
  Mat9 j;
  for (int c = 0; c < 9; ++c) {
    const double h = 1e-6 * std::max(1.0, std::abs(v[c]));
    Vec9 a = v, b = v;
    a[c] += h;
    b[c] -= h;
    j.col(c) = (cons_from_entropy_vars(a) - cons_from_entropy_vars(b)) / (2.0 * h);
  }
  return j;
}

}  // namespace

Vec9 random_admissible_state(std::mt19937_64& rng) {
  for (;;) {
    Vec9 w;
    w[0] = loguni(rng, 0.1, 5.0);
    for (int k = 1; k <= 3; ++k) w[k] = uni(rng, -2.0, 2.0);
    w[5] = loguni(rng, 0.1, 5.0);
    for (int k = 6; k <= 8; ++k) w[k] = uni(rng, -2.0, 2.0);
    const double b2 = w[6] * w[6] + w[7] * w[7] + w[8] * w[8];
    if (b2 < 1e-2) continue;
    const double pm = w[5] * w[5] / (6.0 * w[5] + 3.0 * b2);
    const double pM = b2 + w[5];
    w[4] = uni(rng, pm, pM);
    if (admissibility(w).region != Region::violated) return w;
  }
}

std::vector<CheckResult> run_verify_suite(long samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  const long small = std::max(1L, samples / 10);

  {
    Check c("round_trip", 1e-13, samples);
    for (long s = 0; s < samples; ++s) {
      const Vec9 w = random_admissible_state(rng);
      const Vec9 back = cons_to_prim(prim_to_cons(w));
      c.see(((back - w).cwiseAbs().array() / (w.cwiseAbs().array() + 1e-300)).maxCoeff());
    }
    out.push_back(c.done());
  }
  {
    Check c("entropy_gradient", 1e-6, small);
    for (long s = 0; s < small; ++s) {
      const Vec9 w = random_admissible_state(rng);
      const Vec9 u = prim_to_cons(w);
      const Vec9 v = entropy_vars(w);
      Vec9 fd;
      for (int k = 0; k < 9; ++k) {
        const double h = 1e-6 * std::max(1.0, std::abs(u[k]));
        Vec9 a = u, b = u;
        a[k] += h;
        b[k] -= h;
        fd[k] = (entropy_pair(cons_to_prim(a)).E - entropy_pair(cons_to_prim(b)).E) / (2.0 * h);
      }
      c.see((fd - v).norm() / v.norm());
    }
    out.push_back(c.done());
  }
  {
    Check c("phi_identity", 1e-13, samples);
    for (long s = 0; s < samples; ++s) {
      const Vec9 v = entropy_vars(random_admissible_state(rng));
      const GodunovPhi g = godunov_phi(v);
      c.see(std::abs(v.dot(g.dphi) - g.phi) /
            (v.cwiseAbs().dot(g.dphi.cwiseAbs()) + 1e-300));
    }
    out.push_back(c.done());
  }
  for (Axis d : {Axis::x, Axis::y}) {
    Check c(std::string("tadmor_") + axis_name(d), 1e-11, samples);
    Check k(std::string("flux_consistency_") + axis_name(d), 1e-13, samples);
    const int n = d == Axis::x ? slot::bx : slot::by;
    for (long s = 0; s < samples; ++s) {
      const Vec9 wl = random_admissible_state(rng), wr = random_admissible_state(rng);
      const Vec9 f = ec_flux(wl, wr, d);
      const Vec9 vl = entropy_vars(wl), vr = entropy_vars(wr);
      const double dphi = godunov_phi(vr).phi - godunov_phi(vl).phi;
      const double dpot = potential_flux(wr, d) - potential_flux(wl, d);
      const double bbar = 0.5 * (wl[n] + wr[n]);
      const double lhs = (vr - vl).dot(f);
      const double scale = (vr - vl).cwiseAbs().dot(f.cwiseAbs()) + std::abs(dpot) +
                           std::abs(dphi * bbar);
      c.see(std::abs(lhs - (dpot - dphi * bbar)) / scale);
      const Vec9 pf = physical_flux(wl, d);
      k.see((ec_flux(wl, wl, d) - pf).cwiseAbs().maxCoeff() / pf.cwiseAbs().maxCoeff());
    }
    out.push_back(c.done());
    out.push_back(k.done());
  }
  for (Axis d : {Axis::x, Axis::y}) {
    Check c(std::string("noncons_orthogonality_") + axis_name(d), 1e-12, samples);
    for (long s = 0; s < samples; ++s) {
      const Vec9 w = random_admissible_state(rng);
      Vec9 g;
      for (int q = 0; q < 9; ++q) g[q] = uni(rng, -1.0, 1.0);
      const Vec9 cg = noncons_apply(w, g, d);
      const Vec9 v = entropy_vars(w);
      const double den = v.norm() * cg.norm();
      c.see(den > 0.0 ? std::abs(v.dot(cg)) / den : 0.0);
    }
    out.push_back(c.done());
  }
  {
    Check c("scaling_identity", 1e-6, small);
    Check t("sqrt_scaling", 1e-10, small);
    for (long s = 0; s < small; ++s) {
      const Vec9 w = random_admissible_state(rng);
      const Axis d = s % 2 ? Axis::y : Axis::x;
      const EigenDecomp e = entropy_scaled_eigenvectors(w, d);
      const Mat9 fd = fd_du_dv(entropy_vars(w));
      c.see((e.r_tilde * e.r_tilde.transpose() - fd).norm() / fd.norm());
      const Mat9 tm = scaling_matrix(w);
      const Mat9 y = y_matrix(w);
      t.see((tm * tm - y).norm() / y.norm());
    }
    out.push_back(c.done());
    out.push_back(t.done());
  }
  {
    Check c("implicit_duality", 1e-12, small);
    Check k("implicit_contraction", 0.0, small);
    for (long s = 0; s < small; ++s) {
      const Vec9 w = random_admissible_state(rng);
      const Vec9 u = prim_to_cons(w);
      const double dtb = loguni(rng, 1e-8, 1e-1), tau = loguni(rng, 1e-6, 1.0);
      const Vec9 a = implicit_source_solve(u, dtb, tau);
      const Vec9 b = implicit_source_solve_newton(u, dtb, tau);
      c.see(std::abs(a[4] - b[4]) / std::abs(a[4]));
      const Vec9 wa = cons_to_prim(a);
      const double before = std::abs(w[4] - w[5]), after = std::abs(wa[4] - wa[5]);
      k.see(before > 0.0 && !(after < before) ? 1.0 : 0.0);
    }
    out.push_back(c.done());
    out.push_back(k.done());
  }
  {
    Check c("sign_property", 0.0, samples);
    for (long s = 0; s < samples; ++s) {
      const int k = 2 + static_cast<int>(s % 3);
      std::vector<Vec9> cells(2 * k);
      const Vec9 base = random_admissible_state(rng);
      const bool jump = s % 2 == 0;
      const int at = static_cast<int>(uni(rng, 0, 2 * k));
      for (int q = 0; q < 2 * k; ++q) {
        Vec9 w = base;
        const double x = q + uni(rng, -0.2, 0.2);
        w[0] *= 1.0 + 0.3 * std::sin(0.7 * x);
        w[1] += 0.2 * std::cos(0.5 * x);
        w[5] *= 1.0 + 0.2 * std::cos(0.9 * x);
        w[7] += 0.3 * std::sin(0.4 * x);
        if (jump && q >= at) {
          w[0] *= 0.3;
          w[5] *= 0.5;
        }
        if (admissibility(w).region == Region::violated) w = base;
        cells[q] = w;
      }
      const ScaledJump sj = scaled_entropy_jump(cells, s % 4 < 2 ? Axis::x : Axis::y, k);
      double bad = 0.0;
      for (int q = 0; q < 9; ++q) {
        if (sj.w_rec[q] * sj.w_raw[q] < 0.0) bad = 1.0;
      }
      c.see(bad);
    }
    out.push_back(c.done());
  }
  {
    Check c("log_mean_bounds", 0.0, samples);
    for (long s = 0; s < samples; ++s) {
      const double a = loguni(rng, 1e-3, 1e3);
      const double b = s % 3 == 0 ? a * (1.0 + uni(rng, -1e-5, 1e-5)) : loguni(rng, 1e-3, 1e3);
      const double m = log_mean(a, b);
      const double lo = std::min(a, b) * (1.0 - 1e-15), hi = std::max(a, b) * (1.0 + 1e-15);
      c.see(m >= lo && m <= hi ? 0.0 : 1.0);
    }
    out.push_back(c.done());
  }
  return out;
}

}  // namespace cgl
