// State conversions, entropy pair, Godunov potential, wave speeds and
// admissibility of the CGL system.
#pragma once

#include "cgl/core.hpp"

namespace cgl {

// Conserved -> primitive.  Throws on rho <= 0, p_par <= 0, p_perp <= 0 or
// |B|^2 <= eps_b.
Vec9 cons_to_prim(const Vec9& u, double eps_b = kEpsB);
Vec9 prim_to_cons(const Vec9& w, double eps_b = kEpsB);

// Throws the matching error if w is not a positive state with a defined
// field direction.
void check_positive(const Vec9& w, double eps_b = kEpsB);

// Physical entropy s = ln(p_par p_perp^2 / rho^5).
double specific_entropy(const Vec9& w);

// V = dE/dU for E = -rho s.
Vec9 entropy_vars(const Vec9& w);

// Inverse map V -> U.
Vec9 cons_from_entropy_vars(const Vec9& v);

struct EntropyPair {
  double E;
  double Qx;
  double Qy;
};

EntropyPair entropy_pair(const Vec9& w);

struct GodunovPhi {
  double phi;
  Vec9 dphi;
};

// phi = -(V2 V7 + V3 V8 + V4 V9)/V6 and its gradient.
GodunovPhi godunov_phi(const Vec9& v);

// Entropy potential 2 rho + beta_perp |B|^2 and its flux along d.
double entropy_potential(const Vec9& w);
double potential_flux(const Vec9& w, Axis d);

struct WaveSpeeds {
  // full system
  double ca;
  double cf;
  double cs;
  // conservative part (a^2 = 2 p_perp / rho)
  double cons_cf;
  double cons_cs;
  double v_ax;
  double a;
};

WaveSpeeds wave_speeds(const Vec9& w, Axis d);

// |u_d| + max(c_a, c_f) for the time step.  Outside the admissible region
// negative radicands count as zero and the result is at least |u_d| + cons_cf.
double signal_speed_bound(const Vec9& w, Axis d);

// Conservative-part speeds only.  Always real for positive states.
WaveSpeeds conservative_speeds(const Vec9& w, Axis d);

enum class Region { R1, R2, R3, violated };

const char* region_name(Region r);

struct AdmissibilityReport {
  double p_m;
  double p_M;
  Region region;
};

AdmissibilityReport admissibility(const Vec9& w);

// Relaxation source (p_perp - p_par)/tau in the p_par slot.
Vec9 relaxation_source(const Vec9& w, double tau);

}  // namespace cgl
