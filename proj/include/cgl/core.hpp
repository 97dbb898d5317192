// Basic types shared by every part of the CGL solver.
//
// State vectors use a fixed 9-slot layout:
//   conserved  U = (rho, rho*ux, rho*uy, rho*uz, p_par, e,      Bx, By, Bz)
//   primitive  W = (rho, ux,     uy,     uz,     p_par, p_perp, Bx, By, Bz)
#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace cgl {

using Vec9 = Eigen::Matrix<double, 9, 1>;
using Mat9 = Eigen::Matrix<double, 9, 9>;

enum class Axis { x = 0, y = 1 };

inline const char* axis_name(Axis d) { return d == Axis::x ? "x" : "y"; }

namespace slot {
constexpr int rho = 0;
constexpr int mx = 1, my = 2, mz = 3;
constexpr int ux = 1, uy = 2, uz = 3;
constexpr int ppar = 4;
constexpr int energy = 5;
constexpr int pperp = 5;
constexpr int bx = 6, by = 7, bz = 8;
}  // namespace slot

// Squared-field floor below which the field direction is undefined.
constexpr double kEpsB = 1e-12;

// Swap the x and y components of velocity (momentum) and field.  The
// equations are invariant under this reflection, so every y-direction
// kernel is the x-direction kernel conjugated by this permutation.
inline Vec9 swap_xy(const Vec9& a) {
  Vec9 r = a;
  std::swap(r[1], r[2]);
  std::swap(r[6], r[7]);
  return r;
}

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CGL_ERROR(Name)                                            \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  };

CGL_ERROR(NonPositiveDensity)
CGL_ERROR(NonPositivePressure)
CGL_ERROR(DegenerateField)
CGL_ERROR(DegenerateEntropyState)
CGL_ERROR(ComplexSpeed)
CGL_ERROR(NonPositiveInput)
CGL_ERROR(SqrtBranch)
CGL_ERROR(SingularScaling)
CGL_ERROR(InsufficientGhostWidth)
CGL_ERROR(InadmissibleState)
CGL_ERROR(ImplicitSolveFailure)
CGL_ERROR(NonPositiveResult)
CGL_ERROR(DimensionMismatch)
CGL_ERROR(ShapeMismatch)
CGL_ERROR(NonPositiveError)
CGL_ERROR(ConfigError)

#undef CGL_ERROR

}  // namespace cgl
