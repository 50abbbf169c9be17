#include "rzlab/core.hpp"

namespace rzlab {

const char* to_string(Method m) {
  switch (m) {
    case Method::stirling: return "stirling";
    case Method::asymptotic: return "asymptotic";
    case Method::eta_euler: return "eta_euler";
    case Method::theta_series: return "theta_series";
    case Method::theta_transformed: return "theta_transformed";
    case Method::contour_trapezoid: return "contour_trapezoid";
    case Method::theta_integral: return "theta_integral";
    case Method::newton: return "newton";
    case Method::cluster: return "cluster";
  }
  return "unknown";
}

}  // namespace rzlab
