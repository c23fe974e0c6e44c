#include "ramanujan/common.hpp"

namespace ramanujan {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::contour:
      return "contour";
    case Method::residue_series:
      return "residue-series";
    case Method::limit:
      return "limit";
    case Method::quadrature:
      return "quadrature";
    case Method::series:
      return "series";
    case Method::closed_form:
      return "closed-form";
  }
  return "unknown";
}

}  // namespace ramanujan
