// Round trip through the polynomial text format, coefficient recovery by
// Moebius inversion, and the vanishing-pattern relation check.

#include <iostream>
#include <sstream>

#include "cubecover/multilinear.hpp"

int main() {
  using namespace cubecover;

  // (1 - x1)(1 - x2)(1 - x3): vanishes off the origin, 1 at the origin.
  std::istringstream file(
      "n=3 field=rational\n"
      "1 0\n"
      "-1 1\n-1 2\n-1 4\n"
      "1 3\n1 5\n1 6\n"
      "-1 7\n");
  const AnyPoly any = read_poly(file);
  const auto& f = std::get<MultilinearPoly<RationalDomain>>(any);

  std::cout << "vertex values:\n";
  const auto values = eval_table(f);
  for (SubsetMask v = 0; v < values.size(); ++v) {
    std::cout << "  f(" << mask_to_hex(v) << ") = " << values.at(v).to_string() << "\n";
  }

  const auto alpha = alpha_of(f);
  std::cout << "alpha table reproduces the coefficients: ";
  bool same = true;
  for (SubsetMask j = 0; j < alpha.size(); ++j) same = same && alpha.at(j) == f.coeff(j);
  std::cout << (same ? "yes" : "NO") << "\n";

  const Report rel = check_double_star_relation(f, 0);
  std::cout << report_to_text(rel);
  return same && rel.passed() ? 0 : 1;
}
