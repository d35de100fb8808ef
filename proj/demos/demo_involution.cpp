// Smallest useful tour of the library: build the subset matrix for (n, r),
// print it, square it, and run the degree oracle on the same instance.

#include <iostream>

#include "cubecover/cover_matrix.hpp"
#include "cubecover/cover_oracle.hpp"

int main() {
  using namespace cubecover;

  const int n = 4, r = 1;
  const SubsetMatrix m = build_cover_matrix(n, r);
  std::cout << "subset matrix for n=" << n << ", r=" << r << ":\n";
  write_matrix_dump(std::cout, m);

  const Report claim = verify_involution(n, r);
  std::cout << "\n" << report_to_text(claim);

  const PrimeDomain field(10007);
  const auto cert = min_cover_degree(n, r, field);
  std::cout << "\nminimal covering degree over " << field.kind().to_string() << ": "
            << cert.d_min << " (bound predicts " << n - r << ")\n";
  std::cout << "witness: ";
  write_poly(std::cout, *cert.witness);
  return claim.passed() && cert.d_min == n - r ? 0 : 1;
}
