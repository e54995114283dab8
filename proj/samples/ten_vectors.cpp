// Prints the Gelfand-Tsetlin basis of the A_6 irreducible indexed by (4,1,1),
// then checks that each vector is orthogonal to the others.

#include <iostream>

#include "altgt/altgt.hpp"

int main() {
  using namespace altgt;
  const alt_label alpha(partition{4, 1, 1});
  const auto basis = gt_basis(alpha);
  for (const auto& e : basis) std::cout << to_string(e.path) << "\n    " << to_string(e.vector) << '\n';

  bool orthogonal = true;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      orthogonal = orthogonal && inner_product(basis[a].vector, basis[b].vector).is_zero();
  std::cout << basis.size() << " vectors, pairwise orthogonal: " << (orthogonal ? "yes" : "no") << '\n';
  return orthogonal ? 0 : 1;
}
