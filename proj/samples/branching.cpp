// Walks the alternating Bratteli diagram up to n = 8 and prints, for each
// self-conjugate label, its dagger set and the dimension of the irreducible.

#include <iostream>

#include "altgt/altgt.hpp"

int main() {
  using namespace altgt;
  for (int n = 3; n <= 8; ++n) {
    for (const auto& alpha : labels(n)) {
      if (!alpha.is_signed()) continue;
      std::cout << to_string(alpha) << "  dim " << dim_alt(alpha) << "  below:";
      for (const auto& beta : dagger_down_set(alpha)) std::cout << ' ' << to_string(beta);
      std::cout << '\n';
    }
  }
  const auto g = bratteli(8);
  std::cout << g.nodes.size() << " nodes, " << g.edges.size() << " edges up to n = 8\n";
}
