// Realizes a toric surface as the closure of a cyclic diagonal group and
// checks the construction by rebuilding the multiplicative relation lattice.

#include <iostream>

#include "zariski/zariski.hpp"

using namespace zariski;

int main() {
  std::vector<std::vector<Int>> points{{Int(3), Int(-1)}, {Int(0), Int(1)}, {Int(1), Int(1)}};

  ToricData t = toric_from_points(points);
  std::cout << "toric variety of dimension " << t.dimension << " cut by:\n";
  for (const auto& g : reduced_basis(t.ideal, Order::Lex))
    std::cout << "  " << poly_to_string(g) << " = 0\n";

  std::vector<Rational> diag = realize_as_matrix(points);
  std::cout << "realized by diag(";
  for (size_t i = 0; i < diag.size(); ++i) std::cout << (i ? ", " : "") << to_string(diag[i]);
  std::cout << ")\n";

  MultGroupData g = build_group(diag);
  bool ok = lattice_equal(g.relation_lattice, t.kernel_lattice);
  std::cout << (ok ? "round trip ok: relation lattice = ker(A)\n"
                   : "round trip FAILED\n");
  return ok ? 0 : 1;
}
