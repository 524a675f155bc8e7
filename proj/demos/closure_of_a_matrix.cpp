// Computes the closure of the cyclic group of a 2x2 matrix with the library
// API and prints the defining equations.

#include <iostream>

#include "zariski/zariski.hpp"

using namespace zariski;

int main() {
  RatMatrix m = RatMatrix::from_rows({
      {Rational(10), Rational(-8)},
      {Rational(6), Rational(-4)},
  });

  ClosureReport rep = closure_pipeline(m, Mode::Group);
  std::cout << "dimension " << rep.dimension << ", " << rep.num_components
            << " component(s), rank G(M) = " << rep.rank_g << "\n";
  std::cout << "defining equations:\n";
  for (const auto& g : reduced_basis(rep.ideal, Order::Lex))
    std::cout << "  " << poly_to_string(g) << " = 0\n";

  OracleVerdict v = verify_oracle(m, rep, 25, Mode::Group);
  std::cout << (v.pass ? "oracle: every M^k (|k| <= 25) satisfies the ideal\n"
                       : "oracle: FAILED - " + v.message + "\n");
  return v.pass ? 0 : 1;
}
