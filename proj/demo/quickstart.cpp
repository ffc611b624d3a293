// Residue and trace position of a few semigroups, computed two ways.

#include <iostream>

#include "semitrace/semitrace.hpp"

int main() {
  using namespace semitrace;
  for (auto gens : {std::vector<Int>{3, 7, 8},
                    std::vector<Int>{5, 6, 7},
                    std::vector<Int>{7, 9, 10}}) {
    NumericalSemigroup h(gens);
    auto const         data = trace_ideal(h);
    std::cout << "<" << detail::join(h.generators()) << ">"
              << "  Fr=" << h.frobenius() << "  PF={"
              << detail::join(h.pseudo_frobenius()) << "}"
              << "  res=" << data.residue
              << "  d1*d2*d3=" << residue3(h).residue
              << "  position=" << to_string(data.position.position) << '\n';
  }
}
