// The eight coordinate symmetries: the group table, the action on points and
// polynomials, and the symmetrizer identities.
#include <iomanip>
#include <iostream>

#include "sl3cv/sampling.hpp"
#include "sl3cv/symmetry.hpp"

using namespace sl3cv;

int main() {
  std::cout << "-- the group table -----------------------------------------\n";
  const auto& G = dihedral_group();
  std::cout << std::setw(6) << "*";
  for (const auto& h : G) std::cout << std::setw(6) << h.name;
  std::cout << "\n";
  for (const auto& g : G) {
    std::cout << std::setw(6) << g.name;
    for (const auto& h : G) std::cout << std::setw(6) << compose(g, h).name;
    std::cout << "\n";
  }
  std::cout << "\norders:";
  for (const auto& g : G) std::cout << " " << g.name << "=" << element_order(g);
  std::cout << "\n\n";

  std::cout << "-- action on coordinates -----------------------------------\n";
  for (const char* name : {"i", "t", "ti"}) {
    const auto& g = dihedral_element(name);
    std::cout << std::setw(3) << name << ": t(1) -> t(" << g.perm(1) << "), t(3) -> t("
              << g.perm(3) << "), t(5) -> " << (g.odd ? "P - t(5)" : "t(5)") << "\n";
  }
  std::cout << "\n";

  std::cout << "-- orbit of a point ----------------------------------------\n";
  CharPoint pt = chi(sample_pair_generic(7));
  for (const auto& g : G) {
    CharPoint moved = act_on_point(g, pt);
    std::cout << std::setw(5) << g.name << ": t(1) = " << to_string(moved.t[0])
              << ", t(5) = " << to_string(moved.t[8])
              << (surface_residual(moved).is_zero() ? "   [on surface]" : "   [OFF]") << "\n";
  }
  std::cout << "\n";

  std::cout << "-- invariants ----------------------------------------------\n";
  bool fixed = true;
  for (const auto& g : G)
    fixed = fixed && act_on_poly(g, polynomial_P()) == polynomial_P() &&
            act_on_poly(g, polynomial_Q()) == polynomial_Q();
  std::cout << "P and Q fixed by all eight elements: " << (fixed ? "yes" : "no") << "\n";
  std::cout << "symmetrized seed p equals P + 3:     "
            << (symmetrize(seed_p()) == polynomial_P() + Polynomial::constant(3) ? "yes"
                                                                                 : "no")
            << "\n";
  std::cout << "symmetrized seed q equals Q - 9:     "
            << (symmetrize(seed_q()) == polynomial_Q() - Polynomial::constant(9) ? "yes"
                                                                                 : "no")
            << "\n\n";

  std::cout << "-- a Nielsen move through the rewriter ---------------------\n";
  std::cout << "a -> a*b, b -> b induces\n";
  TraceRewriter rw;
  auto [w1, w2] = nielsen_eta();
  auto images = nielsen_action(w1, w2, rw);
  for (int i = 0; i < 9; ++i)
    std::cout << "  t(" << kVarTags[i] << ") -> " << images[i].str() << "\n";
  return 0;
}
