// A quick tour: words, trace reduction, evaluation, and the defining equation.
#include <iostream>

#include "sl3cv/rewrite.hpp"
#include "sl3cv/sampling.hpp"
#include "sl3cv/variety.hpp"

using namespace sl3cv;

int main() {
  std::cout << "-- words ---------------------------------------------------\n";
  Word w = Word::parse("a*b^-2*a^3");
  std::cout << "w       = " << w.str() << "\n";
  std::cout << "|w|     = " << w.length() << "   weighted " << w.weighted_length() << "\n";
  std::cout << "w^-1    = " << w.inverse().str() << "\n";
  std::cout << "cyclic  = " << w.cyclic_normal_form().str() << "\n\n";

  std::cout << "-- reduction to the nine coordinates -----------------------\n";
  TraceRewriter rw;
  RewriteTrace tr;
  CoordPolynomial p = rw.reduce(w, &tr);
  std::cout << "tr(w)      = " << p.str() << "\n";
  std::cout << "derivation = " << tr.steps.size() << " steps\n";
  std::cout << "tr(a^3)    = " << rw.reduce(Word::parse("a^3")).str() << "\n";
  std::cout << "commutator = " << rw.reduce(Word::parse("a*b*A*B")).str() << "\n\n";

  std::cout << "-- the hypersurface ----------------------------------------\n";
  std::cout << "P = " << polynomial_P().str() << "\n";
  std::cout << "Q: " << polynomial_Q().terms().size() << " terms, total degree "
            << polynomial_Q().total_degree() << "\n\n";

  SL3Pair pair = sample_pair_generic(2025);
  CharPoint pt = chi(pair);
  std::cout << "a random unimodular pair lands at\n";
  std::cout << "  t(1) = " << to_string(pt.t[0]) << "\n";
  std::cout << "  t(5) = " << to_string(pt.t[8]) << "\n";
  std::cout << "surface residual = " << to_string(surface_residual(pt)) << "\n";
  std::cout << "pairing det      = " << to_string(lambda_det(pair)) << "\n\n";

  std::cout << "-- oracle agreement ----------------------------------------\n";
  ExactComplex direct = trace(evaluate_word(w, pair));
  ExactComplex via_poly = p.eval(pt.t);
  std::cout << "tr(w(A,B)) from the matrices:  " << to_string(direct) << "\n";
  std::cout << "the polynomial at chi(A,B):    " << to_string(via_poly) << "\n";
  std::cout << (direct == via_poly ? "exact match\n" : "MISMATCH\n") << "\n";

  std::cout << "-- the two sheets over the base ----------------------------\n";
  ApproxCharPoint ap = to_approx(pt);
  auto [r1, r2] = fiber_over(ap);
  std::cout << "fiber over the first eight coordinates: " << r1 << " and " << r2 << "\n";
  std::cout << "t(5) of the pair itself:                " << ap.t[8] << "\n";
  return 0;
}
