// Finds the submodule D^(4,1) inside S^(3,2) when q is a primitive cube root
// of unity, first by hand (v = (1 + h_4) v_{t_minus}) and then with the
// kernel search.

#include <iostream>

#include "hecke/hecke.hpp"

using namespace hecke;

int main() {
  const Partition lambda{3, 2}, mu{4, 1};
  const int p = 3;
  const RootModule module(lambda, CyclotomicRing(p));

  std::cout << "basis of S^(" << lambda.to_string() << "):\n";
  for (const auto& t : module.basis()) std::cout << "  " << t.to_string() << "\n";

  const ColumnElement one_plus_h4{4};
  const auto v = module.apply(one_plus_h4.element(), module.superstandard_vector());
  std::cout << "v = (1 + h_4) v_t_minus has coordinates:";
  for (int k = 0; k < module.dimension(); ++k) std::cout << " " << v.coords(k, 0);
  std::cout << "\n";

  std::cout << "annihilators of t_minus for mu = (" << mu.to_string() << ") acting on v:\n";
  for (const auto& c : column_elements(mu))
    std::cout << "  1+h_" << c.anchor << ": " << (module.apply(c.element(), v).coords.is_zero() ? "0" : "nonzero") << "\n";
  for (const auto& g : garnir_elements(mu))
    std::cout << "  " << g.to_string() << ": " << (module.apply(g.element(), v).coords.is_zero() ? "0" : "nonzero") << "\n";

  const auto generators = find_submodule_generators(module, mu);
  std::cout << "kernel dimension: " << generators.size() << "\n";
  std::cout << "generated submodule dimension: " << submodule_dimension(module, generators) << "\n";

  const auto report = analyze(lambda, p);
  std::cout << "dim D^(" << lambda.to_string() << ") = " << report.dim_D_lambda << ", p-root standard basis:";
  for (const auto& t : enumerate_p_root_standard(lambda, p)) std::cout << " " << t.to_string();
  std::cout << "\n";
}
