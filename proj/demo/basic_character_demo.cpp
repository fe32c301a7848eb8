// Prints the basic A4(1) character three ways and their agreement.

#include <iostream>

#include "affchar/character.hpp"
#include "affchar/qseries.hpp"
#include "affchar/theta_oracle.hpp"

int main() {
  using namespace affchar;
  const Rank rank(4);
  const auto basic = AffineDominant::basic(rank);

  const auto perm = normalized_character(basic, 8, EnumerationMethod::lemma).chi;
  const auto oracle = oracle_character(basic, 2, 8);
  const auto eta = basic_character_rhs(rank, 8);

  std::cout << "q^n  permutation  theta(2 shells)  Theta/Phi^4\n";
  for (int n = 0; n <= 8; ++n) {
    std::cout << n << "  " << perm[n] << "  ";
    if (n <= oracle.trunc()) std::cout << oracle[n]; else std::cout << "-";
    std::cout << "  " << eta[n] << '\n';
  }
  std::cout << "anomaly " << to_string(anomaly(basic)) << '\n';
}
