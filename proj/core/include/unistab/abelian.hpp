#pragma once

#include <string>
#include <vector>

#include "unistab/presentation.hpp"

namespace unistab {

/// Z^free_rank + Z/t_1 + ... with t_1 | t_2 | ... and every t_i >= 2.
/// Torsion coefficients are decimal strings since they can exceed 64 bits.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<std::string> torsion;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Smith normal form of the relators' exponent-sum matrix, computed with
/// arbitrary-precision integers.
AbelianInvariants abelianization(const GroupPresentation& p);

/// Diagonal of the Smith normal form of an integer matrix (rows x cols),
/// nonzero entries only, in divisibility order.
std::vector<std::string> smith_diagonal(const std::vector<std::vector<long long>>& matrix);

/// e.g. "Z^3", "Z + Z/2", "1"
std::string to_string(const AbelianInvariants& a);

}  // namespace unistab
