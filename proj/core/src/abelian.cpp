#include "unistab/abelian.hpp"

#include <gmpxx.h>

#include <utility>

namespace unistab {
namespace {

using Matrix = std::vector<std::vector<mpz_class>>;

// Elementary row/column reduction to diagonal form, then fixes the divisor
// chain with gcd/lcm on pairs.
std::vector<mpz_class> snf(Matrix a, std::size_t rows, std::size_t cols) {
  std::vector<mpz_class> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero absolute value in the remaining block
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const mpz_class q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const mpz_class q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      mpz_class g, l;
      mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

}  // namespace

std::vector<std::string> smith_diagonal(const std::vector<std::vector<long long>>& matrix) {
  const std::size_t rows = matrix.size();
  const std::size_t cols = rows ? matrix[0].size() : 0;
  Matrix a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = static_cast<long>(matrix[i][j]);
  std::vector<std::string> out;
  for (const auto& d : snf(std::move(a), rows, cols)) out.push_back(d.get_str());
  return out;
}

AbelianInvariants abelianization(const GroupPresentation& p) {
  const std::size_t rows = p.relators.size(), cols = p.generators;
  Matrix a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (const auto& l : p.relators[i]) a[i][l.gen] += l.exp;
  AbelianInvariants inv;
  const auto diag = snf(std::move(a), rows, cols);
  inv.free_rank = cols - diag.size();
  for (const auto& d : diag)
    if (d != 1) inv.torsion.push_back(d.get_str());
  return inv;
}

std::string to_string(const AbelianInvariants& a) {
  std::string out;
  if (a.free_rank == 1) out = "Z";
  if (a.free_rank > 1) out = "Z^" + std::to_string(a.free_rank);
  for (const auto& t : a.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t;
  }
  return out.empty() ? "1" : out;
}

}  // namespace unistab
