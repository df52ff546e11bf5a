#pragma once

#include <gmpxx.h>

#include <vector>

#include "pq/rational.hpp"

namespace pq {

// Structure of the multiplicative subgroup of Q^x generated by a finite list.
struct GroupAnalysis {
  std::vector<mpz_class> primes;                  // sorted primes occurring anywhere
  std::vector<std::vector<mpz_class>> exponents;  // one row per generator, one column per prime
  std::vector<int> sign_parity;                   // 1 where the generator is negative
  std::vector<std::vector<mpz_class>> relations;  // Z-basis of the integer relations among rows
  int lattice_rank = 0;
  bool contains_minus_one = false;
};

// Throws InvalidArgument on a zero generator.
GroupAnalysis group_analysis(const std::vector<Rational>& generators);

}  // namespace pq
