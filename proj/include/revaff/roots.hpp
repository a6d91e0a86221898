#pragma once

#include <string>
#include <vector>

#include "revaff/polynomial.hpp"

namespace revaff {

// All roots of p that lie in Q(i), with multiplicities, plus the remaining
// (root-free over Q(i)) monic factor. Throws SpectrumNotSupported only when
// the integer factorization behind the divisor search exceeds its caps.
struct RootList {
  std::vector<std::pair<GaussianRational, int>> roots; // sorted by (re, im)
  Poly<GaussianRational> residual;
};

RootList gaussian_roots(const Poly<GaussianRational>& p);

// n > 0; ascending prime factors with exponents.
std::vector<std::pair<mpz_class, int>> factor_integer(mpz_class n);

std::string poly_str(const Poly<GaussianRational>& p);
std::string gaussian_str(const GaussianRational& z);

} // namespace revaff
