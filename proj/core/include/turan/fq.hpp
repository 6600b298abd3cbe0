#pragma once

#include <cstdint>
#include <vector>

namespace turan {

bool is_prime(std::uint64_t n);

// Element of the prime field F_q. Construction primality-checks q (cached,
// so tight loops over one modulus pay it once). Mixed-modulus arithmetic is
// a domain error.
struct FqScalar {
  std::uint32_t value = 0;
  std::uint32_t q = 2;

  FqScalar() = default;
  FqScalar(std::uint64_t v, std::uint32_t modulus);

  FqScalar operator+(FqScalar o) const;
  FqScalar operator-(FqScalar o) const;
  FqScalar operator*(FqScalar o) const;
  // Multiplicative inverse; zero is a domain error.
  FqScalar inv() const;
  FqScalar pow(std::uint64_t e) const;
  bool operator==(const FqScalar& o) const { return value == o.value && q == o.q; }
};

// Big-endian radix-q encoding between [0, q^len) and coordinate vectors.
// The first coordinate is the most significant digit, so lexicographic
// vector order matches numeric order.
std::vector<std::uint32_t> unrank_vector(std::uint64_t index, int len, std::uint32_t q);
std::uint64_t rank_vector(const std::vector<std::uint32_t>& coords, std::uint32_t q);

}  // namespace turan
