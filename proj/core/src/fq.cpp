#include "turan/fq.hpp"

#include "turan/errors.hpp"

namespace turan {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

namespace {
void require_prime(std::uint32_t q) {
  thread_local std::uint32_t last_ok = 0;
  if (q == last_ok) return;
  if (!is_prime(q))
    throw ParamError("field modulus must be prime, got " + std::to_string(q));
  last_ok = q;
}
}  // namespace

FqScalar::FqScalar(std::uint64_t v, std::uint32_t modulus) {
  require_prime(modulus);
  q = modulus;
  value = static_cast<std::uint32_t>(v % modulus);
}

static void check_same(const FqScalar& a, const FqScalar& b) {
  if (a.q != b.q)
    throw ParamError("mixed field moduli " + std::to_string(a.q) + " and " + std::to_string(b.q));
}

FqScalar FqScalar::operator+(FqScalar o) const {
  check_same(*this, o);
  std::uint32_t s = value + o.value;
  if (s >= q) s -= q;
  FqScalar r;
  r.value = s;
  r.q = q;
  return r;
}

FqScalar FqScalar::operator-(FqScalar o) const {
  check_same(*this, o);
  FqScalar r;
  r.value = value >= o.value ? value - o.value : value + q - o.value;
  r.q = q;
  return r;
}

FqScalar FqScalar::operator*(FqScalar o) const {
  check_same(*this, o);
  FqScalar r;
  r.value = static_cast<std::uint32_t>(
      static_cast<std::uint64_t>(value) * o.value % q);
  r.q = q;
  return r;
}

FqScalar FqScalar::pow(std::uint64_t e) const {
  FqScalar base = *this, acc;
  acc.value = 1 % q;
  acc.q = q;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FqScalar FqScalar::inv() const {
  if (value == 0) throw ParamError("zero has no inverse in F_" + std::to_string(q));
  return pow(q - 2);
}

std::vector<std::uint32_t> unrank_vector(std::uint64_t index, int len, std::uint32_t q) {
  std::vector<std::uint32_t> out(static_cast<size_t>(len));
  for (int i = len - 1; i >= 0; --i) {
    out[static_cast<size_t>(i)] = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
  if (index != 0)
    throw ParamError("vector rank out of range for q^len");
  return out;
}

std::uint64_t rank_vector(const std::vector<std::uint32_t>& coords, std::uint32_t q) {
  std::uint64_t r = 0;
  for (std::uint32_t c : coords) {
    if (c >= q) throw ParamError("coordinate " + std::to_string(c) + " not reduced mod q");
    r = r * q + c;
  }
  return r;
}

}  // namespace turan
