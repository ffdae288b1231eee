#include "necklaces/counting.hpp"

#include <stdexcept>

#include "necklaces/errors.hpp"

namespace necklaces {
namespace {

void require_positive(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("n and m must be positive integers");
}

BigInt power(int m, std::uint64_t e) { return boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(e)); }

}  // namespace

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("divisors are defined for positive integers");
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::uint64_t totient(std::uint64_t d) {
  if (d < 1) throw std::invalid_argument("totient is defined for positive integers");
  std::uint64_t result = d;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    while (d % p == 0) d /= p;
    result -= result / p;
  }
  if (d > 1) result -= result / d;
  return result;
}

int moebius(std::uint64_t d) {
  if (d < 1) throw std::invalid_argument("moebius is defined for positive integers");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    sign = -sign;
  }
  if (d > 1) sign = -sign;
  return sign;
}

BigInt count_necklaces(int n, int m) {
  require_positive(n, m);
  const auto len = static_cast<std::uint64_t>(n);
  BigInt sum = 0;
  for (auto d : divisors(len)) sum += BigInt(totient(d)) * power(m, len / d);
  return sum / len;
}

BigInt count_bracelets(int n, int m) {
  require_positive(n, m);
  const auto len = static_cast<std::uint64_t>(n);
  // 4n * B = 2 * sum_{d|n} phi(d) m^(n/d) + n * reflections, where the
  // reflection term counts fixed points summed over the n reflections
  // (scaled by 4/n): 2 m^((n+1)/2) for odd n, (m+1) m^(n/2) for even n.
  BigInt rotations = 0;
  for (auto d : divisors(len)) rotations += BigInt(totient(d)) * power(m, len / d);
  BigInt reflections = (len % 2 == 1) ? 2 * power(m, (len + 1) / 2) : BigInt(m + 1) * power(m, len / 2);
  return (2 * rotations + BigInt(len) * reflections) / (4 * len);
}

BigInt count_lyndon(int n, int m) {
  require_positive(n, m);
  const auto len = static_cast<std::uint64_t>(n);
  BigInt sum = 0;
  for (auto d : divisors(len)) {
    const int mu = moebius(d);
    if (mu != 0) sum += mu * power(m, len / d);
  }
  return sum / len;
}

BigInt count(const CountQuery& query) {
  switch (query.object) {
    case CountedObject::necklace: return count_necklaces(query.n, query.m);
    case CountedObject::bracelet: return count_bracelets(query.n, query.m);
    case CountedObject::lyndon: return count_lyndon(query.n, query.m);
  }
  throw std::invalid_argument("unknown counted object");
}

std::uint64_t count_checked(const CountQuery& query) {
  const BigInt value = count(query);
  if (value > BigInt(UINT64_MAX)) throw OverflowError("count " + value.str() + " does not fit in 64 bits");
  return value.convert_to<std::uint64_t>();
}

}  // namespace necklaces
