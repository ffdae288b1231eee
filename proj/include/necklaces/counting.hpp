#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace necklaces {

using BigInt = boost::multiprecision::cpp_int;

enum class CountedObject { necklace, bracelet, lyndon };

struct CountQuery {
  CountedObject object;
  int n;
  int m;
};

// Exact class counts from the Burnside and Moebius sums.
//   necklaces: (1/n) sum_{d|n} phi(d) m^(n/d)
//   bracelets: necklaces/2 + m^((n+1)/2)/2            (n odd)
//              necklaces/2 + (m+1) m^(n/2)/4          (n even)
//   lyndon:    (1/n) sum_{d|n} mu(d) m^(n/d)
BigInt count_necklaces(int n, int m);
BigInt count_bracelets(int n, int m);
BigInt count_lyndon(int n, int m);
BigInt count(const CountQuery& query);

// Fixed-width variant; throws OverflowError instead of wrapping.
std::uint64_t count_checked(const CountQuery& query);

std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t totient(std::uint64_t d);
int moebius(std::uint64_t d);

}  // namespace necklaces
