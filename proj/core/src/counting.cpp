#include "hgkit/counting.hpp"

#include <limits>

#include "hgkit/errors.hpp"

namespace hgkit {

BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt power(long long base, long long exp) {
  if (exp < 0) throw PreconditionError("negative exponent");
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

BigInt factorial(long long n) {
  if (n < 0) throw PreconditionError("negative factorial");
  BigInt result = 1;
  for (long long i = 2; i <= n; ++i) result *= i;
  return result;
}

std::uint64_t binomial_u64(long long n, long long k) {
  BigInt b = binomial(n, k);
  if (b > std::numeric_limits<std::uint64_t>::max())
    throw LimitExceeded("C(" + std::to_string(n) + ", " + std::to_string(k) +
                        ") does not fit in 64 bits");
  return static_cast<std::uint64_t>(b);
}

std::string to_decimal(const BigInt& x) { return x.str(); }

std::vector<VertexSet> subsets_of(const VertexSet& ground, int size) {
  auto members = ground.members();
  std::vector<VertexSet> out;
  for_each_subset(static_cast<int>(members.size()), size, [&](const VertexSet& idx) {
    VertexSet s;
    idx.for_each([&](int i) { s.insert(members[static_cast<std::size_t>(i)]); });
    out.push_back(s);
  });
  return out;
}

std::vector<VertexSet> all_subsets(int n, int size) {
  std::vector<VertexSet> out;
  for_each_subset(n, size, [&](const VertexSet& s) { out.push_back(s); });
  return out;
}

}  // namespace hgkit
