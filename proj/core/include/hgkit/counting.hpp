#pragma once

#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hgkit/vertex_set.hpp"

namespace hgkit {

using BigInt = boost::multiprecision::cpp_int;

/// Exact C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long long n, long long k);

/// base^exp for exp >= 0.
BigInt power(long long base, long long exp);

BigInt factorial(long long n);

/// C(n, k) as a machine word; throws LimitExceeded on overflow.
std::uint64_t binomial_u64(long long n, long long k);

std::string to_decimal(const BigInt& x);

/// Calls f(const VertexSet&) for every `size`-subset of [0, n) in
/// lexicographic order. Stops early when f returns false (if f returns bool).
template <typename F>
void for_each_subset(int n, int size, F&& f) {
  if (size < 0 || size > n) return;
  std::vector<int> idx(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    VertexSet s;
    for (int v : idx) s.insert(v);
    if constexpr (std::is_same_v<decltype(f(s)), bool>) {
      if (!f(s)) return;
    } else {
      f(s);
    }
    int i = size - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// Every `size`-subset of `ground`, in lexicographic order.
std::vector<VertexSet> subsets_of(const VertexSet& ground, int size);

/// Every `size`-subset of [0, n), in lexicographic order.
std::vector<VertexSet> all_subsets(int n, int size);

}  // namespace hgkit
