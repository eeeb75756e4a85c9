#include <bit>
#include <string>
#include <vector>

#include "hgkit/bit_array.hpp"
#include "hgkit/transversal.hpp"

namespace hgkit {

namespace {

using FamilyBits = BitArray<4>;

class CrossPairSearch {
 public:
  CrossPairSearch(int n, int a, SearchBudget& budget) : n_(n), a_(a), budget_(budget) {
    small_ = all_subsets(n, a);
    large_ = all_subsets(n, a + 1);
    if (small_.size() > 64 || large_.size() > FamilyBits::kBits)
      throw LimitExceeded("cross-intersecting search supports C(N,a) <= 64 and C(N,a+1) <= " +
                          std::to_string(FamilyBits::kBits));
    const std::size_t m = large_.size();
    full_small_ = small_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << small_.size()) - 1;
    meets_.resize(m);
    compatible_.resize(m);
    above_.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < small_.size(); ++i)
        if (small_[i].intersects(large_[j])) meets_[j] |= std::uint64_t{1} << i;
      for (std::size_t i = 0; i < m; ++i) {
        if (large_[i].intersects(large_[j])) compatible_[j].set(i);
        if (i > j) above_[j].set(i);
      }
    }
    star_small_.resize(static_cast<std::size_t>(n));
    star_large_.resize(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
      for (std::size_t i = 0; i < small_.size(); ++i)
        if (small_[i].contains(q)) star_small_[static_cast<std::size_t>(q)] |= std::uint64_t{1} << i;
      for (std::size_t j = 0; j < m; ++j)
        if (large_[j].contains(q)) star_large_[static_cast<std::size_t>(q)].set(j);
    }
  }

  CrossPairReport run() {
    FamilyBits all;
    for (std::size_t j = 0; j < large_.size(); ++j) all.set(j);
    visit(all, FamilyBits{}, full_small_, 0);

    CrossPairReport rep;
    rep.N = n_;
    rep.a = a_;
    rep.max_value = best_;
    rep.bound = binomial_u64(n_, a_);
    rep.nodes = budget_.nodes();
    rep.optimizer_count = optimizers_;
    rep.empty_b_optimizers = empty_shape_;
    rep.common_star_optimizers = star_shape_;
    rep.all_optimizers_match_equality_cases = optimizers_ == empty_shape_ + star_shape_;
    std::vector<VertexSet> a_edges, b_edges;
    for (std::size_t i = 0; i < small_.size(); ++i)
      if ((witness_a_ >> i) & 1U) a_edges.push_back(small_[i]);
    witness_b_.for_each([&](int j) { b_edges.push_back(large_[static_cast<std::size_t>(j)]); });
    rep.witness_a = Hypergraph(n_, a_, std::move(a_edges));
    rep.witness_b = Hypergraph(n_, a_ + 1, std::move(b_edges));
    return rep;
  }

 private:
  // `allowed`: indices above the last chosen one that meet every chosen set.
  void visit(const FamilyBits& allowed, const FamilyBits& chosen, std::uint64_t a_mask, int b_count) {
    budget_.charge();
    record(chosen, a_mask, b_count);
    for (int j = allowed.first(); j >= 0; j = allowed.next(j)) {
      const auto jj = static_cast<std::size_t>(j);
      FamilyBits next_chosen = chosen;
      next_chosen.set(jj);
      visit(allowed & compatible_[jj] & above_[jj], next_chosen, a_mask & meets_[jj], b_count + 1);
    }
  }

  void record(const FamilyBits& chosen, std::uint64_t a_mask, int b_count) {
    const std::uint64_t value = static_cast<std::uint64_t>(std::popcount(a_mask)) +
                                static_cast<std::uint64_t>(b_count);
    if (value < best_) return;
    if (value > best_ || optimizers_ == 0) {
      best_ = value;
      optimizers_ = empty_shape_ = star_shape_ = 0;
      witness_a_ = a_mask;
      witness_b_ = chosen;
    }
    ++optimizers_;
    if (b_count == 0 && a_mask == full_small_) {
      ++empty_shape_;
      return;
    }
    for (int q = 0; q < n_; ++q) {
      const auto qq = static_cast<std::size_t>(q);
      if (a_mask == star_small_[qq] && chosen == star_large_[qq]) {
        ++star_shape_;
        return;
      }
    }
  }

  int n_;
  int a_;
  SearchBudget& budget_;
  std::vector<VertexSet> small_;
  std::vector<VertexSet> large_;
  std::uint64_t full_small_ = 0;
  std::vector<std::uint64_t> meets_;
  std::vector<FamilyBits> compatible_;
  std::vector<FamilyBits> above_;
  std::vector<std::uint64_t> star_small_;
  std::vector<FamilyBits> star_large_;

  std::uint64_t best_ = 0;
  std::uint64_t optimizers_ = 0;
  std::uint64_t empty_shape_ = 0;
  std::uint64_t star_shape_ = 0;
  std::uint64_t witness_a_ = 0;
  FamilyBits witness_b_;
};

}  // namespace

CrossPairReport max_cross_pair(int N, int a, SearchBudget budget) {
  if (a < 1) throw PreconditionError("cross-intersecting bound requires a >= 1 (got a=" + std::to_string(a) + ")");
  if (N <= 2 * a + 1)
    throw PreconditionError("cross-intersecting bound requires N > 2a+1 (got N=" + std::to_string(N) +
                            ", a=" + std::to_string(a) + ")");
  CrossPairSearch search(N, a, budget);
  return search.run();
}

}  // namespace hgkit
