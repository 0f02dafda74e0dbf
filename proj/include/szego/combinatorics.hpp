#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "szego/rational.hpp"

namespace szego::comb {

// Largest vector length we enumerate permutations for (9! = 362880).
inline constexpr int kDefaultCap = 9;

using RationalVector = std::vector<Rational>;

// A composition of some total into parts >= 1.
using Composition = std::vector<int>;

// One-line notation: images[i] = tau(i+1), values in 1..m, a bijection.
struct Permutation {
    std::vector<int> images;

    explicit Permutation(std::vector<int> im);
    static Permutation identity(int m);
    int size() const { return static_cast<int>(images.size()); }
};

// Canonical cycle list: each cycle led by its smallest element, cycles
// sorted by leader.  Fixed points appear as singleton cycles.
std::vector<std::vector<int>> cycle_decompose(const Permutation& tau);

// All compositions of `total` into exactly `parts` parts >= 1, in
// lexicographic order.
std::vector<Composition> compositions(int total, int parts);

// M_j(a) = max(0, a_1, a_1+a_2, ..., a_1+...+a_j); M_0 = 0.
Rational prefix_max_stat(const RationalVector& a, int j);

// Hunt-Dyson, both sides:
//   (sum_tau [M_m(a_tau) - M_{m-1}(a_tau)],  (m-1)! (a_1+...+a_m)_+)
std::pair<Rational, Rational> hd_sides(const RationalVector& a, int cap = kDefaultCap);

// sum_tau [ M_m(a_tau)^n - M_{m-1}(a_tau)^n ]
Rational ghd_lhs(const RationalVector& a, int n, int cap = kDefaultCap);

// The block-sum side: sum over tau, block counts j, compositions
// k_1+...+k_j = m and l_1+...+l_j = n, with weight
// (n; l_1,...,l_j) / (j! k_1...k_j) on the product of positive parts of
// the block sums raised to l_i.
Rational ghd_rhs(const RationalVector& a, int n, int cap = kDefaultCap);

class RationalMultiset {
public:
    void insert(const Rational& v, long count = 1);
    long total() const { return total_; }
    const std::map<Rational, long>& counts() const { return counts_; }
    bool operator==(const RationalMultiset& o) const { return counts_ == o.counts_; }
    bool operator!=(const RationalMultiset& o) const { return !(*this == o); }
    // "{v1 x m1, v2 x m2, ...}" in ascending value order.
    std::string str() const;

private:
    std::map<Rational, long> counts_;
    long total_ = 0;
};

// Left: {M_m(a_tau)} over all tau.  Right: for each tau, the sum over its
// cycles of the positive part of the cycle sum.  Equal multisets.
std::pair<RationalMultiset, RationalMultiset> bst_multisets(const RationalVector& a,
                                                            int cap = kDefaultCap);

// Finite-support step law with exact rational probabilities summing to 1.
class StepDistribution {
public:
    StepDistribution(std::vector<Rational> support, std::vector<Rational> probs);
    const std::vector<Rational>& support() const { return support_; }
    const std::vector<Rational>& probs() const { return probs_; }
    int atoms() const { return static_cast<int>(support_.size()); }

private:
    std::vector<Rational> support_;
    std::vector<Rational> probs_;
};

// E[(S_k)_+^l] where S_k is the k-step sum, by exact convolution.
Rational rw_plus_moment(const StepDistribution& dist, int k, int l);

// E[max(0, S_1, ..., S_m)^n] through the block-sum recursion
//   E[M_m^n] - E[M_{m-1}^n] =
//     sum_j (1/j!) sum_{k-comp} sum_{l-comp} (n; l) prod E[(S_{k_i})_+^{l_i}] / k_i.
Rational rw_max_moment(const StepDistribution& dist, int m, int n);

// Same moment by full path enumeration over |support|^m paths.
Rational rw_max_moment_oracle(const StepDistribution& dist, int m, int n,
                              long long path_cap = 20'000'000);

}  // namespace szego::comb
