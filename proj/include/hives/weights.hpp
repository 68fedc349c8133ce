#pragma once

#include <string>
#include <vector>

namespace hives {

// A gl_n weight is a length-n integer vector.  Dominant weights are weakly
// decreasing; partitions are dominant with all parts >= 0.
using Weight = std::vector<int>;
using DominantWeight = std::vector<int>;
using Partition = std::vector<int>;

bool is_weakly_decreasing(const std::vector<int>& w);
bool is_partition(const std::vector<int>& w);

int weight_sum(const std::vector<int>& w);

// <w, alpha_i^vee> = w[i] - w[i+1], with i in 1..n-1 (1-based).
int coroot_pairing(const Weight& w, int i);

// w_0 . w : reverse the entries.
Weight reverse_weight(const Weight& w);

Weight add_weights(const Weight& a, const Weight& b);

// All partitions of total `sum` with exactly n parts (zeros allowed).
std::vector<Partition> partitions_with_sum(int n, int sum);

// All partitions with n parts, total <= max_sum.
std::vector<Partition> partitions_up_to(int n, int max_sum);

// All partitions with n parts and every part in [0, max_part].
std::vector<Partition> partitions_with_max_part(int n, int max_part);

// All weakly decreasing length-n sequences with given total and entries
// bounded entrywise by [lo, hi].
std::vector<DominantWeight> dominants_with_sum(int n, int sum, int lo, int hi);

std::string weight_to_string(const std::vector<int>& w);

}  // namespace hives
