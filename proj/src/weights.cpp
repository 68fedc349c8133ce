#include "hives/weights.hpp"

#include <numeric>
#include <stdexcept>

namespace hives {

bool is_weakly_decreasing(const std::vector<int>& w) {
  for (size_t k = 0; k + 1 < w.size(); ++k)
    if (w[k] < w[k + 1]) return false;
  return true;
}

bool is_partition(const std::vector<int>& w) {
  return is_weakly_decreasing(w) && (w.empty() || w.back() >= 0);
}

int weight_sum(const std::vector<int>& w) {
  return std::accumulate(w.begin(), w.end(), 0);
}

int coroot_pairing(const Weight& w, int i) {
  if (i < 1 || i + 1 > static_cast<int>(w.size()))
    throw std::invalid_argument("coroot_pairing: index out of range");
  return w[i - 1] - w[i];
}

Weight reverse_weight(const Weight& w) {
  return Weight(w.rbegin(), w.rend());
}

Weight add_weights(const Weight& a, const Weight& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("add_weights: length mismatch");
  Weight c(a.size());
  for (size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
  return c;
}

namespace {

void emit_decreasing(int n, int sum, int lo, int hi, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out) {
  if (static_cast<int>(acc.size()) == n) {
    if (sum == 0) out.push_back(acc);
    return;
  }
  int remaining = n - static_cast<int>(acc.size());
  int cap = acc.empty() ? hi : std::min(hi, acc.back());
  for (int v = cap; v >= lo; --v) {
    // the rest must fit below v and above lo
    if (sum - v > v * (remaining - 1) || sum - v < lo * (remaining - 1)) continue;
    acc.push_back(v);
    emit_decreasing(n, sum - v, lo, hi, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<DominantWeight> dominants_with_sum(int n, int sum, int lo, int hi) {
  std::vector<DominantWeight> out;
  if (n == 0) {
    if (sum == 0) out.push_back({});
    return out;
  }
  std::vector<int> acc;
  emit_decreasing(n, sum, lo, hi, acc, out);
  return out;
}

std::vector<Partition> partitions_with_sum(int n, int sum) {
  return dominants_with_sum(n, sum, 0, sum);
}

std::vector<Partition> partitions_up_to(int n, int max_sum) {
  std::vector<Partition> out;
  for (int s = 0; s <= max_sum; ++s) {
    auto part = partitions_with_sum(n, s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Partition> partitions_with_max_part(int n, int max_part) {
  std::vector<Partition> out;
  for (int s = 0; s <= n * max_part; ++s) {
    auto part = dominants_with_sum(n, s, 0, max_part);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string weight_to_string(const std::vector<int>& w) {
  std::string s = "(";
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(w[k]);
  }
  s += ")";
  return s;
}

}  // namespace hives
