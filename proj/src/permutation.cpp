#include "ramanujan/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ramanujan/tree_stats.hpp"

namespace ramanujan::bijections {

namespace {

void check_bijection(const std::vector<int>& word) {
  std::vector<char> seen(word.size() + 1, 0);
  for (int v : word) {
    if (v < 1 || v > static_cast<int>(word.size())) {
      throw PermutationError("entry " + std::to_string(v) + " outside 1.." + std::to_string(word.size()));
    }
    if (seen[v]) throw PermutationError("entry " + std::to_string(v) + " repeated");
    seen[v] = 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) { check_bijection(word_); }

Permutation Permutation::identity(int n) {
  std::vector<int> w(std::max(n, 0));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> w(std::max(n, 0), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int a = c[i];
      if (a < 1 || a > n) throw PermutationError("cycle entry " + std::to_string(a) + " out of range");
      if (w[a - 1] != 0) throw PermutationError("cycle entry " + std::to_string(a) + " repeated");
      w[a - 1] = c[(i + 1) % c.size()];
    }
  }
  if (std::find(w.begin(), w.end(), 0) != w.end()) throw PermutationError("cycles do not cover [n]");
  return Permutation(std::move(w));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> done(word_.size() + 1, 0);
  // Scanning minima in increasing order yields cycles sorted by minimum.
  for (int start = 1; start <= size(); ++start) {
    if (done[start]) continue;
    std::vector<int> c;
    int a = (*this)(start);
    while (true) {
      c.push_back(a);
      done[a] = 1;
      if (a == start) break;
      a = (*this)(a);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> psi(const Permutation& p) {
  std::vector<int> out;
  for (const auto& c : p.cycles()) out.insert(out.end(), c.begin(), c.end());
  return out;
}

Permutation psi_inv(const std::vector<int>& word) {
  check_bijection(word);
  const auto minima = trees::right_to_left_minima(word);
  std::vector<std::vector<int>> cycles;
  std::size_t start = 0;
  for (std::size_t end : minima) {
    cycles.emplace_back(word.begin() + start, word.begin() + end + 1);
    start = end + 1;
  }
  return Permutation::from_cycles(static_cast<int>(word.size()), cycles);
}

}  // namespace ramanujan::bijections
