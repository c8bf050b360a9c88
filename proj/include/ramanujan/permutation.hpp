#pragma once

#include <stdexcept>
#include <vector>

namespace ramanujan::bijections {

class PermutationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One-line notation pi(1) pi(2) ... pi(n).
class Permutation {
 public:
  // Throws PermutationError unless `word` is a bijection of [n].
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int n);
  // Cycles in any order, each in cycle order; the union must be [n].
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }

  // Each cycle is listed ending at its minimum; cycles by increasing minimum.
  std::vector<std::vector<int>> cycles() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

// Cycles by increasing minimum, each written ending at its minimum, then
// concatenated.
std::vector<int> psi(const Permutation& p);
// Splits the word at its right-to-left minima; each block is a cycle.
// Throws PermutationError unless the word is a permutation of [n].
Permutation psi_inv(const std::vector<int>& word);

}  // namespace ramanujan::bijections
