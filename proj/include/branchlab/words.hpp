#ifndef BRANCHLAB_WORDS_HPP
#define BRANCHLAB_WORDS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "branchlab/errors.hpp"

namespace branchlab {

// Arity of the tree and number of generators a_1..a_d. The construction
// requires d odd and at least 3.
struct GroupConfig {
  int d;

  explicit GroupConfig(int d_) : d(d_) {
    if (d < 3 || d % 2 == 0)
      throw UsageError("d must be an odd integer >= 3, got " + std::to_string(d));
  }
};

// One signed generator occurrence. gen is 1-based.
struct Letter {
  int gen;
  int sign; // +1 or -1

  Letter inverse() const { return {gen, -sign}; }
  bool operator==(const Letter&) const = default;
};

// A freely reduced signed word over the generator alphabet. The empty word
// is the identity. Reduction happens at construction; instances are
// immutable values.
class GroupWord {
public:
  GroupWord() = default;
  explicit GroupWord(std::span<const Letter> raw) { append_reduced(raw); }
  explicit GroupWord(std::initializer_list<Letter> raw)
      : GroupWord(std::span<const Letter>(raw.begin(), raw.size())) {}

  static GroupWord generator(int i, int sign = 1) { return GroupWord({Letter{i, sign}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  GroupWord operator*(const GroupWord& rhs) const;
  GroupWord inverse() const;
  GroupWord pow(long long n) const;
  GroupWord conjugate_by(const GroupWord& h) const; // h^-1 * this * h

  bool operator==(const GroupWord&) const = default;

  // Compact byte key for hashing/memoization; injective on reduced words.
  std::string key() const;

private:
  void append_reduced(std::span<const Letter> raw);

  std::vector<Letter> letters_;
};

// [u, v] = u^-1 v^-1 u v.
GroupWord commutator(const GroupWord& u, const GroupWord& v);

// Per-generator signed exponent sums and their total |w|_A.
struct ExponentVector {
  std::vector<long long> by_gen; // index i-1 holds |w|_{a_i}
  long long total = 0;

  bool is_zero() const {
    for (long long v : by_gen)
      if (v != 0) return false;
    return true;
  }
  bool operator==(const ExponentVector&) const = default;
};

ExponentVector exponent_vector(const GroupWord& w, int num_generators);

// Text format: whitespace-separated tokens `a<k>`, optionally followed by
// `'`, `^-1`, or `^<int>`; `e` denotes the empty word.
GroupWord parse_word(const std::string& text, const GroupConfig& cfg);
GroupWord parse_word(const std::string& text, int num_generators);
std::string format_word(const GroupWord& w);

// Vertices: digit string over 1..d when d <= 9, comma-separated otherwise.
// The empty string is the root.
using Vertex = std::vector<int>;
Vertex parse_vertex(const std::string& text, int d);
std::string format_vertex(const Vertex& v, int d);

} // namespace branchlab

#endif
