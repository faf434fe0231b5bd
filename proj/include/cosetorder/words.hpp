#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cosetorder {

struct word_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : word_error {
  parse_error(const std::string& msg, std::size_t offset)
      : word_error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

/// Ordered, duplicate-free set of generator symbols. The sequence order is
/// the canonical generator order used for deterministic tie-breaking.
class Alphabet {
 public:
  static std::shared_ptr<const Alphabet> make(std::vector<std::string> ids);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::string& id(int gen) const { return ids_.at(gen); }
  /// Returns -1 when the id is unknown.
  int index(std::string_view id) const;

  bool operator==(const Alphabet& other) const { return ids_ == other.ids_; }

 private:
  explicit Alphabet(std::vector<std::string> ids);
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// A generator or its inverse: exp is exactly -1 or +1.
struct Letter {
  int gen;
  int exp;
  bool operator==(const Letter&) const = default;
  Letter inverse() const { return {gen, -exp}; }
};

/// Freely reduced word over a generator alphabet. Immutable; the empty
/// word is the identity.
class ReducedWord {
 public:
  /// Placeholder empty word with no alphabet; assign before use.
  ReducedWord() = default;

  static ReducedWord identity(AlphabetPtr alphabet);
  /// Freely reduces an arbitrary letter sequence.
  static ReducedWord reduce(AlphabetPtr alphabet, std::span<const Letter> raw);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const ReducedWord& other) const;

 private:
  ReducedWord(AlphabetPtr alphabet, std::vector<Letter> letters)
      : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {}

  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;

  friend ReducedWord multiply(const ReducedWord&, const ReducedWord&);
  friend ReducedWord inverse(const ReducedWord&);
};

/// Throws word_error unless u and v share an alphabet.
void require_same_alphabet(const ReducedWord& u, const ReducedWord& v);

ReducedWord multiply(const ReducedWord& u, const ReducedWord& v);
ReducedWord inverse(const ReducedWord& u);
ReducedWord commutator(const ReducedWord& x, const ReducedWord& y);
ReducedWord power(const ReducedWord& u, long long k);

/// u = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicReduction {
  ReducedWord core;
  ReducedWord conjugator;
};
CyclicReduction cyclic_reduce(const ReducedWord& u);

/// Maximal root: u = root^k with k as large as possible. u must be nonempty.
struct RootPower {
  ReducedWord root;
  int exponent;
};
RootPower root(const ReducedWord& u);

/// True iff u generates a maximal cyclic subgroup, i.e. u is nonempty and
/// not a proper power.
bool is_maximal_cyclic_generator(const ReducedWord& u);

/// Word grammar: whitespace-separated tokens, token = generator-id
/// optionally followed by "^" and a signed decimal exponent; "1" alone is
/// the empty word. Unreduced input is reduced, never rejected.
ReducedWord parse_word(std::string_view text, AlphabetPtr alphabet);
std::string format_word(const ReducedWord& u);

/// Applies the homomorphism sending generator i to images[i].
ReducedWord substitute(const ReducedWord& u,
                       const std::vector<ReducedWord>& images);

}  // namespace cosetorder
