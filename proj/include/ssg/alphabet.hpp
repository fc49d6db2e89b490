#ifndef SSG_ALPHABET_HPP
#define SSG_ALPHABET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ssg {

// Ordered list of distinct letter symbols. Letters are handled as indices
// 0..d-1 everywhere; symbols only appear at parse/print boundaries.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols, bool allow_unary = false);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(uint32_t i) const { return symbols_.at(i); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::optional<uint32_t> index(const std::string& sym) const;
  bool single_char() const { return single_char_; }

  // Formats a level word (sequence of letter indices). Single-character
  // alphabets concatenate; otherwise symbols are space-separated.
  std::string format(const std::vector<uint32_t>& word) const;

  bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, uint32_t> index_;
  bool single_char_ = true;
};

// A bijection on {0..d-1}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  static Permutation from_images(std::vector<uint32_t> images);

  uint32_t operator()(uint32_t x) const { return images_.at(x); }
  std::size_t degree() const { return images_.size(); }
  bool is_identity() const;
  Permutation inverse() const;
  uint64_t order() const;

  // Nontrivial cycles, each rotated to start at its smallest point and
  // sorted by that point. Canonical for serialization.
  std::vector<std::vector<uint32_t>> cycles() const;

  const std::vector<uint32_t>& images() const { return images_; }
  bool operator==(const Permutation& o) const { return images_ == o.images_; }

 private:
  std::vector<uint32_t> images_;
};

}  // namespace ssg

#endif
