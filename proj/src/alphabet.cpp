#include "ssg/alphabet.hpp"

#include <numeric>

#include "ssg/errors.hpp"

namespace ssg {

Alphabet::Alphabet(std::vector<std::string> symbols, bool allow_unary)
    : symbols_(std::move(symbols)) {
  if (symbols_.empty() || (symbols_.size() == 1 && !allow_unary)) {
    throw ValidationError("alphabet needs at least two letters");
  }
  for (uint32_t i = 0; i < symbols_.size(); ++i) {
    const std::string& s = symbols_[i];
    if (s.empty()) throw ValidationError("empty alphabet symbol");
    if (!index_.emplace(s, i).second) {
      throw ValidationError("duplicate alphabet symbol: " + s);
    }
    if (s.size() != 1) single_char_ = false;
  }
}

std::optional<uint32_t> Alphabet::index(const std::string& sym) const {
  auto it = index_.find(sym);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string Alphabet::format(const std::vector<uint32_t>& word) const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!single_char_ && i > 0) out += ' ';
    out += symbol(word[i]);
  }
  return out;
}

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation Permutation::from_images(std::vector<uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (uint32_t y : images) {
    if (y >= images.size() || seen[y]) {
      throw ValidationError("permutation images are not a bijection");
    }
    seen[y] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<uint32_t> inv(images_.size());
  for (uint32_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return from_images(std::move(inv));
}

uint64_t Permutation::order() const {
  uint64_t ord = 1;
  for (const auto& c : cycles()) ord = std::lcm<uint64_t>(ord, c.size());
  return ord;
}

std::vector<std::vector<uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<uint32_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (uint32_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<uint32_t> cyc;
    uint32_t x = i;
    while (!seen[x]) {
      seen[x] = true;
      cyc.push_back(x);
      x = images_[x];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace ssg
