#ifndef SSG_WORD_HPP
#define SSG_WORD_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ssg {

// A freely reduced word over abstract generators. Each syllable is a signed
// generator occurrence: +(i+1) for generator i, -(i+1) for its inverse.
// Constructors and operators maintain free reduction, so there is never an
// adjacent cancelling pair.
class GroupWord {
 public:
  GroupWord() = default;

  static GroupWord generator(uint32_t index, int sign = +1);
  static GroupWord from_syllables(const std::vector<int32_t>& syllables);

  bool empty() const { return syl_.empty(); }
  std::size_t size() const { return syl_.size(); }
  const std::vector<int32_t>& syllables() const { return syl_; }

  uint32_t generator_at(std::size_t i) const;
  int sign_at(std::size_t i) const { return syl_.at(i) > 0 ? +1 : -1; }

  GroupWord inverse() const;
  GroupWord operator*(const GroupWord& rhs) const;
  GroupWord pow(int64_t k) const;

  // Append one syllable with cancellation.
  void push(int32_t syllable);

  // Compact byte encoding; used as a hash/map key, not for display.
  std::string encode() const;

  bool operator==(const GroupWord& o) const { return syl_ == o.syl_; }
  std::strong_ordering operator<=>(const GroupWord& o) const;

 private:
  std::vector<int32_t> syl_;
};

// Shortest-then-encoding order used wherever a canonical representative has
// to be picked among equal words.
bool shortlex_less(const GroupWord& a, const GroupWord& b);

}  // namespace ssg

#endif
