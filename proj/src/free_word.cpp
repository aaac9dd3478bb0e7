#include "hypwalk/free_word.hpp"

#include <algorithm>

#include "hypwalk/errors.hpp"

namespace hypwalk {

FreeWord FreeWord::reduce(std::span<const Letter> letters) {
  FreeWord w;
  w.letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l == 0 || l > kMaxRank || l < -kMaxRank)
      throw UsageError("letter out of range in free word");
    if (!w.letters_.empty() && w.letters_.back() == static_cast<Letter>(-l))
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

FreeWord FreeWord::parse(std::string_view text, int rank) {
  if (rank < 1 || rank > kMaxRank) throw UsageError("rank must be in 1..26");
  if (text == "1" || text == "e" || text.empty()) return FreeWord{};
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    int idx;
    int sign;
    if (c >= 'a' && c <= 'z') {
      idx = c - 'a' + 1;
      sign = +1;
    } else if (c >= 'A' && c <= 'Z') {
      idx = c - 'A' + 1;
      sign = -1;
    } else {
      throw UsageError(std::string("invalid character '") + c + "' in word");
    }
    if (idx > rank)
      throw UsageError(std::string("generator '") + c + "' exceeds rank " +
                       std::to_string(rank));
    letters.push_back(static_cast<Letter>(sign * idx));
  }
  return reduce(letters);
}

FreeWord FreeWord::generator(int index, int sign) {
  if (index < 1 || index > kMaxRank) throw UsageError("generator index out of range");
  if (sign != 1 && sign != -1) throw UsageError("generator sign must be +1 or -1");
  FreeWord w;
  w.letters_.push_back(static_cast<Letter>(sign * index));
  return w;
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_)
    out.push_back(l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1));
  return out;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.resize(letters_.size());
  std::transform(letters_.rbegin(), letters_.rend(), w.letters_.begin(),
                 [](Letter l) { return static_cast<Letter>(-l); });
  return w;
}

FreeWord& FreeWord::operator*=(const FreeWord& rhs) {
  for (Letter l : rhs.letters_) {
    if (!letters_.empty() && letters_.back() == static_cast<Letter>(-l))
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
  return *this;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  FreeWord out = *this;
  out.letters_.reserve(letters_.size() + rhs.letters_.size());
  out *= rhs;
  return out;
}

int FreeWord::common_prefix_length(const FreeWord& other) const {
  const std::size_t m = std::min(letters_.size(), other.letters_.size());
  std::size_t i = 0;
  while (i < m && letters_[i] == other.letters_[i]) ++i;
  return static_cast<int>(i);
}

int FreeWord::distance(const FreeWord& other) const {
  // |this^-1 other| = |this| + |other| - 2 * common prefix.
  return length() + other.length() - 2 * common_prefix_length(other);
}

int FreeWord::min_rank() const {
  int r = 0;
  for (Letter l : letters_) r = std::max(r, l > 0 ? +l : -l);
  return r;
}

std::strong_ordering FreeWord::operator<=>(const FreeWord& rhs) const {
  // Short-lex: compare by length first so enumeration order is natural.
  if (auto c = letters_.size() <=> rhs.letters_.size(); c != 0) return c;
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (auto c = letters_[i] <=> rhs.letters_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace hypwalk
