#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypwalk {

/// A reduced word in a free group of rank <= 26.
///
/// Letters are nonzero signed bytes: +g is the g-th generator, -g its
/// inverse (g in 1..26). The letter sequence is always freely reduced; the
/// identity is the empty word. Text form: 'a'..'z' for generators,
/// 'A'..'Z' for inverses, "1" for the identity.
class FreeWord {
 public:
  using Letter = std::int8_t;
  static constexpr int kMaxRank = 26;

  FreeWord() = default;

  /// Freely reduces an arbitrary letter sequence.
  static FreeWord reduce(std::span<const Letter> letters);

  /// Parses "abA", "1" or "e". Letters beyond `rank` are rejected.
  static FreeWord parse(std::string_view text, int rank = kMaxRank);

  /// Single-letter word.
  static FreeWord generator(int index, int sign = +1);

  std::string str() const;

  int length() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& rhs) const;

  /// In-place right multiplication; amortized O(|rhs|) along a walk.
  FreeWord& operator*=(const FreeWord& rhs);

  /// Length of the longest common prefix with `other`.
  int common_prefix_length(const FreeWord& other) const;

  /// Word-metric distance |this^-1 * other|, computed without allocating.
  int distance(const FreeWord& other) const;

  /// Largest generator index used; 0 for the identity.
  int min_rank() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  std::strong_ordering operator<=>(const FreeWord& rhs) const;

 private:
  std::vector<Letter> letters_;
};

}  // namespace hypwalk
