#pragma once

// Permutations (with the digraph reading used by the weight system) and
// chord diagrams as fixed-point-free involutions. Labels are 1-based.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace glw {

class Permutation {
public:
  using Label = std::uint8_t;
  static constexpr std::size_t max_size = 255;

  Permutation() = default;
  /// images[i-1] = sigma(i). Throws DomainError unless a bijection of {1..m}.
  explicit Permutation(std::vector<unsigned> images);
  static Permutation identity(std::size_t m);

  std::size_t size() const { return images_.size(); }
  bool empty() const { return images_.empty(); }
  /// sigma(i) for 1 <= i <= m.
  unsigned operator()(unsigned i) const { return images_[i - 1]; }
  unsigned inverse_at(unsigned i) const;
  std::vector<unsigned> images() const { return {images_.begin(), images_.end()}; }
  const std::vector<Label>& raw() const { return images_; }

  /// Cycles, each starting at its minimal element, ordered by that element.
  std::vector<std::vector<unsigned>> cycles() const;
  std::vector<unsigned> cycle_lengths() const;
  bool is_involution() const;
  bool has_fixed_point() const;
  /// The cycle 1 -> 2 -> ... -> m -> 1 (m >= 1).
  bool is_standard_cycle() const;

  /// t sigma t for the adjacent transposition t = (k k+1).
  Permutation conjugated_by_adjacent(unsigned k) const;
  /// r sigma r^-1 for the rotation r = (1 2 ... m).
  Permutation rotated() const;
  /// This permutation on {1..m} followed by other shifted onto {m+1..m+m'}.
  Permutation concatenate(const Permutation& other) const;

  auto operator<=>(const Permutation&) const = default;

  /// "[3,1,2]".
  std::string to_string() const;
  /// "(1 3 2)"; "()" for the identity.
  std::string to_cycle_string() const;

private:
  static Permutation unchecked(std::vector<Label> images);
  std::vector<Label> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// A chord diagram on 2n points: a perfect matching of {1..2n}, stored as
/// sorted pairs (a < b), pairs sorted by first endpoint.
class ChordDiagram {
public:
  using Chord = std::pair<unsigned, unsigned>;

  ChordDiagram() = default;
  /// Throws DomainError unless the pairs partition {1..2n}.
  explicit ChordDiagram(std::vector<Chord> pairs);
  /// Inverse of chord_to_perm; throws DomainError if p is not a
  /// fixed-point-free involution.
  static ChordDiagram from_involution(const Permutation& p);

  std::size_t chord_count() const { return pairs_.size(); }
  const std::vector<Chord>& chords() const { return pairs_; }

  auto operator<=>(const ChordDiagram&) const = default;

  /// "1-3,2-4"; empty diagram prints as "".
  std::string to_string() const;

private:
  std::vector<Chord> pairs_;
};

std::ostream& operator<<(std::ostream& os, const ChordDiagram& d);

/// Rotation-invariant identity of a permutation: length byte followed by the
/// lexicographically least image sequence among its m rotation-conjugates.
struct CanonicalKey {
  std::string bytes;
  auto operator<=>(const CanonicalKey&) const = default;
};

/// Throws DomainError on repeated or out-of-range elements.
Permutation perm_from_cycles(const std::vector<std::vector<unsigned>>& cycles, std::size_t m);
Permutation chord_to_perm(const ChordDiagram& d);
/// K_n: chords {i, n+i}, every pair crossing. n >= 1.
ChordDiagram make_kn(unsigned n);
CanonicalKey canonical_key(const Permutation& p);
/// Recovers the orbit representative stored in a key. Throws DomainError
/// if the bytes are not a valid canonical key.
Permutation permutation_from_key(const CanonicalKey& key);
/// Finest split into consecutive sigma-closed intervals, each relabeled to start at 1.
std::vector<Permutation> split_blocks(const Permutation& p);
/// Number of fixed points and the permutation with them removed.
std::pair<std::size_t, Permutation> strip_fixed_points(const Permutation& p);

/// Text forms: "(1 3 2)(4 5)" cycle notation (size from --size or the
/// largest element), "[3,1,2]" image notation.
Permutation parse_permutation(std::string_view text, std::size_t size = 0);
/// "1-3,2-4" chord list or "K5" shorthand.
ChordDiagram parse_chord_diagram(std::string_view text);

} // namespace glw
