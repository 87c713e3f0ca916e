#pragma once

// Frames of discernment, propositions, mass functions and ordinal evidences.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ordfuse {

inline constexpr std::size_t kMaxFrameSize = 64;

/// Absolute tolerance on the unit-sum constraint of a mass function.
inline constexpr double kMassSumTolerance = 1e-9;

/// A subset of a frame, stored as a bitmask over element indices.
///
/// Ordering is by cardinality first and then by mask, so singletons come
/// before composites and {a} < {b} < {a,b} for a frame (a, b).
class Proposition {
 public:
  constexpr Proposition() = default;

  static constexpr Proposition from_bits(std::uint64_t bits) {
    Proposition p;
    p.bits_ = bits;
    return p;
  }
  static constexpr Proposition singleton(std::size_t index) {
    return from_bits(std::uint64_t{1} << index);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t cardinality() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_singleton() const { return cardinality() == 1; }
  constexpr bool is_composite() const { return cardinality() > 1; }

  /// True when `other` is a subset of this proposition.
  constexpr bool contains(Proposition other) const {
    return (other.bits_ & ~bits_) == 0;
  }
  constexpr bool disjoint(Proposition other) const {
    return (bits_ & other.bits_) == 0;
  }

  friend constexpr Proposition operator&(Proposition a, Proposition b) {
    return from_bits(a.bits_ & b.bits_);
  }
  friend constexpr Proposition operator|(Proposition a, Proposition b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr bool operator==(Proposition, Proposition) = default;
  friend constexpr std::strong_ordering operator<=>(Proposition a,
                                                    Proposition b) {
    if (auto c = a.cardinality() <=> b.cardinality(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Ordered list of distinct element labels.
class Frame {
 public:
  /// Throws InputError when empty, oversized or when labels repeat.
  explicit Frame(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t index) const { return labels_.at(index); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Mask with every element of the frame set.
  Proposition universe() const;
  bool covers(Proposition p) const { return universe().contains(p); }

  /// Builds a proposition from element labels; throws InputError on an
  /// unknown label or an empty list.
  Proposition proposition(std::span<const std::string> members) const;
  Proposition proposition(std::initializer_list<std::string_view> members) const;

  std::vector<std::string> members(Proposition p) const;
  /// "{a}" or "{a,b}", members listed in frame order.
  std::string format(Proposition p) const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Finite mapping proposition -> mass. Construction does not validate;
/// use validate_bpa or MassFunction::checked.
class MassFunction {
 public:
  using Map = std::map<Proposition, double>;

  MassFunction(Frame frame, Map masses)
      : frame_(std::move(frame)), masses_(std::move(masses)) {}

  /// Throws InputError listing every violated constraint.
  static MassFunction checked(Frame frame, Map masses);

  /// Convenience for literals: {{{"a"}, 0.6}, {{"a", "b"}, 0.4}}.
  static MassFunction from_labels(
      const Frame& frame,
      std::initializer_list<
          std::pair<std::initializer_list<std::string_view>, double>>
          entries);

  const Frame& frame() const { return frame_; }
  const Map& masses() const { return masses_; }
  Map::const_iterator begin() const { return masses_.begin(); }
  Map::const_iterator end() const { return masses_.end(); }
  std::size_t size() const { return masses_.size(); }

  /// Zero for propositions without an entry.
  double mass(Proposition p) const;
  double total() const;

  /// Entries with strictly positive mass, in proposition order.
  std::vector<std::pair<Proposition, double>> focal_elements() const;
  std::size_t focal_count() const;

 private:
  Frame frame_;
  Map masses_;
};

struct BpaReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

/// Checks: no empty-set entry, members within the frame, masses finite and
/// in [0, 1], total within kMassSumTolerance of 1.
BpaReport validate_bpa(const MassFunction& m, double tolerance = kMassSumTolerance);

struct OrdinalEntry {
  Proposition proposition;
  double mass = 0.0;

  friend bool operator==(const OrdinalEntry&, const OrdinalEntry&) = default;
};

/// Position-ordered (proposition, mass) pairs. The entry at position i
/// (0-based) has order i + 1.
class OrdinalEvidence {
 public:
  OrdinalEvidence(Frame frame, std::vector<OrdinalEntry> entries)
      : frame_(std::move(frame)), entries_(std::move(entries)) {}

  const Frame& frame() const { return frame_; }
  std::span<const OrdinalEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const OrdinalEntry& at(std::size_t position) const { return entries_.at(position); }

  static constexpr std::size_t order_of(std::size_t position) { return position + 1; }
  std::optional<std::size_t> position_of(Proposition p) const;

  friend bool operator==(const OrdinalEvidence&, const OrdinalEvidence&) = default;

 private:
  Frame frame_;
  std::vector<OrdinalEntry> entries_;
};

/// Drops the ordering. Throws InputError on a duplicated proposition.
MassFunction bpa_from_ordinal(const OrdinalEvidence& e);

/// A frame plus one or more ordinal evidences over the same proposition set.
class EvidenceSet {
 public:
  /// Throws InputError when the set is empty, an evidence is invalid, or
  /// the evidences disagree on their proposition sets.
  EvidenceSet(Frame frame, std::vector<OrdinalEvidence> evidences);

  const Frame& frame() const { return frame_; }
  std::span<const OrdinalEvidence> evidences() const { return evidences_; }
  std::size_t size() const { return evidences_.size(); }

  /// The shared proposition set in canonical order.
  const std::vector<Proposition>& propositions() const { return propositions_; }

  std::vector<MassFunction> bpas() const;

  friend bool operator==(const EvidenceSet&, const EvidenceSet&) = default;

 private:
  Frame frame_;
  std::vector<OrdinalEvidence> evidences_;
  std::vector<Proposition> propositions_;
};

}  // namespace ordfuse
