#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace doorlab {

using Point = int;

// Largest supported ground set: a family of subsets of X is a 2^n-bit
// bitset and must fit into one 64-bit word.
inline constexpr int kMaxPoints = 6;

// X = {0, ..., n-1}.
class GroundSet {
public:
  explicit GroundSet(int n);

  int size() const { return n_; }
  std::uint32_t subset_count() const { return 1u << n_; }
  std::uint32_t full_bits() const { return subset_count() - 1; }

  friend bool operator==(GroundSet, GroundSet) = default;

private:
  int n_;
};

// One subset of the ground set; bit i set iff point i is a member.
class SubsetMask {
public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  static constexpr SubsetMask empty() { return SubsetMask(0); }
  static SubsetMask full(GroundSet g) { return SubsetMask(g.full_bits()); }
  static constexpr SubsetMask singleton(Point p) { return SubsetMask(1u << p); }
  static SubsetMask of(std::initializer_list<Point> points);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr bool contains(Point p) const { return (bits_ >> p) & 1u; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(SubsetMask other) const { return (bits_ & other.bits_) == 0; }
  SubsetMask complement(GroundSet g) const { return SubsetMask(~bits_ & g.full_bits()); }
  // Sorted point list.
  std::vector<Point> points() const;

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ | b.bits_); }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & b.bits_); }
  // Set difference a \ b.
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;
  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;

private:
  std::uint32_t bits_ = 0;
};

// Order used for serialization and witness selection: cardinality first,
// then lexicographic on the sorted point list.
bool card_lex_less(SubsetMask a, SubsetMask b);

// Order used for deterministic witnesses: cardinality first, then mask value.
bool card_mask_less(SubsetMask a, SubsetMask b);

// A family of subsets of X, stored as a 2^n-bit member bitset.
class FamilyMask {
public:
  explicit FamilyMask(GroundSet g, std::uint64_t bits = 0);

  static FamilyMask from_members(GroundSet g, const std::vector<SubsetMask>& members);

  GroundSet ground() const { return ground_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(SubsetMask s) const { return (bits_ >> s.bits()) & 1u; }
  void insert(SubsetMask s) { bits_ |= std::uint64_t{1} << s.bits(); }
  void erase(SubsetMask s) { bits_ &= ~(std::uint64_t{1} << s.bits()); }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool subset_of(const FamilyMask& other) const { return (bits_ & ~other.bits_) == 0; }

  // Members in ascending mask order.
  std::vector<SubsetMask> members() const;
  // Members in (cardinality, lexicographic) order.
  std::vector<SubsetMask> members_card_lex() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
      fn(SubsetMask(static_cast<std::uint32_t>(std::countr_zero(rest))));
  }

  friend FamilyMask operator|(FamilyMask a, const FamilyMask& b) {
    a.bits_ |= b.bits_;
    return a;
  }
  friend FamilyMask operator&(FamilyMask a, const FamilyMask& b) {
    a.bits_ &= b.bits_;
    return a;
  }
  friend bool operator==(const FamilyMask&, const FamilyMask&) = default;
  friend auto operator<=>(const FamilyMask& a, const FamilyMask& b) {
    if (auto c = a.ground_.size() <=> b.ground_.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

private:
  GroundSet ground_;
  std::uint64_t bits_;
};

// Builds a family from point lists; duplicates collapse. Throws DomainError
// naming the first point index that is out of range.
FamilyMask parse_family(GroundSet g, const std::vector<std::vector<Point>>& subsets);

// {F in family : F subset of A}, re-indexed onto A with the points of A
// renumbered 0..|A|-1 in increasing order. A must be nonempty.
FamilyMask restrict_family(const FamilyMask& family, SubsetMask a);

// Maps a subset of A (global indices) to its re-indexed mask on A, and back.
SubsetMask compress_to(SubsetMask s, SubsetMask a);
SubsetMask expand_from(SubsetMask s, SubsetMask a);

FamilyMask powerset(GroundSet g);

// All supersets of `core` within P(X).
FamilyMask supersets_of(GroundSet g, SubsetMask core);
// All subsets of `top`.
FamilyMask subsets_of(GroundSet g, SubsetMask top);

// JSON: a subset is a sorted point array; a family is an array of subsets in
// (cardinality, lexicographic) order.
nlohmann::json to_json(SubsetMask s);
nlohmann::json to_json(const FamilyMask& f);
FamilyMask family_from_json(GroundSet g, const nlohmann::json& j);

// Compact form: lowercase hex of the 2^n-bit member bitset, zero padded to
// ceil(2^n / 4) digits.
std::string to_hex(const FamilyMask& f);
FamilyMask family_from_hex(GroundSet g, std::string_view hex);

std::string to_string(SubsetMask s);

} // namespace doorlab
