#include "doorlab/set_core.hpp"

#include "doorlab/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace doorlab {

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1) throw DomainError("ground set must have at least one point");
  if (n > kMaxPoints) throw CapabilityError("n exceeds cap " + std::to_string(kMaxPoints));
}

SubsetMask SubsetMask::of(std::initializer_list<Point> points) {
  std::uint32_t bits = 0;
  for (Point p : points) bits |= 1u << p;
  return SubsetMask(bits);
}

std::vector<Point> SubsetMask::points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest));
  return out;
}

bool card_lex_less(SubsetMask a, SubsetMask b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto pa = a.points();
  auto pb = b.points();
  return pa < pb;
}

bool card_mask_less(SubsetMask a, SubsetMask b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

FamilyMask::FamilyMask(GroundSet g, std::uint64_t bits) : ground_(g), bits_(bits) {
  if (g.subset_count() < 64) bits_ &= (std::uint64_t{1} << g.subset_count()) - 1;
}

FamilyMask FamilyMask::from_members(GroundSet g, const std::vector<SubsetMask>& members) {
  FamilyMask f(g);
  for (auto s : members) f.insert(s);
  return f;
}

std::vector<SubsetMask> FamilyMask::members() const {
  std::vector<SubsetMask> out;
  out.reserve(size());
  for_each([&](SubsetMask s) { out.push_back(s); });
  return out;
}

std::vector<SubsetMask> FamilyMask::members_card_lex() const {
  auto out = members();
  std::sort(out.begin(), out.end(), card_lex_less);
  return out;
}

FamilyMask parse_family(GroundSet g, const std::vector<std::vector<Point>>& subsets) {
  FamilyMask f(g);
  for (const auto& pts : subsets) {
    std::uint32_t bits = 0;
    for (Point p : pts) {
      if (p < 0 || p >= g.size()) throw DomainError("point " + std::to_string(p) + " out of range");
      bits |= 1u << p;
    }
    f.insert(SubsetMask(bits));
  }
  return f;
}

SubsetMask compress_to(SubsetMask s, SubsetMask a) {
  std::uint32_t out = 0;
  int k = 0;
  for (Point p : a.points()) {
    if (s.contains(p)) out |= 1u << k;
    ++k;
  }
  return SubsetMask(out);
}

SubsetMask expand_from(SubsetMask s, SubsetMask a) {
  std::uint32_t out = 0;
  int k = 0;
  for (Point p : a.points()) {
    if (s.contains(k)) out |= 1u << p;
    ++k;
  }
  return SubsetMask(out);
}

FamilyMask restrict_family(const FamilyMask& family, SubsetMask a) {
  if (!a.subset_of(SubsetMask::full(family.ground())))
    throw DomainError("restriction set is not a subset of the ground set");
  GroundSet sub(a.size());
  FamilyMask out(sub);
  family.for_each([&](SubsetMask s) {
    if (s.subset_of(a)) out.insert(compress_to(s, a));
  });
  return out;
}

FamilyMask powerset(GroundSet g) {
  return FamilyMask(g, g.subset_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.subset_count()) - 1);
}

FamilyMask supersets_of(GroundSet g, SubsetMask core) {
  FamilyMask f(g);
  for (std::uint32_t s = 0; s < g.subset_count(); ++s)
    if (core.subset_of(SubsetMask(s))) f.insert(SubsetMask(s));
  return f;
}

FamilyMask subsets_of(GroundSet g, SubsetMask top) {
  FamilyMask f(g);
  for (std::uint32_t s = 0; s < g.subset_count(); ++s)
    if (SubsetMask(s).subset_of(top)) f.insert(SubsetMask(s));
  return f;
}

nlohmann::json to_json(SubsetMask s) { return s.points(); }

nlohmann::json to_json(const FamilyMask& f) {
  auto arr = nlohmann::json::array();
  for (auto s : f.members_card_lex()) arr.push_back(to_json(s));
  return arr;
}

FamilyMask family_from_json(GroundSet g, const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("family must be a JSON array of point arrays");
  std::vector<std::vector<Point>> subsets;
  for (const auto& s : j) {
    if (!s.is_array()) throw DomainError("subset must be a JSON array of points");
    std::vector<Point> pts;
    for (const auto& p : s) {
      if (!p.is_number_integer()) throw DomainError("point must be an integer");
      pts.push_back(p.get<Point>());
    }
    subsets.push_back(std::move(pts));
  }
  return parse_family(g, subsets);
}

namespace {
int hex_digits(GroundSet g) { return static_cast<int>(std::max<std::uint32_t>(1, g.subset_count() / 4)); }
} // namespace

std::string to_hex(const FamilyMask& f) {
  static constexpr char kDigits[] = "0123456789abcdef";
  int width = hex_digits(f.ground());
  std::string out(width, '0');
  std::uint64_t bits = f.bits();
  for (int k = width - 1; k >= 0; --k) {
    out[k] = kDigits[bits & 0xf];
    bits >>= 4;
  }
  return out;
}

FamilyMask family_from_hex(GroundSet g, std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty() || static_cast<int>(hex.size()) > hex_digits(g))
    throw DomainError("hex family must have 1.." + std::to_string(hex_digits(g)) + " digits for n=" +
                      std::to_string(g.size()));
  std::uint64_t bits = 0;
  auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), bits, 16);
  if (ec != std::errc{} || ptr != hex.data() + hex.size()) throw DomainError("malformed hex family");
  FamilyMask f(g, bits);
  if (f.bits() != bits) throw DomainError("hex family has bits beyond 2^n");
  return f;
}

std::string to_string(SubsetMask s) {
  std::string out = "{";
  bool first = true;
  for (Point p : s.points()) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

} // namespace doorlab
