#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace schwa {

enum class PhoneCategory : std::uint8_t { consonant, vowel, modifier };

enum class TokenOrigin : std::uint8_t {
  inherent_schwa,  // the vowel implied by a bare consonant letter
  explicit_vowel,  // written vowel sign or independent vowel letter
  consonant,
  modifier,
};

// One orthographic or phonemic unit. `weak` marks a weakened schwa on the
// phonemic side (written `a_w` in token files); it is never set on any
// symbol other than `a`.
struct PhoneToken {
  std::string symbol;
  PhoneCategory category = PhoneCategory::consonant;
  TokenOrigin origin = TokenOrigin::consonant;
  bool weak = false;

  bool operator==(const PhoneToken&) const = default;
};

PhoneToken make_consonant(std::string_view symbol);
PhoneToken make_vowel(std::string_view symbol,
                      TokenOrigin origin = TokenOrigin::explicit_vowel,
                      bool weak = false);
PhoneToken make_modifier(std::string_view symbol);
PhoneToken inherent_schwa();

// Feature value for window positions beyond either word edge, and the
// unknown-symbol bucket at inference time.
inline constexpr std::string_view kBoundarySymbol = "#";

// The closed ASCII phone inventory shared by both scripts. Long vowels
// double the vowel letter (aa, ii, uu); retroflex consonants double the
// consonant letter (tt, dd, rr, ...). `~` is candrabindu, `M` anusvara /
// tippi / bindi, `H` visarga. See docs/phone_inventory.md for the full
// table and both codepoint maps.
class PhoneInventory {
 public:
  static const PhoneInventory& instance();

  std::optional<PhoneCategory> category_of(std::string_view symbol) const;
  bool contains(std::string_view symbol) const {
    return category_of(symbol).has_value();
  }
  std::span<const std::pair<std::string, PhoneCategory>> entries() const;

  PhoneInventory(const PhoneInventory&) = delete;
  PhoneInventory& operator=(const PhoneInventory&) = delete;

 private:
  PhoneInventory();
  struct Impl;
  const Impl* impl_;
};

// Category metaclass used by the rule baseline: vowels and candrabindu
// pattern as 'V', consonants together with anusvara and visarga as 'C'.
// The symbol must belong to the inventory.
char rule_category(std::string_view symbol);

}  // namespace schwa
