#include "schwa/phones.hpp"

#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace schwa {
namespace {

constexpr std::pair<const char*, PhoneCategory> kInventory[] = {
    // vowels
    {"a", PhoneCategory::vowel},    {"aa", PhoneCategory::vowel},
    {"i", PhoneCategory::vowel},    {"ii", PhoneCategory::vowel},
    {"u", PhoneCategory::vowel},    {"uu", PhoneCategory::vowel},
    {"ri", PhoneCategory::vowel},   {"e", PhoneCategory::vowel},
    {"ai", PhoneCategory::vowel},   {"o", PhoneCategory::vowel},
    {"au", PhoneCategory::vowel},   {"ae", PhoneCategory::vowel},
    {"aw", PhoneCategory::vowel},
    // velar / palatal / retroflex / dental / labial stops and nasals
    {"k", PhoneCategory::consonant},   {"kh", PhoneCategory::consonant},
    {"g", PhoneCategory::consonant},   {"gh", PhoneCategory::consonant},
    {"ng", PhoneCategory::consonant},  {"c", PhoneCategory::consonant},
    {"ch", PhoneCategory::consonant},  {"j", PhoneCategory::consonant},
    {"jh", PhoneCategory::consonant},  {"ny", PhoneCategory::consonant},
    {"tt", PhoneCategory::consonant},  {"tth", PhoneCategory::consonant},
    {"dd", PhoneCategory::consonant},  {"ddh", PhoneCategory::consonant},
    {"nn", PhoneCategory::consonant},  {"t", PhoneCategory::consonant},
    {"th", PhoneCategory::consonant},  {"d", PhoneCategory::consonant},
    {"dh", PhoneCategory::consonant},  {"n", PhoneCategory::consonant},
    {"p", PhoneCategory::consonant},   {"ph", PhoneCategory::consonant},
    {"b", PhoneCategory::consonant},   {"bh", PhoneCategory::consonant},
    {"m", PhoneCategory::consonant},
    // sonorants and sibilants
    {"y", PhoneCategory::consonant},   {"r", PhoneCategory::consonant},
    {"l", PhoneCategory::consonant},   {"ll", PhoneCategory::consonant},
    {"v", PhoneCategory::consonant},   {"sh", PhoneCategory::consonant},
    {"ss", PhoneCategory::consonant},  {"s", PhoneCategory::consonant},
    {"h", PhoneCategory::consonant},
    // nukta consonants (Perso-Arabic sounds, retroflex flaps)
    {"q", PhoneCategory::consonant},   {"x", PhoneCategory::consonant},
    {"G", PhoneCategory::consonant},   {"z", PhoneCategory::consonant},
    {"f", PhoneCategory::consonant},   {"rr", PhoneCategory::consonant},
    {"rrh", PhoneCategory::consonant},
    // nasalization and breath marks
    {"~", PhoneCategory::modifier},    {"M", PhoneCategory::modifier},
    {"H", PhoneCategory::modifier},
};

}  // namespace

struct PhoneInventory::Impl {
  std::vector<std::pair<std::string, PhoneCategory>> entries;
  std::unordered_map<std::string_view, PhoneCategory> index;
};

PhoneInventory::PhoneInventory() {
  auto* impl = new Impl;
  impl->entries.reserve(std::size(kInventory));
  for (const auto& [symbol, category] : kInventory) {
    impl->entries.emplace_back(symbol, category);
  }
  for (const auto& [symbol, category] : impl->entries) {
    impl->index.emplace(symbol, category);
  }
  impl_ = impl;
}

const PhoneInventory& PhoneInventory::instance() {
  static PhoneInventory inventory;
  return inventory;
}

std::optional<PhoneCategory> PhoneInventory::category_of(
    std::string_view symbol) const {
  auto it = impl_->index.find(symbol);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::span<const std::pair<std::string, PhoneCategory>>
PhoneInventory::entries() const {
  return impl_->entries;
}

PhoneToken make_consonant(std::string_view symbol) {
  return {std::string(symbol), PhoneCategory::consonant,
          TokenOrigin::consonant, false};
}

PhoneToken make_vowel(std::string_view symbol, TokenOrigin origin,
                      bool weak) {
  return {std::string(symbol), PhoneCategory::vowel, origin, weak};
}

PhoneToken make_modifier(std::string_view symbol) {
  return {std::string(symbol), PhoneCategory::modifier, TokenOrigin::modifier,
          false};
}

PhoneToken inherent_schwa() {
  return {"a", PhoneCategory::vowel, TokenOrigin::inherent_schwa, false};
}

char rule_category(std::string_view symbol) {
  auto category = PhoneInventory::instance().category_of(symbol);
  if (!category) {
    throw std::invalid_argument("symbol not in phone inventory: " +
                                std::string(symbol));
  }
  switch (*category) {
    case PhoneCategory::vowel:
      return 'V';
    case PhoneCategory::consonant:
      return 'C';
    case PhoneCategory::modifier:
      // Candrabindu nasalizes the vowel it sits on; anusvara and visarga
      // occupy a consonant slot.
      return symbol == "~" ? 'V' : 'C';
  }
  return 'C';
}

}  // namespace schwa
