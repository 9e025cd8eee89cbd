#include "schwa/script.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "schwa/errors.hpp"

namespace schwa {
namespace {

// ---------------------------------------------------------------------
// UTF-8
// ---------------------------------------------------------------------

std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      throw DecodeError("invalid UTF-8 byte", out.size(), b0);
    }
    if (i + len > s.size()) {
      throw DecodeError("truncated UTF-8 sequence", out.size(), b0);
    }
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) {
        throw DecodeError("invalid UTF-8 continuation", out.size(), b0);
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

// ---------------------------------------------------------------------
// Codepoint maps
// ---------------------------------------------------------------------

enum class CpClass : std::uint8_t {
  consonant,
  vowel_sign,
  independent_vowel,
  virama,
  nukta,
  modifier,
  geminate,   // Gurmukhi addak
  separator,  // space / permitted punctuation: closes the current unit
  ignore,     // ZWJ, ZWNJ, avagraha: no effect on decoding
};

struct CpEntry {
  CpClass cls;
  const char* token;  // nullptr for classes that emit nothing
};

struct ScriptMap {
  std::unordered_map<char32_t, CpEntry> codepoints;
  // consonant token -> token of its nukta form
  std::unordered_map<std::string_view, const char*> nukta_forms;
};

void add_common(ScriptMap& m) {
  for (char32_t cp : {U' ', U'.', U',', U';', U':', U'!', U'?', U'(', U')',
                      U'\'', U'"', U'-'}) {
    m.codepoints[cp] = {CpClass::separator, nullptr};
  }
  m.codepoints[0x0964] = {CpClass::separator, nullptr};  // danda
  m.codepoints[0x0965] = {CpClass::separator, nullptr};  // double danda
  m.codepoints[0x200C] = {CpClass::ignore, nullptr};     // ZWNJ
  m.codepoints[0x200D] = {CpClass::ignore, nullptr};     // ZWJ
}

const ScriptMap& devanagari_map() {
  static const ScriptMap map = [] {
    ScriptMap m;
    auto& c = m.codepoints;
    // signs
    c[0x0901] = {CpClass::modifier, "~"};   // candrabindu
    c[0x0902] = {CpClass::modifier, "M"};   // anusvara
    c[0x0903] = {CpClass::modifier, "H"};   // visarga
    c[0x093C] = {CpClass::nukta, nullptr};
    c[0x093D] = {CpClass::ignore, nullptr};  // avagraha
    c[0x094D] = {CpClass::virama, nullptr};
    // independent vowels
    c[0x0905] = {CpClass::independent_vowel, "a"};
    c[0x0906] = {CpClass::independent_vowel, "aa"};
    c[0x0907] = {CpClass::independent_vowel, "i"};
    c[0x0908] = {CpClass::independent_vowel, "ii"};
    c[0x0909] = {CpClass::independent_vowel, "u"};
    c[0x090A] = {CpClass::independent_vowel, "uu"};
    c[0x090B] = {CpClass::independent_vowel, "ri"};
    c[0x090D] = {CpClass::independent_vowel, "ae"};
    c[0x090F] = {CpClass::independent_vowel, "e"};
    c[0x0910] = {CpClass::independent_vowel, "ai"};
    c[0x0911] = {CpClass::independent_vowel, "aw"};
    c[0x0913] = {CpClass::independent_vowel, "o"};
    c[0x0914] = {CpClass::independent_vowel, "au"};
    c[0x0960] = {CpClass::independent_vowel, "ri"};  // vocalic RR
    c[0x0972] = {CpClass::independent_vowel, "ae"};  // candra A
    // consonants
    c[0x0915] = {CpClass::consonant, "k"};
    c[0x0916] = {CpClass::consonant, "kh"};
    c[0x0917] = {CpClass::consonant, "g"};
    c[0x0918] = {CpClass::consonant, "gh"};
    c[0x0919] = {CpClass::consonant, "ng"};
    c[0x091A] = {CpClass::consonant, "c"};
    c[0x091B] = {CpClass::consonant, "ch"};
    c[0x091C] = {CpClass::consonant, "j"};
    c[0x091D] = {CpClass::consonant, "jh"};
    c[0x091E] = {CpClass::consonant, "ny"};
    c[0x091F] = {CpClass::consonant, "tt"};
    c[0x0920] = {CpClass::consonant, "tth"};
    c[0x0921] = {CpClass::consonant, "dd"};
    c[0x0922] = {CpClass::consonant, "ddh"};
    c[0x0923] = {CpClass::consonant, "nn"};
    c[0x0924] = {CpClass::consonant, "t"};
    c[0x0925] = {CpClass::consonant, "th"};
    c[0x0926] = {CpClass::consonant, "d"};
    c[0x0927] = {CpClass::consonant, "dh"};
    c[0x0928] = {CpClass::consonant, "n"};
    c[0x0929] = {CpClass::consonant, "n"};   // nnna
    c[0x092A] = {CpClass::consonant, "p"};
    c[0x092B] = {CpClass::consonant, "ph"};
    c[0x092C] = {CpClass::consonant, "b"};
    c[0x092D] = {CpClass::consonant, "bh"};
    c[0x092E] = {CpClass::consonant, "m"};
    c[0x092F] = {CpClass::consonant, "y"};
    c[0x0930] = {CpClass::consonant, "r"};
    c[0x0931] = {CpClass::consonant, "r"};   // rra
    c[0x0932] = {CpClass::consonant, "l"};
    c[0x0933] = {CpClass::consonant, "ll"};
    c[0x0934] = {CpClass::consonant, "ll"};  // llla
    c[0x0935] = {CpClass::consonant, "v"};
    c[0x0936] = {CpClass::consonant, "sh"};
    c[0x0937] = {CpClass::consonant, "ss"};
    c[0x0938] = {CpClass::consonant, "s"};
    c[0x0939] = {CpClass::consonant, "h"};
    // precomposed nukta consonants
    c[0x0958] = {CpClass::consonant, "q"};
    c[0x0959] = {CpClass::consonant, "x"};
    c[0x095A] = {CpClass::consonant, "G"};
    c[0x095B] = {CpClass::consonant, "z"};
    c[0x095C] = {CpClass::consonant, "rr"};
    c[0x095D] = {CpClass::consonant, "rrh"};
    c[0x095E] = {CpClass::consonant, "f"};
    c[0x095F] = {CpClass::consonant, "y"};
    // vowel signs
    c[0x093E] = {CpClass::vowel_sign, "aa"};
    c[0x093F] = {CpClass::vowel_sign, "i"};
    c[0x0940] = {CpClass::vowel_sign, "ii"};
    c[0x0941] = {CpClass::vowel_sign, "u"};
    c[0x0942] = {CpClass::vowel_sign, "uu"};
    c[0x0943] = {CpClass::vowel_sign, "ri"};
    c[0x0944] = {CpClass::vowel_sign, "ri"};  // vocalic RR sign
    c[0x0945] = {CpClass::vowel_sign, "ae"};  // candra E sign
    c[0x0947] = {CpClass::vowel_sign, "e"};
    c[0x0948] = {CpClass::vowel_sign, "ai"};
    c[0x0949] = {CpClass::vowel_sign, "aw"};  // candra O sign
    c[0x094B] = {CpClass::vowel_sign, "o"};
    c[0x094C] = {CpClass::vowel_sign, "au"};
    add_common(m);
    m.nukta_forms = {{"k", "q"},   {"kh", "x"},  {"g", "G"},  {"j", "z"},
                     {"dd", "rr"}, {"ddh", "rrh"}, {"ph", "f"}, {"y", "y"},
                     {"n", "n"},   {"r", "r"},   {"ll", "ll"}};
    return m;
  }();
  return map;
}

const ScriptMap& gurmukhi_map() {
  static const ScriptMap map = [] {
    ScriptMap m;
    auto& c = m.codepoints;
    // signs
    c[0x0A01] = {CpClass::modifier, "~"};   // adak bindi
    c[0x0A02] = {CpClass::modifier, "M"};   // bindi
    c[0x0A03] = {CpClass::modifier, "H"};   // visarga
    c[0x0A3C] = {CpClass::nukta, nullptr};
    c[0x0A4D] = {CpClass::virama, nullptr};
    c[0x0A70] = {CpClass::modifier, "M"};   // tippi
    c[0x0A71] = {CpClass::geminate, nullptr};  // addak
    // independent vowels
    c[0x0A05] = {CpClass::independent_vowel, "a"};
    c[0x0A06] = {CpClass::independent_vowel, "aa"};
    c[0x0A07] = {CpClass::independent_vowel, "i"};
    c[0x0A08] = {CpClass::independent_vowel, "ii"};
    c[0x0A09] = {CpClass::independent_vowel, "u"};
    c[0x0A0A] = {CpClass::independent_vowel, "uu"};
    c[0x0A0F] = {CpClass::independent_vowel, "e"};
    c[0x0A10] = {CpClass::independent_vowel, "ai"};
    c[0x0A13] = {CpClass::independent_vowel, "o"};
    c[0x0A14] = {CpClass::independent_vowel, "au"};
    // consonants
    c[0x0A15] = {CpClass::consonant, "k"};
    c[0x0A16] = {CpClass::consonant, "kh"};
    c[0x0A17] = {CpClass::consonant, "g"};
    c[0x0A18] = {CpClass::consonant, "gh"};
    c[0x0A19] = {CpClass::consonant, "ng"};
    c[0x0A1A] = {CpClass::consonant, "c"};
    c[0x0A1B] = {CpClass::consonant, "ch"};
    c[0x0A1C] = {CpClass::consonant, "j"};
    c[0x0A1D] = {CpClass::consonant, "jh"};
    c[0x0A1E] = {CpClass::consonant, "ny"};
    c[0x0A1F] = {CpClass::consonant, "tt"};
    c[0x0A20] = {CpClass::consonant, "tth"};
    c[0x0A21] = {CpClass::consonant, "dd"};
    c[0x0A22] = {CpClass::consonant, "ddh"};
    c[0x0A23] = {CpClass::consonant, "nn"};
    c[0x0A24] = {CpClass::consonant, "t"};
    c[0x0A25] = {CpClass::consonant, "th"};
    c[0x0A26] = {CpClass::consonant, "d"};
    c[0x0A27] = {CpClass::consonant, "dh"};
    c[0x0A28] = {CpClass::consonant, "n"};
    c[0x0A2A] = {CpClass::consonant, "p"};
    c[0x0A2B] = {CpClass::consonant, "ph"};
    c[0x0A2C] = {CpClass::consonant, "b"};
    c[0x0A2D] = {CpClass::consonant, "bh"};
    c[0x0A2E] = {CpClass::consonant, "m"};
    c[0x0A2F] = {CpClass::consonant, "y"};
    c[0x0A30] = {CpClass::consonant, "r"};
    c[0x0A32] = {CpClass::consonant, "l"};
    c[0x0A33] = {CpClass::consonant, "ll"};
    c[0x0A35] = {CpClass::consonant, "v"};
    c[0x0A36] = {CpClass::consonant, "sh"};
    c[0x0A38] = {CpClass::consonant, "s"};
    c[0x0A39] = {CpClass::consonant, "h"};
    // precomposed nukta consonants
    c[0x0A59] = {CpClass::consonant, "x"};
    c[0x0A5A] = {CpClass::consonant, "G"};
    c[0x0A5B] = {CpClass::consonant, "z"};
    c[0x0A5C] = {CpClass::consonant, "rr"};
    c[0x0A5E] = {CpClass::consonant, "f"};
    // vowel signs
    c[0x0A3E] = {CpClass::vowel_sign, "aa"};
    c[0x0A3F] = {CpClass::vowel_sign, "i"};
    c[0x0A40] = {CpClass::vowel_sign, "ii"};
    c[0x0A41] = {CpClass::vowel_sign, "u"};
    c[0x0A42] = {CpClass::vowel_sign, "uu"};
    c[0x0A47] = {CpClass::vowel_sign, "e"};
    c[0x0A48] = {CpClass::vowel_sign, "ai"};
    c[0x0A4B] = {CpClass::vowel_sign, "o"};
    c[0x0A4C] = {CpClass::vowel_sign, "au"};
    add_common(m);
    m.nukta_forms = {{"kh", "x"}, {"g", "G"}, {"j", "z"},
                     {"ph", "f"}, {"l", "ll"}, {"s", "sh"},
                     {"dd", "rr"}};
    return m;
  }();
  return map;
}

// ---------------------------------------------------------------------
// Decoder
// ---------------------------------------------------------------------

std::vector<PhoneToken> run_decoder(std::string_view utf8,
                                    const ScriptMap& map) {
  const std::vector<char32_t> cps = decode_utf8(utf8);
  std::vector<PhoneToken> out;
  out.reserve(cps.size() * 2);

  std::optional<std::string> pending;  // consonant awaiting its vowel
  bool geminate_next = false;

  auto flush_with_inherent = [&] {
    if (pending) {
      out.push_back(make_consonant(*pending));
      out.push_back(inherent_schwa());
      pending.reset();
    }
  };

  for (std::size_t pos = 0; pos < cps.size(); ++pos) {
    const char32_t cp = cps[pos];
    auto it = map.codepoints.find(cp);
    if (it == map.codepoints.end()) {
      throw DecodeError("unmapped codepoint U+" +
                            [cp] {
                              char buf[16];
                              std::snprintf(buf, sizeof buf, "%04X",
                                            static_cast<unsigned>(cp));
                              return std::string(buf);
                            }(),
                        pos, cp);
    }
    const CpEntry& entry = it->second;
    if (geminate_next && entry.cls != CpClass::consonant &&
        entry.cls != CpClass::ignore) {
      throw DecodeError("addak not followed by a consonant", pos, cp);
    }
    switch (entry.cls) {
      case CpClass::consonant:
        flush_with_inherent();
        if (geminate_next) {
          // addak doubles the following consonant; the first copy closes
          // the preceding syllable and carries no vowel
          out.push_back(make_consonant(entry.token));
          geminate_next = false;
        }
        pending = entry.token;
        break;
      case CpClass::vowel_sign:
        if (!pending) {
          throw DecodeError("vowel sign with no consonant to attach to", pos,
                            cp);
        }
        out.push_back(make_consonant(*pending));
        out.push_back(make_vowel(entry.token));
        pending.reset();
        break;
      case CpClass::independent_vowel:
        flush_with_inherent();
        out.push_back(make_vowel(entry.token));
        break;
      case CpClass::virama:
        if (!pending) {
          throw DecodeError("virama with no consonant to attach to", pos, cp);
        }
        out.push_back(make_consonant(*pending));
        pending.reset();
        break;
      case CpClass::nukta: {
        if (!pending) {
          throw DecodeError("nukta with no consonant to attach to", pos, cp);
        }
        auto form = map.nukta_forms.find(*pending);
        if (form == map.nukta_forms.end()) {
          throw DecodeError("no nukta form for consonant '" + *pending + "'",
                            pos, cp);
        }
        pending = form->second;
        break;
      }
      case CpClass::modifier:
        flush_with_inherent();
        out.push_back(make_modifier(entry.token));
        break;
      case CpClass::geminate:
        flush_with_inherent();
        geminate_next = true;
        break;
      case CpClass::separator:
        flush_with_inherent();
        break;
      case CpClass::ignore:
        break;
    }
  }
  if (geminate_next) {
    throw DecodeError("addak at end of input", cps.size(), 0x0A71);
  }
  flush_with_inherent();
  return out;
}

}  // namespace

std::vector<PhoneToken> decode_devanagari(std::string_view utf8) {
  return run_decoder(utf8, devanagari_map());
}

std::vector<PhoneToken> decode_gurmukhi(std::string_view utf8) {
  return run_decoder(utf8, gurmukhi_map());
}

std::vector<PhoneToken> decode(std::string_view utf8, Script script) {
  return script == Script::devanagari ? decode_devanagari(utf8)
                                      : decode_gurmukhi(utf8);
}

// ---------------------------------------------------------------------
// ASCII token strings
// ---------------------------------------------------------------------

std::vector<PhoneToken> parse_token_string(std::string_view s,
                                           TokenSide side) {
  const auto& inventory = PhoneInventory::instance();
  std::vector<PhoneToken> out;
  std::size_t i = 0, position = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    if (i >= s.size()) break;
    std::size_t j = s.find(' ', i);
    if (j == std::string_view::npos) j = s.size();
    std::string_view raw = s.substr(i, j - i);
    i = j;

    if (raw == "a_w") {
      if (side != TokenSide::phonemic) {
        throw UnknownToken(std::string(raw), position);
      }
      out.push_back(make_vowel("a", TokenOrigin::explicit_vowel, true));
      ++position;
      continue;
    }
    auto category = inventory.category_of(raw);
    if (!category) {
      throw UnknownToken(std::string(raw), position);
    }
    PhoneToken token;
    token.symbol = std::string(raw);
    token.category = *category;
    switch (*category) {
      case PhoneCategory::consonant:
        token.origin = TokenOrigin::consonant;
        break;
      case PhoneCategory::modifier:
        token.origin = TokenOrigin::modifier;
        break;
      case PhoneCategory::vowel:
        token.origin = TokenOrigin::explicit_vowel;
        if (side == TokenSide::orthographic && raw == "a" && !out.empty() &&
            out.back().category == PhoneCategory::consonant) {
          token.origin = TokenOrigin::inherent_schwa;
        }
        break;
    }
    out.push_back(std::move(token));
    ++position;
  }
  return out;
}

std::string render_token_string(std::span<const PhoneToken> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    if (tokens[i].weak) {
      out += "a_w";
    } else {
      out += tokens[i].symbol;
    }
  }
  return out;
}

// ---------------------------------------------------------------------
// Inventory documentation
// ---------------------------------------------------------------------

namespace {

const char* class_name(CpClass cls) {
  switch (cls) {
    case CpClass::consonant: return "consonant";
    case CpClass::vowel_sign: return "vowel sign";
    case CpClass::independent_vowel: return "independent vowel";
    case CpClass::virama: return "virama";
    case CpClass::nukta: return "nukta";
    case CpClass::modifier: return "modifier";
    case CpClass::geminate: return "geminate (addak)";
    case CpClass::separator: return "separator";
    case CpClass::ignore: return "ignored";
  }
  return "?";
}

void render_map(std::ostringstream& os, const ScriptMap& map) {
  os << "| Codepoint | Class | Token |\n|---|---|---|\n";
  std::map<char32_t, CpEntry> sorted(map.codepoints.begin(),
                                     map.codepoints.end());
  for (const auto& [cp, entry] : sorted) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
    os << "| " << buf << " | " << class_name(entry.cls) << " | "
       << (entry.token ? entry.token : "") << " |\n";
  }
  os << "\nNukta forms: ";
  std::map<std::string_view, const char*> forms(map.nukta_forms.begin(),
                                                map.nukta_forms.end());
  bool first = true;
  for (const auto& [base, form] : forms) {
    if (!first) os << ", ";
    os << base << " -> " << form;
    first = false;
  }
  os << "\n";
}

}  // namespace

std::string render_inventory_doc() {
  std::ostringstream os;
  os << "# Phone inventory\n\n"
     << "Closed ASCII phone inventory. Long vowels double the vowel letter\n"
     << "(aa, ii, uu); retroflex consonants double the consonant letter\n"
     << "(tt, dd, rr, ...). `~` candrabindu, `M` anusvara/tippi/bindi,\n"
     << "`H` visarga. The weakened-schwa marker `a_w` is a rendering of\n"
     << "`a` with the weak flag set, not a separate inventory symbol.\n"
     << "Token files cannot distinguish a bare consonant followed by an\n"
     << "independent short `a` from an inherent schwa; the parser tags any\n"
     << "`a` that follows a consonant as inherent.\n\n"
     << "| Symbol | Category |\n|---|---|\n";
  for (const auto& [symbol, category] : PhoneInventory::instance().entries()) {
    const char* name = category == PhoneCategory::vowel       ? "vowel"
                       : category == PhoneCategory::consonant ? "consonant"
                                                              : "modifier";
    os << "| `" << symbol << "` | " << name << " |\n";
  }
  os << "\n## Devanagari map\n\n";
  render_map(os, devanagari_map());
  os << "\n## Gurmukhi map\n\n";
  render_map(os, gurmukhi_map());
  return os.str();
}

}  // namespace schwa
