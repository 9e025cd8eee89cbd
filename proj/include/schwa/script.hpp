#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schwa/phones.hpp"

namespace schwa {

enum class Script : std::uint8_t { devanagari, gurmukhi };

// Decode a Unicode word into orthographic phone tokens, making inherent
// schwas explicit: a consonant letter not followed by a vowel sign or
// virama emits the consonant token plus an inherent `a`. Throws
// DecodeError on any unmapped codepoint or misplaced combining mark;
// empty input decodes to an empty sequence.
std::vector<PhoneToken> decode_devanagari(std::string_view utf8);

// Same contract with the Gurmukhi codepoint map: the inherent vowel is
// mukta, tippi and bindi map to `M`, and addak geminates the following
// consonant.
std::vector<PhoneToken> decode_gurmukhi(std::string_view utf8);

std::vector<PhoneToken> decode(std::string_view utf8, Script script);

enum class TokenSide : std::uint8_t { orthographic, phonemic };

// Parse a space-separated ASCII token string. On the orthographic side an
// `a` immediately preceded by a consonant token is tagged inherent_schwa;
// on the phonemic side `a_w` marks a weakened schwa. Throws UnknownToken
// for anything outside the inventory.
std::vector<PhoneToken> parse_token_string(std::string_view s, TokenSide side);

// Inverse of parse_token_string: single-space-joined symbols, weak schwas
// rendered as `a_w`.
std::string render_token_string(std::span<const PhoneToken> tokens);

// Markdown documentation of the phone inventory and both codepoint maps;
// docs/phone_inventory.md is kept byte-identical to this output.
std::string render_inventory_doc();

}  // namespace schwa
