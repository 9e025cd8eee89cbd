#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schwa/lexicon.hpp"
#include "schwa/phones.hpp"

namespace schwa {

enum class Label : std::uint8_t { deleted = 0, retained = 1 };

inline const char* label_name(Label label) {
  return label == Label::retained ? "retained" : "deleted";
}

// One labeled training example: an inherent schwa at orth[orth_index] of
// the entry, retained or deleted. `weak` carries the phonemic weakened
// mark and is only ever set on retained schwas.
struct SchwaInstance {
  std::int64_t entry_id = -1;
  std::uint32_t orth_index = 0;
  Label label = Label::retained;
  bool weak = false;

  bool operator==(const SchwaInstance&) const = default;
};

struct AlignFailure {
  std::size_t orth_pos = 0;
  std::size_t phon_pos = 0;
  std::string reason;
};

struct AlignmentResult {
  std::vector<SchwaInstance> instances;  // ascending orth_index on success
  std::optional<AlignFailure> failure;
  std::size_t comparisons = 0;  // token comparisons; <= |orth| + |phon|

  bool ok() const { return !failure.has_value(); }
};

// Deletion-only forced alignment, two-pointer scan in O(|orth|+|phon|):
// matching tokens advance both sides (an inherent schwa so matched is
// retained; a weak phonemic `a` matches only an inherent schwa), an
// unmatched inherent schwa is deleted and advances orthography alone,
// anything else is a failure. Failures are data, not exceptions.
AlignmentResult align(std::span<const PhoneToken> orth,
                      std::span<const PhoneToken> phon,
                      std::int64_t entry_id = -1);

// align() on the entry's sequences; nullopt means the entry is discarded.
std::optional<std::vector<SchwaInstance>> extract_instances(
    const LexEntry& entry);

struct FilteredLexicon {
  std::vector<LexEntry> kept;
  std::vector<SchwaInstance> instances;  // grouped by entry, in kept order
  std::uint64_t discarded = 0;
  std::vector<std::int64_t> discarded_ids;
};

FilteredLexicon extract_all(std::span<const LexEntry> entries);

// Instance rows as emitted by `build-dataset`: header `schwa-instances v1`
// then entry_id <TAB> orth_index <TAB> label <TAB> weak(0|1).
void write_instances(std::span<const SchwaInstance> instances,
                     const std::filesystem::path& path);
std::vector<SchwaInstance> read_instances(const std::filesystem::path& path);

}  // namespace schwa
