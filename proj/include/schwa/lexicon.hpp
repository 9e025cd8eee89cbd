#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schwa/phones.hpp"

namespace schwa {

// One pronunciation-lexicon row: native-script headword plus orthographic
// and phonemic token sequences. Ids are positional (0-based in file
// order); duplicate headwords are allowed.
struct LexEntry {
  std::int64_t id = 0;
  std::string headword;
  std::vector<PhoneToken> orth;
  std::vector<PhoneToken> phon;
  std::string source;

  bool operator==(const LexEntry&) const = default;
};

struct RejectedLine {
  std::size_t line_no = 0;  // 1-based
  std::string line;
  std::string reason;
};

struct LexiconParse {
  std::vector<LexEntry> entries;
  std::vector<RejectedLine> rejects;
};

// UTF-8 TSV: header line `schwa-lexicon v1`, `#` comment lines, then
// headword <TAB> orth tokens <TAB> phon tokens [<TAB> source]. Malformed
// lines become rejects, never silent drops. Throws IoError if the file
// cannot be read and FormatError if the header line is wrong.
LexiconParse parse_lexicon(const std::filesystem::path& path);
LexiconParse parse_lexicon(std::istream& in);

// Inverse of parse_lexicon; parse(write(E)) == E for entries with
// canonical (positional) ids.
void write_lexicon(std::span<const LexEntry> entries,
                   const std::filesystem::path& path);
void write_lexicon(std::span<const LexEntry> entries, std::ostream& out);

struct SplitSpec {
  double train = 0.8;
  double dev = 0.1;
  double test = 0.1;
  std::uint64_t seed = 0;

  void validate() const;  // nonnegative, sums to 1 within 1e-9
};

struct LexiconSplit {
  std::vector<LexEntry> train;
  std::vector<LexEntry> dev;
  std::vector<LexEntry> test;
};

// Entry-level partition with a seeded shuffle: deterministic for a fixed
// seed, set sizes within 1 of fraction*N, parts disjoint with union equal
// to the input. Entries within each part keep ascending id order.
LexiconSplit split_lexicon(std::span<const LexEntry> entries,
                           const SplitSpec& spec);

struct LexiconStats {
  std::uint64_t entry_count = 0;
  std::uint64_t schwa_count = 0;
  std::uint64_t deleted_count = 0;
  std::optional<double> deletion_rate;  // absent when schwa_count == 0
  std::uint64_t discarded_count = 0;
};

// Aligns each entry to label its schwas; entries that fail alignment are
// counted as discarded. `already_discarded` is carried through (e.g. from
// an earlier filtering pass).
LexiconStats stats(std::span<const LexEntry> entries,
                   std::uint64_t already_discarded = 0);

}  // namespace schwa
