#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "schwa/align.hpp"
#include "schwa/lexicon.hpp"

namespace schwa {

// Context window around a schwa: positions c_{-n}..c_{-1} and
// c_{+1}..c_{+m}. c_0 itself is always `a` and is not encoded.
struct FeatureConfig {
  std::uint32_t left_window = 5;
  std::uint32_t right_window = 5;
  bool use_phon_features = false;

  void validate() const;  // both windows >= 1
  std::uint32_t positions() const { return left_window + right_window; }
  bool operator==(const FeatureConfig&) const = default;
};

// Symbols seen in training orthography, sorted lexicographically, plus the
// boundary symbol `#`. Built from training data only; out-of-vocabulary
// symbols at inference time map to the `#` bucket.
class Vocabulary {
 public:
  Vocabulary() = default;
  static Vocabulary from_symbols(std::vector<std::string> symbols);

  std::uint32_t size() const {
    return static_cast<std::uint32_t>(symbols_.size());
  }
  std::optional<std::uint32_t> index_of(std::string_view symbol) const;
  std::uint32_t boundary_index() const { return boundary_index_; }
  const std::string& symbol(std::uint32_t index) const {
    return symbols_.at(index);
  }
  std::span<const std::string> symbols() const { return symbols_; }

  bool operator==(const Vocabulary& other) const {
    return symbols_ == other.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string_view, std::uint32_t> index_;
  std::uint32_t boundary_index_ = 0;
};

Vocabulary build_vocabulary(std::span<const LexEntry> train_entries);

// Phonological feature rows for every inventory phone: vowels carry
// height/backness/roundedness/length, consonants (and, as coda
// approximations, the modifiers) voice/aspiration/place. Values come from
// a closed enumeration shared by all tables.
class PhonFeatureTable {
 public:
  struct ValueDef {
    std::string feature;
    std::string value;
  };

  static const PhonFeatureTable& shipped();
  static PhonFeatureTable load(const std::filesystem::path& path);

  std::span<const ValueDef> value_defs() const;
  std::size_t value_count() const;
  // global value indices for a symbol, ascending; empty span for symbols
  // with no row (never the case for the shipped table)
  std::span<const std::uint8_t> row(std::string_view symbol) const;

  std::string render() const;  // the columnar text format, for export

 private:
  friend PhonFeatureTable make_table(
      std::vector<std::pair<std::string, std::vector<std::uint8_t>>> rows);
  std::unordered_map<std::string, std::vector<std::uint8_t>> rows_;
};

// Sparse binary vector: exactly one active symbol index per window
// position, plus at most one index per feature type per in-word position
// when phonological features are enabled.
struct FeatureVector {
  std::vector<std::uint32_t> active;  // sorted, unique
  std::uint32_t dimension = 0;
};

std::uint32_t feature_dimension(const FeatureConfig& config,
                                const Vocabulary& vocab,
                                const PhonFeatureTable& table);

FeatureVector encode(const SchwaInstance& instance, const LexEntry& entry,
                     const FeatureConfig& config, const Vocabulary& vocab,
                     const PhonFeatureTable& table);

// Human-readable names, bijective with indices: "c_{-2}=k", "c_{+1}=#",
// "c_{-2}.place=velar". Throws std::out_of_range past the dimension.
std::string feature_name(std::uint32_t index, const FeatureConfig& config,
                         const Vocabulary& vocab,
                         const PhonFeatureTable& table);
std::uint32_t feature_index_of_name(std::string_view name,
                                    const FeatureConfig& config,
                                    const Vocabulary& vocab,
                                    const PhonFeatureTable& table);
std::vector<std::string> all_feature_names(const FeatureConfig& config,
                                           const Vocabulary& vocab,
                                           const PhonFeatureTable& table);

}  // namespace schwa
