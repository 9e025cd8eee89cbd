#include "schwa/features.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "schwa/errors.hpp"

namespace schwa {
namespace {

// Global enumeration of feature values; rows refer to these by index.
const std::vector<PhonFeatureTable::ValueDef>& value_def_table() {
  static const std::vector<PhonFeatureTable::ValueDef> defs = {
      {"height", "high"},        {"height", "mid"},
      {"height", "low"},         {"backness", "front"},
      {"backness", "central"},   {"backness", "back"},
      {"roundedness", "rounded"}, {"roundedness", "unrounded"},
      {"length", "short"},       {"length", "long"},
      {"voice", "voiced"},       {"voice", "voiceless"},
      {"aspiration", "aspirated"}, {"aspiration", "unaspirated"},
      {"place", "labial"},       {"place", "dental"},
      {"place", "alveolar"},     {"place", "retroflex"},
      {"place", "palatal"},      {"place", "velar"},
      {"place", "glottal"},
  };
  return defs;
}

std::uint8_t value_index(std::string_view feature, std::string_view value) {
  const auto& defs = value_def_table();
  for (std::size_t i = 0; i < defs.size(); ++i) {
    if (defs[i].feature == feature && defs[i].value == value) {
      return static_cast<std::uint8_t>(i);
    }
  }
  throw FormatError("unknown feature value " + std::string(feature) + "=" +
                    std::string(value));
}

std::vector<std::uint8_t> vowel_row(const char* height, const char* backness,
                                    const char* roundedness,
                                    const char* length) {
  return {value_index("height", height), value_index("backness", backness),
          value_index("roundedness", roundedness),
          value_index("length", length)};
}

std::vector<std::uint8_t> consonant_row(const char* voice,
                                        const char* aspiration,
                                        const char* place) {
  return {value_index("voice", voice), value_index("aspiration", aspiration),
          value_index("place", place)};
}

}  // namespace

PhonFeatureTable make_table(
    std::vector<std::pair<std::string, std::vector<std::uint8_t>>> rows) {
  PhonFeatureTable table;
  for (auto& [symbol, row] : rows) {
    std::sort(row.begin(), row.end());
    table.rows_.emplace(std::move(symbol), std::move(row));
  }
  return table;
}

const PhonFeatureTable& PhonFeatureTable::shipped() {
  static const PhonFeatureTable table = make_table({
      {"a", vowel_row("mid", "central", "unrounded", "short")},
      {"aa", vowel_row("low", "central", "unrounded", "long")},
      {"i", vowel_row("high", "front", "unrounded", "short")},
      {"ii", vowel_row("high", "front", "unrounded", "long")},
      {"u", vowel_row("high", "back", "rounded", "short")},
      {"uu", vowel_row("high", "back", "rounded", "long")},
      {"ri", vowel_row("high", "central", "unrounded", "short")},
      {"e", vowel_row("mid", "front", "unrounded", "long")},
      {"ai", vowel_row("mid", "front", "unrounded", "long")},
      {"o", vowel_row("mid", "back", "rounded", "long")},
      {"au", vowel_row("mid", "back", "rounded", "long")},
      {"ae", vowel_row("low", "front", "unrounded", "short")},
      {"aw", vowel_row("mid", "back", "rounded", "short")},
      {"k", consonant_row("voiceless", "unaspirated", "velar")},
      {"kh", consonant_row("voiceless", "aspirated", "velar")},
      {"g", consonant_row("voiced", "unaspirated", "velar")},
      {"gh", consonant_row("voiced", "aspirated", "velar")},
      {"ng", consonant_row("voiced", "unaspirated", "velar")},
      {"c", consonant_row("voiceless", "unaspirated", "palatal")},
      {"ch", consonant_row("voiceless", "aspirated", "palatal")},
      {"j", consonant_row("voiced", "unaspirated", "palatal")},
      {"jh", consonant_row("voiced", "aspirated", "palatal")},
      {"ny", consonant_row("voiced", "unaspirated", "palatal")},
      {"tt", consonant_row("voiceless", "unaspirated", "retroflex")},
      {"tth", consonant_row("voiceless", "aspirated", "retroflex")},
      {"dd", consonant_row("voiced", "unaspirated", "retroflex")},
      {"ddh", consonant_row("voiced", "aspirated", "retroflex")},
      {"nn", consonant_row("voiced", "unaspirated", "retroflex")},
      {"t", consonant_row("voiceless", "unaspirated", "dental")},
      {"th", consonant_row("voiceless", "aspirated", "dental")},
      {"d", consonant_row("voiced", "unaspirated", "dental")},
      {"dh", consonant_row("voiced", "aspirated", "dental")},
      {"n", consonant_row("voiced", "unaspirated", "dental")},
      {"p", consonant_row("voiceless", "unaspirated", "labial")},
      {"ph", consonant_row("voiceless", "aspirated", "labial")},
      {"b", consonant_row("voiced", "unaspirated", "labial")},
      {"bh", consonant_row("voiced", "aspirated", "labial")},
      {"m", consonant_row("voiced", "unaspirated", "labial")},
      {"y", consonant_row("voiced", "unaspirated", "palatal")},
      {"r", consonant_row("voiced", "unaspirated", "alveolar")},
      {"l", consonant_row("voiced", "unaspirated", "alveolar")},
      {"ll", consonant_row("voiced", "unaspirated", "retroflex")},
      {"v", consonant_row("voiced", "unaspirated", "labial")},
      {"sh", consonant_row("voiceless", "unaspirated", "palatal")},
      {"ss", consonant_row("voiceless", "unaspirated", "retroflex")},
      {"s", consonant_row("voiceless", "unaspirated", "alveolar")},
      {"h", consonant_row("voiced", "unaspirated", "glottal")},
      {"q", consonant_row("voiceless", "unaspirated", "velar")},
      {"x", consonant_row("voiceless", "unaspirated", "velar")},
      {"G", consonant_row("voiced", "unaspirated", "velar")},
      {"z", consonant_row("voiced", "unaspirated", "alveolar")},
      {"f", consonant_row("voiceless", "unaspirated", "labial")},
      {"rr", consonant_row("voiced", "unaspirated", "retroflex")},
      {"rrh", consonant_row("voiced", "aspirated", "retroflex")},
      // modifiers pattern as coda segments
      {"~", consonant_row("voiced", "unaspirated", "velar")},
      {"M", consonant_row("voiced", "unaspirated", "velar")},
      {"H", consonant_row("voiceless", "unaspirated", "glottal")},
  });
  return table;
}

PhonFeatureTable PhonFeatureTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "schwa-phon-features v1") {
    throw FormatError("missing 'schwa-phon-features v1' header: " +
                      path.string());
  }
  std::vector<std::pair<std::string, std::vector<std::uint8_t>>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string symbol, kind, pair;
    if (!std::getline(fields, symbol, '\t') ||
        !std::getline(fields, kind, '\t')) {
      throw FormatError("bad feature row at line " + std::to_string(line_no));
    }
    std::vector<std::uint8_t> row;
    while (std::getline(fields, pair, '\t')) {
      std::size_t eq = pair.find('=');
      if (eq == std::string::npos) {
        throw FormatError("expected feature=value at line " +
                          std::to_string(line_no));
      }
      row.push_back(value_index(pair.substr(0, eq), pair.substr(eq + 1)));
    }
    if (row.empty()) {
      throw FormatError("feature row with no values at line " +
                        std::to_string(line_no));
    }
    rows.emplace_back(std::move(symbol), std::move(row));
  }
  return make_table(std::move(rows));
}

std::span<const PhonFeatureTable::ValueDef> PhonFeatureTable::value_defs()
    const {
  return value_def_table();
}

std::size_t PhonFeatureTable::value_count() const {
  return value_def_table().size();
}

std::span<const std::uint8_t> PhonFeatureTable::row(
    std::string_view symbol) const {
  auto it = rows_.find(std::string(symbol));
  if (it == rows_.end()) return {};
  return it->second;
}

std::string PhonFeatureTable::render() const {
  const auto& defs = value_def_table();
  std::vector<std::pair<std::string, const std::vector<std::uint8_t>*>> rows;
  rows.reserve(rows_.size());
  for (const auto& [symbol, row] : rows_) rows.emplace_back(symbol, &row);
  std::sort(rows.begin(), rows.end());
  std::ostringstream os;
  os << "schwa-phon-features v1\n";
  for (const auto& [symbol, row] : rows) {
    bool vowelish = !row->empty() && defs[(*row)[0]].feature == "height";
    os << symbol << '\t' << (vowelish ? "vowel" : "consonant");
    for (std::uint8_t v : *row) {
      os << '\t' << defs[v].feature << '=' << defs[v].value;
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------

void FeatureConfig::validate() const {
  if (left_window < 1 || right_window < 1) {
    throw std::invalid_argument("window sizes must be >= 1");
  }
}

Vocabulary Vocabulary::from_symbols(std::vector<std::string> symbols) {
  symbols.push_back(std::string(kBoundarySymbol));
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  Vocabulary vocab;
  vocab.symbols_ = std::move(symbols);
  for (std::uint32_t i = 0; i < vocab.symbols_.size(); ++i) {
    vocab.index_.emplace(vocab.symbols_[i], i);
  }
  vocab.boundary_index_ = *vocab.index_of(kBoundarySymbol);
  return vocab;
}

std::optional<std::uint32_t> Vocabulary::index_of(
    std::string_view symbol) const {
  auto it = index_.find(symbol);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vocabulary build_vocabulary(std::span<const LexEntry> train_entries) {
  if (train_entries.empty()) {
    throw std::invalid_argument("cannot build a vocabulary from no entries");
  }
  std::set<std::string> seen;
  for (const LexEntry& entry : train_entries) {
    for (const PhoneToken& token : entry.orth) seen.insert(token.symbol);
  }
  return Vocabulary::from_symbols({seen.begin(), seen.end()});
}

// ---------------------------------------------------------------------

std::uint32_t feature_dimension(const FeatureConfig& config,
                                const Vocabulary& vocab,
                                const PhonFeatureTable& table) {
  config.validate();
  std::uint32_t dim = config.positions() * vocab.size();
  if (config.use_phon_features) {
    dim += config.positions() * static_cast<std::uint32_t>(table.value_count());
  }
  return dim;
}

namespace {

// window slots in offset order: -n..-1 then +1..+m
int offset_of_slot(const FeatureConfig& config, std::uint32_t slot) {
  if (slot < config.left_window) {
    return -static_cast<int>(config.left_window - slot);
  }
  return static_cast<int>(slot - config.left_window + 1);
}

std::uint32_t slot_of_offset(const FeatureConfig& config, int offset) {
  return offset < 0 ? config.left_window - static_cast<std::uint32_t>(-offset)
                    : config.left_window + static_cast<std::uint32_t>(offset) -
                          1;
}

}  // namespace

FeatureVector encode(const SchwaInstance& instance, const LexEntry& entry,
                     const FeatureConfig& config, const Vocabulary& vocab,
                     const PhonFeatureTable& table) {
  config.validate();
  FeatureVector vec;
  vec.dimension = feature_dimension(config, vocab, table);
  const auto& orth = entry.orth;
  const std::uint32_t vocab_size = vocab.size();
  const std::uint32_t feature_base = config.positions() * vocab_size;
  const auto value_count = static_cast<std::uint32_t>(table.value_count());

  std::vector<std::uint32_t> feature_part;
  for (std::uint32_t slot = 0; slot < config.positions(); ++slot) {
    const int offset = offset_of_slot(config, slot);
    const std::int64_t pos =
        static_cast<std::int64_t>(instance.orth_index) + offset;
    bool in_word = pos >= 0 && pos < static_cast<std::int64_t>(orth.size());
    std::uint32_t symbol_index = vocab.boundary_index();
    if (in_word) {
      // unknown test-time symbols fall into the boundary bucket, features
      // and all
      if (auto idx = vocab.index_of(orth[pos].symbol)) {
        symbol_index = *idx;
        if (config.use_phon_features) {
          for (std::uint8_t v : table.row(orth[pos].symbol)) {
            feature_part.push_back(feature_base + slot * value_count + v);
          }
        }
      }
    }
    vec.active.push_back(slot * vocab_size + symbol_index);
  }
  vec.active.insert(vec.active.end(), feature_part.begin(),
                    feature_part.end());
  return vec;
}

std::string feature_name(std::uint32_t index, const FeatureConfig& config,
                         const Vocabulary& vocab,
                         const PhonFeatureTable& table) {
  const std::uint32_t dim = feature_dimension(config, vocab, table);
  if (index >= dim) {
    throw std::out_of_range("feature index " + std::to_string(index) +
                            " >= dimension " + std::to_string(dim));
  }
  const std::uint32_t symbol_span = config.positions() * vocab.size();
  std::ostringstream os;
  if (index < symbol_span) {
    const std::uint32_t slot = index / vocab.size();
    const std::uint32_t sym = index % vocab.size();
    const int offset = offset_of_slot(config, slot);
    os << "c_{" << (offset > 0 ? "+" : "") << offset
       << "}=" << vocab.symbol(sym);
  } else {
    const std::uint32_t rest = index - symbol_span;
    const auto value_count = static_cast<std::uint32_t>(table.value_count());
    const std::uint32_t slot = rest / value_count;
    const std::uint32_t value = rest % value_count;
    const int offset = offset_of_slot(config, slot);
    const auto& def = table.value_defs()[value];
    os << "c_{" << (offset > 0 ? "+" : "") << offset << "}." << def.feature
       << "=" << def.value;
  }
  return os.str();
}

std::uint32_t feature_index_of_name(std::string_view name,
                                    const FeatureConfig& config,
                                    const Vocabulary& vocab,
                                    const PhonFeatureTable& table) {
  auto bad = [&] {
    return std::invalid_argument("bad feature name: " + std::string(name));
  };
  if (!name.starts_with("c_{")) throw bad();
  std::size_t close = name.find('}');
  if (close == std::string_view::npos) throw bad();
  int offset = 0;
  auto digits = name.substr(3, close - 3);
  auto [ptr, ec] =
      std::from_chars(digits.data() + (digits.starts_with("+") ? 1 : 0),
                      digits.data() + digits.size(), offset);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) throw bad();
  if (offset == 0 ||
      (offset < 0 && static_cast<std::uint32_t>(-offset) > config.left_window) ||
      (offset > 0 && static_cast<std::uint32_t>(offset) > config.right_window)) {
    throw bad();
  }
  const std::uint32_t slot = slot_of_offset(config, offset);
  std::string_view rest = name.substr(close + 1);
  if (rest.starts_with("=")) {
    auto idx = vocab.index_of(rest.substr(1));
    if (!idx) throw bad();
    return slot * vocab.size() + *idx;
  }
  if (rest.starts_with(".")) {
    std::size_t eq = rest.find('=');
    if (eq == std::string_view::npos) throw bad();
    std::string_view feature = rest.substr(1, eq - 1);
    std::string_view value = rest.substr(eq + 1);
    const auto defs = table.value_defs();
    for (std::uint32_t v = 0; v < defs.size(); ++v) {
      if (defs[v].feature == feature && defs[v].value == value) {
        return config.positions() * vocab.size() +
               slot * static_cast<std::uint32_t>(table.value_count()) + v;
      }
    }
  }
  throw bad();
}

std::vector<std::string> all_feature_names(const FeatureConfig& config,
                                           const Vocabulary& vocab,
                                           const PhonFeatureTable& table) {
  const std::uint32_t dim = feature_dimension(config, vocab, table);
  std::vector<std::string> names;
  names.reserve(dim);
  for (std::uint32_t i = 0; i < dim; ++i) {
    names.push_back(feature_name(i, config, vocab, table));
  }
  return names;
}

}  // namespace schwa
