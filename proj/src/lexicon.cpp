#include "schwa/lexicon.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "schwa/align.hpp"
#include "schwa/errors.hpp"
#include "schwa/rng.hpp"
#include "schwa/script.hpp"

namespace schwa {
namespace {

constexpr std::string_view kHeader = "schwa-lexicon v1";

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

}  // namespace

LexiconParse parse_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path.string());
  return parse_lexicon(in);
}

LexiconParse parse_lexicon(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw FormatError("empty lexicon file (missing header)");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);  // UTF-8 BOM
  if (line != kHeader) {
    throw FormatError("expected header '" + std::string(kHeader) +
                      "', found '" + line + "'");
  }

  LexiconParse result;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    auto reject = [&](std::string reason) {
      result.rejects.push_back({line_no, line, std::move(reason)});
    };

    auto fields = split_tabs(line);
    if (fields.size() < 3 || fields.size() > 4) {
      reject("expected 3 or 4 tab-separated columns, found " +
             std::to_string(fields.size()));
      continue;
    }
    if (fields[0].empty()) {
      reject("empty headword");
      continue;
    }
    LexEntry entry;
    entry.headword = std::string(fields[0]);
    entry.source = fields.size() == 4 ? std::string(fields[3]) : "";
    try {
      entry.orth = parse_token_string(fields[1], TokenSide::orthographic);
      entry.phon = parse_token_string(fields[2], TokenSide::phonemic);
    } catch (const UnknownToken& e) {
      reject(e.what());
      continue;
    }
    if (entry.orth.empty()) {
      reject("empty orthographic tokens");
      continue;
    }
    if (entry.phon.empty()) {
      reject("empty phonemic tokens");
      continue;
    }
    entry.id = static_cast<std::int64_t>(result.entries.size());
    result.entries.push_back(std::move(entry));
  }
  return result;
}

void write_lexicon(std::span<const LexEntry> entries,
                   const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  write_lexicon(entries, out);
  if (!out) throw IoError("write failed: " + path.string());
}

void write_lexicon(std::span<const LexEntry> entries, std::ostream& out) {
  out << kHeader << '\n';
  for (const LexEntry& entry : entries) {
    out << entry.headword << '\t' << render_token_string(entry.orth) << '\t'
        << render_token_string(entry.phon);
    if (!entry.source.empty()) out << '\t' << entry.source;
    out << '\n';
  }
}

void SplitSpec::validate() const {
  if (train < 0 || dev < 0 || test < 0) {
    throw std::invalid_argument("split fractions must be nonnegative");
  }
  if (std::abs(train + dev + test - 1.0) > 1e-9) {
    throw std::invalid_argument("split fractions must sum to 1");
  }
}

LexiconSplit split_lexicon(std::span<const LexEntry> entries,
                           const SplitSpec& spec) {
  spec.validate();
  if (entries.empty()) {
    throw std::invalid_argument("cannot split an empty lexicon");
  }
  const std::size_t n = entries.size();

  // largest-remainder apportionment keeps every size within 1 of f*N
  const double fractions[3] = {spec.train, spec.dev, spec.test};
  std::size_t sizes[3];
  double remainders[3];
  std::size_t assigned = 0;
  for (int k = 0; k < 3; ++k) {
    double exact = fractions[k] * static_cast<double>(n);
    sizes[k] = static_cast<std::size_t>(std::floor(exact));
    remainders[k] = exact - std::floor(exact);
    assigned += sizes[k];
  }
  int order[3] = {0, 1, 2};
  std::stable_sort(order, order + 3,
                   [&](int a, int b) { return remainders[a] > remainders[b]; });
  for (int k = 0; assigned < n; ++k) {
    ++sizes[order[k % 3]];
    ++assigned;
  }

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(spec.seed);
  rng.shuffle(perm);

  LexiconSplit split;
  auto take = [&](std::size_t from, std::size_t count) {
    std::vector<LexEntry> part;
    part.reserve(count);
    std::vector<std::size_t> picked(perm.begin() + from,
                                    perm.begin() + from + count);
    std::sort(picked.begin(), picked.end());
    for (std::size_t idx : picked) part.push_back(entries[idx]);
    return part;
  };
  split.train = take(0, sizes[0]);
  split.dev = take(sizes[0], sizes[1]);
  split.test = take(sizes[0] + sizes[1], sizes[2]);
  return split;
}

LexiconStats stats(std::span<const LexEntry> entries,
                   std::uint64_t already_discarded) {
  LexiconStats out;
  out.discarded_count = already_discarded;
  for (const LexEntry& entry : entries) {
    auto instances = extract_instances(entry);
    if (!instances) {
      ++out.discarded_count;
      continue;
    }
    ++out.entry_count;
    for (const SchwaInstance& inst : *instances) {
      ++out.schwa_count;
      if (inst.label == Label::deleted) ++out.deleted_count;
    }
  }
  if (out.schwa_count > 0) {
    out.deletion_rate = static_cast<double>(out.deleted_count) /
                        static_cast<double>(out.schwa_count);
  }
  return out;
}

}  // namespace schwa
