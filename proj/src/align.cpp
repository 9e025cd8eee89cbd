#include "schwa/align.hpp"

#include <fstream>

#include "schwa/errors.hpp"

namespace schwa {

AlignmentResult align(std::span<const PhoneToken> orth,
                      std::span<const PhoneToken> phon,
                      std::int64_t entry_id) {
  AlignmentResult result;
  std::size_t i = 0, j = 0;

  auto fail = [&](std::string reason) {
    result.instances.clear();
    result.failure = AlignFailure{i, j, std::move(reason)};
    return result;
  };

  while (i < orth.size()) {
    const PhoneToken& o = orth[i];
    bool matched = false;
    if (j < phon.size()) {
      ++result.comparisons;
      const PhoneToken& p = phon[j];
      // a weak phonemic schwa may only realize a retained inherent schwa
      matched = o.symbol == p.symbol &&
                (!p.weak || o.origin == TokenOrigin::inherent_schwa);
    }
    if (matched) {
      if (o.origin == TokenOrigin::inherent_schwa) {
        result.instances.push_back({entry_id, static_cast<std::uint32_t>(i),
                                    Label::retained, phon[j].weak});
      }
      ++i;
      ++j;
    } else if (o.origin == TokenOrigin::inherent_schwa) {
      result.instances.push_back(
          {entry_id, static_cast<std::uint32_t>(i), Label::deleted, false});
      ++i;
    } else {
      return fail("token mismatch");
    }
  }
  if (j != phon.size()) {
    return fail("unconsumed phonemic tokens");
  }
  return result;
}

std::optional<std::vector<SchwaInstance>> extract_instances(
    const LexEntry& entry) {
  AlignmentResult result = align(entry.orth, entry.phon, entry.id);
  if (!result.ok()) return std::nullopt;
  return std::move(result.instances);
}

FilteredLexicon extract_all(std::span<const LexEntry> entries) {
  FilteredLexicon out;
  for (const LexEntry& entry : entries) {
    if (auto instances = extract_instances(entry)) {
      out.kept.push_back(entry);
      out.instances.insert(out.instances.end(), instances->begin(),
                           instances->end());
    } else {
      ++out.discarded;
      out.discarded_ids.push_back(entry.id);
    }
  }
  return out;
}

void write_instances(std::span<const SchwaInstance> instances,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << "schwa-instances v1\n";
  for (const SchwaInstance& inst : instances) {
    out << inst.entry_id << '\t' << inst.orth_index << '\t'
        << label_name(inst.label) << '\t' << (inst.weak ? 1 : 0) << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<SchwaInstance> read_instances(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "schwa-instances v1") {
    throw FormatError("missing 'schwa-instances v1' header: " + path.string());
  }
  std::vector<SchwaInstance> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    SchwaInstance inst;
    char label[16] = {0};
    int weak = 0;
    long long id = 0;
    unsigned idx = 0;
    if (std::sscanf(line.c_str(), "%lld\t%u\t%15[a-z]\t%d", &id, &idx, label,
                    &weak) != 4) {
      throw FormatError("bad instance row at line " + std::to_string(line_no));
    }
    inst.entry_id = id;
    inst.orth_index = idx;
    std::string_view name(label);
    if (name == "retained") {
      inst.label = Label::retained;
    } else if (name == "deleted") {
      inst.label = Label::deleted;
    } else {
      throw FormatError("bad label at line " + std::to_string(line_no));
    }
    inst.weak = weak != 0;
    out.push_back(inst);
  }
  return out;
}

}  // namespace schwa
