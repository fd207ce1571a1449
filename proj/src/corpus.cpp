#include "colnet/corpus.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace colnet {
namespace {

bool is_separator(UChar32 c) {
  if (u_isUWhiteSpace(c)) return true;
  switch (u_charType(c)) {
    case U_CONTROL_CHAR:
    case U_SPACE_SEPARATOR:
    case U_LINE_SEPARATOR:
    case U_PARAGRAPH_SEPARATOR:
    case U_DASH_PUNCTUATION:
    case U_START_PUNCTUATION:
    case U_END_PUNCTUATION:
    case U_CONNECTOR_PUNCTUATION:
    case U_OTHER_PUNCTUATION:
    case U_INITIAL_PUNCTUATION:
    case U_FINAL_PUNCTUATION:
    case U_MATH_SYMBOL:
    case U_CURRENCY_SYMBOL:
    case U_MODIFIER_SYMBOL:
    case U_OTHER_SYMBOL:
      return true;
    default:
      return false;
  }
}

void append_utf8(std::string& out, UChar32 c) {
  char buf[U8_MAX_LENGTH];
  int32_t len = 0;
  U8_APPEND_UNSAFE(buf, len, c);
  out.append(buf, static_cast<std::size_t>(len));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw CorpusError("cannot read file: " + path.string());
  return std::move(buf).str();
}

struct Entry {
  std::string doc_id;
  std::filesystem::path path;
  std::string genre;
};

std::vector<Entry> scan_directory(const std::filesystem::path& root) {
  std::vector<Entry> entries;
  for (const auto& genre_dir : std::filesystem::directory_iterator(root)) {
    if (!genre_dir.is_directory()) continue;
    const std::string genre = genre_dir.path().filename().string();
    for (const auto& file : std::filesystem::directory_iterator(genre_dir.path())) {
      if (!file.is_regular_file() || file.path().extension() != ".txt") continue;
      entries.push_back({std::filesystem::relative(file.path(), root).generic_string(),
                         file.path(), genre});
    }
  }
  return entries;
}

std::vector<Entry> read_manifest(const std::filesystem::path& root,
                                 const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw CorpusError("cannot read manifest: " + manifest.string());
  std::vector<Entry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size() ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw CorpusError("malformed manifest record at line " + std::to_string(line_no));
    }
    std::string rel = line.substr(0, tab);
    entries.push_back({rel, root / rel, line.substr(tab + 1)});
  }
  return entries;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text, TokenizeStats* stats) {
  std::vector<std::string> tokens;
  std::string current;
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) {
      c = 0xFFFD;
      if (stats) ++stats->replaced_sequences;
    }
    if (is_separator(c)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
      continue;
    }
    // Format characters (soft hyphen, zero-width joiners) vanish without splitting.
    if (u_charType(c) == U_FORMAT_CHAR) continue;
    append_utf8(current, u_tolower(c));
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

const Document* Corpus::find(std::string_view doc_id) const {
  for (const auto& d : documents) {
    if (d.doc_id == doc_id) return &d;
  }
  return nullptr;
}

std::vector<std::string> Corpus::genres() const {
  std::vector<std::string> out;
  for (const auto& [genre, ids] : genre_index) out.push_back(genre);
  return out;
}

Corpus make_corpus(std::vector<Document> documents) {
  Corpus corpus;
  std::set<std::string> seen;
  for (const auto& d : documents) {
    if (!seen.insert(d.doc_id).second) throw CorpusError("duplicate document id: " + d.doc_id);
    corpus.genre_index[d.genre].push_back(d.doc_id);
  }
  corpus.documents = std::move(documents);
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& root,
                   const std::optional<std::filesystem::path>& manifest) {
  if (!std::filesystem::is_directory(root)) {
    throw CorpusError("corpus root not found: " + root.string());
  }
  auto entries = manifest ? read_manifest(root, *manifest) : scan_directory(root);
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.doc_id < b.doc_id; });

  std::vector<Document> documents;
  std::vector<std::string> warnings;
  documents.reserve(entries.size());
  for (auto& e : entries) {
    TokenizeStats stats;
    auto tokens = tokenize(read_file(e.path), &stats);
    if (stats.replaced_sequences > 0) {
      warnings.push_back(e.doc_id + ": replaced " + std::to_string(stats.replaced_sequences) +
                         " undecodable byte sequence(s)");
    }
    documents.push_back({std::move(e.doc_id), std::move(e.genre), std::move(tokens)});
  }
  Corpus corpus = make_corpus(std::move(documents));
  corpus.warnings = std::move(warnings);
  if (corpus.empty()) corpus.warnings.push_back("corpus contains no documents: " + root.string());
  return corpus;
}

std::vector<std::span<const std::string>> ngram_stream(std::span<const std::string> tokens,
                                                       std::size_t n) {
  if (n != 2 && n != 3) throw std::invalid_argument("n-gram order must be 2 or 3");
  std::vector<std::span<const std::string>> grams;
  if (tokens.size() < n) return grams;
  grams.reserve(tokens.size() - n + 1);
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) grams.push_back(tokens.subspan(i, n));
  return grams;
}

}  // namespace colnet
