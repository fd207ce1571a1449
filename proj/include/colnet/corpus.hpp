#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace colnet {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A text after normalization: lowercase, punctuation-free, source order.
struct Document {
  std::string doc_id;
  std::string genre;
  std::vector<std::string> tokens;
};

struct Corpus {
  std::vector<Document> documents;
  /// genre -> doc ids, in document order.
  std::map<std::string, std::vector<std::string>> genre_index;
  /// Non-fatal conditions met while loading (empty corpus, replaced bytes).
  std::vector<std::string> warnings;

  bool empty() const { return documents.empty(); }
  const Document* find(std::string_view doc_id) const;
  std::vector<std::string> genres() const;
};

struct TokenizeStats {
  std::size_t replaced_sequences = 0;  ///< undecodable UTF-8 sequences
};

/// Lowercases `text` and splits it at whitespace, control characters and
/// every punctuation (P*) or symbol (S*) code point. Digits stay inside
/// tokens; no stemming. Invalid UTF-8 is replaced by U+FFFD, which is a
/// symbol and therefore acts as a separator.
std::vector<std::string> tokenize(std::string_view text, TokenizeStats* stats = nullptr);

/// Assembles a corpus, checking id uniqueness and building the genre index.
Corpus make_corpus(std::vector<Document> documents);

/// Loads `<root>/<genre>/<doc>.txt`, or the `path<TAB>genre` records of
/// `manifest` (paths relative to root). Documents are ordered by path.
Corpus load_corpus(const std::filesystem::path& root,
                   const std::optional<std::filesystem::path>& manifest = std::nullopt);

/// Contiguous n-gram windows (n = 2 or 3) as views into `tokens`.
std::vector<std::span<const std::string>> ngram_stream(std::span<const std::string> tokens,
                                                       std::size_t n);

}  // namespace colnet
