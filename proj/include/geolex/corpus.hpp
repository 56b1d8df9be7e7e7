#ifndef GEOLEX_CORPUS_HPP
#define GEOLEX_CORPUS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "geolex/geo.hpp"
#include "geolex/htm.hpp"

namespace geolex {

/// A geotagged text document.
struct Document {
  std::string text;
  GeoPoint point;
  std::string id;  // optional opaque tag, may be empty
};

/// Thresholds for pruning the count matrix. A cell survives when it has at
/// least cell_min_tokens occurrences of at least cell_min_distinct distinct
/// words; afterwards a word survives when it has at least word_min_total
/// occurrences spread over at least word_min_cells of the surviving cells.
struct FilterSpec {
  std::int64_t cell_min_tokens = 0;
  std::int64_t cell_min_distinct = 0;
  std::int64_t word_min_total = 0;
  std::int64_t word_min_cells = 0;
};

/// One nonzero of the word x cell count matrix.
struct CountEntry {
  std::int32_t word = 0;  // row
  std::int32_t cell = 0;  // column
  std::int64_t count = 0;
};

/// Sparse word x cell occurrence counts with cached marginals. Canonical
/// order: vocabulary sorted lexicographically (byte order), cells sorted by
/// id ascending, entries sorted by (word, cell). Identical document streams
/// produce bit-identical matrices regardless of input order.
struct CountMatrix {
  std::vector<std::string> vocabulary;  // row index -> word
  std::vector<TrixelId> cells;          // column index -> trixel id
  std::vector<CountEntry> entries;      // sorted by (word, cell)

  std::vector<std::int64_t> cell_totals;    // tokens per cell
  std::vector<std::int64_t> cell_distinct;  // distinct words per cell
  std::vector<std::int64_t> word_totals;    // occurrences per word
  std::vector<std::int64_t> word_cells;     // cells a word appears in

  std::size_t word_count() const { return vocabulary.size(); }
  std::size_t cell_count() const { return cells.size(); }
  std::int64_t total_tokens() const;

  /// Recomputes all four marginal vectors from the entries.
  void rebuild_marginals();
};

/// Dense column-normalized relative-frequency matrix: every column sums to
/// one and entries lie in [0, 1].
struct FrequencyMatrix {
  Eigen::MatrixXd values;  // words x cells
  std::vector<std::string> vocabulary;
  std::vector<TrixelId> cells;
};

struct IngestStats {
  std::int64_t documents = 0;  // documents accepted
  std::int64_t skipped = 0;    // malformed / invalid-point documents
  std::int64_t tokens = 0;     // tokens counted into the matrix
};

/// Incremental count accumulator. Builders filled from disjoint shards of a
/// document stream can be merged; merging is associative and commutative and
/// the finalized matrix is identical to a single-pass build.
class CorpusBuilder {
 public:
  explicit CorpusBuilder(int level);

  /// Tokenizes the document and counts each token occurrence into the cell
  /// containing the document's point. Invalid documents are skipped and
  /// counted in stats().
  void add(const Document& doc);

  void merge(const CorpusBuilder& other);

  /// Produces the canonical CountMatrix. The builder may be reused.
  CountMatrix build() const;

  int level() const { return level_; }
  const IngestStats& stats() const { return stats_; }

 private:
  int level_;
  IngestStats stats_;
  std::vector<std::string> words_;                       // insertion order
  std::unordered_map<std::string, std::int32_t> word_index_;
  std::vector<TrixelId> cell_ids_;                       // insertion order
  std::unordered_map<TrixelId, std::int32_t> cell_index_;
  std::unordered_map<std::uint64_t, std::int64_t> counts_;
};

/// Single-shot ingestion of a document batch at the given HTM level.
CountMatrix ingest(const std::vector<Document>& docs, int level,
                   IngestStats* stats = nullptr);

/// One-pass pruning: cells first, then words, evaluated against the cell
/// columns that survived. The pass is deliberately not iterated, so removing
/// words can leave cells below the cell thresholds; re-apply explicitly if
/// a fixed point is wanted. Throws FilterEmptyError when nothing survives.
CountMatrix apply_filter(const CountMatrix& w, const FilterSpec& f);

/// Divides every column by its total. Throws when a column total is zero,
/// naming the offending cell.
FrequencyMatrix normalize(const CountMatrix& w);

/// Named corpus presets:
///   "usa": level 6,  thresholds (10000, 1000, 10000, 300)
///   "nyc": level 13, thresholds (6500, 1000, 1000, 1)
struct CorpusPreset {
  int level = 0;
  FilterSpec filter;
};

const std::map<std::string, CorpusPreset>& presets();

/// Preset lookup; throws std::invalid_argument on an unknown name.
const CorpusPreset& preset(const std::string& name);

}  // namespace geolex

#endif  // GEOLEX_CORPUS_HPP
