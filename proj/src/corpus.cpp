#include "geolex/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "geolex/errors.hpp"
#include "geolex/tokenizer.hpp"

namespace geolex {

namespace {

std::uint64_t pack(std::int32_t word, std::int32_t cell) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(word)) << 32) |
         static_cast<std::uint32_t>(cell);
}

}  // namespace

std::int64_t CountMatrix::total_tokens() const {
  return std::accumulate(cell_totals.begin(), cell_totals.end(),
                         std::int64_t{0});
}

void CountMatrix::rebuild_marginals() {
  cell_totals.assign(cells.size(), 0);
  cell_distinct.assign(cells.size(), 0);
  word_totals.assign(vocabulary.size(), 0);
  word_cells.assign(vocabulary.size(), 0);
  for (const CountEntry& e : entries) {
    cell_totals[e.cell] += e.count;
    cell_distinct[e.cell] += 1;
    word_totals[e.word] += e.count;
    word_cells[e.word] += 1;
  }
}

CorpusBuilder::CorpusBuilder(int level) : level_(level) {
  if (level < 0 || level > kMaxLocateLevel) {
    throw std::invalid_argument("CorpusBuilder: invalid HTM level");
  }
}

void CorpusBuilder::add(const Document& doc) {
  if (!is_valid(doc.point)) {
    ++stats_.skipped;
    return;
  }
  const std::vector<std::string> tokens = tokenize(doc.text);
  ++stats_.documents;
  if (tokens.empty()) return;

  const TrixelId cell = locate(doc.point, level_);
  auto [cit, cell_new] = cell_index_.try_emplace(
      cell, static_cast<std::int32_t>(cell_ids_.size()));
  if (cell_new) cell_ids_.push_back(cell);
  const std::int32_t cell_idx = cit->second;

  for (const std::string& tok : tokens) {
    auto [wit, word_new] =
        word_index_.try_emplace(tok, static_cast<std::int32_t>(words_.size()));
    if (word_new) words_.push_back(tok);
    counts_[pack(wit->second, cell_idx)] += 1;
    ++stats_.tokens;
  }
}

void CorpusBuilder::merge(const CorpusBuilder& other) {
  if (other.level_ != level_) {
    throw std::invalid_argument("CorpusBuilder::merge: level mismatch");
  }
  stats_.documents += other.stats_.documents;
  stats_.skipped += other.stats_.skipped;
  stats_.tokens += other.stats_.tokens;
  // Remap the other builder's indices into this one's tables.
  std::vector<std::int32_t> word_map(other.words_.size());
  for (std::size_t i = 0; i < other.words_.size(); ++i) {
    auto [it, inserted] = word_index_.try_emplace(
        other.words_[i], static_cast<std::int32_t>(words_.size()));
    if (inserted) words_.push_back(other.words_[i]);
    word_map[i] = it->second;
  }
  std::vector<std::int32_t> cell_map(other.cell_ids_.size());
  for (std::size_t i = 0; i < other.cell_ids_.size(); ++i) {
    auto [it, inserted] = cell_index_.try_emplace(
        other.cell_ids_[i], static_cast<std::int32_t>(cell_ids_.size()));
    if (inserted) cell_ids_.push_back(other.cell_ids_[i]);
    cell_map[i] = it->second;
  }
  for (const auto& [key, count] : other.counts_) {
    const auto word = static_cast<std::int32_t>(key >> 32);
    const auto cell = static_cast<std::int32_t>(key & 0xFFFFFFFFu);
    counts_[pack(word_map[word], cell_map[cell])] += count;
  }
}

CountMatrix CorpusBuilder::build() const {
  CountMatrix m;

  // Canonical row order: lexicographic vocabulary.
  std::vector<std::int32_t> word_order(words_.size());
  std::iota(word_order.begin(), word_order.end(), 0);
  std::sort(word_order.begin(), word_order.end(),
            [&](std::int32_t a, std::int32_t b) { return words_[a] < words_[b]; });
  std::vector<std::int32_t> word_rank(words_.size());
  m.vocabulary.resize(words_.size());
  for (std::size_t r = 0; r < word_order.size(); ++r) {
    word_rank[word_order[r]] = static_cast<std::int32_t>(r);
    m.vocabulary[r] = words_[word_order[r]];
  }

  // Canonical column order: trixel ids ascending.
  std::vector<std::int32_t> cell_order(cell_ids_.size());
  std::iota(cell_order.begin(), cell_order.end(), 0);
  std::sort(cell_order.begin(), cell_order.end(), [&](std::int32_t a, std::int32_t b) {
    return cell_ids_[a] < cell_ids_[b];
  });
  std::vector<std::int32_t> cell_rank(cell_ids_.size());
  m.cells.resize(cell_ids_.size());
  for (std::size_t c = 0; c < cell_order.size(); ++c) {
    cell_rank[cell_order[c]] = static_cast<std::int32_t>(c);
    m.cells[c] = cell_ids_[cell_order[c]];
  }

  m.entries.reserve(counts_.size());
  for (const auto& [key, count] : counts_) {
    const auto word = static_cast<std::int32_t>(key >> 32);
    const auto cell = static_cast<std::int32_t>(key & 0xFFFFFFFFu);
    m.entries.push_back(CountEntry{word_rank[word], cell_rank[cell], count});
  }
  std::sort(m.entries.begin(), m.entries.end(),
            [](const CountEntry& a, const CountEntry& b) {
              return a.word != b.word ? a.word < b.word : a.cell < b.cell;
            });
  m.rebuild_marginals();
  return m;
}

CountMatrix ingest(const std::vector<Document>& docs, int level,
                   IngestStats* stats) {
  CorpusBuilder builder(level);
  for (const Document& d : docs) builder.add(d);
  if (stats) *stats = builder.stats();
  return builder.build();
}

CountMatrix apply_filter(const CountMatrix& w, const FilterSpec& f) {
  if (f.cell_min_tokens < 0 || f.cell_min_distinct < 0 ||
      f.word_min_total < 0 || f.word_min_cells < 0) {
    throw std::invalid_argument("apply_filter: negative threshold");
  }

  // Pass 1: cells.
  std::vector<std::int32_t> cell_rank(w.cells.size(), -1);
  std::vector<TrixelId> kept_cells;
  for (std::size_t c = 0; c < w.cells.size(); ++c) {
    if (w.cell_totals[c] >= f.cell_min_tokens &&
        w.cell_distinct[c] >= f.cell_min_distinct) {
      cell_rank[c] = static_cast<std::int32_t>(kept_cells.size());
      kept_cells.push_back(w.cells[c]);
    }
  }
  if (kept_cells.empty()) {
    throw FilterEmptyError("apply_filter: no cell meets the thresholds");
  }

  // Pass 2: words, evaluated on the surviving columns only.
  std::vector<std::int64_t> word_total(w.vocabulary.size(), 0);
  std::vector<std::int64_t> word_spread(w.vocabulary.size(), 0);
  for (const CountEntry& e : w.entries) {
    if (cell_rank[e.cell] < 0) continue;
    word_total[e.word] += e.count;
    word_spread[e.word] += 1;
  }
  std::vector<std::int32_t> word_rank(w.vocabulary.size(), -1);
  std::vector<std::string> kept_words;
  for (std::size_t r = 0; r < w.vocabulary.size(); ++r) {
    if (word_total[r] >= f.word_min_total &&
        word_spread[r] >= f.word_min_cells) {
      word_rank[r] = static_cast<std::int32_t>(kept_words.size());
      kept_words.push_back(w.vocabulary[r]);
    }
  }
  if (kept_words.empty()) {
    throw FilterEmptyError("apply_filter: no word meets the thresholds");
  }

  CountMatrix out;
  out.vocabulary = std::move(kept_words);
  out.cells = std::move(kept_cells);
  for (const CountEntry& e : w.entries) {
    if (word_rank[e.word] < 0 || cell_rank[e.cell] < 0) continue;
    out.entries.push_back(
        CountEntry{word_rank[e.word], cell_rank[e.cell], e.count});
  }
  out.rebuild_marginals();
  return out;
}

FrequencyMatrix normalize(const CountMatrix& w) {
  for (std::size_t c = 0; c < w.cells.size(); ++c) {
    if (w.cell_totals[c] <= 0) {
      throw std::invalid_argument("normalize: cell " +
                                  std::to_string(w.cells[c]) +
                                  " has zero total count");
    }
  }
  FrequencyMatrix x;
  x.vocabulary = w.vocabulary;
  x.cells = w.cells;
  x.values = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(w.word_count()),
                                   static_cast<Eigen::Index>(w.cell_count()));
  for (const CountEntry& e : w.entries) {
    x.values(e.word, e.cell) =
        static_cast<double>(e.count) / static_cast<double>(w.cell_totals[e.cell]);
  }
  return x;
}

const std::map<std::string, CorpusPreset>& presets() {
  static const std::map<std::string, CorpusPreset> table = {
      {"usa", {6, FilterSpec{10000, 1000, 10000, 300}}},
      {"nyc", {13, FilterSpec{6500, 1000, 1000, 1}}},
  };
  return table;
}

const CorpusPreset& preset(const std::string& name) {
  const auto& table = presets();
  const auto it = table.find(name);
  if (it == table.end()) {
    throw std::invalid_argument("unknown corpus preset: " + name);
  }
  return it->second;
}

}  // namespace geolex
