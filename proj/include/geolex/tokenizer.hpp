#ifndef GEOLEX_TOKENIZER_HPP
#define GEOLEX_TOKENIZER_HPP

#include <string>
#include <string_view>
#include <vector>

namespace geolex {

/// Splits UTF-8 text into lowercase word tokens.
///
/// Rules (changing them changes every downstream number, so they are frozen
/// here and documented in the README):
///   - a word character is a Unicode letter or digit; everything else splits,
///     including apostrophes ("don't" -> "don", "t"), '@' and '#'
///   - tokens are lowercased (ASCII, Latin-1, Greek and Cyrillic ranges;
///     other scripts pass through unchanged)
///   - tokens shorter than 2 code points are dropped
///   - tokens consisting only of digits are dropped
///   - tokens starting with "http" (URL remnants) are dropped
///
/// Letter/digit classification uses an explicit code-point range table in
/// tokenizer.cpp covering the common BMP scripts; unlisted code points
/// (punctuation, symbols, emoji) act as separators.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace geolex

#endif  // GEOLEX_TOKENIZER_HPP
