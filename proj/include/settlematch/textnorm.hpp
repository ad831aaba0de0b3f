#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace settlematch::textnorm {

using TokenList = std::vector<std::string>;

// Diacritic folding table: UTF-8 sequence -> ASCII replacement, applied
// before tokenization. The built-in table covers Polish letters in both
// cases; alternatives can be loaded from a plain-text file with one
// "<sequence> <replacement>" pair per line.
struct FoldTable {
    std::vector<std::pair<std::string, std::string>> entries;

    static const FoldTable& polish();
    static FoldTable from_file(const std::string& path);
};

// Inflection suffixes stripped by declension_stems. Entries are stored
// folded and lowercased. Loadable from a plain-text file, one suffix per
// line; '#' starts a comment.
struct SuffixList {
    std::vector<std::string> suffixes;

    static const SuffixList& polish();
    static SuffixList from_file(const std::string& path);
};

// Lowercases, folds diacritics, splits on runs of anything that is not
// [a-z0-9] after folding. Never produces empty tokens.
TokenList normalize(std::string_view text, const FoldTable& folds = FoldTable::polish());

// Unit-cost edit distance over bytes.
int levenshtein(std::string_view a, std::string_view b);

// True iff levenshtein(a,b) <= floor(max_rel * max(|a|,|b|)). Equal strings
// always pass, including when max_rel is 0.
bool soft_match(std::string_view a, std::string_view b, double max_rel);

// The token itself plus every stem obtained by stripping one suffix from the
// list, keeping a stem only if at least 3 characters remain. The input is
// expected to be a single normalized token.
std::set<std::string> declension_stems(const std::string& name,
                                       const SuffixList& suffixes = SuffixList::polish());

// One member-code occurrence found in a transfer title. well_formed is true
// only for the exact canonical shape: two uppercase letters, a bare hyphen,
// then digits. Tolerant variants (missing hyphen, single spaces around or
// instead of the hyphen, lowercase letters) are reported with
// well_formed=false. club_part is always uppercased; number_part keeps the
// digits exactly as written.
struct CodeCandidate {
    std::string club_part;
    std::string number_part;
    bool well_formed = false;

    bool operator==(const CodeCandidate&) const = default;
};

// Scans a raw (pre-normalization) title left to right for member codes.
std::vector<CodeCandidate> extract_member_codes(std::string_view title);

}  // namespace settlematch::textnorm
