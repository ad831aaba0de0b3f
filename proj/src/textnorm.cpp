#include "settlematch/textnorm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "settlematch/util.hpp"

namespace settlematch::textnorm {

namespace {

bool is_ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ascii_alnum(char c) { return is_ascii_alpha(c) || is_ascii_digit(c); }
bool is_ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
char ascii_upper(char c) { return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c; }

FoldTable build_polish_fold_table() {
    FoldTable t;
    // Both cases of each Polish letter map to its lowercase Latin counterpart.
    t.entries = {
        {"ą", "a"}, {"Ą", "a"},  // ą Ą
        {"ć", "c"}, {"Ć", "c"},  // ć Ć
        {"ę", "e"}, {"Ę", "e"},  // ę Ę
        {"ł", "l"}, {"Ł", "l"},  // ł Ł
        {"ń", "n"}, {"Ń", "n"},  // ń Ń
        {"ó", "o"}, {"Ó", "o"},  // ó Ó
        {"ś", "s"}, {"Ś", "s"},  // ś Ś
        {"ź", "z"}, {"Ź", "z"},  // ź Ź
        {"ż", "z"}, {"Ż", "z"},  // ż Ż
    };
    return t;
}

SuffixList build_polish_suffix_list() {
    // Folded forms of: a, u, owi, em, ie, y, i, ą, ę, ego, emu, im, ym,
    // ami, ach, ów. Folding collapses ą->a and ę->e into existing entries.
    SuffixList s;
    s.suffixes = {"a", "u", "owi", "em", "ie", "y", "i", "e",
                  "ego", "emu", "im", "ym", "ami", "ach", "ow"};
    return s;
}

std::string fold_token(const std::string& raw, const FoldTable& folds) {
    // Fold + lowercase a single entry loaded from a config file, so that
    // user-provided suffixes written with diacritics behave like built-ins.
    std::string out;
    std::size_t i = 0;
    while (i < raw.size()) {
        bool matched = false;
        for (const auto& [from, to] : folds.entries) {
            if (raw.compare(i, from.size(), from) == 0) {
                out += to;
                i += from.size();
                matched = true;
                break;
            }
        }
        if (matched) continue;
        char c = raw[i++];
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        out += c;
    }
    return out;
}

}  // namespace

const FoldTable& FoldTable::polish() {
    static const FoldTable table = build_polish_fold_table();
    return table;
}

FoldTable FoldTable::from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open fold table: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    FoldTable t;
    for (const std::string& raw : split_lines(buf.str())) {
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::size_t sp = line.find(' ');
        if (sp == std::string::npos) throw IoError("bad fold table line: " + line);
        t.entries.emplace_back(trim(line.substr(0, sp)), trim(line.substr(sp + 1)));
    }
    return t;
}

const SuffixList& SuffixList::polish() {
    static const SuffixList list = build_polish_suffix_list();
    return list;
}

SuffixList SuffixList::from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open suffix list: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    SuffixList s;
    for (const std::string& raw : split_lines(buf.str())) {
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::string folded = fold_token(line, FoldTable::polish());
        if (!folded.empty()) s.suffixes.push_back(folded);
    }
    return s;
}

TokenList normalize(std::string_view text, const FoldTable& folds) {
    TokenList tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            tokens.push_back(current);
            current.clear();
        }
    };

    std::size_t i = 0;
    while (i < text.size()) {
        bool matched = false;
        for (const auto& [from, to] : folds.entries) {
            if (text.compare(i, from.size(), from) == 0) {
                current += to;
                i += from.size();
                matched = true;
                break;
            }
        }
        if (matched) continue;

        char c = text[i++];
        if (c >= 'A' && c <= 'Z') {
            current += static_cast<char>(c - 'A' + 'a');
        } else if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
            current += c;
        } else {
            // Any other byte (punctuation, whitespace, unfolded multibyte
            // sequences) acts as a token separator.
            flush();
        }
    }
    flush();
    return tokens;
}

int levenshtein(std::string_view a, std::string_view b) {
    if (a.size() > b.size()) std::swap(a, b);
    const std::size_t n = a.size(), m = b.size();
    if (n == 0) return static_cast<int>(m);

    std::vector<int> prev(n + 1), cur(n + 1);
    for (std::size_t j = 0; j <= n; ++j) prev[j] = static_cast<int>(j);
    for (std::size_t i = 1; i <= m; ++i) {
        cur[0] = static_cast<int>(i);
        for (std::size_t j = 1; j <= n; ++j) {
            int sub = prev[j - 1] + (a[j - 1] == b[i - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

bool soft_match(std::string_view a, std::string_view b, double max_rel) {
    if (a == b) return true;
    const double longest = static_cast<double>(std::max(a.size(), b.size()));
    const int budget = static_cast<int>(std::floor(max_rel * longest + 1e-9));
    return levenshtein(a, b) <= budget;
}

std::set<std::string> declension_stems(const std::string& name, const SuffixList& suffixes) {
    std::set<std::string> stems{name};
    for (const std::string& suf : suffixes.suffixes) {
        if (name.size() >= suf.size() + 3 &&
            name.compare(name.size() - suf.size(), suf.size(), suf) == 0) {
            stems.insert(name.substr(0, name.size() - suf.size()));
        }
    }
    return stems;
}

std::vector<CodeCandidate> extract_member_codes(std::string_view title) {
    std::vector<CodeCandidate> out;
    const std::size_t n = title.size();
    std::size_t i = 0;
    while (i < n) {
        if (!is_ascii_alpha(title[i]) || (i > 0 && is_ascii_alnum(title[i - 1]))) {
            ++i;
            continue;
        }
        // Exactly two letters.
        if (i + 1 >= n || !is_ascii_alpha(title[i + 1]) ||
            (i + 2 < n && is_ascii_alpha(title[i + 2]))) {
            ++i;
            continue;
        }
        const char l0 = title[i], l1 = title[i + 1];

        // Separator: bare hyphen is canonical; up to one space on either
        // side of an optional hyphen is tolerated, as is no separator.
        std::size_t k = i + 2;
        int spaces_before = 0, spaces_after = 0;
        bool hyphen = false;
        if (k < n && title[k] == ' ') { ++spaces_before; ++k; }
        if (k < n && title[k] == '-') { hyphen = true; ++k; }
        if (hyphen && k < n && title[k] == ' ') { ++spaces_after; ++k; }

        std::size_t dstart = k;
        while (k < n && is_ascii_digit(title[k]) && k - dstart < 7) ++k;
        const std::size_t digits = k - dstart;
        const bool bounded = (k == n) || !is_ascii_alnum(title[k]);
        if (digits >= 1 && digits <= 6 && bounded) {
            CodeCandidate c;
            c.club_part = {ascii_upper(l0), ascii_upper(l1)};
            c.number_part = std::string(title.substr(dstart, digits));
            c.well_formed = hyphen && spaces_before == 0 && spaces_after == 0 &&
                            is_ascii_upper(l0) && is_ascii_upper(l1);
            out.push_back(std::move(c));
            i = k;
        } else {
            i += 2;
        }
    }
    return out;
}

}  // namespace settlematch::textnorm
