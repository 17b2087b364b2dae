#include "wordrep/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "wordrep/error.hpp"

namespace wordrep {

Word::Word(std::vector<Symbol> letters) : letters_(std::move(letters)) {
  std::map<Symbol, std::size_t> counts;
  for (const auto& s : letters_) ++counts[s];
  alphabet_.reserve(counts.size());
  counts_.reserve(counts.size());
  for (auto& [s, c] : counts) {
    alphabet_.push_back(s);
    counts_.push_back(c);
  }
}

Word Word::parse(std::string_view text) {
  std::vector<Symbol> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) {
      std::string token(text.substr(start, i - start));
      if (!Symbol::is_valid(token)) {
        throw Error(ErrorKind::ParseError, "invalid symbol '" + token + "' in word");
      }
      letters.emplace_back(std::move(token));
    }
  }
  return Word(std::move(letters));
}

bool Word::contains(const Symbol& s) const {
  return std::binary_search(alphabet_.begin(), alphabet_.end(), s);
}

std::size_t Word::count(const Symbol& s) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), s);
  if (it == alphabet_.end() || *it != s) return 0;
  return counts_[static_cast<std::size_t>(it - alphabet_.begin())];
}

std::size_t Word::max_count() const noexcept {
  return counts_.empty() ? 0 : *std::max_element(counts_.begin(), counts_.end());
}

Word Word::reversed() const {
  return Word(std::vector<Symbol>(letters_.rbegin(), letters_.rend()));
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += letters_[i].str();
  }
  return out;
}

Word operator+(const Word& a, const Word& b) {
  std::vector<Symbol> letters;
  letters.reserve(a.size() + b.size());
  letters.insert(letters.end(), a.letters_.begin(), a.letters_.end());
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(letters));
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << w.to_string();
}

Word restrict(const Word& w, const std::set<Symbol>& keep) {
  std::vector<Symbol> out;
  for (const auto& s : w) {
    if (keep.contains(s)) out.push_back(s);
  }
  return Word(std::move(out));
}

bool alternates(const Word& w, const Symbol& x, const Symbol& y) {
  if (x == y) {
    throw Error(ErrorKind::InvalidQuery,
                "alternation query needs two distinct symbols, got '" + x.str() +
                    "' twice");
  }
  const Symbol* last = nullptr;
  for (const auto& s : w) {
    if (s != x && s != y) continue;
    if (last && *last == s) return false;
    last = &s;
  }
  return true;
}

std::optional<std::size_t> uniformity(const Word& w) {
  if (w.empty()) {
    throw Error(ErrorKind::InvalidInput, "uniformity of the empty word is undefined");
  }
  std::size_t k = w.count(w.alphabet().front());
  for (const auto& s : w.alphabet()) {
    if (w.count(s) != k) return std::nullopt;
  }
  return k;
}

LabelledWord label(const Word& w) {
  std::unordered_map<Symbol, std::size_t> seen;
  LabelledWord out;
  out.reserve(w.size());
  for (const auto& s : w) out.push_back({s, ++seen[s]});
  return out;
}

Word unlabel(const LabelledWord& labelled) {
  std::vector<Symbol> out;
  out.reserve(labelled.size());
  for (const auto& occ : labelled) out.push_back(occ.symbol);
  return Word(std::move(out));
}

PositionIndex::PositionIndex(const Word& w) : symbols_(w.alphabet()) {
  std::unordered_map<Symbol, std::size_t> ids;
  ids.reserve(symbols_.size());
  for (std::size_t i = 0; i < symbols_.size(); ++i) ids.emplace(symbols_[i], i);

  offsets_.assign(symbols_.size() + 1, 0);
  std::vector<std::size_t> letter_ids;
  letter_ids.reserve(w.size());
  for (const auto& s : w) {
    auto id = ids.at(s);
    letter_ids.push_back(id);
    ++offsets_[id + 1];
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) offsets_[i + 1] += offsets_[i];

  positions_.resize(w.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t pos = 0; pos < letter_ids.size(); ++pos) {
    positions_[fill[letter_ids[pos]]++] = pos;
  }
}

std::optional<std::size_t> PositionIndex::id_of(const Symbol& s) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s);
  if (it == symbols_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

std::span<const std::size_t> PositionIndex::positions(std::size_t id) const {
  return {positions_.data() + offsets_[id], offsets_[id + 1] - offsets_[id]};
}

bool PositionIndex::alternates(std::size_t a, std::size_t b) const {
  return positions_alternate(positions(a), positions(b));
}

bool positions_alternate(std::span<const std::size_t> a,
                         std::span<const std::size_t> b) noexcept {
  // Counts of alternating letters differ by at most one.
  if (a.size() > b.size() + 1 || b.size() > a.size() + 1) return false;
  if (a.empty() || b.empty()) return true;
  // Leader is whichever list starts first; the merge must then be
  // lead[0] < follow[0] < lead[1] < follow[1] < ...
  auto lead = a;
  auto follow = b;
  if (b.front() < a.front()) std::swap(lead, follow);
  if (follow.size() > lead.size()) return false;
  for (std::size_t i = 0; i < lead.size(); ++i) {
    if (i < follow.size() && follow[i] < lead[i]) return false;
    if (i + 1 < lead.size()) {
      if (i >= follow.size() || follow[i] > lead[i + 1]) return false;
    }
  }
  return true;
}

}  // namespace wordrep
