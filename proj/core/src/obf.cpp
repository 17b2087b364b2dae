#include "wordrep/obf.hpp"

#include <sstream>
#include <string>
#include <unordered_map>

#include "wordrep/error.hpp"

namespace wordrep {

IndexSet::IndexSet(std::set<std::size_t> members) : members_(std::move(members)) {
  if (members_.empty()) {
    throw Error(ErrorKind::InvalidInput, "index set must be nonempty");
  }
  if (*members_.begin() == 0) {
    throw Error(ErrorKind::InvalidInput, "occurrence indices are 1-based");
  }
}

IndexSet::IndexSet(std::initializer_list<std::size_t> members)
    : IndexSet(std::set<std::size_t>(members)) {}

IndexSet IndexSet::full(std::size_t k) { return range(1, k); }

IndexSet IndexSet::range(std::size_t lo, std::size_t hi) {
  std::set<std::size_t> m;
  for (std::size_t i = lo; i <= hi; ++i) m.insert(i);
  return IndexSet(std::move(m));
}

OccurrenceBasedFunction::OccurrenceBasedFunction(std::set<Symbol> domain,
                                                 std::size_t bound,
                                                 std::map<Key, Word> table)
    : domain_(std::move(domain)), bound_(bound), table_(std::move(table)) {
  if (bound_ == 0) {
    throw Error(ErrorKind::InvalidInput, "occurrence bound must be positive");
  }
  for (const auto& [key, image] : table_) {
    if (!domain_.contains(key.first) || key.second == 0 || key.second > bound_) {
      throw Error(ErrorKind::InvalidInput,
                  "table entry (" + key.first.str() + ", " +
                      std::to_string(key.second) + ") lies outside the domain");
    }
  }
  if (table_.size() != domain_.size() * bound_) {
    for (const auto& x : domain_) {
      for (std::size_t i = 1; i <= bound_; ++i) {
        if (!table_.contains({x, i})) {
          throw Error(ErrorKind::InvalidInput, "table has no entry for (" + x.str() +
                                                   ", " + std::to_string(i) + ")");
        }
      }
    }
  }
}

OccurrenceBasedFunction OccurrenceBasedFunction::from_rule(std::set<Symbol> domain,
                                                           std::size_t bound,
                                                           const Rule& rule) {
  std::map<Key, Word> table;
  for (const auto& x : domain) {
    for (std::size_t i = 1; i <= bound; ++i) table.emplace(Key{x, i}, rule(x, i));
  }
  return OccurrenceBasedFunction(std::move(domain), bound, std::move(table));
}

const Word& OccurrenceBasedFunction::image(const Symbol& x, std::size_t i) const {
  auto it = table_.find({x, i});
  if (it == table_.end()) {
    if (!domain_.contains(x)) {
      throw Error(ErrorKind::DomainViolation,
                  "symbol '" + x.str() + "' is outside the function's domain");
    }
    throw Error(ErrorKind::DomainViolation,
                "occurrence " + std::to_string(i) + " of '" + x.str() +
                    "' exceeds the bound k=" + std::to_string(bound_));
  }
  return it->second;
}

Word OccurrenceBasedFunction::operator()(const Word& w) const {
  std::vector<Symbol> out;
  for (const auto& occ : label(w)) {
    const auto& img = image(occ.symbol, occ.index);
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(std::move(out));
}

OccurrenceBasedFunction projection(const IndexSet& keep,
                                   const std::set<Symbol>& alphabet, std::size_t k) {
  if (keep.max() > k) {
    throw Error(ErrorKind::InvalidInput, "index set member " + std::to_string(keep.max()) +
                                             " exceeds k=" + std::to_string(k));
  }
  return OccurrenceBasedFunction::from_rule(
      alphabet, k, [&keep](const Symbol& x, std::size_t i) {
        return keep.contains(i) ? Word({x}) : Word();
      });
}

Word project(const Word& w, const IndexSet& keep) {
  std::unordered_map<Symbol, std::size_t> seen;
  std::vector<Symbol> out;
  for (const auto& s : w) {
    if (keep.contains(++seen[s])) out.push_back(s);
  }
  return Word(std::move(out));
}

std::size_t first_uncovered(const std::vector<IndexSet>& sets, std::size_t k) {
  for (std::size_t j = 1; j < k; ++j) {
    bool covered = false;
    for (const auto& a : sets) {
      if (a.contains(j) && a.contains(j + 1)) {
        covered = true;
        break;
      }
    }
    if (!covered) return j;
  }
  return 0;
}

Word lemma1_concat(const Word& w, const std::vector<IndexSet>& sets) {
  if (w.empty()) throw Error(ErrorKind::InvalidInput, "word must be nonempty");
  auto k = uniformity(w);
  if (!k) throw Error(ErrorKind::InvalidInput, "word '" + w.to_string() + "' is not uniform");
  if (sets.size() < 2) {
    throw Error(ErrorKind::InvalidInput, "at least two index sets are required");
  }
  for (const auto& a : sets) {
    if (a.max() > *k) {
      throw Error(ErrorKind::InvalidInput, "index set member " + std::to_string(a.max()) +
                                               " exceeds k=" + std::to_string(*k));
    }
  }
  if (auto j = first_uncovered(sets, *k)) throw ChainConditionError(j);

  std::set<Symbol> alphabet(w.alphabet().begin(), w.alphabet().end());
  Word out;
  for (const auto& a : sets) out = out + projection(a, alphabet, *k)(w);
  return out;
}

Word extend_uniform(const Word& w, std::size_t i) {
  if (w.empty()) throw Error(ErrorKind::InvalidInput, "word must be nonempty");
  auto k = uniformity(w);
  if (!k) throw Error(ErrorKind::InvalidInput, "word '" + w.to_string() + "' is not uniform");
  if (i == 0 || i > *k) {
    throw Error(ErrorKind::InvalidInput, "occurrence index " + std::to_string(i) +
                                             " is outside 1.." + std::to_string(*k));
  }
  return project(w, IndexSet{i}) + w;
}

void write_obf(std::ostream& out, const OccurrenceBasedFunction& h) {
  out << "k=" << h.bound() << '\n';
  for (const auto& [key, image] : h.table()) {
    out << key.first << ' ' << key.second << " ->";
    for (const auto& s : image) out << ' ' << s;
    out << '\n';
  }
}

OccurrenceBasedFunction read_obf(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t bound = 0;
  std::set<Symbol> domain;
  std::map<OccurrenceBasedFunction::Key, Word> table;
  auto fail = [&line_no](const std::string& what) {
    return Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (bound == 0) {
      if (line.compare(first, 2, "k=") != 0) throw fail("expected header 'k=<bound>'");
      try {
        std::size_t used = 0;
        auto text = line.substr(first + 2);
        long long v = std::stoll(text, &used);
        if (v <= 0 || text.find_first_not_of(" \t\r", used) != std::string::npos) {
          throw fail("bad bound");
        }
        bound = static_cast<std::size_t>(v);
      } catch (const std::logic_error&) {
        throw fail("bad bound");
      }
      continue;
    }
    auto arrow = line.find("->");
    if (arrow == std::string::npos) throw fail("expected 'x i -> ...'");
    std::istringstream lhs(line.substr(0, arrow));
    std::string sym;
    long long index = 0;
    std::string extra;
    if (!(lhs >> sym >> index) || (lhs >> extra) || index <= 0 || !Symbol::is_valid(sym)) {
      throw fail("malformed left-hand side");
    }
    Word image;
    try {
      image = Word::parse(line.substr(arrow + 2));
    } catch (const Error& e) {
      throw fail(e.what());
    }
    Symbol x(sym);
    domain.insert(x);
    if (!table.emplace(OccurrenceBasedFunction::Key{x, static_cast<std::size_t>(index)},
                       std::move(image))
             .second) {
      throw fail("duplicate entry");
    }
  }
  if (bound == 0) throw Error(ErrorKind::ParseError, "missing 'k=<bound>' header");
  try {
    return OccurrenceBasedFunction(std::move(domain), bound, std::move(table));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace wordrep
