#include "wordrep/constructions.hpp"

#include <set>
#include <string>
#include <vector>

#include "wordrep/error.hpp"
#include "wordrep/graph.hpp"

namespace wordrep {

namespace {

// k of a k-uniform word with k > 1, or PreconditionFailure.
std::size_t product_uniformity(const Word& w) {
  if (w.empty()) {
    throw Error(ErrorKind::PreconditionFailure, "product construction needs a nonempty word");
  }
  auto k = uniformity(w);
  if (!k) {
    throw Error(ErrorKind::PreconditionFailure,
                "product construction needs a uniform word; '" + w.to_string() + "' is not");
  }
  if (*k <= 1) {
    throw Error(ErrorKind::PreconditionFailure,
                "product construction requires a k-uniform word with k > 1 (got k = 1); "
                "the k = 1 case has no valid product representant in general");
  }
  return *k;
}

std::set<Symbol> alphabet_set(const Word& w) {
  return {w.alphabet().begin(), w.alphabet().end()};
}

// x@from x@(from-1) ... x@to for from >= to.
void append_descending(std::vector<Symbol>& out, const Symbol& x, std::size_t from,
                       std::size_t to) {
  for (std::size_t c = from; c >= to; --c) out.push_back(Symbol::product(x, c));
}

}  // namespace

OccurrenceBasedFunction product_k2_first(const Word& w) {
  auto k = product_uniformity(w);
  return OccurrenceBasedFunction::from_rule(alphabet_set(w), k, [](const Symbol& x, std::size_t i) {
    if (i == 1) return Word({Symbol::product(x, 1)});
    return Word({Symbol::product(x, 2), Symbol::product(x, 1)});
  });
}

OccurrenceBasedFunction product_k2_second(const Word& w) {
  auto k = product_uniformity(w);
  return OccurrenceBasedFunction::from_rule(alphabet_set(w), k, [](const Symbol& x, std::size_t i) {
    if (i == 1) return Word({Symbol::product(x, 2)});
    if (i == 2) return Word({Symbol::product(x, 1), Symbol::product(x, 2)});
    return Word();
  });
}

Word product_k2_word(const Word& w) {
  return product_k2_first(w)(w) + product_k2_second(w)(w);
}

OccurrenceBasedFunction product_kn_factor(const Word& w, std::size_t n, std::size_t j) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "product with K_n needs n >= 2");
  if (j == 0 || j > n) {
    throw Error(ErrorKind::InvalidInput,
                "factor index " + std::to_string(j) + " is outside 1.." + std::to_string(n));
  }
  auto k = product_uniformity(w);
  return OccurrenceBasedFunction::from_rule(
      alphabet_set(w), k, [n, j](const Symbol& x, std::size_t i) {
        std::vector<Symbol> out;
        if (i == 1) {
          out.push_back(Symbol::product(x, j));
        } else if (j == 1) {
          append_descending(out, x, n, 1);
        } else if (i == 2) {
          append_descending(out, x, j - 1, 1);
          append_descending(out, x, n, j);
        }
        return Word(std::move(out));
      });
}

Word product_kn_word(const Word& w, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "product with K_n needs n >= 2");
  product_uniformity(w);
  Word out;
  for (std::size_t j = n; j >= 1; --j) out = out + product_kn_factor(w, n, j)(w);
  return out;
}

Word copies_to_bits(const Word& w) {
  std::vector<Symbol> out;
  out.reserve(w.size());
  for (const auto& s : w) {
    const auto& t = s.str();
    auto at = t.rfind(Symbol::kSeparator);
    if (at == std::string::npos || at + 2 != t.size() || (t[at + 1] != '1' && t[at + 1] != '2')) {
      throw Error(ErrorKind::InvalidInput, "symbol '" + t + "' is not of the form x@1 or x@2");
    }
    out.emplace_back(t.substr(0, at) + (t[at + 1] == '1' ? '0' : '1'));
  }
  return Word(std::move(out));
}

Word cube_word(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidInput, "cube dimension must be >= 1");
  if (k == 1) return Word::parse("0 1");
  // 31421324 represents the 4-cycle 1-2-3-4-1; relabelled along
  // 1 -> 00, 2 -> 10, 3 -> 11, 4 -> 01, which walks the square Q_2.
  Word w = Word::parse("11 00 01 10 00 11 10 01");
  for (std::size_t d = 3; d <= k; ++d) w = copies_to_bits(product_k2_word(w));
  return w;
}

Word complete_word(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) {
    throw Error(ErrorKind::InvalidInput, "complete_word needs n >= 1 and k >= 1");
  }
  auto base = numbered_symbols(n);
  std::vector<Symbol> out;
  out.reserve(n * k);
  for (std::size_t r = 0; r < k; ++r) out.insert(out.end(), base.begin(), base.end());
  return Word(std::move(out));
}

Word cycle_word(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "cycle needs n >= 3");
  // 1 n | 2 1 | 3 2 | ... | n (n-1): consecutive i, i+1 alternate through
  // the shared blocks, and 1, n alternate via the opening pair.
  auto names = numbered_symbols(n);
  std::vector<Symbol> out{names[0], names[n - 1]};
  for (std::size_t i = 1; i < n; ++i) {
    out.push_back(names[i]);
    out.push_back(names[i - 1]);
  }
  Word w(std::move(out));
  if (!represents(w, cycle(n))) {
    throw Error(ErrorKind::ConstructionBug,
                "cycle_word(" + std::to_string(n) + ") failed self-verification");
  }
  return w;
}

Word prism_word(std::size_t n) { return product_k2_word(cycle_word(n)); }

}  // namespace wordrep
