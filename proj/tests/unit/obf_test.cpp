#include <gtest/gtest.h>

#include <sstream>

#include "wordrep/constructions.hpp"
#include "wordrep/error.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/obf.hpp"
#include "wordrep/random_words.hpp"

namespace wordrep {
namespace {

const Word kSquare = Word::parse("3 1 4 2 1 3 2 4");

std::set<Symbol> alphabet_of(const Word& w) { return {w.alphabet().begin(), w.alphabet().end()}; }

TEST(IndexSetTest, Validation) {
  EXPECT_THROW(IndexSet(std::set<std::size_t>{}), Error);
  EXPECT_THROW((IndexSet{0, 1}), Error);
  EXPECT_EQ(IndexSet::full(3), (IndexSet{1, 2, 3}));
  EXPECT_EQ(IndexSet::range(2, 3).size(), 2u);
}

TEST(ObfTest, ApplyUnfoldsTable) {
  auto w = Word::parse("1 2 1 2");
  // First factor of the K2 product with k = 2.
  EXPECT_EQ(product_k2_first(w)(w), Word::parse("1@1 2@1 1@2 1@1 2@2 2@1"));

  auto identity = OccurrenceBasedFunction::from_rule(
      alphabet_of(kSquare), 2, [](const Symbol& x, std::size_t) { return Word({x}); });
  EXPECT_EQ(identity(kSquare), kSquare);

  auto erase = OccurrenceBasedFunction::from_rule(
      alphabet_of(kSquare), 2, [](const Symbol&, std::size_t) { return Word(); });
  EXPECT_TRUE(erase(kSquare).empty());
}

TEST(ObfTest, LengthIsSumOfImageLengths) {
  Rng rng(21);
  for (int iter = 0; iter < 50; ++iter) {
    auto w = random_uniform_word(4, 3, rng);
    auto h = OccurrenceBasedFunction::from_rule(
        alphabet_of(w), 3, [&rng](const Symbol& x, std::size_t i) {
          std::vector<Symbol> img(rng() % 3, Symbol::product(x, i));
          return Word(img);
        });
    std::size_t expected = 0;
    for (const auto& occ : label(w)) expected += h.image(occ.symbol, occ.index).size();
    ASSERT_EQ(h(w).size(), expected);
  }
}

TEST(ObfTest, DomainViolations) {
  auto h = projection(IndexSet{1}, alphabet_of(kSquare), 2);
  try {
    h(Word::parse("1 9"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainViolation);
  }
  try {
    h(Word::parse("1 1 1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainViolation);
  }
}

TEST(ObfTest, TableMustBeTotal) {
  std::map<OccurrenceBasedFunction::Key, Word> table{{{Symbol("a"), 1}, Word()}};
  EXPECT_THROW(OccurrenceBasedFunction({Symbol("a")}, 2, table), Error);
  EXPECT_THROW(OccurrenceBasedFunction({Symbol("a")}, 0, {}), Error);
  table[{Symbol("b"), 1}] = Word();
  EXPECT_THROW(OccurrenceBasedFunction({Symbol("a")}, 1, table), Error);
}

TEST(ProjectionTest, Examples) {
  auto alpha = alphabet_of(kSquare);
  EXPECT_EQ(projection(IndexSet{1}, alpha, 2)(kSquare), Word::parse("3 1 4 2"));
  EXPECT_EQ(projection(IndexSet{2}, alpha, 2)(kSquare), Word::parse("1 3 2 4"));
  EXPECT_EQ(projection(IndexSet::full(2), alpha, 2)(kSquare), kSquare);
  EXPECT_EQ(project(kSquare, IndexSet{2}), Word::parse("1 3 2 4"));
  EXPECT_THROW(projection(IndexSet{3}, alpha, 2), Error);
}

TEST(ProjectionTest, UniformityAndPairShape) {
  Rng rng(8);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t k = 2 + iter % 3;
    auto w = random_uniform_word(4, k, rng);
    auto sets = random_chain_sets(k, 2, rng);
    const auto& a = sets.front();
    auto p = projection(a, alphabet_of(w), k)(w);
    ASSERT_EQ(uniformity(p), a.size());
    for (const auto& x : w.alphabet()) {
      for (const auto& y : w.alphabet()) {
        if (x == y) continue;
        std::vector<Symbol> full, part;
        for (std::size_t i = 0; i < k; ++i) full.insert(full.end(), {x, y});
        for (std::size_t i = 0; i < a.size(); ++i) part.insert(part.end(), {x, y});
        if (restrict(w, {x, y}) == Word(full)) ASSERT_EQ(restrict(p, {x, y}), Word(part));
      }
    }
  }
}

TEST(ChainConcatTest, Examples) {
  auto w = Word::parse("1 2 1 2");
  auto out = lemma1_concat(w, {IndexSet{1, 2}, IndexSet{2}});
  EXPECT_EQ(out, Word::parse("1 2 1 2 1 2"));
  EXPECT_EQ(uniformity(out), 3u);
  EXPECT_EQ(graph_of_word(out), complete(2));

  EXPECT_EQ(lemma1_concat(kSquare, {IndexSet::full(2), IndexSet::full(2)}), kSquare + kSquare);

  try {
    lemma1_concat(w, {IndexSet{1}, IndexSet{2}});
    FAIL();
  } catch (const ChainConditionError& e) {
    EXPECT_EQ(e.uncovered(), 1u);
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionFailure);
  }
}

TEST(ChainConcatTest, InputValidation) {
  EXPECT_THROW(lemma1_concat(Word::parse("1 1 2"), {IndexSet{1}, IndexSet{1}}), Error);
  EXPECT_THROW(lemma1_concat(kSquare, {IndexSet{1, 2}}), Error);
  EXPECT_THROW(lemma1_concat(kSquare, {IndexSet{1, 2}, IndexSet{3}}), Error);
  // k = 1: the chain condition is vacuous.
  EXPECT_EQ(lemma1_concat(Word::parse("1 2"), {IndexSet{1}, IndexSet{1}}), Word::parse("1 2 1 2"));
}

TEST(ChainConcatTest, PreservesGraphOnRandomInputs) {
  Rng rng(99);
  for (int iter = 0; iter < 300; ++iter) {
    std::size_t k = 1 + iter % 4;
    auto w = random_uniform_word(1 + iter % 5, k, rng);
    auto sets = random_chain_sets(k, 4, rng);
    auto out = lemma1_concat(w, sets);
    std::size_t total = 0;
    for (const auto& a : sets) total += a.size();
    ASSERT_EQ(uniformity(out), total);
    ASSERT_EQ(graph_of_word(out), graph_of_word(w)) << w;
  }
}

TEST(ChainConcatTest, ReportsSmallestUncoveredIndex) {
  Rng rng(4);
  for (int iter = 0; iter < 100; ++iter) {
    std::size_t k = 2 + iter % 3;
    auto w = random_uniform_word(3, k, rng);
    auto sets = random_broken_chain_sets(k, 4, rng);
    std::size_t expected = 0;
    for (std::size_t j = 1; j < k && !expected; ++j) {
      bool covered = false;
      for (const auto& a : sets) covered |= a.contains(j) && a.contains(j + 1);
      if (!covered) expected = j;
    }
    ASSERT_NE(expected, 0u);
    try {
      lemma1_concat(w, sets);
      FAIL();
    } catch (const ChainConditionError& e) {
      ASSERT_EQ(e.uncovered(), expected);
    }
  }
}

TEST(ExtendUniformTest, Examples) {
  EXPECT_EQ(extend_uniform(Word::parse("1 2 1 2"), 1), Word::parse("1 2 1 2 1 2"));
  EXPECT_EQ(extend_uniform(Word::parse("1 2"), 1), Word::parse("1 2 1 2"));
  auto w = extend_uniform(kSquare, 2);
  EXPECT_EQ(w, Word::parse("1 3 2 4 3 1 4 2 1 3 2 4"));
  EXPECT_EQ(uniformity(w), 3u);
  EXPECT_EQ(graph_of_word(w), cycle(4));
  EXPECT_THROW(extend_uniform(kSquare, 0), Error);
  EXPECT_THROW(extend_uniform(kSquare, 3), Error);
}

TEST(ExtendUniformTest, PreservesGraph) {
  Rng rng(17);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t k = 1 + iter % 4;
    auto w = random_uniform_word(5, k, rng);
    auto i = 1 + rng() % k;
    auto out = extend_uniform(w, i);
    ASSERT_EQ(uniformity(out), k + 1);
    ASSERT_EQ(graph_of_word(out), graph_of_word(w));
  }
}

TEST(ObfSerializationTest, RoundTrip) {
  auto w = Word::parse("1 2 1 2");
  auto f = product_k2_second(w);
  std::stringstream text;
  write_obf(text, f);
  EXPECT_NE(text.str().find("k=2\n"), std::string::npos);
  EXPECT_NE(text.str().find("1 2 -> 1@1 1@2\n"), std::string::npos);
  auto back = read_obf(text);
  EXPECT_EQ(back.bound(), 2u);
  EXPECT_EQ(back.table(), f.table());
  EXPECT_EQ(back(w), f(w));
}

TEST(ObfSerializationTest, RejectsMalformed) {
  for (const char* bad : {"1 1 -> a\n", "k=0\n", "k=2\n1 1 -> a\n", "k=1\nx -> a\n",
                          "k=1\n1 1 -> a\n1 1 -> b\n", "k=1\n1 1 a\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_obf(in), Error) << bad;
  }
  std::istringstream ok("k=1\n# empty image allowed\nx 1 ->\n");
  EXPECT_TRUE(read_obf(ok)(Word::parse("x")).empty());
}

}  // namespace
}  // namespace wordrep
