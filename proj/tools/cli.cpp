#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "selftest.hpp"
#include "wordrep/wordrep.hpp"

namespace wordrep::cli {

namespace {

// Holds either a borrowed stdin stream or an owned file stream.
class Input {
 public:
  Input(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") {
      stream_ = &stdin_stream;
      return;
    }
    file_ = std::make_unique<std::ifstream>(path);
    if (!*file_) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    stream_ = file_.get();
  }

  std::istream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_ = nullptr;
};

GraphFormat parse_format(const std::string& name) {
  return name == "json" ? GraphFormat::Json : GraphFormat::Edges;
}

Graph read_graph_arg(const std::string& path, const std::string& format, std::istream& in) {
  GraphFormat f = format == "auto"
                      ? (path == "-" ? GraphFormat::Edges : format_for_path(path))
                      : parse_format(format);
  Input input(path, in);
  return read_graph(input.get(), f);
}

Word read_word_arg(const std::string& path, std::istream& in) {
  Input input(path, in);
  return read_word(input.get());
}

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::ConstructionBug ? kNo : kError;
}

struct SearchFlags {
  std::size_t budget = 24;
  bool automorphisms = false;
  bool reversal = false;
  std::size_t threads = 1;
  std::optional<long> time_limit_ms;
  bool no_timing = false;

  void attach(CLI::App* app) {
    app->add_option("--budget", budget, "Largest nodes*k the search attempts")
        ->capture_default_str();
    app->add_flag("--automorphisms", automorphisms,
                  "Reduce first-letter choices by automorphism orbits");
    app->add_flag("--reversal", reversal, "Keep one of each word/reversal pair");
    app->add_option("--threads", threads, "Worker threads")->capture_default_str()
        ->check(CLI::PositiveNumber);
    app->add_option("--time-limit", time_limit_ms, "Per-k time limit in milliseconds")
        ->check(CLI::PositiveNumber);
    app->add_flag("--no-timing", no_timing, "Report millis as 0 for byte-stable output");
  }

  SearchOptions options() const {
    SearchOptions o;
    o.budget = budget;
    o.automorphism_reduction = automorphisms;
    o.reversal_reduction = reversal;
    o.threads = threads;
    if (time_limit_ms) o.time_limit = std::chrono::milliseconds(*time_limit_ms);
    return o;
  }

  std::string json(SearchOutcome outcome) const {
    if (no_timing) outcome.stats.millis = 0;
    return to_json(outcome);
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Word-representable graphs: constructions, verification and search", "wordrep"};
  app.require_subcommand(1);

  // gen
  std::string gen_format = "edges";
  std::size_t gen_n = 0, gen_k = 0;
  std::vector<std::string> gen_factors;
  auto* gen = app.add_subcommand("gen", "Emit a standard graph");
  gen->add_option("--format", gen_format, "edges or json")
      ->check(CLI::IsMember({"edges", "json"}))->capture_default_str();
  gen->require_subcommand(1);
  gen->fallthrough();
  auto* gen_complete = gen->add_subcommand("complete", "Complete graph K_n");
  gen_complete->add_option("-n", gen_n, "Number of nodes")->required();
  auto* gen_cycle = gen->add_subcommand("cycle", "Cycle C_n");
  gen_cycle->add_option("-n", gen_n, "Number of nodes")->required();
  auto* gen_cube = gen->add_subcommand("cube", "Hypercube Q_k");
  gen_cube->add_option("-k", gen_k, "Dimension")->required();
  auto* gen_prism = gen->add_subcommand("prism", "Prism C_n x K_2");
  gen_prism->add_option("-n", gen_n, "Cycle length")->required();
  auto* gen_product = gen->add_subcommand("product", "Cartesian product of two graph files");
  gen_product->add_option("graphs", gen_factors, "Two graph files (.edges or .json)")
      ->required()->expected(2);

  // construct
  bool verify = false;
  std::size_t con_n = 0, con_k = 1;
  std::string con_word = "-";
  auto* construct = app.add_subcommand("construct", "Emit a representing word");
  construct->add_flag("--verify", verify, "Check the word against the expected graph");
  construct->require_subcommand(1);
  construct->fallthrough();
  auto* con_cube = construct->add_subcommand("cube", "k-uniform word for Q_k");
  con_cube->add_option("-k", con_k, "Dimension")->required();
  auto* con_prism = construct->add_subcommand("prism", "3-uniform word for the n-prism");
  con_prism->add_option("-n", con_n, "Cycle length")->required();
  auto* con_complete = construct->add_subcommand("complete", "(1 2 ... n)^k");
  con_complete->add_option("-n", con_n, "Number of nodes")->required();
  con_complete->add_option("-k", con_k, "Repetitions")->capture_default_str();
  auto* con_k2 = construct->add_subcommand("product-k2", "f(w) g(w) for G x K_2");
  con_k2->add_option("word", con_word, "Word file, '-' for stdin")->capture_default_str();
  auto* con_kn = construct->add_subcommand("product-kn", "f_n(w) ... f_1(w) for G x K_n");
  con_kn->add_option("-n", con_n, "Number of copies")->required();
  con_kn->add_option("word", con_word, "Word file, '-' for stdin")->capture_default_str();

  // check
  std::string check_word, check_graph, check_format = "auto";
  bool explain = false;
  auto* check = app.add_subcommand("check", "Exit 0 iff the word represents the graph");
  check->add_option("word", check_word, "Word file, '-' for stdin")->required();
  check->add_option("graph", check_graph, "Graph file, '-' for stdin")->required();
  check->add_option("--graph-format", check_format, "auto, edges or json")
      ->check(CLI::IsMember({"auto", "edges", "json"}))->capture_default_str();
  check->add_flag("--explain", explain, "Print the first violating pair");

  // search / repnum
  std::string search_graph, search_format = "auto";
  std::size_t search_k = 0, max_k = 3;
  SearchFlags flags;
  auto* search = app.add_subcommand("search", "Decide k-representability exhaustively");
  search->add_option("graph", search_graph, "Graph file, '-' for stdin")->required();
  search->add_option("-k", search_k, "Uniformity")->required()->check(CLI::PositiveNumber);
  search->add_option("--graph-format", search_format, "auto, edges or json")
      ->check(CLI::IsMember({"auto", "edges", "json"}));
  flags.attach(search);
  auto* repnum = app.add_subcommand("repnum", "Smallest k with a k-uniform representant");
  repnum->add_option("graph", search_graph, "Graph file, '-' for stdin")->required();
  repnum->add_option("--max-k", max_k, "Largest k tried")->capture_default_str()
      ->check(CLI::PositiveNumber);
  repnum->add_option("--graph-format", search_format, "auto, edges or json")
      ->check(CLI::IsMember({"auto", "edges", "json"}));
  flags.attach(repnum);

  // obf
  std::string obf_word = "-", obf_table;
  std::size_t obf_n = 2;
  std::vector<std::size_t> obf_keep;
  auto* obf = app.add_subcommand("obf", "Print or apply occurrence-based function tables");
  obf->require_subcommand(1);
  auto* obf_k2 = obf->add_subcommand("product-k2", "Tables f and g for a word");
  obf_k2->add_option("word", obf_word, "Word file, '-' for stdin");
  auto* obf_kn = obf->add_subcommand("product-kn", "Tables f_n ... f_1 for a word");
  obf_kn->add_option("-n", obf_n, "Number of copies")->required();
  obf_kn->add_option("word", obf_word, "Word file, '-' for stdin");
  auto* obf_proj = obf->add_subcommand("projection", "Table of p_A over a word's alphabet");
  obf_proj->add_option("--keep", obf_keep, "Kept occurrence indices (repeat or comma-separate)")
      ->required()->delimiter(',')->allow_extra_args(false);
  obf_proj->add_option("word", obf_word, "Word file, '-' for stdin");
  auto* obf_apply = obf->add_subcommand("apply", "Apply a table file to a word");
  obf_apply->add_option("table", obf_table, "Table file")->required();
  obf_apply->add_option("word", obf_word, "Word file, '-' for stdin");

  // selftest
  SelftestConfig selftest_config;
  auto* selftest = app.add_subcommand("selftest", "Seeded randomized property replay");
  selftest->add_option("--seed", selftest_config.seed, "RNG seed")->capture_default_str();
  selftest->add_option("--iterations", selftest_config.iterations, "Cases per property")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run 'wordrep --help' for usage\n";
    return kError;
  }

  try {
    if (gen->parsed()) {
      Graph g;
      if (gen_complete->parsed()) g = complete(gen_n);
      if (gen_cycle->parsed()) g = cycle(gen_n);
      if (gen_cube->parsed()) g = cube(gen_k);
      if (gen_prism->parsed()) g = cartesian_product(cycle(gen_n), complete(2));
      if (gen_product->parsed()) {
        g = cartesian_product(read_graph_arg(gen_factors[0], "auto", in),
                              read_graph_arg(gen_factors[1], "auto", in));
      }
      write_graph(out, g, parse_format(gen_format));
      return kOk;
    }

    if (construct->parsed()) {
      Word w;
      Graph expected;
      if (con_cube->parsed()) {
        w = cube_word(con_k);
        if (verify) expected = cube(con_k);
      } else if (con_prism->parsed()) {
        w = prism_word(con_n);
        if (verify) expected = cartesian_product(cycle(con_n), complete(2));
      } else if (con_complete->parsed()) {
        w = complete_word(con_n, con_k);
        if (verify) expected = complete(con_n);
      } else {
        auto base = read_word_arg(con_word, in);
        auto copies = con_k2->parsed() ? std::size_t{2} : con_n;
        w = con_k2->parsed() ? product_k2_word(base) : product_kn_word(base, con_n);
        if (verify) expected = cartesian_product(graph_of_word(base), complete(copies));
      }
      if (verify) {
        if (auto mismatch = find_mismatch(w, expected)) {
          err << "verification FAILED: " << mismatch->describe() << "\n";
          return kNo;
        }
        err << "verified: word represents the expected graph ("
            << expected.node_count() << " nodes, " << expected.edge_count() << " edges)\n";
      }
      write_word(out, w);
      return kOk;
    }

    if (check->parsed()) {
      if (check_word == "-" && check_graph == "-") {
        throw Error(ErrorKind::ParseError, "word and graph cannot both be read from stdin");
      }
      auto w = read_word_arg(check_word, in);
      auto g = read_graph_arg(check_graph, check_format, in);
      auto mismatch = find_mismatch(w, g);
      if (!mismatch) return kOk;
      if (explain) out << mismatch->describe() << "\n";
      return kNo;
    }

    if (search->parsed()) {
      auto g = read_graph_arg(search_graph, search_format, in);
      auto outcome = is_k_representable(g, search_k, flags.options());
      out << flags.json(outcome) << "\n";
      switch (outcome.result) {
        case SearchResult::Witness: return kOk;
        case SearchResult::Exhausted: return kNo;
        case SearchResult::ResourceLimit: return kError;
      }
    }

    if (repnum->parsed()) {
      auto g = read_graph_arg(search_graph, search_format, in);
      auto options = flags.options();
      for (std::size_t k = 1; k <= max_k; ++k) {
        auto outcome = is_k_representable(g, k, options);
        out << flags.json(outcome) << "\n";
        if (outcome.result == SearchResult::Witness) {
          out << "{\"repnum\":" << k << ",\"word\":\"" << outcome.witness->to_string() << "\"}\n";
          return kOk;
        }
        if (outcome.result == SearchResult::ResourceLimit) {
          err << "resource limit at k=" << k << ": " << outcome.note << "\n";
          return kError;
        }
      }
      out << "{\"repnum\":null,\"message\":\"unknown above k_max=" << max_k << "\"}\n";
      return kNo;
    }

    if (obf->parsed()) {
      if (obf_apply->parsed()) {
        std::ifstream table(obf_table);
        if (!table) throw Error(ErrorKind::ParseError, "cannot open '" + obf_table + "'");
        auto h = read_obf(table);
        write_word(out, h(read_word_arg(obf_word, in)));
        return kOk;
      }
      auto w = read_word_arg(obf_word, in);
      if (obf_k2->parsed()) {
        out << "# f\n";
        write_obf(out, product_k2_first(w));
        out << "# g\n";
        write_obf(out, product_k2_second(w));
      } else if (obf_kn->parsed()) {
        for (std::size_t j = obf_n; j >= 1; --j) {
          out << "# f_" << j << "\n";
          write_obf(out, product_kn_factor(w, obf_n, j));
        }
      } else {
        IndexSet keep(std::set<std::size_t>(obf_keep.begin(), obf_keep.end()));
        std::set<Symbol> alphabet(w.alphabet().begin(), w.alphabet().end());
        write_obf(out, projection(keep, alphabet, std::max(w.max_count(), keep.max())));
      }
      return kOk;
    }

    if (selftest->parsed()) return run_selftest(selftest_config, out) ? kOk : kNo;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kError;
}

}  // namespace wordrep::cli
