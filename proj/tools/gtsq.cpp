// gtsq: evaluate query documents and run the built-in corpus verification.
//
// Commands:
//   eval <file>     run a query document
//   corpus          run the verification battery
//   print-grammar   print the query grammar
//
// Exit status is 0 iff no query or battery entry failed; 2 on usage or parse errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gts/cli.hpp"

namespace {

struct Options {
  std::string file;
  std::string report_path;
  std::string format = "human";
  gts::Caps caps;
};

int emit(const gts::Report& r, const Options& o) {
  std::string text = o.format == "machine" ? gts::render_machine(r) : gts::render_human(r);
  if (o.report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.report_path, std::ios::binary);
    if (!out) {
      std::cerr << "gtsq: cannot write " << o.report_path << "\n";
      return 2;
    }
    out << text;
    std::cout << r.entries.size() << " entries, " << r.passed() << " passed, " << r.failed() << " failed\n";
  }
  return r.failed() == 0 ? 0 : 1;
}

int run_eval(const Options& o) {
  std::ifstream in(o.file, std::ios::binary);
  if (!in) {
    std::cerr << "gtsq: cannot read " << o.file << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  gts::ParseResult parsed = gts::parse_query_doc(buf.str());
  if (!parsed.doc) {
    std::cerr << o.file << ":" << gts::to_string(*parsed.error) << "\n";
    return 2;
  }
  return emit(gts::run(*parsed.doc, o.caps), o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gtsq: exact queries over generalized topologies on the real line"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--caps-chain", o.caps.chain, "index cap N for chain checks")->check(CLI::PositiveNumber);
    sub->add_option("--caps-depth", o.caps.depth, "generation depth cap K")->check(CLI::Range(1L, 16L));
    sub->add_option("--report", o.report_path, "write the report to this path");
    sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"human", "machine"}));
  };

  CLI::App* eval = app.add_subcommand("eval", "run a query document");
  eval->add_option("file", o.file, "query document")->required();
  add_common(eval);
  CLI::App* corpus = app.add_subcommand("corpus", "run the built-in verification battery");
  add_common(corpus);
  CLI::App* grammar = app.add_subcommand("print-grammar", "print the query grammar");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*grammar) {
    std::cout << gts::grammar_text();
    return 0;
  }
  if (*eval) return run_eval(o);
  return emit(gts::corpus_verify(o.caps), o);
}
