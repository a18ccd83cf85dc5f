#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dichord/cli.hpp"
#include "dichord/fixtures.hpp"
#include "dichord/text_format.hpp"

using namespace dichord;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "dichord");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DICHORD_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("chordal on the figure 1(a) file") {
  const Run r = run({"chordal", "--input", data("fig1_a.txt")});
  CHECK(r.code == kExitProperty);
  CHECK(r.out.find("chordal: no") != std::string::npos);
  CHECK(r.out.find("stuck on:") != std::string::npos);
}

TEST_CASE("global flags may follow the subcommand") {
  const Run r = run({"chordal", "--format", "json"}, to_text(fixtures::tt3()));
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("\"verdict\": \"chordal\"") != std::string::npos);
  const Run before = run({"--format", "json", "chordal"}, to_text(fixtures::tt3()));
  CHECK(before.out == r.out);
}

TEST_CASE("characterize") {
  const Run fig = run({"characterize", "--class", "semicomplete", "--input", data("fig1_c.txt")});
  CHECK(fig.code == kExitProperty);
  CHECK(fig.out.find("Fig1C") != std::string::npos);

  const Run ok = run({"characterize", "--class", "lsd"}, to_text(fixtures::tt3()));
  CHECK(ok.code == kExitOk);

  const Run outside = run({"characterize", "--class", "semicomplete"}, to_text(fixtures::c4o()));
  CHECK(outside.code == kExitProperty);
  CHECK(outside.out.find("not Semicomplete") != std::string::npos);
  CHECK(outside.out.find("witness:") != std::string::npos);

  const Run bad_class = run({"characterize", "--class", "nope"}, to_text(fixtures::tt3()));
  CHECK(bad_class.code == kExitUsage);
}

TEST_CASE("input errors") {
  const Run parse = run({"classify"}, "3\n0 1\n1 1\n");
  CHECK(parse.code == kExitUsage);
  CHECK(parse.err.find("line 3") != std::string::npos);

  const Run missing = run({"classify", "--input", "/nonexistent/file.txt"});
  CHECK(missing.code == kExitUsage);

  const Run no_command = run({});
  CHECK(no_command.code == kExitUsage);

  const Run help = run({"--help"});
  CHECK(help.code == kExitOk);
}

TEST_CASE("decompose") {
  const Run leaf = run({"decompose"}, to_text(fixtures::tt3()));
  CHECK(leaf.code == kExitOk);
  CHECK(leaf.out.find("leaf TransitiveOriented") != std::string::npos);
  const Run outside = run({"decompose"}, to_text(fixtures::c4o()));
  CHECK(outside.code == kExitProperty);
  CHECK(outside.out.find("WeaklyQuasiTransitive") != std::string::npos);
}

TEST_CASE("generate then classify") {
  const Run gen = run({"generate", "--class", "wqt", "--n", "10", "--seed", "7"});
  REQUIRE(gen.code == kExitOk);
  const Run again = run({"generate", "--class", "wqt", "--n", "10", "--seed", "7"});
  CHECK(again.out == gen.out);
  const Run cls = run({"classify"}, gen.out);
  CHECK(cls.code == kExitOk);
  CHECK(cls.out.find("WeaklyQuasiTransitive yes") != std::string::npos);

  for (const char* c : {"semicomplete", "symmetric", "transitive-oriented", "qt", "lsd", "uniform"}) {
    CHECK(run({"generate", "--class", c, "--n", "6", "--seed", "1"}).code == kExitOk);
  }
  CHECK(run({"generate", "--class", "lsd", "--n", "9", "--strategy", "rejection"}).code == kExitUsage);
  CHECK(run({"generate", "--class", "wqt"}).code == kExitUsage);
}

TEST_CASE("verify") {
  const Run t24 = run({"verify", "--theorem", "t24", "--max-n", "4"});
  CHECK(t24.code == kExitOk);
  CHECK(t24.out.find("discrepancies: 0") != std::string::npos);

  const Run sampled = run({"verify", "--theorem", "lemma22", "--samples", "500", "--seed", "3"});
  CHECK(sampled.code == kExitOk);
  const Run again = run({"verify", "--theorem", "lemma22", "--samples", "500", "--seed", "3"});
  const auto strip_time = [](const std::string& s) { return s.substr(0, s.find("wall time")); };
  CHECK(strip_time(again.out) == strip_time(sampled.out));

  CHECK(run({"verify", "--theorem", "t24"}).code == kExitUsage);
  CHECK(run({"verify", "--theorem", "t24", "--max-n", "6"}).code == kExitUsage);
  CHECK(run({"verify", "--theorem", "t24", "--max-n", "3", "--samples", "5"}).code == kExitUsage);
  CHECK(run({"verify", "--theorem", "nope", "--max-n", "3"}).code == kExitUsage);

  const Run json = run({"verify", "--theorem", "t11", "--max-n", "3", "--format", "json"});
  CHECK(json.out.find("\"verdict\": \"holds\"") != std::string::npos);
}

TEST_CASE("enumerate") {
  const Run count = run({"enumerate", "--n", "3", "--count"});
  CHECK(count.out == "64\n");
  const Run all = run({"enumerate", "--n", "2"});
  CHECK(all.code == kExitOk);
  CHECK(all.out.find("# index 3") != std::string::npos);
  CHECK(run({"enumerate", "--n", "6", "--count"}).code == kExitUsage);
}
