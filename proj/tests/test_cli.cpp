#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

#include "pruned/betti.hpp"
#include "pruned/pruning.hpp"

using namespace pruned;

namespace {

std::string g_binary;

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = g_binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("betti diagram, text and json agree") {
  auto text = run("betti --ideal 'x1*x2, x1*x3, x2*x3'");
  CHECK(text.code == 0);
  CHECK(text.out ==
        "        0  1\n"
        "total:  3  2\n"
        "    2:  3  2\n");
  auto as_json = run("betti --format json --ideal 'x1*x2, x1*x3, x2*x3'");
  CHECK(as_json.code == 0);
  auto j = nlohmann::json::parse(as_json.out);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("command") == "betti");
  auto table = BettiTable::from_json(j.at("table").dump());
  CHECK(table == betti_numbers(parse_ideal("x1*x2, x1*x3, x2*x3")));
}

TEST_CASE("output is byte-deterministic") {
  for (const char* cmd : {"prune --format json --ideal 'x1*x2, x2*x3, x3*x4, x1*x4'",
                          "classify --format json --ideal 'x1^2, x1*x2, x2^2'"}) {
    auto a = run(cmd), b = run(cmd);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("prune reports matching and minimality") {
  auto r = run("prune --format json --ideal 'x1*x2, x1*x3, x2*x3'");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("minimal") == true);
  auto matching = Matching::from_json(j.at("matching").dump());
  REQUIRE(matching.pairs.size() == 1);
  CHECK(matching.pairs[0].lower == 6);
  CHECK(matching.pairs[0].dir == 0);
  // generator order is respected
  auto ordered = run("prune --order 3,2,1 --format json --ideal 'x1*x2, x1*x3, x2*x3'");
  CHECK(ordered.code == 0);
}

TEST_CASE("power subcommand reproduces the square tables") {
  auto r = run("power --r 2 --unpruned --ideal 'x1*x2, x1*x3, x2*x3'");
  CHECK(r.code == 0);
  CHECK(r.out.find("total:  1  6  9  4") != std::string::npos);
  CHECK(r.out.find("total:  1  6  6  1") != std::string::npos);
  CHECK(r.out.find("    3:  .  6  6  1") != std::string::npos);
  CHECK(r.out.find("generators minimal: true") != std::string::npos);
  auto corners = run("power --r 2 --vertex-order corners --ideal 'x1*x2, x1*x3, x2*x3'");
  CHECK(corners.code == 0);
  CHECK(corners.out.find("total:  1  6  6  1") != std::string::npos);
}

TEST_CASE("split subcommand modes") {
  auto cert = run("split --auto cert --format json --ideal 'x1^2, x1*x2, x2^2'");
  CHECK(cert.code == 0);
  auto j = nlohmann::json::parse(cert.out);
  CHECK(j.at("minimal") == true);
  CHECK(j.contains("plan"));
  CHECK(j.contains("matching"));
  auto edge = run("split --auto edge --expect-minimal --ideal "
                  "'x1*x2, x1*x9, x2*x3, x3*x4, x4*x5, x5*x6, x6*x7, x7*x8, x8*x9'");
  CHECK(edge.code == 0);
  CHECK(edge.out.find("minimal: true") != std::string::npos);
  // not vertex splittable -> exit 1
  auto nosplit = run("split --auto cert --ideal 'x1*x2, x3*x4'");
  CHECK(nosplit.code == 1);
}

TEST_CASE("classify emits the predicate block") {
  auto r = run("classify --ideal 'x1^2, x1*x2, x2^2'");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "lexsegment: true\n"
        "strongly stable: true\n"
        "stable: true\n"
        "linear quotients: true (order 1,2,3)\n"
        "vertex splittable: true\n"
        "componentwise linear: true\n");
}

TEST_CASE("minimal-order search") {
  auto r = run("minimal-order --format json --ideal 'x1*x2, x1*x3, x2*x3'");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("status") == "found");
  CHECK(j.contains("order"));
}

TEST_CASE("verify passes on a sane ideal") {
  auto r = run("verify --ideal 'x1*x2, x2*x3, x3*x4, x1*x4, x1*x3'");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "matching: ok\n"
        "complex: ok\n"
        "betti bounds: ok\n"
        "euler characteristic: ok\n");
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);                        // missing subcommand
  CHECK(run("betti").code == 2);                   // no ideal given
  CHECK(run("betti --ideal 'potato'").code == 2);  // parse failure
  CHECK(run("betti --char 4 --ideal 'x1*x2'").code == 2);
  CHECK(run("prune --order 1,1 --ideal 'x1, x2'").code == 2);
  CHECK(run("--help").code == 0);
  // capacity overflow -> 3 (cap forced tiny through the environment)
  std::string save = g_binary;
  g_binary = "PRUNED_CAP_TAYLOR=2 " + g_binary;
  CHECK(run("prune --ideal 'x1, x2, x3'").code == 3);
  g_binary = save;
  // --expect-minimal failure -> 1 (this ideal's sweep is not minimal as given)
  auto r = run("prune --expect-minimal --ideal "
               "'x1*x2*x8*x9*x10, x2*x3*x4*x5*x10, x5*x6*x7*x8*x10, "
               "x1*x4*x5*x6*x9, x1*x2*x3*x6*x7, x3*x4*x7*x8*x9'");
  CHECK(r.code == 1);
}

TEST_CASE("stdin and file input") {
  auto from_stdin = run("betti - < /dev/null");
  CHECK(from_stdin.code == 2);  // empty input
  std::string path = "/tmp/test_cli_ideal.txt";
  FILE* f = fopen(path.c_str(), "w");
  REQUIRE(f);
  fputs("x1*x2, x1*x3, x2*x3\n", f);
  fclose(f);
  auto from_file = run("betti " + path);
  CHECK(from_file.code == 0);
  CHECK(from_file.out.find("total:  3  2") != std::string::npos);
  std::remove(path.c_str());
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  int keep = 1;
  for (int i = 1; i < argc; ++i) {
    if (argv[i][0] != '-' && g_binary.empty())
      g_binary = argv[i];
    else
      argv[keep++] = argv[i];
  }
  ctx.applyCommandLine(keep, argv);
  if (g_binary.empty()) {
    std::fprintf(stderr, "usage: test_cli <path-to-prunedres>\n");
    return 1;
  }
  return ctx.run();
}
