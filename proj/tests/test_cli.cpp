#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "cli.hpp"
#include "homflytop/io.hpp"
#include "support.hpp"

using homflytop::cli::run_command_line;
using homflytop::testing::data_path;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command_line(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("verify on K_{3,2}") {
    const auto r = run({"verify", "--input", data_path("k32.json")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "top = 1*v^2 + 2*v^4"));
    CHECK(contains(r.out, "p = 1 + 2*u^1"));
    CHECK(contains(r.out, "h = 2*x^3 + 1*x^4"));
    CHECK(contains(r.out, "root choices checked: 6"));
    CHECK(contains(r.out, "PASS"));

    const auto j = run({"verify", "--input", data_path("k32.json"), "--format", "json"});
    CHECK(j.code == 0);
    const auto doc = json::parse(j.out);
    CHECK(doc["status"] == "pass");
    CHECK(doc["failures"].empty());
    CHECK(doc["root_choices"] == 6);
  }

  TEST_CASE("verify on the single edge") {
    const auto r = run({"verify", "-i", data_path("single_edge.json")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "top = 1 "));
  }

  TEST_CASE("homfly on K_{3,2}") {
    const auto r = run({"homfly", "-i", data_path("k32.json")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "P = 1*v^4*z^-2 + -2*v^6*z^-2 + 1*v^8*z^-2 + 3*v^4 + -3*v^6 + 1*v^2*z^2 + 2*v^4*z^2"));
    CHECK(contains(r.out, "conway = 3*z^2"));
    CHECK(contains(r.out, "alexander = 3*t^-1 + -6 + 3*t^1"));
  }

  TEST_CASE("every command on every fixture") {
    for (const std::string fixture : {"single_edge.json", "bigon.json", "theta.json", "k32.json", "hopf_sum.json"}) {
      for (const auto& command : homflytop::cli::commands()) {
        if (command == "gen") continue;
        for (const std::string format : {"text", "json", "dot"}) {
          const auto r = run({command, "-i", data_path(fixture), "--format", format, "--all-roots"});
          INFO(command, " ", fixture, " ", format, " ", r.err);
          if (format == "dot" && r.code == 2) {
            CHECK(contains(r.err, "not available"));
            continue;
          }
          CHECK(r.code == 0);
          CHECK_FALSE(r.out.empty());
          if (format == "json") CHECK(json::accept(r.out));
        }
      }
    }
  }

  TEST_CASE("parking csv") {
    const auto r = run({"parking", "-i", data_path("k32.json"), "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "exponent,coefficient\n0,1\n1,2\n");
  }

  TEST_CASE("root overrides") {
    const auto ok = run({"top", "-i", data_path("k32.json"), "--kappa", "1"});
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "kappa=1"));
    const auto bad = run({"top", "-i", data_path("k32.json"), "--r0", "0", "--kappa", "0"});
    CHECK(bad.code == 2);
    CHECK(json::parse(bad.err)["status"] == "input-error");
  }

  TEST_CASE("input errors exit with 2") {
    CHECK(run({"verify", "-i", data_path("missing.json")}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"homfly", "-i", data_path("k32.json"), "--cap", "3"}).code == 2);
    CHECK(run({"faces", "-i", data_path("k32.json"), "--format", "csv"}).code == 2);
    CHECK(run({"verify", "-i", data_path("k32.json"), "--format", "yaml"}).code == 2);
  }

  TEST_CASE("help exits cleanly") { CHECK(run({"--help"}).code == 0); }

  TEST_CASE("gen is deterministic and its graphs verify") {
    const auto a = run({"gen", "--count", "5", "--seed", "17", "--max-edges", "7"});
    const auto b = run({"gen", "--count", "5", "--seed", "17", "--max-edges", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != run({"gen", "--count", "5", "--seed", "18", "--max-edges", "7"}).out);
    std::istringstream lines(a.out);
    std::string line;
    int graphs = 0;
    while (std::getline(lines, line)) {
      const auto doc = homflytop::parse_graph_document(line);
      CHECK(doc.graph.num_edges() <= 7);
      ++graphs;
    }
    CHECK(graphs == 5);
  }
}
