#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

  struct Run {
    int         code;
    std::string out;
  };

  Run fsg(std::string const& args) {
    std::string cmd = std::string(FSG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE*       p   = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string           out;
    std::array<char, 4096> buf{};
    std::size_t           n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) {
      out.append(buf.data(), n);
    }
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }

  nlohmann::json as_json(Run const& r) {
    return nlohmann::json::parse(r.out);
  }

}  // namespace

TEST_CASE("word problem exit codes") {
  CHECK(fsg("wp --rank 2 --class 2 --word abAB").code == 1);
  CHECK(fsg("wp --rank 2 --class 1 --word abAB").code == 0);
  CHECK(fsg("wp --rank 2 --word aA").code == 0);
  CHECK(fsg("wp --rank 2 --class 2 --word abAB").out == "nontrivial\n");
  CHECK(fsg("wp --rank 3 --class 2 --word 'abABacAC' --json").out
        == "{\"class\":2,\"trivial\":false}\n");
}

TEST_CASE("usage errors") {
  CHECK(fsg("wp --rank 2 --word c").code == 2);
  CHECK(fsg("wp --word ab").code == 2);
  CHECK(fsg("wp --rank 2").code == 2);
  CHECK(fsg("frobnicate").code == 2);
  CHECK(fsg("").code == 2);
  CHECK(fsg("wp --rank 2 --word ab --word-file /nonexistent").code == 2);
  CHECK(fsg("wp --rank 2 --word-file /nonexistent").code == 2);
  CHECK(fsg("rstp --points '0,0;0,0'").code == 2);
  CHECK(fsg("bglp --rank 2 --word ab --bound -1").code == 2);
  CHECK(fsg("--help").code == 0);
}

TEST_CASE("geodesic output") {
  CHECK(as_json(fsg("geodesic --rank 2 --word aA --json"))
        == nlohmann::json{{"word", ""},
                          {"length", 0},
                          {"exact", true},
                          {"forest_edges", nlohmann::json::array()}});
  auto r = as_json(fsg("geodesic --rank 2 --word bababABBBA --json"));
  CHECK(r["length"] == 10);
  CHECK(fsg("bglp --rank 2 --word abAB --bound 4").code == 0);
  CHECK(fsg("bglp --rank 2 --word abAB --bound 3").code == 1);
}

TEST_CASE("Steiner commands") {
  CHECK(fsg("rstp --points '0,0;2,0;1,2' --bound 5").code == 0);
  CHECK(fsg("rstp --points '0,0;2,0;1,2' --bound 4").code == 1);
  auto s = as_json(fsg("rstp --points '0,0;2,0;1,2' --json"));
  CHECK(s["size"] == 4);
  CHECK(s["tree_edges"].size() == 4);
  CHECK(fsg("rstp --points '0,0;1,0' --encode").out.size() == 48 + 1);
  CHECK(fsg("rstp --points '0,0;1,1;2,2' --exact-limit 2").code == 3);
  // Above the limit the spanning-tree bounds still settle easy bounds.
  CHECK(fsg("rstp --points '0,0;1,1;2,2' --bound 5 --exact-limit 2").code == 0);
}

TEST_CASE("Fox, Magnus and flow commands") {
  auto fox = fsg("fox --rank 2 --word bababABBBA");
  CHECK(fox.out
        == "d/dx1 = -1 + x2 + x1*x2^2 - x1*x2^3\n"
           "d/dx2 = 1 - x1 - x1*x2^2 + x1^2*x2^2\n");
  CHECK(fsg("fox --rank 2 --word abAB --gen 2").out == "d/dx2 = -1 + x1\n");
  CHECK(fsg("fox --rank 2 --word aA --class 2").out
        == "d/dx1 = 0\nd/dx2 = 0\n");
  CHECK(fsg("magnus --rank 2 --word ab").out
        == "diagonal (1,1)\nrow 1 1\nrow 2 x1\n");
  auto m = as_json(fsg("magnus --rank 2 --class 3 --word abAB --json"));
  CHECK(m["class"] == 3);
  CHECK(m["rows"].size() == 2);

  auto flow = fsg("flow --rank 2 --word abAB --json");
  CHECK(as_json(flow)["edges"].size() == 4);
  std::string path = "cli_flow_roundtrip.json";
  std::ofstream(path) << flow.out;
  CHECK(fsg("flow --realize " + path).out == "abAB\n");
  CHECK(fsg("flow --rank 2 --word '' ").out == "source (0,0)\nsink (0,0)\n");
}

TEST_CASE("determinism") {
  for (std::string args : {"geodesic --rank 3 --word abcABCcbaCBA --json",
                           "fox --rank 2 --class 3 --word abAABBab --json",
                           "rstp --points '0,0;3,1;1,3;2,2' --json",
                           "bench --suite metabelian --sizes 100 200 --seeds 2 --seed 9"}) {
    auto a = fsg(args);
    auto b = fsg(args);
    CHECK(a.code == 0);
    if (args.rfind("bench", 0) == 0) {
      // Timing columns vary between runs; sizes and trivial counts do not.
      CHECK(a.out.substr(0, a.out.find('\n')) == b.out.substr(0, b.out.find('\n')));
    } else {
      CHECK(a.out == b.out);
    }
  }
}

TEST_CASE("bench") {
  auto empty = fsg("bench --sizes");
  CHECK(empty.code == 0);
  CHECK(std::count(empty.out.begin(), empty.out.end(), '\n') == 2);
  auto rows = as_json(fsg("bench --suite solvable --class 3 --sizes 20 40 --seeds 1 --json"));
  CHECK(rows.size() == 2);
  CHECK(rows[0]["size"] == 20);
  CHECK(fsg("bench --suite other --sizes 10").code == 2);
  CHECK(fsg("bench --sizes 20 10").code == 2);
}
