#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(LOOPWORD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("tables") {
  Run a2 = run("tables --type A --rank 2");
  CHECK(a2.code == 0);
  CHECK(lines(a2.out) == 4);
  CHECK(a2.out.find("(1,1)  d=1  2^(1) 1  closed form: ok") != std::string::npos);
  Run b2 = run("tables --type B --rank 2");
  CHECK(b2.code == 0);
  CHECK(lines(b2.out) == 7);
  CHECK(run("tables --type D --rank 3").code == 2);
  Run j = run("tables --type G --rank 2 --format json");
  CHECK(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["rows"].size() == 1 + 1 + 2 + 3 + 4 + 5);
}

TEST_CASE("word and dictionary") {
  Run w = run("word --type B --rank 2 --root 1,2 --d 1");
  CHECK(w.code == 0);
  CHECK(w.out == "2^(1) 1 2\n");
  Run l = run("word --type B --rank 2 --root 1,2 --d 1 --latex");
  CHECK(l.out.find("\\underline{2}") != std::string::npos);
  CHECK(run("word --type A --rank 2 --root 2,0 --d 1").code == 2);
  CHECK(run("word --type A --rank 2 --root x --d 1").code == 2);
  Run d = run("dictionary --type A --rank 2 --letter 2");
  CHECK(d.code == 0);
  CHECK(d.out.find("2^(1)\n") != std::string::npos);
  CHECK(d.out.find("2^(1) 1\n") != std::string::npos);
}

TEST_CASE("verification suites") {
  CHECK(run("verify convexity --type A --rank 2 --window 2").code == 0);
  CHECK(run("verify weyl-order --type A --rank 3 --count 25").code == 0);
  CHECK(run("verify serre --type B --rank 2 --window 0").code == 0);
  CHECK(run("verify fo-constraints --type A --rank 2 --window 3").code == 0);
  Run j = run("verify leading-word --type A --rank 2 --format json");
  CHECK(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["passed"] == true);
  CHECK(parsed["reports"].size() == 2);
  CHECK(parsed["reports"][0].contains("checks"));
}

TEST_CASE("usage errors and determinism") {
  CHECK(run("verify nonsense --type A --rank 2").code == 2);
  CHECK(run("tables --rank 2").code == 2);
  CHECK(run("").code == 2);
  Run a = run("verify composition --type A --rank 2 --seed 9 --format json");
  Run b = run("verify composition --type A --rank 2 --seed 9 --format json");
  CHECK(a.code == 0);
  auto strip = [](nlohmann::json j) {
    for (auto& r : j["reports"]) r.erase("seconds");
    return j;
  };
  CHECK(strip(nlohmann::json::parse(a.out)) == strip(nlohmann::json::parse(b.out)));
}
