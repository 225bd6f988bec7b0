// End-to-end runs of the polarwords executable.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(POLARWORDS_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string ok(const std::string& args) {
  const Run r = run(args);
  INFO(args);
  CHECK(r.status == 0);
  CHECK_FALSE(r.out.empty());
  CHECK(r.out.back() == '\n');
  CHECK(r.out.find("\n\n") == std::string::npos);
  return r.out;
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("scalar commands") {
  CHECK(ok("g 5") == "187\n");
  CHECK(ok("g 0") == "1\n");
  CHECK(ok("count-words 12") == "2798251\n");
  CHECK(ok("udim 2") == "5\n");
  CHECK(ok("udim 3 --threads 2") == "15\n");
}

TEST_CASE("enumerate-words") {
  CHECK(ok("enumerate-words 3 --case 7") == "122\n233\n");
  CHECK(lines(ok("enumerate-words 5")) == 187);
  const std::string csv = ok("enumerate-words 3 --format csv");
  CHECK(first_line(csv) == "word,case");
  CHECK(csv.find("\n231,1\n") != std::string::npos);
  const auto doc = nlohmann::json::parse(ok("enumerate-words 4 --case 6 --format json"));
  CHECK(doc["n"] == 4);
  CHECK(doc["words"].size() == 2);
  CHECK(doc["words"][0]["word"] == "2342");
  CHECK(doc["words"][0]["case"] == 6);
}

TEST_CASE("enumerate-subspaces") {
  CHECK(lines(ok("enumerate-subspaces 4")) == 51);
  CHECK(ok("enumerate-subspaces 3 --case 7") == "011\n100;011\n");
  CHECK(lines(ok("enumerate-subspaces 3 --all")) == 16);
  const std::string csv = ok("enumerate-subspaces 3 --all --format csv");
  CHECK(first_line(csv) == "subspace,dim,case,subcase");
  CHECK(csv.find("\n111,1,,\n") != std::string::npos);
  const std::string members = ok("enumerate-subspaces 4 --case 7 --format csv");
  CHECK(members.find("\n0100;0011,2,7,a\n") != std::string::npos);
  CHECK(members.find("\n1100;0011,2,7,b\n") != std::string::npos);
  const auto doc = nlohmann::json::parse(ok("enumerate-subspaces 2 --format json"));
  CHECK(doc["subspaces"].size() == 5);
  CHECK(doc["subspaces"][0]["dim"] == 0);
  CHECK(ok("enumerate-subspaces 6 --threads 1") == ok("enumerate-subspaces 6 --threads 4"));
  CHECK(run("enumerate-subspaces 3 --all --case 2").status == 2);
}

TEST_CASE("strata") {
  const std::string text = ok("strata 2 --x0 0");
  CHECK(text.find("k=1 points=6 components=3") != std::string::npos);
  CHECK(text.find("line_fact yes") != std::string::npos);
  const auto doc = nlohmann::json::parse(ok("strata 3 --x0 7 --format json"));
  CHECK(doc["component_bijection"] == true);
  CHECK(doc["strata"][1]["components"].size() == 7);
  CHECK(run("strata 2 --x0 15").status == 3);
}

TEST_CASE("bijection") {
  const std::string csv = ok("bijection 3 --format csv");
  CHECK(first_line(csv) == "word,case,subspace_basis");
  CHECK(csv.find("\n223,2,110;001\n") != std::string::npos);
  CHECK(lines(csv) == 16);
  CHECK(ok("bijection 4 --case 7") == "1122 0011\n1233 0100;0011\n2133 1000;0011\n2233 1100;0011\n");
  const auto doc = nlohmann::json::parse(ok("bijection 2 --format json"));
  CHECK(doc["entries"].size() == 5);
  CHECK(doc["entries"][4]["subspace_basis"] == "10;01");
  CHECK(ok("bijection 6 --verify").find(" ok") != std::string::npos);
  const auto rep = nlohmann::json::parse(ok("bijection 5 --verify --format json"));
  CHECK(rep["passed"] == true);
  CHECK(rep["matched"] == 187);
  CHECK(run("bijection 8 --verify").status == 3);
  CHECK(run("bijection 11").status == 3);
}

TEST_CASE("export-incidence") {
  const std::string dot = ok("export-incidence 1 --format dot");
  CHECK(dot.rfind("graph ", 0) == 0);
  CHECK(lines(dot) == 2 + 4 + 3);
  const std::string csv = ok("export-incidence 2 --format csv");
  CHECK(lines(csv) == 16);
  const auto doc = nlohmann::json::parse(ok("export-incidence 2 --format json"));
  CHECK(doc["points"].size() == 15);
  CHECK(ok("export-incidence 3 --format json --threads 3") == ok("export-incidence 3 --format json"));
  CHECK(run("export-incidence 2").status == 2);
  CHECK(run("export-incidence 2 --format svg").status == 2);
}

TEST_CASE("--out writes the same document") {
  const auto path = std::filesystem::temp_directory_path() / "polarwords_cli_out.csv";
  std::filesystem::remove(path);
  const Run r = run("bijection 4 --format csv --out " + path.string());
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == ok("bijection 4 --format csv"));
  std::filesystem::remove(path);
}

TEST_CASE("verify-all") {
  const std::string out = ok("verify-all --threads 2");
  for (int id = 1; id <= 9; ++id) CHECK(out.find("PASS [" + std::to_string(id) + "]") != std::string::npos);
  CHECK(out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage and guard errors") {
  CHECK(run("").status == 2);
  CHECK(run("nonsense 3").status == 2);
  CHECK(run("g").status == 2);
  CHECK(run("g x").status == 2);
  CHECK(run("enumerate-words 3 --case 8").status == 2);
  CHECK(run("enumerate-words 3 --format dot").status == 2);
  CHECK(run("g 33").status == 3);
  CHECK(run("enumerate-words 15").status == 3);
  CHECK(run("enumerate-subspaces 9").status == 3);
  CHECK(run("udim 5").status == 3);
  CHECK(run("count-words 0").status == 3);
  CHECK(run("--help").status == 0);
}
