#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string("'") + GRAPHTENSOR_CLI + "' " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  for (std::size_t n; (n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0;) out.append(buffer.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("graphtensor_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const std::string kK2K2 = R"({"index": ["1","2"], "factors": {
  "1": {"vertices": ["a","b"], "edges": [["a","b"]]},
  "2": {"vertices": ["a","b"], "edges": [["a","b"]]}}})";

}  // namespace

TEST_CASE("product subcommand") {
  const auto fam = write_temp("k2k2.json", kK2K2);
  const auto dot = run("product --process direct --family " + fam + " --format dot");
  CHECK(dot.status == 0);
  CHECK(dot.out ==
        "graph {\n  \"(a,a)\";\n  \"(a,b)\";\n  \"(b,a)\";\n  \"(b,b)\";\n"
        "  \"(a,a)\" -- \"(b,b)\";\n  \"(a,b)\" -- \"(b,a)\";\n}\n");

  CHECK(run("product --process lex --family " + fam).status == 3);
  CHECK(run("product --process lex --order 2,1 --family " + fam).status == 0);

  const auto d = run("product --process d --D 1 --family " + fam);
  CHECK(d.status == 0);
  CHECK(d.out.find("\"loops_allowed\": false") != std::string::npos);

  CHECK(run("product --process cartesian --family " + fam + " --budget 2").status == 4);
  CHECK(run("product --process bogus --family " + fam).status == 2);
  CHECK(run("product --process direct --family /nonexistent.json").status == 2);
  CHECK(run("product --spec \"J = I\" --family " + fam).status == 0);
}

TEST_CASE("constraint subcommand") {
  const auto fam = write_temp("k2k2c.json", kK2K2);
  const auto same = run("constraint --spec \"J = I; K = empty; L = empty\" --family " + fam + " --compare direct");
  CHECK(same.status == 0);
  CHECK(same.out == "equivalent\n");
  const auto differs = run("constraint --spec \"J != empty\" --family " + fam + " --compare direct");
  CHECK(differs.status == 1);
  CHECK(differs.out.starts_with("differs "));

  CHECK(run("constraint --spec \"J = \"").status == 2);
  const auto norm = run("constraint --spec \"|J|=1;K=I\\\\J;L=empty\" --normalize");
  CHECK(norm.status == 0);
  CHECK(norm.out == "|J| = 1; K = I \\ J; L = empty\n");

  const auto verdicts = run("constraint --spec \"|J| = 1; K = I \\\\ J; L = empty\" --family " + fam);
  CHECK(verdicts.out.find("(a,a) (a,b) adjacent") != std::string::npos);
  CHECK(verdicts.out.find("(a,a) (b,b) not-adjacent") != std::string::npos);
}

TEST_CASE("quotient and tensor subcommands") {
  const auto cong = write_temp("cong.json", R"({"graph": {"vertices": ["a","b","c"], "edges": [["a","b"],["b","c"]]},
    "classes": [["a","c"],["b"]], "ehat": [["a","b"],["b","c"]]})");
  const auto q = run("quotient --congruence " + cong);
  CHECK(q.status == 0);
  CHECK(q.out.find("\"[a]\"") != std::string::npos);

  const auto fam = write_temp("k2k2q.json", kK2K2);
  const auto p = run("quotient --process cartesian --family " + fam + " --index 1 --format dot");
  CHECK(p.out == "graph {\n  \"a\";\n  \"b\";\n  \"a\" -- \"a\";\n  \"a\" -- \"b\";\n  \"b\" -- \"b\";\n}\n");

  const auto homs = write_temp("homs.json", R"({"index": ["1"],
    "G": {"index": ["1"], "factors": {"1": {"vertices": ["a","b","c"], "edges": [["a","b"],["b","c"]]}}},
    "H": {"index": ["1"], "factors": {"1": {"vertices": ["x","y"], "edges": [["x","y"]]}}},
    "homs": {"1": {"a": "x", "b": "y", "c": "x"}}})");
  const auto t = run("tensor --process direct --homs " + homs);
  CHECK(t.status == 0);
  CHECK(t.out.find("\"(c)\": \"(x)\"") != std::string::npos);
  CHECK(t.out.find("\"homomorphism\": true") != std::string::npos);
}

TEST_CASE("verify subcommand") {
  const auto perm = run("verify --suite permutability");
  CHECK(perm.status == 0);
  CHECK(perm.out.find("summary suite=permutability") != std::string::npos);
  CHECK(run("verify --suite tensor").status == 0);
  CHECK(run("verify --suite nonsense").status == 2);
  const auto a = run("verify --suite constraints --budget 100000");
  const auto b = run("verify --suite constraints --budget 100000");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}
