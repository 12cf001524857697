#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "roc/io.hpp"

using namespace roc;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path = (std::filesystem::temp_directory_path() /
            ("roc_io_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++) + ".txt"))
               .string();
    write_file(path, content);
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("set files") {
  TempFile file(
      "# a cnf\n"
      "x1 x2\n"
      "\n"
      "x3   # trailing comment\n");
  VarRegistry reg;
  std::vector<VarSet> sets = parse_set_file(file.path, reg);
  REQUIRE(sets.size() == 2);
  CHECK(sets[0].size() == 2);
  CHECK(sets[1].size() == 1);
  CHECK(sets[0].contains(*reg.find("x1")));
  CHECK(sets[0].contains(*reg.find("x2")));
  CHECK(sets[1].contains(*reg.find("x3")));

  CHECK(render_set_file(sets, reg) == "x1 x2\nx3\n");
}

TEST_CASE("set file errors") {
  VarRegistry reg;
  CHECK_THROWS_WITH_AS(parse_set_file("/no/such/file", reg),
                       doctest::Contains("cannot open"), IoError);
  TempFile bad("x1 2bad\n");
  CHECK_THROWS_WITH_AS(parse_set_file(bad.path, reg),
                       doctest::Contains("invalid variable name"), IoError);
}

TEST_CASE("formula files skip comment lines") {
  TempFile file(
      "# the left side\n"
      "(x1 | x2)\n"
      "  # interleaved comment\n"
      "& (y1 | y2)\n");
  VarRegistry reg;
  FormulaPtr f = parse_formula_file(file.path, reg);
  CHECK(render(*f, reg) == "((x1 | x2) & (y1 | y2))");
}

TEST_CASE("graph files") {
  TempFile file("3 2\n1 2\n2 3\n");
  Graph g = parse_graph_file(file.path);
  CHECK(g.n == 3);
  CHECK(g.edges.size() == 2);
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(2, 3));
  CHECK_FALSE(g.adjacent(1, 3));

  TempFile empty("4 0\n");
  CHECK(parse_graph_file(empty.path).n == 4);

  TempFile header_only("junk\n");
  CHECK_THROWS_WITH_AS(parse_graph_file(header_only.path),
                       doctest::Contains("expected header"), IoError);
  TempFile truncated("3 2\n1 2\n");
  CHECK_THROWS_WITH_AS(parse_graph_file(truncated.path),
                       doctest::Contains("expected 2 edges"), IoError);
  TempFile loop("3 1\n2 2\n");
  CHECK_THROWS_AS(parse_graph_file(loop.path), IoError);
}

TEST_CASE("sorted names sort alphabetically, not by id") {
  VarRegistry reg;
  int b = reg.intern("beta");
  int a = reg.intern("alpha");
  VarSet s{a, b};
  CHECK(sorted_names(s, reg) ==
        std::vector<std::string>{"alpha", "beta"});
}
