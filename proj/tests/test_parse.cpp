#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "expect.hpp"
#include "groupcodes/codes.hpp"
#include "groupcodes/parse.hpp"
#include "oracle.hpp"
#include "report.hpp"

using namespace groupcodes;

TEST_CASE("field specs") {
  const auto f = parse_field("q=2,m=3");
  CHECK(f->q() == 2);
  CHECK(f->m() == 3);
  CHECK(f->modulus() == std::vector<Scalar>{1, 1, 0, 1});
  CHECK(parse_field("q=9 m=2")->order() == 81);
  CHECK(parse_field("q=5")->m() == 1);
  CHECK(parse_field("q=2,m=3,modulus=1,0,1,1")->modulus() == std::vector<Scalar>{1, 0, 1, 1});
  CHECK(parse_field("q=2; m=3; modulus=1 0 1 1")->modulus() == std::vector<Scalar>{1, 0, 1, 1});
  CHECK_THROWS_KIND(parse_field("q=6,m=1"), ErrorKind::kParseError);
  CHECK_THROWS_KIND(parse_field("m=2"), ErrorKind::kParseError);
  CHECK_THROWS_KIND(parse_field("q=2,m=x"), ErrorKind::kParseError);
  CHECK_THROWS_KIND(parse_field("q=2,m=2,modulus=1,0,1"), ErrorKind::kParseError);  // reducible
}

TEST_CASE("group specs") {
  CHECK(parse_group("cyclic:6")->order() == 6);
  CHECK(parse_group("dihedral:4")->order() == 8);
  CHECK(parse_group("symmetric:3")->order() == 6);
  const auto v4 = parse_group("product:cyclic:2xcyclic:2");
  CHECK(v4->order() == 4);
  CHECK(v4->is_abelian());
  CHECK(parse_group("product:cyclic:2xcyclic:2xcyclic:3")->order() == 12);

  const auto path = std::filesystem::temp_directory_path() / "groupcodes_test_table.txt";
  {
    std::ofstream out(path);
    out << "# Z/3\n0 1 2\n1 2 0\n2 0 1\n";
  }
  CHECK(parse_group("table:" + path.string())->order() == 3);
  std::filesystem::remove(path);

  CHECK_THROWS_KIND(parse_group("cyclic:"), ErrorKind::kParseError);
  CHECK_THROWS_KIND(parse_group("quaternion:8"), ErrorKind::kParseError);
  CHECK_THROWS(parse_group("table:/nonexistent/file"));
}

TEST_CASE("element literals") {
  const auto kg = oracle::ambient("q=2,m=2", "cyclic:6");
  const auto& f = kg->field();
  const auto a = f.generator();
  const auto e = parse_element(kg, "a^2*g2 + a*g4");
  CHECK(e.coeff(2) == f.mul(a, a));
  CHECK(e.coeff(4) == a);
  CHECK(e.weight() == 2);
  CHECK(parse_element(kg, "(a^2)*g2 + a*g4") == e);
  CHECK(parse_element(kg, "g") == kg->group_element(1));
  CHECK(parse_element(kg, "g^3") == kg->group_element(3));
  CHECK(parse_element(kg, "g2 g2") == kg->group_element(4));
  CHECK(parse_element(kg, "1 + g + g^2 - g2") == kg->one() + kg->group_element(1));
  CHECK(parse_element(kg, "-1") == kg->one());
  CHECK(parse_element(kg, "0") == kg->zero());
  CHECK(parse_element(kg, "(1 + g)(1 + g)") == kg->one() + kg->group_element(2));
  // Formatting round-trips.
  std::mt19937_64 rng(81);
  for (int t = 0; t < 50; ++t) {
    const auto x = kg->random(rng);
    CHECK(parse_element(kg, x.format()) == x);
  }
  CHECK_THROWS_KIND(parse_element(kg, "g7"), ErrorKind::kParseError);
  CHECK_THROWS_KIND(parse_element(kg, "1 +"), ErrorKind::kParseError);
  CHECK_THROWS_KIND(parse_element(kg, "(1 + g"), ErrorKind::kParseError);
  CHECK_THROWS_KIND(parse_element(kg, "b"), ErrorKind::kParseError);
  CHECK_THROWS_KIND(parse_element(kg, "g^-1"), ErrorKind::kParseError);
}

TEST_CASE("index and form lists") {
  CHECK(parse_index_list("2,4") == std::vector<std::size_t>{2, 4});
  CHECK(parse_index_list("").empty());
  CHECK(parse_form_list("TE,TH") == std::vector<FormKind>{FormKind::kTE, FormKind::kTH});
  CHECK(parse_form_list("E") == std::vector<FormKind>{FormKind::kE});
  CHECK_THROWS_KIND(parse_form_list("TE,X"), ErrorKind::kParseError);
  CHECK_THROWS_KIND(parse_index_list("2,x"), ErrorKind::kParseError);
}

TEST_CASE("hex row packing") {
  CHECK(pack_row(FpVector{1, 0, 1}, 2) == "a");
  CHECK(unpack_row("a", 2, 3) == FpVector{1, 0, 1});
  CHECK(unpack_row("A", 2, 3) == FpVector{1, 0, 1});
  CHECK(pack_row(FpVector{1, 1, 1, 1, 0, 0, 0, 1}, 2) == "f1");
  // p = 3: two bits per entry, 2 1 0 -> 10 01 00 (00) -> 0x90.
  CHECK(pack_row(FpVector{2, 1, 0}, 3) == "90");
  std::mt19937_64 rng(82);
  for (Scalar p : {2u, 3u, 5u, 7u}) {
    for (std::size_t len : {1u, 4u, 9u, 17u}) {
      FpVector v(len);
      std::uniform_int_distribution<Scalar> d(0, p - 1);
      for (auto& x : v) x = d(rng);
      CHECK(unpack_row(pack_row(v, p), p, len) == v);
    }
  }
  CHECK_THROWS_KIND(unpack_row("zz", 2, 3), ErrorKind::kParseError);
  CHECK_THROWS_KIND(unpack_row("f", 3, 2), ErrorKind::kParseError);  // entry 3 is out of range
}

TEST_CASE("operator files round-trip") {
  const auto ambient = cli::make_ambient("q=3,m=2", "cyclic:2");
  const auto e = parse_element(ambient.algebra, "2 + 2*g");
  const auto op = rho(e);
  const auto path = (std::filesystem::temp_directory_path() / "groupcodes_test_op.json").string();
  cli::save_operator(path, ambient, op);
  const auto loaded = cli::load_operator(path);
  CHECK(loaded.op.matrix() == op.matrix());
  CHECK(loaded.ambient.algebra->dimension() == ambient.algebra->dimension());
  {
    std::ofstream out(path);
    out << R"({"field": "q=3,m=2", "group": "cyclic:2", "rows": ["00"]})";
  }
  CHECK_THROWS_KIND(cli::load_operator(path), ErrorKind::kParseError);
  std::filesystem::remove(path);
}

TEST_CASE("analysis reports") {
  const auto ambient = cli::make_ambient("q=2,m=3", "cyclic:3");
  const auto e = parse_element(ambient.algebra, "1 + g + g^2");
  const auto report = cli::analyze_element(ambient, e, cli::default_forms(*ambient.algebra), kDefaultEnumerationCap);
  CHECK(report["codes"]["FGe"]["parameters"]["text"] == "(3, 2^1, 3)");
  CHECK(report["codes"]["KGe"]["parameters"]["text"] == "(3, 2^3, 3)");
  CHECK(report["cross_checks_ok"] == true);
  CHECK_THROWS_KIND(cli::check_forms(*ambient.algebra, {FormKind::kTH}), ErrorKind::kParseError);
  const auto text = cli::render_analysis(report);
  CHECK(text.find("lcd=true") != std::string::npos);
}
