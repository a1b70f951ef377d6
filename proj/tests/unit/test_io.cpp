#include <doctest.h>

#include "hg/io.hpp"
#include "hg/obstruction.hpp"
#include "hg/subgroups.hpp"
#include "fixtures.hpp"

using namespace hg;
using io::Json;

TEST_CASE("group references") {
  CHECK(io::read_group(Json::parse(R"({"builder": "generalized_quaternion", "n": 2})")).order() == 8);
  CHECK(io::read_group(Json::parse(R"({"builder": "dihedral", "n": 5})")).order() == 10);
  CHECK(io::read_group(Json::parse(R"({"builder": "elementary_abelian", "p": 3, "k": 2})")).order() == 9);
  CHECK(io::read_group(Json::parse(R"({"permutations": [[1, 2, 0], [1, 0, 2]]})")).order() == 6);
  CHECK(io::read_group(Json("group_s4.json"), HG_TEST_DATA).order() == 24);
  CHECK(io::read_group(Json::parse(R"({"path": "group_q16.json"})"), HG_TEST_DATA).order() == 16);
  auto prod = io::read_group(Json::parse(
      R"({"builder": "direct_product", "factors": [{"builder": "cyclic", "n": 2}, {"builder": "cyclic", "n": 3}]})"));
  CHECK(prod.order() == 6);
  CHECK(prod.is_abelian());
  CHECK_THROWS_AS(io::read_group(Json::parse(R"({"builder": "sporadic"})")), io::ParseError);
  CHECK_THROWS_AS(io::read_group(Json::parse(R"({"builder": "cyclic"})")), io::ParseError);
  CHECK_THROWS(io::read_group(Json::parse(R"({"permutations": [[0, 0, 1]]})")));
}

TEST_CASE("values round trip") {
  auto z = Cyclotomic::root_of_unity(8, 3) + Cyclotomic(Rational(1, 2));
  CHECK(io::read_cyclotomic(io::to_json(z)) == z);
  CHECK(io::read_cyclotomic(Json("zeta3^2 + 1/3")) == Cyclotomic::root_of_unity(3, 2) + Cyclotomic(Rational(1, 3)));
  CHECK(io::read_cyclotomic(Json(4)) == Cyclotomic(4));
  CHECK(io::read_rational(io::to_json(Rational(-7, 3))) == Rational(-7, 3));
  CHECK_THROWS(io::read_rational(Json("x")));
}

TEST_CASE("class functions") {
  auto q8 = builders::generalized_quaternion(2);
  for (const auto &chi : character_table(q8).irreducibles)
    CHECK(io::read_class_function(q8, io::class_function_json(chi)) == chi);
  auto cf = io::read_character_file(fixtures::data("char_q8_minimal.json"));
  CHECK(cf.character.degree() == Cyclotomic(18));
  auto reordered = Json::parse(R"({"classes": ["sigma tau", "tau", "sigma", "sigma^2", "1"],
                                   "values": [-2, -2, -2, -6, 18]})");
  CHECK(io::read_class_function(cf.group, reordered) == cf.character);
  CHECK_THROWS_AS(io::read_character_file(fixtures::data("char_bad_syntax.json")), io::ParseError);
  CHECK_THROWS_AS(io::read_character_file(fixtures::data("char_wrong_length.json")), io::ParseError);
  CHECK_THROWS(io::read_character_file(fixtures::data("not_json.json")));
  CHECK_THROWS(io::read_character_file(fixtures::data("missing.json")));
}

TEST_CASE("tree files") {
  auto tf = io::read_tree_file(fixtures::data("tree_z3_two_leaf.json"));
  CHECK(validate(tf.tree).ok());
  auto again = io::read_tree(io::tree_json(tf.tree, tf.group_ref));
  CHECK(canonical_code(again.tree) == canonical_code(tf.tree));
  CHECK(validate(again.tree).ok());
  CHECK(!validate(io::read_tree_file(fixtures::data("tree_z3_bad_eps.json")).tree).ok());
  CHECK(validate(io::read_tree_file(fixtures::data("tree_tame_single.json")).tree).ok());
  CHECK(!validate(io::read_tree_file(fixtures::data("tree_q8_star.json")).tree).check("H5").pass);
  CHECK_THROWS(io::read_tree_file(fixtures::data("tree_broken.json")));
}

TEST_CASE("action files") {
  for (const auto &f : fixtures::bundled_actions())
    CHECK_NOTHROW(io::read_action_file(f));
  auto klein = io::read_local_action_file(fixtures::data("klein_f4.json"));
  CHECK(klein.group().order() == 4);
  CHECK(klein.precision() == 8);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  auto cf = io::read_character_file(fixtures::data("char_z3_2u.json"));
  auto a = io::report_json(hurwitz_feasibility(cf.group, 3, cf.character, 1), cf.group_ref, true).dump();
  auto b = io::report_json(hurwitz_feasibility(cf.group, 3, cf.character, 3), cf.group_ref, true).dump();
  CHECK(a == b);
  CHECK(a.find("\"3/2\"") != std::string::npos);
  auto q = io::read_character_file(fixtures::data("char_q8_minimal.json"));
  auto g = io::read_group(Json("group_q8.json"), HG_TEST_DATA);
  auto qa = io::report_json(hurwitz_feasibility(q.group, 2, q.character, 1), q.group_ref, true).dump();
  auto qb = io::report_json(hurwitz_feasibility(q.group, 2, q.character, 2), q.group_ref, true).dump();
  CHECK(qa == qb);
  CHECK(g.order() == 8);
}
