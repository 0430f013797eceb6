#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "halg/json_io.hpp"
#include "testkit.hpp"

using namespace halg;
using namespace halg::testkit;
using io::Json;

namespace {

const Ring Z = Ring::integers();

// The path carried by the error `f` throws, or "" if it throws nothing.
template <class F>
std::string error_path(F f) {
  try {
    f();
  } catch (const Error& e) {
    return e.path();
  }
  return "";
}

}  // namespace

TEST_CASE("scalars") {
  CHECK(io::scalar_to_json(Scalar(-7)) == Json(-7));
  CHECK(io::scalar_to_json(Scalar(Integer("123456789012345678901234567890"))) == Json("123456789012345678901234567890"));
  CHECK(io::scalar_to_json(Scalar(3, 4)) == Json("3/4"));
  CHECK(io::scalar_from_json(Json("-2/6"), Ring::rationals(), "$") == Scalar(-1, 3));
  CHECK(io::scalar_from_json(Json(7), Ring::prime_field(5), "$") == 2);
  CHECK(io::scalar_from_json(Json(-1), Ring::prime_field(5), "$") == 4);
  CHECK(io::scalar_from_json(Json("99999999999999999999999"), Z, "$") == Scalar(Integer("99999999999999999999999")));
  CHECK_THROWS_AS(io::scalar_from_json(Json(1.5), Z, "$"), SchemaError);
  CHECK_THROWS_AS(io::scalar_from_json(Json("1/2"), Z, "$"), SchemaError);
  CHECK_THROWS_AS(io::scalar_from_json(Json(true), Z, "$"), SchemaError);
}

TEST_CASE("complexes, maps and modules round trip") {
  Rng rng(51);
  for (const Ring& ring : {Z, Ring::rationals(), Ring::prime_field(7)}) {
    for (int trial = 0; trial < 20; ++trial) {
      ConnComplex x = random_complex(rng, ring, 3, 3), y = random_complex(rng, ring, 3, 3);
      CHECK(io::complex_from_json(Json::parse(io::to_json(x).dump()), "$") == x);
      ChainMap f = random_chain_map(rng, x, y);
      CHECK(io::chain_map_from_json(Json::parse(io::to_json(f).dump()), "$") == f);
      SimplicialModule m = dk(x, 3);
      CHECK(io::simplicial_module_from_json(Json::parse(io::to_json(m).dump()), "$") == m);
    }
  }
  ConnComplex q(Ring::rationals(), {1, 1}, {Matrix::from_rows(Ring::rationals(), {{1}}).scaled(Scalar(2, 3))});
  Json j = io::to_json(q);
  CHECK(j["diffs"]["1"]["entries"][0][0] == "2/3");
  CHECK(io::complex_from_json(j, "$") == q);
  FinPoset p = FinPoset::chain(2);
  FinPoset back = io::poset_from_json(io::to_json(p), "$");
  CHECK(back.elements() == p.elements());
  CHECK(back.relation() == p.relation());
}

TEST_CASE("absent differentials and components default to zero") {
  Json x = Json::parse(R"({"ring":"Z","top":2,"ranks":[1,2,1]})");
  ConnComplex c = io::complex_from_json(x, "$");
  CHECK(c.diff(1).is_zero());
  CHECK(c.diff(2).rows() == 2);
  Json f = Json{{"source", x}, {"target", x}};
  CHECK(io::chain_map_from_json(f, "$") == zero_map(c, c));
}

TEST_CASE("ring resolution") {
  Json x = Json::parse(R"({"top":0,"ranks":[2]})");
  CHECK_THROWS_AS(io::complex_from_json(x, "$"), SchemaError);
  CHECK(io::complex_from_json(x, "$", Ring::prime_field(3)).ring() == Ring::prime_field(3));
  Json y = Json::parse(R"({"ring":"Q","top":0,"ranks":[2]})");
  CHECK_THROWS_AS(io::complex_from_json(y, "$", Z), RingError);
  CHECK(error_path([&] { io::complex_from_json(y, "$", Z); }) == "$.ring");
  CHECK(error_path([&] { io::complex_from_json(Json::parse(R"({"ring":"F4","top":0,"ranks":[2]})"), "$"); }) == "$.ring");
}

TEST_CASE("schema errors carry the failing path") {
  auto parse = [](const char* text) { return [text] { io::complex_from_json(Json::parse(text), "$"); }; };
  CHECK(error_path(parse(R"({"ring":"Z","ranks":[1]})")) == "$.top");
  CHECK(error_path(parse(R"({"ring":"Z","top":1,"ranks":[1]})")) == "$.ranks");
  CHECK(error_path(parse(R"({"ring":"Z","top":1,"ranks":[1,-1]})")) == "$.ranks[1]");
  CHECK(error_path(parse(R"({"ring":"Z","top":1,"ranks":[1,1],"diffs":{"2":{"rows":1,"cols":1,"entries":[[1]]}}})")) ==
        "$.diffs.2");
  CHECK(error_path(parse(R"({"ring":"Z","top":1,"ranks":[1,1],"diffs":{"1":{"rows":1,"cols":2,"entries":[[1,1]]}}})")) ==
        "$.diffs.1");
  CHECK(error_path(parse(R"({"ring":"Z","top":1,"ranks":[1,1],"diffs":{"1":{"rows":1,"cols":1,"entries":[[1.5]]}}})")) ==
        "$.diffs.1.entries[0][0]");
  CHECK(error_path(parse(R"({"ring":"Z","top":1,"ranks":[1,1],"diffs":{"1":{"rows":1,"cols":1,"entries":[]}}})")) ==
        "$.diffs.1.entries");
  CHECK(error_path(parse(R"([1,2])")) == "$");
  // a well-formed document that is not a complex is a domain error, still located
  auto not_complex = parse(R"({"ring":"Z","top":2,"ranks":[1,1,1],
      "diffs":{"1":{"rows":1,"cols":1,"entries":[[1]]},"2":{"rows":1,"cols":1,"entries":[[1]]}}})");
  CHECK_THROWS_AS(not_complex(), NotAComplex);
  CHECK(error_path(not_complex) == "$");
}

TEST_CASE("map and module schema errors") {
  Json s = Json::parse(R"({"ring":"Z","top":0,"ranks":[1]})");
  Json f = Json::parse(R"({"components":{"0":{"rows":2,"cols":1,"entries":[[1],[1]]}}})");
  f["source"] = s;
  f["target"] = s;
  CHECK(error_path([&] { io::chain_map_from_json(f, "$"); }) == "$.components.0");
  CHECK(error_path([&] { io::chain_map_from_json(Json{{"source", s}}, "$"); }) == "$.target");
  Json m = io::to_json(dk(disk(1), 2));
  m["faces"]["2"].erase(0);
  CHECK(error_path([&] { io::simplicial_module_from_json(m, "$"); }) == "$.faces.2");
  CHECK(error_path([&] { io::poset_from_json(Json::parse(R"({"elements":["a"],"leq":[[1]]})"), "$"); }) == "$.leq[0][0]");
  CHECK_THROWS_AS(io::poset_from_json(Json::parse(R"({"elements":["a","b"],"leq":[[true,true],[true,true]]})"), "$"),
                  DomainError);
}

TEST_CASE("shuffle complexes list their blocks") {
  Json j = io::to_json(shuffle_product(sphere(1), sphere(1)));
  CHECK(j["ranks"] == Json::parse("[0,1,2]"));
  REQUIRE(j["blocks"].size() == 3);
  CHECK(j["blocks"][2][0]["f"] == Json::parse("[0,0,1]"));
  CHECK(j["blocks"][2][0]["k"] == 1);
  CHECK(io::complex_from_json(j, "$") == shuffle_product(sphere(1), sphere(1)).underlying);
}
