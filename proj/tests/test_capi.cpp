#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "bubble/bubble.h"

using Json = nlohmann::json;

namespace {

struct Algebra {
  bubble_algebra* handle = nullptr;
  Algebra(int n, int m, std::vector<std::string> deltas) {
    std::vector<const char*> tokens;
    for (const auto& d : deltas) tokens.push_back(d.c_str());
    REQUIRE(bubble_algebra_new(n, m, tokens.empty() ? nullptr : tokens.data(),
                               static_cast<int>(tokens.size()),
                               &handle) == BUBBLE_OK);
  }
  ~Algebra() { bubble_algebra_free(handle); }
};

std::string take(char* s) {
  std::string out(s);
  bubble_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("algebra construction and errors") {
  bubble_algebra* a = nullptr;
  CHECK(bubble_algebra_new(0, 2, nullptr, 0, &a) == BUBBLE_ERROR_INVALID);
  CHECK(std::string(bubble_last_error()).find("n >= 1") != std::string::npos);

  char* out = nullptr;
  CHECK(bubble_dims(nullptr, "json", &out) == BUBBLE_ERROR_INVALID);
  CHECK(std::string(bubble_last_error()).find("null") != std::string::npos);

  const char* bad[] = {"root:1", "root:4"};
  CHECK(bubble_algebra_new(2, 2, bad, 2, &a) == BUBBLE_ERROR_INVALID);

  const char* one[] = {"root:4"};
  CHECK(bubble_algebra_new(2, 2, one, 1, &a) == BUBBLE_ERROR_INVALID);

  CHECK(std::string(bubble_version()).find('.') != std::string::npos);
}

TEST_CASE("basis through the C surface") {
  Algebra alg(2, 2, {});
  char* out = nullptr;
  REQUIRE(bubble_basis(alg.handle, nullptr, "json", &out) == BUBBLE_OK);
  const Json parsed = Json::parse(take(out));
  CHECK(parsed["count"] == 10);
  CHECK(parsed["kind"] == "bubble-basis");

  REQUIRE(bubble_basis(alg.handle, "0,0", "json", &out) == BUBBLE_OK);
  const Json delta_basis = Json::parse(take(out));
  CHECK(delta_basis["count"] == 2);

  CHECK(bubble_basis(alg.handle, "1,0", "json", &out) == BUBBLE_ERROR_INVALID);
}

TEST_CASE("multiply through the C surface") {
  Algebra alg(2, 2, {});
  char* out = nullptr;
  REQUIRE(bubble_multiply(alg.handle, "n=2 m=2; 0:{1,2}; 0:{1',2'}",
                          "n=2 m=2; 0:{1,2}; 0:{1',2'}", "json",
                          &out) == BUBBLE_OK);
  const Json p = Json::parse(take(out));
  CHECK(p["zero"] == false);
  CHECK(p["coeff"] == "d0");
  CHECK(p["diagram"] == "n=2 m=2; 0:{1,2}; 0:{1',2'}");

  REQUIRE(bubble_multiply(alg.handle, "n=1 m=2; 0:{1,1'}",
                          "n=2 m=2; 0:{1,2}; 0:{1',2'}", "json",
                          &out) == BUBBLE_ERROR_INVALID);
}

TEST_CASE("gram, det and rank through the C surface") {
  Algebra generic(2, 2, {});
  char* out = nullptr;
  REQUIRE(bubble_gram(generic.handle, "0,0", 0, "json", &out) == BUBBLE_OK);
  const Json g = Json::parse(take(out));
  CHECK(g["entries"][0][0] == "d0");
  CHECK(g["entries"][0][1] == "0");
  CHECK(g["entries"][1][1] == "d1");

  REQUIRE(bubble_det(generic.handle, "0,0", "text", &out) == BUBBLE_OK);
  CHECK(take(out) == "d0*d1\n");

  long r = -1;
  CHECK(bubble_rank(generic.handle, "0,0", &r) == BUBBLE_ERROR_INVALID);

  Algebra special(6, 2, {"root:2", "root:4"});
  REQUIRE(bubble_rank(special.handle, "0,0", &r) == BUBBLE_OK);
  CHECK(r == 4);

  REQUIRE(bubble_gram(special.handle, "0,0", 1, "json", &out) == BUBBLE_OK);
  const Json fact = Json::parse(take(out));
  CHECK(fact["dimension"] == 70);
  CHECK(fact["blocks"].size() == 4);
}

TEST_CASE("dims and radical series through the C surface") {
  Algebra alg(6, 2, {"root:2", "root:4"});
  char* out = nullptr;
  REQUIRE(bubble_dims(alg.handle, "json", &out) == BUBBLE_OK);
  const Json dims = Json::parse(take(out));
  CHECK(dims["cells"].size() == 16);
  bool found = false;
  for (const auto& row : dims["cells"])
    if (row["lambda"] == Json::array({0, 0})) {
      CHECK(row["dim"] == 70);
      CHECK(row["head"] == 4);
      CHECK(row["radical"] == 66);
      found = true;
    }
  CHECK(found);

  REQUIRE(bubble_radical_series(alg.handle, "0,2", "json", &out) == BUBBLE_OK);
  const Json series = Json::parse(take(out));
  REQUIRE(series["layers"].size() == 3);
  CHECK(series["layers"][1] ==
        Json::array({Json::array({2, 2}), Json::array({0, 4})}));
}

TEST_CASE("predicates through the C surface") {
  Algebra alg(6, 2, {"root:2", "root:4"});
  int flag = -1;
  REQUIRE(bubble_is_semisimple(alg.handle, &flag) == BUBBLE_OK);
  CHECK(flag == 0);
  REQUIRE(bubble_is_quasi_hereditary(alg.handle, &flag) == BUBBLE_OK);
  CHECK(flag == 1);

  Algebra generic(4, 2, {"3", "3"});
  REQUIRE(bubble_is_semisimple(generic.handle, &flag) == BUBBLE_OK);
  CHECK(flag == 1);
}

TEST_CASE("unknown formats and orders are invalid input") {
  Algebra alg(2, 2, {});
  char* out = nullptr;
  CHECK(bubble_basis(alg.handle, nullptr, "yaml", &out) == BUBBLE_ERROR_INVALID);
  Algebra special(6, 2, {"root:2", "root:4"});
  CHECK(bubble_decomp(special.handle, "paper-9-9", "json", &out) ==
        BUBBLE_ERROR_INVALID);
}
