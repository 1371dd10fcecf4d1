#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "metricgeo/errors.hpp"
#include "metricgeo/io.hpp"
#include "metricgeo/transforms.hpp"

using namespace metricgeo;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string error_of(const json& doc) {
  try {
    io::parse_space(doc);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / ("metricgeo_io_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("matrix documents") {
  auto s = io::parse_space(json::parse(R"({"kind":"matrix","labels":["a","b"],"matrix":[[0,1],[1,0]]})"));
  CHECK(s.size() == 2);
  CHECK(s.label(1) == "b");
  auto unlabeled = io::parse_space(json::parse(R"({"kind":"matrix","matrix":[[0,2],[2,0]]})"));
  CHECK(unlabeled.labels() == std::vector<std::string>{"0", "1"});
  CHECK_THROWS_AS(io::parse_space(json::parse(R"({"kind":"matrix","matrix":[[0,1],[2,0]]})")),
                  InputError);
}

TEST_CASE("schema errors carry a field path") {
  CHECK(error_of(json::parse(R"({"matrix":[]})")).find("/kind") != std::string::npos);
  CHECK(error_of(json::parse(R"({"kind":"torus"})")).find("/kind") != std::string::npos);
  CHECK(error_of(json::parse(R"({"kind":"matrix","matrix":[[0,1],[1]]})")).find("/matrix/1") !=
        std::string::npos);
  CHECK(error_of(json::parse(R"({"kind":"matrix","matrix":[[0,"x"],[1,0]]})"))
            .find("/matrix/0/1") != std::string::npos);
  CHECK(error_of(json::parse(R"({"kind":"matrix","labels":["a"],"matrix":[[0,1],[1,0]]})"))
            .find("/labels") != std::string::npos);
  CHECK(error_of(json::parse(R"({"kind":"heisenberg","field":"C","sample":{"seed":1}})"))
            .find("/sample/count") != std::string::npos);
  CHECK(error_of(json::parse(R"({"kind":"cantor","N":3,"s":2})")).find("/depth") !=
        std::string::npos);
  CHECK(error_of(json::parse(R"({"kind":"cantor","N":3,"s":2,"depth":2.5})")).find("/depth") !=
        std::string::npos);
  CHECK(error_of(json::parse(R"({"kind":"matrix","matrix":[[0,1],[1,0]],"infinity":"z"})"))
            .find("/infinity") != std::string::npos);
}

TEST_CASE("matrix round trip is lossless, including an ideal infinity") {
  auto inv = invert_quasi(fixtures::plane(12, 3), 2).space;
  auto back = io::parse_space(json::parse(io::space_to_json(inv).dump()));
  CHECK(back == inv);
  CHECK(back.metadata() == inv.metadata());

  const double inf = std::numeric_limits<double>::infinity();
  DistanceTable t(3, 3);
  t << 0, 0.1, inf, 0.1, 0, inf, inf, inf, 0;
  FiniteMetricSpace ideal({"a", "b", "inf"}, t, 2);
  auto doc = io::space_to_json(ideal);
  CHECK(doc["matrix"][0][2].is_null());
  CHECK(doc["infinity"] == "inf");
  CHECK(io::parse_space(json::parse(doc.dump())) == ideal);
}

TEST_CASE("generated kinds replay bit-identically") {
  auto doc = json::parse(
      R"({"kind":"heisenberg","field":"H","n":1,"sample":{"count":30,"seed":9,"box":2},"include_identity":true})");
  auto a = io::parse_space(doc), b = io::parse_space(doc);
  CHECK(a == b);
  CHECK(a.size() == 31);
  CHECK(a.label(30) == "e");
  CHECK(a.metadata()["coordinates"].size() == 31);
  CHECK(a.metadata()["coordinates"][0]["v"].size() == 4);
  // Replaying from the recorded generator reproduces the table.
  CHECK(io::parse_space(a.metadata()["generator"]) == a);

  auto other = doc;
  other["sample"]["seed"] = 10;
  CHECK_FALSE(io::parse_space(other) == a);

  auto c = io::parse_space(json::parse(R"({"kind":"cantor","N":2,"M":2,"s":2,"depth":4})"));
  CHECK(c.size() == 16);
  CHECK(io::parse_space(c.metadata()["generator"]) == c);
  auto c32 = io::parse_space(json::parse(R"({"kind":"cantor","N":3,"M":2,"s":2,"depth":6})"));
  CHECK(c32.size() == 216);
}

TEST_CASE("correspondence files resolve paths relative to themselves") {
  const auto dir = scratch();
  fs::create_directories(dir / "spaces");
  io::write_text(dir / "spaces" / "src.json",
                 R"({"kind":"matrix","labels":["a","b","c"],"matrix":[[0,1,2],[1,0,1],[2,1,0]]})");
  io::write_text(dir / "spaces" / "dst.json",
                 R"({"kind":"matrix","labels":["x","y","z"],"matrix":[[0,2,4],[2,0,2],[4,2,0]]})");
  io::write_text(dir / "map.json",
                 R"({"source_file":"spaces/src.json","target_file":"spaces/dst.json","pairs":[[0,2],[1,1],[2,0]]})");
  auto map = io::load_correspondence(dir / "map.json");
  CHECK(map.size() == 3);
  CHECK(map.image(0) == 2);
  CHECK_FALSE(fs::exists(dir / "map.json.tmp"));

  io::write_text(dir / "bad.json",
                 R"({"source_file":"spaces/src.json","target_file":"spaces/dst.json","pairs":[[0,2],[1,2],[2,0]]})");
  CHECK_THROWS_AS(io::load_correspondence(dir / "bad.json"), InputError);
  io::write_text(dir / "broken.json", "{not json");
  CHECK_THROWS_AS(io::load_space(dir / "broken.json"), InputError);
  CHECK_THROWS_AS(io::load_space(dir / "missing.json"), InputError);
  fs::remove_all(dir);
}
