#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>
#include <unistd.h>

#include "okubo/accessory.hpp"
#include "okubo/hg_builder.hpp"
#include "okubo/json_io.hpp"
#include "support.hpp"

using namespace okubo;
using okubo::testing::q;

namespace {

struct Run {
  int status = -1;
  std::string out;
  json body() const { return json::parse(out); }
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" OKUBO_CLI_PATH "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

class Scratch {
 public:
  Scratch() : dir_(std::filesystem::temp_directory_path() / ("okubo_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(dir_);
  }
  ~Scratch() { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const json& j) const {
    const auto path = dir_ / name;
    std::ofstream(path) << j.dump();
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  std::filesystem::path dir_;
};

const json kParams = {{"alpha1", "1/3"}, {"beta1", "1/5"}, {"alpha2", "1/7"}, {"beta2", "1/11"}};

}  // namespace

TEST_CASE("solve-accessory then check-same") {
  Scratch s;
  const std::string chart = s.path("special.json");
  const Run solved = run("solve-accessory --a 1/3 --b 1/5 --c 1/7 --d 1/11 --branch auto --out " + chart);
  CHECK(solved.status == 0);
  const json rep = json::parse(std::ifstream(chart));
  const AccessorySolution lib = solve_accessory(q("1/3"), q("1/5"), q("1/7"), q("1/11"));
  CHECK(matrix_from_json(rep["A1"]) == lib.A1);
  CHECK(rep["branch"] == "via-r4");
  CHECK(rep["chart"]["r"][0] == "24047/74867");

  const Run same = run("check-same --chart " + chart);
  CHECK(same.status == 0);
  const json v = same.body();
  CHECK(v["epsilon"] == "0");
  CHECK(v["delta"] == "0");
  CHECK(v["verdict"] == true);
}

TEST_CASE("check-same on a generic chart reports false") {
  Scratch s;
  const AccessoryChart ch = chart_solving_r1(q("1/3"), q("1/5"), q("1/7"), q("1/11"), 2, 3, 5);
  const json j = {{"a", "1/3"}, {"b", "1/5"}, {"c", "1/7"}, {"d", "1/11"},
                  {"r", {ch.r[0].str(), "2", "3", "5"}}};
  const Run r = run("check-same --chart " + s.write("generic.json", j));
  CHECK(r.status == 1);
  CHECK(r.body()["verdict"] == false);
  CHECK(r.body()["epsilon"] != "0");
}

TEST_CASE("emitted matrices re-parse to the library values") {
  Scratch s;
  const HGParams p = HGParams::okubo(q("1/3"), q("1/5"), q("1/7"), q("1/11"));
  const Run r = run("build-okubo --params " + s.write("p.json", kParams));
  REQUIRE(r.status == 0);
  const json j = r.body();
  const OkuboZero oz = build_okubo_zero(p);
  CHECK(matrix_from_json(j["A0"]) == oz.system.A);
  CHECK(matrix_from_json(j["P_inverse"]) == oz.P_inverse);
  CHECK(matrix_from_json(j["R"]) == build_R(p));
  CHECK(rational_from_json(j["exponents"]["c"]) == q("107/1155"));
  // a second emission of the parsed value is textually identical
  CHECK(to_json(matrix_from_json(j["A0"])) == j["A0"]);
}

TEST_CASE("recover-chart undoes a diagonal gauge") {
  Scratch s;
  const AccessoryChart ch = chart_solving_r1(q("1/3"), q("1/5"), q("1/7"), q("1/11"), 2, 3, 5).normalized(0);
  const RationalMatrix gauge = RationalMatrix::diagonal({1, q("2/3"), 5, q("-1/4")});
  const RationalMatrix A = inverse(gauge) * parametrize_A1(ch).A * gauge;
  const json in = {{"a", "1/3"}, {"b", "1/5"}, {"c", "1/7"}, {"d", "1/11"}, {"A1", to_json(A)}};
  const Run r = run("recover-chart --chart " + s.write("m.json", in));
  REQUIRE(r.status == 0);
  CHECK(matrix_from_json(r.body()["D"]) == gauge);
  for (int k = 0; k < 4; ++k) CHECK(rational_from_json(r.body()["chart"]["r"][k]) == ch.r[k]);
}

TEST_CASE("input errors exit with status 2 and a machine-readable body") {
  Scratch s;
  json bad = kParams;
  bad["gamma_mode"] = "abc";
  const Run r = run("build-product --params " + s.write("bad.json", bad));
  CHECK(r.status == 2);
  CHECK(r.body()["error"]["code"] == "invalid_input");
  CHECK(r.body()["error"].contains("message"));
  CHECK(r.body()["error"].contains("context"));

  const Run malformed = run("solve-accessory --a 1/x --b 1/5 --c 1/7 --d 1/11");
  CHECK(malformed.status == 2);
  CHECK(malformed.body()["error"]["context"] == "1/x");

  CHECK(run("no-such-command").status == 2);
  CHECK(run("solve-accessory --a 1/2 --b 1/5 --c 1/7 --d 1/11").body()["error"]["code"] == "admissibility_violated");
  CHECK(run("build-product --params " + s.path("missing.json")).status == 2);
  CHECK(run("df-solve --a 1/3 --b 1/5 --c 1/7 --g 1/2 --x 1.5").status == 2);
}

TEST_CASE("gamma pairs and the precision override") {
  Scratch s;
  json generic = kParams;
  generic["gamma_mode"] = {"2/9", "5/13"};
  const Run prod = run("build-product --params " + s.write("g.json", generic));
  CHECK(prod.status == 0);
  CHECK(prod.body()["params"]["gamma_mode"][1] == "5/13");

  const std::string params = s.write("p.json", kParams);
  CHECK(run("residual --params " + params + " --base 1 --terms 60").status == 0);
  CHECK(run("residual --params " + params + " --base 1 --terms 60", "OKUBO_PRECISION=1e-40").status == 1);
  CHECK(run("residual --params " + params, "OKUBO_PRECISION=fast").status == 2);
  const Run point = run("residual --params " + params + " --x 0.3");
  CHECK(point.status == 0);
  CHECK(point.body()["series"].size() == 4);  // only the disc at zero contains 0.3
}

TEST_CASE("series and numerical subcommands") {
  Scratch s;
  const std::string params = s.write("p.json", kParams);
  const Run ser = run("series --params " + params + " --base inf --exponent 2 --terms 3");
  REQUIRE(ser.status == 0);
  CHECK(ser.body()["series"][0]["exponent"] == "47/1155");
  CHECK(ser.body()["series"][0]["coefficients"].size() == 3);
  CHECK(run("series --params " + params + " --mode float --terms 40").status == 0);
  CHECK(run("series --params " + params + " --mode fuzzy").status == 2);
  CHECK(run("v-vector --params " + params + " --x 0.2").status == 0);
  CHECK(run("verify-realize --params " + params).status == 0);

  for (const char* cmd : {"df-build", "df-reduce", "df-verify"})
    CHECK(run(std::string(cmd) + " --a 1/3 --b 1/5 --c 1/7 --g 1/11").status == 0);
  const Run df = run("df-solve --a 1/3 --b 1/5 --c 1/7 --g 1/2 --x 0.4");
  REQUIRE(df.status == 0);
  CHECK(df.body()["z"][0].get<double>() == doctest::Approx(-0.39586707485004386).epsilon(1e-11));
  CHECK(df.body()["residual"].get<double>() <= 1e-6);

  const json file = {{"a", "1/3"}, {"b", "1/5"}, {"c", "1/7"}, {"g", "1/2"}, {"x", 0.3}, {"nodes", 256}};
  const Run from_file = run("df-solve --params " + s.write("df.json", file));
  REQUIRE(from_file.status == 0);
  CHECK(from_file.body()["x"] == 0.3);
  CHECK(from_file.body()["z"][2].get<double>() == doctest::Approx(0.056754043399825647).epsilon(1e-11));
  json bad = file;
  bad["nodes"] = "many";
  CHECK(run("df-solve --params " + s.write("bad.json", bad)).body()["error"]["code"] == "invalid_input");
}

TEST_CASE("verify-all is reproducible for a fixed seed") {
  const Run a = run("verify-all --seed 3"), b = run("verify-all --seed 3");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.body()["criteria"].size() == 12);
  CHECK(a.body()["passed"] == true);
}
