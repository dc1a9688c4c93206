#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using json = nlohmann::ordered_json;
using bianchi::cli::run;

namespace {

struct Outcome {
  int code = 0;
  std::string out, err;

  std::vector<json> records() const {
    std::vector<json> v;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) v.push_back(json::parse(line));
    return v;
  }
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bound record") {
  const auto r = call({"bound", "--d", "-2", "--N", "5", "--k", "0"});
  REQUIRE(r.code == 0);
  const auto recs = r.records();
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["result"]["value"] == "12");
  CHECK(recs[0]["result"]["mode"] == "exact");
  CHECK(recs[0]["field"]["D"] == -8);
  CHECK(recs[0]["query"]["argv"].size() == 7);
  CHECK(recs[0]["provenance"].contains("tr1"));
}

TEST_CASE("sczech record names the variant") {
  const auto r = call({"sczech", "--d", "-2", "--N", "3"});
  REQUIRE(r.code == 0);
  const auto rec = r.records().at(0);
  CHECK(std::abs(std::stod(rec["result"]["value"].get<std::string>()) + 10) < 1e-8);
  CHECK(rec["provenance"]["variant"] == "symplectic-level");
  CHECK(rec["warnings"].empty());
}

TEST_CASE("sczech matrix dump") {
  const auto path = std::filesystem::temp_directory_path() / "bianchi_cli_matrix.txt";
  const auto r = call({"sczech", "--d", "-7", "--N", "2", "--emit-matrix", path.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 225);
  std::filesystem::remove(path);
}

TEST_CASE("input errors exit 1") {
  auto r = call({"field", "--d", "-3"});
  CHECK(r.code == 1);
  CHECK(r.err.find("d ≠ −1,−3") != std::string::npos);
  CHECK(call({"field", "--d", "4"}).code == 1);
  CHECK(call({"bound", "--d", "-2"}).code == 1);
  CHECK(call({"nonsense"}).code == 1);
  CHECK(call({"field", "--d", "-2", "--bogus", "1"}).code == 1);
  CHECK(call({"sczech", "--d", "-2", "--N", "2", "--variant", "literal-D"}).code == 1);
  CHECK(call({"lefschetz", "level-one", "--d", "-2", "--k", "0", "--involution", "rho"}).code == 1);
}

TEST_CASE("field and lefschetz records") {
  auto rec = call({"field", "--d", "-105"}).records().at(0);
  CHECK(rec["result"]["class_number"] == "8");
  CHECK(rec["result"]["two_torsion"] == "8");
  rec = call({"lefschetz", "principal", "--d", "-7", "--N", "3", "--k", "2"}).records().at(0);
  CHECK(rec["result"]["value"] == "-6");
  rec = call({"lefschetz", "level-one", "--d", "-2", "--k", "0", "--involution", "tau"}).records().at(0);
  CHECK(rec["result"]["value"] == "0");
  rec = call({"lefschetz", "level-one", "--d", "-2", "--k", "0", "--involution", "sigma", "--bracket",
              "rational"})
            .records()
            .at(0);
  CHECK(rec["result"]["value"] == "53/72");
  CHECK(!rec["warnings"].empty());
  rec = call({"eisenstein", "h2", "--d", "-7", "--N", "9", "--k", "1", "--involution", "tau"}).records().at(0);
  CHECK(rec["result"]["value"] == "-18");
  CHECK(!rec["warnings"].empty());
  rec = call({"eisenstein", "h1", "--d", "-2", "--p", "5", "--n", "2"}).records().at(0);
  CHECK(rec["result"]["value"] == "-600");
  rec = call({"gl2", "--d", "-5", "--k", "0"}).records().at(0);
  CHECK(rec["result"]["value"] == "0");
  rec = call({"cusps", "--d", "-5", "--N", "3"}).records().at(0);
  CHECK(rec["result"]["value"] == "128");
  CHECK(rec["result"]["match"] == true);
}

static std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cells.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      cells.emplace_back();
    } else {
      cells.back() += ch;
    }
  }
  return cells;
}

TEST_CASE("csv and json carry the same numbers") {
  const std::vector<std::string> grid = {"--d-list", "-2,-7", "--N-list", "3,5", "--k-list", "0,1"};
  std::vector<std::string> as_json = {"table"};
  as_json.insert(as_json.end(), grid.begin(), grid.end());
  std::vector<std::string> as_csv = as_json;
  as_csv.insert(as_csv.end(), {"--format", "csv"});
  const auto j = call(as_json);
  const auto c = call(as_csv);
  REQUIRE(j.code == 0);
  REQUIRE(c.code == 0);
  const auto recs = j.records();
  CHECK(recs.size() == 8);
  std::istringstream in(c.out);
  std::string header;
  std::getline(in, header);
  std::vector<std::string> columns;
  {
    columns = split_csv(header);
  }
  const auto value_col = std::find(columns.begin(), columns.end(), "result.value") - columns.begin();
  REQUIRE(value_col < static_cast<long>(columns.size()));
  std::size_t row_index = 0;
  for (std::string line; std::getline(in, line); ++row_index) {
    const auto cells = split_csv(line);
    CHECK(cells.at(value_col) == recs.at(row_index)["result"]["value"].get<std::string>());
  }
  CHECK(row_index == recs.size());

  std::vector<std::string> as_tex = as_json;
  as_tex.insert(as_tex.end(), {"--format", "tex"});
  const auto t = call(as_tex);
  CHECK(t.code == 0);
  CHECK(t.out.find("\\hline") != std::string::npos);
  CHECK(t.out.find("\\begin{tabular}") == std::string::npos);
}

TEST_CASE("warnings survive every format") {
  const std::vector<std::string> base = {"bound", "--d", "-2", "--N", "5", "--k", "0"};
  for (const char* fmt : {"csv", "tex"}) {
    auto args = base;
    args.insert(args.begin(), {"--format", fmt});
    const auto r = call(args);
    CHECK(r.code == 0);
    CHECK(r.out.find("not integral individually") != std::string::npos);
  }
}

TEST_CASE("replay reproduces records") {
  const auto path = std::filesystem::temp_directory_path() / "bianchi_cli_replay.jsonl";
  {
    std::ofstream file(path);
    file << call({"bound", "--d", "-2", "--N", "25", "--k", "0"}).out;
    file << call({"table", "--d-list", "-2", "--N-list", "3,5", "--k-list", "0"}).out;
    file << call({"gl2", "--d", "-2", "--k", "4"}).out;
  }
  auto r = call({"replay", "--input", path.string()});
  CHECK(r.code == 0);
  CHECK(r.records().at(0)["result"]["mismatched"] == 0);
  CHECK(r.records().at(0)["result"]["records"] == 4);

  {
    std::ofstream file(path);
    std::string line = call({"bound", "--d", "-2", "--N", "5", "--k", "0"}).out;
    line.replace(line.find("\"12\""), 4, "\"13\"");
    file << line;
  }
  r = call({"replay", "--input", path.string()});
  CHECK(r.code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("verify exit codes") {
  auto r = call({"verify", "cusps"});
  CHECK(r.code == 0);
  r = call({"verify", "fixedpoints"});
  CHECK(r.code == 0);  // the tau census mismatch is a diagnostic only
  bool soft_failure = false;
  for (const auto& rec : r.records()) {
    if (!rec["result"]["passed"].get<bool>()) soft_failure = soft_failure || !rec["result"]["hard"].get<bool>();
  }
  CHECK(soft_failure);
  CHECK(call({"verify", "bogus"}).code == 1);
}

TEST_CASE("cache directory") {
  const auto dir = std::filesystem::temp_directory_path() / "bianchi_cli_cache";
  std::filesystem::remove_all(dir);
  setenv("BIANCHI_CACHE_DIR", dir.c_str(), 1);
  const auto first = call({"cusps", "--d", "-7", "--N", "3"});
  const auto second = call({"cusps", "--d", "-7", "--N", "3"});
  unsetenv("BIANCHI_CACHE_DIR");
  CHECK(first.out == second.out);
  CHECK(std::filesystem::exists(dir / "sl2_dm7_N3.json"));
  CHECK(std::filesystem::exists(dir / "class_number_dm7.json"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("scans") {
  const auto r = call({"scan", "level", "--d", "-2", "--p", "5", "--n-list", "1,2,3", "--floor", "1/20"});
  REQUIRE(r.code == 0);
  const auto recs = r.records();
  REQUIRE(recs.size() == 4);
  CHECK(recs.back()["result"]["above_floor"] == true);
  const auto w = call({"scan", "weight", "--d", "-7", "--N", "3", "--k-list", "0,1,2,3,4,5"});
  CHECK(w.records().back()["result"]["constant"] == true);
}
