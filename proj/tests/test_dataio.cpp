#include "lorenz/dataio.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <sstream>

using lorenz::GroupedDistribution;
using lorenz::ReportTable;

TEST_CASE("builtin dataset carries the published values") {
  const auto& records = lorenz::builtin_dataset();
  REQUIRE(records.size() == 4);

  CHECK(records[0].country == "Malta");
  CHECK(records[0].year == 2018);
  CHECK(records[0].gini == 0.287);
  REQUIRE(records[0].deciles.has_value());
  CHECK(records[0].deciles->values[9] == 0.230);

  CHECK(records[1].country == "Taiwan");
  CHECK(records[1].gini == 0.315);
  CHECK(records[2].country == "USA");
  CHECK(records[2].gini == 0.411);

  CHECK(records[3].country == "Cote d'Ivoire");
  CHECK(records[3].gini == 0.590);
  const auto* civ5 = records[3].tail_observation(0.05);
  REQUIRE(civ5 != nullptr);
  CHECK(civ5->bottom_share == 0.002);
  CHECK(civ5->top_share == 0.350);
  REQUIRE(civ5->ratio.has_value());
  CHECK(*civ5->ratio == 0.006);

  // The 10% pair is the first/last decile share at table precision.
  for (const auto& rec : records) {
    const auto* ten = rec.tail_observation(0.10);
    REQUIRE(ten != nullptr);
    CHECK(ten->bottom_share == rec.deciles->values[0]);
    CHECK(ten->top_share == rec.deciles->values[9]);
    CHECK_FALSE(ten->ratio.has_value());
  }

  // Every record passes the same validation the parser applies.
  for (const auto& rec : records) {
    CHECK(std::abs(rec.deciles->sum() - 1.0) <= 1e-3);
    for (const auto& obs : rec.tail_observations) CHECK_NOTHROW(obs.validate());
  }
}

TEST_CASE("parse a full row") {
  std::istringstream in(
      "country,year,gini,d1,d2,d3,d4,d5,d6,d7,d8,d9,d10,bottom5,top5,bottom10,top10\n"
      "Malta,2018,0.287,0.0360,0.0510,0.0620,0.0720,0.0830,0.0940,0.1070,0.1210,0.1440,0.2300,"
      "0.016,0.139,0.036,0.230\n");
  const auto records = lorenz::parse_grouped_csv(in);
  REQUIRE(records.size() == 1);
  const GroupedDistribution& rec = records[0];
  CHECK(rec.country == "Malta");
  CHECK(rec.year == 2018);
  CHECK(rec.gini == 0.287);
  REQUIRE(rec.deciles.has_value());
  CHECK(rec.deciles->values[0] == 0.0360);
  CHECK(rec.deciles->values[9] == 0.2300);
  REQUIRE(rec.tail_observations.size() == 2);
  CHECK(rec.tail_observation(0.05)->bottom_share == 0.016);
  CHECK(rec.tail_observation(0.10)->top_share == 0.230);
}

TEST_CASE("parse edge cases") {
  std::istringstream empty("country,year,gini\n");
  CHECK(lorenz::parse_grouped_csv(empty).empty());

  std::istringstream comments(
      "# grouped income data\n"
      "country,year,gini\n"
      "# a comment between rows\n"
      "Somewhere,2000,0.35\n"
      "\n");
  const auto records = lorenz::parse_grouped_csv(comments);
  REQUIRE(records.size() == 1);
  CHECK(records[0].country == "Somewhere");
  CHECK_FALSE(records[0].deciles.has_value());
  CHECK(records[0].tail_observations.empty());

  std::istringstream no_header("");
  CHECK_THROWS_AS(lorenz::parse_grouped_csv(no_header), lorenz::CsvParseError);

  std::istringstream missing_required("country,year\nX,2000\n");
  CHECK_THROWS_AS(lorenz::parse_grouped_csv(missing_required), lorenz::CsvParseError);

  std::istringstream partial_deciles("country,year,gini,d1,d2\nX,2000,0.3,0.1,0.1\n");
  CHECK_THROWS_AS(lorenz::parse_grouped_csv(partial_deciles), lorenz::CsvParseError);

  std::istringstream lonely_tail("country,year,gini,bottom10\nX,2000,0.3,0.05\n");
  CHECK_THROWS_AS(lorenz::parse_grouped_csv(lonely_tail), lorenz::CsvParseError);
}

TEST_CASE("parse diagnostics carry row and column") {
  std::istringstream bad_number("country,year,gini\nX,2000,zero.35\n");
  try {
    lorenz::parse_grouped_csv(bad_number);
    FAIL("expected CsvParseError");
  } catch (const lorenz::CsvParseError& err) {
    const std::string what = err.what();
    CHECK(what.find("row 2") != std::string::npos);
    CHECK(what.find("gini") != std::string::npos);
  }

  std::istringstream bad_sum(
      "country,year,gini,d1,d2,d3,d4,d5,d6,d7,d8,d9,d10\n"
      "X,2000,0.35,0.09,0.09,0.09,0.09,0.09,0.09,0.09,0.09,0.09,0.09\n");
  try {
    lorenz::parse_grouped_csv(bad_sum);
    FAIL("expected CsvParseError");
  } catch (const lorenz::CsvParseError& err) {
    CHECK(std::string(err.what()).find("0.9") != std::string::npos);
  }

  std::istringstream bad_width("country,year,gini\nX,2000\n");
  CHECK_THROWS_AS(lorenz::parse_grouped_csv(bad_width), lorenz::CsvParseError);

  std::istringstream decreasing(
      "country,year,gini,d1,d2,d3,d4,d5,d6,d7,d8,d9,d10\n"
      "X,2000,0.35,0.10,0.02,0.08,0.09,0.10,0.10,0.11,0.12,0.13,0.15\n");
  CHECK_THROWS_AS(lorenz::parse_grouped_csv(decreasing), lorenz::CsvParseError);

  std::istringstream inconsistent_tail(
      "country,year,gini,d1,d2,d3,d4,d5,d6,d7,d8,d9,d10,bottom10,top10\n"
      "X,2000,0.35,0.03,0.05,0.06,0.07,0.08,0.09,0.11,0.12,0.15,0.24,0.06,0.24\n");
  CHECK_THROWS_AS(lorenz::parse_grouped_csv(inconsistent_tail), lorenz::CsvParseError);
}

TEST_CASE("soft warning for rounded share sums") {
  // Sums to 0.995: accepted, but flagged.
  std::istringstream in(
      "country,year,gini,d1,d2,d3,d4,d5,d6,d7,d8,d9,d10\n"
      "X,2000,0.35,0.030,0.048,0.059,0.069,0.079,0.089,0.105,0.120,0.150,0.246\n");
  std::vector<std::string> warnings;
  const auto records = lorenz::parse_grouped_csv(in, &warnings);
  REQUIRE(records.size() == 1);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("0.995") != std::string::npos);
}

TEST_CASE("csv write round trip") {
  ReportTable table;
  table.columns = {"country", "year", "gini", "d1"};
  table.precision = {-1, 0, -1, 4};
  table.rows.push_back({std::string("Malta"), 2018.0, 0.287, 0.036});
  table.rows.push_back({std::string("Taiwan, ROC"), 2016.0, 0.315, 0.0336});

  std::ostringstream out;
  lorenz::write_report_csv(table, out);
  const std::string text = out.str();
  CHECK(text.find("\"Taiwan, ROC\"") != std::string::npos);

  // Numeric fields survive a reparse within 1e-6.
  std::istringstream in(
      "country,year,gini,d1,d2,d3,d4,d5,d6,d7,d8,d9,d10\n"
      "Roundtrip,2001,0.4123456,0.0312345,0.05,0.06,0.07,0.08,0.09,0.1,0.12,0.15,0.2464655\n");
  const auto records = lorenz::parse_grouped_csv(in);
  ReportTable echo;
  echo.columns = {"country", "year", "gini", "d1", "d2", "d3", "d4", "d5",
                  "d6", "d7", "d8", "d9", "d10"};
  std::vector<ReportTable::Cell> row{records[0].country,
                                     static_cast<double>(records[0].year), records[0].gini};
  for (double d : records[0].deciles->values) row.push_back(d);
  echo.rows.push_back(row);
  std::ostringstream echoed;
  lorenz::write_report_csv(echo, echoed);
  std::istringstream echoed_in(echoed.str());
  const auto reparsed = lorenz::parse_grouped_csv(echoed_in);
  REQUIRE(reparsed.size() == 1);
  CHECK(reparsed[0].gini == Catch::Approx(records[0].gini).margin(1e-6));
  for (int i = 0; i < 10; ++i)
    CHECK(reparsed[0].deciles->values[i] ==
          Catch::Approx(records[0].deciles->values[i]).margin(1e-6));
}

TEST_CASE("empty report writes header only") {
  ReportTable table;
  table.columns = {"a", "b"};
  std::ostringstream out;
  lorenz::write_report_csv(table, out);
  CHECK(out.str() == "a,b\n");
}
