#include <doctest.h>

#include <evoalg/algebra_io.hpp>
#include <evoalg/catalog.hpp>
#include <evoalg/cli.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace evoalg;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "evoalg_test_" + std::to_string(counter++) + ".json";
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

const char* kN22 = R"({"dim": 2, "squares": [["0", "1"], ["0", "0"]], "name": "N_{2,2}"})";

}  // namespace

TEST_CASE("algebra files parse and round-trip") {
  AlgebraFile file = parse_algebra_text(kN22);
  CHECK(file.algebra == catalog::build("N_{2,2}"));
  CHECK(file.name == "N_{2,2}");
  CHECK(file.warnings.empty());

  AlgebraFile again = parse_algebra_text(serialize_algebra(file.algebra, file.name));
  CHECK(again.algebra.structure() == file.algebra.structure());
  CHECK(again.name == file.name);

  // Integer entries and rational strings mix freely.
  AlgebraFile mixed = parse_algebra_text(R"({"dim": 2, "squares": [[0, "1/2"], [1, 0]]})");
  CHECK(mixed.algebra.structure().at(0, 1) == rat(1, 2));
  CHECK(mixed.algebra.structure().at(1, 0) == 1);
}

TEST_CASE("parse errors carry field context") {
  CHECK_THROWS_WITH_AS(parse_algebra_text(R"({"dim": 2, "squares": [["0", "1"]]})"),
                       "\"squares\" has 1 rows, expected 2", ParseError);
  CHECK_THROWS_AS(parse_algebra_text(R"({"dim": 2})"), ParseError);
  CHECK_THROWS_AS(parse_algebra_text(R"({"squares": []})"), ParseError);
  CHECK_THROWS_AS(parse_algebra_text("not json"), ParseError);
  CHECK_THROWS_AS(parse_algebra_text(R"({"dim": 0, "squares": []})"), ParseError);
  CHECK_THROWS_AS(
      parse_algebra_text(R"({"dim": 1, "squares": [[0.5]]})"), ParseError);
  try {
    parse_algebra_text(R"({"dim": 2, "squares": [["0", "1"], ["0", "x"]]})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("squares[1][1]") != std::string::npos);
  }
}

TEST_CASE("unknown fields produce warnings, not errors") {
  AlgebraFile file =
      parse_algebra_text(R"({"dim": 1, "squares": [["0"]], "comment": "hi"})");
  REQUIRE(file.warnings.size() == 1);
  CHECK(file.warnings[0].find("comment") != std::string::npos);
}

TEST_CASE("info command") {
  TempFile file(kN22);
  std::ostringstream out, err;
  CHECK(cli::cmd_info(file.path, out, err) == cli::kOk);
  const std::string text = out.str();
  CHECK(text.find("annihilator: dim 1") != std::string::npos);
  CHECK(text.find("associative: yes") != std::string::npos);
  CHECK(text.find("power-associative: yes") != std::string::npos);
  CHECK(text.find("nil, index 3") != std::string::npos);
  CHECK(text.find("(indecomposable)") != std::string::npos);
}

TEST_CASE("info on a broken file exits with the input-error code") {
  TempFile file(R"({"dim": 2, "squares": [["0", "1", "0"], ["0", "0", "0"]]})");
  std::ostringstream out, err;
  CHECK(cli::cmd_info(file.path, out, err) == cli::kInputError);
  CHECK(err.str().find("error:") != std::string::npos);
  std::ostringstream out2, err2;
  CHECK(cli::cmd_info("missing_file.json", out2, err2) == cli::kInputError);
}

TEST_CASE("info reports non-associativity of N_{4,6}") {
  TempFile file(serialize_algebra(catalog::build("N_{4,6}")));
  std::ostringstream out, err;
  CHECK(cli::cmd_info(file.path, out, err) == cli::kOk);
  CHECK(out.str().find("associative: no") != std::string::npos);
}

TEST_CASE("derivations command, text and json") {
  TempFile file(kN22);
  std::ostringstream out, err;
  CHECK(cli::cmd_derivations(file.path, false, out, err) == cli::kOk);
  CHECK(out.str().find("dim D(E): 2") != std::string::npos);
  CHECK(out.str().find("dim D(E)': 1") != std::string::npos);

  std::ostringstream json_out, json_err;
  CHECK(cli::cmd_derivations(file.path, true, json_out, json_err) == cli::kOk);
  CHECK(json_out.str().find("\"dim_derivations\": 2") != std::string::npos);
  // The embedded algebra document round-trips through the parser.
  const std::string json_text = json_out.str();
  const std::string key = "\"algebra\": ";
  const std::size_t start = json_text.find(key) + key.size();
  std::size_t depth = 0, end = start;
  do {
    if (json_text[end] == '{') ++depth;
    if (json_text[end] == '}') --depth;
    ++end;
  } while (depth > 0);
  AlgebraFile embedded = parse_algebra_text(json_text.substr(start, end - start));
  CHECK(embedded.algebra == catalog::build("N_{2,2}"));

  TempFile zero(R"({"dim": 2, "squares": [["0", "0"], ["0", "0"]]})");
  std::ostringstream out2, err2;
  CHECK(cli::cmd_derivations(zero.path, false, out2, err2) == cli::kOk);
  CHECK(out2.str().find("dim D(E): 4") != std::string::npos);

  TempFile n617(serialize_algebra(catalog::build("N_{6,17}", {Rat(1), Rat(1), Rat(1)})));
  std::ostringstream out3, err3;
  CHECK(cli::cmd_derivations(n617.path, false, out3, err3) == cli::kOk);
  CHECK(out3.str().find("dim D(E): 10") != std::string::npos);
}

TEST_CASE("inner command") {
  TempFile file(serialize_algebra(catalog::build("N_{5,11}", {Rat(1)})));
  std::ostringstream out, err;
  CHECK(cli::cmd_inner(file.path, out, err) == cli::kOk);
  CHECK(out.str().find("dim In(E): 3") != std::string::npos);
  CHECK(out.str().find("verified") != std::string::npos);

  TempFile n625(serialize_algebra(catalog::build("N_{6,25}", {Rat(1)})));
  std::ostringstream out2, err2;
  CHECK(cli::cmd_inner(n625.path, out2, err2) == cli::kOk);
  CHECK(out2.str().find("dim In(E): 3") != std::string::npos);

  TempFile zero(R"({"dim": 2, "squares": [["0", "0"], ["0", "0"]]})");
  std::ostringstream out3, err3;
  CHECK(cli::cmd_inner(zero.path, out3, err3) == cli::kOk);
  CHECK(out3.str().find("dim In(E): 0") != std::string::npos);
}

TEST_CASE("decompose command") {
  TempFile file(serialize_algebra(catalog::build("N_{4,4}")));
  std::ostringstream out, err;
  CHECK(cli::cmd_decompose(file.path, out, err) == cli::kOk);
  CHECK(out.str().find("components: 2") != std::string::npos);
  CHECK(out.str().find("dim D(E) = 6 = 2 + 2 + 1 + 1") != std::string::npos);

  TempFile n32(serialize_algebra(catalog::build("N_{3,2}")));
  std::ostringstream out2, err2;
  CHECK(cli::cmd_decompose(n32.path, out2, err2) == cli::kOk);
  CHECK(out2.str().find("dim D(E) = 5 = 2 + 1 + 1 + 1") != std::string::npos);

  TempFile indec(kN22);
  std::ostringstream out3, err3;
  CHECK(cli::cmd_decompose(indec.path, out3, err3) == cli::kOk);
  CHECK(out3.str().find("indecomposable") != std::string::npos);
}

TEST_CASE("catalog list names every family") {
  std::ostringstream out;
  CHECK(cli::cmd_catalog_list(out) == cli::kOk);
  for (const auto& fam : catalog::families())
    CHECK(out.str().find(fam.name) != std::string::npos);
  CHECK(out.str().find("alpha*delta - beta*gamma != 0") != std::string::npos);
}

TEST_CASE("catalog verify exit codes") {
  std::ostringstream out, err;
  CHECK(cli::cmd_catalog_verify({"N_{5,12}", "1", "1"}, false, 42, out, err) == cli::kOk);
  CHECK(out.str().find("dim D: 4") != std::string::npos);

  std::ostringstream out2, err2;
  CHECK(cli::cmd_catalog_verify({"N_{6,23}", "1", "1", "1", "1"}, false, 42, out2, err2) ==
        cli::kInputError);
  CHECK(err2.str().find("alpha*delta - beta*gamma") != std::string::npos);

  std::ostringstream out3, err3;
  CHECK(cli::cmd_catalog_verify({"N_{bogus}"}, false, 42, out3, err3) == cli::kInputError);

  std::ostringstream out4, err4;
  CHECK(cli::cmd_catalog_verify({"N_{2,2}", "1"}, false, 42, out4, err4) == cli::kInputError);
}

TEST_CASE("catalog verify all families") {
  std::ostringstream out, err;
  CHECK(cli::cmd_catalog_verify({}, false, 42, out, err) == cli::kOk);
  CHECK(out.str().find("verifications passed") != std::string::npos);
  // The recorded disagreement is surfaced, not asserted.
  CHECK(out.str().find("recorded claims disagree") != std::string::npos);

  std::ostringstream json_out, json_err;
  CHECK(cli::cmd_catalog_verify({"N_{6,26}"}, true, 42, json_out, json_err) == cli::kOk);
  CHECK(json_out.str().find("\"disputed\": true") != std::string::npos);
}
