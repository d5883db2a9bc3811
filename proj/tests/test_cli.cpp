#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "permdist/cli.hpp"
#include "permdist/code.hpp"
#include "permdist/constructions.hpp"
#include "permdist/error.hpp"
#include "permdist/matrix_file.hpp"

using namespace permdist;

namespace {

const std::string kData = PERMDIST_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("permdist_test_" + name);
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("matrix file parsing") {
  SUBCASE("fixture") {
    const LinearCode c = read_code_file(kData + "/gf8_6_3.txt");
    CHECK(c.generator() == example_code_gf8().generator());
  }
  SUBCASE("round trip") {
    for (const LinearCode& c : {example_code_gf8(), qr_code(23), repetition_code(make_field(7, 1), 3)}) {
      const std::string text = emit_matrix_file(c.generator());
      CHECK(parse_matrix_file(text) == c.generator());
      CHECK(emit_matrix_file(parse_matrix_file(text)) == text);
    }
  }
  SUBCASE("comments and blank lines") {
    const auto m = parse_matrix_file("# a code\n\nfield p=3 m=1   # ternary\nmatrix k=1 n=3\n\n1 2 0\n");
    CHECK(m.entries() == std::vector<Element>{1, 2, 0});
  }
  SUBCASE("default modulus when omitted") {
    const auto m = parse_matrix_file("field p=2 m=3\nmatrix k=1 n=2\n1 7\n");
    CHECK(m.field().modulus() == Coefficients{1, 1, 0, 1});
  }
  SUBCASE("errors carry line numbers") {
    const auto line_of = [](const std::string& text) {
      try {
        parse_matrix_file(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return std::size_t{0};
    };
    CHECK(line_of("field p=2 m=1\nmatrix k=1 n=3\n1 0 2\n") == 3);   // out of range
    CHECK(line_of("field p=2 m=1\nmatrix k=1 n=3\n1 0\n") == 3);     // short row
    CHECK(line_of("field p=4 m=1\nmatrix k=1 n=3\n1 0 1\n") == 1);   // not prime
    CHECK(line_of("field p=2 m=1\n\nmatrix k=2 n=3\n1 0 1\n") == 4); // missing row, reported at the last line
    CHECK(line_of("field p=2 m=1 x=3\nmatrix k=1 n=3\n1 0 1\n") == 1);
    CHECK(line_of("field p=2 m=2 modulus=1,0,1\nmatrix k=1 n=3\n1 0 1\n") == 1);  // reducible
    CHECK(line_of("field p=2 m=1\nmatrix k=1 n=3\n1 0 1\n1 1 1\n") == 4);         // extra row
    CHECK(line_of("matrix k=1 n=3\n1 0 1\n") == 1);
    CHECK_THROWS_AS(parse_code_file("field p=2 m=1\nmatrix k=2 n=3\n1 0 1\n1 0 1\n"), ParseError);
    CHECK_THROWS_AS(read_code_file(kData + "/does_not_exist.txt"), Error);
  }
}

TEST_CASE("bound") {
  const auto rep = write_temp("rep5.txt", "field p=2 m=1\nmatrix k=1 n=5\n1 1 1 1 1\n");
  auto r = cli({"bound", "--in", rep, "--gens", "10"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out).at(0) == "bound 5");
  CHECK(lines(r.out).at(1) == "witness 1 1 1 1 1");
  CHECK(r.err.find("wall_time") != std::string::npos);

  const auto hamming = kData + "/hamming_7_4.txt";
  const auto a = cli({"bound", "--in", hamming, "--seed", "9", "--gens", "200"});
  const auto b = cli({"bound", "--in", hamming, "--seed", "9", "--gens", "200"});
  CHECK(a.out == b.out);
  CHECK(lines(a.out).at(0) == "bound 3");

  const auto j = cli({"bound", "--in", kData + "/gf8_6_3.txt", "--gens", "50", "--json", "--target", "3"});
  REQUIRE(j.code == kExitOk);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["bound"] == 3);
  CHECK(doc["witness"].size() == 6);
  CHECK(doc["permutation"].size() == 6);
  CHECK(doc["generations"].get<int>() <= 50);

  const auto timed = cli({"bound", "--in", hamming, "--time", "0.05"});
  CHECK(timed.code == kExitOk);
}

TEST_CASE("exact, random and qr") {
  CHECK(cli({"exact", "--in", kData + "/hamming_7_4.txt"}).out == "distance 3\n");
  CHECK(cli({"exact", "--in", kData + "/golay_23_12.txt"}).out == "distance 7\n");
  const auto big = cli({"exact", "--in", kData + "/qr_223.txt"});
  CHECK(big.code == kExitBudget);
  CHECK(big.err.find("budget") != std::string::npos);
  CHECK(cli({"exact", "--in", kData + "/hamming_7_4.txt", "--budget", "10"}).code == kExitBudget);

  const auto rnd = cli({"random", "--in", kData + "/gf8_6_3.txt", "--count", "200", "--seed", "3"});
  CHECK(rnd.code == kExitOk);
  CHECK(lines(rnd.out).at(0) == "bound 3");
  CHECK(cli({"random", "--in", kData + "/gf8_6_3.txt", "--count", "0"}).code == kExitUsage);

  const auto qr7 = cli({"qr", "--p", "7"});
  CHECK(qr7.code == kExitOk);
  CHECK(parse_code_file(qr7.out).generator() == qr_code(7).generator());
  const auto qr23 = cli({"qr", "--p", "23"});
  CHECK(exact_distance(parse_code_file(qr23.out)) == 7);
  CHECK(cli({"qr", "--p", "5"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"bound"}).code == kExitUsage);
  CHECK(cli({"bound", "--in", kData + "/hamming_7_4.txt", "--bogus"}).code == kExitUsage);
  CHECK(cli({"bound", "--in", kData + "/hamming_7_4.txt", "--r", "9"}).code == kExitUsage);
  CHECK(cli({"bound", "--in", kData + "/hamming_7_4.txt", "--pc", "2"}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  const auto bad = write_temp("bad.txt", "field p=2 m=1\nmatrix k=1 n=3\n1 0 5\n");
  const auto r = cli({"exact", "--in", bad});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("bench") {
  const auto hamming = kData + "/hamming_7_4.txt";
  const auto one = cli({"bench", "--in", hamming, "--reps", "1", "--gens", "0", "--no-timing"});
  REQUIRE(one.code == kExitOk);
  const auto rows = lines(one.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "code,n,k,q,bound,hits,pop,avg_loop,avg_time,random,random_hits");
  CHECK(rows[1].rfind("hamming_7_4,7,4,2,", 0) == 0);
  CHECK(rows[1].find(",1,5,0.00,,") != std::string::npos);

  const auto hist = write_temp("hist.csv", "");
  const auto with_random =
      cli({"bench", "--in", hamming, "--reps", "6", "--gens", "20", "--random-baseline", "--histogram", hist,
           "--no-timing"});
  REQUIRE(with_random.code == kExitOk);
  std::ifstream h(hist);
  std::stringstream buf;
  buf << h.rdbuf();
  const auto hrows = lines(buf.str());
  CHECK(hrows.size() == 1 + 6 + 6);
  CHECK(hrows.at(0) == "method,rep,bound");

  // Thread count must not change the output.
  const std::vector<std::string> args{"bench", "--in", kData + "/golay_23_12.txt", "--reps", "8", "--gens", "30",
                                      "--random-baseline", "--no-timing", "--seed", "5"};
  ::setenv("PERMDIST_THREADS", "0", 1);
  const auto seq = cli(args);
  ::setenv("PERMDIST_THREADS", "4", 1);
  const auto par = cli(args);
  ::unsetenv("PERMDIST_THREADS");
  CHECK(seq.code == kExitOk);
  CHECK(seq.out == par.out);
}
