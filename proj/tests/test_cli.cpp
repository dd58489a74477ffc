#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "egosim/cli.hpp"
#include "egosim/report.hpp"

using namespace egosim;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "egosim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string f; std::getline(in, f, sep);) out.push_back(f);
  return out;
}

struct Scratch {
  std::filesystem::path dir;
  Scratch() {
    dir = std::filesystem::temp_directory_path() /
          ("egosim-cli-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(dir);
  }
  ~Scratch() { std::filesystem::remove_all(dir); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  }
};

}  // namespace

TEST_CASE("signature of one A-21 node") {
  auto r = run_cli({"signature", "--input", "a21-signatures", "--node", "9"});
  CHECK(r.code == 0);
  CHECK(r.out == "9: 0.75 0.25 0.00 0.00 0.00 0.00 0.00\n");
}

TEST_CASE("signature of all triangle nodes") {
  Scratch s;
  auto path = s.write("tri.txt", "a b\nb c\na c\n");
  auto r = run_cli({"signature", "--input", path});
  CHECK(r.code == 0);
  CHECK(r.out == "a: 0.33 0.33 0.33\nb: 0.33 0.33 0.33\nc: 0.33 0.33 0.33\n");
}

TEST_CASE("karate node 1 signature has 18 components summing to one") {
  auto r = run_cli({"signature", "-i", "karate", "-n", "1", "--output-format", "csv", "--precision", "6"});
  REQUIRE(r.code == 0);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 2);
  auto header = split(rows[0], ',');
  auto fields = split(rows[1], ',');
  CHECK(header.size() == 19);
  REQUIRE(fields.size() == 19);
  CHECK(fields[0] == "1");
  double sum = 0;
  std::size_t nonzero = 0;
  for (std::size_t k = 1; k < fields.size(); ++k) {
    sum += std::stod(fields[k]);
    nonzero += std::stod(fields[k]) > 0;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(nonzero == 17);
}

TEST_CASE("signature json carries exact degrees") {
  auto r = run_cli({"signature", "-i", "a21-signatures", "-n", "13", "--output-format", "json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  const auto& sig = doc["signatures"][0];
  CHECK(sig["node"] == "13");
  CHECK(sig["degrees"] == nlohmann::json::array({3, 2, 1}));
  CHECK(sig["total"] == 6);
  CHECK(sig["width"] == 7);
}

TEST_CASE("isolated nodes are reported without aborting 'all'") {
  Scratch s;
  auto path = s.write("iso.txt", "a b\nz z\nb c\n");
  auto r = run_cli({"signature", "-i", path});
  CHECK(r.code != 0);
  CHECK(r.out == "a: 0.67 0.33 0.00\nb: 0.50 0.25 0.25\nz: undefined\nc: 0.67 0.33 0.00\n");
  CHECK(r.err.find("self-loop") != std::string::npos);
  CHECK(r.err.find("'z'") != std::string::npos);

  auto single = run_cli({"signature", "-i", path, "-n", "z"});
  CHECK(single.code != 0);
  CHECK(lines(single.err).size() == 2);  // warning + one-line diagnostic
}

TEST_CASE("matrix csv layout") {
  Scratch s;
  auto path = s.write("tri.txt", "a b\nb c\na c\n");
  auto r = run_cli({"matrix", "-i", path});
  CHECK(r.code == 0);
  CHECK(r.out == ",a,b,c\na,1.00,1.00,1.00\nb,1.00,1.00,1.00\nc,1.00,1.00,1.00\n");
}

TEST_CASE("karate matrix is symmetric with unit diagonal") {
  auto r = run_cli({"matrix", "-i", "karate", "--output-format", "json", "--threads", "3"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  const auto& m = doc["matrix"];
  REQUIRE(m.size() == 34);
  CHECK(std::count(doc["labels"].begin(), doc["labels"].end(), "28") == 1);
  for (std::size_t i = 0; i < 34; ++i) {
    CHECK(m[i][i].get<double>() == 1.0);
    for (std::size_t j = 0; j < 34; ++j) CHECK(m[i][j].get<double>() == m[j][i].get<double>());
  }
}

TEST_CASE("rank summary lines") {
  auto karate = run_cli({"rank", "-i", "karate"});
  CHECK(karate.code == 0);
  CHECK(lines(karate.out).back() == "# top=28 bottom=12");
  CHECK(lines(karate.out)[0] == "rank,label,score");
  CHECK(lines(karate.out).size() == 36);

  auto a21 = run_cli({"rank", "-i", "a21-signatures"});
  CHECK(lines(a21.out).back() == "# top=12 bottom=9");

  Scratch s;
  auto cycle = run_cli({"rank", "-i", s.write("c4.txt", "p q\nq r\nr s\ns p\n")});
  CHECK(lines(cycle.out).back() == "# top=p bottom=s");
  CHECK(lines(cycle.out)[1] == "1,p,3.00");

  auto file = (s.dir / "rank.csv").string();
  auto to_file = run_cli({"rank", "-i", "karate", "-o", file});
  CHECK(to_file.out == "top=28 bottom=12\n");
  std::ifstream in(file);
  std::string first;
  std::getline(in, first);
  CHECK(first == "rank,label,score");

  auto json = run_cli({"rank", "-i", "karate", "--output-format", "json"});
  auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["top"] == "28");
  CHECK(doc["bottom"] == "12");
  CHECK(doc["ranking"].size() == 34);
}

TEST_CASE("precision changes rendering only") {
  auto low = run_cli({"rank", "-i", "karate", "-p", "0"});
  auto high = run_cli({"rank", "-i", "karate", "-p", "12"});
  auto labels = [](const std::string& out) {
    std::vector<std::string> order;
    for (const auto& line : lines(out))
      if (!line.empty() && line[0] != '#' && line[0] != 'r') order.push_back(split(line, ',')[1]);
    return order;
  };
  CHECK(labels(low.out) == labels(high.out));
}

TEST_CASE("similar nodes") {
  auto r = run_cli({"similar", "-i", "a21-signatures", "-n", "18", "-k", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "rank,label,score\n1,19,1.00\n");

  auto four = run_cli({"similar", "-i", "a21-signatures", "-n", "4", "--top", "2"});
  CHECK(four.out == "rank,label,score\n1,16,1.00\n2,11,0.99\n");

  Scratch s;
  auto tri = run_cli({"similar", "-i", s.write("t.txt", "a b\nb c\na c\n"), "-n", "a", "-k", "2"});
  CHECK(tri.out == "rank,label,score\n1,b,1.00\n2,c,1.00\n");
}

TEST_CASE("error paths exit nonzero with one diagnostic line") {
  const std::vector<std::vector<std::string>> bad = {
      {"similar", "-i", "a21-signatures", "-n", "99"},
      {"similar", "-i", "a21-signatures", "-n", "4", "-k", "0"},
      {"signature", "-i", "a21-signatures", "-n", "nope"},
      {"matrix", "-i", "/nonexistent/graph.txt"},
      {"matrix", "-i", "karate", "-p", "18"},
      {"matrix", "-i", "karate", "--output-format", "text"},
      {"rank", "-i", "email"},
  };
  for (const auto& args : bad) {
    CAPTURE(args[0]);
    auto r = run_cli(args);
    CHECK(r.code != 0);
    CHECK(lines(r.err).size() == 1);
    CHECK(r.out.empty());
  }

  Scratch s;
  auto malformed = run_cli({"matrix", "-i", s.write("m.txt", "a b\na b c\n")});
  CHECK(malformed.code != 0);
  CHECK(malformed.err.find("line 2") != std::string::npos);

  CHECK(run_cli({}).code != 0);
  CHECK(run_cli({"matrix"}).code != 0);
}

TEST_CASE("csv input format") {
  Scratch s;
  auto path = s.write("e.csv", "source,target\nx,y\ny,z\n");
  auto r = run_cli({"rank", "-i", path, "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).back() == "# top=x bottom=y");
  CHECK(run_cli({"rank", "-i", s.write("n.csv", "x,y\n"), "--format", "csv"}).code != 0);
}

TEST_CASE("non-bundled dataset through --dataset-file") {
  Scratch s;
  auto path = s.write("airport.txt", "1 2\n2 3\n3 1\n3 4\n");
  auto r = run_cli({"rank", "-i", "us-airport", "--dataset-file", path});
  CHECK(r.code == 0);
  CHECK(lines(r.out).back() == "# top=1 bottom=4");  // sums 2.80, 2.80, 2.71, 2.37
}

TEST_CASE("datasets subcommand lists descriptors") {
  auto r = run_cli({"datasets"});
  CHECK(r.code == 0);
  CHECK(r.out.find("karate,graph,yes,34,78,28,12,") != std::string::npos);
  CHECK(r.out.find("email,graph,no,1133,10902,855,644,") != std::string::npos);
  auto j = nlohmann::json::parse(run_cli({"datasets", "--output-format", "json"}).out);
  CHECK(j["datasets"].size() >= 5);
}

TEST_CASE("matrix output is byte identical across runs and thread counts") {
  auto one = run_cli({"matrix", "-i", "karate", "-t", "1", "--output-format", "json"});
  auto many = run_cli({"matrix", "-i", "karate", "-t", "8", "--output-format", "json"});
  auto again = run_cli({"matrix", "-i", "karate", "-t", "8", "--output-format", "json"});
  CHECK(one.out == many.out);
  CHECK(many.out == again.out);
}

TEST_CASE("csv fields with separators are quoted") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}
