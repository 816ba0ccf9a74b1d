#include "doctest.h"
#include "frobknot/cli.hpp"
#include "frobknot/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace frobknot;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  TempFile(const std::string& name, const std::string& contents)
      : path_(std::filesystem::temp_directory_path() / ("frobknot_test_" + name)) {
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("ring and scalar JSON") {
  for (const RingSpec& r : {RingSpec::integers(), RingSpec::rationals(), RingSpec::prime_field(7)})
    CHECK(ring_from_json(ring_to_json(r)) == r);
  CHECK(ring_from_json(Json("Fp:3")) == RingSpec::prime_field(3));
  CHECK_THROWS_AS(ring_from_json(Json{{"kind", "R"}}), Error);
  CHECK_THROWS_AS(ring_from_json(Json{{"kind", "Fp"}, {"p", 4}}), Error);

  const RingSpec q = RingSpec::rationals();
  CHECK(scalar_to_json(q, Scalar(-3, 4)) == Json("-3/4"));
  CHECK(scalar_from_json(q, Json("-3/4")) == Scalar(-3, 4));
  CHECK(scalar_from_json(RingSpec::prime_field(5), Json(-1)) == 4);
  CHECK_THROWS_AS(scalar_from_json(RingSpec::integers(), Json("1/2")), Error);
  CHECK_THROWS_AS(scalar_from_json(q, Json(0.5)), Error);
}

TEST_CASE("table and algebra JSON round trip") {
  const RingSpec f3 = RingSpec::prime_field(3);
  const MultTable c = MultTable::commutative_table(f3, {1, 0}, {0, 1}, {2, 1});
  CHECK(mult_table_from_json(mult_table_to_json(c)) == c);
  const MultTable nc = instantiate(f3, {"nc_left", {}});
  CHECK(mult_table_from_json(mult_table_to_json(nc)) == nc);

  Json bad = mult_table_to_json(c);
  bad["products"]["e2e1"] = Json::array({"2", "2"});
  CHECK_THROWS_AS(mult_table_from_json(bad), Error);

  for (const FrobeniusData& f : {a5(0, 0), a5(1, -1, RingSpec::rationals()), a5(2, 1, f3)})
    CHECK(frobenius_from_json(frobenius_to_json(f)) == f);

  Json j = frobenius_to_json(a5(0, 0));
  j["mult"].erase(0);
  CHECK_THROWS_AS(frobenius_from_json(j), Error);
  j = frobenius_to_json(a5(0, 0));
  j.erase("rank");
  CHECK_THROWS_AS(frobenius_from_json(j), Error);
  CHECK_THROWS_AS(parse_json("{"), Error);
}

TEST_CASE("cli examples") {
  const auto v = run_cli({"verify", "thm1.2", "--p", "2"});
  CHECK(v.code == 0);
  CHECK(v.out.rfind("thm1.2 over F2: 64 tables, 0 counterexamples\n", 0) == 0);

  const auto b = run_cli({"bracket", "builder:unknot_0"});
  CHECK(b.code == 0);
  CHECK(b.out == "1\n");

  const auto h = run_cli({"homology", "builder:figure10_d1", "--a5", "0,0", "--json"});
  REQUIRE(h.code == 0);
  const Json j = parse_json(h.out);
  int nonzero = 0;
  for (const auto& g : j["groups"]) {
    if (g["free_rank"].get<int>() == 0 && g["torsion"].empty()) continue;
    ++nonzero;
    CHECK(g["i"] == 1);
    CHECK(g["free_rank"] == 4);
  }
  CHECK(nonzero == 1);
}

TEST_CASE("cli homology") {
  const auto t = run_cli({"homology", "builder:trefoil", "--a5", "0,0", "--normalize", "--bigraded"});
  CHECK(t.code == 0);
  CHECK(t.out == "H^0,1 = Z\nH^0,3 = Z\nH^2,5 = Z\nH^3,7 = Z/2\nH^3,9 = Z\n");

  const auto g = run_cli({"homology", "builder:trefoil"});
  CHECK(g.code == 2);
  CHECK(g.err.find("--a5") != std::string::npos);

  // A PD file gives the same answer as the builder.
  const TempFile pd("trefoil.pd", "# right trefoil\nX 4 2 5 1\nX 6 4 1 3\nX 2 6 3 5\n");
  const auto from_file = run_cli({"homology", pd.path(), "--a5", "0,0", "--json"});
  const auto from_builder = run_cli({"homology", "builder:trefoil", "--a5", "0,0", "--json"});
  CHECK(from_file.code == 0);
  CHECK(from_file.out == from_builder.out);

  // An algebra file, read into a different ring.
  const TempFile alg("a5.json", frobenius_to_json(a5(0, 0)).dump());
  const auto over_f2 = run_cli({"homology", "builder:trefoil", "--algebra", alg.path(), "--ring", "Fp:2"});
  CHECK(over_f2.code == 0);
  CHECK(over_f2.out == "H^0 = F2^2\nH^1 = 0\nH^2 = F2^2\nH^3 = F2^2\n");

  CHECK(run_cli({"homology", "builder:trefoil", "--a5", "1"}).code == 2);
  CHECK(run_cli({"homology", "builder:trefoil", "--a5", "1,0", "--bigraded"}).code == 2);
  CHECK(run_cli({"homology", "builder:nope", "--a5", "0,0"}).code == 2);
  CHECK(run_cli({"homology", "/nonexistent/file.pd", "--a5", "0,0"}).code == 2);
  CHECK(run_cli({"homology", "builder:trefoil", "--a5", "0,0", "--algebra", alg.path()}).code == 2);
}

TEST_CASE("cli bracket") {
  const auto j = run_cli({"bracket", "builder:trefoil", "--jones", "--json"});
  CHECK(j.code == 0);
  CHECK(parse_json(j.out)["jones"] == "-q^8 + q^6 + q^2");
  const TempFile pd("unoriented.pd", "X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n");
  CHECK(run_cli({"bracket", pd.path()}).code == 0);
}

TEST_CASE("cli algebra checks") {
  const TempFile good("good.json", frobenius_to_json(a5(0, 0)).dump());
  const auto c = run_cli({"check-algebra", good.path()});
  CHECK(c.code == 0);
  CHECK(c.out.find("frobenius_relation: yes\n") != std::string::npos);
  const auto cj = run_cli({"check-algebra", good.path(), "--json"});
  CHECK(parse_json(cj.out) == axiom_report_to_json(check_axioms(a5(0, 0))));
  CHECK(run_cli({"relations", good.path()}).code == 0);

  FrobeniusData zero_comult = a5(0, 0);
  zero_comult.comult.assign(8, 0);
  zero_comult.counit.reset();
  const TempFile bad("bad.json", frobenius_to_json(zero_comult).dump());
  const auto cb = run_cli({"check-algebra", bad.path()});
  CHECK(cb.code == 1);
  CHECK(cb.out.find("comult_injective: no\n") != std::string::npos);

  const TempFile broken("broken.json", "{\"ring\": \"Z\"}");
  CHECK(run_cli({"check-algebra", broken.path()}).code == 2);
  CHECK(run_cli({"relations", broken.path()}).code == 2);
}

TEST_CASE("cli classify") {
  const RingSpec f3 = RingSpec::prime_field(3);
  const MultTable t = MultTable::commutative_table(RingSpec::integers(), {1, 0}, {0, 1}, {0, 0});
  const TempFile file("table.json", mult_table_to_json(t).dump());
  const auto r = run_cli({"classify", file.path(), "--p", "3"});
  CHECK(r.code == 0);
  const MultTable in_f3 = MultTable::commutative_table(f3, {1, 0}, {0, 1}, {0, 0});
  CHECK(r.out == classify(in_f3).to_string() + ", unital\n");
  const auto j = run_cli({"classify", file.path(), "--p", "3", "--json"});
  CHECK(parse_json(j.out)["unital"] == true);
  // Over Z there is no classification.
  CHECK(run_cli({"classify", file.path()}).code == 2);
}

TEST_CASE("cli verify") {
  CHECK(run_cli({"verify", "thm1.1", "--p", "2"}).code == 0);
  CHECK(run_cli({"verify", "thm1.2", "--zbound", "1"}).code == 0);
  CHECK(run_cli({"verify", "char2"}).code == 0);
  CHECK(run_cli({"verify", "noncomm", "--p", "2"}).code == 0);
  const auto prop = run_cli({"verify", "prop3.4", "--p", "3"});
  CHECK(prop.code == 1);
  CHECK(prop.out.find("counterexample: associativity as stated (m13)") != std::string::npos);

  CHECK(run_cli({"verify", "thm1.1", "--p", "5"}).code == 2);
  CHECK(run_cli({"verify", "thm1.1", "--zbound", "2"}).code == 2);
  CHECK(run_cli({"verify", "thm1.2", "--p", "2", "--zbound", "2"}).code == 2);
  CHECK(run_cli({"verify", "thm9"}).code == 2);
}

TEST_CASE("cli usage errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  const auto r = run_cli({"bracket", "builder:unknot_0", "--bogus"});
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("JSON output does not depend on the worker count") {
  const char* old = std::getenv("FROBKNOT_THREADS");
  const std::string saved = old ? old : "";
  setenv("FROBKNOT_THREADS", "1", 1);
  const auto one = run_cli({"verify", "thm1.1", "--p", "2", "--json"});
  setenv("FROBKNOT_THREADS", "4", 1);
  const auto four = run_cli({"verify", "thm1.1", "--p", "2", "--json"});
  const auto again = run_cli({"verify", "thm1.1", "--p", "2", "--json"});
  if (old)
    setenv("FROBKNOT_THREADS", saved.c_str(), 1);
  else
    unsetenv("FROBKNOT_THREADS");
  CHECK(one.out == four.out);
  CHECK(four.out == again.out);
}
