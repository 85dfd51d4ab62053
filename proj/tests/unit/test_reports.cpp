#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "helpers.hpp"
#include "plactic/report.hpp"

using namespace plactic;
using testutil::W;
using testutil::each_word_upto;

namespace {

void check_no_floats(const nlohmann::json& j) {
  CHECK(!j.is_number_float());
  if (j.is_object() || j.is_array())
    for (const auto& child : j) check_no_floats(child);
}

}  // namespace

TEST_CASE("format parsing") {
  CHECK(parse_format("json") == Format::json);
  CHECK(parse_format("csv") == Format::csv);
  CHECK(parse_format("table") == Format::table);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("tableau json round trip") {
  Tableau t = p_tableau(W("1213"));
  nlohmann::json j = tableau_json(t);
  CHECK(j.dump() == R"({"rows":[[1,1,3],[2]]})");
  CHECK(tableau_from_json(j) == t);
  CHECK(tableau_json(Tableau{}).dump() == R"({"rows":[]})");
  CHECK(tableau_from_json(nlohmann::json::parse(R"({"rows":[]})")).empty());

  each_word_upto(3, 5, [](const Word& w) {
    Tableau p = p_tableau(w);
    CHECK(tableau_from_json(tableau_json(p)) == p);
  });

  CHECK_THROWS(tableau_from_json(nlohmann::json::parse(R"({"rows":[[2],[1]]})")));
  CHECK_THROWS(tableau_from_json(nlohmann::json::parse(R"({"rows":[[0]]})")));
  CHECK_THROWS(tableau_from_json(nlohmann::json::parse(R"({"rows":[[1.5]]})")));
  CHECK_THROWS(tableau_from_json(nlohmann::json::parse(R"({"rows":"x"})")));
  CHECK_THROWS(tableau_from_json(nlohmann::json::parse(R"({})")));
}

TEST_CASE("slice report") {
  CentralizerSlice slice = centralizer_slice(W("1"), 2, 2);
  nlohmann::json j = slice_json(slice);
  CHECK(j.dump() ==
        R"({"base":"1","class_count":2,"classes":[)"
        R"({"shape":[2],"tableau":{"rows":[[1,1]]},"weight":"1"},)"
        R"({"shape":[1,1],"tableau":{"rows":[[1],[2]]},"weight":"1"}],)"
        R"("length":2,"max_letter":2,"total":"2"})");
  check_no_floats(j);

  // dump -> parse -> dump reproduces the bytes
  CHECK(nlohmann::json::parse(j.dump()).dump() == j.dump());

  CHECK(render_slice(slice, Format::json) == j.dump() + "\n");
  CHECK(render_slice(slice, Format::csv) ==
        "reading_word,shape,weight\n"
        "11,2,1\n"
        "21,1 1,1\n");
  std::string table = render_slice(slice, Format::table);
  CHECK(table.find("slice base=1 n=2 m=2: 2 classes, 2 words") !=
        std::string::npos);
  CHECK(table.find("[1 1] shape=2 weight=1") != std::string::npos);
}

TEST_CASE("counts too large for 64 bits stay exact in reports") {
  CentralizerSlice synthetic;
  synthetic.base = W("1");
  synthetic.length = 25;
  synthetic.max_letter = 25;
  synthetic.total = factorial(25);
  nlohmann::json j = slice_json(synthetic);
  CHECK(j.at("total").get<std::string>() == "15511210043330985984000000");
  CHECK(BigInt(j.at("total").get<std::string>()) == factorial(25));
}

TEST_CASE("stability report") {
  StabilityOptions opts;
  opts.with_members = true;
  StabilityReport rep = stability_probe(W("1234"), 4, 4, 4, {}, opts);
  nlohmann::json j = stability_json(rep);
  check_no_floats(j);
  CHECK(j.at("base") == "1234");
  CHECK(j.at("observed_stabilization_index") == 3);
  CHECK(j.at("powers").size() == 4);
  CHECK(j.at("powers")[0].at("k") == 1);
  CHECK(j.at("powers")[0].at("fingerprint").is_string());
  CHECK(j.at("powers")[0].at("word_count").is_string());
  CHECK(nlohmann::json::parse(j.dump()).dump() == j.dump());

  std::string csv = render_stability(rep, Format::csv);
  CHECK(csv.rfind("base,k,fingerprint,word_count,class_count,stabilized\n",
                  0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  std::string table = render_stability(rep, Format::table);
  CHECK(table.find("stability base=1234 K=4 L=4 M=4") != std::string::npos);
  CHECK(table.find("observed stabilization index: 3") != std::string::npos);
  CHECK(table.find("+4123") != std::string::npos);

  // an unsettled probe serializes the index as null
  StabilityReport unsettled;
  unsettled.base = W("1");
  unsettled.max_power = 1;
  unsettled.max_len = 1;
  unsettled.max_letter = 1;
  CHECK(stability_json(unsettled).at("observed_stabilization_index").is_null());
  CHECK(render_stability(unsettled, Format::table)
            .find("observed stabilization index: none") != std::string::npos);
}

TEST_CASE("coefficient report rendering") {
  CoefficientReport rep = coefficient_report(2);
  nlohmann::json j = coefficient_json(rep);
  check_no_floats(j);
  CHECK(j.at("n") == 2);
  CHECK(j.at("values") ==
        nlohmann::json::array({"0", "1", "2", "3", "4"}));
  CHECK(j.at("a").at("basis_shift") == 0);
  CHECK(j.at("a").at("coeffs") == nlohmann::json::array({"0", "1"}));
  CHECK(j.at("b").at("basis_shift") == 1);
  CHECK(j.at("b").at("coeffs") == nlohmann::json::array({"1", "1"}));
  CHECK(j.at("checks").at("all_pass") == true);
  CHECK(j.at("checks").size() == 13);
  CHECK(nlohmann::json::parse(j.dump()).dump() == j.dump());

  CHECK(render_coefficients(rep, Format::csv) ==
        "n,k,b\n"
        "2,1,1\n"
        "2,2,1\n");
  std::string table = render_coefficients(rep, Format::table);
  CHECK(table.find("coefficients n=2") != std::string::npos);
  CHECK(table.find("a_k") != std::string::npos);
  CHECK(table.find("all_pass=yes") != std::string::npos);
}

TEST_CASE("packed sweep rendering") {
  PackedSweepReport rep = packed_conjecture_sweep(2, 3, 4, 4);
  nlohmann::json j = packed_sweep_json(rep);
  check_no_floats(j);
  CHECK(j.at("m") == 2);
  CHECK(j.at("all_pass") == true);
  CHECK(j.at("candidates").empty());
  CHECK(nlohmann::json::parse(j.dump()).dump() == j.dump());

  std::string csv = render_packed_sweep(rep, Format::csv);
  CHECK(csv.rfind("representative,stable\n", 0) == 0);
  CHECK(csv.find("12,true") != std::string::npos);
  std::string table = render_packed_sweep(rep, Format::table);
  CHECK(table.find("packed sweep m=2") != std::string::npos);
  CHECK(table.find("all stable") != std::string::npos);
}

TEST_CASE("tableau text rendering") {
  CHECK(render_tableau(p_tableau(W("1213"))) == "1 1 3\n2\n");
  CHECK(render_tableau(Tableau{}) == "(empty)\n");
}
