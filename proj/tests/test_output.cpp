#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "greenring/output.hpp"

using namespace greenring;
using namespace greenring::out;

TEST_CASE("ring element JSON is a sorted pair list") {
    RingElement e;
    e.add(87, Int(1));
    e.add(3, Int("123456789012345678901234567890"));
    e.add(11, Int(-2));
    json j = element_to_json(e);
    REQUIRE(j.size() == 3);
    CHECK(j[0][0] == 3);  // sorted by index
    CHECK(j[0][1] == "123456789012345678901234567890");
    CHECK(j[1][0] == 11);
    CHECK(j[1][1] == "-2");
    CHECK(j[2][0] == 87);
    CHECK(element_from_json(j) == e);
}

TEST_CASE("element serialization round trip on random elements") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> idx(1, 1'000'000'000'000LL);
    std::uniform_int_distribution<int> coeff(-50, 50);
    for (int trial = 0; trial < 100; ++trial) {
        RingElement e;
        for (int t = 0; t < 5; ++t) e.add(idx(rng), coeff(rng));
        CHECK(element_from_json(element_to_json(e)) == e);
    }
}

TEST_CASE("malformed element JSON is rejected") {
    CHECK_THROWS_AS(element_from_json(json::parse("[[1]]")), precondition_error);
    CHECK_THROWS_AS(element_from_json(json::parse("[{\"i\":1}]")), precondition_error);
}

TEST_CASE("factorized class serialization") {
    green::FactorizedClass c;
    c.base = 3;
    c.levels = {4, 0, 1, 1};
    json j = factorized_to_json(c);
    CHECK(j["base"] == 3);
    CHECK(j["levels"] == std::vector<int>({4, 0, 1, 1}));
    CHECK(factorized_from_json(j) == c);
}

TEST_CASE("output record round-trips through its own JSON schema") {
    OutputRecord rec;
    rec.command = "verlinde dn";
    rec.param("p", "5");
    rec.param("object", "0,1,0,0");
    rec.scalar("kv", "1.6180339887498949");
    rec.scalar("kv_err", "4.4e-15");
    rec.raw("closure", json::array({1, 2, 3, 4}));
    rec.columns = {"n", "d_n", "c_n"};
    rec.rows = {{"1", "1", "0.618"}, {"2", "2", "0.7639"}};

    OutputRecord back = OutputRecord::from_json(rec.to_json());
    CHECK(back.command == rec.command);
    CHECK(back.scalars == rec.scalars);
    CHECK(back.columns == rec.columns);
    CHECK(back.rows == rec.rows);
    CHECK(back.raws.size() == 1);
    CHECK(back.raws[0].second == rec.raws[0].second);
    // params are carried as a JSON object; same set either way
    CHECK(json(rec.to_json()["params"]) == back.to_json()["params"]);
    // a second round trip is exact
    CHECK(OutputRecord::from_json(back.to_json()).to_json() == back.to_json());
}

TEST_CASE("CSV carries the same data as JSON") {
    OutputRecord rec;
    rec.command = "demo";
    rec.param("p", "5");
    rec.scalar("value", "42");
    rec.raw("closure", json::array({1, 2}));
    rec.columns = {"a", "b"};
    rec.rows = {{"1", "2"}, {"3", "4"}};
    std::string csv = rec.to_csv();
    CHECK(csv.find("# command=demo\n") != std::string::npos);
    CHECK(csv.find("# param.p=5\n") != std::string::npos);
    CHECK(csv.find("# result.value=42\n") != std::string::npos);
    CHECK(csv.find("# result.closure=[1,2]\n") != std::string::npos);
    CHECK(csv.find("a,b\n1,2\n3,4\n") != std::string::npos);

    json j = rec.to_json();
    CHECK(j["results"]["value"] == "42");
    CHECK(j["rows"][1][1] == "4");
}

TEST_CASE("doubles survive the %.17g format") {
    for (double v : {0.7978845608028654, 1e-300, -3.5, 1.4648163848908131}) {
        CHECK(std::stod(fmt_double(v)) == v);
    }
}
