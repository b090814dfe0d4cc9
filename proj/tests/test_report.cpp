#include <doctest.h>

#include "partstab/laurent.hpp"
#include "partstab/presets.hpp"
#include "partstab/report.hpp"

using namespace partstab;

TEST_CASE("spec round trip")
{
    auto j = json::parse(R"({"name": "mixed", "laurent": true, "rules": [
        {"a": "j", "b": "-1", "c": "2*j-1"},
        {"a": -1, "b": 0, "c": "j", "sign": 1, "jmin": 2, "jmax": 9}]})");
    auto spec = spec_from_json(j);
    REQUIRE(spec.rules.size() == 2);
    CHECK(spec.laurent);
    CHECK(spec.rules[1].sign == 1);
    CHECK(spec.rules[1].j_min == 2);
    CHECK(spec.rules[1].j_max == 9);
    CHECK(spec.rules[0].c(3) == 5);

    auto again = spec_from_json(spec_to_json(spec));
    CHECK(spec_to_json(again) == spec_to_json(spec));
    CHECK(expand_laurent(again, 8).polys == expand_laurent(spec, 8).polys);

    auto pre = spec_from_json(json::parse(R"({"preset": "subsums", "m": 3, "i": 2})"));
    CHECK(expand_product(pre, 10).polys == expand_product(make_preset("subsums(3,2)"), 10).polys);
}

TEST_CASE("malformed specs")
{
    for (const char *bad : {R"({"rules": [{"a": 1, "zexp": 2}]})", R"({"rules": []})", R"({"rules": [{"sign": 2}]})",
                            R"({"rules": [{"c": 1.5}]})", R"({"preset": "partitions", "extra": 1})",
                            R"({"preset": "subsums", "m": "3", "i": 1})", R"({"preset": "nope"})",
                            R"({"rules": [{"c": "j"}], "laurent": "yes"})", R"([1, 2])"})
        CHECK_THROWS_AS(spec_from_json(json::parse(bad)), spec_error);
}

TEST_CASE("coefficients as decimal strings")
{
    auto seq = expand_product(partitions_spec(), 4);
    auto j = coefficients_json(4, seq[4]);
    CHECK(j.dump() == R"({"n":4,"coeffs":[{"zexp":1,"value":"1"},{"zexp":2,"value":"2"},{"zexp":3,"value":"1"},{"zexp":4,"value":"1"}]})");

    auto crank = expand_crank(1);
    CHECK(coefficients_json(1, crank[1]).dump() ==
          R"({"n":1,"coeffs":[{"zexp":-1,"value":"1"},{"zexp":0,"value":"-1"},{"zexp":1,"value":"1"}]})");

    // Values beyond 64 bits stay exact.
    auto limit = to_json(limiting_sequence(partitions_spec(), 420));
    CHECK(limit["coeffs"][420] == "22755290216580025259");
}

TEST_CASE("report json")
{
    auto rep = verify_upper(expand_product(partitions_spec(), 12), 2, limiting_sequence(partitions_spec(), 12));
    auto j = to_json(rep);
    CHECK(j["certified"] == true);
    CHECK(j["label"] == "certified");
    CHECK(j["m"] == 2);
    CHECK(j["witnesses"].empty());
    auto h = to_json(check_hypotheses(partitions_spec(), TailKind::lower));
    CHECK(h["satisfied"] == false);
    CHECK_FALSE(h["violations"].empty());
}

TEST_CASE("lambda csv")
{
    auto csv = lambda_csv(lambda_table(2, 2, 2));
    CHECK(csv == "n,k,value\n0,0,1\n1,0,1\n2,0,1\n2,1,1\n");
}
