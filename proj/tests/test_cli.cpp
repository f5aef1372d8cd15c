#include "doctest.h"
#include "lac/cli.hpp"

using namespace lac;

TEST_CASE("json hashing is stable") {
    const nlohmann::json j{{"a", 1}, {"b", {1, 2}}};
    CHECK(cli::hash_json(j) == cli::hash_json(nlohmann::json::parse(j.dump())));
    CHECK(cli::hash_json(j).size() == 16);
    CHECK(cli::hash_json(j) != cli::hash_json(nlohmann::json{{"a", 2}, {"b", {1, 2}}}));
}

TEST_CASE("combinatorics arguments") {
    CHECK(cli::load_combinatorics("maclane") == builtin("maclane"));
    CHECK_THROWS_AS(cli::load_combinatorics("/nonexistent/file.json"), std::invalid_argument);
}

TEST_CASE("reproduce maclane") {
    const auto a = cli::cmd_reproduce("maclane");
    CHECK(a.exit_code == cli::pass);
    CHECK(a.body.at("homtriv").at("dimension") == 98);
    CHECK(a.body.at("homtriv").at("integer_feasible") == false);
    CHECK(a.body.at("alexander").at("M2") == 29);
    CHECK(a.body.at("combinatorics").at("multiplicity") == 13);
    const auto b = cli::cmd_reproduce("maclane");
    CHECK(a.body.dump() == b.body.dump());
    CHECK(a.timings.contains("homtriv"));
    CHECK_FALSE(a.body.contains("timings"));
}

TEST_CASE("reproduce maclane against itself") {
    cli::RunOptions opt;
    opt.self_compare = true;
    const auto r = cli::cmd_reproduce("maclane", opt);
    CHECK(r.exit_code == cli::pass);
    CHECK(r.body.at("homtriv").at("integer_feasible") == true);
}

TEST_CASE("unknown targets are usage errors") {
    CHECK_THROWS_AS(cli::cmd_reproduce("ceva"), std::invalid_argument);
}
