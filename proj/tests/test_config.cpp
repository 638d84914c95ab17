#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "spanlab/config.hpp"
#include "spanlab/errors.hpp"

using namespace spanlab;

namespace {

std::string write_temp(const std::string& content) {
    std::string path = "test_config_tmp.conf";
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("defaults cover every documented key") {
    Config c = Config::defaults();
    CHECK(c.get("loss.kind") == "crf");
    CHECK(c.get_int("seed") == 42);
    CHECK(c.get_double("train.momentum") == doctest::Approx(0.9));
    CHECK(c.get_bool("loss.constrain_bio"));
    CHECK(c.get_double_list("train.lr_grid").size() == 3);
}

TEST_CASE("file parsing with comments and whitespace") {
    std::string path = write_temp(
        "# comment\n"
        "\n"
        "train.lr = 3e-5\n"
        "  encoder.kind =attention  \n"
        "loss.weights = 0.46, 2.21, 2.56\n");
    Config c = Config::from_file(path);
    CHECK(c.get_double("train.lr") == doctest::Approx(3e-5));
    CHECK(c.get("encoder.kind") == "attention");
    auto w = c.get_double_list("loss.weights");
    REQUIRE(w.size() == 3);
    CHECK(w[1] == doctest::Approx(2.21));
    std::remove(path.c_str());
}

TEST_CASE("malformed lines and types throw config errors") {
    std::string path = write_temp("not a key value line\n");
    CHECK_THROWS_AS(Config::from_file(path), Error);
    std::remove(path.c_str());

    Config c;
    c.set("x", "abc");
    CHECK_THROWS_AS(c.get_double("x"), Error);
    CHECK_THROWS_AS(c.get_int("x"), Error);
    CHECK_THROWS_AS(c.get_bool("x"), Error);
    CHECK_THROWS_AS(c.get("missing"), Error);
    CHECK(c.get_or("missing", "d") == "d");
}

TEST_CASE("merge overlays and to_string round trips") {
    Config a = Config::defaults();
    Config b;
    b.set("train.lr", "0.5");
    a.merge(b);
    CHECK(a.get_double("train.lr") == doctest::Approx(0.5));

    std::string path = write_temp(a.to_string());
    Config c = Config::from_file(path);
    CHECK(c.entries() == a.entries());
    std::remove(path.c_str());
}

TEST_CASE("derived seeds are stable and module-distinct") {
    CHECK(derive_seed(42, "trainer") == derive_seed(42, "trainer"));
    CHECK(derive_seed(42, "trainer") != derive_seed(42, "augment"));
    CHECK(derive_seed(42, "trainer") != derive_seed(43, "trainer"));
}
