#include <doctest.h>

#include <cstdlib>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "superq/report.hpp"

using namespace superq;
using namespace superq::report;

TEST_CASE("number rendering") {
    CHECK(sig9(0.1428571428571) == "0.142857143");
    CHECK(sig9(2.0) == "2");
    CHECK(exact(0.3) == "0.3");
    CHECK(round_sig9(0.27891156462585) == 0.278911565);
}

TEST_CASE("report JSON carries the required keys") {
    const auto j = to_json(compare({1.0, 0.3, 0.2}));
    for (const char* key : {"mean_photon", "mean_photon_out", "var_plus", "var_minus", "var_plus_out",
                            "var_minus_out", "squeezing", "squeezing_out", "kappa", "eps1", "eps2", "a", "b"}) {
        CHECK_MESSAGE(j.contains(key), key);
    }
    CHECK(j["squeezing"].get<double>() == 0.142857143);
    CHECK(j["mean_photon"].get<double>() == 0.455238095);
    CHECK(j["combined_mean_photon"].get<double>() == 0.278911565);
    CHECK(j["combined_coherent_term"].get<double>() == 0.183673469);
    CHECK(j["uncoupled_coherent_term"].get<double>() == 0.36);
    CHECK(j["eps1"].get<double>() == 0.3);
}

TEST_CASE("CSV header and rows line up") {
    const auto header = split_csv(csv_header());
    CHECK(header == csv_columns());
    const auto row = split_csv(csv_row(compare({1.0, 0.3, 0.2})));
    REQUIRE(row.size() == header.size());
    const std::set<std::string> names(header.begin(), header.end());
    CHECK(names.size() == header.size());
    CHECK(row[0] == "1");
    CHECK(row[1] == "0.3");
    CHECK(row[2] == "0.2");
}

TEST_CASE("property: CSV rows reproduce themselves from the echoed inputs") {
    oracle::Gen gen(23);
    for (int i = 0; i < 300; ++i) {
        const double kappa = gen.uniform(0.05, 20.0);
        const CavityConfig c{kappa, gen.uniform(0.0, 2.0) * kappa, gen.uniform(0.0, 0.4999) * kappa};
        const std::string line = csv_row(compare(c));
        const auto cells = split_csv(line);
        const CavityConfig parsed{std::strtod(cells[0].c_str(), nullptr), std::strtod(cells[1].c_str(), nullptr),
                                  std::strtod(cells[2].c_str(), nullptr)};
        REQUIRE(parsed.kappa == c.kappa);
        REQUIRE(parsed.eps1 == c.eps1);
        REQUIRE(parsed.eps2 == c.eps2);
        REQUIRE(csv_row(compare(parsed)) == line);
    }
}

TEST_CASE("QGrid serializations") {
    const auto grid = qfunc::q_grid(qfunc::Kind::coherent, ScaledParams::make(0.6, 0.0), 16, 4.0);
    std::ostringstream os;
    write_csv(os, grid);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "re,im,q");
    int rows = 0;
    std::string first;
    while (std::getline(is, line)) {
        if (rows == 0) first = line;
        ++rows;
    }
    CHECK(rows == 256);
    CHECK(first == "-4,-4," + sig9(grid.values[0]));

    const auto j = to_json(grid);
    CHECK(j["n"] == 16);
    CHECK(j["kind"] == "coherent");
    CHECK(j["values"].size() == 256u);
    CHECK(j["params"]["a"].get<double>() == 0.6);
    CHECK(j["values"][17].get<double>() == round_sig9(grid.values[17]));
    CHECK_FALSE(j.contains("warning"));
}
