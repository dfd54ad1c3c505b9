#include <catch2/catch_amalgamated.hpp>

#include <charconv>
#include <string>

#include "dqwalk/csv.hpp"

using namespace dqwalk;

namespace {

double parse_back(const std::string& text)
{
    double value = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), value);
    return value;
}

}  // namespace

TEST_CASE("format_double round-trips bit for bit", "[csv]")
{
    for (double v : {0.25, 0.5, 1.0 / 3.0, 0.1, 3.0625e-17, 123456.789,
                     1.0, 0.0, 5e-324}) {
        const std::string text = format_double(v);
        REQUIRE(parse_back(text) == v);
    }
    REQUIRE(format_double(0.25) == "0.25");
    REQUIRE(format_double(1.0) == "1");
}

TEST_CASE("distribution csv is byte-exact", "[csv]")
{
    PositionDistribution dist;
    dist.probabilities = {0.25, 0.5, 0.25};
    REQUIRE(distribution_csv(dist) ==
            "position,probability\n"
            "0,0.25\n"
            "1,0.5\n"
            "2,0.25\n");
}

TEST_CASE("mode names", "[csv]")
{
    REQUIRE(std::string(to_string(WalkMode::quantum)) == "quantum");
    REQUIRE(std::string(to_string(WalkMode::classical)) == "classical");
    REQUIRE(std::string(to_string(WalkMode::reduced)) == "reduced");
    REQUIRE(std::string(to_string(PairingMode::natural)) == "natural");
    REQUIRE(std::string(to_string(PairingMode::random)) == "random");
}

TEST_CASE("sweep csv leaves inapplicable fields empty", "[csv]")
{
    SweepRecord classical;
    classical.n = 4;
    classical.t = 100;
    classical.mode = WalkMode::classical;
    classical.mean = 25.0;
    classical.variance = 18.75;

    SweepRecord random_qw;
    random_qw.n = 8;
    random_qw.t = 50;
    random_qw.mode = WalkMode::quantum;
    random_qw.pairing = PairingMode::random;
    random_qw.seed = 7;
    random_qw.mean = 20.5;
    random_qw.variance = 30.0;
    random_qw.interval_lo = 16.25;
    random_qw.interval_hi = 33.75;
    random_qw.tail = 0.125;

    REQUIRE(sweep_csv({classical, random_qw}) ==
            "n,t,mode,pairing,seed,mean,variance,interval_lo,interval_hi,tail_mass\n"
            "4,100,classical,,,25,18.75,,,\n"
            "8,50,quantum,random,7,20.5,30,16.25,33.75,0.125\n");
}

TEST_CASE("sweep csv of a real run parses back row by row", "[csv]")
{
    SweepRequest request;
    request.n_values = {2, 4};
    request.t = 40;
    request.modes = {WalkMode::quantum};
    const std::string text = sweep_csv(sweep(request));

    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n')
            ++lines;
    REQUIRE(lines == 3);  // header + one row per n
    REQUIRE(text.rfind("n,t,mode,", 0) == 0);
    REQUIRE(text.find("2,40,quantum,natural,,") != std::string::npos);
    REQUIRE(text.find("4,40,quantum,natural,,") != std::string::npos);
}
