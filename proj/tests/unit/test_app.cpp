#include <sstream>

#include <gtest/gtest.h>

#include "hyperquot/app.hpp"
#include "hyperquot/errors.hpp"
#include "hyperquot/formulas.hpp"
#include "hyperquot/json_io.hpp"

using namespace hq;
using nlohmann::json;

namespace {

app::RunConfig config(int g, std::vector<int> degrees, std::vector<int> s, std::vector<int> dmax)
{
    app::RunConfig c;
    c.genus = g;
    c.degrees = std::move(degrees);
    c.s = std::move(s);
    c.dmax = std::move(dmax);
    c.format = app::Format::json;
    return c;
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run compute(const app::RunConfig& c)
{
    std::ostringstream out, err;
    int code = app::run_compute(c, out, err);
    return {code, out.str(), err.str()};
}

Run verify(const app::RunConfig& c, app::Suite suite)
{
    std::ostringstream out, err;
    int code = app::run_verify(c, suite, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Json, EPolyRoundTrip)
{
    EPoly p = EPoly::from_terms({{0, 0, 1}, {1, 0, -3}, {-2, 4, Integer("123456789012345678901234567890")}});
    json j = to_json(p);
    EXPECT_EQ(j[0]["c"], "123456789012345678901234567890");
    EXPECT_EQ(epoly_from_json(j), p);
    EXPECT_EQ(epoly_from_json(json::parse(j.dump())), p);
    EXPECT_THROW(epoly_from_json(json::parse(R"([{"pu":0,"pv":0,"c":"x"}])")), InvalidInput);
    EXPECT_THROW(epoly_from_json(json::parse(R"({"pu":0})")), InvalidInput);
}

TEST(Json, SeriesRoundTrip)
{
    NestingProfile p(3, {1, 2});
    BundleSpec b{{0, -1, 1}};
    Window w = make_window(b, p, {2, 2});
    auto s = motivic_partition_function(CurveSpec{2}, b, p, w);
    EXPECT_EQ(mseries_from_json(json::parse(to_json(s).dump())), s);
    EXPECT_EQ(window_from_json(to_json(w)), w);
    auto lp = LaurentPoly::from_terms({{-1, 2}, {3, -5}});
    EXPECT_EQ(laurent_from_json(to_json(lp)), lp);
}

TEST(Parsing, IntLists)
{
    EXPECT_EQ(app::parse_int_list("0,-1,1"), (std::vector<int>{0, -1, 1}));
    EXPECT_EQ(app::parse_int_list(" 3 "), (std::vector<int>{3}));
    EXPECT_THROW(app::parse_int_list("1,,2"), InvalidInput);
    EXPECT_THROW(app::parse_int_list("a"), InvalidInput);
    EXPECT_THROW(app::parse_realization("hodge"), InvalidInput);
    EXPECT_EQ(app::parse_suite("euler_spec"), app::Suite::euler_spec);
}

TEST(App, ComputeMotivic)
{
    auto run = compute(config(0, {0, 0}, {1}, {3}));
    ASSERT_EQ(run.code, app::kExitOk) << run.err;
    auto report = json::parse(run.out);
    EXPECT_EQ(report["smoothness"]["status"], "Smooth");
    auto series = mseries_from_json(report["result"]["series"]);
    EPoly L = EPoly::lefschetz(1);
    EXPECT_EQ(series.coefficient({1}), EPoly(1) + L + L * L + L * L * L);
    EXPECT_EQ(report["result"]["block_permutations"], "2");
}

TEST(App, ComputeEuler)
{
    auto c = config(0, {0, 0}, {1}, {3});
    c.realization = app::Realization::euler;
    auto run = compute(c);
    ASSERT_EQ(run.code, app::kExitOk) << run.err;
    auto terms = json::parse(run.out)["result"]["series"]["terms"];
    ASSERT_EQ(terms.size(), 4u);
    for (int d = 0; d <= 3; ++d)
        EXPECT_EQ(terms[static_cast<std::size_t>(d)]["coeff"], std::to_string(2 * d + 2));
}

TEST(App, ParallelOutputIsIdentical)
{
    auto c = config(2, {0, -1, 1}, {1, 2}, {3, 3});
    auto sequential = compute(c);
    c.parallel = true;
    auto parallel = compute(c);
    EXPECT_EQ(sequential.code, app::kExitOk);
    EXPECT_EQ(sequential.out, parallel.out);
}

TEST(App, InvalidProfile)
{
    auto run = compute(config(0, {0, 0}, {1, 0}, {3, 3}));
    EXPECT_EQ(run.code, app::kExitInvalid);
    EXPECT_NE(run.err.find("InvalidProfile"), std::string::npos);
}

TEST(App, WindowLengthMismatch)
{
    EXPECT_EQ(compute(config(0, {0, 0}, {1}, {3, 3})).code, app::kExitInvalid);
}

TEST(App, VerifySuites)
{
    EXPECT_EQ(verify(config(2, {0, -1, 1}, {1, 2}, {2, 2}), app::Suite::oracle).code, app::kExitOk);
    EXPECT_EQ(verify(config(0, {0, 0, 0}, {1, 2}, {3, 3}), app::Suite::genus0).code, app::kExitOk);
    EXPECT_EQ(verify(config(0, {0, 0, 0}, {2}, {4}), app::Suite::b0).code, app::kExitOk);
    EXPECT_EQ(verify(config(1, {0, 2}, {1}, {3}), app::Suite::euler_spec).code, app::kExitOk);
    EXPECT_EQ(verify(config(0, {0, 0, 0, 0}, {1, 3}, {1, 1}), app::Suite::lemma_h).code, app::kExitOk);
    EXPECT_EQ(verify(config(3, {0}, {0}, {4}), app::Suite::zeta_rat).code, app::kExitOk);
    EXPECT_EQ(verify(config(0, {1, 1, 2}, {1, 2}, {3, 3}), app::Suite::duality).code, app::kExitOk);
}

TEST(App, DualityNeedsCertificate)
{
    auto c = config(1, {0, 0}, {1}, {2});
    EXPECT_EQ(verify(c, app::Suite::duality).code, app::kExitInvalid);
    c.assume_smooth = true;
    auto run = verify(c, app::Suite::duality);
    EXPECT_EQ(run.code, app::kExitOk) << run.out << run.err;
    EXPECT_NE(json::parse(run.out)["smoothness"]["reason"].get<std::string>().find("assumed"), std::string::npos);
}

TEST(App, Genus0SuiteRequiresTrivialBundle)
{
    EXPECT_EQ(verify(config(1, {0, 0}, {1}, {2}), app::Suite::genus0).code, app::kExitInvalid);
    EXPECT_EQ(verify(config(0, {0, 1}, {1}, {2}), app::Suite::b0).code, app::kExitInvalid);
}

TEST(App, Info)
{
    std::ostringstream out, err;
    ASSERT_EQ(app::run_info(config(0, {0, 0}, {1}, {2}), out, err), app::kExitOk);
    auto report = json::parse(out.str());
    std::vector<long long> vds;
    for (const auto& row : report["result"]["degrees"])
        vds.push_back(row["vd"].get<long long>());
    EXPECT_EQ(vds, (std::vector<long long>{1, 3, 5}));

    std::ostringstream out3, err3;
    ASSERT_EQ(app::run_info(config(0, {0, 0, 0}, {1, 2}, {0, 0}), out3, err3), app::kExitOk);
    auto r3 = json::parse(out3.str());
    EXPECT_EQ(r3["result"]["block_permutations"], "6");
    // for the trivial bundle every permutation has zero prefactor
    EXPECT_EQ(r3["result"]["degrees"][0]["fixed_components"], 6);
}
