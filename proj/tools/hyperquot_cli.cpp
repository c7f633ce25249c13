#include <iostream>

#include <CLI11.hpp>

#include "hyperquot/app.hpp"
#include "hyperquot/errors.hpp"

namespace {

struct Options {
    int genus = 0;
    std::string degrees;
    int rank = 0;
    std::string s;
    std::string dmax;
    std::string dmin;
    std::string realization = "motivic";
    std::string format = "text";
    std::string suite;
    bool parallel = false;
    bool assume_smooth = false;
};

void add_common(CLI::App* cmd, Options& o)
{
    cmd->add_option("--genus", o.genus, "genus of the curve")->check(CLI::NonNegativeNumber);
    cmd->add_option("--degrees", o.degrees, "comma-separated degrees of the line bundles");
    cmd->add_option("--rank", o.rank, "shorthand for --degrees 0,...,0 (trivial bundle)");
    cmd->add_option("--s", o.s, "comma-separated nondecreasing quotient ranks")->required();
    cmd->add_option("--dmax", o.dmax, "comma-separated upper q-degree bounds");
    cmd->add_option("--dmin", o.dmin, "comma-separated lower q-degree bounds (default: minimal prefactor)");
    cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--parallel", o.parallel, "parallel sum over block permutations");
    cmd->add_flag("--assume-smooth", o.assume_smooth, "treat the input as smooth and unobstructed");
}

hq::app::RunConfig to_config(const Options& o)
{
    using hq::app::parse_int_list;
    hq::app::RunConfig c;
    c.genus = o.genus;
    if (!o.degrees.empty())
        c.degrees = parse_int_list(o.degrees);
    else if (o.rank > 0)
        c.degrees.assign(static_cast<std::size_t>(o.rank), 0);
    c.s = parse_int_list(o.s);
    if (!o.dmax.empty())
        c.dmax = parse_int_list(o.dmax);
    if (!o.dmin.empty())
        c.dmin = parse_int_list(o.dmin);
    c.realization = hq::app::parse_realization(o.realization);
    c.format = o.format == "json" ? hq::app::Format::json : hq::app::Format::text;
    c.parallel = o.parallel;
    c.assume_smooth = o.assume_smooth;
    return c;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Motivic partition functions of hyperquot schemes on curves"};
    app.require_subcommand(1);
    Options o;

    auto* compute = app.add_subcommand("compute", "compute a generating series");
    add_common(compute, o);
    compute->add_option("--realization", o.realization, "motivic, euler, poincare or chi_y")
        ->check(CLI::IsMember({"motivic", "euler", "poincare", "chi_y"}));

    auto* verify = app.add_subcommand("verify", "run a cross-check suite");
    add_common(verify, o);
    verify->add_option("--suite", o.suite, "oracle, genus0, euler_spec, lemma_h, duality, zeta_rat or b0")
        ->required()
        ->check(CLI::IsMember({"oracle", "genus0", "euler_spec", "lemma_h", "duality", "zeta_rat", "b0"}));

    auto* info = app.add_subcommand("info", "dimensions and fixed-locus statistics");
    add_common(info, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : hq::app::kExitInvalid;
    }

    hq::app::RunConfig config;
    try {
        config = to_config(o);
    } catch (const hq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return hq::app::kExitInvalid;
    }
    if (compute->parsed())
        return hq::app::run_compute(config, std::cout, std::cerr);
    if (verify->parsed())
        return hq::app::run_verify(config, hq::app::parse_suite(o.suite), std::cout, std::cerr);
    return hq::app::run_info(config, std::cout, std::cerr);
}
