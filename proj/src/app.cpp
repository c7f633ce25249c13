#include "hyperquot/app.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "hyperquot/combinat.hpp"
#include "hyperquot/errors.hpp"
#include "hyperquot/formulas.hpp"
#include "hyperquot/json_io.hpp"
#include "hyperquot/oracle.hpp"
#include "hyperquot/smoothness.hpp"
#include "hyperquot/verify.hpp"

namespace hq::app {

using nlohmann::json;

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto first = item.find_first_not_of(" \t");
        auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos)
            throw InvalidInput("empty entry in integer list '" + text + "'");
        item = item.substr(first, last - first + 1);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InvalidInput("not an integer: '" + item + "'");
        }
        if (used != item.size())
            throw InvalidInput("not an integer: '" + item + "'");
        out.push_back(value);
    }
    if (out.empty())
        throw InvalidInput("empty integer list");
    return out;
}

namespace {

const std::map<std::string, Realization> kRealizations{{"motivic", Realization::motivic},
                                                       {"euler", Realization::euler},
                                                       {"poincare", Realization::poincare},
                                                       {"chi_y", Realization::chi_y}};

const std::map<std::string, Suite> kSuites{{"oracle", Suite::oracle},       {"genus0", Suite::genus0},
                                           {"euler_spec", Suite::euler_spec}, {"lemma_h", Suite::lemma_h},
                                           {"duality", Suite::duality},     {"zeta_rat", Suite::zeta_rat},
                                           {"b0", Suite::b0}};

template <class Map, class Value>
std::string name_of(const Map& names, Value value)
{
    for (const auto& [name, v] : names)
        if (v == value)
            return name;
    return "?";
}

std::string degree_string(const Degree& d)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < d.size(); ++i)
        os << (i ? "," : "") << d[i];
    os << ")";
    return os.str();
}

// Validated inputs shared by every subcommand.
struct Context {
    CurveSpec curve;
    BundleSpec bundle;
    NestingProfile profile;
    std::optional<Window> window;
    SmoothnessVerdict smoothness;
};

Context make_context(const RunConfig& config, bool needs_window)
{
    if (config.degrees.empty())
        throw InvalidInput("--degrees is required");
    if (config.s.empty())
        throw InvalidInput("--s is required");
    if (config.genus < 0)
        throw InvalidInput("genus must be nonnegative");
    NestingProfile profile(static_cast<int>(config.degrees.size()), config.s);
    Context ctx{CurveSpec{config.genus}, BundleSpec{config.degrees}, profile, std::nullopt, {}};
    ctx.smoothness = smoothness_status(ctx.curve, ctx.bundle, ctx.profile);
    if (config.assume_smooth && !ctx.smoothness.smooth())
        ctx.smoothness = {SmoothnessStatus::smooth, "assumed by caller (" + ctx.smoothness.reason + ")"};
    if (needs_window || !config.dmax.empty()) {
        if (config.dmax.empty())
            throw InvalidInput("--dmax is required");
        if (static_cast<int>(config.dmax.size()) != profile.length())
            throw InvalidInput("--dmax needs " + std::to_string(profile.length()) + " entries");
        ctx.window = make_window(ctx.bundle, ctx.profile, config.dmax, config.dmin);
    }
    return ctx;
}

json smoothness_json(const SmoothnessVerdict& v)
{
    return json{{"status", to_string(v.status)}, {"reason", v.reason}};
}

json profile_json(const NestingProfile& p)
{
    return json{{"r", p.rank()}, {"s", std::vector<int>(p.s_values().begin(), p.s_values().end())},
                {"coranks", p.coranks()}};
}

json wrap(const RunConfig& config, const Context& ctx, json result)
{
    return json{{"config", config_json(config)}, {"smoothness", smoothness_json(ctx.smoothness)},
                {"result", std::move(result)}};
}

void print_header(std::ostream& out, const Context& ctx)
{
    out << "profile: " << ctx.profile.to_string() << "\n";
    out << "genus: " << ctx.curve.genus << "\n";
    out << "smoothness: " << to_string(ctx.smoothness.status) << " (" << ctx.smoothness.reason << ")\n";
    if (ctx.window)
        out << "window: " << ctx.window->to_string() << "\n";
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn)
{
    try {
        return fn();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

} // namespace

Realization parse_realization(const std::string& name)
{
    auto it = kRealizations.find(name);
    if (it == kRealizations.end())
        throw InvalidInput("unknown realization '" + name + "'");
    return it->second;
}

Suite parse_suite(const std::string& name)
{
    auto it = kSuites.find(name);
    if (it == kSuites.end())
        throw InvalidInput("unknown suite '" + name + "'");
    return it->second;
}

std::string to_string(Realization r)
{
    return name_of(kRealizations, r);
}

std::string to_string(Suite s)
{
    return name_of(kSuites, s);
}

json config_json(const RunConfig& config)
{
    json j{{"genus", config.genus},         {"degrees", config.degrees},
           {"s", config.s},                 {"dmax", config.dmax},
           {"dmin", nullptr},               {"realization", to_string(config.realization)},
           {"assume_smooth", config.assume_smooth}};
    if (config.dmin)
        j["dmin"] = *config.dmin;
    return j;
}

int run_compute(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        Context ctx = make_context(config, true);
        const Window& window = *ctx.window;
        ComputeOptions options{config.parallel};

        json series;
        std::vector<std::pair<Degree, std::string>> lines;
        if (config.realization == Realization::euler) {
            auto s = euler_partition_function(ctx.curve, ctx.bundle, ctx.profile, window, options);
            series = to_json(specialize_series(s, Specialization::euler), true);
            s.for_each_term([&](const Degree& d, const EPoly& c) { lines.emplace_back(d, c.to_string()); });
        } else {
            auto motivic = motivic_partition_function(ctx.curve, ctx.bundle, ctx.profile, window, options);
            if (config.realization == Realization::motivic) {
                series = to_json(motivic);
                motivic.for_each_term([&](const Degree& d, const EPoly& c) { lines.emplace_back(d, c.to_string()); });
            } else {
                auto target = config.realization == Realization::poincare ? Specialization::poincare
                                                                          : Specialization::chi_y;
                char var = target == Specialization::poincare ? 'z' : 'y';
                auto spec = specialize_series(motivic, target);
                series = to_json(spec);
                spec.for_each_term(
                    [&](const Degree& d, const LaurentPoly& c) { lines.emplace_back(d, c.to_string(var)); });
            }
        }

        json vds = json::array();
        window.for_each([&](const Degree& d) {
            vds.push_back(json{{"d", d},
                               {"vd", virtual_dimension(ctx.profile, d, ctx.curve.genus, ctx.bundle.total_degree())}});
        });
        const auto count = block_permutation_count(ctx.profile);
        if (config.format == Format::json) {
            json result{{"realization", to_string(config.realization)},
                        {"profile", profile_json(ctx.profile)},
                        {"block_permutations", count.str()},
                        {"flag_dimension", flag_dimension(ctx.profile)},
                        {"virtual_dimensions", std::move(vds)},
                        {"series", std::move(series)}};
            out << wrap(config, ctx, std::move(result)).dump(2) << "\n";
            return kExitOk;
        }
        print_header(out, ctx);
        out << "block permutations: " << count << "\n";
        out << "flag dimension: " << flag_dimension(ctx.profile) << "\n";
        out << "realization: " << to_string(config.realization) << "\n";
        if (lines.empty())
            out << "(zero series in window)\n";
        for (const auto& [d, text] : lines)
            out << "q^" << degree_string(d) << " [vd "
                << virtual_dimension(ctx.profile, d, ctx.curve.genus, ctx.bundle.total_degree()) << "]: " << text
                << "\n";
        return kExitOk;
    });
}

int run_verify(const RunConfig& config, Suite suite, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const bool needs_window = suite != Suite::lemma_h && suite != Suite::zeta_rat;
        Context ctx = make_context(config, needs_window);
        auto trivial_genus0 = [&] {
            bool trivial = std::all_of(ctx.bundle.degrees.begin(), ctx.bundle.degrees.end(),
                                       [](int d) { return d == 0; });
            if (ctx.curve.genus != 0 || !trivial)
                throw InvalidInput("suite " + to_string(suite) + " applies to genus 0 with the trivial bundle");
        };

        CheckResult result;
        switch (suite) {
        case Suite::oracle:
            result = check_oracle(ctx.curve, ctx.bundle, ctx.profile, *ctx.window);
            break;
        case Suite::genus0:
            trivial_genus0();
            result = check_genus0(ctx.profile, *ctx.window);
            break;
        case Suite::euler_spec:
            result = check_euler(ctx.curve, ctx.bundle, ctx.profile, *ctx.window);
            break;
        case Suite::lemma_h:
            result = check_h_identity(ctx.profile);
            break;
        case Suite::duality:
            if (!ctx.smoothness.smooth())
                throw InvalidInput("duality suite needs a Smooth verdict (" + ctx.smoothness.reason +
                                   "); pass --assume-smooth to override");
            result = check_duality(ctx.curve, ctx.bundle, ctx.profile, *ctx.window);
            break;
        case Suite::zeta_rat: {
            int extra = 0;
            for (int d : config.dmax)
                extra = std::max(extra, d);
            result = check_zeta(ctx.curve.genus, 2 * ctx.curve.genus + 2 + extra);
            break;
        }
        case Suite::b0:
            trivial_genus0();
            result = check_b0(ctx.profile, *ctx.window);
            break;
        }

        if (config.format == Format::json) {
            json r{{"suite", to_string(suite)},
                   {"passed", result.passed},
                   {"checked", result.checked},
                   {"detail", result.detail}};
            out << wrap(config, ctx, std::move(r)).dump(2) << "\n";
        } else {
            print_header(out, ctx);
            out << (result.passed ? "PASS" : "FAIL") << " suite=" << to_string(suite)
                << " checked=" << result.checked << "\n";
            if (!result.passed)
                out << "first discrepancy: " << result.detail << "\n";
        }
        return result.passed ? kExitOk : kExitFailed;
    });
}

int run_info(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        Context ctx = make_context(config, false);
        const auto count = block_permutation_count(ctx.profile);
        const int flag_dim = flag_dimension(ctx.profile);

        std::map<Degree, std::size_t> components;
        if (ctx.window) {
            for (const auto& sigma : enumerate_block_permutations(ctx.profile))
                for (const auto& comp : enumerate_fixed_components(sigma, ctx.bundle, ctx.profile, *ctx.window))
                    ++components[comp.degree];
        }
        json table = json::array();
        if (ctx.window) {
            ctx.window->for_each([&](const Degree& d) {
                auto it = components.find(d);
                table.push_back(json{
                    {"d", d},
                    {"vd", virtual_dimension(ctx.profile, d, ctx.curve.genus, ctx.bundle.total_degree())},
                    {"fixed_components", it == components.end() ? 0 : it->second}});
            });
        }
        if (config.format == Format::json) {
            json result{{"profile", profile_json(ctx.profile)},
                        {"block_permutations", count.str()},
                        {"flag_dimension", flag_dim},
                        {"degrees", std::move(table)}};
            out << wrap(config, ctx, std::move(result)).dump(2) << "\n";
            return kExitOk;
        }
        print_header(out, ctx);
        out << "block permutations: " << count << "\n";
        out << "flag dimension: " << flag_dim << "\n";
        if (ctx.window) {
            out << "d\tvd\tfixed components\n";
            for (const auto& row : table)
                out << degree_string(row["d"].get<Degree>()) << "\t" << row["vd"].get<long long>() << "\t"
                    << row["fixed_components"].get<std::size_t>() << "\n";
        }
        return kExitOk;
    });
}

} // namespace hq::app
