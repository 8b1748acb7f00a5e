// Command-line front end for the shrubs library.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "shrubs/checks.hpp"
#include "shrubs/io.hpp"
#include "shrubs/shrubs.hpp"

using namespace shrubs;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string trim(std::string s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    const auto e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

Shrub read_shrub(const std::string& path) { return shrub_from_json(parse_json(slurp(path))); }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Shrubs: construction, composition, fractions and the anticyclic action"};
    app.require_subcommand(1);

    std::string file, file2, slot, perm_text, suite = "all", oracle = "brute";
    int n = 0, max_n = 5, cases = 1000, cap = default_orbit_cap;
    std::uint64_t seed = checks::Config{}.seed;
    bool connected = false, up_to_iso = false, list = false;

    auto* validate = app.add_subcommand("validate", "Check a shrub JSON file and print it canonically");
    validate->add_option("shrub", file, "Shrub JSON ('-' for stdin)")->required();

    auto* enumerate = app.add_subcommand("enumerate", "Count (or list) the shrubs on 1..n");
    enumerate->add_option("--n", n, "Number of vertices")->required()->check(CLI::Range(1, default_enumeration_cap));
    enumerate->add_flag("--connected", connected, "Connected shrubs only");
    enumerate->add_flag("--up-to-iso", up_to_iso, "One shrub per isomorphism class");
    enumerate->add_option("--oracle", oracle, "Enumeration method")->check(CLI::IsMember({"brute", "generators"}));
    enumerate->add_flag("--list", list, "Print each shrub as a JSON line after the count");

    auto* compose_cmd = app.add_subcommand("compose", "Partial composition P o_slot Q");
    compose_cmd->add_option("P", file, "Outer shrub JSON")->required();
    compose_cmd->add_option("slot", slot, "Vertex of P to substitute")->required();
    compose_cmd->add_option("Q", file2, "Inner shrub JSON")->required();

    auto* fraction = app.add_subcommand("fraction", "Canonical fraction text of a shrub");
    fraction->add_option("shrub", file, "Shrub JSON")->required();

    auto* zinbiel = app.add_subcommand("zinbiel", "Sum of the orders compatible with a shrub");
    zinbiel->add_option("shrub", file, "Shrub JSON")->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "Write a shrub in the generators");
    decompose_cmd->add_option("shrub", file, "Shrub JSON")->required();

    auto* evaluate_cmd = app.add_subcommand("evaluate", "Evaluate a generator word to a shrub");
    evaluate_cmd->add_option("word", file, "Word JSON")->required();

    auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Rebuild the shrub of a fraction");
    reconstruct_cmd->add_option("fraction", file, "File with the fraction text")->required();

    auto* act_cmd = app.add_subcommand("act", "Apply a permutation of 0..n to a signed shrub");
    act_cmd->add_option("perm", perm_text, "One-line notation, e.g. 1,0,2")->required();
    act_cmd->add_option("shrub", file, "Signed shrub JSON")->required();

    auto* orbit_cmd = app.add_subcommand("orbit", "Orbit of a signed shrub and its invariant");
    orbit_cmd->add_option("shrub", file, "Signed shrub JSON")->required();
    orbit_cmd->add_option("--cap", cap, "Largest n accepted")->capture_default_str();

    auto* check = app.add_subcommand("check", "Run property suites");
    check->add_option("--suite", suite, "Suite name or 'all'")->capture_default_str();
    check->add_option("--max-n", max_n, "Largest size for exhaustive checks")->capture_default_str()->check(CLI::Range(1, 5));
    check->add_option("--seed", seed, "Seed for the randomized parts")->capture_default_str();
    check->add_option("--cases", cases, "Random cases per randomized check")->capture_default_str();

    auto* dot = app.add_subcommand("dot", "Graphviz drawing of a shrub");
    dot->add_option("shrub", file, "Shrub JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*validate) {
            std::cout << shrub_to_json(read_shrub(file)).dump() << "\n";
        } else if (*enumerate) {
            auto all = oracle == "brute" ? enumerate_shrubs_bruteforce(n) : enumerate_shrubs_by_generators(n);
            if (connected)
                all = connected_only(all);
            if (up_to_iso)
                all = isomorphism_classes(all);
            std::cout << all.size() << "\n";
            if (list)
                for (const auto& p : all)
                    std::cout << shrub_to_json(p).dump() << "\n";
        } else if (*compose_cmd) {
            std::cout << shrub_to_json(compose(read_shrub(file), Label(slot), read_shrub(file2))).dump() << "\n";
        } else if (*fraction) {
            std::cout << to_text(fraction_of_shrub(read_shrub(file))) << "\n";
        } else if (*zinbiel) {
            std::cout << to_string(gamma(read_shrub(file))) << "\n";
        } else if (*decompose_cmd) {
            std::cout << genword_to_json(decompose(read_shrub(file))).dump() << "\n";
        } else if (*evaluate_cmd) {
            std::cout << shrub_to_json(evaluate(genword_from_json(parse_json(slurp(file))))).dump() << "\n";
        } else if (*reconstruct_cmd) {
            std::cout << shrub_to_json(reconstruct(parse_fraction(trim(slurp(file))))).dump() << "\n";
        } else if (*act_cmd) {
            const auto x = signed_shrub_from_json(parse_json(slurp(file)));
            std::cout << signed_shrub_to_json(act(parse_permutation(perm_text), x)).dump() << "\n";
        } else if (*orbit_cmd) {
            const auto x = signed_shrub_from_json(parse_json(slurp(file)));
            json members = json::array();
            for (const auto& y : orbit(x, cap))
                members.push_back(signed_shrub_to_json(y));
            const auto inv = orbit_invariant(x);
            json out{{"orbit", members},
                     {"invariant", {{"numerator", inv.numerator}, {"denominator", inv.denominator}}},
                     {"ram_classes", ram_count_preserved(x)}};
            std::cout << out.dump() << "\n";
        } else if (*check) {
            std::vector<std::string> names;
            if (suite == "all")
                names = checks::suite_names();
            else if (std::find(checks::suite_names().begin(), checks::suite_names().end(), suite) != checks::suite_names().end())
                names = {suite};
            else
                throw UsageError("unknown suite '" + suite + "'");
            const checks::Config config{max_n, seed, cases};
            bool ok = true;
            for (const auto& name : names) {
                const auto r = checks::run(name, config);
                ok = ok && r.passed();
                std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << " (" << r.cases << " cases)"
                          << (r.note.empty() ? "" : " " + r.note) << "\n";
                for (const auto& f : r.failures)
                    std::cout << "  " << f << "\n";
            }
            return ok ? 0 : 1;
        } else if (*dot) {
            std::cout << to_dot(read_shrub(file));
        }
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
