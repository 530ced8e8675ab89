#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "orbitlab/cli/commands.hpp"
#include "orbitlab/error.hpp"

using namespace orbitlab;
using namespace orbitlab::cli;

namespace {

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::Verification: return 1;
        case ErrorKind::Input: return 2;
        case ErrorKind::ResourceCap: return 3;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbitlab: integral points in orbits of projective self-maps"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "json", example;
    std::optional<unsigned> m_max, n_max;
    std::vector<std::string> epsilons;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out_path, "write the report here instead of stdout");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--m-max", m_max, "orbit length");
        sub->add_option("--n-max", n_max, "iterate depth");
        sub->add_option("--epsilon", epsilons, "thin-set epsilon (rational), repeatable");
    };
    auto* orbit = app.add_subcommand("orbit", "orbit records and thin-set listing");
    auto* cn = app.add_subcommand("cn", "c_n table");
    auto* pullback = app.add_subcommand("pullback", "factored pullback of D by an iterate");
    auto* genericity = app.add_subcommand("genericity", "hypersurfaces through the computed orbit");
    auto* commute = app.add_subcommand("commute", "two-map commuting check");
    for (auto* s : {orbit, cn, pullback, genericity, commute}) add_common(s);
    auto* verify = app.add_subcommand("verify-example", "run a registry example's assertions");
    verify->add_option("name", example, "example name")->required();
    verify->add_option("--out", out_path, "write the report here instead of stdout");
    verify->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Flags flags;
        flags.format = format == "csv" ? Format::Csv : Format::Json;
        flags.m_max = m_max;
        flags.n_max = n_max;
        for (const auto& e : epsilons) {
            flags.epsilons.push_back(arith::parse_rational(e));
            if (flags.epsilons.back() <= 0) throw InputError("--epsilon must be positive");
        }
        CommandResult r;
        if (verify->parsed()) {
            r = command_verify_example(example, flags.format);
        } else {
            const AnalysisConfig c = load_config(config_path);
            if (orbit->parsed()) r = command_orbit(c, flags);
            else if (cn->parsed()) r = command_cn(c, flags);
            else if (pullback->parsed()) r = command_pullback(c, flags);
            else if (genericity->parsed()) r = command_genericity(c, flags);
            else r = command_commute(c, flags);
        }
        if (out_path.empty()) {
            std::cout << r.text;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw InputError("cannot write '" + out_path + "'");
            out << r.text;
        }
        return r.exit_code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
