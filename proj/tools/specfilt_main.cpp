#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "specfilt/session.hpp"

using namespace specfilt;

int main(int argc, char** argv) {
    CLI::App app{"specfilt: prime-spectrum coherence toolkit"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run a session file");
    std::string session_path, json_path;
    unsigned long long bass_bound = 0;
    bool fail_fast = false;
    unsigned long long seed = 0;
    run->add_option("session", session_path, "session file")->required();
    run->add_option("--json", json_path, "write the JSON report here");
    run->add_option("--bass-bound", bass_bound, "Bass-number bound (default dim R + 2)");
    run->add_flag("--fail-fast", fail_fast, "stop at the first failing query");
    run->add_option("--seed", seed, "seed for generated test corpora");

    CLI11_PARSE(app, argc, argv);

    std::ifstream in(session_path);
    if (!in) {
        std::cerr << "cannot open " << session_path << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    Session s;
    try {
        s = parse_session(buf.str());
    } catch (const SessionParseException& e) {
        for (const auto& err : e.errors)
            std::cerr << session_path << ":" << err.line << ":" << err.col << ": "
                      << err.message << "\n";
        return 2;
    }

    RunFlags flags;
    if (bass_bound > 0) flags.bass_bound = static_cast<size_t>(bass_bound);
    flags.fail_fast = fail_fast;
    flags.seed = seed;

    RunResult res;
    try {
        res = run_session(s, flags);
    } catch (const ContradictionError& e) {
        std::cerr << "internal contradiction: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cout << res.text;
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << res.report.dump(2) << "\n";
    }
    return res.exit_code;
}
