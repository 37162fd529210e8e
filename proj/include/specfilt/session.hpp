#pragma once

#include <json.hpp>

#include "specfilt/coherence.hpp"
#include "specfilt/parallel.hpp"

namespace specfilt {

struct SessionError {
    size_t line, col;
    std::string message;
};

/// Parse or resolution failure; carries every collected position-annotated
/// error.
struct SessionParseException : std::runtime_error {
    std::vector<SessionError> errors;
    explicit SessionParseException(std::vector<SessionError> errs);
};

struct SubsetDecl {
    enum class Kind { extensional, d_form, v_form };
    std::string name;
    Kind kind;
    std::vector<size_t> members;     // extensional: prime indices
    std::vector<Polynomial> polys;   // d_form / v_form
};

struct Query {
    size_t line = 0, col = 0;
    std::string cmd;
    std::string display;                 // source text of the arguments
    std::vector<size_t> ideals, modules, complexes, subsets, primes;
    std::vector<Polynomial> polys;
    std::vector<long long> ints;
    std::optional<Level> level;
    bool mod_is_ring = false;            // cech/cd over R itself
    std::optional<size_t> mod_ideal;     // cech/cd over R/J
};

/// A parsed session: one ring, ordered declarations, ordered queries.
struct Session {
    std::string source;
    PolyRing ring;
    std::vector<std::string> ideal_names;
    std::vector<Ideal> ideals;
    std::vector<std::string> prime_names;
    std::vector<Ideal> primes;
    std::vector<std::string> module_names;
    std::vector<FPModule> modules;
    std::vector<std::string> complex_names;
    std::vector<FPComplex> complexes;
    std::vector<SubsetDecl> subsets;
    std::vector<std::pair<std::string, std::vector<Polynomial>>> seqs;
    std::vector<Query> queries;
};

Session parse_session(const std::string& src);

struct RunFlags {
    std::optional<size_t> bass_bound;
    bool fail_fast = false;
    uint64_t seed = 0;
};

struct RunResult {
    nlohmann::ordered_json report;
    std::string text;   // stable tabular rendering
    int exit_code;      // 0 answered, 1 check failed, 3 contradiction
};

RunResult run_session(const Session& s, const RunFlags& flags);

/// Structural validity of a report against the specfilt-report/1 schema.
bool validate_report(const nlohmann::ordered_json& r, std::string* why = nullptr);

}  // namespace specfilt
