#include "specfilt/session.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace specfilt {

SessionParseException::SessionParseException(std::vector<SessionError> errs)
    : std::runtime_error(errs.empty() ? "session parse failed"
                                      : "session parse failed at " +
                                            std::to_string(errs[0].line) + ":" +
                                            std::to_string(errs[0].col) + ": " +
                                            errs[0].message),
      errors(std::move(errs)) {}

namespace {

struct Tok {
    enum Kind { ident, integer, sym, range, end } kind;
    std::string text;
    size_t line, col;
};

struct SessionLexer {
    std::string src;
    std::vector<Tok> toks;
    size_t pos = 0;

    explicit SessionLexer(std::string s) : src(std::move(s)) { lex(); }

    void lex() {
        size_t line = 1, col = 1, i = 0;
        auto push = [&](Tok::Kind k, std::string t, size_t l, size_t c) {
            toks.push_back({k, std::move(t), l, c});
        };
        while (i < src.size()) {
            char c = src[i];
            if (c == '\n') { ++line; col = 1; ++i; continue; }
            if (c == ' ' || c == '\t' || c == '\r') { ++col; ++i; continue; }
            if (c == '#') {  // comment to end of line
                while (i < src.size() && src[i] != '\n') ++i;
                continue;
            }
            size_t l = line, co = col;
            if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string t;
                while (i < src.size() &&
                       (isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
                    t += src[i++];
                    ++col;
                }
                push(Tok::ident, std::move(t), l, co);
                continue;
            }
            if (isdigit(static_cast<unsigned char>(c))) {
                std::string t;
                while (i < src.size() && isdigit(static_cast<unsigned char>(src[i]))) {
                    t += src[i++];
                    ++col;
                }
                push(Tok::integer, std::move(t), l, co);
                continue;
            }
            if (c == '.' && i + 1 < src.size() && src[i + 1] == '.') {
                push(Tok::range, "..", l, co);
                i += 2;
                col += 2;
                continue;
            }
            push(Tok::sym, std::string(1, c), l, co);
            ++i;
            ++col;
        }
        push(Tok::end, "", line, col);
    }

    const Tok& peek() const { return toks[pos]; }
    const Tok& next() { return toks[pos < toks.size() - 1 ? pos++ : pos]; }
    bool at_sym(const std::string& s) const {
        return peek().kind == Tok::sym && peek().text == s;
    }
    bool at_ident(const std::string& s) const {
        return peek().kind == Tok::ident && peek().text == s;
    }
};

struct SessionParser {
    SessionLexer lx;
    Session out;
    std::vector<SessionError> errors;
    bool ring_seen = false;

    explicit SessionParser(const std::string& src) : lx(src) { out.source = src; }

    [[noreturn]] void fail(const Tok& t, const std::string& msg) {
        throw SessionError{t.line, t.col, msg};
    }

    void expect_sym(const std::string& s) {
        if (!lx.at_sym(s)) fail(lx.peek(), "expected '" + s + "'");
        lx.next();
    }

    std::string expect_ident(const std::string& what) {
        if (lx.peek().kind != Tok::ident) fail(lx.peek(), "expected " + what);
        return lx.next().text;
    }

    long long expect_int() {
        bool neg = false;
        if (lx.at_sym("-")) { lx.next(); neg = true; }
        if (lx.peek().kind != Tok::integer) fail(lx.peek(), "expected integer");
        long long v = std::stoll(lx.next().text);
        return neg ? -v : v;
    }

    void require_ring(const Tok& t) {
        if (!ring_seen) fail(t, "a ring must be declared first");
    }

    // any declared name, for uniqueness checks
    bool name_taken(const std::string& n) const {
        auto in = [&](const auto& names) {
            return std::find(names.begin(), names.end(), n) != names.end();
        };
        if (in(out.ideal_names) || in(out.prime_names) || in(out.module_names) ||
            in(out.complex_names))
            return true;
        for (const auto& s : out.subsets)
            if (s.name == n) return true;
        for (const auto& s : out.seqs)
            if (s.first == n) return true;
        return false;
    }

    // capture raw source text up to (not including) the matching close of the
    // currently open bracket level, splitting on top-level commas
    std::vector<std::pair<std::string, Tok>> poly_chunks(const std::string& open,
                                                         const std::string& close) {
        std::vector<std::pair<std::string, Tok>> chunks;
        std::string cur;
        Tok start = lx.peek();
        int depth = 0;
        bool any = false;
        while (true) {
            const Tok& t = lx.peek();
            if (t.kind == Tok::end) fail(t, "unterminated '" + open + "'");
            if (t.kind == Tok::sym && (t.text == "(" || t.text == "[")) ++depth;
            if (t.kind == Tok::sym && (t.text == ")" || t.text == "]")) {
                if (depth == 0 && t.text == close) {
                    if (any || !cur.empty()) chunks.push_back({cur, start});
                    lx.next();
                    return chunks;
                }
                --depth;
                if (depth < 0) fail(t, "unbalanced brackets");
            }
            if (depth == 0 && t.kind == Tok::sym && t.text == ",") {
                chunks.push_back({cur, start});
                any = true;
                cur.clear();
                lx.next();
                start = lx.peek();
                continue;
            }
            cur += t.text;
            cur += " ";
            lx.next();
        }
    }

    Polynomial parse_poly_chunk(const std::pair<std::string, Tok>& chunk) {
        try {
            return parse_poly(chunk.first, out.ring);
        } catch (const ParseError& e) {
            throw SessionError{chunk.second.line, chunk.second.col, e.what()};
        }
    }

    std::vector<Polynomial> parse_poly_list(const std::string& open, const std::string& close) {
        std::vector<Polynomial> ps;
        for (const auto& ch : poly_chunks(open, close)) {
            if (ch.first.find_first_not_of(' ') == std::string::npos)
                throw SessionError{ch.second.line, ch.second.col, "empty entry"};
            ps.push_back(parse_poly_chunk(ch));
        }
        return ps;
    }

    ModuleMap parse_matrix() {
        Tok start = lx.peek();
        expect_sym("[");
        std::vector<std::vector<Polynomial>> rows;
        if (lx.at_sym("]")) fail(lx.peek(), "matrix needs at least one row");
        while (true) {
            expect_sym("[");
            rows.push_back(parse_poly_list("[", "]"));
            if (lx.at_sym(",")) { lx.next(); continue; }
            break;
        }
        expect_sym("]");
        size_t cols = rows[0].size();
        for (const auto& r : rows)
            if (r.size() != cols) fail(start, "ragged matrix rows");
        ModuleMap m(out.ring, rows.size(), cols);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        return m;
    }

    template <typename V>
    size_t resolve(const std::vector<std::string>& names, const V&, const Tok& t,
                   const std::string& what) {
        auto it = std::find(names.begin(), names.end(), t.text);
        if (it == names.end()) fail(t, "unknown " + what + " '" + t.text + "'");
        return static_cast<size_t>(it - names.begin());
    }

    std::optional<size_t> try_resolve(const std::vector<std::string>& names,
                                      const std::string& n) {
        auto it = std::find(names.begin(), names.end(), n);
        if (it == names.end()) return std::nullopt;
        return static_cast<size_t>(it - names.begin());
    }

    void parse() {
        while (lx.peek().kind != Tok::end) {
            try {
                statement();
            } catch (const SessionError& e) {
                errors.push_back(e);
                // resynchronize after ';'
                while (lx.peek().kind != Tok::end &&
                       !(lx.peek().kind == Tok::sym && lx.peek().text == ";"))
                    lx.next();
                if (lx.peek().kind != Tok::end) lx.next();
            }
        }
        if (!ring_seen && errors.empty())
            errors.push_back({1, 1, "session declares no ring"});
        if (!errors.empty()) throw SessionParseException(std::move(errors));
    }

    void statement() {
        const Tok& t = lx.peek();
        if (t.kind != Tok::ident) fail(t, "expected a declaration or query");
        const std::string kw = t.text;
        if (kw == "ring") decl_ring();
        else if (kw == "ideal") decl_ideal(false);
        else if (kw == "prime") decl_ideal(true);
        else if (kw == "module") decl_module();
        else if (kw == "complex") decl_complex();
        else if (kw == "subset") decl_subset();
        else if (kw == "seq") decl_seq();
        else if (kw == "query") parse_query();
        else fail(t, "unknown statement '" + kw + "'");
    }

    void decl_ring() {
        Tok t = lx.next();  // ring
        if (ring_seen) fail(t, "exactly one ring per session");
        std::string name = expect_ident("ring name");
        (void)name;
        expect_sym("=");
        Tok ft = lx.peek();
        std::string field = expect_ident("field (QQ or F<p>)");
        CoefficientField cf = CoefficientField::rationals();
        if (field == "QQ") {
            cf = CoefficientField::rationals();
        } else if (field.size() > 1 && field[0] == 'F') {
            uint32_t p = 0;
            for (size_t i = 1; i < field.size(); ++i) {
                if (!isdigit(static_cast<unsigned char>(field[i])))
                    fail(ft, "bad field '" + field + "'");
                p = p * 10 + static_cast<uint32_t>(field[i] - '0');
            }
            try {
                cf = CoefficientField::prime(p);
            } catch (const std::invalid_argument& e) {
                fail(ft, e.what());
            }
        } else {
            fail(ft, "bad field '" + field + "'");
        }
        expect_sym("[");
        std::vector<std::string> vars;
        while (true) {
            vars.push_back(expect_ident("variable name"));
            if (lx.at_sym(",")) { lx.next(); continue; }
            break;
        }
        expect_sym("]");
        MonomialOrder ord = MonomialOrder::grevlex;
        if (lx.peek().kind == Tok::ident &&
            (lx.peek().text == "lex" || lx.peek().text == "grevlex")) {
            ord = lx.next().text == "lex" ? MonomialOrder::lex : MonomialOrder::grevlex;
        }
        expect_sym(";");
        try {
            out.ring = PolyRing(vars, cf, ord);
        } catch (const std::invalid_argument& e) {
            fail(t, e.what());
        }
        ring_seen = true;
    }

    void decl_ideal(bool prime) {
        Tok t = lx.next();
        require_ring(t);
        Tok nt = lx.peek();
        std::string name = expect_ident("name");
        if (name_taken(name)) fail(nt, "name '" + name + "' already declared");
        expect_sym("=");
        expect_sym("(");
        std::vector<Polynomial> gens = parse_poly_list("(", ")");
        expect_sym(";");
        Ideal I(out.ring, gens);
        if (prime) {
            if (I.is_unit()) fail(nt, "catalog primes must be proper");
            out.prime_names.push_back(name);
            out.primes.push_back(I);
        }
        // primes are also addressable as ideals
        out.ideal_names.push_back(name);
        out.ideals.push_back(std::move(I));
    }

    void decl_module() {
        Tok t = lx.next();
        require_ring(t);
        Tok nt = lx.peek();
        std::string name = expect_ident("name");
        if (name_taken(name)) fail(nt, "name '" + name + "' already declared");
        expect_sym("=");
        std::string form = expect_ident("'coker' or 'free'");
        FPModule M;
        if (form == "coker") {
            M = FPModule(parse_matrix());
        } else if (form == "free") {
            long long n = expect_int();
            if (n < 0) fail(nt, "free rank must be nonnegative");
            M = FPModule::free_module(out.ring, static_cast<size_t>(n));
        } else {
            fail(nt, "unknown module form '" + form + "'");
        }
        expect_sym(";");
        out.module_names.push_back(name);
        out.modules.push_back(std::move(M));
    }

    void decl_complex() {
        Tok t = lx.next();
        require_ring(t);
        Tok nt = lx.peek();
        std::string name = expect_ident("name");
        if (name_taken(name)) fail(nt, "name '" + name + "' already declared");
        expect_sym("=");
        std::string form = expect_ident("'koszul', 'stalk' or 'chain'");
        try {
            if (form == "koszul") {
                expect_sym("[");
                std::vector<Polynomial> xs = parse_poly_list("[", "]");
                expect_sym(";");
                out.complex_names.push_back(name);
                out.complexes.push_back(koszul(xs));
                return;
            }
            if (form == "stalk") {
                Tok mt = lx.peek();
                std::string mn = expect_ident("module name");
                size_t mi = resolve(out.module_names, out.modules, mt, "module");
                (void)mn;
                long long deg = expect_int();
                expect_sym(";");
                out.complex_names.push_back(name);
                out.complexes.push_back(
                    FPComplex::stalk(out.modules[mi], static_cast<int>(deg)));
                return;
            }
            if (form == "chain") {
                long long lo = expect_int();
                expect_sym("[");
                std::vector<FPModule> terms;
                while (true) {
                    Tok mt = lx.peek();
                    expect_ident("module name");
                    terms.push_back(out.modules[resolve(out.module_names, out.modules, mt,
                                                        "module")]);
                    if (lx.at_sym(",")) { lx.next(); continue; }
                    break;
                }
                expect_sym("]");
                expect_sym("[");
                std::vector<ModuleMap> maps;
                if (!lx.at_sym("]")) {
                    while (true) {
                        maps.push_back(parse_matrix());
                        if (lx.at_sym(",")) { lx.next(); continue; }
                        break;
                    }
                }
                expect_sym("]");
                expect_sym(";");
                out.complex_names.push_back(name);
                out.complexes.push_back(
                    FPComplex(out.ring, static_cast<int>(lo), terms, maps));
                return;
            }
        } catch (const std::invalid_argument& e) {
            fail(nt, e.what());
        }
        fail(nt, "unknown complex form '" + form + "'");
    }

    void decl_subset() {
        Tok t = lx.next();
        require_ring(t);
        Tok nt = lx.peek();
        std::string name = expect_ident("name");
        if (name_taken(name)) fail(nt, "name '" + name + "' already declared");
        expect_sym("=");
        SubsetDecl d;
        d.name = name;
        if (lx.at_sym("{")) {
            lx.next();
            d.kind = SubsetDecl::Kind::extensional;
            if (!lx.at_sym("}")) {
                while (true) {
                    Tok pt = lx.peek();
                    expect_ident("prime name");
                    d.members.push_back(resolve(out.prime_names, out.primes, pt, "prime"));
                    if (lx.at_sym(",")) { lx.next(); continue; }
                    break;
                }
            }
            expect_sym("}");
        } else if (lx.at_ident("D") || lx.at_ident("V")) {
            d.kind = lx.next().text == "D" ? SubsetDecl::Kind::d_form : SubsetDecl::Kind::v_form;
            expect_sym("(");
            // a single identifier naming a declared seq or ideal, else polys
            if (lx.peek().kind == Tok::ident && lx.toks[lx.pos + 1].kind == Tok::sym &&
                lx.toks[lx.pos + 1].text == ")") {
                std::string ref = lx.peek().text;
                bool resolved = false;
                for (const auto& s : out.seqs)
                    if (s.first == ref) {
                        d.polys = s.second;
                        resolved = true;
                        break;
                    }
                if (!resolved) {
                    if (auto ii = try_resolve(out.ideal_names, ref)) {
                        d.polys = out.ideals[*ii].gens();
                        resolved = true;
                    }
                }
                if (resolved) {
                    lx.next();
                    lx.next();
                } else {
                    d.polys = parse_poly_list("(", ")");
                }
            } else {
                d.polys = parse_poly_list("(", ")");
            }
        } else {
            fail(lx.peek(), "expected '{', 'D' or 'V'");
        }
        expect_sym(";");
        out.subsets.push_back(std::move(d));
    }

    void decl_seq() {
        Tok t = lx.next();
        require_ring(t);
        Tok nt = lx.peek();
        std::string name = expect_ident("name");
        if (name_taken(name)) fail(nt, "name '" + name + "' already declared");
        expect_sym("=");
        expect_sym("[");
        std::vector<Polynomial> ps = parse_poly_list("[", "]");
        expect_sym(";");
        out.seqs.emplace_back(name, std::move(ps));
    }

    Level parse_level() {
        if (lx.at_ident("inf")) {
            lx.next();
            return Level::inf();
        }
        long long n = expect_int();
        if (n < 0) fail(lx.peek(), "negative level");
        return Level::at(static_cast<size_t>(n));
    }

    void parse_query() {
        Tok t = lx.next();  // query
        require_ring(t);
        Query q;
        q.line = t.line;
        q.col = t.col;
        q.cmd = expect_ident("command");
        size_t disp_from = lx.pos;

        auto ideal_arg = [&] {
            Tok a = lx.peek();
            expect_ident("ideal name");
            q.ideals.push_back(resolve(out.ideal_names, out.ideals, a, "ideal"));
        };
        auto module_arg = [&] {
            Tok a = lx.peek();
            expect_ident("module name");
            q.modules.push_back(resolve(out.module_names, out.modules, a, "module"));
        };
        auto complex_arg = [&] {
            Tok a = lx.peek();
            expect_ident("complex name");
            q.complexes.push_back(resolve(out.complex_names, out.complexes, a, "complex"));
        };
        auto subset_arg = [&] {
            Tok a = lx.peek();
            expect_ident("subset name");
            for (size_t i = 0; i < out.subsets.size(); ++i)
                if (out.subsets[i].name == a.text) {
                    q.subsets.push_back(i);
                    return;
                }
            fail(a, "unknown subset '" + a.text + "'");
        };
        auto prime_arg = [&] {
            Tok a = lx.peek();
            expect_ident("prime name");
            q.primes.push_back(resolve(out.prime_names, out.primes, a, "prime"));
        };
        auto poly_arg = [&] {
            expect_sym("(");
            std::vector<Polynomial> ps = parse_poly_list("(", ")");
            if (ps.size() != 1) fail(t, "expected exactly one polynomial");
            q.polys.push_back(ps[0]);
        };
        auto modref_arg = [&] {  // 'R' or an ideal name (meaning R/J)
            Tok a = lx.peek();
            std::string n = expect_ident("'R' or an ideal name");
            if (n == "R") {
                q.mod_is_ring = true;
                return;
            }
            auto ii = try_resolve(out.ideal_names, n);
            if (!ii) fail(a, "unknown ideal '" + n + "'");
            q.mod_ideal = *ii;
        };

        const std::string& c = q.cmd;
        if (c == "gb" || c == "dim") ideal_arg();
        else if (c == "contains" || c == "intersect") { ideal_arg(); ideal_arg(); }
        else if (c == "saturate") { ideal_arg(); poly_arg(); }
        else if (c == "radmem" || c == "nf") { poly_arg(); ideal_arg(); }
        else if (c == "supp" || c == "ass" || c == "indart") module_arg();
        else if (c == "bass") {
            module_arg();
            prime_arg();
            q.ints.push_back(expect_int());
            if (lx.peek().kind != Tok::range) fail(lx.peek(), "expected '..'");
            lx.next();
            q.ints.push_back(expect_int());
        } else if (c == "gamma" || c == "grade") { ideal_arg(); module_arg(); }
        else if (c == "cech") { ideal_arg(); modref_arg(); q.ints.push_back(expect_int()); }
        else if (c == "cd") { ideal_arg(); modref_arg(); }
        else if (c == "coherence") { subset_arg(); q.level = parse_level(); }
        else if (c == "filtration" || c == "predicates") subset_arg();
        else if (c == "cphi") { module_arg(); subset_arg(); q.ints.push_back(expect_int()); }
        else if (c == "suppinv") { module_arg(); subset_arg(); }
        else if (c == "closure") {
            subset_arg();
            q.level = parse_level();
            if (lx.peek().kind == Tok::integer) q.ints.push_back(expect_int());
        } else if (c == "consistency" || c == "uniformity") {
            complex_arg();
            subset_arg();
            q.level = parse_level();
            q.ints.push_back(expect_int());
        } else if (c == "restrict") { subset_arg(); prime_arg(); }
        else if (c == "suppc") complex_arg();
        else if (c == "cohomology") { complex_arg(); q.ints.push_back(expect_int()); }
        else fail(t, "unknown query command '" + c + "'");

        for (size_t k = disp_from; k < lx.pos; ++k) {
            if (!q.display.empty()) q.display += " ";
            q.display += lx.toks[k].text;
        }
        expect_sym(";");
        out.queries.push_back(std::move(q));
    }
};

}  // namespace

Session parse_session(const std::string& src) {
    SessionParser p(src);
    p.parse();
    return std::move(p.out);
}

namespace {

using json = nlohmann::ordered_json;

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

json prime_list(const SpecSubset& s) {
    json a = json::array();
    for (size_t i = 0; i < s.catalog().size(); ++i)
        if (s.contains(i)) a.push_back(s.catalog().name(i));
    return a;
}

std::string hexdigest(uint64_t h) {
    std::ostringstream os;
    os << std::hex << h;
    return "fnv1a:" + os.str();
}

}  // namespace

bool validate_report(const json& r, std::string* why) {
    auto bad = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (!r.is_object()) return bad("not an object");
    if (!r.contains("schema") || r["schema"] != "specfilt-report/1") return bad("schema tag");
    for (const char* k : {"engine", "catalog_relative", "banner", "ring", "catalog",
                          "results", "failed_checks", "session_digest", "timing_ms"})
        if (!r.contains(k)) return bad(std::string("missing key ") + k);
    if (!r["engine"].is_object() || !r["engine"].contains("name") ||
        !r["engine"].contains("version"))
        return bad("engine block");
    if (!r["catalog_relative"].is_boolean() || !r["catalog"].is_array() ||
        !r["results"].is_array() || !r["failed_checks"].is_number_unsigned())
        return bad("field types");
    for (const auto& q : r["results"]) {
        if (!q.is_object() || !q.contains("index") || !q.contains("cmd") ||
            !q.contains("query") || !q.contains("ok"))
            return bad("result entry shape");
        if (!q["ok"].is_boolean()) return bad("result ok flag");
        if (!q["ok"].get<bool>() && !q.contains("error")) return bad("failed result lacks error");
    }
    return true;
}

RunResult run_session(const Session& s, const RunFlags& flags) {
    auto t0 = std::chrono::steady_clock::now();
    json rep;
    rep["schema"] = "specfilt-report/1";
    rep["engine"] = {{"name", "specfilt"}, {"version", "0.1.0"}};
    rep["catalog_relative"] = true;
    rep["banner"] =
        "all spectrum-level statements are relative to the declared prime catalog";
    rep["ring"] = s.ring.describe();

    PrimeCatalog cat(s.ring, s.primes, s.prime_names);
    json cj = json::array();
    for (size_t i = 0; i < cat.size(); ++i) cj.push_back(cat.name(i));
    rep["catalog"] = cj;

    size_t bound = flags.bass_bound.value_or(cat.default_bass_bound());
    CoherenceEngine eng(cat, bound);

    // materialize subsets against the full catalog
    std::vector<SpecSubset> subsets;
    for (const auto& d : s.subsets) {
        SpecSubset phi = SpecSubset::empty(cat);
        if (d.kind == SubsetDecl::Kind::extensional) {
            for (size_t m : d.members) phi = phi.with(m);
        } else {
            for (size_t i = 0; i < cat.size(); ++i) {
                bool in_v = true;
                for (const auto& f : d.polys)
                    if (!cat.prime(i).contains_poly(f)) { in_v = false; break; }
                bool want = d.kind == SubsetDecl::Kind::v_form ? in_v : !in_v;
                if (want) phi = phi.with(i);
            }
            if (d.kind == SubsetDecl::Kind::d_form) eng.declare_d_form(phi, d.polys);
        }
        subsets.push_back(phi);
    }
    for (size_t i = 0; i < s.modules.size(); ++i)
        eng.add_witness(s.module_names[i], s.modules[i]);

    json results = json::array();
    size_t failed_checks = 0;
    std::ostringstream text;
    text << "specfilt report (catalog-relative)\n";
    int exit_code = 0;

    auto sqfree = [&](size_t ideal_idx) {
        try {
            return SquarefreeMonomialIdeal::from_polynomials(s.ring,
                                                             s.ideals[ideal_idx].gens());
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument(
                "ideal '" + s.ideal_names[ideal_idx] +
                "' is out of computable scope: needs squarefree monomial generators");
        }
    };

    for (size_t qi = 0; qi < s.queries.size(); ++qi) {
        const Query& q = s.queries[qi];
        json r;
        r["index"] = qi;
        r["cmd"] = q.cmd;
        r["query"] = q.cmd + (q.display.empty() ? "" : " " + q.display);
        bool check_failed = false;
        try {
            const std::string& c = q.cmd;
            if (c == "gb") {
                json b = json::array();
                for (const auto& g : s.ideals[q.ideals[0]].groebner_basis())
                    b.push_back(g.to_string());
                r["basis"] = b;
            } else if (c == "dim") {
                r["dim"] = krull_dim(s.ideals[q.ideals[0]]);
            } else if (c == "contains") {
                r["result"] = ideal_contains(s.ideals[q.ideals[0]], s.ideals[q.ideals[1]]);
            } else if (c == "intersect") {
                json b = json::array();
                Ideal meet = ideal_intersect(s.ideals[q.ideals[0]], s.ideals[q.ideals[1]]);
                for (const auto& g : meet.groebner_basis()) b.push_back(g.to_string());
                r["generators"] = b;
            } else if (c == "saturate") {
                json b = json::array();
                Ideal sat = saturate(s.ideals[q.ideals[0]], q.polys[0]);
                for (const auto& g : sat.groebner_basis()) b.push_back(g.to_string());
                r["generators"] = b;
            } else if (c == "radmem") {
                r["result"] = radical_membership(q.polys[0], s.ideals[q.ideals[0]]);
            } else if (c == "nf") {
                r["result"] =
                    normal_form(q.polys[0], s.ideals[q.ideals[0]].groebner_basis())
                        .to_string();
            } else if (c == "supp") {
                r["primes"] = prime_list(
                    small_support(s.modules[q.modules[0]],
                                  eng.bass_cache().get(s.modules[q.modules[0]], cat, bound),
                                  cat));
            } else if (c == "ass") {
                r["primes"] = prime_list(ass_primes(
                    eng.bass_cache().get(s.modules[q.modules[0]], cat, bound), cat));
            } else if (c == "bass") {
                long long lo = q.ints[0], hi = q.ints[1];
                if (lo < 0 || hi < lo) throw std::invalid_argument("bad bass range");
                if (static_cast<size_t>(hi) > bound)
                    throw std::invalid_argument("range above the Bass bound");
                const BassTable& t =
                    eng.bass_cache().get(s.modules[q.modules[0]], cat, bound);
                json mu = json::array();
                for (long long i = lo; i <= hi; ++i)
                    mu.push_back(t.mu[q.primes[0]][static_cast<size_t>(i)]);
                r["prime"] = cat.name(q.primes[0]);
                r["range"] = {lo, hi};
                r["mu"] = mu;
            } else if (c == "indart") {
                r["result"] = ind_artinian_check(s.modules[q.modules[0]], cat);
            } else if (c == "gamma") {
                FPModule g = gamma_torsion(s.ideals[q.ideals[0]], s.modules[q.modules[0]]);
                r["is_zero"] = g.is_zero();
                r["ass_primes"] = prime_list(ass_primes(g, cat));
            } else if (c == "grade") {
                GradeResult g = grade(s.ideals[q.ideals[0]], s.modules[q.modules[0]]);
                if (g.infinite) r["grade"] = "infinity";
                else r["grade"] = *g.value;
                r["annihilates"] = g.annihilates;
            } else if (c == "cech") {
                SquarefreeMonomialIdeal a = sqfree(q.ideals[0]);
                CechModule m = q.mod_is_ring ? CechModule::whole_ring()
                                             : CechModule::quotient_by(sqfree(*q.mod_ideal));
                if (q.ints[0] < 0) throw std::invalid_argument("negative degree");
                r["nonzero"] =
                    cech_cohomology_nonzero(a, m, static_cast<size_t>(q.ints[0]));
            } else if (c == "cd") {
                SquarefreeMonomialIdeal a = sqfree(q.ideals[0]);
                CechModule m = q.mod_is_ring ? CechModule::whole_ring()
                                             : CechModule::quotient_by(sqfree(*q.mod_ideal));
                auto cd = cohomological_dimension(a, m);
                if (cd) r["cd"] = *cd;
                else r["cd"] = "all_vanish";
            } else if (c == "coherence") {
                CoherenceVerdict v = eng.verdict(subsets[q.subsets[0]], *q.level);
                r["status"] = to_string(v.status);
                r["rule"] = v.trace.empty() ? "" : v.trace.back().rule;
                json tr = json::array();
                for (const auto& step : v.trace)
                    tr.push_back({{"rule", step.rule}, {"note", step.note}});
                r["trace"] = tr;
                if (v.witness) {
                    json w;
                    w["kind"] = v.witness->kind;
                    w["detail"] = v.witness->detail;
                    if (v.witness->module_desc) w["module"] = *v.witness->module_desc;
                    if (v.witness->nonvanishing_degree)
                        w["nonvanishing_degree"] = *v.witness->nonvanishing_degree;
                    if (v.witness->poset_pair)
                        w["poset_pair"] = {cat.name(v.witness->poset_pair->first),
                                           cat.name(v.witness->poset_pair->second)};
                    r["witness"] = w;
                }
            } else if (c == "filtration") {
                FiltrationReport f = eng.filtration(subsets[q.subsets[0]]);
                json ls = json::array();
                for (const auto& l : f.levels)
                    ls.push_back({{"n", l.level.to_string()},
                                  {"status", to_string(l.status)},
                                  {"rule", l.rule},
                                  {"primed", l.primed}});
                r["levels"] = ls;
                if (f.first_coherent) r["first_coherent"] = *f.first_coherent;
                else r["first_coherent"] = nullptr;
                r["specialization_closed"] = f.predicates.specialization_closed;
                r["generalization_closed"] = f.predicates.generalization_closed;
                r["clopen"] = f.predicates.clopen_in_catalog;
            } else if (c == "cphi") {
                if (q.ints[0] < 0) throw std::invalid_argument("negative level");
                r["result"] = eng.c_phi_membership(s.modules[q.modules[0]],
                                                   subsets[q.subsets[0]],
                                                   static_cast<size_t>(q.ints[0]));
            } else if (c == "suppinv") {
                r["result"] = eng.supp_inverse_membership(s.modules[q.modules[0]],
                                                          subsets[q.subsets[0]]);
            } else if (c == "closure") {
                size_t count = q.ints.empty() ? 200 : static_cast<size_t>(q.ints[0]);
                ClosureReport cr = eng.closure_test(subsets[q.subsets[0]], *q.level,
                                                    flags.seed, count, s.modules);
                r["sequences"] = cr.sequences;
                r["instances"] = cr.instances;
                r["violations"] = cr.violations;
                json fs = json::array();
                for (const auto& f : cr.failures) fs.push_back(f);
                r["failures"] = fs;
                if (cr.violations > 0) check_failed = true;
            } else if (c == "consistency" || c == "uniformity") {
                TriState ts = c == "consistency"
                                  ? eng.consistency_check(s.complexes[q.complexes[0]],
                                                          subsets[q.subsets[0]], *q.level,
                                                          static_cast<int>(q.ints[0]))
                                  : eng.uniformity_check(s.complexes[q.complexes[0]],
                                                         subsets[q.subsets[0]], *q.level,
                                                         static_cast<int>(q.ints[0]));
                r["result"] = ts == TriState::yes      ? "true"
                              : ts == TriState::no     ? "false"
                                                       : "not_applicable";
            } else if (c == "predicates") {
                auto p = subset_predicates(subsets[q.subsets[0]]);
                r["specialization_closed"] = p.specialization_closed;
                r["generalization_closed"] = p.generalization_closed;
                r["clopen"] = p.clopen_in_catalog;
            } else if (c == "restrict") {
                r["primes"] = prime_list(restrict_at(subsets[q.subsets[0]], q.primes[0]));
            } else if (c == "suppc") {
                r["primes"] = prime_list(supp_complex(s.complexes[q.complexes[0]], cat));
            } else if (c == "cohomology") {
                FPModule h =
                    cohomology(s.complexes[q.complexes[0]], static_cast<int>(q.ints[0]));
                r["is_zero"] = h.is_zero();
                r["gens"] = h.gens();
                json f = json::array();
                Ideal fit = fitting_ideal_0(h);
                for (const auto& g : fit.groebner_basis()) f.push_back(g.to_string());
                r["fitting"] = f;
            } else {
                throw std::invalid_argument("unhandled command " + c);
            }
            r["ok"] = true;
        } catch (const ContradictionError& e) {
            r["ok"] = false;
            r["error"] = {{"kind", "contradiction"}, {"message", e.what()}};
            results.push_back(r);
            rep["results"] = results;
            rep["failed_checks"] = failed_checks + 1;
            rep["session_digest"] = hexdigest(fnv1a(s.source + results.dump()));
            rep["timing_ms"] = 0;
            return {rep, text.str(), 3};
        } catch (const std::exception& e) {
            r["ok"] = false;
            r["error"] = {{"kind", "engine"}, {"message", e.what()}};
            ++failed_checks;
            exit_code = std::max(exit_code, 1);
            if (flags.fail_fast) {
                results.push_back(r);
                break;
            }
        }
        if (check_failed) {
            ++failed_checks;
            exit_code = std::max(exit_code, 1);
        }
        if (r["ok"].get<bool>()) {
            json payload = r;
            payload.erase("index");
            payload.erase("cmd");
            payload.erase("query");
            payload.erase("ok");
            text << "[" << qi << "] " << r["query"].get<std::string>() << " -> "
                 << payload.dump() << "\n";
        } else {
            text << "[" << qi << "] " << r["query"].get<std::string>() << " -> error: "
                 << r["error"]["message"].get<std::string>() << "\n";
        }
        results.push_back(std::move(r));
    }

    rep["results"] = results;
    rep["failed_checks"] = failed_checks;
    rep["session_digest"] = hexdigest(fnv1a(s.source + results.dump()));
    auto t1 = std::chrono::steady_clock::now();
    rep["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return {rep, text.str(), exit_code};
}

}  // namespace specfilt
