// hecke-typer: command-line front end.
//
// Exit codes: 0 success, 1 internal error, 2 invalid input.

#include "hecke/classifier.hpp"
#include "hecke/coxeter.hpp"
#include "hecke/report.hpp"
#include "hecke/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace hecke;

constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;

struct Usage : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::uint64_t element_cap(std::optional<std::uint64_t> flag)
{
    if (flag)
        return *flag;
    if (const char* env = std::getenv("HECKE_TYPER_MAX_ELEMENTS")) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used == std::string(env).size())
                return v;
        } catch (const std::exception&) {
        }
        throw Usage("HECKE_TYPER_MAX_ELEMENTS must be a non-negative integer");
    }
    return kDefaultElementCap;
}

struct ClassifyArgs {
    std::string spec;
    std::uint64_t characteristic = 0;
    bool q1 = false;
    std::optional<unsigned> e;
    std::string bq = "equal-q";
    std::optional<unsigned> f;
    bool json = false;
};

int run_classify(const ClassifyArgs& a)
{
    ClassificationInput in;
    in.spec = parse_type_spec(a.spec);
    in.characteristic = a.characteristic;
    if (a.q1 == a.e.has_value())
        throw Usage("exactly one of --q1 and --e is required");
    in.parameter = a.q1 ? Parameter{QIsOne{}} : Parameter{RootOfUnity{*a.e}};
    if (a.bq == "minus-power") {
        if (!a.f)
            throw Usage("--bq minus-power needs --f");
        in.b_parameter = MinusPowerF{*a.f};
    } else {
        if (a.f)
            throw Usage("--f is only valid with --bq minus-power");
        if (a.bq == "equal-q")
            in.b_parameter = EqualQ{};
        else if (a.bq == "one")
            in.b_parameter = QOne{};
        else
            in.b_parameter = GenericQ{};
    }
    const ClassificationReport rep = classify(in);
    if (a.json)
        std::cout << to_json(rep).dump(2) << '\n';
    else
        std::cout << to_text(rep);
    return 0;
}

int run_poincare(const std::string& spec_text, bool json)
{
    const WeylSpec spec = parse_type_spec(spec_text);
    const IntPolynomial p = poincare_polynomial(spec);
    if (json) {
        Json out;
        out["spec"] = spec.to_string();
        out["order"] = group_order(spec).str();
        out["coefficients"] = to_json(p);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << p.to_string() << '\n';
    }
    return 0;
}

std::string element_text(const Element& w, unsigned rank)
{
    std::string s = "(";
    for (unsigned i = 0; i < rank; ++i) {
        if (i)
            s += ',';
        s += std::to_string(w[i]);
    }
    return s + ")";
}

int run_group_info(const std::string& type_text, const std::vector<unsigned>& primes, bool json,
                   std::optional<std::uint64_t> cap_flag)
{
    const WeylSpec spec = parse_type_spec(type_text);
    if (spec.factors.size() != 1)
        throw Usage("group-info takes a single irreducible type");
    const IrreducibleType t = spec.factors.front();
    const std::uint64_t cap = element_cap(cap_flag);
    std::cerr << "enumerating " << t.to_string() << " (cap " << cap << ")\n";
    std::optional<GroupTable> table;
    try {
        table.emplace(generate_group(realize(t), cap));
    } catch (const std::invalid_argument& e) {
        throw Usage(e.what());
    }
    const GroupTable& g = *table;
    const unsigned key_width = g.realization().is_abstract_dihedral() ? 2 : g.realization().rank;

    std::vector<SylowReport> sylow;
    for (unsigned l : primes) {
        try {
            sylow.push_back(sylow_is_cyclic(g, l));
        } catch (const std::invalid_argument& e) {
            throw Usage(e.what());
        }
    }

    if (json) {
        Json out;
        out["type"] = t.to_string();
        out["order"] = g.order();
        out["length_histogram"] = g.length_histogram();
        Json census = Json::object();
        for (const auto& [k, n] : g.order_census())
            census[std::to_string(k)] = n;
        out["element_orders"] = census;
        Json js = Json::array();
        for (const auto& s : sylow)
            js.push_back({{"prime", s.prime},
                          {"l_part", std::to_string(s.prime) + "^" + std::to_string(s.exponent)},
                          {"max_l_order", s.max_l_order},
                          {"cyclic", s.cyclic}});
        out["sylow"] = js;
        std::cout << out.dump(2) << '\n';
        return 0;
    }

    std::cout << "type             " << t.to_string() << '\n';
    std::cout << "order            " << g.order() << '\n';
    std::cout << "length histogram";
    for (auto n : g.length_histogram())
        std::cout << ' ' << n;
    std::cout << '\n';
    std::cout << "element orders  ";
    for (const auto& [k, n] : g.order_census())
        std::cout << ' ' << k << ':' << n;
    std::cout << '\n';
    for (const auto& s : sylow) {
        std::cout << "l=" << s.prime << "  |W|_l=" << s.prime << '^' << s.exponent
                  << "  max l-order " << s.max_l_order << "  Sylow "
                  << (s.cyclic ? "cyclic" : "not cyclic") << "  witness "
                  << element_text(s.witness, key_width) << '\n';
    }
    return 0;
}

struct VerifyArgs {
    std::string suite;
    std::optional<std::uint64_t> max_order;
    bool with_e7 = false;
    unsigned max_rank = 12;
    unsigned max_e = 40;
    unsigned max_n = 40;
    unsigned morita_max_e = 20;
    unsigned pairs = 500;
    std::uint64_t seed = VerifyLimits{}.seed;
};

int run_verify(const VerifyArgs& a)
{
    VerifyLimits lim;
    lim.max_order = a.max_order ? *a.max_order
                                : (std::getenv("HECKE_TYPER_MAX_ELEMENTS") ? element_cap(std::nullopt)
                                                                           : lim.max_order);
    lim.include_e7 = a.with_e7;
    lim.max_rank = a.max_rank;
    lim.max_e = a.max_e;
    lim.morita_max_n = a.max_n;
    lim.morita_max_e = a.morita_max_e;
    lim.kunneth_pairs = a.pairs;
    lim.seed = a.seed;

    std::vector<std::string> suites;
    if (a.suite == "all")
        suites = suite_names();
    else if (std::find(suite_names().begin(), suite_names().end(), a.suite) != suite_names().end())
        suites = {a.suite};
    else
        throw Usage("unknown suite '" + a.suite + "'");

    bool ok = true;
    for (const auto& name : suites) {
        const SuiteResult r =
            run_suite(name, lim, [](const std::string& msg) { std::cerr << "  " << msg << '\n'; });
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks, "
                  << r.failures.size() << " failed)\n";
        constexpr std::size_t kShown = 20;
        for (std::size_t i = 0; i < r.failures.size() && i < kShown; ++i)
            std::cout << "  counterexample: " << r.failures[i] << '\n';
        ok = ok && r.passed();
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Representation type of Hecke algebras of finite Weyl groups"};
    app.require_subcommand(1);

    ClassifyArgs ca;
    auto* classify_cmd = app.add_subcommand("classify", "Classify a Hecke algebra or group algebra");
    classify_cmd->add_option("--spec", ca.spec, "Type spec, e.g. A4xB3, D4, I2(5), 1")->required();
    classify_cmd->add_option("--char", ca.characteristic, "Characteristic (0 or a prime)");
    auto* q1 = classify_cmd->add_flag("--q1", ca.q1, "q = 1 (group algebra)");
    auto* eopt = classify_cmd->add_option("--e", ca.e, "Multiplicative order of q");
    q1->excludes(eopt);
    classify_cmd->add_option("--bq", ca.bq, "Second parameter Q of type B factors")
        ->check(CLI::IsMember({"equal-q", "one", "generic", "minus-power"}));
    classify_cmd->add_option("--f", ca.f, "f with -Q = q^f when --bq minus-power");
    classify_cmd->add_flag("--json", ca.json, "JSON report");

    std::string poincare_spec;
    bool poincare_json = false;
    auto* poincare_cmd = app.add_subcommand("poincare", "Poincare polynomial of a Weyl group");
    poincare_cmd->add_option("--spec", poincare_spec, "Type spec")->required();
    poincare_cmd->add_flag("--json", poincare_json, "JSON output");

    std::string gi_type;
    std::vector<unsigned> gi_primes{2, 3, 5, 7};
    bool gi_json = false;
    std::optional<std::uint64_t> gi_cap;
    auto* gi_cmd = app.add_subcommand("group-info", "Brute-force enumeration of an irreducible type");
    gi_cmd->add_option("--type", gi_type, "Irreducible type, e.g. F4")->required();
    gi_cmd->add_option("--primes", gi_primes, "Primes for the Sylow test")->delimiter(',');
    gi_cmd->add_option("--max-elements", gi_cap, "Enumeration cap");
    gi_cmd->add_flag("--json", gi_json, "JSON output");

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", va.suite, "Suite name or 'all'")->required();
    verify_cmd->add_option("--max-order", va.max_order, "Largest group enumerated by BFS");
    verify_cmd->add_flag("--with-e7", va.with_e7, "Include E7 in the brute-force suites");
    verify_cmd->add_option("--max-rank", va.max_rank, "multiplicity-oracle rank limit");
    verify_cmd->add_option("--max-e", va.max_e, "multiplicity-oracle e limit");
    verify_cmd->add_option("--max-n", va.max_n, "morita-consistency n limit");
    verify_cmd->add_option("--morita-max-e", va.morita_max_e, "morita-consistency e limit");
    verify_cmd->add_option("--pairs", va.pairs, "kunneth-bound sample size");
    verify_cmd->add_option("--seed", va.seed, "kunneth-bound random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    try {
        if (*classify_cmd)
            return run_classify(ca);
        if (*poincare_cmd)
            return run_poincare(poincare_spec, poincare_json);
        if (*gi_cmd)
            return run_group_info(gi_type, gi_primes, gi_json, gi_cap);
        if (*verify_cmd)
            return run_verify(va);
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const Usage& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}
