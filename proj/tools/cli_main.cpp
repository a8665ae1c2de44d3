// layerline: command-line front end for the consecutive-layer graph
// library.  Every subcommand prints a deterministic JSON report (or a raw
// graph encoding) and exits 0 on success, 1 when a structural check
// fails, 2 on invalid parameters, 3 when a search budget is exceeded.

#include <bit>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "layerline/aut_search.hpp"
#include "layerline/cayley.hpp"
#include "layerline/errors.hpp"
#include "layerline/fixed_vertex.hpp"
#include "layerline/gf.hpp"
#include "layerline/graph.hpp"
#include "layerline/group.hpp"
#include "layerline/hamilton.hpp"
#include "layerline/induced.hpp"
#include "layerline/layer_graphs.hpp"
#include "layerline/orbits.hpp"
#include "layerline/perm.hpp"
#include "layerline/regular_subgroup.hpp"
#include "layerline/serialize.hpp"
#include "layerline/spectral.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace layerline;

constexpr const char* kSchema = "layerline/1";

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitParams = 2;
constexpr int kExitBudget = 3;

// A completed computation whose result contradicts the predicted value.
struct VerificationFailure : Error {
    using Error::Error;
};

// Search budget, with LAYERLINE_SEARCH_BUDGET (a positive node count)
// overriding the default.
SearchBudget budget_from_env() {
    SearchBudget b;
    const char* raw = std::getenv("LAYERLINE_SEARCH_BUDGET");
    if (raw == nullptr || *raw == '\0') return b;
    std::string text(raw);
    if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 19)
        throw ParamsOutOfRange("LAYERLINE_SEARCH_BUDGET must be a positive integer");
    unsigned long long value = std::stoull(text);
    if (value == 0)
        throw ParamsOutOfRange("LAYERLINE_SEARCH_BUDGET must be a positive integer");
    b.max_nodes = value;
    return b;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Predicted automorphism group order of B(n,k) and L(B(n,k)): n!, doubled
// in the regular case n = 2k+1.
BigInt predicted_aut_order(const LayerParams& p) {
    BigInt f = factorial(p.n);
    return p.n == 2 * p.k + 1 ? 2 * f : f;
}

json json_big(const BigInt& v) {
    if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max()))
        return json(static_cast<std::uint64_t>(v));
    return json(v.str());
}

Graph line_of(const LayerParams& p) { return line_graph(build_b(p)).graph; }

// q = p^m with p prime, or ParamsOutOfRange.
std::pair<long long, int> prime_power_split(long long q) {
    if (q < 2) throw ParamsOutOfRange("q must be a prime power >= 2");
    for (long long p = 2; p * p <= q; ++p) {
        if (q % p != 0) continue;
        int m = 0;
        long long rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++m;
        }
        if (rest != 1) throw ParamsOutOfRange("q must be a prime power");
        return {p, m};
    }
    return {q, 1};  // q itself is prime
}

json regular_subgroup_certificate(const LayerParams& p, const FiniteGroup& sub) {
    json cert;
    cert["schema"] = kSchema;
    cert["kind"] = "regular-subgroup";
    cert["n"] = p.n;
    cert["k"] = p.k;
    cert["line"] = true;
    cert["order"] = sub.order();
    json elements = json::array();
    for (const auto& perm : sub.permutations()) elements.push_back(perm.cycle_string());
    cert["elements"] = std::move(elements);
    cert["verified"] = true;
    return cert;
}

const char* classification_name(ClassificationStatus s) {
    switch (s) {
        case ClassificationStatus::cayley: return "cayley";
        case ClassificationStatus::non_cayley: return "non-cayley";
        default: return "unresolved";
    }
}

// ---------------------------------------------------------------- build

int run_build(int n, int k, bool line, const std::string& format) {
    LayerParams p{n, k};
    validate(p);
    Graph g = build_b(p);
    if (line) g = line_graph(g).graph;
    if (format == "graph6") {
        std::cout << to_graph6(g) << "\n";
    } else if (format == "dot") {
        std::string doc = to_dot(g);
        std::cout << doc;
        if (doc.empty() || doc.back() != '\n') std::cout << "\n";
    } else {
        std::cout << to_json(g) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- props

int run_props(int n, int k) {
    LayerParams p{n, k};
    validate(p);
    Graph g = build_b(p);
    std::map<int, int> degree_counts;
    for (int v = 0; v < g.order(); ++v) ++degree_counts[g.degree(v)];
    bool connected = is_connected(g);
    bool bipartite = true;
    try {
        bipartition(g);
    } catch (const OddCycle&) {
        bipartite = false;
    }
    json out;
    out["schema"] = kSchema;
    out["kind"] = "props";
    out["n"] = n;
    out["k"] = k;
    out["order"] = g.order();
    out["size"] = g.size();
    json degrees;
    for (const auto& [deg, count] : degree_counts) degrees[std::to_string(deg)] = count;
    out["degrees"] = std::move(degrees);
    out["bipartite"] = bipartite;
    out["connected"] = connected;
    out["diameter"] = diameter(g);
    out["regular"] = g.is_regular();
    emit(out);
    return kExitOk;
}

// ------------------------------------------------------------------ aut

int run_aut(int n, int k, bool line) {
    LayerParams p{n, k};
    validate(p);
    Graph g = line ? line_of(p) : build_b(p);
    AutGroup ag = automorphism_group(g, budget_from_env());
    BigInt predicted = predicted_aut_order(p);
    bool matches = BigInt(ag.order) == predicted;
    json out;
    out["schema"] = kSchema;
    out["kind"] = "aut";
    out["n"] = n;
    out["k"] = k;
    out["line"] = line;
    out["order"] = ag.order;
    out["predicted"] = json_big(predicted);
    out["matches"] = matches;
    json gens = json::array();
    for (const auto& perm : ag.generators) gens.push_back(perm.cycle_string());
    out["generators"] = std::move(gens);
    emit(out);
    if (!matches) {
        std::cerr << "automorphism group order " << ag.order
                  << " does not match the predicted " << predicted.str() << "\n";
        return kExitVerification;
    }
    return kExitOk;
}

// --------------------------------------------------------- cayley-check

int run_cayley_check(int n, int k) {
    LayerParams p{n, k};
    validate(p);
    Graph l = line_of(p);
    CayleyVerdict verdict = is_cayley(l, budget_from_env());
    Classification cls = classify_line_cayley(n, k);

    json out;
    out["schema"] = kSchema;
    out["kind"] = "cayley-check";
    out["n"] = n;
    out["k"] = k;
    out["line_order"] = l.order();
    const char* verdict_name = verdict.status == CayleyStatus::yes   ? "yes"
                               : verdict.status == CayleyStatus::no  ? "no"
                                                                     : "undecided";
    out["verdict"] = verdict_name;
    if (verdict.aut_order != 0) out["aut_order"] = verdict.aut_order;
    out["classification"] = {{"status", classification_name(cls.status)},
                             {"reason", cls.reason}};
    if (verdict.status == CayleyStatus::yes)
        out["certificate"] = regular_subgroup_certificate(p, *verdict.subgroup);
    emit(out);

    if (verdict.status == CayleyStatus::undecided) return kExitBudget;
    bool conflict = (verdict.status == CayleyStatus::yes &&
                     cls.status == ClassificationStatus::non_cayley) ||
                    (verdict.status == CayleyStatus::no &&
                     cls.status == ClassificationStatus::cayley);
    if (conflict) {
        std::cerr << "computed verdict '" << verdict_name
                  << "' contradicts the parameter classification '"
                  << classification_name(cls.status) << "'\n";
        return kExitVerification;
    }
    return kExitOk;
}

// --------------------------------------------------------- cayley-build

int run_cayley_build(long long q) {
    auto [prime, power] = prime_power_split(q);
    FieldSpec spec = find_irreducible(prime, power);
    SemidirectCayley sc = field_semidirect_cayley(spec);
    Graph cg = cayley_graph(sc.group, sc.connection);

    auto rec = recognize_lb1(cg);
    if (!rec)
        throw VerificationFailure("the constructed Cayley graph was not recognized as a line graph of a two-layer graph");
    if (rec->n != q)
        throw VerificationFailure("recognition returned unexpected parameter n");
    Graph canonical = line_of(LayerParams{static_cast<int>(q), 1});
    if (!verify_isomorphism(cg, canonical, rec->certificate))
        throw VerificationFailure("recognition certificate failed re-verification");

    json out;
    out["schema"] = kSchema;
    out["kind"] = "cayley-build";
    out["q"] = q;
    json field;
    field["p"] = spec.p;
    field["m"] = spec.m;
    field["modulus"] = spec.modulus;
    out["field"] = std::move(field);
    out["group_order"] = sc.group.order();
    json connection = json::array();
    for (int s : sc.connection.members) connection.push_back(sc.group.label(s));
    out["connection"] = std::move(connection);
    out["alpha"] = sc.group.label(sc.alpha);
    out["graph"] = {{"order", cg.order()}, {"size", cg.size()}, {"regular", cg.is_regular()}};
    json cert;
    cert["schema"] = kSchema;
    cert["kind"] = "iso";
    cert["q"] = q;
    cert["n"] = rec->n;
    cert["mapping"] = rec->certificate.mapping;
    cert["verified"] = true;
    out["certificate"] = std::move(cert);
    emit(out);
    return kExitOk;
}

// -------------------------------------------------------------- spectrum

int run_spectrum(int n) {
    if (n < 4 || n > 16)
        throw ParamsOutOfRange("spectrum requires 4 <= n <= 16 (exact arithmetic is cubic in n^2)");
    LayerParams p{n, 1};
    validate(p);
    Graph l = line_of(p);
    IntMatrix a = IntMatrix::adjacency(l);
    std::vector<long long> roots{-2, -1, 0, n - 2, n - 1};
    bool annihilates = annihilation_check(a, roots);
    auto mults = eigenvalue_multiplicities(a, roots);

    bool all_present = true;
    int mult_total = 0;
    long long trace = 0;
    long long trace_sq = 0;
    for (const auto& [lam, m] : mults) {
        if (m == 0) all_present = false;
        mult_total += m;
        trace += lam * m;
        trace_sq += lam * lam * m;
    }
    bool complete = mult_total == l.order();
    bool trace_ok = trace == 0;
    bool trace_sq_ok = trace_sq == 2 * static_cast<long long>(l.size());

    json out;
    out["schema"] = kSchema;
    out["kind"] = "spectrum";
    out["n"] = n;
    out["order"] = l.order();
    out["roots"] = roots;
    out["annihilates"] = annihilates;
    json mj;
    for (const auto& [lam, m] : mults) mj[std::to_string(lam)] = m;
    out["multiplicities"] = std::move(mj);
    out["all_present"] = all_present;
    out["multiplicity_total"] = mult_total;
    out["complete"] = complete;
    out["trace_identity"] = trace_ok;
    out["trace_square_identity"] = trace_sq_ok;
    emit(out);

    if (!(annihilates && all_present && complete && trace_ok && trace_sq_ok)) {
        std::cerr << "spectral checks failed for n=" << n << "\n";
        return kExitVerification;
    }
    return kExitOk;
}

// -------------------------------------------------------------- hamilton

int run_hamilton(int n, int k) {
    LayerParams p{n, k};
    validate(p);
    json out;
    out["schema"] = kSchema;
    out["kind"] = "hamilton";
    out["n"] = n;
    out["k"] = k;
    if (n % 2 == 0 || k % 2 == 0) {
        // Some vertex degree (n-k or k+1) is odd, so there is no Euler
        // circuit to translate; Hamiltonicity of the line graph is an open
        // conjecture for these parameters.
        out["status"] = "conjectured, not certified";
        out["note"] =
            "Hamiltonicity of the line graph is only certified via Euler circuits, "
            "which require both n and k odd.";
        emit(out);
        return kExitOk;
    }
    Graph b = build_b(p);
    std::vector<int> circuit = euler_circuit(b);
    std::vector<int> cycle = hamiltonian_cycle_of_line_graph(b);
    LineGraphResult l = line_graph(b);
    bool validated = validate_cycle(l.graph, cycle);

    out["status"] = "certified";
    out["edge_count"] = b.size();
    out["circuit_length"] = circuit.size();
    json cert;
    cert["schema"] = kSchema;
    cert["kind"] = "hamilton-cycle";
    cert["n"] = n;
    cert["k"] = k;
    json labels = json::array();
    for (int v : cycle) labels.push_back(l.graph.label(v));
    cert["cycle"] = std::move(labels);
    cert["verified"] = validated;
    out["certificate"] = std::move(cert);
    emit(out);
    if (!validated) {
        std::cerr << "derived cycle failed validation\n";
        return kExitVerification;
    }
    return kExitOk;
}

// ---------------------------------------------------------- divisibility

int run_divisibility(int k) {
    DivisibilityCheck c = middle_binomial_mod4(k);
    json out;
    out["schema"] = kSchema;
    out["kind"] = "divisibility";
    out["k"] = k;
    out["binomial"] = c.value.str();
    out["remainder_mod_4"] = c.remainder_mod_4;
    out["multiple_of_4"] = c.multiple_of_4;
    emit(out);
    return kExitOk;
}

// ---------------------------------------------------------- fixed-vertex

int run_fixed_vertex(int n, int k, const std::string& theta_text) {
    LayerParams p{n, k};
    validate(p);
    Permutation theta = Permutation::from_cycles(theta_text, n);
    FixedVertexResult res = fixed_vertex_for_involution(theta, p);

    bool fixes_u = theta.apply_to_mask(res.u.mask) == res.u.mask;
    bool fixes_w = theta.apply_to_mask(res.w.mask) == res.w.mask;
    bool nested = (res.u.mask & res.w.mask) == res.u.mask &&
                  std::popcount(res.w.mask ^ res.u.mask) == 1;
    bool verified = fixes_u && fixes_w && nested;

    json out;
    out["schema"] = kSchema;
    out["kind"] = "fixed-vertex";
    out["n"] = n;
    out["k"] = k;
    out["theta"] = theta.cycle_string();
    out["transpositions"] = res.transpositions;
    out["fixed_count"] = res.fixed_count;
    out["u"] = subset_label(res.u.mask);
    out["w"] = subset_label(res.w.mask);
    out["extra_element"] = res.extra_element;
    out["line_vertex"] = subset_label(res.u.mask) + "|" + subset_label(res.w.mask);
    out["verified"] = verified;
    emit(out);
    if (!verified) {
        std::cerr << "constructed vertex is not fixed by theta\n";
        return kExitVerification;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify

int verify_regular_subgroup(const json& cert, json& report) {
    int n = cert.at("n").get<int>();
    int k = cert.at("k").get<int>();
    bool line = cert.value("line", true);
    LayerParams p{n, k};
    validate(p);
    Graph g = line ? line_of(p) : build_b(p);
    report["n"] = n;
    report["k"] = k;
    report["line"] = line;

    std::vector<Permutation> elements;
    for (const auto& item : cert.at("elements"))
        elements.push_back(Permutation::from_cycles(item.get<std::string>(), g.order()));

    bool ok = static_cast<int>(elements.size()) == g.order() &&
              cert.at("order").get<int>() == g.order();
    for (const auto& perm : elements)
        if (!is_automorphism(g, perm)) ok = false;
    if (ok) {
        try {
            FiniteGroup group = FiniteGroup::from_permutations(elements);
            if (group.order() != g.order()) ok = false;
            // regular action: one orbit, and only the identity fixes a point
            if (orbit_size(0, elements, g.order()) !=
                static_cast<std::uint64_t>(g.order()))
                ok = false;
            for (const auto& perm : elements)
                if (!perm.is_identity() && perm.fixed_points() != 0) ok = false;
        } catch (const InvalidGroup&) {
            ok = false;
        }
    }
    report["verified"] = ok;
    return ok ? kExitOk : kExitVerification;
}

int verify_iso(const json& cert, json& report) {
    long long q = cert.at("q").get<long long>();
    int n = cert.at("n").get<int>();
    report["q"] = q;
    report["n"] = n;
    auto [prime, power] = prime_power_split(q);
    SemidirectCayley sc = field_semidirect_cayley(find_irreducible(prime, power));
    Graph source = cayley_graph(sc.group, sc.connection);
    Graph target = line_of(LayerParams{n, 1});
    IsoCertificate iso{cert.at("mapping").get<std::vector<int>>()};
    bool ok = verify_isomorphism(source, target, iso);
    report["verified"] = ok;
    return ok ? kExitOk : kExitVerification;
}

int verify_hamilton_cycle(const json& cert, json& report) {
    int n = cert.at("n").get<int>();
    int k = cert.at("k").get<int>();
    LayerParams p{n, k};
    validate(p);
    report["n"] = n;
    report["k"] = k;
    LineGraphResult l = line_graph(build_b(p));
    std::map<std::string, int> by_label;
    for (int v = 0; v < l.graph.order(); ++v) by_label[l.graph.label(v)] = v;
    std::vector<int> cycle;
    bool ok = true;
    for (const auto& item : cert.at("cycle")) {
        auto it = by_label.find(item.get<std::string>());
        if (it == by_label.end()) {
            ok = false;
            break;
        }
        cycle.push_back(it->second);
    }
    ok = ok && validate_cycle(l.graph, cycle);
    report["verified"] = ok;
    return ok ? kExitOk : kExitVerification;
}

int run_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParamsOutOfRange("cannot open certificate file: " + path);
    json doc = json::parse(in);  // parse errors propagate as invalid input
    if (doc.is_object() && doc.contains("certificate")) doc = doc.at("certificate");
    if (!doc.is_object() || !doc.contains("kind"))
        throw ParamsOutOfRange("certificate file has no recognizable kind");
    std::string kind = doc.at("kind").get<std::string>();

    json report;
    report["schema"] = kSchema;
    report["kind"] = "verify";
    report["certificate_kind"] = kind;
    int code;
    try {
        if (kind == "regular-subgroup")
            code = verify_regular_subgroup(doc, report);
        else if (kind == "iso")
            code = verify_iso(doc, report);
        else if (kind == "hamilton-cycle")
            code = verify_hamilton_cycle(doc, report);
        else
            throw ParamsOutOfRange("unknown certificate kind: " + kind);
    } catch (const json::exception&) {
        throw BadCertificate("certificate is missing required fields");
    } catch (const BudgetExceeded&) {
        throw;
    } catch (const ParamsOutOfRange&) {
        throw;
    } catch (const Error& e) {
        throw BadCertificate(std::string("certificate failed to re-verify: ") + e.what());
    }
    emit(report);
    if (code != kExitOk) std::cerr << "certificate failed re-verification\n";
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "layerline: builds the two-layer subset-containment graphs B(n,k) and their "
        "line graphs, and runs certificate-emitting structural checks on them"};
    app.require_subcommand(1);

    int n = 0, k = 0;
    bool line = false;
    std::string format = "json";
    long long q = 0;
    std::string theta_text;
    std::string cert_path;

    auto* build = app.add_subcommand("build", "emit B(n,k) or its line graph");
    build->add_option("--n", n, "ground-set size")->required();
    build->add_option("--k", k, "lower layer size")->required();
    build->add_flag("--line", line, "emit the line graph instead of the base graph");
    build->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"graph6", "dot", "json"}))
        ->capture_default_str();

    auto* props = app.add_subcommand("props", "structural properties of B(n,k)");
    props->add_option("--n", n, "ground-set size")->required();
    props->add_option("--k", k, "lower layer size")->required();

    auto* aut = app.add_subcommand(
        "aut", "automorphism group order and generators, checked against the "
               "predicted order (n!, doubled when n = 2k+1)");
    aut->add_option("--n", n, "ground-set size")->required();
    aut->add_option("--k", k, "lower layer size")->required();
    aut->add_flag("--line", line, "act on the line graph instead");

    auto* cayley_check = app.add_subcommand(
        "cayley-check", "decide whether L(B(n,k)) is a Cayley graph by exhaustive "
                        "regular-subgroup search");
    cayley_check->add_option("--n", n, "ground-set size")->required();
    cayley_check->add_option("--k", k, "lower layer size")->required();

    auto* cayley_build = app.add_subcommand(
        "cayley-build", "build the field-based Cayley graph on q(q-1) vertices and "
                        "recognize it as L(B(q,1))");
    cayley_build->add_option("--q", q, "prime power, 4 <= q <= 32")->required();

    auto* spectrum = app.add_subcommand(
        "spectrum", "exact integer spectrum report for L(B(n,1))");
    spectrum->add_option("--n", n, "ground-set size (4..16)")->required();

    auto* hamilton = app.add_subcommand(
        "hamilton", "Hamiltonian cycle of L(B(n,k)) from an Euler circuit of B(n,k) "
                    "(certified when n and k are both odd)");
    hamilton->add_option("--n", n, "ground-set size")->required();
    hamilton->add_option("--k", k, "lower layer size")->required();

    auto* divisibility = app.add_subcommand(
        "divisibility", "report C(2k+1,k) mod 4 for even k (a multiple of 4 exactly "
                        "when k is not a power of 2)");
    divisibility->add_option("--k", k, "even integer > 2")->required();

    auto* fixed_vertex = app.add_subcommand(
        "fixed-vertex", "construct a line vertex of L(B(2k+1,k)) fixed by a given "
                        "involution (k even)");
    fixed_vertex->add_option("--n", n, "ground-set size, must equal 2k+1")->required();
    fixed_vertex->add_option("--k", k, "lower layer size, even")->required();
    fixed_vertex
        ->add_option("--theta", theta_text,
                     "involution in 1-based cycle notation, e.g. \"(1 2)(3 4)\"")
        ->required();

    auto* verify = app.add_subcommand("verify",
                                      "re-verify a stored certificate bit-exactly");
    verify->add_option("--certificate", cert_path, "path to a certificate JSON file")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParams;
    }

    try {
        if (build->parsed()) return run_build(n, k, line, format);
        if (props->parsed()) return run_props(n, k);
        if (aut->parsed()) return run_aut(n, k, line);
        if (cayley_check->parsed()) return run_cayley_check(n, k);
        if (cayley_build->parsed()) return run_cayley_build(q);
        if (spectrum->parsed()) return run_spectrum(n);
        if (hamilton->parsed()) return run_hamilton(n, k);
        if (divisibility->parsed()) return run_divisibility(k);
        if (fixed_vertex->parsed()) return run_fixed_vertex(n, k, theta_text);
        if (verify->parsed()) return run_verify(cert_path);
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const BadCertificate& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitParams;
    } catch (const std::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitParams;
    }
    return kExitParams;
}
