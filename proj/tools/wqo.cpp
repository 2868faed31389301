// wqo: command-line front end for graph generation, searches and the
// verification suites. Graphs are read and written in the text format of
// graph_io; "-" reads standard input.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "wqo/canonical.hpp"
#include "wqo/composition.hpp"
#include "wqo/error.hpp"
#include "wqo/families.hpp"
#include "wqo/graph_io.hpp"
#include "wqo/letter.hpp"
#include "wqo/matcher.hpp"
#include "wqo/perm.hpp"
#include "wqo/structure.hpp"
#include "wqo/suites.hpp"

namespace {

using namespace wqo;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;

ParsedGraph load(const std::string& path)
{
    if (path != "-") return read_graph_file(path);
    std::string text(std::istreambuf_iterator<char>(std::cin), {});
    return parse_graph(text);
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty())
        std::cout << text;
    else
        write_text_file(out, text);
}

int int_param(const std::vector<std::string>& params, std::size_t i, const std::string& family)
{
    if (i >= params.size()) throw InputError("family '" + family + "' needs " + std::to_string(i + 1) + " parameter(s)");
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(params[i], &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != params[i].size()) throw InputError("'" + params[i] + "' is not an integer");
    return v;
}

std::string generate(const std::string& family, const std::vector<std::string>& params)
{
    auto p = [&](std::size_t i) { return int_param(params, i, family); };
    std::optional<BipartiteGraph> bg;
    Graph g;
    if (family == "path") g = path(p(0));
    else if (family == "cycle") g = cycle(p(0));
    else if (family == "complete") g = complete(p(0));
    else if (family == "kab") bg = complete_bipartite(p(0), p(1));
    else if (family == "sun4") g = sun4();
    else if (family == "sun1") g = sun1();
    else if (family == "s123") g = s123();
    else if (family == "h") g = h_antichain(p(0));
    else if (family == "two-p3") g = two_p3();
    else if (family == "p-tilde") bg = BipartiteGraph{p_tilde(p(0)), odd_even_parts(p(0))};
    else if (family == "t-graph") bg = t_graph(star_perm_t(p(0))).bipartite();
    else if (family == "s-graph") bg = s_graph(star_perm_s(p(0)), star_witness_s(p(0))).bipartite();
    else if (family == "grid") bg = universal_grid(p(0), p(1));
    else if (family == "perm-graph") {
        if (params.empty()) throw InputError("perm-graph needs a permutation such as \"(2,1)\"");
        g = permutation_graph(parse_permutation(params[0]));
    } else
        throw InputError("unknown family '" + family + "'");
    if (bg) return serialize_graph(bg->graph, bg->parts);
    return serialize_graph(g, find_bipartition(g));
}

std::string map_text(const Embedding& e)
{
    std::string out;
    for (Vertex v = 1; v <= e.size(); ++v) out += (v > 1 ? " " : "") + std::to_string(v) + ":" + std::to_string(e(v));
    return out;
}

std::string join_ids(const std::vector<Vertex>& ids)
{
    std::string out;
    for (Vertex v : ids) out += " " + std::to_string(v);
    return out;
}

std::string sanitize(std::string s)
{
    for (char& c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-') c = '_';
    return s;
}

/// Prints the per-case lines and the JSON summary; returns the exit code.
int report(const std::vector<SuiteReport>& reports, const std::string& witness_dir)
{
    nlohmann::json summary;
    summary["suites"] = nlohmann::json::array();
    int fails = 0;
    int open = 0;
    int passes = 0;
    if (!witness_dir.empty()) std::filesystem::create_directories(witness_dir);
    for (const auto& r : reports) {
        nlohmann::json js{{"suite", r.suite}, {"seconds", r.seconds}, {"cases", nlohmann::json::array()}};
        for (const auto& c : r.cases) {
            std::cout << verdict_word(c.verdict) << ' ' << r.suite << '/' << c.name;
            nlohmann::json jc{{"name", c.name}, {"verdict", verdict_word(c.verdict)}, {"detail", c.detail}};
            if (c.witness) {
                if (!witness_dir.empty()) {
                    const auto file = (std::filesystem::path(witness_dir) / (sanitize(r.suite + "__" + c.name) + ".txt")).string();
                    write_text_file(file, c.witness->text);
                    std::cout << ' ' << file;
                    jc["witness_file"] = file;
                } else {
                    jc["witness"] = c.witness->text;
                }
            }
            std::cout << '\n';
            js["cases"].push_back(std::move(jc));
        }
        js["pass"] = r.count(Verdict::pass);
        js["fail"] = r.count(Verdict::fail);
        js["undecided"] = r.count(Verdict::undecided);
        passes += r.count(Verdict::pass);
        fails += r.count(Verdict::fail);
        open += r.count(Verdict::undecided);
        summary["suites"].push_back(std::move(js));
    }
    const int code = fails > 0 ? kExitFail : open > 0 ? kExitUndecided : 0;
    summary["pass"] = passes;
    summary["fail"] = fails;
    summary["undecided"] = open;
    summary["exit_code"] = code;
    std::cout << summary.dump(2) << '\n';
    return code;
}

int run(int argc, char** argv)
{
    CLI::App app{"Graph families, induced-subgraph search and verification suites"};
    app.require_subcommand(1);
    std::uint64_t budget = kDefaultStepBudget;
    unsigned workers = 1;
    app.add_option("--budget", budget, "Step budget per search")->capture_default_str();
    app.add_option("--workers", workers, "Worker threads")->capture_default_str()->check(CLI::Range(1U, 256U));
    int code = 0;
    auto search = [&] { return SearchOptions{budget, workers}; };

    // gen
    auto* gen = app.add_subcommand("gen", "Write a named graph");
    std::string family;
    std::vector<std::string> gen_params;
    std::string out;
    gen->add_option("family", family, "path cycle complete kab sun4 sun1 s123 h two-p3 p-tilde t-graph s-graph grid perm-graph")->required();
    gen->add_option("params", gen_params, "Family parameters");
    gen->add_option("--out", out, "Output file");
    gen->callback([&] { emit(generate(family, gen_params), out); });

    // perm
    auto* perm = app.add_subcommand("perm", "Permutation operations");
    perm->require_subcommand(1);
    std::string pa;
    std::string pb;
    int pn = 0;
    auto* compose_cmd = perm->add_subcommand("compose", "outer o inner");
    compose_cmd->add_option("outer", pa)->required();
    compose_cmd->add_option("inner", pb)->required();
    compose_cmd->callback([&] { std::cout << to_string(compose(parse_permutation(pa), parse_permutation(pb))) << '\n'; });
    auto* inverse_cmd = perm->add_subcommand("inverse", "Inverse permutation");
    inverse_cmd->add_option("perm", pa)->required();
    inverse_cmd->callback([&] { std::cout << to_string(inverse(parse_permutation(pa))) << '\n'; });
    auto* contains_cmd = perm->add_subcommand("contains", "Whether host contains pattern");
    contains_cmd->add_option("host", pa)->required();
    contains_cmd->add_option("pattern", pb)->required();
    contains_cmd->callback([&] { std::cout << (contains_pattern(parse_permutation(pa), parse_permutation(pb)) ? "true" : "false") << '\n'; });
    auto* convex_cmd = perm->add_subcommand("convex", "Convexity test");
    convex_cmd->add_option("perm", pa)->required();
    convex_cmd->callback([&] { std::cout << (is_convex(parse_permutation(pa)) ? "true" : "false") << '\n'; });
    const std::pair<const char*, Permutation (*)(int)> named[] = {
        {"star-t", star_perm_t}, {"star-s", star_perm_s}, {"rho", rho_star}, {"mu", mu_star}};
    for (const auto& [name, fn] : named) {
        auto* sub = perm->add_subcommand(name, std::string("Family member ") + name);
        sub->add_option("n", pn)->required();
        sub->callback([&pn, fn = fn] { std::cout << to_string(fn(pn)) << '\n'; });
    }

    // check free
    auto* check = app.add_subcommand("check", "Property checks");
    check->require_subcommand(1);
    auto* free_cmd = check->add_subcommand("free", "Whether G has none of the forbidden induced subgraphs");
    std::string g_file;
    std::vector<std::string> forbid;
    free_cmd->add_option("graph", g_file)->required();
    free_cmd->add_option("--forbid", forbid, "Forbidden graph files")->required();
    free_cmd->callback([&] {
        const Graph g = load(g_file).graph;
        std::vector<Graph> hs;
        for (const auto& f : forbid) hs.push_back(load(f).graph);
        const auto r = is_free(g, hs, search());
        if (r.verdict == Freeness::free) {
            std::cout << "free\n";
        } else if (r.verdict == Freeness::undecided) {
            std::cout << "undecided " << forbid[r.forbidden_index] << '\n';
            code = kExitUndecided;
        } else {
            std::cout << "contains " << forbid[r.forbidden_index] << " map " << map_text(*r.witness) << '\n';
            code = kExitFail;
        }
    });

    // embed
    auto* embed = app.add_subcommand("embed", "Induced embedding of H into G");
    std::string h_file;
    embed->add_option("pattern", h_file)->required();
    embed->add_option("host", g_file)->required();
    embed->callback([&] {
        const auto r = find_induced_embedding(load(h_file).graph, load(g_file).graph, search());
        std::cout << "steps " << r.steps << '\n';
        if (r.found()) {
            std::cout << "found " << map_text(*r.embedding) << '\n';
        } else if (r.status == SearchStatus::none) {
            std::cout << "none\n";
            code = kExitFail;
        } else {
            std::cout << "undecided\n";
            code = kExitUndecided;
        }
    });

    // paths
    auto* paths = app.add_subcommand("paths", "Whether G has a path subgraph on K vertices");
    int k = 0;
    paths->add_option("graph", g_file)->required();
    paths->add_option("k", k)->required()->check(CLI::PositiveNumber);
    paths->callback([&] { std::cout << (has_path_subgraph(load(g_file).graph, k) ? "true" : "false") << '\n'; });

    // decompose
    auto* dec = app.add_subcommand("decompose", "Decomposition tree over single vertices");
    dec->add_option("graph", g_file)->required();
    dec->callback([&] {
        const auto pg = load(g_file);
        auto parts = pg.parts ? pg.parts : find_bipartition(pg.graph);
        if (!parts) throw InputError("graph is not bipartite");
        const auto r = decompose(pg.graph, *parts);
        if (r.status == DecomposeStatus::decomposed) {
            std::cout << serialize_tree(*r.tree);
        } else if (r.status == DecomposeStatus::not_decomposable) {
            std::cout << "none\n";
            code = kExitFail;
        } else {
            std::cout << "undecided: more than " << kDecomposeMaxOrder << " vertices\n";
            code = kExitUndecided;
        }
    });

    // letter grid
    auto* letter = app.add_subcommand("letter", "Letter representations");
    letter->require_subcommand(1);
    auto* grid = letter->add_subcommand("grid", "Representation of the K x M grid");
    int rows = 0;
    int cols = 0;
    std::string verify_file;
    grid->add_option("k", rows)->required()->check(CLI::PositiveNumber);
    grid->add_option("m", cols)->required()->check(CLI::PositiveNumber);
    grid->add_option("--verify", verify_file, "Check the representation against this graph");
    grid->callback([&] {
        const auto rep = letter_representation_grid(rows, cols);
        std::cout << serialize_letter(rep);
        if (!verify_file.empty()) {
            const bool ok = verify_letter(rep, load(verify_file).graph);
            std::cout << (ok ? "consistent\n" : "inconsistent\n");
            if (!ok) code = kExitFail;
        }
    });

    // biconvex
    auto* bic = app.add_subcommand("biconvex", "Search both parts for interval orders");
    bic->add_option("graph", g_file)->required();
    bic->callback([&] {
        const auto pg = load(g_file);
        auto parts = pg.parts ? pg.parts : find_bipartition(pg.graph);
        if (!parts) throw InputError("graph is not bipartite");
        const auto r = find_biconvex_order(pg.graph, *parts);
        if (r) {
            std::cout << "order-a" << join_ids(r->order_a) << "\norder-b" << join_ids(r->order_b) << '\n';
        } else {
            std::cout << "none\n";
            code = kExitFail;
        }
    });

    // verify / antichain
    SuiteConfig config;
    std::string witness_dir;
    auto add_suite_options = [&](CLI::App* sub) {
        sub->add_option("--witness-dir", witness_dir, "Directory for failure witnesses");
        sub->add_option("--seed", config.seed, "Seed for the random trees")->capture_default_str();
        sub->add_option("--lemma-key-nmax", config.lemma_key_nmax, "Largest order for lemma-key (9..12)")->capture_default_str();
        sub->add_option("--lemma-reduction-nmax", config.lemma_reduction_nmax)->capture_default_str();
        sub->add_option("--closure-nmax", config.closure_nmax)->capture_default_str();
        sub->add_option("--t-pair", config.t_pair, "T-family indices")->delimiter(',')->expected(2, 8);
        sub->add_option("--s-pair", config.s_pair, "S-family indices")->delimiter(',')->expected(2, 8);
    };
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.push_back("all");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_choices));
    add_suite_options(verify);
    verify->callback([&] {
        config.workers = workers;
        config.step_budget = budget;
        code = report(suite == "all" ? run_all_suites(config) : std::vector<SuiteReport>{run_suite(suite, config)}, witness_dir);
    });

    auto* anti = app.add_subcommand("antichain", "Pairwise incomparability of family members");
    std::vector<int> indices;
    anti->add_option("family", family)->required()->check(CLI::IsMember({"T", "S", "H", "permT", "permS"}));
    anti->add_option("indices", indices)->required()->delimiter(',');
    add_suite_options(anti);
    anti->callback([&] {
        config.workers = workers;
        config.step_budget = budget;
        code = report({antichain_check(family, indices, config)}, witness_dir);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const wqo::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
    } catch (const wqo::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}
