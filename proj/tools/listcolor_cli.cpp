#include <listcolor/listcolor.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <condition_variable>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kBudget = 3 };

struct Config {
    std::string graph6;
    std::string input;
    std::string lists;
    int k = 0, t = 0, k_max = 0, t_max = 0;
    std::uint64_t budget_nodes = 100'000'000;
    double budget_seconds = 60;
    int jobs = 1;
    std::string format = "json";
    std::string mode = "decide";
    std::string seed_case = "auto";
    bool single_pass = false;
};

struct Failure {
    int code;
    std::string message;
};

int exit_for(lc_status s)
{
    switch (s) {
    case LC_OK: return kOk;
    case LC_NEGATIVE: return kNegative;
    case LC_ERR_BUDGET: return kBudget;
    default: return kInput;
    }
}

struct Graph {
    lc_graph * g = nullptr;
    Graph() = default;
    Graph(const Graph &) = delete;
    Graph & operator=(const Graph &) = delete;
    ~Graph() { lc_graph_free(g); }
};

struct Text {
    char * s = nullptr;
    Text() = default;
    Text(const Text &) = delete;
    Text & operator=(const Text &) = delete;
    ~Text() { lc_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

std::string trim(std::string s)
{
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::string read_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Failure{kInput, "cannot read " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> graph_lines(const std::string & path)
{
    std::istringstream in(read_file(path));
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) {
        line = trim(line);
        if (!line.empty())
            out.push_back(line);
    }
    return out;
}

lc_options options_of(const Config & cfg)
{
    lc_options o;
    lc_options_init(&o);
    o.budget_nodes = cfg.budget_nodes;
    o.budget_seconds = cfg.budget_seconds;
    o.jobs = cfg.jobs;
    o.seed_case = cfg.seed_case.c_str();
    o.single_pass_closure = cfg.single_pass ? 1 : 0;
    return o;
}

void check(lc_status s)
{
    if (s != LC_OK)
        throw Failure{exit_for(s), lc_last_error()};
}

void load_graph(Graph & out, const std::string & g6)
{
    check(lc_graph_from_graph6(g6.c_str(), &out.g));
}

/// The one graph named by --graph or --input; with neither, the n/edges
/// fields of the lists document.
void single_graph(const Config & cfg, Graph & out, const json * doc = nullptr)
{
    if (!cfg.graph6.empty() && !cfg.input.empty())
        throw Failure{kInput, "give either --graph or --input, not both"};
    if (!cfg.graph6.empty())
        return load_graph(out, cfg.graph6);
    if (!cfg.input.empty()) {
        auto lines = graph_lines(cfg.input);
        if (lines.size() != 1)
            throw Failure{kInput, cfg.input + " holds " + std::to_string(lines.size())
                    + " graphs; use the scan command for catalogs"};
        return load_graph(out, lines[0]);
    }
    if (doc && doc->contains("n") && doc->contains("edges")) {
        std::vector<int> flat;
        for (const auto & e : doc->at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw Failure{kInput, "edges must be [u, v] pairs"};
            flat.push_back(e[0].get<int>());
            flat.push_back(e[1].get<int>());
        }
        check(lc_graph_from_edges(doc->at("n").get<int>(), flat.data(), flat.size() / 2, &out.g));
        return;
    }
    throw Failure{kInput, "no graph given (use --graph or --input)"};
}

std::string list_text(const json & colors)
{
    std::string s = "{";
    for (std::size_t i = 0; i < colors.size(); ++i)
        s += (i ? "," : "") + std::to_string(colors[i].get<int>());
    return s + "}";
}

std::string vertices_text(const json & vs)
{
    std::string s;
    for (const auto & v : vs)
        s += (s.empty() ? "" : " ") + std::to_string(v.get<int>());
    return s;
}

void print_blocks(const json & doc)
{
    for (const auto & b : doc["blocks"])
        std::cout << "  block [" << vertices_text(b["vertices"]) << "]: " << b["class"].get<std::string>() << "\n";
}

std::string dot_of(const Graph & g, const json * labels)
{
    Text dot;
    std::string label_text = labels ? labels->dump() : "";
    check(lc_graph_to_dot(g.g, labels ? label_text.c_str() : nullptr, &dot.s));
    return dot.str();
}

int cmd_decide(const Config & cfg)
{
    Graph g;
    single_graph(cfg, g);
    lc_options o = options_of(cfg);
    Text out;
    check(lc_decide(g.g, &o, &out.s));
    json doc = json::parse(out.str());
    if (cfg.format == "text") {
        std::cout << "u2lc: " << (doc["u2lc"].get<bool>() ? "yes" : "no") << "\n";
        print_blocks(doc);
    }
    else if (cfg.format == "dot")
        std::cout << dot_of(g, nullptr);
    else
        std::cout << doc.dump() << "\n";
    return kOk;
}

int cmd_synthesize(const Config & cfg)
{
    Graph g;
    single_graph(cfg, g);
    lc_options o = options_of(cfg);
    Text out;
    lc_status s = lc_synthesize(g.g, &o, &out.s);
    if (s == LC_ERR_BUDGET) {
        std::cout << out.str() << "\n";
        throw Failure{kBudget, lc_last_error()};
    }
    if (s != LC_OK && s != LC_NEGATIVE)
        check(s);
    json doc = json::parse(out.str());
    if (s == LC_NEGATIVE) {
        if (cfg.format == "text") {
            std::cout << "not uniquely 2-list colourable; every block is exempt:\n";
            print_blocks(doc);
        }
        else
            std::cout << doc.dump() << "\n";
        return kNegative;
    }
    if (cfg.format == "dot") {
        json labels = json::object();
        for (auto it = doc["lists"].begin(); it != doc["lists"].end(); ++it)
            labels[it.key()] = list_text(it.value()) + " c=" + std::to_string(doc["coloring"][it.key()].get<int>());
        std::cout << dot_of(g, &labels);
    }
    else if (cfg.format == "text") {
        std::cout << "t = " << doc["t"] << ", route " << doc["route"].get<std::string>() << ", verified "
                  << (doc["verified"].get<bool>() ? "yes" : "no") << "\n";
        for (int v = 0; v < doc["n"].get<int>(); ++v) {
            std::string key = std::to_string(v);
            std::cout << "  " << v << ": " << list_text(doc["lists"][key]) << " -> " << doc["coloring"][key] << "\n";
        }
    }
    else
        std::cout << doc.dump() << "\n";
    return kOk;
}

int cmd_verify(const Config & cfg)
{
    if (cfg.lists.empty())
        throw Failure{kInput, "verify needs --lists"};
    std::string text = read_file(cfg.lists);
    json doc;
    try {
        doc = json::parse(text);
    }
    catch (const json::exception & e) {
        throw Failure{kInput, std::string("malformed lists JSON: ") + e.what()};
    }
    Graph g;
    try {
        single_graph(cfg, g, &doc);
    }
    catch (const json::exception & e) {
        throw Failure{kInput, std::string("malformed graph in lists JSON: ") + e.what()};
    }
    lc_options o = options_of(cfg);
    Text out;
    check(lc_verify(g.g, text.c_str(), &o, &out.s));
    json verdict = json::parse(out.str());
    if (cfg.format == "text") {
        std::cout << "colorings found: "
                  << (verdict["colorings_found"].is_string() ? verdict["colorings_found"].get<std::string>()
                                                              : std::to_string(verdict["colorings_found"].get<int>()))
                  << "\nunique: " << (verdict["unique"].get<bool>() ? "yes" : "no") << "\n";
    }
    else
        std::cout << verdict.dump() << "\n";
    return kOk;
}

int cmd_chi_u(const Config & cfg)
{
    Graph g;
    single_graph(cfg, g);
    lc_options o = options_of(cfg);
    Text out;
    lc_status s;
    if (cfg.k > 0 && cfg.t > 0)
        s = lc_uniquely(g.g, cfg.k, cfg.t, &o, &out.s);
    else {
        if (cfg.t_max < 1)
            throw Failure{kInput, "chi-u needs --t-max (or --k with --t)"};
        int lo = cfg.k > 0 ? cfg.k : 1, hi = cfg.k > 0 ? cfg.k : cfg.k_max;
        if (hi < 1)
            throw Failure{kInput, "chi-u needs --k-max or --k"};
        s = lc_chi_u(g.g, lo, hi, cfg.t_max, &o, &out.s);
    }
    if (out.s) {
        json doc = json::parse(out.str());
        if (cfg.format == "text" && doc.contains("per_k")) {
            std::cout << "k  t_min  range   exhaustive\n";
            for (const auto & r : doc["per_k"])
                std::cout << r["k"] << "  " << r["t_min"] << "      " << r["t_lo"] << ".." << r["t_hi"] << "   "
                          << (r["exhaustive"].get<bool>() ? "yes" : "no") << "\n";
            std::cout << "chi_u lower bound: " << doc["max_t_min"] << "\n";
        }
        else if (cfg.format == "text")
            std::cout << "uniquely (" << cfg.k << "," << cfg.t << ")-list colourable: "
                      << (doc["unique"].get<bool>() ? "yes" : "no") << "\n";
        else
            std::cout << doc.dump() << "\n";
    }
    if (s != LC_OK)
        throw Failure{exit_for(s), lc_last_error()};
    return kOk;
}

int cmd_closure(const Config & cfg)
{
    Graph g;
    single_graph(cfg, g);
    lc_options o = options_of(cfg);
    Text out;
    check(lc_closure(g.g, cfg.t, &o, &out.s));
    json doc = json::parse(out.str());
    if (cfg.format == "dot") {
        Graph star;
        load_graph(star, doc["graph6"].get<std::string>());
        std::cout << dot_of(star, nullptr);
    }
    else if (cfg.format == "text") {
        std::cout << "t = " << doc["t"] << " (" << doc["mode"].get<std::string>() << "), added " << doc["added"].size()
                  << " edge(s)\n";
        for (const auto & e : doc["added"])
            std::cout << "  " << e[0] << " -- " << e[1] << "\n";
    }
    else
        std::cout << doc.dump() << "\n";
    return kOk;
}

json scan_one(const Config & cfg, std::size_t index, const std::string & g6)
{
    json rec{{"index", index}, {"graph6", g6}};
    Graph g;
    if (lc_graph_from_graph6(g6.c_str(), &g.g) != LC_OK) {
        rec["error"] = lc_last_error();
        rec["exit"] = kInput;
        return rec;
    }
    lc_options o = options_of(cfg);
    o.jobs = 1;
    Text out;
    lc_status s;
    if (cfg.mode == "synthesize")
        s = lc_synthesize(g.g, &o, &out.s);
    else if (cfg.mode == "conjecture")
        s = lc_conjecture(g.g, cfg.k_max > 0 ? cfg.k_max : 2, &o, &out.s);
    else
        s = lc_decide(g.g, &o, &out.s);
    if (out.s)
        rec["result"] = json::parse(out.str());
    if (s != LC_OK && s != LC_NEGATIVE) {
        rec["error"] = lc_last_error();
        rec["exit"] = exit_for(s);
    }
    return rec;
}

int cmd_scan(const Config & cfg)
{
    if (cfg.input.empty())
        throw Failure{kInput, "scan needs --input"};
    if (cfg.mode != "decide" && cfg.mode != "synthesize" && cfg.mode != "conjecture")
        throw Failure{kInput, "unknown scan mode '" + cfg.mode + "'"};
    auto lines = graph_lines(cfg.input);

    std::vector<std::optional<json>> results(lines.size());
    std::mutex m;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < lines.size();) {
            json rec = scan_one(cfg, i, lines[i]);
            std::lock_guard lock(m);
            results[i] = std::move(rec);
            ready.notify_all();
        }
    };
    std::vector<std::jthread> pool;
    for (int i = 0; i < std::max(1, cfg.jobs); ++i)
        pool.emplace_back(worker);

    json counts{{"records", 0}, {"u2lc", 0}, {"not_u2lc", 0}, {"consistent", 0}, {"equality", 0},
        {"candidates", 0}, {"inconclusive", 0}, {"errors", 0}};
    auto bump = [&](const char * key) { counts[key] = counts[key].get<int>() + 1; };
    for (std::size_t i = 0; i < lines.size(); ++i) {
        json rec;
        {
            std::unique_lock lock(m);
            ready.wait(lock, [&] { return results[i].has_value(); });
            rec = std::move(*results[i]);
        }
        bump("records");
        if (rec.contains("error"))
            bump("errors");
        else if (cfg.mode == "conjecture") {
            auto status = rec["result"]["status"].get<std::string>();
            bump(status == "counterexample-candidate" ? "candidates" : status.c_str());
        }
        else if (rec["result"].contains("u2lc") && !rec["result"]["u2lc"].get<bool>())
            bump("not_u2lc");
        else
            bump("u2lc");
        std::cout << rec.dump() << "\n" << std::flush;
    }
    std::cout << json{{"summary", counts}}.dump() << "\n";
    return kOk;
}

}

int main(int argc, char ** argv)
{
    CLI::App app{"Unique list colouring: decide, synthesise and verify 2-list assignments with a unique colouring"};
    app.require_subcommand(1);
    Config cfg;

    auto common = [&](CLI::App * sub) {
        sub->add_option("--graph", cfg.graph6, "graph6 string");
        sub->add_option("--input", cfg.input, "file with graph6 lines");
        sub->add_option("--budget-nodes", cfg.budget_nodes, "backtracking node budget")->check(CLI::PositiveNumber);
        sub->add_option("--budget-seconds", cfg.budget_seconds, "wall-clock budget per graph (0 disables)")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
    };

    auto * decide = app.add_subcommand("decide", "is the graph uniquely 2-list colourable");
    common(decide);
    auto * synth = app.add_subcommand("synthesize", "build a verified (2, max{3,chi})-assignment");
    common(synth);
    synth->add_option("--seed-case", cfg.seed_case, "restrict the seed construction")
        ->check(CLI::IsMember({"auto", "triangle", "chord", "theta", "i2", "fallback"}));
    auto * verify = app.add_subcommand("verify", "count list colourings of given lists (up to 2)");
    common(verify);
    verify->add_option("--lists", cfg.lists, "certificate or lists JSON")->required();
    auto * chi = app.add_subcommand("chi-u", "least palette with a unique k-list colouring");
    common(chi);
    chi->add_option("--k", cfg.k, "single list size")->check(CLI::PositiveNumber);
    chi->add_option("--t", cfg.t, "single palette size (with --k)")->check(CLI::PositiveNumber);
    chi->add_option("--k-max", cfg.k_max, "largest list size")->check(CLI::PositiveNumber);
    chi->add_option("--t-max", cfg.t_max, "largest palette size")->check(CLI::PositiveNumber);
    auto * scan = app.add_subcommand("scan", "run a mode over every graph of a file, one JSON line each");
    common(scan);
    scan->add_option("--mode", cfg.mode, "decide, synthesize or conjecture")
        ->check(CLI::IsMember({"decide", "synthesize", "conjecture"}));
    scan->add_option("--k-max", cfg.k_max, "largest list size for conjecture mode")->check(CLI::PositiveNumber);
    auto * closure = app.add_subcommand("closure", "join every pair forced apart in all t-colourings");
    common(closure);
    closure->add_option("--t", cfg.t, "palette size (default max{3,chi})")->check(CLI::PositiveNumber);
    closure->add_flag("--single-pass-closure", cfg.single_pass, "stop after one round of additions");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (*decide)
            return cmd_decide(cfg);
        if (*synth)
            return cmd_synthesize(cfg);
        if (*verify)
            return cmd_verify(cfg);
        if (*chi)
            return cmd_chi_u(cfg);
        if (*scan)
            return cmd_scan(cfg);
        return cmd_closure(cfg);
    }
    catch (const Failure & f) {
        if (!f.message.empty())
            std::cerr << "listcolor: " << f.message << "\n";
        return f.code;
    }
    catch (const std::exception & e) {
        std::cerr << "listcolor: " << e.what() << "\n";
        return kInput;
    }
}
