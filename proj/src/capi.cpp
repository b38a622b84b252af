#include <listcolor/listcolor.h>

#include <listcolor/coloring.hpp>
#include <listcolor/graph.hpp>
#include <listcolor/search.hpp>
#include <listcolor/ulc.hpp>

#include <json.hpp>

#include <cstring>
#include <memory>
#include <string>

using json = nlohmann::json;
using namespace listcolor;

struct lc_graph {
    Graph g;
};

namespace {

thread_local std::string last_error;

class CallError : public std::runtime_error {
public:
    CallError(lc_status status, const std::string & what) : std::runtime_error(what), status(status) {}
    lc_status status;
};

char * dup_string(const std::string & s)
{
    char * out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char ** out, const json & doc)
{
    if (out)
        *out = dup_string(doc.dump());
}

template <class F>
lc_status guarded(F && body)
{
    last_error.clear();
    try {
        return body();
    }
    catch (const CallError & e) {
        last_error = e.what();
        return e.status;
    }
    catch (const BudgetExceeded & e) {
        last_error = e.what();
        return LC_ERR_BUDGET;
    }
    catch (const NotUniquelyColorable & e) {
        last_error = e.what();
        return LC_NEGATIVE;
    }
    catch (const ParseError & e) {
        last_error = e.what();
        return LC_ERR_INPUT;
    }
    catch (const json::exception & e) {
        last_error = std::string("malformed JSON: ") + e.what();
        return LC_ERR_INPUT;
    }
    catch (const std::invalid_argument & e) {
        last_error = e.what();
        return LC_ERR_INPUT;
    }
    catch (const std::out_of_range & e) {
        last_error = e.what();
        return LC_ERR_INPUT;
    }
    catch (const std::exception & e) {
        last_error = e.what();
        return LC_ERR_INTERNAL;
    }
    catch (...) {
        last_error = "unknown failure";
        return LC_ERR_INTERNAL;
    }
}

void need(const void * p, const char * name)
{
    if (!p)
        throw CallError(LC_ERR_INPUT, std::string("null pointer: ") + name);
}

lc_options resolve(const lc_options * options)
{
    lc_options o;
    lc_options_init(&o);
    if (options)
        o = *options;
    if (o.jobs < 1)
        throw CallError(LC_ERR_INPUT, "jobs must be positive");
    if (o.budget_nodes == 0)
        throw CallError(LC_ERR_INPUT, "node budget must be positive");
    return o;
}

std::unique_ptr<Budget> make_budget(const lc_options & o)
{
    std::optional<std::chrono::duration<double>> limit;
    if (o.budget_seconds > 0)
        limit = std::chrono::duration<double>(o.budget_seconds);
    return std::make_unique<Budget>(o.budget_nodes, limit);
}

json lists_json(const ListAssignment & lists)
{
    json out = json::object();
    for (Vertex v = 0; v < lists.order(); ++v)
        out[std::to_string(v)] = lists[v].colors();
    return out;
}

json coloring_json(const Coloring & c)
{
    json out = json::object();
    for (Vertex v = 0; v < c.order(); ++v)
        out[std::to_string(v)] = c[v];
    return out;
}

json edges_json(const Graph & g)
{
    json out = json::array();
    for (auto [a, b] : g.edges())
        out.push_back({a, b});
    return out;
}

json blocks_json(const std::vector<BlockReport> & blocks)
{
    json out = json::array();
    for (const BlockReport & b : blocks) {
        json entry{{"vertices", b.vertices.members()}, {"class", to_string(b.cls.tag)}};
        if (b.cls.tag == BlockTag::CompleteBipartite)
            entry["parts"] = {b.cls.part_a, b.cls.part_b};
        if (b.cls.tag == BlockTag::Cycle)
            entry["cycle"] = b.cls.cycle_order;
        out.push_back(std::move(entry));
    }
    return out;
}

json trace_json(const std::vector<TraceStep> & trace)
{
    json out = json::array();
    for (const TraceStep & s : trace)
        out.push_back({{"kind", s.kind}, {"detail", s.detail}, {"vertices", s.vertices}});
    return out;
}

json chi_json(const ChiUResult & r)
{
    json out{{"k", r.k}, {"t_min", r.t_min}, {"t_lo", r.t_lo}, {"t_hi", r.t_hi}, {"exhaustive", r.exhaustive}};
    out["witness"] = r.witness ? lists_json(*r.witness) : json(nullptr);
    return out;
}

ListAssignment parse_lists(const json & doc, int n)
{
    const json & src = doc.contains("lists") ? doc.at("lists") : doc;
    if (!src.is_object())
        throw CallError(LC_ERR_INPUT, "lists must be a JSON object keyed by vertex id");
    std::vector<ColorSet> lists(n);
    std::vector<char> seen(n, 0);
    for (auto it = src.begin(); it != src.end(); ++it) {
        const std::string & key = it.key();
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(key, &used);
        }
        catch (const std::exception &) {
            used = 0;
        }
        if (used != key.size() || v < 0 || v >= n)
            throw CallError(LC_ERR_INPUT, "list key '" + key + "' is not a vertex of the graph");
        if (!it.value().is_array())
            throw CallError(LC_ERR_INPUT, "list of vertex " + key + " is not an array");
        for (const json & c : it.value()) {
            if (!c.is_number_integer() || c.get<int>() < 1 || c.get<int>() > kMaxColor)
                throw CallError(LC_ERR_INPUT, "vertex " + key + " has a colour outside 1..63");
            lists[v].insert(c.get<int>());
        }
        if (lists[v].empty())
            throw CallError(LC_ERR_INPUT, "vertex " + key + " has an empty list");
        seen[v] = 1;
    }
    for (Vertex v = 0; v < n; ++v)
        if (!seen[v])
            throw CallError(LC_ERR_INPUT, "no list for vertex " + std::to_string(v));
    return ListAssignment(std::move(lists));
}

}

extern "C" {

void lc_options_init(lc_options * options)
{
    if (!options)
        return;
    options->budget_nodes = Budget::kDefaultNodes;
    options->budget_seconds = 60.0;
    options->jobs = 1;
    options->seed_case = "auto";
    options->single_pass_closure = 0;
}

const char * lc_last_error(void)
{
    return last_error.c_str();
}

void lc_string_free(char * s)
{
    std::free(s);
}

const char * lc_version(void)
{
    return "0.1.0";
}

lc_status lc_graph_from_graph6(const char * text, lc_graph ** out)
{
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        *out = new lc_graph{parse_graph6(text)};
        return LC_OK;
    });
}

lc_status lc_graph_from_edges(int n, const int * edges, size_t edge_count, lc_graph ** out)
{
    return guarded([&] {
        need(out, "out");
        if (edge_count)
            need(edges, "edges");
        std::vector<Edge> list;
        for (size_t i = 0; i < edge_count; ++i)
            list.push_back({edges[2 * i], edges[2 * i + 1]});
        *out = new lc_graph{Graph(n, list)};
        return LC_OK;
    });
}

void lc_graph_free(lc_graph * g)
{
    delete g;
}

int lc_graph_order(const lc_graph * g)
{
    return g ? g->g.order() : -1;
}

lc_status lc_graph_to_graph6(const lc_graph * g, char ** out)
{
    return guarded([&] {
        need(g, "graph");
        need(out, "out");
        *out = dup_string(to_graph6(g->g));
        return LC_OK;
    });
}

lc_status lc_graph_to_dot(const lc_graph * g, const char * labels_json, char ** out)
{
    return guarded([&] {
        need(g, "graph");
        need(out, "out");
        std::map<Vertex, std::string> labels;
        if (labels_json) {
            json doc = json::parse(labels_json);
            for (auto it = doc.begin(); it != doc.end(); ++it) {
                int v = std::stoi(it.key());
                if (v < 0 || v >= g->g.order())
                    throw CallError(LC_ERR_INPUT, "label key '" + it.key() + "' is not a vertex");
                labels[v] = it.value().get<std::string>();
            }
        }
        *out = dup_string(to_dot(g->g, labels));
        return LC_OK;
    });
}

lc_status lc_decide(const lc_graph * g, const lc_options * options, char ** json_out)
{
    return guarded([&] {
        need(g, "graph");
        resolve(options);
        emit(json_out, {{"u2lc", is_u2lc(g->g)}, {"blocks", blocks_json(block_report(g->g))}});
        return LC_OK;
    });
}

lc_status lc_synthesize(const lc_graph * g, const lc_options * options, char ** json_out)
{
    return guarded([&] {
        need(g, "graph");
        lc_options o = resolve(options);
        auto seed_case = parse_seed_case(o.seed_case ? o.seed_case : "auto");
        if (!seed_case)
            throw CallError(LC_ERR_INPUT, std::string("unknown seed case '") + o.seed_case + "'");
        auto budget = make_budget(o);
        SynthesisOutcome outcome;
        try {
            outcome = synthesize(g->g, {budget.get(), *seed_case, o.jobs});
        }
        catch (const SynthesisBudgetExceeded & e) {
            emit(json_out, {{"error", "budget"}, {"message", e.what()}, {"trace", trace_json(e.trace)}});
            throw CallError(LC_ERR_BUDGET, e.what());
        }
        if (auto * negative = std::get_if<NotU2LC>(&outcome)) {
            emit(json_out, {{"u2lc", false}, {"blocks", blocks_json(negative->blocks)}});
            last_error = "graph is not uniquely 2-list colourable";
            return LC_NEGATIVE;
        }
        const auto & cert = std::get<SynthesisCertificate>(outcome);
        emit(json_out, {{"n", g->g.order()}, {"edges", edges_json(g->g)}, {"t", cert.t},
                           {"lists", lists_json(cert.assignment)}, {"coloring", coloring_json(cert.unique_coloring)},
                           {"verified", cert.verified}, {"route", cert.route}, {"disconnected", cert.disconnected},
                           {"trace", trace_json(cert.trace)}});
        return LC_OK;
    });
}

lc_status lc_verify(const lc_graph * g, const char * lists_text, const lc_options * options, char ** json_out)
{
    return guarded([&] {
        need(g, "graph");
        need(lists_text, "lists_json");
        lc_options o = resolve(options);
        ListAssignment lists = parse_lists(json::parse(lists_text), g->g.order());
        auto budget = make_budget(o);
        auto found = list_colorings(g->g, lists, 2, budget.get());
        json doc;
        if (found.size() >= 2)
            doc["colorings_found"] = "2+";
        else
            doc["colorings_found"] = found.size();
        doc["unique"] = found.size() == 1;
        doc["coloring"] = found.size() == 1 ? coloring_json(found[0]) : json(nullptr);
        emit(json_out, doc);
        return LC_OK;
    });
}

lc_status lc_chi_u(const lc_graph * g, int k_min, int k_max, int t_max, const lc_options * options, char ** json_out)
{
    return guarded([&] {
        need(g, "graph");
        lc_options o = resolve(options);
        if (k_min < 1 || k_max < k_min)
            throw CallError(LC_ERR_INPUT, "k range must satisfy 1 <= k_min <= k_max");
        if (t_max < 1 || t_max > kMaxColor)
            throw CallError(LC_ERR_INPUT, "t_max must be in 1..63");
        auto budget = make_budget(o);
        json per_k = json::array();
        int best = 0;
        bool exhaustive = true;
        for (int k = k_min; k <= k_max; ++k) {
            ChiUResult r = chi_u_k(g->g, k, t_max, {budget.get(), o.jobs});
            best = std::max(best, r.t_min);
            exhaustive = exhaustive && r.exhaustive;
            per_k.push_back(chi_json(r));
        }
        emit(json_out, {{"per_k", per_k}, {"max_t_min", best}, {"lower_bound", true}});
        if (!exhaustive) {
            last_error = "budget exhausted before every t was decided";
            return LC_ERR_BUDGET;
        }
        return LC_OK;
    });
}

lc_status lc_uniquely(const lc_graph * g, int k, int t, const lc_options * options, char ** json_out)
{
    return guarded([&] {
        need(g, "graph");
        lc_options o = resolve(options);
        if (k < 1 || t < 1 || t > kMaxColor)
            throw CallError(LC_ERR_INPUT, "need k >= 1 and t in 1..63");
        auto budget = make_budget(o);
        UniquenessProbe p = is_uniquely_k_t(g->g, k, t, {budget.get(), o.jobs});
        json doc{{"k", k}, {"t", t}, {"unique", p.witness.has_value()}, {"exhausted", p.exhausted},
            {"assignments", p.assignments}};
        doc["witness"] = p.witness ? lists_json(*p.witness) : json(nullptr);
        doc["coloring"] = p.coloring ? coloring_json(*p.coloring) : json(nullptr);
        emit(json_out, doc);
        if (p.witness)
            return LC_OK;
        if (!p.exhausted) {
            last_error = "budget exhausted before the assignment space was covered";
            return LC_ERR_BUDGET;
        }
        return LC_NEGATIVE;
    });
}

lc_status lc_conjecture(const lc_graph * g, int k_max, const lc_options * options, char ** json_out)
{
    return guarded([&] {
        need(g, "graph");
        lc_options o = resolve(options);
        if (k_max < 1)
            throw CallError(LC_ERR_INPUT, "k_max must be positive");
        auto budget = make_budget(o);
        ConjectureReport r = conjecture_check(g->g, k_max, {budget.get(), o.jobs});
        json per_k = json::array(), probes = json::array();
        for (const auto & x : r.per_k)
            per_k.push_back(chi_json(x));
        for (const auto & x : r.probes)
            probes.push_back(chi_json(x));
        emit(json_out, {{"delta_plus_1", r.delta_plus_1}, {"per_k", per_k}, {"probes", probes},
                           {"max_t_min", r.max_t_min}, {"complete_or_odd_cycle", r.complete_or_odd_cycle},
                           {"status", to_string(r.status)}});
        return LC_OK;
    });
}

lc_status lc_closure(const lc_graph * g, int t, const lc_options * options, char ** json_out)
{
    return guarded([&] {
        need(g, "graph");
        lc_options o = resolve(options);
        auto budget = make_budget(o);
        if (t <= 0)
            t = std::max(3, chromatic_number(g->g, budget.get()));
        if (t > kMaxColor)
            throw CallError(LC_ERR_INPUT, "t must be at most 63");
        Graph star = gstar_closure(g->g, t, o.single_pass_closure ? ClosureMode::SinglePass : ClosureMode::FixedPoint,
            budget.get());
        json added = json::array();
        for (auto [a, b] : star.edges())
            if (!g->g.adjacent(a, b))
                added.push_back({a, b});
        emit(json_out, {{"t", t}, {"mode", o.single_pass_closure ? "single-pass" : "fixed-point"}, {"added", added},
                           {"n", star.order()}, {"edges", edges_json(star)}, {"graph6", to_graph6(star)}});
        return LC_OK;
    });
}

}
