// fh: batch front end for the factorization homology toolkit.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "fh/checks/suites.hpp"
#include "fh/cyclo/cyclo.hpp"
#include "fh/enrich/category.hpp"
#include "fh/facthom/disk.hpp"
#include "fh/facthom/hochschild.hpp"
#include "fh/facthom/trace.hpp"
#include "fh/fincat/json.hpp"
#include "fh/manifold/graph.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
    std::string verb;
    std::string category, algebra, manifold, suite = "fincat";
    std::string backend;
    std::string degrees = "2,3";
    std::string out = "json";
    std::string cache;
    int max_degree = 4;
    int negative = -1;
    unsigned seed = 1;
};

struct Failure {
    int status;
    json body;
};

[[noreturn]] void fail_validation(const fh::ValidationReport& r, const std::string& input)
{
    throw Failure{1, {{"error", "validation"}, {"input", input}, {"violations", r.violations}}};
}

[[noreturn]] void fail_usage(const std::string& message)
{
    throw Failure{1, {{"error", "usage"}, {"message", message}}};
}

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Failure{2, {{"error", "schema"}, {"input", path}, {"message", "cannot open file"}}};
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Failure{2, {{"error", "schema"}, {"input", path}, {"message", e.what()}}};
    }
}

template <class F>
auto parse_schema(const std::string& path, F&& f)
{
    json doc = read_json(path);
    try {
        return f(doc);
    } catch (const fh::SchemaError& e) {
        throw Failure{2, {{"error", "schema"}, {"input", path}, {"message", e.what()}}};
    }
}

fh::enrich::SetEnrichedCategory load_category(const std::string& path)
{
    auto [table, core_names] = parse_schema(path, [](const json& doc) {
        auto t = fh::fincat::category_table_from_json(doc);
        std::vector<std::string> core;
        if (doc.contains("core")) {
            if (!doc["core"].is_array())
                throw fh::SchemaError("core must be a list of morphism names");
            for (const auto& n : doc["core"]) {
                if (!n.is_string())
                    throw fh::SchemaError("core must be a list of morphism names");
                core.push_back(n.get<std::string>());
            }
        }
        return std::pair{t, core};
    });
    auto report = fh::fincat::validate_category(table);
    if (!report.ok())
        fail_validation(report, path);
    fh::enrich::SetEnrichedCategory c{fh::fincat::FinCategory::from_table(table), {}};
    for (const auto& n : core_names) {
        auto m = c.cat.find_morphism(n);
        if (!m) {
            report.add("core morphism " + n + " is not declared");
            continue;
        }
        c.core.push_back(*m);
    }
    if (report.ok())
        report = fh::enrich::validate_enriched_cat(c);
    if (!report.ok())
        fail_validation(report, path);
    return c;
}

fh::linalg::Ring parse_backend(const std::string& text)
{
    try {
        return fh::linalg::parse_ring(text);
    } catch (const std::invalid_argument& e) {
        fail_usage(std::string("bad --backend: ") + e.what());
    }
}

fh::enrich::LinearCategory load_linear(const Options& o)
{
    if (!o.algebra.empty()) {
        auto c = parse_schema(o.algebra, [](const json& doc) { return fh::enrich::linear_category_from_json(doc); });
        auto report = fh::enrich::validate_enriched_cat(c);
        if (!report.ok())
            fail_validation(report, o.algebra);
        if (!o.backend.empty() && o.backend != "set") {
            try {
                c = fh::enrich::change_ring(c, parse_backend(o.backend));
            } catch (const std::domain_error& e) {
                fail_validation(fh::ValidationReport{{e.what()}}, o.algebra);
            }
        }
        return c;
    }
    if (!o.category.empty()) {
        auto c = load_category(o.category);
        if (c.cat.truncation())
            fail_validation(fh::ValidationReport{{"a truncated category has no linearization"}}, o.category);
        return fh::enrich::linearize(c.cat, parse_backend(o.backend.empty() ? "Q" : o.backend));
    }
    fail_usage("needs --algebra or --category");
}

std::vector<int> parse_degrees(const std::string& text)
{
    std::vector<int> out;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            std::size_t used = 0;
            int r = std::stoi(part, &used);
            if (used != part.size() || r < 1)
                throw std::invalid_argument(part);
            out.push_back(r);
        } catch (const std::exception&) {
            fail_usage("bad --degrees entry '" + part + "'");
        }
    }
    if (out.empty())
        fail_usage("--degrees is empty");
    return out;
}

json homology_result(const Options& o, const std::string& kind)
{
    if (o.backend == "set")
        fail_usage(o.verb + " needs a linear backend");
    if (o.max_degree < 0)
        fail_usage("--max-degree must be non-negative");
    auto c = load_linear(o);
    json r = {{"verb", o.verb}, {"ring", fh::linalg::to_string(c.ring())}};
    if (kind == "hh") {
        r["groups"] = fh::facthom::to_json(fh::facthom::hochschild_homology(c, o.max_degree));
    } else if (o.negative >= 0) {
        auto n = fh::facthom::negative_cyclic(c, o.max_degree, o.negative);
        r["theory"] = "negative";
        r["truncation"] = n.truncation;
        r["groups"] = fh::facthom::to_json(n.groups);
    } else {
        r["groups"] = fh::facthom::to_json(fh::facthom::cyclic_homology(c, o.max_degree));
    }
    return r;
}

json set_category_result(const Options& o)
{
    if (o.category.empty())
        fail_usage(o.verb + " needs --category");
    auto c = load_category(o.category);
    auto table = fh::facthom::thh_set_pi0(c.cat);
    json r = {{"verb", o.verb}};
    if (o.verb == "thh-set") {
        r.update(fh::facthom::to_json(table, c.cat));
        r["count"] = table.classes.size();
    } else if (o.verb == "tc0") {
        r.update(fh::cyclo::to_json(fh::cyclo::tc0(c.cat, table, parse_degrees(o.degrees)), c.cat, table));
    } else {
        r.update(fh::cyclo::trace_to_json(fh::cyclo::trace0(c.cat, table), c.cat, table));
    }
    return r;
}

json facthom_result(const Options& o)
{
    if (o.manifold.empty())
        fail_usage("facthom needs --manifold");
    auto m = parse_schema(o.manifold, [](const json& doc) { return fh::manifold::manifold_from_json(doc); });
    auto report = fh::manifold::validate_manifold(m);
    if (!report.ok())
        fail_validation(report, o.manifold);
    json r = {{"verb", "facthom"}};
    const bool set_backend = o.backend == "set" || (o.backend.empty() && o.algebra.empty());
    if (set_backend) {
        if (o.category.empty())
            fail_usage("the set backend needs --category");
        auto c = load_category(o.category);
        auto count = fh::facthom::facthom_set_pi0(m, c);
        r["backend"] = "set";
        r["graph_part"] = count.graph_part;
        r["circle_parts"] = count.circle_parts;
        r["total"] = count.total;
        return r;
    }
    auto c = load_linear(o);
    auto disk_part = m;
    disk_part.circles = 0;
    auto graph = fh::facthom::enr_facthom_disk(disk_part, c);
    r["backend"] = fh::linalg::to_string(c.ring());
    r["graph_part"] = {{"dim", graph.dim()}, {"basis", graph.basis}};
    json circles = json::array();
    if (m.circles > 0) {
        auto groups = fh::facthom::to_json(fh::facthom::hochschild_homology(c, o.max_degree));
        for (int k = 0; k < m.circles; ++k)
            circles.push_back(groups);
    }
    r["circle_parts"] = circles;
    return r;
}

json check_result(const Options& o)
{
    try {
        auto res = fh::checks::run_suite(o.suite, o.seed);
        json r = fh::checks::to_json(res);
        r["verb"] = "check";
        return r;
    } catch (const std::invalid_argument& e) {
        fail_usage(e.what());
    }
}

json compute(const Options& o)
{
    if (o.verb == "hh" || o.verb == "hc")
        return homology_result(o, o.verb);
    if (o.verb == "thh-set" || o.verb == "tc0" || o.verb == "trace")
        return set_category_result(o);
    if (o.verb == "facthom")
        return facthom_result(o);
    return check_result(o);
}

std::string render_table(const json& r)
{
    std::ostringstream out;
    if (r.contains("groups")) {
        out << "ring " << r["ring"].get<std::string>() << "\n";
        if (r.contains("truncation"))
            out << "truncation " << r["truncation"] << "\n";
        out << "degree\trank\ttorsion\n";
        for (const auto& g : r["groups"]) {
            out << g["degree"] << "\t" << g["rank"] << "\t";
            for (std::size_t i = 0; i < g["torsion"].size(); ++i)
                out << (i ? "," : "") << g["torsion"][i].dump();
            out << "\n";
        }
        return out.str();
    }
    const std::string verb = r["verb"];
    if (verb == "thh-set") {
        out << "classes " << r["count"] << "\n";
        for (const auto& c : r["classes"]) {
            out << c["rep"].get<std::string>() << ":";
            for (const auto& m : c["members"])
                out << " " << m.get<std::string>();
            out << "\n";
        }
    } else if (verb == "tc0") {
        out << "model " << r["model"].get<std::string>() << "\ndegrees";
        for (const auto& d : r["degrees"])
            out << " " << d;
        out << "\ntc0";
        for (const auto& c : r["tc0"])
            out << " " << c.get<std::string>();
        out << "\nundetermined";
        for (const auto& c : r["undetermined"])
            out << " " << c.get<std::string>();
        out << "\n";
    } else if (verb == "trace") {
        out << "model " << r["model"].get<std::string>() << "\n";
        for (const auto& [x, c] : r["trace"].items())
            out << x << "\t" << c.get<std::string>() << "\n";
    } else if (verb == "facthom") {
        out << "backend " << r["backend"].get<std::string>() << "\n";
        if (r["backend"] == "set") {
            out << "graph_part " << r["graph_part"] << "\ncircle_parts";
            for (const auto& c : r["circle_parts"])
                out << " " << c;
            out << "\ntotal " << r["total"] << "\n";
        } else {
            out << "graph_part " << r["graph_part"]["dim"] << "\n";
            for (const auto& b : r["graph_part"]["basis"])
                out << "  " << b.get<std::string>() << "\n";
            for (std::size_t k = 0; k < r["circle_parts"].size(); ++k) {
                out << "circle " << k << "\ndegree\trank\ttorsion\n";
                for (const auto& g : r["circle_parts"][k]) {
                    out << g["degree"] << "\t" << g["rank"] << "\t";
                    for (std::size_t i = 0; i < g["torsion"].size(); ++i)
                        out << (i ? "," : "") << g["torsion"][i].dump();
                    out << "\n";
                }
            }
        }
    } else {
        out << "suite " << r["suite"].get<std::string>() << "\npassed " << r["passed"] << "\nfailed " << r["failed"]
            << "\n";
        for (const auto& f : r["failures"])
            out << "  " << f.get<std::string>() << "\n";
    }
    return out.str();
}

std::string sha256_hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i)
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return out.str();
}

std::string file_bytes(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Content hash of everything the result depends on.
std::string cache_key(const Options& o)
{
    json k = {{"verb", o.verb},     {"backend", o.backend}, {"max_degree", o.max_degree},
              {"negative", o.negative}, {"degrees", o.degrees}, {"suite", o.suite}, {"seed", o.seed}};
    for (auto [name, path] : {std::pair{"category", &o.category}, {"algebra", &o.algebra}, {"manifold", &o.manifold}})
        k[name] = path->empty() ? "" : sha256_hex(file_bytes(*path));
    return sha256_hex(k.dump());
}

std::optional<json> cache_load(const fs::path& file)
{
    std::ifstream in(file);
    if (!in)
        return std::nullopt;
    try {
        return json::parse(in);
    } catch (const json::parse_error&) {
        return std::nullopt;
    }
}

void cache_store(const fs::path& dir, const fs::path& file, const json& r)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    fs::path tmp = dir / (file.filename().string() + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp);
        if (!out)
            return;
        out << r.dump();
    }
    fs::rename(tmp, file, ec);
    if (ec)
        fs::remove(tmp, ec);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact factorization homology of 1-manifolds"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--backend", o.backend, "set|Z|Q|Fp:<p>");
        sub->add_option("--out", o.out, "json|table")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--cache", o.cache, "cache directory (default $FH_CACHE)");
    };
    auto* hh = app.add_subcommand("hh", "Hochschild homology");
    auto* hc = app.add_subcommand("hc", "cyclic homology");
    for (auto* sub : {hh, hc}) {
        sub->add_option("--algebra", o.algebra, "linear category JSON");
        sub->add_option("--category", o.category, "finite category JSON, linearized over the backend");
        sub->add_option("--max-degree", o.max_degree, "top degree")->default_val(4);
        add_common(sub);
    }
    hc->add_option("--negative", o.negative, "negative cyclic homology with columns i <= N");
    for (const char* name : {"thh-set", "tc0", "trace"}) {
        auto* sub = app.add_subcommand(name, std::string(name) + " on a finite category");
        sub->add_option("--category", o.category, "finite category JSON")->required();
        add_common(sub);
        if (std::string(name) == "tc0")
            sub->add_option("--degrees", o.degrees, "comma separated repetition degrees");
    }
    auto* fhm = app.add_subcommand("facthom", "factorization homology of a graph manifold");
    fhm->add_option("--manifold", o.manifold, "graph manifold JSON")->required();
    fhm->add_option("--category", o.category, "finite category JSON (set backend)");
    fhm->add_option("--algebra", o.algebra, "linear category JSON");
    fhm->add_option("--max-degree", o.max_degree, "top Hochschild degree for circle parts")->default_val(4);
    add_common(fhm);
    auto* check = app.add_subcommand("check", "run an invariant suite");
    check->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(fh::checks::suite_names()));
    check->add_option("--seed", o.seed, "random seed");
    check->add_option("--out", o.out, "json|table")->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    o.verb = app.get_subcommands().front()->get_name();
    if (o.cache.empty()) {
        if (const char* env = std::getenv("FH_CACHE"))
            o.cache = env;
    }

    json result;
    try {
        std::optional<fs::path> slot;
        if (!o.cache.empty() && o.verb != "check")
            slot = fs::path(o.cache) / (cache_key(o) + ".json");
        std::optional<json> hit = slot ? cache_load(*slot) : std::nullopt;
        if (hit) {
            result = *hit;
        } else {
            result = compute(o);
            if (slot)
                cache_store(o.cache, *slot, result);
        }
    } catch (const Failure& f) {
        std::cout << f.body.dump(2) << "\n";
        return f.status;
    } catch (const fh::ValidationError& e) {
        std::cout << json{{"error", "validation"}, {"violations", e.report().violations}}.dump(2) << "\n";
        return 1;
    } catch (const fh::SchemaError& e) {
        std::cout << json{{"error", "schema"}, {"message", e.what()}}.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << json{{"error", "validation"}, {"violations", {e.what()}}}.dump(2) << "\n";
        return 1;
    }

    if (o.out == "table")
        std::cout << render_table(result);
    else
        std::cout << result.dump(2) << "\n";
    if (o.verb == "check")
        return result["failed"].get<std::size_t>() == 0 ? 0 : 1;
    return 0;
}
