#include "mfb/corpus.hpp"
#include "mfb/errors.hpp"
#include "mfb/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw mfb::Error("cannot write " + path);
    f << content;
}

mfb::PlumbingGraph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw mfb::SchemaError("cannot open graph file " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (std::exception& e) {
        throw mfb::SchemaError(std::string("json parse error: ") + e.what());
    }
    return mfb::plumbing_from_json(j);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"plumbing graphs of Milnor fibre boundaries of finitely determined map germs"};
    app.require_subcommand(1);

    std::string input_path, dot_path, json_path, report_path;
    bool do_normalize = false;

    auto* compute = app.add_subcommand("compute", "full surgery pipeline: input -> boundary graph");
    compute->add_option("--input", input_path, "input specification (json)")->required();
    compute->add_flag("--normalize", do_normalize, "apply plumbing calculus before output");
    compute->add_option("--dot", dot_path, "write the boundary graph in DOT format");
    compute->add_option("--json", json_path, "write the boundary graph in JSON format");
    compute->add_option("--report", report_path, "write the text report");

    std::string rdot_path, rjson_path;
    auto* resolve_cmd = app.add_subcommand("resolve", "embedded resolution of the double curve");
    resolve_cmd->add_option("--input", input_path, "input specification (json)")->required();
    resolve_cmd->add_option("--json", rjson_path, "write the resolution graph in JSON format");
    resolve_cmd->add_option("--dot", rdot_path, "write the resolution graph in DOT format");

    std::string h1_path;
    auto* h1_cmd = app.add_subcommand("h1", "first homology of a plumbed 3-manifold");
    h1_cmd->add_option("graph", h1_path, "plumbing graph (json)")->required();

    std::string cmp_a, cmp_b;
    bool up_to_calculus = false;
    auto* cmp_cmd = app.add_subcommand("compare", "compare two plumbing graphs");
    cmp_cmd->add_option("a", cmp_a, "first graph (json)")->required();
    cmp_cmd->add_option("b", cmp_b, "second graph (json)")->required();
    cmp_cmd->add_flag("--up-to-calculus", up_to_calculus,
                      "normalize with the plumbing calculus before comparing");

    auto* corpus_cmd = app.add_subcommand("corpus", "built-in verification corpus");
    corpus_cmd->require_subcommand(1);
    auto* verify_cmd = corpus_cmd->add_subcommand("verify", "run every fixture and property suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compute) {
            mfb::InputSpec in = mfb::load_input_file(input_path);
            mfb::ComputeOutput out = mfb::run_compute(in);
            mfb::PlumbingGraph graph = out.boundary.graph;
            if (do_normalize) graph = mfb::normalize(graph);
            if (!json_path.empty())
                write_file(json_path, mfb::canonical_graph_text(mfb::plumbing_to_json(graph)));
            if (!dot_path.empty()) write_file(dot_path, mfb::plumbing_to_dot(graph));
            if (!report_path.empty()) write_file(report_path, out.report);
            if (json_path.empty() && dot_path.empty() && report_path.empty())
                std::cout << out.report;
            else
                std::cout << "ok\n";
            return 0;
        }
        if (*resolve_cmd) {
            mfb::InputSpec in = mfb::load_input_file(input_path);
            mfb::ResolutionGraph g = mfb::run_resolve(in);
            std::string text = mfb::canonical_graph_text(mfb::resolution_to_json(g));
            if (!rjson_path.empty()) write_file(rjson_path, text);
            if (!rdot_path.empty()) write_file(rdot_path, mfb::resolution_to_dot(g));
            if (rjson_path.empty() && rdot_path.empty()) std::cout << text;
            return 0;
        }
        if (*h1_cmd) {
            mfb::PlumbingGraph g = load_graph(h1_path);
            std::cout << mfb::h1(g).str() << "\n";
            return 0;
        }
        if (*cmp_cmd) {
            mfb::PlumbingGraph a = load_graph(cmp_a);
            mfb::PlumbingGraph b = load_graph(cmp_b);
            if (mfb::isomorphic(a, b)) {
                std::cout << "ISOMORPHIC\n";
            } else if (up_to_calculus &&
                       mfb::isomorphic(mfb::normalize(a), mfb::normalize(b))) {
                std::cout << "EQUIVALENT\n";
            } else {
                std::cout << "DIFFERENT\n";
            }
            return 0;
        }
        if (*verify_cmd) {
            auto results = mfb::corpus::run_all_checks();
            bool all = true;
            for (auto& r : results) {
                std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
                if (!r.pass) std::cout << "  [" << r.detail << "]";
                std::cout << "\n";
                all = all && r.pass;
            }
            std::cout << (all ? "corpus verify: all checks passed\n"
                              : "corpus verify: FAILURES\n");
            return all ? 0 : 1;
        }
    } catch (mfb::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (mfb::StageError& e) {
        std::cerr << "computation error at stage '" << e.stage_name << "': " << e.what() << "\n";
        return 3;
    } catch (std::exception& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
