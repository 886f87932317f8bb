#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dmt/cancel.hpp"
#include "dmt/dot.hpp"
#include "dmt/harness.hpp"
#include "dmt/induce.hpp"
#include "dmt/invert.hpp"
#include "dmt/json_io.hpp"
#include "dmt/realize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitNotRealizable = 3;
constexpr int kExitCounterexample = 4;

bool use_color() {
    const char* v = std::getenv("DMT_COLOR");
    return v && std::string(v) == "1";
}

void diag(const std::string& kind, const std::string& msg) {
    if (use_color()) {
        const char* color = kind == "error" ? "\033[31m" : "\033[33m";
        std::cerr << color << kind << "\033[0m: " << msg << "\n";
    } else {
        std::cerr << kind << ": " << msg << "\n";
    }
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-")
        std::cout << content;
    else
        dmt::write_file(out_path, content);
}

int cmd_validate(const std::string& in) {
    std::string text = dmt::read_file(in);
    if (dmt::detect_doc_kind(text) == dmt::DocKind::Graph) {
        auto [g, f] = dmt::graph_doc_from_string(text);
        dmt::ValidationReport rep = dmt::validate_dmf(g, f);
        for (const auto& m : rep.malformed) diag("malformed", m);
        for (const auto& v : rep.violations) diag("violation", v);
        if (!rep.malformed.empty()) return kExitMalformed;
        if (!rep.violations.empty()) return kExitValidation;
        std::cout << "ok\n";
        return kExitOk;
    }
    auto [t, l] = dmt::tree_doc_from_string(text);
    dmt::GmtValidation rep = dmt::validate_gmt(t);
    for (const auto& m : rep.malformed) diag("malformed", m);
    for (const auto& v : rep.violations) diag("violation", v);
    if (!rep.malformed.empty()) return kExitMalformed;
    if (!rep.violations.empty()) return kExitValidation;
    if (!l.empty() && !dmt::is_morse_labeling(t, l)) {
        diag("violation", "labels do not form a Morse labeling");
        return kExitValidation;
    }
    std::cout << "ok\n";
    return kExitOk;
}

int cmd_equiv(const std::string& a_path, const std::string& b_path,
              const std::string& relation) {
    auto load_tree = [&](const std::string& path) {
        std::string text = dmt::read_file(path);
        if (dmt::detect_doc_kind(text) == dmt::DocKind::Graph) {
            auto [g, f] = dmt::graph_doc_from_string(text);
            dmt::InducedTree it = dmt::induce_merge_tree(g, f);
            return std::make_pair(it.tree, it.labeling);
        }
        auto [t, l] = dmt::tree_doc_from_string(text);
        if (relation != "merge" && l.empty())
            throw dmt::MalformedInput("relation " + relation + " needs labeled trees");
        return std::make_pair(t, l);
    };
    auto [t1, l1] = load_tree(a_path);
    auto [t2, l2] = load_tree(b_path);
    bool eq;
    if (relation == "cm")
        eq = dmt::iso_gml(t1, l1, t2, l2);
    else if (relation == "order")
        eq = dmt::order_equivalent(t1, l1, t2, l2);
    else
        eq = dmt::merge_equivalent(dmt::underlying_tree(t1), dmt::underlying_tree(t2));
    std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
    return eq ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete Morse functions on multigraphs and generalized merge trees"};
    app.require_subcommand(1);

    std::string in, out, second;
    std::string relation = "cm";
    std::string policy = "skip";
    bool planar = false;
    int max_vertices = 4, max_edges = 6, max_tree_nodes = 9;
    unsigned seed = 0;
    std::string dump_dir;

    CLI::App* validate = app.add_subcommand("validate", "validate a graph+dMf or tree document");
    validate->add_option("-i,--input", in, "input JSON")->required();

    CLI::App* induce = app.add_subcommand("induce", "induced generalized merge tree of a dMf");
    induce->add_option("-i,--input", in, "graph+dMf JSON")->required();
    induce->add_option("-o,--output", out, "output tree JSON (default stdout)");

    CLI::App* invert = app.add_subcommand("invert", "inverse construction Phi");
    invert->add_option("-i,--input", in, "labeled tree JSON")->required();
    invert->add_option("-o,--output", out, "output graph JSON (default stdout)");

    CLI::App* realize = app.add_subcommand("realize", "realize a gMT by a simple graph");
    realize->add_option("-i,--input", in, "tree JSON (labels ignored)")->required();
    realize->add_option("-o,--output", out, "output graph JSON (default stdout)");
    realize->add_flag("--planar", planar, "planar realization");

    CLI::App* cancel = app.add_subcommand("cancel", "merge-tree guided cancellation");
    cancel->add_option("-i,--input", in, "graph with critical dMf JSON")->required();
    cancel->add_option("-o,--output", out, "outcome JSON (default stdout)");
    cancel->add_option("--policy", policy, "skip|rewire|flowline")
        ->check(CLI::IsMember({"skip", "rewire", "flowline"}));

    CLI::App* equiv = app.add_subcommand("equiv", "compare two documents");
    equiv->add_option("a", in, "first document")->required();
    equiv->add_option("b", second, "second document")->required();
    equiv->add_option("--relation", relation, "cm|order|merge")
        ->check(CLI::IsMember({"cm", "order", "merge"}));

    CLI::App* verify = app.add_subcommand("verify", "exhaustive round-trip property suite");
    verify->add_option("--max-vertices", max_vertices, "graph vertex bound");
    verify->add_option("--max-edges", max_edges, "graph edge bound");
    verify->add_option("--max-tree-nodes", max_tree_nodes, "tree node bound");
    verify->add_option("--seed", seed, "seed for sampled checks");
    verify->add_option("--dump", dump_dir, "directory for counterexample JSON files");

    CLI::App* export_dot = app.add_subcommand("export-dot", "render a document as DOT");
    export_dot->add_option("-i,--input", in, "input JSON")->required();
    export_dot->add_option("-o,--output", out, "output .dot (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(in);

        if (induce->parsed()) {
            auto [g, f] = dmt::graph_doc_from_string(dmt::read_file(in));
            dmt::ValidationReport rep = dmt::validate_dmf(g, f);
            if (!rep.malformed.empty()) {
                for (const auto& m : rep.malformed) diag("malformed", m);
                return kExitMalformed;
            }
            if (!rep.violations.empty()) {
                for (const auto& v : rep.violations) diag("violation", v);
                return kExitValidation;
            }
            emit(out, dmt::induce_doc_to_string(dmt::induce_merge_tree(g, f)));
            return kExitOk;
        }

        if (invert->parsed()) {
            auto [t, l] = dmt::tree_doc_from_string(dmt::read_file(in));
            if (l.empty()) {
                diag("error", "invert needs a labeled tree");
                return kExitValidation;
            }
            emit(out, dmt::phi_doc_to_string(dmt::phi(t, l)));
            return kExitOk;
        }

        if (realize->parsed()) {
            auto [t, l] = dmt::tree_doc_from_string(dmt::read_file(in));
            dmt::RealizeMode mode =
                planar ? dmt::RealizeMode::Planar : dmt::RealizeMode::Simple;
            dmt::RealizabilityReport rep = dmt::check_realizable(t, mode);
            if (!rep.realizable()) {
                for (const auto& v : rep.violations)
                    diag("violation", "cycle node " + v.cycle_node + ": |C(T(c_u))|=" +
                                          std::to_string(v.cycles) + " must be < " +
                                          std::to_string(v.bound) + " (leaves=" +
                                          std::to_string(v.leaves) + ")");
                return kExitNotRealizable;
            }
            dmt::PhiResult r = planar ? dmt::realize_planar(t) : dmt::realize_simple(t);
            emit(out, dmt::phi_doc_to_string(r));
            return kExitOk;
        }

        if (cancel->parsed()) {
            auto [g, f] = dmt::graph_doc_from_string(dmt::read_file(in));
            dmt::CancelPolicy p = policy == "skip"      ? dmt::CancelPolicy::Skip
                                  : policy == "rewire" ? dmt::CancelPolicy::Rewire
                                                       : dmt::CancelPolicy::FlowLine;
            emit(out, dmt::cancel_doc_to_string(dmt::cancel(g, f, p)));
            return kExitOk;
        }

        if (equiv->parsed()) return cmd_equiv(in, second, relation);

        if (verify->parsed()) {
            dmt::EnumerationBudget budget{max_vertices, max_edges, max_tree_nodes, seed};
            dmt::SuiteReport rep = dmt::roundtrip_suite(budget);
            std::cout << "graphs: " << rep.graphs << "\n"
                      << "dMfs: " << rep.dmfs << "\n"
                      << "tree shapes: " << rep.shapes << "\n"
                      << "Morse orders: " << rep.orders << "\n"
                      << "order pairs: " << rep.order_pairs << "\n"
                      << "realized trees: " << rep.realized << "\n";
            if (rep.ok()) {
                std::cout << "all properties hold\n";
                return kExitOk;
            }
            int i = 0;
            for (const auto& ce : rep.counterexamples) {
                if (dump_dir.empty()) {
                    std::cerr << ce << "\n";
                } else {
                    std::string path =
                        dump_dir + "/counterexample_" + std::to_string(i++) + ".json";
                    dmt::write_file(path, ce + "\n");
                    std::cerr << "counterexample written to " << path << "\n";
                }
            }
            diag("error", std::to_string(rep.counterexamples.size()) + " counterexamples");
            return kExitCounterexample;
        }

        if (export_dot->parsed()) {
            std::string text = dmt::read_file(in);
            if (dmt::detect_doc_kind(text) == dmt::DocKind::Graph) {
                auto [g, f] = dmt::graph_doc_from_string(text);
                emit(out, dmt::graph_to_dot(g, f));
            } else {
                auto [t, l] = dmt::tree_doc_from_string(text);
                emit(out, dmt::tree_to_dot(t, l.empty() ? nullptr : &l));
            }
            return kExitOk;
        }
    } catch (const dmt::MalformedInput& e) {
        diag("malformed", e.what());
        return kExitMalformed;
    } catch (const dmt::NotRealizable& e) {
        diag("error", e.what());
        return kExitNotRealizable;
    } catch (const std::invalid_argument& e) {
        diag("error", e.what());
        return kExitValidation;
    } catch (const std::exception& e) {
        diag("error", e.what());
        return kExitValidation;
    }
    return kExitOk;
}
