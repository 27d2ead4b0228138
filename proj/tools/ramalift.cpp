// Command-line front end: generate graphs, compute matching data, build path
// trees, evaluate signing expectations, search for good signings, lift, and
// certify Ramanujan bounds. Exit codes: 0 success, 1 certification failure,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ramalift/ramalift.hpp"

namespace {

using namespace ramalift;

void emit_graph(const std::string& path, const Graph& g) {
    if (path.empty()) write_graph(std::cout, g);
    else write_graph_file(path, g);
}

void emit_lines(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
    } else {
        auto out = detail::open_for_write(path);
        out << text;
    }
}

Rat precision_from_bits(int bits) {
    if (bits < 1 || bits > 4096) throw std::invalid_argument("--prec must be in [1, 4096]");
    return Rat(Int(1), pow_int(Int(2), static_cast<unsigned>(bits)));
}

std::vector<Rat> read_rational_lines(const std::string& path) {
    auto in = detail::open_for_read(path);
    std::vector<Rat> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        try {
            out.push_back(rat_from_string(tok));
        } catch (const std::invalid_argument& e) {
            throw io_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::string certificate_summary(const Certificate& c) {
    return "verdict: " + to_string(c.verdict) + " (bound " + c.bound.kind_string() +
           (c.bound.degenerate ? ", degenerate" : "") + ")";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bipartite Ramanujan graphs via certified 2-lifts"};
    app.require_subcommand(1);
    int exit_code = 0;

    // gen ---------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a complete bipartite graph");
    std::vector<int> gen_sides;
    std::string gen_out;
    gen->add_option("--bipartite", gen_sides, "side sizes p q")->expected(2)->required();
    gen->add_option("-o,--output", gen_out, "output edge-list file (default stdout)");
    gen->callback([&] {
        emit_graph(gen_out, Graph::complete_bipartite(gen_sides[0], gen_sides[1]));
    });

    // matching ----------------------------------------------------------
    auto* matching = app.add_subcommand("matching", "matching counts and matching polynomial");
    std::string matching_graph, matching_out;
    bool matching_json = false;
    matching->add_option("graph", matching_graph, "edge-list file")->required();
    matching->add_option("-o,--output", matching_out, "output file (default stdout)");
    matching->add_flag("--json", matching_json, "emit JSON instead of text");
    matching->callback([&] {
        Graph g = read_graph_file(matching_graph);
        MatchingCounts mc = matching_counts(g);
        IntPoly mu = matching_polynomial(g);
        if (matching_json) {
            nlohmann::json j;
            j["counts"] = nlohmann::json::array();
            for (const auto& c : mc.counts) j["counts"].push_back(c.str());
            j["matching_polynomial"] = to_text(mu);
            emit_lines(matching_out, j.dump(2) + "\n");
        } else {
            std::ostringstream os;
            os << "# matching counts m_0..m_" << mc.counts.size() - 1 << "\n";
            for (size_t i = 0; i < mc.counts.size(); ++i) os << (i ? " " : "") << mc.counts[i];
            os << "\n# matching polynomial\n" << to_text(mu) << "\n";
            emit_lines(matching_out, os.str());
        }
    });

    // pathtree ----------------------------------------------------------
    auto* pathtree = app.add_subcommand("pathtree", "build the path tree from a root vertex");
    std::string pt_graph, pt_out, pt_labels;
    int pt_root = 0, pt_cap = kPathTreeCap;
    bool pt_check = false;
    pathtree->add_option("graph", pt_graph, "edge-list file")->required();
    pathtree->add_option("root", pt_root, "root vertex")->required();
    pathtree->add_option("-o,--output", pt_out, "tree edge-list file (default stdout)");
    pathtree->add_option("--labels", pt_labels, "write the path label map to this file");
    pathtree->add_option("--cap", pt_cap, "maximum tree size");
    pathtree->add_flag("--check", pt_check,
                       "also verify that the matching polynomial divides the tree spectrum");
    pathtree->callback([&] {
        Graph g = read_graph_file(pt_graph);
        PathTree t = build_path_tree(g, pt_root, pt_cap);
        emit_graph(pt_out, t.tree);
        if (!pt_labels.empty()) emit_lines(pt_labels, path_labels_to_text(t));
        if (pt_check) {
            bool ok = try_exact_div(tree_char_poly(t.tree, t.root), matching_polynomial(g))
                          .has_value();
            std::cerr << "divisible: " << (ok ? "true" : "false") << "\n";
            if (!ok) exit_code = 1;
        }
    });

    // expect ------------------------------------------------------------
    auto* expect = app.add_subcommand(
        "expect", "conditional-sum polynomial of a partial signing (or weighted expectation)");
    std::string ex_graph, ex_partial, ex_probs, ex_out;
    bool ex_oracle = false;
    expect->add_option("graph", ex_graph, "edge-list file")->required();
    expect->add_option("--partial", ex_partial, "partial signing file ('0' marks unset edges)");
    expect->add_option("--probs", ex_probs, "per-edge +1 probabilities (rationals, one per line)");
    expect->add_flag("--oracle", ex_oracle, "force the brute-force signing enumeration");
    expect->add_option("-o,--output", ex_out, "output file (default stdout)");
    expect->callback([&] {
        Graph g = read_graph_file(ex_graph);
        if (!ex_probs.empty()) {
            EdgeProbabilities p{read_rational_lines(ex_probs)};
            RatPoly e = expected_charpoly_bruteforce(g, p);
            emit_lines(ex_out, "# denominators cleared (positive scaling; roots unchanged)\n" +
                                   to_text(e.cleared_denominators()) + "\n");
            return;
        }
        PartialSigning partial = ex_partial.empty() ? PartialSigning::all_unset(g)
                                                    : read_partial_signing_file(ex_partial, g);
        IntPoly f = ex_oracle ? conditional_expectation_bruteforce(g, partial)
                              : conditional_expectation(g, partial);
        emit_lines(ex_out, to_text(f) + "\n");
    });

    // sign ----------------------------------------------------------------
    auto* sign = app.add_subcommand("sign", "find a signing with certified small largest root");
    std::string sg_graph, sg_out, sg_cert;
    int sg_prec = 32, sg_budget_edges = 40, sg_budget_vertices = 24;
    unsigned sg_seed = 0;
    bool sg_shuffled = false, sg_oracle = false;
    sign->add_option("graph", sg_graph, "edge-list file")->required();
    sign->add_option("-o,--output", sg_out, "signing output file (default stdout)");
    sign->add_option("--cert", sg_cert, "write the certificate JSON here");
    sign->add_option("--prec", sg_prec, "isolation precision 2^-BITS (default 32)");
    sign->add_option("--budget-edges", sg_budget_edges, "edge budget for the descent");
    sign->add_option("--budget-vertices", sg_budget_vertices, "vertex budget for the descent");
    sign->add_option("--shuffle", sg_seed, "shuffle the edge processing order with this seed")
        ->trigger_on_parse()
        ->each([&](const std::string&) { sg_shuffled = true; });
    sign->add_flag("--oracle", sg_oracle, "exhaustive enumeration instead of greedy descent");
    sign->callback([&] {
        Graph g = read_graph_file(sg_graph);
        SearchOptions opts;
        opts.budget_edges = sg_budget_edges;
        opts.budget_vertices = sg_budget_vertices;
        opts.precision = precision_from_bits(sg_prec);
        if (sg_shuffled) opts.shuffle_seed = sg_seed;
        auto [s, cert] = sg_oracle ? exhaustive_best_signing(g, opts.precision)
                                   : find_good_signing(g, opts);
        std::ostringstream os;
        write_signing(os, s.signs);
        emit_lines(sg_out, os.str());
        if (!sg_cert.empty()) write_certificate_file(sg_cert, cert);
        std::cerr << certificate_summary(cert) << "\n";
    });

    // lift ----------------------------------------------------------------
    auto* lift = app.add_subcommand("lift", "apply a signing as a 2-lift");
    std::string lf_graph, lf_signing, lf_out;
    lift->add_option("graph", lf_graph, "edge-list file")->required();
    lift->add_option("signing", lf_signing, "signing file")->required();
    lift->add_option("-o,--output", lf_out, "output edge-list file (default stdout)");
    lift->callback([&] {
        Graph g = read_graph_file(lf_graph);
        Signing s = read_signing_file(lf_signing, g);
        emit_graph(lf_out, two_lift(g, s));
    });

    // certify -------------------------------------------------------------
    auto* certify = app.add_subcommand("certify", "certify the Ramanujan property of a graph");
    std::string cf_graph, cf_cert, cf_bound_poly, cf_bound_lo, cf_bound_hi;
    int cf_prec = 32;
    certify->add_option("graph", cf_graph, "edge-list file")->required();
    certify->add_option("--cert", cf_cert, "write the certificate JSON here");
    certify->add_option("--prec", cf_prec, "isolation precision 2^-BITS (default 32)");
    certify->add_option("--bound-poly", cf_bound_poly, "custom bound: minimal polynomial file");
    certify->add_option("--bound-lo", cf_bound_lo, "custom bound: interval lower end (rational)");
    certify->add_option("--bound-hi", cf_bound_hi, "custom bound: interval upper end (rational)");
    certify->callback([&] {
        Graph g = read_graph_file(cf_graph);
        std::optional<RootBound> custom;
        if (!cf_bound_poly.empty() || !cf_bound_lo.empty() || !cf_bound_hi.empty()) {
            if (cf_bound_poly.empty() || cf_bound_lo.empty() || cf_bound_hi.empty())
                throw std::invalid_argument(
                    "--bound-poly, --bound-lo and --bound-hi must be given together");
            custom = custom_bound(read_poly_file(cf_bound_poly), rat_from_string(cf_bound_lo),
                                  rat_from_string(cf_bound_hi));
        }
        Certificate cert = certify_ramanujan(g, custom, precision_from_bits(cf_prec));
        if (!cf_cert.empty()) write_certificate_file(cf_cert, cert);
        std::cout << certificate_summary(cert) << "\n";
        if (cert.verdict == BoundVerdict::EXCEEDS) exit_code = 1;
    });

    // family --------------------------------------------------------------
    auto* family = app.add_subcommand("family", "build a tower of certified lifts");
    int fm_regular = 0, fm_steps = 0, fm_prec = 32;
    int fm_budget_edges = 40, fm_budget_vertices = 24;
    std::vector<int> fm_biregular;
    std::string fm_out_dir;
    unsigned fm_seed = 0;
    bool fm_shuffled = false;
    auto* fm_reg_opt = family->add_option("--regular", fm_regular, "d-regular base K_{d,d}");
    auto* fm_bi_opt =
        family->add_option("--biregular", fm_biregular, "(c,d)-biregular complete base")
            ->expected(2);
    fm_reg_opt->excludes(fm_bi_opt);
    family->add_option("--steps", fm_steps, "number of 2-lift iterations")->required();
    family->add_option("--out-dir", fm_out_dir, "output directory")->required();
    family->add_option("--prec", fm_prec, "isolation precision 2^-BITS (default 32)");
    family->add_option("--budget-edges", fm_budget_edges, "edge budget for each descent");
    family->add_option("--budget-vertices", fm_budget_vertices, "vertex budget for each descent");
    family->add_option("--shuffle", fm_seed, "shuffle edge order in each descent with this seed")
        ->trigger_on_parse()
        ->each([&](const std::string&) { fm_shuffled = true; });
    family->callback([&] {
        if (fm_reg_opt->count() == 0 && fm_bi_opt->count() == 0)
            throw std::invalid_argument("one of --regular or --biregular is required");
        FamilySpec base;
        if (fm_bi_opt->count()) {
            base.biregular = true;
            base.c = fm_biregular[0];
            base.d = fm_biregular[1];
        } else {
            base.d = fm_regular;
        }
        SearchOptions opts;
        opts.budget_edges = fm_budget_edges;
        opts.budget_vertices = fm_budget_vertices;
        opts.precision = precision_from_bits(fm_prec);
        if (fm_shuffled) opts.shuffle_seed = fm_seed;
        FamilyRun run = run_family(base, fm_steps, fm_out_dir, opts);
        for (size_t k = 0; k < run.artifacts.size(); ++k)
            std::cout << "step " << k << ": n=" << run.artifacts[k].graph.vertex_count() << " "
                      << certificate_summary(run.artifacts[k].certificate) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const certification_error& e) {
        std::cerr << "certification failure: " << e.what() << "\n";
        return 1;
    } catch (const io_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
