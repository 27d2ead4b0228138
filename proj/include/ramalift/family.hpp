#ifndef RAMALIFT_FAMILY_HPP
#define RAMALIFT_FAMILY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramalift/graph.hpp"
#include "ramalift/io.hpp"
#include "ramalift/search.hpp"

namespace ramalift {

/// Base of a family run: d-regular (K_{d,d}) or (c,d)-biregular (complete
/// bipartite with left degree c and right degree d).
struct FamilySpec {
    bool biregular = false;
    int c = 0;  // biregular only
    int d = 0;

    Graph base_graph() const {
        if (biregular) return Graph::complete_bipartite(d, c);  // left degree c, right degree d
        return Graph::complete_bipartite(d, d);
    }

    std::string describe() const {
        return biregular ? "biregular(" + std::to_string(c) + "," + std::to_string(d) + ")"
                         : "regular(" + std::to_string(d) + ")";
    }
};

/// One rung of the tower: the graph, its certificate, and (except for the
/// last step) the signing used to lift it.
struct FamilyStep {
    Graph graph;
    Certificate certificate;
    std::optional<Signing> signing;
    std::string graph_file, certificate_file, signing_file;
};

struct FamilyRun {
    FamilySpec base;
    int steps = 0;
    std::vector<FamilyStep> artifacts;
};

/// Iterates find_good_signing + two_lift + certify_ramanujan from the base
/// graph, writing stepK.el / stepK.cert.json / stepK.sgn into out_dir. Every
/// certificate must come out ALL_BELOW or TOUCHES; an EXCEEDS verdict aborts
/// (it would falsify the implementation, not the construction).
inline FamilyRun run_family(const FamilySpec& base, int steps, const std::string& out_dir,
                            const SearchOptions& opts = {}) {
    if (steps < 0) throw std::invalid_argument("run_family: negative step count");
    FamilyRun run;
    run.base = base;
    run.steps = steps;
    Graph cur = base.base_graph();
    for (int k = 0; k <= steps; ++k) {
        FamilyStep step;
        step.graph = cur;
        step.certificate = certify_ramanujan(cur, std::nullopt, opts.precision);
        if (step.certificate.verdict == BoundVerdict::EXCEEDS)
            throw certification_error("run_family: step " + std::to_string(k) +
                                      " certificate EXCEEDS the " +
                                      step.certificate.bound.kind_string() +
                                      " bound; this indicates an implementation defect");
        const std::string prefix = out_dir + "/step" + std::to_string(k);
        step.graph_file = prefix + ".el";
        step.certificate_file = prefix + ".cert.json";
        write_graph_file(step.graph_file, cur);
        write_certificate_file(step.certificate_file, step.certificate);
        if (k < steps) {
            auto [s, descent_cert] = find_good_signing(cur, opts);
            (void)descent_cert;  // the lift is re-certified from scratch next round
            step.signing = s;
            step.signing_file = prefix + ".sgn";
            write_signing_file(step.signing_file, s.signs);
            cur = two_lift(cur, s);
        }
        run.artifacts.push_back(std::move(step));
    }
    return run;
}

}  // namespace ramalift

#endif  // RAMALIFT_FAMILY_HPP
