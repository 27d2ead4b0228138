#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "ramalift/family.hpp"
#include "support/test_graphs.hpp"

using namespace ramalift;
namespace ts = testsupport;
namespace fs = std::filesystem;

namespace {

std::string fresh_dir(const std::string& tag) {
    fs::path dir = fs::temp_directory_path() / ("ramalift_family_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir.string();
}

bool acceptable(BoundVerdict v) {
    return v == BoundVerdict::ALL_BELOW || v == BoundVerdict::TOUCHES;
}

}  // namespace

TEST_CASE("family base graphs", "[family]") {
    FamilySpec regular3{false, 0, 3};
    Graph base = regular3.base_graph();
    CHECK(base.vertex_count() == 6);
    CHECK(base.edge_count() == 9);
    CHECK(regular_degree(base) == 3);
    CHECK(regular3.describe() == "regular(3)");

    FamilySpec bi34{true, 3, 4};
    Graph bb = bi34.base_graph();
    CHECK(bb.vertex_count() == 7);
    CHECK(bb.edge_count() == 12);
    auto prof = biregular_profile(bb);
    REQUIRE(prof.has_value());
    CHECK(((prof->c == 3 && prof->d == 4) || (prof->c == 4 && prof->d == 3)));
    CHECK(bi34.describe() == "biregular(3,4)");
}

TEST_CASE("zero-step family run certifies just the base", "[family]") {
    std::string dir = fresh_dir("zero");
    FamilyRun run = run_family(FamilySpec{false, 0, 3}, 0, dir);
    REQUIRE(run.artifacts.size() == 1);
    const FamilyStep& step = run.artifacts[0];
    CHECK(acceptable(step.certificate.verdict));
    CHECK_FALSE(step.signing.has_value());
    CHECK(step.signing_file.empty());
    CHECK(fs::exists(step.graph_file));
    CHECK(fs::exists(step.certificate_file));
    CHECK_FALSE(fs::exists(dir + "/step0.sgn"));
    Graph back = read_graph_file(step.graph_file);
    CHECK(back.edges() == step.graph.edges());
}

TEST_CASE("one lift of the 3-regular base", "[family]") {
    std::string dir = fresh_dir("reg3");
    FamilyRun run = run_family(FamilySpec{false, 0, 3}, 1, dir);
    REQUIRE(run.artifacts.size() == 2);

    const FamilyStep& s0 = run.artifacts[0];
    const FamilyStep& s1 = run.artifacts[1];
    REQUIRE(s0.signing.has_value());
    CHECK(s0.signing->signs.size() == 9);
    CHECK_FALSE(s1.signing.has_value());

    CHECK(s1.graph.vertex_count() == 12);
    CHECK(s1.graph.edge_count() == 18);
    CHECK(regular_degree(s1.graph) == 3);
    CHECK(bipartition(s1.graph).has_value());
    CHECK(acceptable(s1.certificate.verdict));
    CHECK(s1.certificate.bound.kind == BoundKind::regular);

    // The recorded artifacts reproduce the run: signing lifts step0 to step1,
    // and the written files parse back to the same objects.
    Graph g0 = read_graph_file(s0.graph_file);
    Signing sg = read_signing_file(s0.signing_file, g0);
    CHECK(sg.signs == s0.signing->signs);
    Graph lifted = two_lift(g0, sg);
    Graph g1 = read_graph_file(s1.graph_file);
    CHECK(lifted.vertex_count() == g1.vertex_count());
    CHECK(lifted.edges() == g1.edges());

    // Independent re-certification of the stored lift.
    Certificate again = certify_ramanujan(g1);
    CHECK(acceptable(again.verdict));
}

TEST_CASE("one lift of the (3,4)-biregular base", "[family]") {
    std::string dir = fresh_dir("bi34");
    FamilyRun run = run_family(FamilySpec{true, 3, 4}, 1, dir);
    REQUIRE(run.artifacts.size() == 2);
    const FamilyStep& s1 = run.artifacts[1];
    CHECK(s1.graph.vertex_count() == 14);
    CHECK(s1.graph.edge_count() == 24);
    auto prof = biregular_profile(s1.graph);
    REQUIRE(prof.has_value());
    CHECK(prof->c * prof->d == 12);
    CHECK(acceptable(s1.certificate.verdict));
    CHECK(s1.certificate.bound.kind == BoundKind::biregular);
}

TEST_CASE("family run validation", "[family]") {
    CHECK_THROWS_AS(run_family(FamilySpec{false, 0, 3}, -1, "/tmp"), std::invalid_argument);
    CHECK_THROWS_AS(run_family(FamilySpec{false, 0, 3}, 0, "/nonexistent/family/dir"), io_error);
}
