#include <gtest/gtest.h>

#include <functional>

#include "corpus.hpp"
#include "snarkpsi/synthesis.hpp"

using namespace snark;

namespace {

synthesis_errc error_code(const std::function<void()>& f)
{
    try {
        f();
    } catch (const synthesis_error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no synthesis_error thrown";
    return synthesis_errc::no_valid_choice;
}

PsiTarget target(const std::string& text, SynthesisMode mode)
{
    PsiTarget t = parse_target(text);
    t.mode = mode;
    t.verify = true;
    return t;
}

// Counts psi from the colorings of G_e directly.
std::uint64_t counted_psi(const Graph& g, EdgeId e)
{
    auto n = count_colorings(subtract_edge(g, e).graph);
    EXPECT_EQ(n % 18, 0u);
    return n / 18;
}

void expect_consistent_trace(const SynthesisResult& r)
{
    const auto& steps = r.trace.steps;
    std::uint64_t product = 1;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        product *= static_cast<std::uint64_t>(steps[i].factor);
        EXPECT_EQ(steps[i].predicted_psi, product);
        if (i + 1 < steps.size()) {
            EXPECT_EQ(steps[i].tracked_after.u, steps[i + 1].tracked_before.u);
            EXPECT_EQ(steps[i].tracked_after.v, steps[i + 1].tracked_before.v);
        }
    }
    EXPECT_EQ(r.trace.predicted_psi, product);
    EXPECT_EQ(r.trace.target, product);
    if (!steps.empty()) {
        EXPECT_EQ(steps.back().graph_fingerprint, fingerprint(r.graph));
        EXPECT_EQ(steps.back().vertex_count, r.graph.vertex_count());
        EXPECT_EQ(steps.back().tracked_after.id, r.tracked.id);
    }
    EXPECT_EQ(r.graph.edge(r.tracked.id).u, r.tracked.u);
}

}  // namespace

TEST(ParseTarget, Forms)
{
    auto t = parse_target("5^1*7^1");
    EXPECT_EQ(t.five, 1);
    EXPECT_EQ(t.seven, 1);
    EXPECT_EQ(t.value(), 35u);
    EXPECT_EQ(parse_target("35").value(), 35u);
    auto u = parse_target("2^3 * 3");
    EXPECT_EQ(u.two, 3);
    EXPECT_EQ(u.three, 1);
    EXPECT_EQ(u.value(), 24u);
    EXPECT_EQ(parse_target("1").value(), 1u);
    EXPECT_EQ(parse_target("7^0").value(), 1u);
    EXPECT_EQ(parse_target("2100").value(), 2100u);
    EXPECT_EQ(parse_target("25^2").five, 4);
}

TEST(ParseTarget, Rejects)
{
    for (const char* bad : {"", "11", "0", "5^x", "x", "5^", "*5", "2^1*13", "-5"})
        EXPECT_EQ(error_code([&] { parse_target(bad); }), synthesis_errc::invalid_target) << bad;
}

TEST(Synthesize, TrivialTargetIsPetersen)
{
    auto r = synthesize(target("1", SynthesisMode::cyclic5));
    EXPECT_EQ(r.graph, petersen());
    EXPECT_TRUE(r.trace.steps.empty());
    EXPECT_EQ(r.trace.verified_psi, 1u);
    ASSERT_TRUE(r.report);
    EXPECT_TRUE(r.report->is_snark);
}

TEST(Synthesize, CyclicFiveModeRejectsTwoAndThree)
{
    EXPECT_EQ(error_code([] { synthesize(parse_target("3")); }), synthesis_errc::invalid_target);
    EXPECT_EQ(error_code([] { synthesize(parse_target("2*5")); }), synthesis_errc::invalid_target);
}

TEST(Synthesize, SevenAndFive)
{
    for (const char* text : {"7", "5"}) {
        auto r = synthesize(target(text, SynthesisMode::cyclic5));
        EXPECT_EQ(r.graph.vertex_count(), 26) << text;
        EXPECT_EQ(counted_psi(r.graph, r.tracked.id), r.trace.target) << text;
        EXPECT_EQ(r.trace.verified_psi, r.trace.target);
        ASSERT_TRUE(r.report);
        EXPECT_TRUE(r.report->is_snark);
        EXPECT_EQ(r.report->cyclic_connectivity.at(5), Verdict::pass);
        ASSERT_EQ(r.trace.steps.size(), 1u);
        EXPECT_TRUE(r.trace.steps[0].path);
        expect_consistent_trace(r);
    }
}

TEST(Synthesize, DotSteps)
{
    for (const char* text : {"3", "2", "6"}) {
        auto r = synthesize(target(text, SynthesisMode::cyclic4));
        EXPECT_EQ(counted_psi(r.graph, r.tracked.id), r.trace.target) << text;
        ASSERT_TRUE(r.report);
        EXPECT_TRUE(r.report->is_snark) << text;
        EXPECT_EQ(r.report->cyclic_connectivity.at(4), Verdict::pass);
        for (const auto& s : r.trace.steps) {
            EXPECT_TRUE(s.ends1 && s.ends2);
            EXPECT_EQ(s.reading.has_value(), s.factor == 3);
        }
        expect_consistent_trace(r);
    }
    EXPECT_EQ(synthesize(target("6", SynthesisMode::cyclic4)).graph.vertex_count(), 26);
}

TEST(Synthesize, UnverifiedAboveSizeLimit)
{
    auto t = target("7", SynthesisMode::cyclic5);
    t.verify_max_vertices = 20;
    auto r = synthesize(t);
    EXPECT_FALSE(r.trace.verified_psi);
    EXPECT_FALSE(r.report);
    EXPECT_EQ(r.trace.predicted_psi, 7u);
}

TEST(Synthesize, Deterministic)
{
    auto x = synthesize(parse_target("5*7"));
    auto y = synthesize(parse_target("5*7"));
    EXPECT_EQ(x.graph, y.graph);
    EXPECT_EQ(x.tracked.id, y.tracked.id);
    EXPECT_EQ(x.graph.vertex_count(), 42);
    expect_consistent_trace(x);
}

TEST(ValidateSnark, Petersen)
{
    auto r = validate_snark(petersen(), 6);
    EXPECT_TRUE(r.is_snark);
    EXPECT_EQ(r.girth, 5);
    EXPECT_EQ(r.colorings, 0u);
    EXPECT_EQ(r.cyclic_connectivity.at(4), Verdict::pass);
    EXPECT_EQ(r.cyclic_connectivity.at(5), Verdict::pass);
    EXPECT_EQ(r.cyclic_connectivity.at(6), Verdict::fail);
    ASSERT_TRUE(r.cyclic_counterexample);
    EXPECT_EQ(r.cyclic_counterexample->edge_ids.size(), 5u);
}

TEST(ValidateSnark, NonSnarks)
{
    auto k4 = validate_snark(corpus::k4());
    EXPECT_FALSE(k4.is_snark);
    EXPECT_EQ(k4.girth, 3);
    EXPECT_EQ(k4.colorings, 6u);

    auto dodeca = validate_snark(corpus::dodecahedron());
    EXPECT_FALSE(dodeca.is_snark);
    EXPECT_GT(*dodeca.colorings, 0u);
    EXPECT_EQ(dodeca.cyclic_connectivity.at(5), Verdict::pass);

    auto path = validate_snark(corpus::path(4));
    EXPECT_FALSE(path.cubic);
    EXPECT_EQ(path.girth, 0);
    EXPECT_EQ(path.cyclic_connectivity.at(4), Verdict::skipped);

    auto prism = validate_snark(corpus::prism(5));
    EXPECT_EQ(prism.cyclic_connectivity.at(5), Verdict::fail);

    auto starved = validate_snark(petersen(), 5, Budget{10});
    EXPECT_EQ(starved.cyclic_connectivity.at(4), Verdict::skipped);
    EXPECT_FALSE(starved.is_snark);
}

TEST(D1Reading, AdjacentReadingHolds)
{
    PsiSession session;
    auto r = resolve_d1_reading(session);
    ASSERT_TRUE(r.holds);
    EXPECT_EQ(*r.holds, D1Reading::adjacent);
    EXPECT_EQ(r.lhs, 21u);
    EXPECT_EQ(r.adjacent, 21u);
    EXPECT_EQ(r.subtracted, 12u);
    EXPECT_EQ(resolved_d1_reading(), D1Reading::adjacent);
}

TEST(D1Reading, PredictionsOnPetersenProduct)
{
    PsiSession session;
    auto spec = make_dot_spec(petersen(), 0, petersen(), 0);
    EXPECT_EQ(d1_prediction(spec, D1Reading::adjacent, session), 3u);
    EXPECT_EQ(d1_prediction(spec, D1Reading::subtracted, session), 3u);
    auto dot = dot_product(spec);
    EXPECT_EQ(counted_psi(dot.graph, dot.map.named("d1")), 3u);
}

TEST(VerifyTheorems, SelectedSuitesPass)
{
    auto r = verify_theorems({"dot-d1", "superpose-e", "dot-d1-reading"});
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.checks.size(), 3u);
    ASSERT_TRUE(r.d1_reading);
    EXPECT_EQ(r.d1_reading->holds, D1Reading::adjacent);
    EXPECT_THROW(verify_theorems({"nonsense"}), std::invalid_argument);
}

TEST(VerifyTheorems, DotEdgeSuite)
{
    auto r = verify_theorems({"dot-edge"});
    EXPECT_EQ(r.checks.size(), 10u);
    EXPECT_TRUE(r.pass());
    for (const auto& c : r.checks)
        EXPECT_EQ(c.lhs, 2u);
}
