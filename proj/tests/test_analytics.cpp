#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "symext/analytics.hpp"

using namespace symext;

namespace {

FiniteGroup cyclic_group(int n) { return finite_group_view(make_cyclic(n)); }

const ClaimEntry& entry(const ClaimReport& r, const std::string& id) {
    for (const ClaimEntry& c : r.claims)
        if (c.id == id) return c;
    FAIL("missing claim " << id);
    throw Error("unreachable");
}

}  // namespace

TEST_CASE("extension density") {
    FiniteGroup c2 = cyclic_group(2);
    AbelianGroup z2 = make_cyclic(2), z3 = make_cyclic(3);
    CHECK(extension_density(c2, z2, trivial_action(c2, z2)) == Rational(1, 2));
    CHECK(extension_density(c2, z3, trivial_action(c2, z3)) == Rational(1, 6));
    FiniteGroup c1 = cyclic_group(1);
    AbelianGroup z5 = make_cyclic(5);
    CHECK(extension_density(c1, z5, trivial_action(c1, z5)) == Rational(1, 5));
}

TEST_CASE("zeta series for the 2,2 pair") {
    FiniteGroup g = cyclic_group(2);
    AbelianGroup h = make_cyclic(2);
    ZetaSeries z = zeta_series(g, h, trivial_action(g, h));
    REQUIRE(z.terms.size() == 2);
    CHECK(z.terms[0].max_order == 2);
    CHECK(z.terms[0].multiplicity == 1);
    CHECK(z.terms[1].max_order == 4);
    CHECK(z.terms[1].multiplicity == 1);
    CHECK(z.class_count == 2);
    CHECK(z.eval(0.0).real() == 2.0);
    CHECK(z.eval(1.0).real() == Catch::Approx(0.75));
    CHECK(z.eval(0.5).real() > z.eval(1.0).real());
    CHECK(z.eval(1.0).real() > z.eval(2.0).real());
}

TEST_CASE("zeta series for the trivial pair") {
    FiniteGroup g = cyclic_group(1);
    AbelianGroup h = make_cyclic(1);
    ZetaSeries z = zeta_series(g, h, trivial_action(g, h));
    REQUIRE(z.terms.size() == 1);
    CHECK(z.terms[0].max_order == 1);
    CHECK(z.class_count == 1);
    CHECK(z.eval(2.5).real() == 1.0);
    CHECK(z.eval(-3.0).real() == 1.0);
}

TEST_CASE("modular histograms") {
    FiniteGroup g = cyclic_group(2);
    AbelianGroup h = make_cyclic(2);
    GroupAction triv = trivial_action(g, h);
    SymmetricCohomology ts = compute_h2_ts(g, h, triv);
    TsClassCensus census = enumerate_ts_classes(g, h, triv, ts);

    Histogram one = modular_histogram(g, h, census, HistogramSelector::max_order, Int(1));
    REQUIRE(one.counts.size() == 1);
    CHECK(one.counts[0] == 2);
    CHECK(one.deviation == Rational(0));

    // orders 2 and 4 both sit in residue 0 mod 2
    Histogram ord2 = modular_histogram(g, h, census, HistogramSelector::max_order, Int(2));
    CHECK(ord2.counts == std::vector<Int>{Int(2), Int(0)});
    CHECK(ord2.deviation == Rational(1));

    Histogram idx = modular_histogram(g, h, census, HistogramSelector::class_index, Int(2));
    CHECK(idx.counts == std::vector<Int>{Int(1), Int(1)});
    CHECK(idx.deviation == Rational(0));

    Histogram ext = modular_histogram(g, h, census, HistogramSelector::extension_order, Int(3));
    Int total = 0;
    for (const Int& c : ext.counts) total += c;
    CHECK(total == 2);
    CHECK(ext.counts[1] == 2);  // |E| = 4 = 1 mod 3

    CHECK_THROWS_AS(modular_histogram(g, h, census, HistogramSelector::max_order, Int(0)), UsageError);
    CHECK(selector_from_name("max_order") == HistogramSelector::max_order);
    CHECK_THROWS_AS(selector_from_name("nope"), UsageError);
}

TEST_CASE("claims: abelian equality refuted on the Klein pair with a replayable witness") {
    FiniteGroup v4 = finite_group_view(make_abelian({Int(2), Int(2)}));
    AbelianGroup z2 = make_cyclic(2);
    GroupAction triv = trivial_action(v4, z2);
    ClaimReport r = verify_claims(v4, z2, triv);
    CHECK(r.g_token == v4.name);
    CHECK(r.any_refuted());

    const ClaimEntry& eq = entry(r, "abelian-equality");
    CHECK(eq.status == "REFUTED");
    REQUIRE(eq.witness.is_object());

    // replay: the witness representative really is a cocycle in the named
    // class, and that class really has no symmetric table
    CohomologyGroup h2 = compute_h2(v4, z2, triv);
    Cochain2 rep = cochain_from_json(v4, eq.witness.at("representative"));
    CHECK(is_cocycle(v4, triv, rep));
    CHECK(h2.class_of(rep) == coords_from_json(eq.witness.at("class_h2")));
    CHECK_FALSE(symmetrize_in_class(v4, triv, rep).has_value());

    CHECK(entry(r, "nonabelian-proper").status == "NOT-APPLICABLE");
    CHECK(entry(r, "density-formula").status == "NOT-APPLICABLE");
    CHECK(entry(r, "s3-h2ts").status == "NOT-APPLICABLE");
    CHECK(entry(r, "lie-dimension").status == "NOT-APPLICABLE");

    // delta hits 1 on a nontrivial abelian class, refuting the extremal claim
    const ClaimEntry& ex = entry(r, "extremal-density");
    CHECK(ex.status == "REFUTED");
    CHECK(ex.witness.at("trivial") == false);
}

TEST_CASE("claims: S3 pair refutes the paper's symmetric-subgroup example") {
    FiniteGroup s3 = make_symmetric_group(3);
    AbelianGroup z2 = make_cyclic(2);
    GroupAction triv = trivial_action(s3, z2);
    ClaimReport r = verify_claims(s3, z2, triv);

    CHECK(entry(r, "s3-h2-classical").status == "VERIFIED");

    const ClaimEntry& ts_claim = entry(r, "s3-h2ts");
    CHECK(ts_claim.status == "REFUTED");
    Cochain2 rep = cochain_from_json(s3, ts_claim.witness.at("representative"));
    CHECK(is_symmetric(rep));
    CHECK(is_cocycle(s3, triv, rep));
    CohomologyGroup h2 = compute_h2(s3, z2, triv);
    std::vector<Int> cls = h2.class_of(rep);
    CHECK(cls == coords_from_json(ts_claim.witness.at("class_h2")));
    CHECK_FALSE(std::all_of(cls.begin(), cls.end(), [](const Int& v) { return v == 0; }));

    // equality of the subgroup with the whole group refutes properness
    const ClaimEntry& proper = entry(r, "nonabelian-proper");
    CHECK(proper.status == "REFUTED");
    for (const Json& gen : proper.witness.at("generators")) {
        Cochain2 sym = cochain_from_json(s3, gen.at("symmetric_representative"));
        CHECK(is_symmetric(sym));
        CHECK(h2.class_of(sym) == coords_from_json(gen.at("class_h2")));
    }
    CHECK(entry(r, "abelian-equality").status == "NOT-APPLICABLE");
}

TEST_CASE("claims: the 6,4 pair refutes the maximal-order theorem with an order-24 element") {
    FiniteGroup c6 = cyclic_group(6);
    AbelianGroup z4 = make_cyclic(4);
    GroupAction triv = trivial_action(c6, z4);
    ClaimReport r = verify_claims(c6, z4, triv);

    CHECK(entry(r, "density-formula").status == "VERIFIED");
    CHECK(entry(r, "abelian-equality").status == "VERIFIED");
    const ClaimEntry& cong = entry(r, "symmetry-congruence");
    CHECK(cong.status == "VERIFIED");
    CHECK(cong.computed.at("modulus") == 2);
    CHECK(cong.computed.at("identical") == true);

    const ClaimEntry& mo = entry(r, "max-order-lcm");
    CHECK(mo.status == "REFUTED");
    CHECK(mo.expected.at("max_order") == 12);
    REQUIRE(mo.witness.is_object());
    CHECK(mo.witness.at("element_order") == 24);
    CHECK(mo.witness.at("abelian_type") == Json::array({24}));

    // replay by hand: rebuild the extension and count the element's order by
    // repeated multiplication
    Cochain2 rep = cochain_from_json(c6, mo.witness.at("representative"));
    ExtensionGroup e = build_extension(c6, z4, triv, rep);
    int idx = mo.witness.at("element").get<int>();
    int acc = idx, steps = 1;
    while (acc != 0) {
        acc = e.base.mul(acc, idx);
        ++steps;
    }
    CHECK(steps == 24);
    CHECK(e.base.order == 24);
}

TEST_CASE("claims: cyclic self-pairs verify the paper example") {
    for (int n = 2; n <= 5; ++n) {
        FiniteGroup g = cyclic_group(n);
        AbelianGroup h = make_cyclic(n);
        ClaimReport r = verify_claims(g, h, trivial_action(g, h));
        const ClaimEntry& c = entry(r, "cyclic-self-h2ts");
        CHECK(c.status == "VERIFIED");
        CHECK(c.computed.at("h2ts_factors") == Json::array({n}));
    }
}

TEST_CASE("claims: a coprime pair yields no refutations") {
    FiniteGroup c2 = cyclic_group(2);
    AbelianGroup z3 = make_cyclic(3);
    ClaimReport r = verify_claims(c2, z3, trivial_action(c2, z3));
    CHECK_FALSE(r.any_refuted());
    CHECK(entry(r, "extremal-density").status == "VERIFIED");
    CHECK(entry(r, "max-order-lcm").status == "VERIFIED");
    CHECK(entry(r, "density-formula").status == "VERIFIED");
}

TEST_CASE("claim reports are deterministic and sorted") {
    FiniteGroup c6 = cyclic_group(6);
    AbelianGroup z4 = make_cyclic(4);
    GroupAction triv = trivial_action(c6, z4);
    std::string a = json_claim_report(verify_claims(c6, z4, triv)).dump(2);
    std::string b = json_claim_report(verify_claims(c6, z4, triv)).dump(2);
    CHECK(a == b);

    ClaimReport r = verify_claims(c6, z4, triv);
    for (size_t i = 1; i < r.claims.size(); ++i) CHECK(r.claims[i - 1].id < r.claims[i].id);
    CHECK(r.claims.size() == default_claim_specs().size());

    Json j = json_claim_report(r);
    CHECK(j.at("pair").at("g") == "C6");
    CHECK(j.at("pair").at("h") == "C4");
    CHECK(j.at("pair").at("action") == "trivial");
}

TEST_CASE("claim manifests are data-driven") {
    FiniteGroup c4 = cyclic_group(4);
    AbelianGroup z2 = make_cyclic(2);
    GroupAction triv = trivial_action(c4, z2);

    Json manifest = Json::parse(R"([
        {"id": "pinned-ts", "kind": "h2ts-factors",
         "statement": "this pair has a single order-2 symmetric class group",
         "paper_location": "external", "params": {"expected": [2]}},
        {"id": "pinned-ts-wrong", "kind": "h2ts-factors",
         "statement": "deliberately wrong pin",
         "paper_location": "external", "params": {"expected": [4]}}
    ])");
    ClaimReport r = verify_claims(c4, z2, triv, claim_specs_from_json(manifest));
    CHECK(entry(r, "pinned-ts").status == "VERIFIED");
    CHECK(entry(r, "pinned-ts-wrong").status == "REFUTED");
    CHECK(r.any_refuted());

    Json dup = Json::parse(R"([
        {"id": "x", "kind": "h2ts-factors", "statement": "", "paper_location": "", "params": {"expected": []}},
        {"id": "x", "kind": "h2ts-factors", "statement": "", "paper_location": "", "params": {"expected": []}}
    ])");
    CHECK_THROWS_AS(claim_specs_from_json(dup), UsageError);

    Json unknown = Json::parse(R"([
        {"id": "y", "kind": "no-such-kind", "statement": "", "paper_location": ""}
    ])");
    CHECK_THROWS_AS(verify_claims(c4, z2, triv, claim_specs_from_json(unknown)), UsageError);
}

TEST_CASE("standalone congruence report") {
    ClaimEntry e = congruence_report(6, 4);
    CHECK(e.id == "symmetry-congruence");
    CHECK(e.status == "VERIFIED");
    CHECK(e.computed.at("modulus") == 2);
    ClaimEntry coprime = congruence_report(3, 5);
    CHECK(coprime.status == "VERIFIED");
    CHECK(coprime.computed.at("modulus") == 1);
}

TEST_CASE("census consistency") {
    FiniteGroup c6 = cyclic_group(6);
    AbelianGroup z4 = make_cyclic(4);
    GroupAction triv = trivial_action(c6, z4);
    SymmetricCohomology ts = compute_h2_ts(c6, z4, triv);
    TsClassCensus census = enumerate_ts_classes(c6, z4, triv, ts);
    REQUIRE(census.classes() == 2);
    CHECK(census.is_trivial_class(0));
    CHECK_FALSE(census.is_trivial_class(1));
    CHECK(census.max_orders[0] == 12);  // Z2 x Z12
    CHECK(census.max_orders[1] == 24);  // Z24
    CHECK(*census.abelian_types[0] == std::vector<Int>{Int(2), Int(12)});
    CHECK(*census.abelian_types[1] == std::vector<Int>{Int(24)});
    for (const Cochain2& rep : census.reps) CHECK(is_symmetric(rep));
}
