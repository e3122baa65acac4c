#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "frobkit/runner.hpp"
#include "support.hpp"

using fk::json;
using fk::Rational;
using fk::Zp;

namespace {

json m2_document() {
    return json::parse(R"({
      "field": {"kind": "Q"},
      "dim": 4,
      "basis_names": ["e11", "e12", "e21", "e22"],
      "mul": [[0, 0, [[0, 1]]], [0, 1, [[1, 1]]], [1, 2, [[0, 1]]], [1, 3, [[1, 1]]],
              [2, 0, [[2, 1]]], [2, 1, [[3, 1]]], [3, 2, [[2, 1]]], [3, 3, [[3, 1]]]],
      "unit": [1, 0, 0, 1]
    })");
}

std::string schema_path(const json& doc) {
    try {
        fk::parse_document<Rational>(doc);
    } catch (const fk::SchemaError& e) {
        return e.path;
    }
    return "<accepted>";
}

std::string write_temp(const json& doc, const std::string& name) {
    std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << doc.dump();
    return path;
}

}  // namespace

TEST(Json, MatrixAlgebraDocument) {
    auto d = fk::parse_document<Rational>(m2_document());
    auto m2 = fk::matrix_algebra<Rational>(2, QQ());
    ASSERT_EQ(d.algebra.dim(), 4);
    for (fk::Index i = 0; i < 4; ++i) EXPECT_EQ(d.algebra.left_mult(i), m2.left_mult(i));
    EXPECT_EQ(d.algebra.names()[1], "e12");
}

TEST(Json, ScalarsSerialiseAsStringsOverQAndIntegersOverFp) {
    EXPECT_EQ(fk::scalar_json(Rational(-3, 4)), json("-3/4"));
    EXPECT_EQ(fk::scalar_json(Zp(-1, 5)), json(4));
    EXPECT_EQ(fk::parse_scalar<Rational>(json("6/8"), QQ(), "$"), Rational(3, 4));
    EXPECT_EQ(fk::parse_scalar<Zp>(json(7), GF(5), "$"), Zp(2, 5));
    EXPECT_THROW(fk::parse_scalar<Zp>(json("1/5"), GF(5), "$"), fk::SchemaError);
}

TEST(Json, GroupTableOfS3OverF3) {
    auto g = fk::symmetric_group(3);
    json doc{{"field", {{"kind", "Fp"}, {"p", 3}}}, {"dim", 6}, {"mul", json::array()}, {"unit", {1, 0, 0, 0, 0, 0}}};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) doc["mul"].push_back(json::array({i, j, json::array({json::array({g.table[i][j], 1})})}));
    auto d = fk::parse_document<Zp>(doc);
    EXPECT_EQ(d.algebra.dim(), 6);
    EXPECT_EQ(fk::analyze(d.algebra).rad.dim(), 4);
}

TEST(Json, EveryPresetRoundTrips) {
    for (const char* spec : {"matrix:2", "dual-numbers", "symmetric:3", "sweedler", "taft:3:2", "dual-cyclic:3", "smash-cyclic:2",
                             "dualnum-c2", "upper-triangular:2"}) {
        auto obj = fk::make_preset<Zp>(spec, GF(7));
        json doc = fk::emit_document(obj);
        auto d = fk::parse_document<Zp>(json::parse(doc.dump()));
        ASSERT_EQ(d.algebra.dim(), obj.algebra.dim()) << spec;
        for (fk::Index i = 0; i < d.algebra.dim(); ++i) EXPECT_EQ(d.algebra.left_mult(i), obj.algebra.left_mult(i)) << spec;
        EXPECT_EQ(d.algebra.unit(), obj.algebra.unit()) << spec;
        EXPECT_EQ(d.hopf.has_value(), obj.hopf.has_value()) << spec;
        if (obj.hopf) {
            EXPECT_EQ(d.hopf->comul, obj.hopf->comul) << spec;
            EXPECT_EQ(d.hopf->antipode, obj.hopf->antipode) << spec;
            EXPECT_EQ(d.hopf->counit, obj.hopf->counit) << spec;
        }
        EXPECT_EQ(d.comodule.has_value(), obj.comodule.has_value()) << spec;
        if (obj.comodule) EXPECT_EQ(d.comodule->coaction, obj.comodule->coaction) << spec;
        // emitting again gives the same text
        auto again = fk::emit_document(fk::PresetObject<Zp>{obj.name, d.algebra, d.hopf, d.comodule, obj.default_lambda});
        EXPECT_EQ(again.dump(), doc.dump()) << spec;
    }
}

TEST(Json, SchemaErrorsCarryPaths) {
    json doc = m2_document();
    doc.erase("unit");
    EXPECT_EQ(schema_path(doc), "$.unit");

    doc = m2_document();
    doc["mul"][2][2][0][0] = 9;
    EXPECT_EQ(schema_path(doc), "$.mul[2][2][0][0]");

    doc = m2_document();
    doc["mul"][0][2][0][1] = "x";
    EXPECT_EQ(schema_path(doc), "$.mul[0][2][0][1]");

    doc = m2_document();
    doc["field"] = {{"kind", "Fp"}, {"p", 4}};
    EXPECT_EQ(schema_path(doc), "$.field.p");

    doc = m2_document();
    doc["dim"] = 0;
    EXPECT_EQ(schema_path(doc), "$.dim");
}

TEST(Json, NonAssociativeConstantsNameTheTriple) {
    json doc = m2_document();
    doc["mul"][2][2] = json::array({json::array({1, 1})});  // e12 e21 = e12
    try {
        fk::parse_document<Rational>(doc);
        FAIL() << "accepted a non-associative table";
    } catch (const fk::SchemaError& e) {
        EXPECT_EQ(e.path, "$.mul");
        EXPECT_NE(std::string(e.what()).find("(i,j,k)"), std::string::npos) << e.what();
    }
}

TEST(Json, HopfAxiomFailureIsReported) {
    auto obj = fk::make_preset<Rational>("sweedler", QQ());
    json doc = fk::emit_document(obj);
    doc["hopf"]["counit"] = json::array({1, 1, 1, 0});
    EXPECT_EQ(schema_path(doc).rfind("$.hopf", 0), 0u);
}

TEST(Runner, ReportBodyIsDeterministic) {
    fk::JobSpec job;
    job.preset = "symmetric:3";
    job.field = GF(3);
    job.trials = 5;
    auto a = fk::report_body(fk::run(job)).dump();
    auto b = fk::report_body(fk::run(job)).dump();
    EXPECT_EQ(a, b);
    job.seed = 99;
    auto c = fk::run(job);
    EXPECT_FALSE(c.has_failure());
}

TEST(Runner, CheckNamesAreUnique) {
    fk::JobSpec job;
    job.preset = "sweedler";
    job.trials = 3;
    auto body = fk::report_body(fk::run(job));
    std::set<std::string> names;
    for (const auto& c : body["checks"]) EXPECT_TRUE(names.insert(c["name"].get<std::string>()).second) << c["name"];
}

TEST(Runner, ExampleJobs) {
    fk::JobSpec job;
    job.preset = "symmetric:3";
    job.field = GF(3);
    job.suites = {"main-theorem"};
    auto r = fk::run(job);
    EXPECT_FALSE(r.has_failure());
    EXPECT_EQ(r.info["rank_tau"], 1);

    fk::JobSpec sw;
    sw.preset = "sweedler";
    sw.suites = {"hopf"};
    auto rs = fk::run(sw);
    EXPECT_FALSE(rs.has_failure());
    EXPECT_EQ(rs.info["involutory"], false);

    sw.suites = {"divisibility"};
    auto rd = fk::run(sw);
    EXPECT_EQ(rd.count(fk::Verdict::NotApplicable), 1u);
    EXPECT_EQ(rd.count(fk::Verdict::Fail), 0u);
}

TEST(Runner, NotSplitIsNotApplicable) {
    fk::JobSpec job;
    job.preset = "cyclic:3";
    job.suites = {"bass", "main-theorem"};
    auto r = fk::run(job);
    EXPECT_FALSE(r.has_failure());
    EXPECT_GE(r.count(fk::Verdict::NotApplicable), 1u);
}

TEST(Runner, InputErrors) {
    fk::JobSpec job;
    job.preset = "nonsense:3";
    EXPECT_THROW(fk::run(job), fk::InputError);
    job.preset = "symmetric:3";
    job.suites = {"nope"};
    EXPECT_THROW(fk::run(job), fk::InputError);

    fk::JobSpec file;
    file.input = write_temp(m2_document(), "m2.json");
    file.field = GF(5);
    EXPECT_THROW(fk::run(file), fk::InputError);
    file.field.reset();
    file.lambda = "unknown-form";
    EXPECT_THROW(fk::run(file), fk::InputError);
    file.lambda.clear();
    EXPECT_FALSE(fk::run(file).has_failure());

    fk::JobSpec missing;
    missing.input = ::testing::TempDir() + "does-not-exist.json";
    EXPECT_THROW(fk::run(missing), fk::InputError);
}

TEST(Runner, ExplicitLambdaFromDocument) {
    json doc = m2_document();
    doc["lambda"] = json::array({1, 0, 0, 1});
    fk::JobSpec job;
    job.input = write_temp(doc, "m2-lambda.json");
    job.suites = {"frobenius"};
    auto r = fk::run(job);
    EXPECT_FALSE(r.has_failure());
    EXPECT_EQ(r.info["frobenius_form"], "input vector");

    doc["lambda"] = json::array({1, 0, 0, 0});  // e11 coefficient is degenerate
    job.input = write_temp(doc, "m2-bad-lambda.json");
    EXPECT_TRUE(fk::run(job).has_failure());
}
