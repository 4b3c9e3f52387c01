#include <doctest.h>

#include "momentlab/catalog.hpp"
#include "momentlab/error.hpp"
#include "momentlab/serialize.hpp"

using namespace momentlab;

namespace {
MultiPoly P(const char* s) { return MultiPoly::parse(s); }
}

TEST_CASE("polynomial json") {
    const MultiPoly p = P("-1/2*a_0*lambda_1 + 3 + x^2");
    CHECK(poly_from_json(poly_to_json(p)) == p);
    CHECK(poly_to_json(P("0")).dump() == "[]");
    CHECK(poly_to_json(P("5")).dump() == R"([["5","1"]])");
}

TEST_CASE("series json") {
    const TruncatedSeries s(3, {P("1"), P("c_1"), P("1/3")});
    CHECK(series_from_json(series_to_json(s)) == s);
}

TEST_CASE("documents print and parse byte for byte") {
    const std::vector<SequenceDocument> docs{
        SequenceDocument::from(catalog::gaussian_hermite(6), false),
        SequenceDocument::from(symbolic_cumulants(CumulantKind::Free, 4), true),
        SequenceDocument::from(JacobiParams::symbolic(3), true),
        SequenceDocument::from(CumulantSeq(CumulantKind::Boolean, {P("1/2"), P("-3")}), false),
    };
    for (const auto& d : docs) {
        const std::string text = d.print();
        CHECK(SequenceDocument::parse(text).print() == text);
    }
    CHECK(docs[0].print() == R"({"v":1,"kind":"moments","order":6,"symbolic":false,"values":["1","0","1","0","3","0","15"]})" "\n");
}

TEST_CASE("bad documents") {
    CHECK_THROWS_AS(SequenceDocument::parse("not json"), MathError);
    CHECK_THROWS_AS(SequenceDocument::parse(R"({"v":1,"error":"SingularHankel","index":1,"message":"x"})"), MathError);
    CHECK_THROWS_AS(SequenceDocument::parse(R"({"v":2,"kind":"moments","order":0,"symbolic":false,"values":["1"]})"),
                    MathError);
}

TEST_CASE("error objects") {
    const MathError e(ErrorKind::SingularHankel, "boom", 1);
    const Json j = error_to_json(e);
    CHECK(j["error"] == "SingularHankel");
    CHECK(j["index"] == 1);
    CHECK(j["v"] == 1);
}
