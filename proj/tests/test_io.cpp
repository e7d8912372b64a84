#include "pathmorse/io.hpp"

#include "pathmorse/generators.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace pathmorse;
using nlohmann::json;

TEST_CASE("digraph documents round-trip") {
    Digraph g(3, {{0, 1}, {1, 2}, {0, 2}}, {"a", "b", "c"});
    json doc = digraph_to_document(g);
    CHECK(doc["format"] == "digraph/1");
    CHECK(doc["vertices"] == json::array({"a", "b", "c"}));
    Digraph back = parse_digraph(doc);
    CHECK(back.vertex_count() == 3);
    CHECK(back.edges() == g.edges());
    CHECK(back.label(2) == "c");
    // the canonical serialization is a fixed point
    CHECK(digraph_to_document(back) == doc);
}

TEST_CASE("digraph parse errors") {
    json doc;
    doc["format"] = "digraph/1";
    doc["vertices"] = json::array({"a", "b"});
    doc["edges"] = json::array({json::array({"a", "b"})});
    CHECK_NOTHROW(parse_digraph(doc));

    json bad = doc;
    bad["format"] = "digraph/2";
    CHECK_THROWS_AS(parse_digraph(bad), std::invalid_argument);

    bad = doc;
    bad["vertices"] = json::array({"a", "a"});
    CHECK_THROWS_AS(parse_digraph(bad), std::invalid_argument);

    bad = doc;
    bad["edges"] = json::array({json::array({"a", "z"})});
    CHECK_THROWS_AS(parse_digraph(bad), std::invalid_argument);

    bad = doc;
    bad["edges"] = json::array({json::array({"a", "b", "c"})});
    CHECK_THROWS_AS(parse_digraph(bad), std::invalid_argument);

    bad = doc;
    bad.erase("vertices");
    CHECK_THROWS_AS(parse_digraph(bad), std::invalid_argument);

    CHECK_THROWS_AS(parse_digraph(json::array()), std::invalid_argument);
}

TEST_CASE("morse documents round-trip with exact rationals") {
    Digraph g(2, {{0, 1}}, {"x", "y"});
    MorseFunction f;
    f.values = {Rational(3) / 2, Rational(0)};
    json doc = morse_to_document(g, f);
    CHECK(doc["format"] == "morse/1");
    CHECK(doc["values"]["x"] == "3/2");
    CHECK(doc["values"]["y"] == "0");
    MorseFunction back = parse_morse(doc, g);
    CHECK(back.values == f.values);
    // integer JSON numbers are accepted too
    doc["values"]["y"] = 4;
    CHECK(parse_morse(doc, g)[1] == Rational(4));
}

TEST_CASE("morse parse errors") {
    Digraph g(2, {{0, 1}}, {"x", "y"});
    json doc;
    doc["format"] = "morse/1";
    doc["values"] = {{"x", "1"}, {"y", "0"}};
    CHECK_NOTHROW(parse_morse(doc, g));

    json bad = doc;
    bad["values"].erase("y");
    CHECK_THROWS_AS(parse_morse(bad, g), std::invalid_argument);

    bad = doc;
    bad["values"]["z"] = "2";
    CHECK_THROWS_AS(parse_morse(bad, g), std::invalid_argument);

    bad = doc;
    bad["values"]["x"] = "-1";
    CHECK_THROWS_AS(parse_morse(bad, g), std::invalid_argument);

    bad = doc;
    bad["values"]["x"] = 1.5;  // binary floats are rejected, rationals travel as text
    CHECK_THROWS_AS(parse_morse(bad, g), std::invalid_argument);

    bad = doc;
    bad["format"] = "digraph/1";
    CHECK_THROWS_AS(parse_morse(bad, g), std::invalid_argument);
}

TEST_CASE("file loading reports bad paths and bad JSON") {
    CHECK_THROWS_AS(load_digraph("/nonexistent/nope.digraph.json"), std::invalid_argument);
    const std::string path = "io_test_garbage.json";
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(load_digraph(path), std::invalid_argument);
    std::remove(path.c_str());
}

TEST_CASE("file round-trip through the document forms") {
    Digraph g = gen_instance(InstanceKind::square, {}, 0);
    const std::string path = "io_test_square.digraph.json";
    {
        std::ofstream out(path);
        out << digraph_to_document(g).dump(2) << "\n";
    }
    Digraph back = load_digraph(path);
    CHECK(back.edges() == g.edges());
    std::remove(path.c_str());
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/2") == Rational(3) / 2);
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-4/6") == Rational(-2) / 3);
    CHECK(rational_to_string(Rational(-2) / 3) == "-2/3");
    CHECK(rational_to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("three halves"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("digest is stable and content sensitive") {
    const std::string a = digest("digraph/1");
    CHECK(a == digest("digraph/1"));
    CHECK(a.size() == 16);
    CHECK(a != digest("digraph/2"));
    CHECK(digest("") == "cbf29ce484222325");  // FNV-1a offset basis
}
