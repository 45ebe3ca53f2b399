#include <doctest.h>

#include <filesystem>

#include <entropygraph/errors.hpp>
#include <entropygraph/io.hpp>

using namespace entropygraph;

TEST_CASE("degree files") {
    CHECK(io::parse_degrees("# four\n2\n2\n\n2\n2\n") == std::vector<int>{2, 2, 2, 2});
    CHECK(io::parse_degrees("3, 1,2\n") == std::vector<int>{3, 1, 2});
    CHECK_THROWS_AS(io::parse_degrees("2\n-1\n"), ValidationError);
    CHECK_THROWS_AS(io::parse_degrees("2\nx\n"), ValidationError);
    CHECK_THROWS_AS(io::parse_degrees("# nothing\n"), ValidationError);
}

TEST_CASE("edge lists") {
    auto f = io::parse_edge_list("# square\n1 2\n2 3\n3 4\n4 1\n");
    CHECK(f.graph.vertex_count() == 4);
    CHECK(f.graph.edge_count() == 4);
    CHECK_FALSE(f.bipartite);

    auto iso = io::parse_edge_list("#vertices 5\n1 2\n");
    CHECK(iso.graph.vertex_count() == 5);
    CHECK(io::parse_edge_list(io::format_edge_list(iso.graph)).graph == iso.graph);

    auto b = io::parse_edge_list("#bipartite 2 2\n1 3\n2 4\n");
    REQUIRE(b.bipartite);
    CHECK(b.bipartite->first == 2);
    CHECK(io::format_edge_list(b.graph, b.bipartite) == "#bipartite 2 2\n1 3\n2 4\n");
    CHECK_THROWS_AS(io::parse_edge_list("#bipartite 2 2\n1 2\n"), ValidationError);
    CHECK_THROWS_AS(io::parse_edge_list("#vertices 2\n1 3\n"), ValidationError);
    CHECK_THROWS_AS(io::parse_edge_list("0 1\n"), ValidationError);
    CHECK_THROWS_AS(io::parse_edge_list("1 1\n"), ValidationError);
}

TEST_CASE("weighted bipartite files") {
    auto w = io::parse_weighted_bipartite("#bipartite 2 2\n1 3 0.5\n2 4 1\n");
    CHECK(w.vertex_count() == 4);
    CHECK(w.weight(0, 2) == 0.5);
    CHECK(w.weight(1, 3) == 1.0);
    CHECK(w.weight(0, 3) == 0.0);
    CHECK_THROWS_AS(io::parse_weighted_bipartite("1 3 0.5\n"), ValidationError);
    CHECK_THROWS_AS(io::parse_weighted_bipartite("#bipartite 2 2\n1 3 1.5\n"), WeightOutOfRange);
    CHECK_THROWS_AS(io::parse_weighted_bipartite("#bipartite 2 2\n1 2 0.5\n"), ValidationError);
}

TEST_CASE("number formatting and hashing") {
    CHECK(io::format_double(0.1) == "0.10000000000000001");
    CHECK(io::format_double(2.0) == "2");
    CHECK(io::format_double(1.4142135623730951) == "1.4142135623730951");
    CHECK(io::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");

    auto dir = std::filesystem::temp_directory_path() / "entropygraph_io_test";
    io::write_file(dir / "x" / "a.txt", "hello\n");
    CHECK(io::read_file(dir / "x" / "a.txt") == "hello\n");
    std::filesystem::remove_all(dir);
    CHECK_THROWS_AS(io::read_file(dir / "missing"), ValidationError);
}
